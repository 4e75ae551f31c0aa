#pragma once

#include <functional>

#include "pearsonbf/core.hpp"

// Independent validation path: brute-force quadrature of the
// Garcia-Donato-Sun integral form of the Bayes factor, used to confirm the
// closed-form route numerically.
namespace pbf {

// Integrates a nonnegative f over (0, infinity) to a relative tolerance in
// (1e-13, 1e-2). The domain is mapped to (0,1) via tau = u/(1-u) (polynomial
// tails make truncation error hard to bound), the integrand is evaluated in
// log space and exponentiated against a running max shift, and the panels are
// refined by adaptive Simpson subdivision. Throws std::runtime_error when the
// subdivision budget (default 10,000 panels; at least 512 are always spent on
// the initial grid) is exhausted before convergence.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               double rel_tol, int max_panels = 10000);

// Same contract, but takes ln f and returns ln of the integral; this is the
// overflow-safe route for sharply scaled integrands.
double integrate_semi_infinite_log(const std::function<double(double)>& log_f,
                                   double rel_tol, int max_panels = 10000);

// Quadrature oracle for the Bayes factor:
//   BF10 = integral of (1+tau r)^((1-p)/2) (1 - tau r/(1+tau r) SSA/SST)^((1-n)/2) pi(tau)
// over tau in (0, infinity), with pi the Pearson Type VI prior. The prior must
// carry the Wang-Sun restriction for the table's (n, p, r) and the table needs
// ssr > 0. Agrees with ws_from_ss within rel_tol (default 1e-8, three orders
// below the strictest tolerance asserted elsewhere).
Evidence gds_bf10(const AnovaTable& table, const PearsonPrior& prior,
                  double rel_tol = 1e-8);

}  // namespace pbf
