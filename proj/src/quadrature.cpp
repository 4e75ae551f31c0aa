#include "pearsonbf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pearsonbf/pbf.hpp"

namespace pbf {
namespace {

constexpr double kEdge = 1e-14;  // truncation inside (0,1) after tau = u/(1-u)
constexpr int kInitialPanels = 512;
constexpr int kMaxDepth = 60;  // widths below ~1e-18: splitting is roundoff

struct Budget {
  int left;
};

[[noreturn]] void budget_exhausted() {
  throw std::runtime_error(
      "integrate_semi_infinite: panel budget exhausted before convergence");
}

// One adaptive Simpson panel with Richardson extrapolation. Non-finite values
// (an overflowing spike the max-shift scan missed, or a NaN integrand) force
// subdivision and, at the depth cap, an honest non-convergence error.
double simpson_adaptive(const std::function<double(double)>& h, double a,
                        double b, double ha, double hm, double hb,
                        double whole, double tol, int depth, Budget& budget) {
  if (--budget.left < 0) budget_exhausted();
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double hlm = h(lm), hrm = h(rm);
  const double left = (m - a) / 6.0 * (ha + 4.0 * hlm + hm);
  const double right = (b - m) / 6.0 * (hm + 4.0 * hrm + hb);
  const double delta = left + right - whole;
  const bool settled = std::isfinite(delta) && std::fabs(delta) <= 15.0 * tol;
  if (depth >= kMaxDepth) {
    if (!std::isfinite(delta))
      throw std::runtime_error(
          "integrate_semi_infinite: integrand not resolvable (non-finite "
          "values at the refinement limit)");
    return left + right + delta / 15.0;
  }
  if (settled) return left + right + delta / 15.0;
  return simpson_adaptive(h, a, m, ha, hlm, hm, left, 0.5 * tol, depth + 1,
                          budget) +
         simpson_adaptive(h, m, b, hm, hrm, hb, right, 0.5 * tol, depth + 1,
                          budget);
}

}  // namespace

double integrate_semi_infinite_log(const std::function<double(double)>& log_f,
                                   double rel_tol, int max_panels) {
  if (!(rel_tol > 1e-13) || !(rel_tol < 1e-2))
    throw std::domain_error(
        "integrate_semi_infinite: rel_tol outside (1e-13, 1e-2)");
  if (max_panels < kInitialPanels) budget_exhausted();

  const double lo = kEdge, hi = 1.0 - kEdge;
  // transformed log integrand over u in (0,1): ln f(u/(1-u)) + 2 ln(1/(1-u))
  auto log_g = [&log_f](double u) {
    return log_f(u / (1.0 - u)) - 2.0 * std::log1p(-u);
  };

  // scan panel endpoints and midpoints for the max shift and a first estimate
  const int kScan = 2 * kInitialPanels + 1;
  std::vector<double> lg(kScan);
  double shift = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kScan; ++i) {
    const double u = lo + (hi - lo) * i / (kScan - 1.0);
    lg[i] = log_g(u);
    if (lg[i] > shift) shift = lg[i];
  }
  if (shift == -std::numeric_limits<double>::infinity())
    return shift;  // identically zero integrand

  auto h = [&log_g, shift](double u) { return std::exp(log_g(u) - shift); };

  double estimate = 0.0;
  const double width = (hi - lo) / kInitialPanels;
  for (int i = 0; i < kInitialPanels; ++i) {
    const double h0 = std::exp(lg[2 * i] - shift);
    const double h1 = std::exp(lg[2 * i + 1] - shift);
    const double h2 = std::exp(lg[2 * i + 2] - shift);
    estimate += width / 6.0 * (h0 + 4.0 * h1 + h2);
  }
  const double panel_tol = rel_tol * estimate / kInitialPanels;

  Budget budget{max_panels};
  double total = 0.0;
  for (int i = 0; i < kInitialPanels; ++i) {
    const double a = lo + width * i;
    const double b = (i + 1 == kInitialPanels) ? hi : a + width;
    const double h0 = std::exp(lg[2 * i] - shift);
    const double h1 = std::exp(lg[2 * i + 1] - shift);
    const double h2 = std::exp(lg[2 * i + 2] - shift);
    const double whole = (b - a) / 6.0 * (h0 + 4.0 * h1 + h2);
    total += simpson_adaptive(h, a, b, h0, h1, h2, whole, panel_tol, 0, budget);
  }
  return shift + std::log(total);
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               double rel_tol, int max_panels) {
  auto log_f = [&f](double tau) {
    const double v = f(tau);
    if (v < 0.0)
      throw std::domain_error(
          "integrate_semi_infinite: integrand must be nonnegative");
    return std::log(v);
  };
  return std::exp(integrate_semi_infinite_log(log_f, rel_tol, max_panels));
}

Evidence gds_bf10(const AnovaTable& table, const PearsonPrior& prior,
                  double rel_tol) {
  if (!(table.ssr > 0.0))
    throw std::domain_error("gds_bf10: requires ssr > 0");
  const double want_beta = 0.5 * (table.n - table.p) - prior.alpha - 2.0;
  if (std::fabs(prior.kappa - table.r) > 1e-12 * table.r ||
      std::fabs(prior.beta - want_beta) > 1e-9)
    throw std::domain_error(
        "gds_bf10: prior does not carry the Wang-Sun restriction for this "
        "table");
  const double ratio = table.ssr / table.sst;
  const double r = table.r;
  const double p = table.p;
  const double n = table.n;
  auto log_f = [&](double tau) {
    const double q = tau * r;
    return 0.5 * (1.0 - p) * std::log1p(q) +
           0.5 * (1.0 - n) * (std::log1p(q * ratio) - std::log1p(q)) +
           pearson_type6_log_pdf(tau, prior);
  };
  return {integrate_semi_infinite_log(log_f, rel_tol), Method::GDSQuadrature};
}

}  // namespace pbf
