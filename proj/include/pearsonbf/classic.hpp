#pragma once

#include <optional>
#include <string>

#include "pearsonbf/core.hpp"
#include "pearsonbf/specfun.hpp"

// The comparison battery: BIC Bayes factors (two routes), the Gonen
// two-sample-t Bayes factor, the Zellner g-prior Bayes factor, and the
// Sellke-Bayarri-Berger p-value bound.
namespace pbf {

// Schwarz criterion against the total sum of squares:
//   BIC = n ln(SSR/SST) + k ln n.
// k = 0 is a null fit with no free parameters. Requires 0 < ssr <= sst.
double bic_value(double ssr, double sst, int n, int k);

// Evidence from a pair of BIC values: log BF01 = (BIC_1 - BIC_0)/2.
Evidence bic_bf01(double bic_h1, double bic_h0);

// Closed-form BIC Bayes factor straight from an F (or t) summary:
//   log BF01 = (x ln n - n ln(1 + xF/y)) / 2,
// the t case entering through F = t^2, x = 1. Requires n >= 2; n is NOT
// forced to equal df1 + df2 + 1 (see df_n_warning).
Evidence bic_bf_from_summary(const SummaryStat& stat, int n);

// Consistency note for bic_bf_from_summary: for an F statistic, flags
// df1 + df2 + 1 != n (published df sometimes reflect exclusions, so this is
// advisory, not an error). Empty for t statistics or consistent tables.
std::optional<std::string> df_n_warning(const SummaryStat& stat, int n);

// Two-sample t Bayes factor under a N(0, sigma2_a) effect prior:
//   log BF10 = ((nu+1)/2) ln[(1+t^2/nu) / (1+t^2/(nu(1+n_d*s)))] - ln(1+n_d*s)/2
// with nu = n1+n2-2 and effective sample size n_d = (1/n1 + 1/n2)^(-1).
// Requires n1, n2 >= 2 and sigma2_a > 0.
Evidence gonen_bf10(double t, int n1, int n2, double sigma2_a);

// Zellner g-prior Bayes factor for a k-regressor fit with coefficient R^2:
//   log BF10 = ((n-k-1)/2) ln(1+g) - ((n-1)/2) ln(1+g(1-r2)).
// Requires n > k+1, 0 <= r2 < 1, g > 0.
Evidence zellner_bf10(double r2, int n, int k, double g);

// Upper bound on BF10 from a p-value alone: -1/(e p ln p) for p < 1/e.
// Above 1/e the bound is vacuous and is reported as 1; *clamped (when
// non-null) records whether that floor was applied. p in {0,1} is a domain
// error.
double sellke_bound(Probability p, bool* clamped = nullptr);

}  // namespace pbf
