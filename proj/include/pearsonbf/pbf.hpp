#pragma once

#include "pearsonbf/core.hpp"

// The Pearson Bayes factor: an exact, integral-free BF10 computable from a
// reported F(x,y) or t(nu) statistic plus the prior shape alpha in [-1/2, 0],
// together with its sum-of-squares form and the Pearson Type VI prior density.
namespace pbf {

// BF10 for a one-way ANOVA F statistic:
//   log BF10 = lnG(x/2+a+1) + lnG(y/2) - lnG((x+y)/2) - lnG(a+1)
//              + (a - y/2 + 1) * ln(y/(y+xF))
// Requires F >= 0 and df2 > 2 + 2*alpha (otherwise the implied prior has
// beta <= -1 and is ill-defined).
Evidence pbf_anova(double f, double df1, double df2, double alpha);
Evidence pbf_anova(const SummaryStat& stat, double alpha);

// The two-sample t specialization (F = t^2 with x = 1):
//   log BF10 = lnG(nu/2) + lnG(a+3/2) - lnG((nu+1)/2) - lnG(a+1)
//              + ((nu-2a-2)/2) * ln(1+t^2/nu)
Evidence pbf_ttest(double t, double nu, double alpha);
Evidence pbf_ttest(const SummaryStat& stat, double alpha);

// Same quantity from the sums of squares of a balanced one-way ANOVA:
//   log BF10 = lnG(p/2+a+1/2) + lnG((n-p)/2) - lnG((n-1)/2) - lnG(a+1)
//              + (a - (n-p-2)/2) * ln(SSR/SST)
// Rejects ssr = 0 (perfect fit: evidence diverges toward H1).
Evidence ws_from_ss(const AnovaTable& table, double alpha);

// Pearson Type VI prior density on tau > 0:
//   kappa * (kappa*tau)^beta * (1+kappa*tau)^(-alpha-beta-2) / B(alpha+1, beta+1)
double pearson_type6_log_pdf(double tau, const PearsonPrior& prior);
double pearson_type6_pdf(double tau, const PearsonPrior& prior);

}  // namespace pbf
