#pragma once

#include <cmath>
#include <string_view>

#include "pearsonbf/specfun.hpp"

// Domain types shared by every module, plus the Bayes-factor orientation
// algebra (reciprocals, posterior model probabilities, model choice).
// Bayes factors are stored in natural-log space throughout; linear-scale
// values only materialize at the reporting boundary.
namespace pbf {

enum class StatKind { FStat, TStat };

// A reported test statistic: F(df1, df2) = value, or t(df2) = value.
// Degrees of freedom are accepted as positive reals (Welch-corrected df from
// published papers are fractional).
struct SummaryStat {
  StatKind kind;
  double value;  // F >= 0, or t unrestricted
  double df1;    // between-treatments df x; fixed to 1 for TStat
  double df2;    // residual df y, or nu for TStat

  static SummaryStat f_stat(double f, double df1, double df2);
  static SummaryStat t_stat(double t, double nu);

  // View as an F statistic (t maps through F = t^2 with df1 = 1).
  double as_f() const { return kind == StatKind::TStat ? value * value : value; }
  double f_df1() const { return kind == StatKind::TStat ? 1.0 : df1; }
};

// A balanced one-way ANOVA decomposition. Accepts published (rounded) tables:
// |sst - (ssa+ssr)| <= 1e-9 relative is tolerated and ssr is renormalized to
// sst - ssa.
struct AnovaTable {
  double ssa;  // between-treatments sum of squares
  double ssr;  // residual sum of squares
  double sst;  // total sum of squares
  int n;       // total observations
  int p;       // treatment groups (>= 2)
  int r;       // replicates per group; n = p*r

  AnovaTable(double ssa, double ssr, double sst, int n, int p);
  static AnovaTable from_parts(double ssa, double ssr, int n, int p);

  int df_between() const { return p - 1; }
  int df_within() const { return n - p; }
  // (ssa/x)/(ssr/y); +infinity when ssr == 0 (perfect separation)
  double f_statistic() const;
  SummaryStat as_fstat() const;  // requires ssr > 0
};

// Pearson Type VI prior on the variance ratio tau, under the Wang-Sun
// restriction kappa = r, beta = (n-p)/2 - alpha - 2, leaving the single
// hyperparameter alpha in [-1/2, 0].
struct PearsonPrior {
  double alpha;
  double beta;
  double kappa;

  PearsonPrior(double alpha, double beta, double kappa);
  static PearsonPrior wang_sun(double alpha, int n, int p, int r);
  static PearsonPrior wang_sun(double alpha, const AnovaTable& t) {
    return wang_sun(alpha, t.n, t.p, t.r);
  }
  // location of the density maximum (0 when the density is monotone)
  double mode() const { return beta <= 0.0 ? 0.0 : beta / (kappa * (alpha + 2.0)); }
};

enum class Method { PBF, WS, BIC, Gonen, Zellner, GDSQuadrature };
std::string_view method_name(Method m);

// A Bayes factor on the log scale, tagged with the producing method.
struct Evidence {
  double log_bf10;
  Method method;

  double bf10() const { return std::exp(log_bf10); }
  double bf01() const { return std::exp(-log_bf10); }
};

// BF01 view of the same evidence: log is negated, method preserved.
inline Evidence reciprocal(const Evidence& e) { return {-e.log_bf10, e.method}; }

// P(H0 | data) = BF01*pi0 / (BF01*pi0 + (1-pi0)), computed in log space.
// Requires 0 < prior_h0 < 1.
Probability posterior_prob_h0(const Evidence& e, double prior_h0);

enum class Hypothesis { H0, H1 };

// H0 iff log BF10 < 0; exact ties (BF = 1, a measure-zero event) resolve to H1.
inline Hypothesis choose_model(const Evidence& e) {
  return e.log_bf10 < 0.0 ? Hypothesis::H0 : Hypothesis::H1;
}

}  // namespace pbf
