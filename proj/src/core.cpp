#include "pearsonbf/core.hpp"

#include <limits>
#include <string>

namespace pbf {

namespace {

void require_finite_df(double df, const char* what) {
  if (!(df > 0.0) || !std::isfinite(df))
    throw std::domain_error(std::string(what) + " must be a positive real, got " +
                            std::to_string(df));
}

}  // namespace

SummaryStat SummaryStat::f_stat(double f, double df1, double df2) {
  if (!(f >= 0.0) || !std::isfinite(f))
    throw std::domain_error("F statistic must be nonnegative, got " +
                            std::to_string(f));
  require_finite_df(df1, "df1");
  require_finite_df(df2, "df2");
  if (df1 < 1.0)
    throw std::domain_error("df1 must be >= 1 for an F statistic, got " +
                            std::to_string(df1));
  return {StatKind::FStat, f, df1, df2};
}

SummaryStat SummaryStat::t_stat(double t, double nu) {
  if (!std::isfinite(t))
    throw std::domain_error("t statistic must be finite");
  require_finite_df(nu, "nu");
  return {StatKind::TStat, t, 1.0, nu};
}

AnovaTable::AnovaTable(double ssa_, double ssr_, double sst_, int n_, int p_)
    : ssa(ssa_), ssr(ssr_), sst(sst_), n(n_), p(p_), r(0) {
  if (p < 2) throw std::domain_error("AnovaTable: need at least 2 groups");
  if (n <= p) throw std::domain_error("AnovaTable: need n > p observations");
  if (n % p != 0)
    throw std::domain_error("AnovaTable: unbalanced design (n not divisible by p)");
  r = n / p;
  if (!(ssa >= 0.0) || !(ssr >= 0.0) || !(sst > 0.0))
    throw std::domain_error("AnovaTable: sums of squares must be nonnegative with sst > 0");
  if (std::fabs(sst - (ssa + ssr)) > 1e-9 * sst)
    throw std::domain_error("AnovaTable: sst != ssa + ssr beyond 1e-9 relative tolerance");
  ssr = sst - ssa;  // renormalize so the identity holds exactly
  if (ssr < 0.0) ssr = 0.0;
}

AnovaTable AnovaTable::from_parts(double ssa, double ssr, int n, int p) {
  return AnovaTable(ssa, ssr, ssa + ssr, n, p);
}

double AnovaTable::f_statistic() const {
  const double msa = ssa / df_between();
  const double msr = ssr / df_within();
  if (msr == 0.0) return std::numeric_limits<double>::infinity();
  return msa / msr;
}

SummaryStat AnovaTable::as_fstat() const {
  if (!(ssr > 0.0))
    throw std::domain_error("AnovaTable: F undefined at ssr = 0 (perfect fit)");
  return SummaryStat::f_stat(f_statistic(), df_between(), df_within());
}

PearsonPrior::PearsonPrior(double alpha_, double beta_, double kappa_)
    : alpha(alpha_), beta(beta_), kappa(kappa_) {
  if (!(alpha >= -0.5 && alpha <= 0.0))
    throw std::domain_error("PearsonPrior: alpha outside [-1/2, 0], got " +
                            std::to_string(alpha));
  if (!(beta > -1.0))
    throw std::domain_error("PearsonPrior: beta must exceed -1, got " +
                            std::to_string(beta));
  if (!(kappa > 0.0))
    throw std::domain_error("PearsonPrior: kappa must be positive");
}

PearsonPrior PearsonPrior::wang_sun(double alpha, int n, int p, int r) {
  if (p < 2 || r < 1 || n != p * r)
    throw std::domain_error("PearsonPrior: need a balanced design with n = p*r");
  const double beta = 0.5 * (n - p) - alpha - 2.0;
  if (!(beta > -1.0))
    throw std::domain_error(
        "PearsonPrior: prior ill-defined, requires n - p > 2 + 2*alpha");
  return PearsonPrior(alpha, beta, static_cast<double>(r));
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::PBF: return "PBF";
    case Method::WS: return "WS";
    case Method::BIC: return "BIC";
    case Method::Gonen: return "Gonen";
    case Method::Zellner: return "Zellner";
    case Method::GDSQuadrature: return "GDSQuadrature";
  }
  return "unknown";
}

Probability posterior_prob_h0(const Evidence& e, double prior_h0) {
  if (!(prior_h0 > 0.0 && prior_h0 < 1.0))
    throw std::domain_error("posterior_prob_h0: prior must lie strictly in (0,1)");
  // p(H0|D) = 1 / (1 + BF10 * pi1/pi0); the logistic form never overflows
  const double z = e.log_bf10 + std::log((1.0 - prior_h0) / prior_h0);
  double post;
  if (z >= 0.0) {
    post = std::exp(-z) / (1.0 + std::exp(-z));
  } else {
    post = 1.0 / (1.0 + std::exp(z));
  }
  return Probability(post);
}

}  // namespace pbf
