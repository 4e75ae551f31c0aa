#include "pearsonbf/pbf.hpp"

#include <string>

namespace pbf {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= -0.5 && alpha <= 0.0))
    throw std::domain_error("alpha outside the consistency range [-1/2, 0]: " +
                            std::to_string(alpha));
}

void check_prior_df(double df2, double alpha) {
  if (!(df2 > 2.0 + 2.0 * alpha))
    throw std::domain_error(
        "residual df must exceed 2 + 2*alpha (prior ill-defined): df2 = " +
        std::to_string(df2));
}

}  // namespace

Evidence pbf_anova(double f, double df1, double df2, double alpha) {
  check_alpha(alpha);
  if (!(f >= 0.0) || !std::isfinite(f))
    throw std::domain_error("pbf_anova: F must be nonnegative, got " +
                            std::to_string(f));
  if (!(df1 > 0.0) || !(df2 > 0.0))
    throw std::domain_error("pbf_anova: degrees of freedom must be positive");
  check_prior_df(df2, alpha);
  const double x = df1;
  const double y = df2;
  // (alpha - y/2 + 1) * ln(y/(y+xF)), with the log written through log1p
  const double log_bf = log_gamma(0.5 * x + alpha + 1.0) + log_gamma(0.5 * y) -
                        log_gamma(0.5 * (x + y)) - log_gamma(alpha + 1.0) -
                        (alpha - 0.5 * y + 1.0) * std::log1p(x * f / y);
  return {log_bf, Method::PBF};
}

Evidence pbf_anova(const SummaryStat& stat, double alpha) {
  if (stat.kind != StatKind::FStat)
    throw std::domain_error("pbf_anova expects an F statistic");
  return pbf_anova(stat.value, stat.df1, stat.df2, alpha);
}

Evidence pbf_ttest(double t, double nu, double alpha) {
  check_alpha(alpha);
  if (!std::isfinite(t)) throw std::domain_error("pbf_ttest: t must be finite");
  if (!(nu > 0.0)) throw std::domain_error("pbf_ttest: nu must be positive");
  check_prior_df(nu, alpha);
  const double log_bf = log_gamma(0.5 * nu) + log_gamma(alpha + 1.5) -
                        log_gamma(0.5 * (nu + 1.0)) - log_gamma(alpha + 1.0) +
                        0.5 * (nu - 2.0 * alpha - 2.0) * std::log1p(t * t / nu);
  return {log_bf, Method::PBF};
}

Evidence pbf_ttest(const SummaryStat& stat, double alpha) {
  if (stat.kind != StatKind::TStat)
    throw std::domain_error("pbf_ttest expects a t statistic");
  return pbf_ttest(stat.value, stat.df2, alpha);
}

Evidence ws_from_ss(const AnovaTable& table, double alpha) {
  check_alpha(alpha);
  if (!(table.ssr > 0.0))
    throw std::domain_error(
        "ws_from_ss: ssr = 0 is a perfect fit; evidence diverges toward H1");
  const double n = table.n;
  const double p = table.p;
  check_prior_df(n - p, alpha);
  const double log_bf =
      log_gamma(0.5 * p + alpha + 0.5) + log_gamma(0.5 * (n - p)) -
      log_gamma(0.5 * (n - 1.0)) - log_gamma(alpha + 1.0) +
      (alpha - 0.5 * (n - p - 2.0)) * std::log(table.ssr / table.sst);
  return {log_bf, Method::WS};
}

double pearson_type6_log_pdf(double tau, const PearsonPrior& prior) {
  if (!(tau > 0.0))
    throw std::domain_error("pearson_type6_pdf: tau must be positive, got " +
                            std::to_string(tau));
  const double kt = prior.kappa * tau;
  return std::log(prior.kappa) + prior.beta * std::log(kt) -
         (prior.alpha + prior.beta + 2.0) * std::log1p(kt) -
         log_beta(prior.alpha + 1.0, prior.beta + 1.0);
}

double pearson_type6_pdf(double tau, const PearsonPrior& prior) {
  return std::exp(pearson_type6_log_pdf(tau, prior));
}

}  // namespace pbf
