#include "pearsonbf/classic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace pbf {

double bic_value(double ssr, double sst, int n, int k) {
  if (!std::isfinite(ssr) || !std::isfinite(sst) || !(ssr > 0.0))
    throw std::domain_error("bic_value: ssr must be positive and finite");
  if (ssr > sst) throw std::domain_error("bic_value: requires ssr <= sst");
  if (n < 1) throw std::domain_error("bic_value: n must be positive");
  if (k < 0) throw std::domain_error("bic_value: k must be nonnegative");
  return n * std::log(ssr / sst) + k * std::log(static_cast<double>(n));
}

Evidence bic_bf01(double bic_h1, double bic_h0) {
  return {0.5 * (bic_h0 - bic_h1), Method::BIC};
}

Evidence bic_bf_from_summary(const SummaryStat& stat, int n) {
  if (n < 2) throw std::domain_error("bic_bf_from_summary: n must be at least 2");
  const double f = stat.as_f();
  const double x = stat.f_df1();
  const double y = stat.df2;
  const double log_bf01 =
      0.5 * (x * std::log(static_cast<double>(n)) - n * std::log1p(x * f / y));
  return {-log_bf01, Method::BIC};
}

std::optional<std::string> df_n_warning(const SummaryStat& stat, int n) {
  if (stat.kind != StatKind::FStat) return std::nullopt;
  const double implied = stat.df1 + stat.df2 + 1.0;
  if (std::fabs(implied - n) <= 1e-9) return std::nullopt;
  std::ostringstream os;
  os << "BIC from summary: df1 + df2 + 1 = " << implied << " but n = " << n
     << "; using n as given (published df may reflect exclusions)";
  return os.str();
}

Evidence gonen_bf10(double t, int n1, int n2, double sigma2_a) {
  if (n1 < 2 || n2 < 2)
    throw std::domain_error("gonen_bf10: group sizes must be at least 2");
  if (!std::isfinite(sigma2_a) || !(sigma2_a > 0.0))
    throw std::domain_error("gonen_bf10: sigma2_a must be positive");
  if (!std::isfinite(t)) throw std::domain_error("gonen_bf10: t must be finite");
  const double nu = n1 + n2 - 2.0;
  const double n_delta = 1.0 / (1.0 / n1 + 1.0 / n2);
  const double w = n_delta * sigma2_a;
  const double log_ratio =
      std::log1p(t * t / nu) - std::log1p(t * t / (nu * (1.0 + w)));
  return {0.5 * (nu + 1.0) * log_ratio - 0.5 * std::log1p(w), Method::Gonen};
}

Evidence zellner_bf10(double r2, int n, int k, double g) {
  if (k < 1) throw std::domain_error("zellner_bf10: k must be positive");
  if (n <= k + 1) throw std::domain_error("zellner_bf10: requires n > k + 1");
  if (!(r2 >= 0.0) || r2 >= 1.0)
    throw std::domain_error("zellner_bf10: r2 must lie in [0, 1)");
  if (!std::isfinite(g) || !(g > 0.0))
    throw std::domain_error("zellner_bf10: g must be positive");
  return {0.5 * (n - k - 1.0) * std::log1p(g) -
              0.5 * (n - 1.0) * std::log1p(g * (1.0 - r2)),
          Method::Zellner};
}

double sellke_bound(Probability p, bool* clamped) {
  const double pv = p.value();
  if (pv == 0.0 || pv == 1.0)
    throw std::domain_error("sellke_bound: p must lie strictly inside (0, 1)");
  if (clamped) *clamped = false;
  const double inv_e = 1.0 / std::numbers::e;
  if (pv >= inv_e) {
    // -1/(e p ln p) bottoms out at 1 when p = 1/e and is meaningless beyond.
    if (clamped && pv > inv_e) *clamped = true;
    return 1.0;
  }
  return -1.0 / (std::numbers::e * pv * std::log(pv));
}

}  // namespace pbf
