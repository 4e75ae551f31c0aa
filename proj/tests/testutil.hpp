#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

// Brute-force reference routines used as oracles by the unit tests.
// Deliberately independent of the library under test: a different quadrature
// family (tanh-sinh trapezoid) and std::lgamma for normalization, so that an
// implementation bug cannot cancel out of both sides of a comparison.
namespace testutil {

// Tanh-sinh (double-exponential) quadrature of f over [a, b]: a composite
// trapezoid rule in the transformed variable t, x = mid + half*tanh((pi/2)sinh t).
// Handles integrable endpoint singularities; accuracy is limited by double
// precision long before h = 4/600 matters for smooth integrands.
inline double tanh_sinh(const std::function<double(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const double tmax = 4.0;
  const int n = 600;
  const double h = tmax / n;
  double sum = 0.0;
  for (int k = -n; k <= n; ++k) {
    const double t = k * h;
    const double u = 1.5707963267948966 * std::sinh(t);
    const double s = std::tanh(u);
    const double c = std::cosh(u);
    const double w = 1.5707963267948966 * std::cosh(t) / (c * c);
    if (w < 1e-280) continue;  // node indistinguishable from the endpoint
    const double x = mid + half * s;
    if (x <= a || x >= b) continue;
    sum += w * f(x);
  }
  return sum * half * h;
}

// Regularized incomplete beta I_x(a,b) by direct quadrature of the defining
// integral, normalized with std::lgamma (not the library's log_beta).
inline double inc_beta_quadrature(double x, double a, double b) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  auto integrand = [&](double t) {
    return std::pow(t, a - 1.0) * std::pow(1.0 - t, b - 1.0);
  };
  const double raw = tanh_sinh(integrand, 0.0, x);
  const double log_b = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  return raw * std::exp(-log_b);
}

// Student t density with nu degrees of freedom, normalized via std::lgamma.
inline double t_density(double x, double nu) {
  const double log_c = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                       0.5 * std::log(nu * 3.141592653589793);
  return std::exp(log_c - 0.5 * (nu + 1.0) * std::log1p(x * x / nu));
}

// F density with (d1, d2) degrees of freedom.
inline double f_density(double x, double d1, double d2) {
  if (x <= 0.0) return 0.0;
  const double log_b = std::lgamma(0.5 * d1) + std::lgamma(0.5 * d2) -
                       std::lgamma(0.5 * (d1 + d2));
  const double log_pdf = 0.5 * d1 * std::log(d1 / d2) +
                         (0.5 * d1 - 1.0) * std::log(x) -
                         0.5 * (d1 + d2) * std::log1p(d1 * x / d2) - log_b;
  return std::exp(log_pdf);
}

// Deterministic uniforms for property tests: raw mt19937_64 bits scaled to
// [0,1), independent of the (implementation-defined) std distributions.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : state_(seed) {}
  double next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }
  double range(double lo, double hi) { return lo + (hi - lo) * next(); }
  int integer(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() * (hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace testutil
