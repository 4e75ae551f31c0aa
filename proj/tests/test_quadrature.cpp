#include "pearsonbf/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pearsonbf/pbf.hpp"
#include "testutil.hpp"

using namespace pbf;

TEST_SUITE("quadrature") {

TEST_CASE("known semi-infinite integrals") {
  CHECK(integrate_semi_infinite([](double t) { return std::exp(-t); }, 1e-10) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(integrate_semi_infinite([](double t) { return t * std::exp(-t); },
                                1e-10) == doctest::Approx(1.0).epsilon(1e-10));
  // Gamma(5) = 24
  CHECK(integrate_semi_infinite(
            [](double t) { return t * t * t * t * std::exp(-t); }, 1e-10) ==
        doctest::Approx(24.0).epsilon(1e-9));
  // half Gaussian
  CHECK(integrate_semi_infinite(
            [](double t) { return std::exp(-0.5 * t * t); }, 1e-10) ==
        doctest::Approx(std::sqrt(std::numbers::pi / 2.0)).epsilon(1e-9));
  // polynomial tail, exactly the substitution's stress case
  CHECK(integrate_semi_infinite(
            [](double t) { return 1.0 / ((1.0 + t) * (1.0 + t)); }, 1e-10) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("pearson prior density is normalized") {
  const PearsonPrior prior = PearsonPrior::wang_sun(0.0, 18, 3, 6);
  const double logI = integrate_semi_infinite_log(
      [&prior](double t) { return pearson_type6_log_pdf(t, prior); }, 1e-9);
  CHECK(std::exp(logI) == doctest::Approx(1.0).epsilon(1e-8));
  // at alpha=-1/2 the tau^(-3/2) tail puts ~1e-7 of mass beyond the 1e-14
  // edge truncation, so only a looser tolerance is attainable for the bare
  // density (the Bayes factor integrands decay much faster and are unaffected)
  const PearsonPrior prior_half = PearsonPrior::wang_sun(-0.5, 18, 3, 6);
  const double logI2 = integrate_semi_infinite_log(
      [&prior_half](double t) { return pearson_type6_log_pdf(t, prior_half); },
      1e-9);
  CHECK(std::exp(logI2) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("log and plain variants agree") {
  const double plain =
      integrate_semi_infinite([](double t) { return std::exp(-2.0 * t); }, 1e-9);
  const double logged = integrate_semi_infinite_log(
      [](double t) { return -2.0 * t; }, 1e-9);
  CHECK(plain == doctest::Approx(std::exp(logged)).epsilon(1e-12));
  CHECK(plain == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("rel_tol domain and misuse errors") {
  auto f = [](double t) { return std::exp(-t); };
  CHECK_THROWS_AS(integrate_semi_infinite(f, 1e-14), std::domain_error);
  CHECK_THROWS_AS(integrate_semi_infinite(f, 0.1), std::domain_error);
  CHECK_THROWS_AS(integrate_semi_infinite(f, 0.0), std::domain_error);
  CHECK_THROWS_AS(
      integrate_semi_infinite([](double t) { return t - 1.0; }, 1e-8),
      std::domain_error);  // signed integrand
}

TEST_CASE("budget exhaustion is reported, not papered over") {
  auto f = [](double t) { return std::exp(-t); };
  CHECK_THROWS_AS(integrate_semi_infinite(f, 1e-8, 100), std::runtime_error);
  // a spike far narrower than the scan grid, centered off-grid, defeats the
  // max shift and must be reported rather than silently mis-integrated
  auto spike = [](double t) {
    const double d = (t - std::numbers::pi) / 1e-9;
    return -d * d;
  };
  CHECK_THROWS_AS(integrate_semi_infinite_log(spike, 1e-8),
                  std::runtime_error);
}

TEST_CASE("identically zero integrand") {
  CHECK(integrate_semi_infinite([](double) { return 0.0; }, 1e-8) == 0.0);
}

TEST_CASE("gds_bf10 reproduces the worked example") {
  const AnovaTable tbl(84, 88, 172, 18, 3);
  const Evidence flat = gds_bf10(tbl, PearsonPrior::wang_sun(0.0, tbl));
  CHECK(flat.method == Method::GDSQuadrature);
  CHECK(flat.bf10() == doctest::Approx(10.393).epsilon(0.01 / 10.393));
  const Evidence half = gds_bf10(tbl, PearsonPrior::wang_sun(-0.5, tbl));
  CHECK(half.bf10() == doctest::Approx(7.265).epsilon(0.01 / 7.265));
}

TEST_CASE("gds_bf10 matches ws_from_ss on a null-effect table") {
  const AnovaTable null_tbl(0.0, 172, 172, 18, 3);
  for (double alpha : {0.0, -0.5}) {
    const Evidence oracle =
        gds_bf10(null_tbl, PearsonPrior::wang_sun(alpha, null_tbl), 1e-8);
    const Evidence closed = ws_from_ss(null_tbl, alpha);
    CHECK(oracle.log_bf10 ==
          doctest::Approx(closed.log_bf10).epsilon(1e-6));
  }
}

TEST_CASE("oracle equivalence across random tables") {
  // the repo's central theorem check: quadrature vs the closed form
  testutil::Uniform rng(0x09AC1E);
  const double alphas[3] = {-0.5, -0.25, 0.0};
  for (int i = 0; i < 100; ++i) {
    const int p = rng.integer(2, 5);
    const int r = rng.integer(3, 30);
    const double ssa = rng.range(0.05, 40.0);
    const double ssr = rng.range(0.05, 40.0);
    const AnovaTable tbl = AnovaTable::from_parts(ssa, ssr, p * r, p);
    const double alpha = alphas[rng.integer(0, 2)];
    const Evidence oracle =
        gds_bf10(tbl, PearsonPrior::wang_sun(alpha, tbl), 1e-8);
    const Evidence closed = ws_from_ss(tbl, alpha);
    CHECK(std::fabs(oracle.log_bf10 - closed.log_bf10) <= 1e-6);
  }
}

TEST_CASE("estimate is stable under a doubled panel budget") {
  const AnovaTable tbl(84, 88, 172, 18, 3);
  const PearsonPrior prior = PearsonPrior::wang_sun(-0.25, tbl);
  const double rel_tol = 1e-8;
  const double ratio = tbl.ssr / tbl.sst;
  auto log_f = [&](double tau) {
    const double q = tau * tbl.r;
    return 0.5 * (1.0 - tbl.p) * std::log1p(q) +
           0.5 * (1.0 - tbl.n) * (std::log1p(q * ratio) - std::log1p(q)) +
           pearson_type6_log_pdf(tau, prior);
  };
  const double base = integrate_semi_infinite_log(log_f, rel_tol, 10000);
  const double doubled = integrate_semi_infinite_log(log_f, rel_tol, 20000);
  CHECK(std::fabs(base - doubled) <= rel_tol);
}

TEST_CASE("gds_bf10 rejects mismatched priors and degenerate tables") {
  const AnovaTable tbl(84, 88, 172, 18, 3);
  // kappa from the wrong replicate count
  CHECK_THROWS_AS(gds_bf10(tbl, PearsonPrior(0.0, 5.5, 7.0)),
                  std::domain_error);
  // beta off the Wang-Sun restriction
  CHECK_THROWS_AS(gds_bf10(tbl, PearsonPrior(0.0, 4.0, 6.0)),
                  std::domain_error);
  const AnovaTable perfect = AnovaTable::from_parts(172, 0.0, 18, 3);
  CHECK_THROWS_AS(gds_bf10(perfect, PearsonPrior::wang_sun(0.0, perfect)),
                  std::domain_error);
}

}  // TEST_SUITE
