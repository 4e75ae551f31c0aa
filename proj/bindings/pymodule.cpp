// Python bindings for the main operations: the Pearson Bayes factor from
// summary statistics or sums of squares, the classical comparators, and the
// statline report pipeline (returned as a JSON string).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <vector>

#include "pearsonbf/batch.hpp"
#include "pearsonbf/classic.hpp"
#include "pearsonbf/core.hpp"
#include "pearsonbf/pbf.hpp"
#include "pearsonbf/quadrature.hpp"
#include "pearsonbf/report.hpp"
#include "pearsonbf/specfun.hpp"
#include "pearsonbf/statline.hpp"

namespace py = pybind11;
using namespace pbf;

namespace {

EvalSettings make_settings(std::optional<int> n,
                           std::optional<std::vector<double>> alphas,
                           double prior_h0) {
  EvalSettings settings;
  settings.n = n;
  if (alphas) settings.alphas = *alphas;
  settings.prior_h0 = prior_h0;
  return settings;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact Bayes factors for ANOVA and t summary statistics under the "
      "Pearson type VI prior, with BIC, Gonen, Zellner and Sellke "
      "comparators.";

  py::class_<Evidence>(m, "Evidence")
      .def_readonly("log_bf10", &Evidence::log_bf10)
      .def_property_readonly("bf10", &Evidence::bf10)
      .def_property_readonly("bf01", &Evidence::bf01)
      .def_property_readonly(
          "method",
          [](const Evidence& e) { return std::string(method_name(e.method)); })
      .def("__repr__", [](const Evidence& e) {
        std::ostringstream out;
        out << "Evidence(method='" << method_name(e.method)
            << "', log_bf10=" << e.log_bf10 << ")";
        return out.str();
      });

  m.def(
      "pbf_anova",
      [](double f, double df1, double df2, double alpha) {
        return pbf_anova(f, df1, df2, alpha);
      },
      py::arg("f"), py::arg("df1"), py::arg("df2"), py::arg("alpha") = 0.0,
      "Pearson Bayes factor BF10 from an F statistic.");

  m.def(
      "pbf_ttest",
      [](double t, double nu, double alpha) { return pbf_ttest(t, nu, alpha); },
      py::arg("t"), py::arg("nu"), py::arg("alpha") = 0.0,
      "Pearson Bayes factor BF10 from a two-sided t statistic.");

  m.def(
      "ws_from_ss",
      [](double ssa, double ssr, int n, int p, double alpha) {
        return ws_from_ss(AnovaTable::from_parts(ssa, ssr, n, p), alpha);
      },
      py::arg("ssa"), py::arg("ssr"), py::arg("n"), py::arg("p"),
      py::arg("alpha") = 0.0,
      "Pearson Bayes factor from balanced one-way sums of squares.");

  m.def(
      "gds_bf10",
      [](double ssa, double ssr, int n, int p, double alpha, double rel_tol) {
        const AnovaTable table = AnovaTable::from_parts(ssa, ssr, n, p);
        return gds_bf10(table, PearsonPrior::wang_sun(alpha, table), rel_tol);
      },
      py::arg("ssa"), py::arg("ssr"), py::arg("n"), py::arg("p"),
      py::arg("alpha") = 0.0, py::arg("rel_tol") = 1e-8,
      "Quadrature-based Bayes factor; agrees with ws_from_ss.");

  m.def(
      "bic_bf10",
      [](const std::string& kind, double value, double df1, double df2,
         int n) {
        const SummaryStat stat = kind == "t"
                                     ? SummaryStat::t_stat(value, df2)
                                     : SummaryStat::f_stat(value, df1, df2);
        return bic_bf_from_summary(stat, n);
      },
      py::arg("kind"), py::arg("value"), py::arg("df1"), py::arg("df2"),
      py::arg("n"), "BIC-approximated Bayes factor from a summary statistic.");

  m.def("gonen_bf10",
        [](double t, int n1, int n2, double sigma2_a) {
          return gonen_bf10(t, n1, n2, sigma2_a);
        },
        py::arg("t"), py::arg("n1"), py::arg("n2"), py::arg("sigma2_a"),
        "Two-sample Bayes factor under a normal prior on the effect.");

  m.def("zellner_bf10",
        [](double r2, int n, int k, double g) {
          return zellner_bf10(r2, n, k, g);
        },
        py::arg("r2"), py::arg("n"), py::arg("k"), py::arg("g"),
        "g-prior regression Bayes factor from the coefficient of "
        "determination.");

  m.def(
      "sellke_bound",
      [](double p) { return sellke_bound(Probability(p)); }, py::arg("p"),
      "Lower bound on BF01 over all priors, -1/(e p log p); clamped at 1.");

  m.def(
      "f_tail_p",
      [](double f, double d1, double d2) {
        return f_tail_p(f, d1, d2).value();
      },
      py::arg("f"), py::arg("df1"), py::arg("df2"),
      "Upper-tail p-value of the F distribution.");

  m.def(
      "t_two_sided_p",
      [](double t, double nu) { return t_two_sided_p(t, nu).value(); },
      py::arg("t"), py::arg("nu"), "Two-sided p-value of the t distribution.");

  m.def(
      "posterior_prob_h0",
      [](const Evidence& e, double prior_h0) {
        return posterior_prob_h0(e, prior_h0).value();
      },
      py::arg("evidence"), py::arg("prior_h0") = 0.5,
      "Posterior probability of the null given the evidence.");

  m.def(
      "parse_statline",
      [](const std::string& text) {
        return render_statline(parse_statline(text).parsed);
      },
      py::arg("text"),
      "Parse a statline such as 'F(2,15)=7.16' and return its canonical "
      "form; raises ValueError on malformed input.");

  m.def(
      "evaluate_json",
      [](const std::string& statline, std::optional<int> n,
         std::optional<std::vector<double>> alphas, double prior_h0) {
        const Report rep =
            evaluate(parse_statline(statline),
                     make_settings(n, std::move(alphas), prior_h0));
        return report_to_json(rep);
      },
      py::arg("statline"), py::arg("n") = std::nullopt,
      py::arg("alphas") = std::nullopt, py::arg("prior_h0") = 0.5,
      "Run the full evidence battery on a statline; returns a JSON string.");

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });
}
