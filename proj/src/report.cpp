#include "pearsonbf/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "pearsonbf/classic.hpp"
#include "pearsonbf/pbf.hpp"

namespace pbf {

namespace {

// display rules: 4 decimal places, scientific once fixed notation would show
// nothing, linear BFs capped at 1e15 (the log is the stored truth)
std::string format_fixed(double v) {
  char buf[40];
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v != 0.0 && (std::fabs(v) < 1e-4 || std::fabs(v) >= 1e15))
    std::snprintf(buf, sizeof buf, "%.4e", v);
  else
    std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string format_bf(double log_bf10) {
  const double linear = std::exp(log_bf10);
  if (linear > 1e15) return "> 1e15";
  return format_fixed(linear);
}

}  // namespace

Report evaluate(const Statline& line, const EvalSettings& settings) {
  if (!(settings.prior_h0 > 0.0) || !(settings.prior_h0 < 1.0))
    throw std::domain_error(
        "evaluate: prior_h0 must lie strictly inside (0, 1)");
  Report rep;
  rep.input = line;
  rep.prior_h0 = settings.prior_h0;
  const SummaryStat& stat = line.parsed;

  const Probability p = stat.kind == StatKind::FStat
                            ? f_tail_p(stat.value, stat.df1, stat.df2)
                            : t_two_sided_p(stat.value, stat.df2);
  rep.p_value = p.value();
  // the bound calibrates a p-value as reported: feed it the number the
  // report displays, so recomputing from the printed p lands on the printed
  // bound (0.0066 -> 11.10, not the 11.16 of the unrounded tail area)
  const Probability p_shown{
      std::strtod(format_fixed(rep.p_value).c_str(), nullptr)};
  try {
    bool clamped = false;
    rep.sellke = sellke_bound(p_shown, &clamped);
    if (clamped)
      rep.warnings.push_back(
          "sellke_bound: p >= 1/e, bound clamped at its floor of 1 (vacuous)");
  } catch (const std::domain_error&) {
    if (p_shown.value() == 1.0 && rep.p_value > 0.0) {
      rep.sellke = 1.0;
      rep.warnings.push_back(
          "sellke_bound: p = 1 carries no evidence against H0; the bound is "
          "vacuously 1");
    } else {
      rep.sellke = INFINITY;
      rep.warnings.push_back(
          "sellke_bound: p underflowed to 0; the bound is unbounded");
    }
  }

  const std::vector<double> alphas =
      line.alpha ? std::vector<double>{*line.alpha} : settings.alphas;
  for (double a : alphas) {
    try {
      const Evidence e = stat.kind == StatKind::FStat ? pbf_anova(stat, a)
                                                      : pbf_ttest(stat, a);
      rep.methods.push_back(
          {"PBF", a, e.log_bf10,
           posterior_prob_h0(e, settings.prior_h0).value()});
    } catch (const std::domain_error& ex) {
      rep.warnings.push_back(std::string("PBF(alpha=") + format_shortest(a) +
                             ") dropped: " + ex.what());
    }
  }
  const std::optional<int> n = line.n ? line.n : settings.n;
  rep.input.n = n;  // echo the n actually applied, wherever it came from
  if (n) {
    try {
      const Evidence e = bic_bf_from_summary(stat, *n);
      rep.methods.push_back(
          {"BIC", std::nullopt, e.log_bf10,
           posterior_prob_h0(e, settings.prior_h0).value()});
      if (const auto w = df_n_warning(stat, *n)) rep.warnings.push_back(*w);
    } catch (const std::domain_error& ex) {
      rep.warnings.push_back(std::string("BIC dropped: ") + ex.what());
    }
  }
  return rep;
}

std::string report_to_json(const Report& report) {
  nlohmann::json j;
  const SummaryStat& stat = report.input.parsed;
  nlohmann::json input;
  input["statline"] = render_statline(stat);
  input["kind"] = stat.kind == StatKind::FStat ? "F" : "t";
  input["value"] = stat.value;
  input["df1"] = stat.f_df1();
  input["df2"] = stat.df2;
  input["prior_h0"] = report.prior_h0;
  if (report.input.n) input["n"] = *report.input.n;
  if (report.input.alpha) input["alpha"] = *report.input.alpha;
  if (!report.input.label.empty()) input["label"] = report.input.label;
  j["input"] = input;
  j["p_value"] = report.p_value;
  j["sellke_bound"] = report.sellke;  // non-finite serializes as null
  j["methods"] = nlohmann::json::array();
  for (const MethodResult& m : report.methods) {
    nlohmann::json entry;
    entry["name"] = m.name;
    if (m.alpha) entry["alpha"] = *m.alpha;
    entry["log_bf10"] = m.log_bf10;
    entry["bf10"] = std::exp(m.log_bf10);
    entry["bf01"] = std::exp(-m.log_bf10);
    entry["post_h0"] = m.post_h0;
    entry["post_h1"] = 1.0 - m.post_h0;
    j["methods"].push_back(entry);
  }
  j["warnings"] = report.warnings;
  return j.dump(2);
}

std::string report_to_text(const Report& report, bool with_warnings) {
  std::ostringstream os;
  os << render_statline(report.input.parsed);
  if (!report.input.label.empty()) os << "  [" << report.input.label << "]";
  if (report.input.n) os << "  n=" << *report.input.n;
  os << "\n";
  os << "  p-value       " << format_fixed(report.p_value) << "\n";
  os << "  Sellke bound  " << format_fixed(report.sellke) << "\n";
  char buf[200];
  std::snprintf(buf, sizeof buf, "  %-6s %-7s %12s %12s %12s %10s %10s\n",
                "method", "alpha", "BF10", "BF01", "log BF10", "P(H0|D)",
                "P(H1|D)");
  os << buf;
  for (const MethodResult& m : report.methods) {
    const std::string alpha_str =
        m.alpha ? format_shortest(*m.alpha) : std::string("-");
    std::snprintf(buf, sizeof buf, "  %-6s %-7s %12s %12s %12s %10s %10s\n",
                  m.name.c_str(), alpha_str.c_str(),
                  format_bf(m.log_bf10).c_str(),
                  format_bf(-m.log_bf10).c_str(),
                  format_fixed(m.log_bf10).c_str(),
                  format_fixed(m.post_h0).c_str(),
                  format_fixed(1.0 - m.post_h0).c_str());
    os << buf;
  }
  if (with_warnings)
    for (const std::string& w : report.warnings) os << "  warning: " << w << "\n";
  return os.str();
}

}  // namespace pbf
