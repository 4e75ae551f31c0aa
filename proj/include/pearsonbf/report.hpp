#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pearsonbf/core.hpp"
#include "pearsonbf/statline.hpp"

// Assembly of the full evidence battery for one reported statistic, plus the
// machine (JSON) and human (text) renderings.
namespace pbf {

struct EvalSettings {
  // the two boundary priors of the consistency range
  std::vector<double> alphas{0.0, -0.5};
  std::optional<int> n;  // enables the BIC route when present
  double prior_h0 = 0.5; // equipoise unless told otherwise
};

struct MethodResult {
  std::string name;             // "PBF" or "BIC"
  std::optional<double> alpha;  // present for PBF entries
  double log_bf10 = 0.0;
  double post_h0 = 0.0;         // at the report's prior_h0
};

struct Report {
  Statline input;
  double prior_h0 = 0.5;
  double p_value = 1.0;
  double sellke = 1.0;  // BF10 upper bound; 1 when vacuous (warned)
  std::vector<MethodResult> methods;
  std::vector<std::string> warnings;
};

// Computes PBF for each requested alpha (the line's own alpha, when set,
// overrides the settings list), the BIC route when a sample size is known,
// the p-value and its Sellke bound, and posterior probabilities. A method
// whose domain rejects the input is dropped with a warning naming it; the
// rest of the report still forms.
Report evaluate(const Statline& line, const EvalSettings& settings);

// {input, p_value, sellke_bound, methods:[{name, alpha?, log_bf10, bf10,
//  bf01, post_h0, post_h1}], warnings:[...]} - stable field names, full
// double precision.
std::string report_to_json(const Report& report);

// Aligned text block, 4 decimal places (scientific below 1e-4), linear BFs
// capped in display at 1e15 with the log always shown. with_warnings=false
// suppresses the warning lines (the --quiet mode).
std::string report_to_text(const Report& report, bool with_warnings = true);

}  // namespace pbf
