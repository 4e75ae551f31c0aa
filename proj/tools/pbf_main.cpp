#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pearsonbf/batch.hpp"
#include "pearsonbf/report.hpp"
#include "pearsonbf/sim.hpp"

namespace {

struct OutputOpts {
  bool json = false;
  bool quiet = false;
};

void print_report(const pbf::Report& rep, const OutputOpts& out) {
  if (out.json)
    std::cout << pbf::report_to_json(rep) << "\n";
  else
    std::cout << pbf::report_to_text(rep, !out.quiet);
}

// batch output: one report per row in input order; failed rows become error
// records (JSON) or error lines (text) and flip the exit code to 1
int print_batch(const pbf::BatchResult& result, const OutputOpts& out) {
  if (out.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const pbf::BatchRow& row : result.rows) {
      nlohmann::json entry;
      entry["row"] = row.row;
      if (row.report)
        entry["report"] = nlohmann::json::parse(pbf::report_to_json(*row.report));
      else
        entry["error"] = row.error;
      rows.push_back(entry);
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    bool first = true;
    for (const pbf::BatchRow& row : result.rows) {
      if (!first) std::cout << "\n";
      first = false;
      if (row.report)
        std::cout << pbf::report_to_text(*row.report, !out.quiet);
      else
        std::cout << "row " << row.row << " error: " << row.error << "\n";
    }
  }
  return result.any_error ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pbf - Bayes factor battery for reported F and t statistics\n"
      "Exact Pearson Type VI Bayes factors alongside the BIC approximation,\n"
      "the p-value, and its Sellke calibration bound."};
  app.require_subcommand(1);

  OutputOpts out;
  double prior_h0 = 0.5;
  auto* flag_json =
      app.add_flag("--json", out.json, "machine-readable JSON output");
  bool text = false;
  auto* flag_text =
      app.add_flag("--text", text, "human-readable text output (default)");
  flag_json->excludes(flag_text);
  app.add_option("--prior-h0", prior_h0,
                 "prior probability of the null (default 0.5)");
  app.add_flag("--quiet", out.quiet, "suppress warning lines in text output");

  auto* anova =
      app.add_subcommand("anova", "evidence battery for F(df1,df2) = f");
  anova->fallthrough();  // global flags may follow the subcommand
  double f = 0.0, a_df1 = 0.0, a_df2 = 0.0;
  int a_n = 0;
  std::vector<double> alphas;
  anova->add_option("--f", f, "observed F statistic")->required();
  anova->add_option("--df1", a_df1, "between-treatments df")->required();
  anova->add_option("--df2", a_df2, "residual df")->required();
  auto* opt_a_n =
      anova->add_option("--n", a_n, "total sample size (enables the BIC route)");
  anova->add_option("--alpha", alphas,
                    "prior shape in [-1/2, 0], repeatable (default: 0, -0.5)");

  auto* ttest =
      app.add_subcommand("ttest", "evidence battery for a two-sided t(df) = t");
  ttest->fallthrough();
  double t = 0.0, t_df = 0.0;
  int n1 = 0, n2 = 0, t_n = 0;
  ttest->add_option("--t", t, "observed t statistic")->required();
  ttest->add_option("--df", t_df, "degrees of freedom")->required();
  auto* opt_n1 = ttest->add_option("--n1", n1, "first group size");
  auto* opt_n2 = ttest->add_option("--n2", n2, "second group size");
  auto* opt_t_n = ttest->add_option("--n", t_n, "total sample size");
  opt_n1->needs(opt_n2);
  opt_n2->needs(opt_n1);
  opt_t_n->excludes(opt_n1);
  opt_t_n->excludes(opt_n2);

  auto* parsecmd = app.add_subcommand(
      "parse", "parse a statline and print its canonical rendering");
  parsecmd->fallthrough();
  std::string statline_text;
  parsecmd->add_option("statline", statline_text, "e.g. \"F(2,15)=7.16\"")
      ->required();

  auto* batchcmd =
      app.add_subcommand("batch", "evaluate a CSV of reported statistics");
  batchcmd->fallthrough();
  std::string batch_path;
  batchcmd
      ->add_option("file", batch_path,
                   "CSV with a 'stat' column (quote F lines: they hold a "
                   "comma) or kind,value,df1,df2; optional n, alpha, label")
      ->required();

  auto* simcmd = app.add_subcommand(
      "sim", "Monte Carlo accuracy study of PBF vs BIC model choice");
  simcmd->fallthrough();
  int sim_p = 3, sim_reps = 1000;
  std::uint64_t sim_seed = pbf::kDefaultSimSeed;
  std::vector<int> sim_r;
  std::vector<double> sim_tau, sim_alpha;
  std::string sim_out;
  simcmd->add_option("--p", sim_p, "treatment groups (default 3)")
      ->check(CLI::Range(2, 1000000));
  simcmd->add_option("--r", sim_r,
                     "per-group sizes, repeatable (default 10 30 80)");
  simcmd->add_option("--tau", sim_tau,
                     "effect-variance ratios, repeatable (default 0 0.5 1)");
  simcmd->add_option("--alpha", sim_alpha,
                     "prior shapes, repeatable (default -0.5 0)");
  simcmd->add_option("--reps", sim_reps, "replications per cell (default 1000)")
      ->check(CLI::PositiveNumber);
  simcmd->add_option("--seed", sim_seed, "base seed (default pinned)");
  simcmd->add_option("--out", sim_out,
                     "write the per-cell CSV here (stdout otherwise)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help text or the usage error
    return code == 0 ? 0 : 2;
  }

  pbf::EvalSettings settings;
  settings.prior_h0 = prior_h0;

  try {
    if (*anova) {
      if (!alphas.empty()) settings.alphas = alphas;
      pbf::Statline line;
      line.parsed = pbf::SummaryStat::f_stat(f, a_df1, a_df2);
      line.raw = pbf::render_statline(line.parsed);
      if (*opt_a_n) line.n = a_n;
      print_report(pbf::evaluate(line, settings), out);
    } else if (*ttest) {
      pbf::Statline line;
      line.parsed = pbf::SummaryStat::t_stat(t, t_df);
      line.raw = pbf::render_statline(line.parsed);
      if (*opt_n1) line.n = n1 + n2;
      if (*opt_t_n) line.n = t_n;
      print_report(pbf::evaluate(line, settings), out);
    } else if (*parsecmd) {
      const pbf::Statline line = pbf::parse_statline(statline_text);
      const std::string canonical = pbf::render_statline(line.parsed);
      if (out.json) {
        nlohmann::json j;
        j["statline"] = canonical;
        j["kind"] = line.parsed.kind == pbf::StatKind::FStat ? "F" : "t";
        j["value"] = line.parsed.value;
        j["df1"] = line.parsed.f_df1();
        j["df2"] = line.parsed.df2;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << canonical << "\n";
      }
    } else if (*batchcmd) {
      std::ifstream in(batch_path);
      if (!in) throw std::runtime_error("cannot open " + batch_path);
      return print_batch(pbf::run_batch(in, settings), out);
    } else if (*simcmd) {
      pbf::SimConfig config;
      config.p = sim_p;
      config.reps = sim_reps;
      config.seed = sim_seed;
      if (!sim_r.empty()) config.r_values = sim_r;
      if (!sim_tau.empty()) config.tau_values = sim_tau;
      if (!sim_alpha.empty()) config.alpha_values = sim_alpha;
      const std::vector<pbf::SimCellResult> cells = pbf::run_grid(config);
      if (sim_out.empty()) {
        pbf::write_csv(cells, std::cout);
      } else {
        std::ofstream csv(sim_out);
        if (!csv) throw std::runtime_error("cannot open " + sim_out);
        pbf::write_csv(cells, csv);
        if (!out.quiet) std::cout << pbf::format_table(cells);
      }
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
