#include "pearsonbf/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pearsonbf/classic.hpp"
#include "pearsonbf/pbf.hpp"

namespace pbf {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_rep_seed(std::uint64_t base_seed, int r, double tau,
                              double alpha, int rep) {
  std::uint64_t h = base_seed;
  h = splitmix64(h ^ static_cast<std::uint64_t>(r));
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(tau));
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(alpha));
  h = splitmix64(h ^ static_cast<std::uint64_t>(rep));
  return h;
}

double NormalSampler::operator()() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  double u, v, s;
  do {
    u = 2.0 * unit() - 1.0;
    v = 2.0 * unit() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  cached_ = v * m;
  has_cached_ = true;
  return u * m;
}

Dataset generate_dataset(int p, int r, double tau, NormalSampler& rng,
                         double mu, double sigma) {
  if (p < 2 || r < 2)
    throw std::domain_error("generate_dataset: requires p >= 2 and r >= 2");
  if (!(tau >= 0.0) || !std::isfinite(tau))
    throw std::domain_error("generate_dataset: tau must be nonnegative");
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw std::domain_error("generate_dataset: sigma must be positive");
  const double effect_sd = std::sqrt(tau) * sigma;
  std::vector<double> effect(p);
  for (int j = 0; j < p; ++j) effect[j] = effect_sd * rng();
  Dataset d{r, p, std::vector<double>(static_cast<size_t>(r) * p)};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < p; ++j) d.at(i, j) = mu + effect[j] + sigma * rng();
  return d;
}

AnovaTable decompose(const Dataset& data) {
  const int r = data.r, p = data.p;
  if (p < 2 || r < 2)
    throw std::domain_error("decompose: requires p >= 2 and r >= 2");
  std::vector<double> col_mean(p, 0.0);
  for (int j = 0; j < p; ++j) {
    double s = 0.0;
    for (int i = 0; i < r; ++i) s += data.at(i, j);
    col_mean[j] = s / r;
  }
  double grand = 0.0;
  for (int j = 0; j < p; ++j) grand += col_mean[j];
  grand /= p;
  double ssa = 0.0;
  for (int j = 0; j < p; ++j) {
    const double d = col_mean[j] - grand;
    ssa += d * d;
  }
  ssa *= r;
  double ssr = 0.0;
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < r; ++i) {
      const double d = data.at(i, j) - col_mean[j];
      ssr += d * d;
    }
  return AnovaTable::from_parts(ssa, ssr, r * p, p);
}

double SimCellResult::accuracy(Method m) const {
  const MethodTally& t = (m == Method::PBF) ? pbf
                         : (m == Method::BIC)
                             ? bic
                             : throw std::domain_error(
                                   "accuracy: cell tallies exist for PBF and "
                                   "BIC only");
  const int correct = (tau == 0.0) ? t.chose_h0 : t.chose_h1;
  return static_cast<double>(correct) / reps;
}

double SimCellResult::mean_post_h0(Method m) const {
  const MethodTally& t = (m == Method::PBF) ? pbf
                         : (m == Method::BIC)
                             ? bic
                             : throw std::domain_error(
                                   "mean_post_h0: cell tallies exist for PBF "
                                   "and BIC only");
  const int counted = reps - degenerate;
  return counted > 0 ? t.posterior_h0_sum / counted : 0.0;
}

SimCellResult run_cell(const SimConfig& config, int r, double tau,
                       double alpha) {
  if (config.reps < 1)
    throw std::domain_error("run_cell: reps must be at least 1");
  SimCellResult cell;
  cell.r = r;
  cell.tau = tau;
  cell.alpha = alpha;
  cell.reps = config.reps;
  cell.seed = config.seed;
  for (int rep = 0; rep < config.reps; ++rep) {
    NormalSampler rng(derive_rep_seed(config.seed, r, tau, alpha, rep));
    const Dataset data =
        generate_dataset(config.p, r, tau, rng, config.mu, config.sigma);
    try {
      const AnovaTable table = decompose(data);
      const Evidence pearson = ws_from_ss(table, alpha);
      const Evidence bic = bic_bf_from_summary(table.as_fstat(), table.n);
      for (const Evidence& e : {pearson, bic}) {
        MethodTally& t = (e.method == Method::BIC) ? cell.bic : cell.pbf;
        (choose_model(e) == Hypothesis::H0 ? t.chose_h0 : t.chose_h1) += 1;
        t.posterior_h0_sum += posterior_prob_h0(e, 0.5).value();
      }
    } catch (const std::domain_error&) {
      // sst = 0 or ssr = 0: no decision is computable for this draw
      ++cell.degenerate;
    }
  }
  return cell;
}

std::vector<SimCellResult> run_grid(const SimConfig& config) {
  std::vector<SimCellResult> cells;
  cells.reserve(config.alpha_values.size() * config.tau_values.size() *
                config.r_values.size());
  for (double alpha : config.alpha_values)
    for (double tau : config.tau_values)
      for (int r : config.r_values)
        cells.push_back(run_cell(config, r, tau, alpha));
  return cells;
}

namespace {

std::string num(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

}  // namespace

void write_csv(const std::vector<SimCellResult>& cells, std::ostream& out) {
  out << "r,tau,alpha,method,accuracy,mean_post_h0,reps,seed\n";
  for (const SimCellResult& c : cells) {
    for (Method m : {Method::PBF, Method::BIC}) {
      out << c.r << ',' << num(c.tau, "%g") << ',' << num(c.alpha, "%g") << ','
          << method_name(m) << ',' << num(c.accuracy(m), "%.6g") << ','
          << num(c.mean_post_h0(m), "%.10g") << ',' << c.reps << ',' << c.seed
          << '\n';
    }
  }
}

std::string format_table(const std::vector<SimCellResult>& cells) {
  // collect the axes in first-appearance order
  std::vector<double> alphas, taus;
  std::vector<int> rs;
  for (const SimCellResult& c : cells) {
    if (std::find(alphas.begin(), alphas.end(), c.alpha) == alphas.end())
      alphas.push_back(c.alpha);
    if (std::find(taus.begin(), taus.end(), c.tau) == taus.end())
      taus.push_back(c.tau);
    if (std::find(rs.begin(), rs.end(), c.r) == rs.end()) rs.push_back(c.r);
  }
  auto find_cell = [&cells](double alpha, double tau, int r) {
    for (const SimCellResult& c : cells)
      if (c.alpha == alpha && c.tau == tau && c.r == r) return &c;
    return static_cast<const SimCellResult*>(nullptr);
  };
  std::ostringstream os;
  for (double alpha : alphas) {
    os << "alpha = " << num(alpha, "%g") << "\n";
    os << "  tau   ";
    for (const char* name : {"PBF", "BIC"}) {
      for (int r : rs) {
        char head[32];
        std::snprintf(head, sizeof head, "%s r=%-4d", name, r);
        os << ' ' << head;
      }
      os << "  ";
    }
    os << "\n";
    for (double tau : taus) {
      os << "  " << num(tau, "%-5g") << ' ';
      for (Method m : {Method::PBF, Method::BIC}) {
        for (int r : rs) {
          const SimCellResult* c = find_cell(alpha, tau, r);
          os << ' '
             << (c ? num(c->accuracy(m), "  %8.3f") : std::string("       --"));
        }
        os << "  ";
      }
      os << "\n";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace pbf
