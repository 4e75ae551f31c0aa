#include "pearsonbf/batch.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace pbf {

namespace {

// Pulls one CSV record off the stream: comma-separated, fields optionally
// double-quoted with "" escaping, quoted fields may span newlines. Returns
// false at end of input.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  int c = in.get();
  if (c == EOF) return false;
  std::string field;
  bool quoted = false;
  while (true) {
    if (quoted) {
      if (c == EOF) break;  // unterminated quote: take what we have
      if (c == '"') {
        if (in.peek() == '"') {
          field.push_back('"');
          in.get();
        } else {
          quoted = false;
        }
      } else {
        field.push_back(static_cast<char>(c));
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c == '\n' || c == EOF) {
      break;
    } else if (c != '\r') {
      field.push_back(static_cast<char>(c));
    }
    c = in.get();
  }
  fields.push_back(field);
  return true;
}

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  return s;
}

double to_double(const std::string& raw, const char* col) {
  const std::string s = trim(raw);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
    throw std::runtime_error(std::string("column '") + col +
                             "': not a number: '" + s + "'");
  return v;
}

int to_int(const std::string& raw, const char* col) {
  const double v = to_double(raw, col);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v)
    throw std::runtime_error(std::string("column '") + col +
                             "': not an integer: '" + trim(raw) + "'");
  return i;
}

// Column index lookup; -1 means absent.
struct Columns {
  int stat = -1, kind = -1, value = -1, df1 = -1, df2 = -1;
  int n = -1, alpha = -1, label = -1;
};

Columns map_header(const std::vector<std::string>& header) {
  std::map<std::string, int> idx;
  for (size_t i = 0; i < header.size(); ++i)
    idx.emplace(lower(trim(header[i])), static_cast<int>(i));
  const auto at = [&](const char* name) {
    const auto it = idx.find(name);
    return it == idx.end() ? -1 : it->second;
  };
  Columns c;
  c.stat = at("stat");
  c.kind = at("kind");
  c.value = at("value");
  c.df1 = at("df1");
  c.df2 = at("df2");
  c.n = at("n");
  c.alpha = at("alpha");
  c.label = at("label");
  if (c.stat < 0 && (c.kind < 0 || c.value < 0 || c.df1 < 0 || c.df2 < 0))
    throw std::runtime_error(
        "batch: header must name a 'stat' column or all of "
        "kind, value, df1, df2");
  return c;
}

std::string field_at(const std::vector<std::string>& rec, int i) {
  return i >= 0 && i < static_cast<int>(rec.size()) ? rec[i] : std::string();
}

Statline row_to_statline(const std::vector<std::string>& rec,
                         const Columns& cols) {
  Statline line;
  if (cols.stat >= 0) {
    line = parse_statline(field_at(rec, cols.stat));
  } else {
    const std::string kind = lower(trim(field_at(rec, cols.kind)));
    const double value = to_double(field_at(rec, cols.value), "value");
    const std::string df1 = trim(field_at(rec, cols.df1));
    const double nu = to_double(field_at(rec, cols.df2), "df2");
    SummaryStat stat{StatKind::FStat, 0.0, 1.0, 1.0};
    if (kind == "f") {
      stat = SummaryStat::f_stat(value, to_double(df1, "df1"), nu);
    } else if (kind == "t") {
      if (!df1.empty() && to_double(df1, "df1") != 1.0)
        throw std::runtime_error(
            "column 'df1': a t statistic takes a single df; leave df1 empty "
            "or 1");
      stat = SummaryStat::t_stat(value, nu);
    } else {
      throw std::runtime_error("column 'kind': expected 'F' or 't', got '" +
                               trim(field_at(rec, cols.kind)) + "'");
    }
    line.raw = render_statline(stat);
    line.parsed = stat;
  }
  const std::string n = trim(field_at(rec, cols.n));
  if (!n.empty()) line.n = to_int(n, "n");
  const std::string alpha = trim(field_at(rec, cols.alpha));
  if (!alpha.empty()) line.alpha = to_double(alpha, "alpha");
  const std::string label = trim(field_at(rec, cols.label));
  if (!label.empty()) line.label = label;
  return line;
}

}  // namespace

BatchResult run_batch(std::istream& in, const EvalSettings& settings) {
  std::vector<std::string> rec;
  if (!read_record(in, rec))
    throw std::runtime_error("batch: empty input (no header)");
  const Columns cols = map_header(rec);

  BatchResult result;
  int record_no = 1;  // header consumed
  while (read_record(in, rec)) {
    ++record_no;
    const bool blank = std::all_of(rec.begin(), rec.end(), [](const auto& f) {
      return trim(f).empty();
    });
    if (blank) continue;
    BatchRow row;
    row.row = record_no;
    try {
      row.report = evaluate(row_to_statline(rec, cols), settings);
    } catch (const std::exception& ex) {
      row.error = ex.what();
      result.any_error = true;
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace pbf
