#include "pearsonbf/statline.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace pbf {

namespace {

std::string describe(std::size_t position, const std::string& expected) {
  std::ostringstream os;
  os << "parse error at position " << position << ": expected " << expected;
  return os.str();
}

// cursor over the input with whitespace skipping and error reporting
struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void expect(char c, const char* what) {
    if (at_end() || text[pos] != c) throw ParseError(pos, what);
    ++pos;
  }
  double number(const char* what) {
    const char* start = text.c_str() + pos;
    char* end = nullptr;
    const double v = std::strtod(start, &end);
    if (end == start || !std::isfinite(v)) throw ParseError(pos, what);
    pos += static_cast<std::size_t>(end - start);
    return v;
  }
};

}  // namespace

ParseError::ParseError(std::size_t position, std::string expected)
    : std::runtime_error(describe(position, expected)),
      position_(position),
      expected_(std::move(expected)) {}

Statline parse_statline(const std::string& text) {
  Scanner s{text};
  s.skip_ws();
  if (s.at_end()) throw ParseError(s.pos, "'F' or 't'");
  const char kind_char = s.peek();
  StatKind kind;
  if (kind_char == 'F' || kind_char == 'f') {
    kind = StatKind::FStat;
  } else if (kind_char == 't' || kind_char == 'T') {
    kind = StatKind::TStat;
  } else {
    throw ParseError(s.pos, "'F' or 't'");
  }
  ++s.pos;
  s.skip_ws();
  s.expect('(', "'('");
  s.skip_ws();
  const std::size_t df1_pos = s.pos;
  const double df1 = s.number("a degrees-of-freedom value");
  if (!(df1 > 0.0)) throw ParseError(df1_pos, "a positive degrees-of-freedom value");
  double df2 = df1;
  s.skip_ws();
  if (kind == StatKind::FStat) {
    s.expect(',', "',' (F takes two dfs)");
    s.skip_ws();
    const std::size_t df2_pos = s.pos;
    df2 = s.number("a degrees-of-freedom value");
    if (!(df2 > 0.0))
      throw ParseError(df2_pos, "a positive degrees-of-freedom value");
    s.skip_ws();
  } else if (!s.at_end() && s.peek() == ',') {
    throw ParseError(s.pos, "')' (t takes a single df)");
  }
  s.expect(')', kind == StatKind::FStat ? "')'" : "')' (t takes a single df)");
  s.skip_ws();
  s.expect('=', "'='");
  s.skip_ws();
  const double value = s.number("a decimal statistic value");
  s.skip_ws();
  if (!s.at_end()) throw ParseError(s.pos, "end of input");

  if (kind == StatKind::FStat && value < 0.0)
    throw std::domain_error("negative F statistic");
  Statline line;
  line.raw = text;
  line.parsed = kind == StatKind::FStat ? SummaryStat::f_stat(value, df1, df2)
                                        : SummaryStat::t_stat(value, df2);
  return line;
}

std::string format_shortest(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string render_statline(const SummaryStat& stat) {
  std::string out;
  if (stat.kind == StatKind::FStat) {
    out = "F(" + format_shortest(stat.df1) + "," + format_shortest(stat.df2) +
          ")=" + format_shortest(stat.value);
  } else {
    out = "t(" + format_shortest(stat.df2) + ")=" + format_shortest(stat.value);
  }
  return out;
}

}  // namespace pbf
