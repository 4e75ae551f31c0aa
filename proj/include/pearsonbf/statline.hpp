#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "pearsonbf/core.hpp"

// Parsing and canonical rendering of reported test statistics in the
// journal shorthand "F(2,15)=7.16" / "t(38)=3".
namespace pbf {

// Lexical failure: where it happened and what would have been accepted.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected);

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

struct Statline {
  std::string raw;
  SummaryStat parsed{StatKind::FStat, 0.0, 1.0, 1.0};
  std::optional<int> n;        // sample size, enables the BIC route
  std::optional<double> alpha; // per-line override of the default alpha set
  std::string label;
};

// Grammar: ws? ('F'|'f'|'t'|'T') ws? '(' ws? df (ws? ',' ws? df)? ws? ')'
//          ws? '=' ws? signed-decimal ws? end
// F takes two positive dfs and a nonnegative value (a negative F is a
// std::domain_error, not a ParseError); t takes a single df.
Statline parse_statline(const std::string& text);

// Canonical form: "F(df1,df2)=value" or "t(df)=value", shortest digit
// strings that round-trip. parse(render(s)) == s exactly.
std::string render_statline(const SummaryStat& stat);

// Shortest %.*g representation that re-reads to the identical double.
std::string format_shortest(double v);

}  // namespace pbf
