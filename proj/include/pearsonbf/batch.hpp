#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "pearsonbf/report.hpp"

namespace pbf {

// One evaluated (or rejected) CSV row. `row` is the 1-based record number in
// the file, counting the header, so the first data row is 2. Exactly one of
// `report` / `error` is meaningful: a failed row keeps its message and the
// rest of the batch still runs.
struct BatchRow {
  int row = 0;
  std::optional<Report> report;
  std::string error;
};

struct BatchResult {
  std::vector<BatchRow> rows;
  bool any_error = false;
};

// Reads a CSV batch and evaluates every row under `settings`.
//
// The header must name either a `stat` column (full statline syntax per row)
// or all of `kind`, `value`, `df1`, `df2`. Optional columns: `n`, `alpha`
// (overrides the settings' alpha list for that row), `label`. Fields may be
// double-quoted with "" escaping; quoted fields may contain commas and
// newlines — an F statline holds a comma, so quote it: "F(2,15)=7.16".
// Blank records are skipped; a header-only file yields zero rows.
//
// Errors: std::runtime_error if the header is missing or names no usable
// column set. Row-level failures never throw; they are recorded in place.
BatchResult run_batch(std::istream& in, const EvalSettings& settings);

}  // namespace pbf
