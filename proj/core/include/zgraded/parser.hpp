#pragma once

#include <string>

#include "zgraded/series.hpp"

namespace zgr {

// Parses an expression over the chart's coordinates:
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ['^' integer]
//   base   := number | ident | '(' expr ')' | 'exp' '(' expr ')'
//
// Identifiers name chart coordinates; implicit multiplication is not
// accepted. `line` seeds the position reported in diagnostics.
GradedSeries parse_series(const ChartPtr& chart, const std::string& text,
                          int line = 1);

} // namespace zgr
