#pragma once

// Plain-text matrix and subspace format.
//
//   first line:  "<n_rows> <n_cols>"
//   then n_rows lines of n_cols space-separated 0/1 entries.
//
// A subspace file uses the same layout; its rows are spanning vectors
// (they need not be independent or reduced). Blank lines and lines starting
// with '#' are ignored.

#include <iosfwd>
#include <string>
#include <string_view>

#include "charsub/gf2.hpp"

namespace charsub {

Gf2Matrix parse_matrix(std::istream& in);
Gf2Matrix parse_matrix(std::string_view text);
Gf2Matrix read_matrix_file(const std::string& path);

/// Parses a subspace; the rows' column count is its ambient dimension.
Subspace parse_subspace(std::istream& in);
Subspace parse_subspace(std::string_view text);
Subspace read_subspace_file(const std::string& path);

std::string format_matrix(const Gf2Matrix& m);
/// Writes the canonical basis rows ("<dim> <n>" header).
std::string format_subspace(const Subspace& s);

}  // namespace charsub
