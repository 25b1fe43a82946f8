#pragma once

// Bit-string encoding used by the JSON and DOT writers: "1010" lists
// coordinates 0..n-1 left to right.

#include <string>
#include <string_view>

#include "charsub/gf2.hpp"

namespace charsub::cli {

std::string to_bits(const Gf2Vector& v);
/// Throws ParseError on characters other than 0/1.
Gf2Vector from_bits(std::string_view bits);

/// Short hex digest of the canonical basis (FNV-1a, 24 bits).
std::string digest(const Subspace& s);

}  // namespace charsub::cli
