#include "cli/bits.hpp"

#include <cstdint>
#include <cstdio>

#include "charsub/errors.hpp"

namespace charsub::cli {

std::string to_bits(const Gf2Vector& v) {
  std::string out(v.dim(), '0');
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v.test(i)) out[i] = '1';
  }
  return out;
}

Gf2Vector from_bits(std::string_view bits) {
  Gf2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ParseError("bit string \"" + std::string(bits) + "\" has a character other than 0/1");
    }
  }
  return v;
}

std::string digest(const Subspace& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (char c : std::to_string(s.ambient_dim())) mix(static_cast<unsigned char>(c));
  for (const auto& b : s.basis()) {
    mix('|');
    for (char c : to_bits(b)) mix(static_cast<unsigned char>(c));
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "%06llx", static_cast<unsigned long long>((h ^ (h >> 32)) & 0xffffff));
  return buf;
}

}  // namespace charsub::cli
