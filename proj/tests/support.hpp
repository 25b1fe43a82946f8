#pragma once

// Test-only brute-force oracles. Everything here works on raw uint64_t bit
// masks (bit i = coordinate i) and never calls the library's elimination
// routines, so it can independently check them at small n.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "charsub/gf2.hpp"
#include "charsub/nilpotent.hpp"

namespace charsub::testing {

using Mask = std::uint64_t;
/// Row masks of a square matrix acting on column vectors.
using MaskMatrix = std::vector<Mask>;

inline Mask mask_of(const Gf2Vector& v) { return v.low_word(); }

inline MaskMatrix masks_of(const Gf2Matrix& m) {
  MaskMatrix out;
  for (const auto& r : m.row_vectors()) out.push_back(r.low_word());
  return out;
}

inline Gf2Vector vec(std::size_t n, Mask bits) { return Gf2Vector::from_word(n, bits); }

/// Vector from a 0/1 string such as "1010" (first char = coordinate 0).
inline Gf2Vector vec(const char* bits) {
  std::vector<int> entries;
  for (const char* p = bits; *p; ++p) {
    if (*p == '0' || *p == '1') entries.push_back(*p - '0');
  }
  Gf2Vector v(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) v.set(i, entries[i] != 0);
  return v;
}

/// Matrix from rows given as 0/1 strings.
inline Gf2Matrix mat(std::initializer_list<const char*> rows) {
  std::vector<Gf2Vector> out;
  for (const char* r : rows) out.push_back(vec(r));
  const std::size_t cols = out.empty() ? 0 : out.front().dim();
  return Gf2Matrix::from_rows(cols, std::move(out));
}

inline Mask apply_mask(const MaskMatrix& m, Mask v) {
  Mask out = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (__builtin_popcountll(m[i] & v) & 1) out |= Mask{1} << i;
  }
  return out;
}

/// All XOR-combinations of the generators.
inline std::set<Mask> span_set(const std::vector<Mask>& gens) {
  std::set<Mask> members{0};
  for (Mask g : gens) {
    std::vector<Mask> add;
    for (Mask m : members) add.push_back(m ^ g);
    members.insert(add.begin(), add.end());
  }
  return members;
}

inline std::set<Mask> member_set(const Subspace& s) {
  std::vector<Mask> gens;
  for (const auto& b : s.basis()) gens.push_back(mask_of(b));
  return span_set(gens);
}

inline std::set<Mask> brute_kernel(const MaskMatrix& m, std::size_t n) {
  std::set<Mask> out;
  for (Mask v = 0; v < (Mask{1} << n); ++v) {
    if (apply_mask(m, v) == 0) out.insert(v);
  }
  return out;
}

inline std::set<Mask> brute_image(const MaskMatrix& m, std::size_t n) {
  std::set<Mask> out;
  for (Mask v = 0; v < (Mask{1} << n); ++v) out.insert(apply_mask(m, v));
  return out;
}

inline MaskMatrix mask_product(const MaskMatrix& a, const MaskMatrix& b) {
  // (AB)_i = sum_k a_ik b_k
  MaskMatrix c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if ((a[i] >> k) & 1U) c[i] ^= b[k];
    }
  }
  return c;
}

/// Invertibility by checking that the image has 2^n members.
inline bool brute_invertible(const MaskMatrix& m, std::size_t n) {
  return brute_image(m, n).size() == (std::size_t{1} << n);
}

/// Every n x n matrix (n <= 4) commuting with f, by exhaustive scan.
inline std::vector<MaskMatrix> brute_commutant(const MaskMatrix& f, std::size_t n) {
  std::vector<MaskMatrix> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  const Mask row_mask = (Mask{1} << n) - 1;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    MaskMatrix g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = (bits >> (i * n)) & row_mask;
    if (mask_product(g, f) == mask_product(f, g)) out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<MaskMatrix> brute_automorphisms(const MaskMatrix& f, std::size_t n) {
  std::vector<MaskMatrix> out;
  for (auto& g : brute_commutant(f, n)) {
    if (brute_invertible(g, n)) out.push_back(std::move(g));
  }
  return out;
}

/// gX ⊆ X for every g, on member sets.
inline bool brute_stable(const std::vector<MaskMatrix>& maps, const std::set<Mask>& members) {
  for (const auto& g : maps) {
    for (Mask v : members) {
      if (!members.count(apply_mask(g, v))) return false;
    }
  }
  return true;
}

inline Gf2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Gf2Matrix m(rows, cols);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, coin(rng));
  }
  return m;
}

inline Gf2Vector random_vector(std::size_t n, std::mt19937_64& rng) {
  Gf2Vector v(n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i) v.set(i, coin(rng));
  return v;
}

/// Random invertible matrix P together with P^{-1}, built as a product of
/// elementary row operations so no inversion routine is needed.
struct InvertiblePair {
  Gf2Matrix p;
  Gf2Matrix p_inv;
};

inline InvertiblePair random_invertible(std::size_t n, std::mt19937_64& rng) {
  InvertiblePair out{Gf2Matrix::identity(n), Gf2Matrix::identity(n)};
  if (n < 2) return out;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t step = 0; step < 4 * n * n; ++step) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    if (i == j) continue;
    // E = I + E_ij is its own inverse; P <- E P and P^{-1} <- P^{-1} E.
    out.p.row(i) += Gf2Vector(out.p.row(j));
    for (std::size_t r = 0; r < n; ++r) {
      if (out.p_inv.get(r, i)) out.p_inv.row(r).flip(j);
    }
  }
  return out;
}

/// Jordan operator diag(N_t1, ..., N_tk) conjugated by a random P.
inline Gf2Matrix conjugated_jordan(const std::vector<std::size_t>& sizes, std::mt19937_64& rng) {
  const auto pair = random_invertible(
      [&] {
        std::size_t n = 0;
        for (auto t : sizes) n += t;
        return n;
      }(),
      rng);
  return pair.p * jordan_matrix(sizes) * pair.p_inv;
}

}  // namespace charsub::testing
