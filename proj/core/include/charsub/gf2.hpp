#pragma once

// Bit-packed exact linear algebra over GF(2).
//
// Vectors pack bit i into word i / 64 at position i % 64. Matrices are
// row-major sequences of such vectors and act on column vectors, so the
// dominant row operations reduce to word-wise XOR.
//
// Subspaces are always stored in reduced row echelon form with pivots at the
// lowest set index of each basis row, pivots strictly increasing. Two
// Subspace values compare equal iff they span the same set.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace charsub {

class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t dim);

  static Gf2Vector unit(std::size_t dim, std::size_t index);
  /// Low `dim` bits of `bits`; requires dim <= 64.
  static Gf2Vector from_word(std::size_t dim, std::uint64_t bits);

  std::size_t dim() const noexcept { return dim_; }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true) noexcept;
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool is_zero() const noexcept;
  /// Index of the lowest set bit, or dim() when the vector is zero.
  std::size_t lowest_set() const noexcept;
  std::size_t popcount() const noexcept;
  /// Inner product sum_i a_i b_i over GF(2).
  bool dot(const Gf2Vector& other) const;

  Gf2Vector& operator+=(const Gf2Vector& other);
  friend Gf2Vector operator+(Gf2Vector a, const Gf2Vector& b) { return a += b; }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }
  /// First word; convenient for dim <= 64.
  std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;
  /// Orders by dimension, then by the packed bit pattern read as an unsigned
  /// integer with bit 0 least significant.
  friend std::strong_ordering operator<=>(const Gf2Vector& a, const Gf2Vector& b);

  /// Space-separated 0/1 entries, e.g. "1 0 1 0".
  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> words_;
};

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix zero(std::size_t rows, std::size_t cols) { return Gf2Matrix(rows, cols); }
  static Gf2Matrix from_rows(std::size_t cols, std::vector<Gf2Vector> rows);
  /// Matrix whose j-th column is columns[j].
  static Gf2Matrix from_columns(std::size_t rows, std::span<const Gf2Vector> columns);
  /// Inverse of flatten().
  static Gf2Matrix unflatten(std::size_t rows, std::size_t cols, const Gf2Vector& flat);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows() == cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept { rows_[r].set(c, value); }

  const Gf2Vector& row(std::size_t r) const noexcept { return rows_[r]; }
  Gf2Vector& row(std::size_t r) noexcept { return rows_[r]; }
  const std::vector<Gf2Vector>& row_vectors() const noexcept { return rows_; }
  Gf2Vector column(std::size_t c) const;

  /// M v for a column vector v.
  Gf2Vector apply(const Gf2Vector& v) const;
  Gf2Matrix transpose() const;
  Gf2Matrix power(std::size_t k) const;
  bool is_zero() const noexcept;

  /// Row-major flattening into a vector of rows*cols bits (entry (i,j) at i*cols+j).
  Gf2Vector flatten() const;

  Gf2Matrix& operator+=(const Gf2Matrix& other);
  friend Gf2Matrix operator+(Gf2Matrix a, const Gf2Matrix& b) { return a += b; }
  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;
  /// Row-by-row packed-bit lexicographic order.
  friend std::strong_ordering operator<=>(const Gf2Matrix& a, const Gf2Matrix& b);

  std::string to_string() const;

 private:
  std::size_t cols_ = 0;
  std::vector<Gf2Vector> rows_;
};

class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of GF(2)^ambient_dim.
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace full(std::size_t n);
  /// Canonical span of arbitrary vectors of dimension n.
  static Subspace span(std::size_t n, std::span<const Gf2Vector> vectors);
  static Subspace span(std::size_t n, std::initializer_list<Gf2Vector> vectors) {
    return span(n, std::span<const Gf2Vector>(vectors.begin(), vectors.size()));
  }
  /// Wraps rows already in canonical form. The caller guarantees canonicity.
  static Subspace from_canonical(std::size_t n, std::vector<Gf2Vector> rref_rows);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  const std::vector<Gf2Vector>& basis() const noexcept { return basis_; }
  std::vector<std::size_t> pivots() const;

  /// v minus its projection on the pivot columns; zero iff v is a member.
  Gf2Vector reduce(Gf2Vector v) const;
  bool contains(const Gf2Vector& v) const;
  bool is_subspace_of(const Subspace& other) const;

  Gf2Matrix as_matrix() const { return Gf2Matrix::from_rows(ambient_, basis_); }

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  std::vector<Gf2Vector> basis_;
};

/// Reduced row echelon form; the row count is preserved, zero rows last.
Gf2Matrix rref(Gf2Matrix m);
std::size_t rank(const Gf2Matrix& m);
/// {v : M v = 0}.
Subspace kernel(const Gf2Matrix& m);
/// Column space {M v}.
Subspace image(const Gf2Matrix& m);
/// Row space of m.
Subspace row_space(const Gf2Matrix& m);

bool is_invertible(const Gf2Matrix& m);
std::optional<Gf2Matrix> inverse(const Gf2Matrix& m);
/// Some x with M x = b, if the system is consistent.
std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& s, const Gf2Vector& v);
/// {M v : v in s}.
Subspace map_subspace(const Gf2Matrix& m, const Subspace& s);

/// Indices of a maximal linearly independent subfamily, chosen greedily in order.
std::vector<std::size_t> independent_subset(std::span<const Gf2Vector> vectors);

}  // namespace charsub

template <>
struct std::hash<charsub::Gf2Vector> {
  std::size_t operator()(const charsub::Gf2Vector& v) const noexcept;
};

template <>
struct std::hash<charsub::Subspace> {
  std::size_t operator()(const charsub::Subspace& s) const noexcept;
};
