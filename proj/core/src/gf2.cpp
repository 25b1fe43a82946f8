#include "charsub/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

#include "charsub/errors.hpp"

namespace charsub {

namespace {

std::size_t word_count(std::size_t dim) { return (dim + 63) / 64; }

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) +
                            " vs " + std::to_string(b));
  }
}

std::size_t hash_words(std::span<const std::uint64_t> words, std::size_t seed) {
  for (std::uint64_t w : words) {
    seed ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

// In-place Gauss-Jordan on a list of rows of width `cols`; returns the pivot
// columns. Nonzero rows end up first, in pivot order.
std::vector<std::size_t> eliminate(std::vector<Gf2Vector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && !rows[r].test(c)) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[rank], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i].test(c)) rows[i] += rows[rank];
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------- Gf2Vector

Gf2Vector::Gf2Vector(std::size_t dim) : dim_(dim), words_(word_count(dim), 0) {}

Gf2Vector Gf2Vector::unit(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionMismatch("unit vector index out of range");
  Gf2Vector v(dim);
  v.set(index);
  return v;
}

Gf2Vector Gf2Vector::from_word(std::size_t dim, std::uint64_t bits) {
  if (dim > 64) throw DimensionMismatch("from_word requires dim <= 64");
  Gf2Vector v(dim);
  if (dim == 0) return v;
  if (dim < 64) bits &= (std::uint64_t{1} << dim) - 1;
  v.words_[0] = bits;
  return v;
}

void Gf2Vector::set(std::size_t i, bool value) noexcept {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

bool Gf2Vector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Gf2Vector::lowest_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return dim_;
}

std::size_t Gf2Vector::popcount() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
  require_same_dim(dim_, other.dim_, "dot");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return (std::popcount(acc) & 1) != 0;
}

Gf2Vector& Gf2Vector::operator+=(const Gf2Vector& other) {
  require_same_dim(dim_, other.dim_, "vector addition");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::strong_ordering operator<=>(const Gf2Vector& a, const Gf2Vector& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Gf2Vector::to_string() const {
  std::string s;
  s.reserve(2 * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i != 0) s += ' ';
    s += test(i) ? '1' : '0';
  }
  return s;
}

// ---------------------------------------------------------------- Gf2Matrix

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, Gf2Vector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::size_t cols, std::vector<Gf2Vector> rows) {
  for (const auto& r : rows) require_same_dim(r.dim(), cols, "matrix row");
  Gf2Matrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

Gf2Matrix Gf2Matrix::from_columns(std::size_t rows, std::span<const Gf2Vector> columns) {
  Gf2Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require_same_dim(columns[j].dim(), rows, "matrix column");
    for (std::size_t i = 0; i < rows; ++i) {
      if (columns[j].test(i)) m.set(i, j);
    }
  }
  return m;
}

Gf2Matrix Gf2Matrix::unflatten(std::size_t rows, std::size_t cols, const Gf2Vector& flat) {
  require_same_dim(flat.dim(), rows * cols, "unflatten");
  Gf2Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (flat.test(i * cols + j)) m.set(i, j);
    }
  }
  return m;
}

Gf2Vector Gf2Matrix::column(std::size_t c) const {
  Gf2Vector v(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    if (get(i, c)) v.set(i);
  }
  return v;
}

Gf2Vector Gf2Matrix::apply(const Gf2Vector& v) const {
  require_same_dim(v.dim(), cols_, "matrix-vector product");
  Gf2Vector out(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    if (rows_[i].dot(v)) out.set(i);
  }
  return out;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j)) t.set(j, i);
    }
  }
  return t;
}

Gf2Matrix Gf2Matrix::power(std::size_t k) const {
  if (!is_square()) throw DimensionMismatch("power of a non-square matrix");
  Gf2Matrix result = identity(cols_);
  Gf2Matrix base = *this;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

bool Gf2Matrix::is_zero() const noexcept {
  return std::all_of(rows_.begin(), rows_.end(), [](const Gf2Vector& r) { return r.is_zero(); });
}

Gf2Vector Gf2Matrix::flatten() const {
  Gf2Vector flat(rows() * cols_);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j)) flat.set(i * cols_ + j);
    }
  }
  return flat;
}

Gf2Matrix& Gf2Matrix::operator+=(const Gf2Matrix& other) {
  require_same_dim(rows(), other.rows(), "matrix addition (rows)");
  require_same_dim(cols_, other.cols_, "matrix addition (cols)");
  for (std::size_t i = 0; i < rows(); ++i) rows_[i] += other.rows_[i];
  return *this;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
  require_same_dim(a.cols(), b.rows(), "matrix product");
  Gf2Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Gf2Vector& arow = a.row(i);
    Gf2Vector& crow = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (arow.test(k)) crow += b.row(k);
    }
  }
  return c;
}

std::strong_ordering operator<=>(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (auto c = a.rows() <=> b.rows(); c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (auto c = a.rows_[i] <=> b.rows_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Gf2Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i != 0) os << '\n';
    os << rows_[i].to_string();
  }
  return os.str();
}

// ----------------------------------------------------------------- Subspace

Subspace Subspace::full(std::size_t n) {
  Subspace s(n);
  for (std::size_t i = 0; i < n; ++i) s.basis_.push_back(Gf2Vector::unit(n, i));
  return s;
}

Subspace Subspace::span(std::size_t n, std::span<const Gf2Vector> vectors) {
  std::vector<Gf2Vector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    require_same_dim(v.dim(), n, "subspace span");
    if (!v.is_zero()) rows.push_back(v);
  }
  const auto pivots = eliminate(rows, n);
  rows.resize(pivots.size());
  Subspace s(n);
  s.basis_ = std::move(rows);
  return s;
}

Subspace Subspace::from_canonical(std::size_t n, std::vector<Gf2Vector> rref_rows) {
  Subspace s(n);
  s.basis_ = std::move(rref_rows);
#ifndef NDEBUG
  std::size_t last = 0;
  for (std::size_t i = 0; i < s.basis_.size(); ++i) {
    assert(s.basis_[i].dim() == n);
    const std::size_t p = s.basis_[i].lowest_set();
    assert(p < n && (i == 0 || p > last));
    for (std::size_t j = 0; j < s.basis_.size(); ++j) assert(j == i || !s.basis_[j].test(p));
    last = p;
  }
#endif
  return s;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> p;
  p.reserve(basis_.size());
  for (const auto& b : basis_) p.push_back(b.lowest_set());
  return p;
}

Gf2Vector Subspace::reduce(Gf2Vector v) const {
  require_same_dim(v.dim(), ambient_, "subspace reduction");
  for (const auto& b : basis_) {
    if (v.test(b.lowest_set())) v += b;
  }
  return v;
}

bool Subspace::contains(const Gf2Vector& v) const { return reduce(v).is_zero(); }

bool Subspace::is_subspace_of(const Subspace& other) const {
  require_same_dim(ambient_, other.ambient_, "subspace containment");
  if (dim() > other.dim()) return false;
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const Gf2Vector& b) { return other.contains(b); });
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.basis_.size() <=> b.basis_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.basis_.size(); ++i) {
    if (auto c = a.basis_[i] <=> b.basis_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// --------------------------------------------------------- free operations

Gf2Matrix rref(Gf2Matrix m) {
  std::vector<Gf2Vector> rows = m.row_vectors();
  eliminate(rows, m.cols());
  return Gf2Matrix::from_rows(m.cols(), std::move(rows));
}

std::size_t rank(const Gf2Matrix& m) {
  std::vector<Gf2Vector> rows = m.row_vectors();
  return eliminate(rows, m.cols()).size();
}

Subspace kernel(const Gf2Matrix& m) {
  const std::size_t n = m.cols();
  std::vector<Gf2Vector> rows = m.row_vectors();
  const auto pivots = eliminate(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<Gf2Vector> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Gf2Vector v = Gf2Vector::unit(n, j);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i].test(j)) v.set(pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Subspace image(const Gf2Matrix& m) { return row_space(m.transpose()); }

Subspace row_space(const Gf2Matrix& m) { return Subspace::span(m.cols(), m.row_vectors()); }

bool is_invertible(const Gf2Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

std::optional<Gf2Matrix> inverse(const Gf2Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Gf2Vector> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Gf2Vector row(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      if (m.get(i, j)) row.set(j);
    }
    row.set(n + i);
    aug.push_back(std::move(row));
  }
  const auto pivots = eliminate(aug, n);
  if (pivots.size() != n) return std::nullopt;
  Gf2Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (aug[i].test(n + j)) inv.set(i, j);
    }
  }
  return inv;
}

std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b) {
  require_same_dim(b.dim(), m.rows(), "linear solve");
  const std::size_t n = m.cols();
  std::vector<Gf2Vector> aug;
  aug.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Gf2Vector row(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (m.get(i, j)) row.set(j);
    }
    if (b.test(i)) row.set(n);
    aug.push_back(std::move(row));
  }
  const auto pivots = eliminate(aug, n + 1);
  Gf2Vector x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == n) return std::nullopt;
    if (aug[i].test(n)) x.set(pivots[i]);
  }
  return x;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim(), "subspace sum");
  std::vector<Gf2Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim(), "subspace intersection");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace(n);
  // Zassenhaus: rows [a | a] and [b | 0]; rows with zero left half carry A ∩ B.
  std::vector<Gf2Vector> rows;
  rows.reserve(a.dim() + b.dim());
  for (const auto& v : a.basis()) {
    Gf2Vector row(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      if (v.test(j)) {
        row.set(j);
        row.set(n + j);
      }
    }
    rows.push_back(std::move(row));
  }
  for (const auto& v : b.basis()) {
    Gf2Vector row(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      if (v.test(j)) row.set(j);
    }
    rows.push_back(std::move(row));
  }
  const auto pivots = eliminate(rows, 2 * n);
  std::vector<Gf2Vector> meet;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < n) continue;
    Gf2Vector v(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i].test(n + j)) v.set(j);
    }
    meet.push_back(std::move(v));
  }
  return Subspace::span(n, meet);
}

bool contains(const Subspace& s, const Gf2Vector& v) { return s.contains(v); }

Subspace map_subspace(const Gf2Matrix& m, const Subspace& s) {
  require_same_dim(m.cols(), s.ambient_dim(), "map_subspace");
  std::vector<Gf2Vector> images;
  images.reserve(s.dim());
  for (const auto& b : s.basis()) images.push_back(m.apply(b));
  return Subspace::span(m.rows(), images);
}

std::vector<std::size_t> independent_subset(std::span<const Gf2Vector> vectors) {
  std::vector<std::size_t> chosen;
  if (vectors.empty()) return chosen;
  const std::size_t n = vectors.front().dim();
  // Reduced basis kept sorted by pivot; each candidate reduced against it.
  std::vector<Gf2Vector> reduced;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    require_same_dim(vectors[i].dim(), n, "independent_subset");
    Gf2Vector v = vectors[i];
    for (const auto& r : reduced) {
      if (v.test(r.lowest_set())) v += r;
    }
    if (v.is_zero()) continue;
    const std::size_t p = v.lowest_set();
    for (auto& r : reduced) {
      if (r.test(p)) r += v;
    }
    reduced.push_back(std::move(v));
    chosen.push_back(i);
  }
  return chosen;
}

}  // namespace charsub

std::size_t std::hash<charsub::Gf2Vector>::operator()(const charsub::Gf2Vector& v) const noexcept {
  return charsub::hash_words(v.words(), v.dim());
}

std::size_t std::hash<charsub::Subspace>::operator()(const charsub::Subspace& s) const noexcept {
  std::size_t h = s.ambient_dim() * 31 + s.dim();
  for (const auto& b : s.basis()) h = charsub::hash_words(b.words(), h);
  return h;
}
