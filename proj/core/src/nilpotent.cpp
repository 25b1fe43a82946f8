#include "charsub/nilpotent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "charsub/errors.hpp"

namespace charsub {

// ------------------------------------------------------- NilpotentOperator

NilpotentOperator::NilpotentOperator(Gf2Matrix m) : mat_(std::move(m)) {
  if (!mat_.is_square()) {
    throw NotSquare("operator must be square, got " + std::to_string(mat_.rows()) + "x" +
                    std::to_string(mat_.cols()));
  }
  const std::size_t n = mat_.rows();
  powers_.push_back(Gf2Matrix::identity(n));
  while (!powers_.back().is_zero()) {
    if (powers_.size() > n) throw NotNilpotent("f^n != 0 for n = " + std::to_string(n));
    powers_.push_back(powers_.back() * mat_);
  }
  kernel_chain_.reserve(powers_.size());
  image_chain_.reserve(powers_.size());
  for (const auto& p : powers_) {
    kernel_chain_.push_back(kernel(p));
    image_chain_.push_back(image(p));
  }
}

const Gf2Matrix& NilpotentOperator::power(std::size_t k) const {
  return powers_[std::min(k, index())];
}

const Subspace& NilpotentOperator::kernel_of_power(std::size_t j) const {
  return kernel_chain_[std::min(j, index())];
}

const Subspace& NilpotentOperator::image_of_power(std::size_t j) const {
  return image_chain_[std::min(j, index())];
}

NilpotentOperator validate_nilpotent(Gf2Matrix m) { return NilpotentOperator(std::move(m)); }

// ------------------------------------------------------- exponent / height

std::size_t Height::value() const {
  if (!finite_) throw std::logic_error("height of the zero vector is infinite");
  return value_;
}

std::size_t exponent(const NilpotentOperator& f, const Gf2Vector& x) {
  if (x.dim() != f.dim()) throw DimensionMismatch("exponent: vector dimension mismatch");
  std::size_t e = 0;
  Gf2Vector y = x;
  while (!y.is_zero()) {
    y = f.apply(y);
    ++e;
  }
  return e;
}

Height height(const NilpotentOperator& f, const Gf2Vector& x) {
  if (x.dim() != f.dim()) throw DimensionMismatch("height: vector dimension mismatch");
  if (x.is_zero()) return Height::infinity();
  std::size_t q = 0;
  while (q + 1 < f.image_chain().size() && f.image_chain()[q + 1].contains(x)) ++q;
  return Height(q);
}

// ------------------------------------------------------------ UlmSequence

UlmSequence::UlmSequence(std::vector<std::size_t> counts) : counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

UlmSequence UlmSequence::from_block_sizes(std::span<const std::size_t> sizes) {
  std::vector<std::size_t> counts;
  for (std::size_t t : sizes) {
    if (t == 0) throw PreconditionViolation("block sizes must be positive");
    if (counts.size() < t) counts.resize(t, 0);
    ++counts[t - 1];
  }
  return UlmSequence(std::move(counts));
}

std::size_t UlmSequence::d(std::size_t r) const noexcept {
  return (r == 0 || r > counts_.size()) ? 0 : counts_[r - 1];
}

std::size_t UlmSequence::total_dimension() const noexcept {
  std::size_t n = 0;
  for (std::size_t r = 1; r <= counts_.size(); ++r) n += r * counts_[r - 1];
  return n;
}

std::vector<std::size_t> UlmSequence::distinct_sizes() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 1; r <= counts_.size(); ++r) {
    if (counts_[r - 1] > 0) out.push_back(r);
  }
  return out;
}

std::string UlmSequence::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i != 0) s += ", ";
    s += std::to_string(counts_[i]);
  }
  return s + ")";
}

UlmSequence ulm_sequence(const NilpotentOperator& f) {
  const Subspace& socle = f.kernel_of_power(1);
  std::vector<std::size_t> dims;  // dim(Ker f ∩ f^r V), r = 0..index
  for (std::size_t r = 0; r <= f.index(); ++r) {
    dims.push_back(intersect(socle, f.image_of_power(r)).dim());
  }
  std::vector<std::size_t> counts;
  for (std::size_t r = 1; r <= f.index(); ++r) counts.push_back(dims[r - 1] - dims[r]);
  return UlmSequence(std::move(counts));
}

std::vector<std::size_t> elementary_divisors(const UlmSequence& u) {
  std::vector<std::size_t> out;
  for (std::size_t r = 1; r <= u.length(); ++r) out.insert(out.end(), u.d(r), r);
  return out;
}

// --------------------------------------------------------- GeneratorTuple

GeneratorTuple GeneratorTuple::make(const NilpotentOperator& f, std::vector<Gf2Vector> generators) {
  std::vector<std::pair<std::size_t, Gf2Vector>> keyed;
  keyed.reserve(generators.size());
  for (auto& g : generators) {
    if (g.dim() != f.dim()) throw DimensionMismatch("generator dimension mismatch");
    const std::size_t e = exponent(f, g);
    if (e == 0) throw NotAGeneratorTuple("zero vector in generator tuple");
    keyed.emplace_back(e, std::move(g));
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  GeneratorTuple u;
  for (auto& [e, g] : keyed) {
    u.exponents_.push_back(e);
    u.generators_.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < u.exponents_.size(); ++i) {
    if (u.classes_.empty() || u.classes_.back().exponent != u.exponents_[i]) {
      u.classes_.push_back(ExponentClass{u.exponents_[i], i, 0});
    }
    ++u.classes_.back().count;
  }

  const std::size_t total = std::accumulate(u.exponents_.begin(), u.exponents_.end(), std::size_t{0});
  if (total != f.dim()) {
    throw NotAGeneratorTuple("chain lengths sum to " + std::to_string(total) + ", expected " +
                             std::to_string(f.dim()));
  }
  if (rank(Gf2Matrix::from_rows(f.dim(), u.chain_vectors(f))) != f.dim()) {
    throw NotAGeneratorTuple("cyclic subspaces of the generators do not form a direct sum");
  }
  return u;
}

std::size_t GeneratorTuple::class_of(std::size_t i) const {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (i >= classes_[c].first && i < classes_[c].first + classes_[c].count) return c;
  }
  throw PreconditionViolation("generator index out of range");
}

std::vector<Gf2Vector> GeneratorTuple::chain_vectors(const NilpotentOperator& f) const {
  std::vector<Gf2Vector> out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    Gf2Vector v = generators_[i];
    for (std::size_t j = 0; j < exponents_[i]; ++j) {
      out.push_back(v);
      v = f.apply(v);
    }
  }
  return out;
}

Gf2Matrix GeneratorTuple::chain_basis(const NilpotentOperator& f) const {
  const auto cols = chain_vectors(f);
  return Gf2Matrix::from_columns(f.dim(), cols);
}

GeneratorTuple generator_tuple(const NilpotentOperator& f) {
  const std::size_t n = f.dim();
  std::vector<Gf2Vector> picked;
  for (std::size_t a = f.index(); a >= 1; --a) {
    // Vectors of exponent <= a that are already accounted for: lower
    // kernels and f-images of longer chains.
    Subspace covered = sum(f.kernel_of_power(a - 1),
                           map_subspace(f.matrix(), f.kernel_of_power(a + 1)));
    for (const Gf2Vector& candidate : f.kernel_of_power(a).basis()) {
      if (covered.contains(candidate)) continue;
      picked.push_back(candidate);
      covered = sum(covered, Subspace::span(n, {candidate}));
    }
  }
  return GeneratorTuple::make(f, std::move(picked));
}

// -------------------------------------------------- cyclic / projections

Subspace cyclic_subspace(const NilpotentOperator& f, const Gf2Vector& x) {
  return cyclic_span(f, std::span<const Gf2Vector>(&x, 1));
}

Subspace cyclic_span(const NilpotentOperator& f, std::span<const Gf2Vector> vectors) {
  std::vector<Gf2Vector> chain;
  for (const auto& x : vectors) {
    if (x.dim() != f.dim()) throw DimensionMismatch("cyclic_span: vector dimension mismatch");
    Gf2Vector y = x;
    while (!y.is_zero()) {
      chain.push_back(y);
      y = f.apply(y);
    }
  }
  return Subspace::span(f.dim(), chain);
}

Gf2Matrix exponent_projection(const NilpotentOperator& f, const GeneratorTuple& u,
                              std::size_t class_index) {
  if (class_index >= u.classes().size()) {
    throw PreconditionViolation("exponent class index " + std::to_string(class_index) +
                                " out of range (m = " + std::to_string(u.classes().size()) + ")");
  }
  const Gf2Matrix basis = u.chain_basis(f);
  const Gf2Matrix basis_inv = *inverse(basis);
  const ExponentClass& cls = u.classes()[class_index];

  // Positions of the chosen class's chain vectors inside the chain basis.
  Gf2Matrix select(f.dim(), f.dim());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const bool inside = i >= cls.first && i < cls.first + cls.count;
    for (std::size_t j = 0; j < u.exponents()[i]; ++j, ++pos) {
      if (inside) select.set(pos, pos);
    }
  }
  return basis * select * basis_inv;
}

// ------------------------------------------------------- Jordan matrices

Gf2Matrix jordan_block(std::size_t t) {
  Gf2Matrix n(t, t);
  for (std::size_t i = 0; i + 1 < t; ++i) n.set(i + 1, i);
  return n;
}

Gf2Matrix jordan_matrix(std::span<const std::size_t> block_sizes) {
  const std::size_t n = std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
  Gf2Matrix m(n, n);
  std::size_t offset = 0;
  for (std::size_t t : block_sizes) {
    for (std::size_t i = 0; i + 1 < t; ++i) m.set(offset + i + 1, offset + i);
    offset += t;
  }
  return m;
}

std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  // Parts nondecreasing; each recursion level picks a part >= the previous.
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t min_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t p = min_part; p <= remaining; ++p) {
      if (remaining - p != 0 && remaining - p < p) continue;
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  if (n > 0) rec(rec, n, 1);
  return out;
}

}  // namespace charsub
