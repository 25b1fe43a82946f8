#pragma once

// Structure theory of a nilpotent operator f on V = GF(2)^n: kernel and image
// chains, exponents and heights of vectors, the Ulm sequence, elementary
// divisors, generator tuples (Jordan chain generators) and the projections
// onto the summands of equal exponent.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "charsub/gf2.hpp"

namespace charsub {

/// A validated nilpotent n x n matrix with its chains cached.
///
/// kernel_chain()[j] = Ker f^j and image_chain()[j] = f^j V for
/// j = 0..index(); the first is strictly increasing, the second strictly
/// decreasing.
class NilpotentOperator {
 public:
  /// Throws NotSquare or NotNilpotent.
  explicit NilpotentOperator(Gf2Matrix m);

  const Gf2Matrix& matrix() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.rows(); }
  /// Smallest k with f^k = 0.
  std::size_t index() const noexcept { return powers_.size() - 1; }
  /// f^k; k above index() yields the zero matrix.
  const Gf2Matrix& power(std::size_t k) const;

  const std::vector<Subspace>& kernel_chain() const noexcept { return kernel_chain_; }
  const std::vector<Subspace>& image_chain() const noexcept { return image_chain_; }
  /// Ker f^j, saturating at V.
  const Subspace& kernel_of_power(std::size_t j) const;
  /// f^j V, saturating at 0.
  const Subspace& image_of_power(std::size_t j) const;

  Gf2Vector apply(const Gf2Vector& v) const { return mat_.apply(v); }

 private:
  Gf2Matrix mat_;
  std::vector<Gf2Matrix> powers_;
  std::vector<Subspace> kernel_chain_;
  std::vector<Subspace> image_chain_;
};

NilpotentOperator validate_nilpotent(Gf2Matrix m);

/// Height of a vector: a finite value, or infinity for the zero vector.
/// Reading the value of an infinite height throws std::logic_error.
class Height {
 public:
  static constexpr Height infinity() noexcept { return Height(); }
  constexpr explicit Height(std::size_t value) noexcept : value_(value), finite_(true) {}

  constexpr bool is_infinite() const noexcept { return !finite_; }
  std::size_t value() const;

  friend constexpr bool operator==(const Height&, const Height&) = default;
  friend constexpr std::strong_ordering operator<=>(const Height& a, const Height& b) noexcept {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

 private:
  constexpr Height() noexcept = default;
  std::size_t value_ = 0;
  bool finite_ = false;
};

/// Smallest l >= 0 with f^l x = 0.
std::size_t exponent(const NilpotentOperator& f, const Gf2Vector& x);
/// Largest q with x in f^q V; infinity for x = 0.
Height height(const NilpotentOperator& f, const Gf2Vector& x);

/// d(r) = number of Jordan blocks of size r, r = 1..length().
class UlmSequence {
 public:
  UlmSequence() = default;
  /// counts[r-1] = d(r); trailing zeros are dropped.
  explicit UlmSequence(std::vector<std::size_t> counts);
  static UlmSequence from_block_sizes(std::span<const std::size_t> sizes);

  /// d(r) for r >= 1; zero past the end.
  std::size_t d(std::size_t r) const noexcept;
  /// Largest r with d(r) > 0 (the nilpotency index); 0 for the empty sequence.
  std::size_t length() const noexcept { return counts_.size(); }
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }
  /// sum_r r d(r).
  std::size_t total_dimension() const noexcept;
  /// Block sizes r with d(r) > 0, ascending.
  std::vector<std::size_t> distinct_sizes() const;

  friend bool operator==(const UlmSequence&, const UlmSequence&) = default;

  /// "(1, 0, 1)".
  std::string to_string() const;

 private:
  std::vector<std::size_t> counts_;
};

/// d(r) = dim(Ker f ∩ f^{r-1}V) - dim(Ker f ∩ f^r V) for r = 1..index.
UlmSequence ulm_sequence(const NilpotentOperator& f);
/// Each r repeated d(r) times, ascending.
std::vector<std::size_t> elementary_divisors(const UlmSequence& u);

/// One block of equal exponent inside a generator tuple: generators
/// [first, first + count) all have exponent `exponent`.
struct ExponentClass {
  std::size_t exponent = 0;
  std::size_t first = 0;
  std::size_t count = 0;
};

/// Generators (u_1, ..., u_k) with V = <u_1> ⊕ ... ⊕ <u_k> and
/// nondecreasing exponents t_1 <= ... <= t_k, grouped into exponent classes
/// a_1 < ... < a_m.
class GeneratorTuple {
 public:
  /// Validates the direct-sum property and sorts by exponent (stable).
  /// Throws NotAGeneratorTuple.
  static GeneratorTuple make(const NilpotentOperator& f, std::vector<Gf2Vector> generators);

  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<Gf2Vector>& generators() const noexcept { return generators_; }
  const Gf2Vector& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<std::size_t>& exponents() const noexcept { return exponents_; }
  const std::vector<ExponentClass>& classes() const noexcept { return classes_; }
  /// Position of the class containing generator i.
  std::size_t class_of(std::size_t i) const;

  /// Columns f^j u_i, generator-major: u_1, f u_1, ..., f^{t_1-1} u_1, u_2, ...
  std::vector<Gf2Vector> chain_vectors(const NilpotentOperator& f) const;
  /// The matrix whose columns are chain_vectors(); invertible.
  Gf2Matrix chain_basis(const NilpotentOperator& f) const;

 private:
  std::vector<Gf2Vector> generators_;
  std::vector<std::size_t> exponents_;
  std::vector<ExponentClass> classes_;
};

/// Deterministic Jordan-chain generators.
///
/// For a = index down to 1 the new generators of exponent a are taken from
/// the canonical basis of Ker f^a, in order, whenever they are independent
/// of Ker f^{a-1} + f(Ker f^{a+1}) plus the generators already picked at
/// this level. The result is sorted by exponent, pick order kept within a
/// class.
GeneratorTuple generator_tuple(const NilpotentOperator& f);

/// <x> = span{x, f x, f^2 x, ...}.
Subspace cyclic_subspace(const NilpotentOperator& f, const Gf2Vector& x);
/// <B> = sum of <b> over b in B.
Subspace cyclic_span(const NilpotentOperator& f, std::span<const Gf2Vector> vectors);

/// Matrix of the projection onto <U_{a_mu}> along the other classes.
/// `class_index` is zero-based (0 <= class_index < m).
Gf2Matrix exponent_projection(const NilpotentOperator& f, const GeneratorTuple& u,
                              std::size_t class_index);

/// The t x t block N_t mapping e_i to e_{i+1}.
Gf2Matrix jordan_block(std::size_t t);
/// diag(N_{t_1}, ..., N_{t_k}) in the given order.
Gf2Matrix jordan_matrix(std::span<const std::size_t> block_sizes);

/// All partitions of n as nondecreasing part lists, in lexicographic order.
std::vector<std::vector<std::size_t>> partitions(std::size_t n);

}  // namespace charsub
