#pragma once

// The commutant End_f(V) = {g : g f = f g}, its unit group Aut_f(V), and
// explicit automorphism constructions driven by generator tuples.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "charsub/gf2.hpp"
#include "charsub/nilpotent.hpp"

namespace charsub {

inline constexpr std::uint64_t kDefaultAutomorphismCap = std::uint64_t{1} << 20;

/// A linear basis g_1, ..., g_d of End_f(V).
struct CommutantBasis {
  std::vector<Gf2Matrix> basis;
  std::size_t dim() const noexcept { return basis.size(); }
};

/// Solves g f + f g = 0 as a linear system in the n^2 entries of g.
CommutantBasis commutant_basis(const NilpotentOperator& f);

/// sum_{i,j} min(t_i, t_j) over the elementary divisors.
std::size_t expected_commutant_dimension(std::span<const std::size_t> divisors);

/// Every g commutes with f.
bool commutes(const Gf2Matrix& g, const NilpotentOperator& f);

struct AutomorphismSet {
  std::vector<Gf2Matrix> elements;
  /// True iff `elements` is the whole of Aut_f(V).
  bool complete = false;
};

/// All invertible elements of the commutant, sorted by packed-bit order.
/// Throws CapExceeded (with required = 2^dim) when 2^dim exceeds `cap`.
AutomorphismSet enumerate_automorphisms(const CommutantBasis& c,
                                        std::uint64_t cap = kDefaultAutomorphismCap);

/// Up to `attempts` uniformly random commutant elements, keeping the
/// invertible ones (deduplicated). Always complete = false.
AutomorphismSet sample_automorphisms(const CommutantBasis& c, std::size_t attempts,
                                     std::uint64_t seed);

/// Automorphisms of f whose linear span equals the span of all of Aut_f(V).
///
/// A subspace is fixed by every automorphism iff it is invariant under the
/// span of Aut_f(V), so this list is an exact substitute for enumerating the
/// group. It is computed from the action of End_f(V) on the socle layers
/// Q_r = (Ker f ∩ f^{r-1}V) / (Ker f ∩ f^r V): an endomorphism is a unit iff
/// it acts invertibly on every layer, the kernel of the layer action is a
/// nilpotent ideal, and over GF(2) the span of GL_d is all of M_d for d >= 2
/// while GL_1 = {1}. The returned elements are verified units.
std::vector<Gf2Matrix> automorphism_span(const NilpotentOperator& f, const CommutantBasis& c);

/// Linearly independent subfamily of `matrices` spanning the same space.
std::vector<Gf2Matrix> span_basis(std::span<const Gf2Matrix> matrices);

/// The unique alpha in Aut_f(V) with alpha(u_i) = images[i], defined on
/// chains by alpha(f^j u_i) = f^j images[i]. Throws NotAGeneratorTuple when
/// the images have the wrong exponents or do not decompose V.
Gf2Matrix automorphism_from_tuple_images(const NilpotentOperator& f, const GeneratorTuple& u,
                                         std::span<const Gf2Vector> images);

struct ExchangeResult {
  std::size_t index = 0;  ///< zero-based position that was replaced
  std::vector<Gf2Vector> generators;
};

/// Exchange step for generators of one common exponent a: returns the first
/// j whose coefficient of u_j in x is nonzero (so the Toeplitz coefficient
/// matrix C_j is nonsingular) and the tuple with u_j replaced by x.
/// Preconditions: every u_i has exponent a, x is nonzero, lies in
/// <u_1, ..., u_k> and has height 0 there (x not in f<u_1, ..., u_k>).
ExchangeResult exchange_generator(const NilpotentOperator& f, std::span<const Gf2Vector> generators,
                                  const Gf2Vector& x);

/// alpha in Aut_f(V) with alpha(y) = w + y and alpha(u) = u for every other
/// generator, where w = u[w_index], y = u[y_index] and e(w) < e(y).
/// Throws ExponentOrderViolation otherwise.
Gf2Matrix shift_automorphism(const NilpotentOperator& f, const GeneratorTuple& u,
                             std::size_t w_index, std::size_t y_index);

/// How the block coefficient of a beta/gamma pair was chosen.
enum class BetaGammaConstruction {
  /// C = S + E_11 with S the symmetric shift (ones on both off-diagonals).
  ShiftPlusCorner,
  /// C = companion matrix of x^k + x + 1, used when S + diag(0,1,...,1) is singular.
  Companion,
};

struct BetaGammaPair {
  Gf2Matrix beta;
  Gf2Matrix gamma;
  BetaGammaConstruction construction = BetaGammaConstruction::ShiftPlusCorner;
};

/// For f with k > 1 Jordan blocks all of size a: beta, gamma in Aut_f(V)
/// with beta + gamma = identity.
///
/// In Jordan coordinates (k blocks N_a) both are C ⊗ I_a with C a k x k
/// matrix such that C and C + I are invertible: first C = S + E_11 with S
/// the symmetric tridiagonal shift, so beta = M + P_1, gamma = M + P_c with
/// M = S ⊗ I_a, P_1 = E_11 ⊗ I_a, P_c = (I - E_11) ⊗ I_a. When C + I is
/// singular (k ≡ 1 mod 3) the companion matrix of x^k + x + 1 is used.
/// The pair is conjugated back through the generator tuple's chain basis.
/// Throws NotHomogeneous or SingleBlock.
BetaGammaPair beta_gamma_pair(const NilpotentOperator& f);

}  // namespace charsub
