#pragma once

// When do characteristic subspaces fail to be hyperinvariant over GF(2)?
// Exactly when the Jordan form has one block of size r and one block of
// size s with s > r + 1, both sizes of multiplicity one. This module holds
// both forms of that criterion and the explicit counterexample <Y>.

#include <cstddef>
#include <optional>
#include <utility>

#include "charsub/classify.hpp"
#include "charsub/gf2.hpp"
#include "charsub/nilpotent.hpp"

namespace charsub {

/// Some r < s with d(r) = d(s) = 1 and s > r + 1.
bool shoda_condition(const UlmSequence& u);

/// At most two Ulm invariants equal 1, and two only at successive sizes.
/// Always the negation of shoda_condition.
bool ulm_form_condition(const UlmSequence& u);

/// Lexicographically smallest (a_rho, a_tau) satisfying shoda_condition.
std::optional<std::pair<std::size_t, std::size_t>> shoda_block_sizes(const UlmSequence& u);

struct ShodaWitness {
  std::size_t rho_index = 0;  ///< zero-based exponent-class positions
  std::size_t tau_index = 0;
  std::size_t a_rho = 0;
  std::size_t a_tau = 0;
  Gf2Vector z;
  Subspace y_span;
};

/// z = f^{a_rho - 1} u_(rho) + f^{a_tau - 2} u_(tau). Throws
/// ShodaConditionFails unless both classes are singletons with
/// a_rho + 1 < a_tau.
Gf2Vector construct_z(const NilpotentOperator& f, const GeneratorTuple& u, std::size_t rho_index,
                      std::size_t tau_index);

/// <Y> = <z> ⊕ <U_{[rho+1, tau-1]}>[f] ⊕ <U_{[tau+1, m]}>[f^2], where B[f^j]
/// is B ∩ Ker f^j and empty ranges contribute 0.
Subspace construct_y_span(const NilpotentOperator& f, const GeneratorTuple& u,
                          std::size_t rho_index, std::size_t tau_index);

/// The witness for the given class positions (z and <Y> filled in).
ShodaWitness make_shoda_witness(const NilpotentOperator& f, const GeneratorTuple& u,
                                std::size_t rho_index, std::size_t tau_index);

inline constexpr std::size_t kDefaultOracleCapLog2 = 20;

/// span{y : e(y) = 2, h(y) = a_rho - 1, h(f y) = a_tau - 1} by brute force
/// over f^{a_rho - 1} V. Throws CapExceeded when that image has dimension
/// above cap_log2.
Subspace enumerate_y_oracle(const NilpotentOperator& f, std::size_t a_rho, std::size_t a_tau,
                            std::size_t cap_log2 = kDefaultOracleCapLog2);

struct Counterexample {
  Subspace subspace;  ///< <Y>
  ShodaWitness witness;
  /// pi_rho, the projection onto <u_(rho)>; it commutes with f.
  Gf2Matrix projection;
  /// pi_rho z = f^{a_rho - 1} u_(rho), which lies outside <Y>.
  Gf2Vector projected_z;
  CharacteristicMethod method = CharacteristicMethod::Exhaustive;
};

/// A verified characteristic, non-hyperinvariant subspace when
/// shoda_condition holds for f; nullopt otherwise.
std::optional<Counterexample> counterexample(const NilpotentOperator& f,
                                             const ClassifierOptions& options = {});

}  // namespace charsub
