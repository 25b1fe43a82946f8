#pragma once

// Invariant, marked, characteristic and hyperinvariant subspaces of a
// nilpotent operator; the W(r, U) family; the hyperinvariant lattice.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "charsub/commutant.hpp"
#include "charsub/gf2.hpp"
#include "charsub/nilpotent.hpp"

namespace charsub {

/// g and a vector v in the subspace with g v outside it.
struct Witness {
  Gf2Matrix map;
  Gf2Vector vector;
  Gf2Vector image;
};

struct HyperinvariantVerdict {
  bool hyperinvariant = false;
  std::optional<Witness> witness;
};

enum class CharacteristicMethod {
  /// All of Aut_f(V) was enumerated.
  Exhaustive,
  /// Exact test against a unit basis of span(Aut_f(V)) built from the
  /// commutant's action on the socle layers.
  UnitSpan,
  /// Random units only; a "true" verdict is not a proof.
  Sampled,
};

std::string to_string(CharacteristicMethod m);

struct CharacteristicVerdict {
  bool characteristic = false;
  /// True when the verdict is exact (Exhaustive or UnitSpan).
  bool complete = false;
  CharacteristicMethod method = CharacteristicMethod::Exhaustive;
  /// |Aut_f(V)| when the method is Exhaustive.
  std::optional<std::uint64_t> automorphism_count;
  /// A failing automorphism.
  std::optional<Witness> witness;
};

struct ClassifierOptions {
  /// Enumerate Aut_f(V) when 2^dim(End_f V) is at most this.
  std::uint64_t automorphism_cap = kDefaultAutomorphismCap;
  /// Above the cap, use the exact unit-span test (otherwise sample).
  bool allow_unit_span = true;
  std::size_t sample_attempts = 4096;
  std::uint64_t sample_seed = 0x5eed;
};

struct ClassificationReport {
  Subspace subspace;
  bool invariant = false;
  bool marked = false;
  bool characteristic = false;
  bool characteristic_complete = true;
  CharacteristicMethod characteristic_method = CharacteristicMethod::Exhaustive;
  std::optional<std::uint64_t> automorphism_count;
  bool hyperinvariant = false;
  /// f itself when the subspace is not invariant.
  std::optional<Witness> invariance_witness;
  std::optional<Witness> hyperinvariance_witness;
  std::optional<Witness> characteristic_witness;
};

/// Batch classifier for one operator. Builds the commutant basis and the
/// automorphism test set once, so repeated queries are cheap.
class Classifier {
 public:
  explicit Classifier(NilpotentOperator f, ClassifierOptions options = {});

  const NilpotentOperator& op() const noexcept { return f_; }
  const CommutantBasis& commutant() const noexcept { return commutant_; }
  CharacteristicMethod characteristic_method() const noexcept { return method_; }
  /// Automorphisms tested by the characteristic check. For Exhaustive this is
  /// a spanning subset of the enumerated group; the full count is kept apart.
  const std::vector<Gf2Matrix>& automorphism_tests() const noexcept { return unit_tests_; }
  std::optional<std::uint64_t> automorphism_count() const noexcept { return unit_count_; }

  bool is_invariant(const Subspace& s) const;
  HyperinvariantVerdict hyperinvariant(const Subspace& s) const;
  CharacteristicVerdict characteristic(const Subspace& s) const;
  bool is_marked(const Subspace& s) const;
  ClassificationReport classify(const Subspace& s) const;

 private:
  NilpotentOperator f_;
  CommutantBasis commutant_;
  CharacteristicMethod method_;
  std::vector<Gf2Matrix> unit_tests_;
  std::optional<std::uint64_t> unit_count_;
};

/// First (g, v) with g in `maps`, v in the basis of s and g v outside s.
std::optional<Witness> find_escape(std::span<const Gf2Matrix> maps, const Subspace& s);

/// f s ⊆ s.
bool is_invariant(const NilpotentOperator& f, const Subspace& s);
/// g s ⊆ s for every g in a commutant basis (enough, because s is closed
/// under addition). A non-invariant s yields false with f as the witness.
HyperinvariantVerdict is_hyperinvariant(const NilpotentOperator& f, const Subspace& s);
CharacteristicVerdict is_characteristic(const NilpotentOperator& f, const Subspace& s,
                                        const ClassifierOptions& options = {});
/// f^s W ∩ f^{s+r} V = f^s (W ∩ f^r V) for all 0 <= s, r <= index.
/// The zero subspace is marked. Requires s invariant (non-invariant yields false).
bool is_marked(const NilpotentOperator& f, const Subspace& w);
ClassificationReport classify(const NilpotentOperator& f, const Subspace& s,
                              const ClassifierOptions& options = {});

/// r with 0 <= r_i <= t_i.
class AdmissibleTuple {
 public:
  /// Throws InadmissibleTuple.
  AdmissibleTuple(std::span<const std::size_t> exponents, std::vector<std::size_t> shifts);
  const std::vector<std::size_t>& shifts() const noexcept { return shifts_; }
  std::size_t operator[](std::size_t i) const { return shifts_.at(i); }
  std::size_t size() const noexcept { return shifts_.size(); }

 private:
  std::vector<std::size_t> shifts_;
};

/// All admissible tuples for the given exponents, odometer order.
std::vector<AdmissibleTuple> admissible_tuples(std::span<const std::size_t> exponents);

/// W(r, U) = <f^{r_1} u_1> ⊕ ... ⊕ <f^{r_k} u_k>.
Subspace w_of_r(const NilpotentOperator& f, const GeneratorTuple& u, const AdmissibleTuple& r);

/// r nondecreasing and t - r nondecreasing.
bool qv_condition(std::span<const std::size_t> exponents, const AdmissibleTuple& r);

/// Closure of {Ker f^k, f^k V : 0 <= k <= index} under sum and intersection,
/// sorted by (dimension, basis).
std::vector<Subspace> hinv_lattice(const NilpotentOperator& f);

struct LargestHyperinvariant {
  Subspace subspace;
  /// c_i with X ∩ <U_{a_i}> = f^{c_i} <U_{a_i}>; nullopt where the
  /// intersection has another shape (only possible for non-characteristic X).
  std::vector<std::optional<std::size_t>> shifts;
};

/// X̃ = ⊕_i (X ∩ <U_{a_i}>). With `verify`, first checks that x is
/// characteristic (NotCharacteristic otherwise).
LargestHyperinvariant largest_hyperinvariant_inside(const NilpotentOperator& f,
                                                    const GeneratorTuple& u, const Subspace& x,
                                                    bool verify = false);

}  // namespace charsub
