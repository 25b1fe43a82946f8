#pragma once

// Exhaustive lattice census: walk every subspace of GF(2)^n and classify the
// invariant ones. Practical up to n = 8.

#include <cstddef>
#include <vector>

#include "charsub/classify.hpp"
#include "charsub/enumerate.hpp"

namespace charsub {

inline constexpr std::size_t kDefaultCensusMaxDim = 6;

struct CensusOptions {
  std::size_t max_dim = kDefaultCensusMaxDim;
  ClassifierOptions classifier;
  /// Skip the marked test (the most expensive predicate) when false.
  bool evaluate_marked = true;
};

struct CensusEntry {
  Subspace subspace;
  bool characteristic = false;
  bool hyperinvariant = false;
  bool marked = false;
};

struct Census {
  std::uint64_t subspaces_scanned = 0;
  /// One entry per invariant subspace, in enumeration order.
  std::vector<CensusEntry> invariant;
  CharacteristicMethod method = CharacteristicMethod::Exhaustive;
  bool complete = true;

  std::vector<Subspace> invariant_subspaces() const;
  std::vector<Subspace> characteristic_subspaces() const;
  std::vector<Subspace> hyperinvariant_subspaces() const;
  std::vector<Subspace> characteristic_not_hyperinvariant() const;
  std::size_t characteristic_count() const;
  std::size_t hyperinvariant_count() const;
  /// Chinv(V) strictly larger than Hinv(V).
  bool chinv_exceeds_hinv() const { return characteristic_count() > hyperinvariant_count(); }
};

/// Throws CapExceeded when f.dim() > options.max_dim.
Census lattice_census(const NilpotentOperator& f, const CensusOptions& options = {});
Census lattice_census(const Classifier& classifier, std::size_t max_dim = kDefaultCensusMaxDim,
                      bool evaluate_marked = true);

}  // namespace charsub
