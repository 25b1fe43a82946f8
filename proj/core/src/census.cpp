#include "charsub/census.hpp"

#include <algorithm>

namespace charsub {

std::vector<Subspace> Census::invariant_subspaces() const {
  std::vector<Subspace> out;
  for (const auto& e : invariant) out.push_back(e.subspace);
  return out;
}

std::vector<Subspace> Census::characteristic_subspaces() const {
  std::vector<Subspace> out;
  for (const auto& e : invariant) {
    if (e.characteristic) out.push_back(e.subspace);
  }
  return out;
}

std::vector<Subspace> Census::hyperinvariant_subspaces() const {
  std::vector<Subspace> out;
  for (const auto& e : invariant) {
    if (e.hyperinvariant) out.push_back(e.subspace);
  }
  return out;
}

std::vector<Subspace> Census::characteristic_not_hyperinvariant() const {
  std::vector<Subspace> out;
  for (const auto& e : invariant) {
    if (e.characteristic && !e.hyperinvariant) out.push_back(e.subspace);
  }
  return out;
}

std::size_t Census::characteristic_count() const {
  return static_cast<std::size_t>(std::count_if(invariant.begin(), invariant.end(),
                                                [](const CensusEntry& e) { return e.characteristic; }));
}

std::size_t Census::hyperinvariant_count() const {
  return static_cast<std::size_t>(std::count_if(invariant.begin(), invariant.end(),
                                                [](const CensusEntry& e) { return e.hyperinvariant; }));
}

Census lattice_census(const NilpotentOperator& f, const CensusOptions& options) {
  if (f.dim() > options.max_dim) {
    // Fail before paying for the commutant.
    for_each_subspace(f.dim(), [](const Subspace&) { return false; }, options.max_dim);
  }
  const Classifier classifier(f, options.classifier);
  return lattice_census(classifier, options.max_dim, options.evaluate_marked);
}

Census lattice_census(const Classifier& classifier, std::size_t max_dim, bool evaluate_marked) {
  Census census;
  census.method = classifier.characteristic_method();
  census.complete = census.method != CharacteristicMethod::Sampled;
  const NilpotentOperator& f = classifier.op();
  for_each_subspace(
      f.dim(),
      [&](const Subspace& s) {
        ++census.subspaces_scanned;
        if (!classifier.is_invariant(s)) return true;
        CensusEntry e;
        e.subspace = s;
        e.hyperinvariant = classifier.hyperinvariant(s).hyperinvariant;
        e.characteristic = classifier.characteristic(s).characteristic;
        if (evaluate_marked) e.marked = classifier.is_marked(s);
        census.invariant.push_back(std::move(e));
        return true;
      },
      max_dim);
  return census;
}

}  // namespace charsub
