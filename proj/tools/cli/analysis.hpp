#pragma once

// The document printed by `charsub analyze`, with a lossless JSON mapping.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "charsub/charsub.hpp"

namespace charsub::cli {

struct ShodaSummary {
  bool condition = false;
  std::optional<ShodaWitness> witness;
  friend bool operator==(const ShodaSummary&, const ShodaSummary&);
};

struct CensusSummary {
  std::size_t max_dim = 0;
  std::string method;
  bool complete = true;
  std::uint64_t subspaces_scanned = 0;
  std::size_t invariant_count = 0;
  std::size_t characteristic_count = 0;
  std::size_t hyperinvariant_count = 0;
  std::vector<Subspace> characteristic_not_hyperinvariant;
  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

struct AnalysisDocument {
  Gf2Matrix op;
  std::size_t nilpotency_index = 0;
  std::vector<std::size_t> elementary_divisors;
  std::vector<std::size_t> ulm_sequence;
  std::size_t commutant_dimension = 0;
  /// Present when Aut_f(V) was enumerated in full.
  std::optional<std::uint64_t> automorphism_count;
  ShodaSummary shoda;
  std::optional<CensusSummary> census;
  friend bool operator==(const AnalysisDocument&, const AnalysisDocument&) = default;
};

struct AnalysisOptions {
  std::uint64_t automorphism_cap = kDefaultAutomorphismCap;
  bool with_census = false;
  std::size_t census_max_dim = kDefaultCensusMaxDim;
};

AnalysisDocument analyze(const NilpotentOperator& f, const AnalysisOptions& options = {});

nlohmann::json matrix_to_json(const Gf2Matrix& m);
Gf2Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AnalysisDocument& doc);
/// Throws ParseError on a malformed document.
AnalysisDocument analysis_from_json(const nlohmann::json& j);

std::string to_text(const AnalysisDocument& doc);

}  // namespace charsub::cli
