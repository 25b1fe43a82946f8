#pragma once

// Subspace lattices of an operator and their Hasse diagrams.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "charsub/charsub.hpp"

namespace charsub::cli {

enum class LatticeKind { Hinv, Chinv, Inv };

LatticeKind parse_lattice_kind(const std::string& name);
std::string to_string(LatticeKind k);

struct HasseDiagram {
  /// Sorted by (dimension, basis).
  std::vector<Subspace> nodes;
  /// (lower, upper) pairs of node indices: upper covers lower.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Covering relation of the containment order on `nodes`.
HasseDiagram hasse_diagram(std::vector<Subspace> nodes);

struct LatticeOptions {
  /// Enumeration of Aut_f(V) must fit under this (chinv only).
  std::uint64_t automorphism_cap = kDefaultAutomorphismCap;
  /// Largest n for the subspace census (chinv and inv).
  std::size_t max_dim = kDefaultCensusMaxDim;
};

/// Members of the requested lattice. Throws CapExceeded when chinv or inv
/// would need a census above max_dim, or chinv an enumeration above the cap.
std::vector<Subspace> lattice_members(const NilpotentOperator& f, LatticeKind kind,
                                      const LatticeOptions& options = {});

std::string to_dot(const HasseDiagram& d, const std::string& name);
nlohmann::json to_json(const HasseDiagram& d, LatticeKind kind);
std::string to_text(const HasseDiagram& d);

}  // namespace charsub::cli
