#include "cli/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "cli/analysis.hpp"
#include "cli/bits.hpp"

namespace charsub::cli {

LatticeKind parse_lattice_kind(const std::string& name) {
  if (name == "hinv") return LatticeKind::Hinv;
  if (name == "chinv") return LatticeKind::Chinv;
  if (name == "inv") return LatticeKind::Inv;
  throw ParseError("unknown lattice \"" + name + "\" (expected hinv, chinv or inv)");
}

std::string to_string(LatticeKind k) {
  switch (k) {
    case LatticeKind::Hinv: return "hinv";
    case LatticeKind::Chinv: return "chinv";
    case LatticeKind::Inv: return "inv";
  }
  return "?";
}

namespace {

// Fixed-size bitset over node indices.
class Bits {
 public:
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool intersects(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & o.words_[w]) return true;
    }
    return false;
  }

 private:
  std::vector<std::uint64_t> words_;
};

bool by_dim_then_basis(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a < b;
}

}  // namespace

HasseDiagram hasse_diagram(std::vector<Subspace> nodes) {
  std::sort(nodes.begin(), nodes.end(), by_dim_then_basis);
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  const std::size_t n = nodes.size();

  // above[i]: nodes strictly containing i; below[j]: nodes strictly inside j.
  std::vector<Bits> above(n, Bits(n)), below(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (nodes[j].dim() > nodes[i].dim() && nodes[i].is_subspace_of(nodes[j])) {
        above[i].set(j);
        below[j].set(i);
      }
    }
  }
  HasseDiagram d;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // j covers i when nothing lies strictly between them.
      if (above[i].test(j) && !above[i].intersects(below[j])) d.edges.emplace_back(i, j);
    }
  }
  d.nodes = std::move(nodes);
  return d;
}

std::vector<Subspace> lattice_members(const NilpotentOperator& f, LatticeKind kind,
                                      const LatticeOptions& options) {
  if (kind == LatticeKind::Hinv) return hinv_lattice(f);

  ClassifierOptions copts;
  copts.automorphism_cap = options.automorphism_cap;
  if (kind == LatticeKind::Chinv) {
    // Enumeration must be feasible: this throws CapExceeded otherwise.
    enumerate_automorphisms(commutant_basis(f), options.automorphism_cap);
  }
  const Classifier classifier(f, copts);
  const Census census = lattice_census(classifier, options.max_dim, false);
  return kind == LatticeKind::Inv ? census.invariant_subspaces()
                                  : census.characteristic_subspaces();
}

namespace {

std::string basis_label(const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& b : s.basis()) {
    if (!out.empty()) out += ' ';
    out += to_bits(b);
  }
  return out;
}

}  // namespace

std::string to_dot(const HasseDiagram& d, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"dim " << d.nodes[i].dim() << "\\n" << digest(d.nodes[i])
        << "\", tooltip=\"" << basis_label(d.nodes[i]) << "\"];\n";
  }
  for (const auto& [lo, hi] : d.edges) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const HasseDiagram& d, LatticeKind kind) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    auto node = subspace_to_json(d.nodes[i]);
    node["id"] = i;
    node["digest"] = digest(d.nodes[i]);
    nodes.push_back(std::move(node));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [lo, hi] : d.edges) edges.push_back({lo, hi});
  return {{"lattice", to_string(kind)}, {"nodes", nodes}, {"edges", edges}};
}

std::string to_text(const HasseDiagram& d) {
  std::ostringstream out;
  out << d.nodes.size() << " nodes, " << d.edges.size() << " covering edges\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    out << "  n" << i << "  dim " << d.nodes[i].dim() << "  " << digest(d.nodes[i]) << "  "
        << basis_label(d.nodes[i]) << '\n';
  }
  for (const auto& [lo, hi] : d.edges) out << "  n" << lo << " < n" << hi << '\n';
  return out.str();
}

}  // namespace charsub::cli
