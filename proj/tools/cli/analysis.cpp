#include "cli/analysis.hpp"

#include <sstream>

#include "cli/bits.hpp"

namespace charsub::cli {

using nlohmann::json;

bool operator==(const ShodaSummary& a, const ShodaSummary& b) {
  if (a.condition != b.condition || a.witness.has_value() != b.witness.has_value()) return false;
  if (!a.witness) return true;
  const auto& x = *a.witness;
  const auto& y = *b.witness;
  return x.rho_index == y.rho_index && x.tau_index == y.tau_index && x.a_rho == y.a_rho &&
         x.a_tau == y.a_tau && x.z == y.z && x.y_span == y.y_span;
}

AnalysisDocument analyze(const NilpotentOperator& f, const AnalysisOptions& options) {
  AnalysisDocument doc;
  doc.op = f.matrix();
  doc.nilpotency_index = f.index();
  const UlmSequence ulm = ulm_sequence(f);
  doc.elementary_divisors = elementary_divisors(ulm);
  doc.ulm_sequence = ulm.counts();

  ClassifierOptions copts;
  copts.automorphism_cap = options.automorphism_cap;
  const Classifier classifier(f, copts);
  doc.commutant_dimension = classifier.commutant().dim();
  doc.automorphism_count = classifier.automorphism_count();

  doc.shoda.condition = shoda_condition(ulm);
  if (doc.shoda.condition) {
    if (auto c = counterexample(f, copts)) doc.shoda.witness = c->witness;
  }

  if (options.with_census) {
    const Census census = lattice_census(classifier, options.census_max_dim, false);
    CensusSummary s;
    s.max_dim = options.census_max_dim;
    s.method = to_string(census.method);
    s.complete = census.complete;
    s.subspaces_scanned = census.subspaces_scanned;
    s.invariant_count = census.invariant.size();
    s.characteristic_count = census.characteristic_count();
    s.hyperinvariant_count = census.hyperinvariant_count();
    s.characteristic_not_hyperinvariant = census.characteristic_not_hyperinvariant();
    doc.census = std::move(s);
  }
  return doc;
}

json matrix_to_json(const Gf2Matrix& m) {
  json rows = json::array();
  for (const auto& r : m.row_vectors()) rows.push_back(to_bits(r));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

Gf2Matrix matrix_from_json(const json& j) {
  const auto cols = j.at("cols").get<std::size_t>();
  const auto rows = j.at("rows").get<std::size_t>();
  std::vector<Gf2Vector> out;
  for (const auto& r : j.at("data")) {
    out.push_back(from_bits(r.get<std::string>()));
    if (out.back().dim() != cols) throw ParseError("matrix row length does not match cols");
  }
  if (out.size() != rows) throw ParseError("matrix row count does not match rows");
  return Gf2Matrix::from_rows(cols, std::move(out));
}

json subspace_to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(to_bits(b));
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

Subspace subspace_from_json(const json& j) {
  const auto n = j.at("ambient_dim").get<std::size_t>();
  std::vector<Gf2Vector> rows;
  for (const auto& r : j.at("basis")) {
    rows.push_back(from_bits(r.get<std::string>()));
    if (rows.back().dim() != n) throw ParseError("basis vector length does not match ambient_dim");
  }
  Subspace s = Subspace::span(n, rows);
  if (s.dim() != rows.size()) throw ParseError("subspace basis is not independent");
  return s;
}

json to_json(const AnalysisDocument& doc) {
  json j;
  j["operator"] = matrix_to_json(doc.op);
  j["nilpotency_index"] = doc.nilpotency_index;
  j["elementary_divisors"] = doc.elementary_divisors;
  j["ulm_sequence"] = doc.ulm_sequence;
  j["commutant_dimension"] = doc.commutant_dimension;
  j["automorphism_count"] = doc.automorphism_count ? json(*doc.automorphism_count) : json(nullptr);
  json shoda{{"condition", doc.shoda.condition}, {"witness", nullptr}};
  if (const auto& w = doc.shoda.witness) {
    shoda["witness"] = {{"rho_index", w->rho_index}, {"tau_index", w->tau_index},
                        {"a_rho", w->a_rho},         {"a_tau", w->a_tau},
                        {"z", to_bits(w->z)},        {"y_span", subspace_to_json(w->y_span)}};
  }
  j["shoda"] = shoda;
  if (const auto& c = doc.census) {
    json extra = json::array();
    for (const auto& s : c->characteristic_not_hyperinvariant) extra.push_back(subspace_to_json(s));
    j["census"] = {{"max_dim", c->max_dim},
                   {"method", c->method},
                   {"complete", c->complete},
                   {"subspaces_scanned", c->subspaces_scanned},
                   {"invariant_count", c->invariant_count},
                   {"characteristic_count", c->characteristic_count},
                   {"hyperinvariant_count", c->hyperinvariant_count},
                   {"characteristic_not_hyperinvariant", extra}};
  } else {
    j["census"] = nullptr;
  }
  return j;
}

AnalysisDocument analysis_from_json(const json& j) {
  try {
    AnalysisDocument doc;
    doc.op = matrix_from_json(j.at("operator"));
    doc.nilpotency_index = j.at("nilpotency_index").get<std::size_t>();
    doc.elementary_divisors = j.at("elementary_divisors").get<std::vector<std::size_t>>();
    doc.ulm_sequence = j.at("ulm_sequence").get<std::vector<std::size_t>>();
    doc.commutant_dimension = j.at("commutant_dimension").get<std::size_t>();
    if (!j.at("automorphism_count").is_null()) {
      doc.automorphism_count = j.at("automorphism_count").get<std::uint64_t>();
    }
    const auto& sh = j.at("shoda");
    doc.shoda.condition = sh.at("condition").get<bool>();
    if (!sh.at("witness").is_null()) {
      const auto& w = sh.at("witness");
      ShodaWitness out;
      out.rho_index = w.at("rho_index").get<std::size_t>();
      out.tau_index = w.at("tau_index").get<std::size_t>();
      out.a_rho = w.at("a_rho").get<std::size_t>();
      out.a_tau = w.at("a_tau").get<std::size_t>();
      out.z = from_bits(w.at("z").get<std::string>());
      out.y_span = subspace_from_json(w.at("y_span"));
      doc.shoda.witness = std::move(out);
    }
    if (!j.at("census").is_null()) {
      const auto& c = j.at("census");
      CensusSummary s;
      s.max_dim = c.at("max_dim").get<std::size_t>();
      s.method = c.at("method").get<std::string>();
      s.complete = c.at("complete").get<bool>();
      s.subspaces_scanned = c.at("subspaces_scanned").get<std::uint64_t>();
      s.invariant_count = c.at("invariant_count").get<std::size_t>();
      s.characteristic_count = c.at("characteristic_count").get<std::size_t>();
      s.hyperinvariant_count = c.at("hyperinvariant_count").get<std::size_t>();
      for (const auto& x : c.at("characteristic_not_hyperinvariant")) {
        s.characteristic_not_hyperinvariant.push_back(subspace_from_json(x));
      }
      doc.census = std::move(s);
    }
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed analysis document: ") + e.what());
  }
}

namespace {

template <typename T>
std::string list(const std::vector<T>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ']';
  return out.str();
}

}  // namespace

std::string to_text(const AnalysisDocument& doc) {
  std::ostringstream out;
  out << "operator: " << doc.op.rows() << "x" << doc.op.cols() << '\n';
  for (const auto& r : doc.op.row_vectors()) out << "  " << r.to_string() << '\n';
  out << "nilpotency index: " << doc.nilpotency_index << '\n';
  out << "elementary divisors: " << list(doc.elementary_divisors) << '\n';
  out << "ulm sequence: " << UlmSequence(doc.ulm_sequence).to_string() << '\n';
  out << "commutant dimension: " << doc.commutant_dimension << '\n';
  out << "automorphisms: "
      << (doc.automorphism_count ? std::to_string(*doc.automorphism_count)
                                 : std::string("not enumerated (above cap)"))
      << '\n';
  out << "shoda condition: " << (doc.shoda.condition ? "true" : "false") << '\n';
  if (const auto& w = doc.shoda.witness) {
    out << "  blocks: " << w->a_rho << " and " << w->a_tau << '\n';
    out << "  z: " << w->z.to_string() << '\n';
    out << "  <Y> basis:\n";
    for (const auto& b : w->y_span.basis()) out << "    " << b.to_string() << '\n';
  }
  if (const auto& c = doc.census) {
    out << "census (" << c->method << (c->complete ? "" : ", incomplete") << "): "
        << c->subspaces_scanned << " subspaces, " << c->invariant_count << " invariant, "
        << c->characteristic_count << " characteristic, " << c->hyperinvariant_count
        << " hyperinvariant\n";
    for (const auto& s : c->characteristic_not_hyperinvariant) {
      out << "  characteristic, not hyperinvariant:";
      for (const auto& b : s.basis()) out << " [" << b.to_string() << ']';
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace charsub::cli
