#include "cli/commands.hpp"

#include <functional>
#include <ostream>

#include "charsub/charsub.hpp"
#include "cli/analysis.hpp"
#include "cli/bits.hpp"
#include "cli/lattice.hpp"
#include "cli/suites.hpp"

namespace charsub::cli {

namespace {

using nlohmann::json;

// Maps library errors to exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const NotNilpotent& e) {
    err << "not nilpotent: " << e.what() << '\n';
    return kExitNotNilpotent;
  } catch (const NotSquare& e) {
    err << "not nilpotent: " << e.what() << '\n';
    return kExitNotNilpotent;
  } catch (const DimensionMismatch& e) {
    err << "dimension mismatch: " << e.what() << '\n';
    return kExitDimensionMismatch;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << " (required " << e.required() << ", cap " << e.cap()
        << ")\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

NilpotentOperator load_operator(const std::string& path) {
  return NilpotentOperator(read_matrix_file(path));
}

json witness_json(const Witness& w) {
  return {{"map", matrix_to_json(w.map)}, {"vector", to_bits(w.vector)}, {"image", to_bits(w.image)}};
}

void print_witness(std::ostream& out, const std::string& title, const Witness& w) {
  out << title << ":\n  map:\n";
  for (const auto& r : w.map.row_vectors()) out << "    " << r.to_string() << '\n';
  out << "  v   = " << w.vector.to_string() << "\n  g v = " << w.image.to_string()
      << "  (outside the subspace)\n";
}

const char* tf(bool b) { return b ? "true" : "false"; }

}  // namespace

int cmd_analyze(const std::string& matrix_file, const CommonFlags& flags, bool census,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto f = load_operator(matrix_file);
    AnalysisOptions opts;
    opts.automorphism_cap = flags.cap;
    opts.with_census = census;
    opts.census_max_dim = flags.max_dim;
    const auto doc = analyze(f, opts);
    if (flags.format == Format::Json) {
      out << to_json(doc).dump(2) << '\n';
    } else {
      out << to_text(doc);
    }
    return int{kExitOk};
  });
}

int cmd_classify(const std::string& matrix_file, const std::string& subspace_file,
                 const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto f = load_operator(matrix_file);
    const Subspace s = read_subspace_file(subspace_file);
    if (s.ambient_dim() != f.dim()) {
      throw DimensionMismatch("subspace lives in dimension " + std::to_string(s.ambient_dim()) +
                              ", operator in " + std::to_string(f.dim()));
    }
    ClassifierOptions opts;
    opts.automorphism_cap = flags.cap;
    const auto r = classify(f, s, opts);

    if (flags.format == Format::Json) {
      json j{{"subspace", subspace_to_json(r.subspace)},
             {"invariant", r.invariant},
             {"marked", r.marked},
             {"characteristic", r.characteristic},
             {"hyperinvariant", r.hyperinvariant},
             {"characteristic_method", to_string(r.characteristic_method)},
             {"characteristic_complete", r.characteristic_complete},
             {"automorphism_count",
              r.automorphism_count ? json(*r.automorphism_count) : json(nullptr)}};
      j["invariance_witness"] = r.invariance_witness ? witness_json(*r.invariance_witness) : json(nullptr);
      j["characteristic_witness"] =
          r.characteristic_witness ? witness_json(*r.characteristic_witness) : json(nullptr);
      j["hyperinvariance_witness"] =
          r.hyperinvariance_witness ? witness_json(*r.hyperinvariance_witness) : json(nullptr);
      out << j.dump(2) << '\n';
      return int{kExitOk};
    }

    out << (r.invariant ? "invariant" : "not-invariant") << " marked=" << tf(r.marked)
        << " characteristic=" << tf(r.characteristic) << " hyperinvariant=" << tf(r.hyperinvariant)
        << '\n';
    out << "characteristic test: " << to_string(r.characteristic_method);
    if (r.automorphism_count) out << " over " << *r.automorphism_count << " automorphisms";
    if (!r.characteristic_complete) out << " (not a proof)";
    out << '\n';
    if (r.invariance_witness) print_witness(out, "invariance witness (f)", *r.invariance_witness);
    if (r.characteristic_witness) print_witness(out, "characteristic witness", *r.characteristic_witness);
    if (r.hyperinvariance_witness) {
      print_witness(out, "hyperinvariance witness", *r.hyperinvariance_witness);
    }
    return int{kExitOk};
  });
}

int cmd_counterexample(const std::string& matrix_file, const CommonFlags& flags, std::ostream& out,
                       std::ostream& err) {
  return guarded(err, [&] {
    const auto f = load_operator(matrix_file);
    ClassifierOptions opts;
    opts.automorphism_cap = flags.cap;
    const auto c = counterexample(f, opts);
    if (flags.format == Format::Json) {
      if (!c) {
        out << json{{"counterexample", nullptr}}.dump(2) << '\n';
        return int{kExitOk};
      }
      const auto& w = c->witness;
      out << json{{"counterexample",
                   {{"subspace", subspace_to_json(c->subspace)},
                    {"a_rho", w.a_rho},
                    {"a_tau", w.a_tau},
                    {"rho_index", w.rho_index},
                    {"tau_index", w.tau_index},
                    {"z", to_bits(w.z)},
                    {"projection", matrix_to_json(c->projection)},
                    {"projected_z", to_bits(c->projected_z)},
                    {"method", to_string(c->method)}}}}
                 .dump(2)
          << '\n';
      return int{kExitOk};
    }
    if (!c) {
      out << "NONE\n";
      return int{kExitOk};
    }
    // Comment lines keep the output readable as a subspace file.
    const auto& w = c->witness;
    out << "# characteristic, not hyperinvariant\n"
        << "# blocks " << w.a_rho << " and " << w.a_tau << "\n"
        << "# z = " << w.z.to_string() << "\n"
        << "# projection onto the size-" << w.a_rho << " block sends z to "
        << c->projected_z.to_string() << "\n"
        << "# characteristic test: " << to_string(c->method) << '\n'
        << format_subspace(c->subspace);
    return int{kExitOk};
  });
}

int cmd_lattice(const std::string& matrix_file, const std::string& which, const CommonFlags& flags,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LatticeKind kind = parse_lattice_kind(which);
    const auto f = load_operator(matrix_file);
    LatticeOptions opts;
    opts.automorphism_cap = flags.cap;
    opts.max_dim = flags.max_dim;
    const HasseDiagram d = hasse_diagram(lattice_members(f, kind, opts));
    switch (flags.format) {
      case Format::Dot: out << to_dot(d, which); break;
      case Format::Json: out << to_json(d, kind).dump(2) << '\n'; break;
      case Format::Text: out << to_text(d); break;
    }
    return int{kExitOk};
  });
}

int cmd_verify(const std::string& suite, std::size_t max_dim, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::size_t dim = max_dim == 0 ? default_suite_max_dim(suite) : max_dim;
    const SuiteResult r = run_suite(suite, dim, out);
    return r.ok() ? int{kExitOk} : int{kExitFailure};
  });
}

}  // namespace charsub::cli
