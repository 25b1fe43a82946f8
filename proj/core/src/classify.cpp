#include "charsub/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "charsub/errors.hpp"

namespace charsub {

std::string to_string(CharacteristicMethod m) {
  switch (m) {
    case CharacteristicMethod::Exhaustive:
      return "exhaustive";
    case CharacteristicMethod::UnitSpan:
      return "unit-span";
    case CharacteristicMethod::Sampled:
      return "sampled";
  }
  return "unknown";
}

std::optional<Witness> find_escape(std::span<const Gf2Matrix> maps, const Subspace& s) {
  for (const auto& g : maps) {
    for (const auto& v : s.basis()) {
      Gf2Vector image = g.apply(v);
      if (!s.contains(image)) return Witness{g, v, std::move(image)};
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------- Classifier

Classifier::Classifier(NilpotentOperator f, ClassifierOptions options)
    : f_(std::move(f)), commutant_(commutant_basis(f_)), method_(CharacteristicMethod::Exhaustive) {
  try {
    const AutomorphismSet all = enumerate_automorphisms(commutant_, options.automorphism_cap);
    unit_count_ = all.elements.size();
    unit_tests_ = span_basis(all.elements);
    return;
  } catch (const CapExceeded&) {
  }
  if (options.allow_unit_span) {
    method_ = CharacteristicMethod::UnitSpan;
    unit_tests_ = automorphism_span(f_, commutant_);
  } else {
    method_ = CharacteristicMethod::Sampled;
    const AutomorphismSet sample =
        sample_automorphisms(commutant_, options.sample_attempts, options.sample_seed);
    unit_tests_ = span_basis(sample.elements);
  }
}

bool Classifier::is_invariant(const Subspace& s) const { return charsub::is_invariant(f_, s); }

HyperinvariantVerdict Classifier::hyperinvariant(const Subspace& s) const {
  if (s.ambient_dim() != f_.dim()) throw DimensionMismatch("hyperinvariant: dimension mismatch");
  HyperinvariantVerdict out;
  const Gf2Matrix& m = f_.matrix();
  if (auto w = find_escape(std::span<const Gf2Matrix>(&m, 1), s)) {
    out.witness = std::move(w);
    return out;
  }
  out.witness = find_escape(commutant_.basis, s);
  out.hyperinvariant = !out.witness.has_value();
  return out;
}

CharacteristicVerdict Classifier::characteristic(const Subspace& s) const {
  if (s.ambient_dim() != f_.dim()) throw DimensionMismatch("characteristic: dimension mismatch");
  CharacteristicVerdict out;
  out.method = method_;
  out.complete = method_ != CharacteristicMethod::Sampled;
  out.automorphism_count = unit_count_;
  // alpha s ⊆ s already forces alpha s = s for invertible alpha.
  out.witness = find_escape(unit_tests_, s);
  out.characteristic = !out.witness.has_value();
  return out;
}

bool Classifier::is_marked(const Subspace& s) const { return charsub::is_marked(f_, s); }

ClassificationReport Classifier::classify(const Subspace& s) const {
  if (s.ambient_dim() != f_.dim()) throw DimensionMismatch("classify: dimension mismatch");
  ClassificationReport report;
  report.subspace = s;
  report.characteristic_method = method_;
  report.automorphism_count = unit_count_;
  report.characteristic_complete = method_ != CharacteristicMethod::Sampled;

  const Gf2Matrix& m = f_.matrix();
  report.invariance_witness = find_escape(std::span<const Gf2Matrix>(&m, 1), s);
  report.invariant = !report.invariance_witness.has_value();
  if (!report.invariant) return report;

  auto hyper = hyperinvariant(s);
  auto chr = characteristic(s);
  report.hyperinvariant = hyper.hyperinvariant;
  report.hyperinvariance_witness = std::move(hyper.witness);
  report.characteristic = chr.characteristic;
  report.characteristic_witness = std::move(chr.witness);
  report.marked = is_marked(s);
  if (report.hyperinvariant && !report.characteristic && report.characteristic_complete) {
    throw std::logic_error("classify: hyperinvariant subspace failed the characteristic test");
  }
  return report;
}

// -------------------------------------------------------- free predicates

bool is_invariant(const NilpotentOperator& f, const Subspace& s) {
  if (s.ambient_dim() != f.dim()) throw DimensionMismatch("is_invariant: dimension mismatch");
  return std::all_of(s.basis().begin(), s.basis().end(),
                     [&](const Gf2Vector& v) { return s.contains(f.apply(v)); });
}

HyperinvariantVerdict is_hyperinvariant(const NilpotentOperator& f, const Subspace& s) {
  if (s.ambient_dim() != f.dim()) throw DimensionMismatch("is_hyperinvariant: dimension mismatch");
  HyperinvariantVerdict out;
  const Gf2Matrix& m = f.matrix();
  if (auto w = find_escape(std::span<const Gf2Matrix>(&m, 1), s)) {
    out.witness = std::move(w);
    return out;
  }
  const CommutantBasis c = commutant_basis(f);
  out.witness = find_escape(c.basis, s);
  out.hyperinvariant = !out.witness.has_value();
  return out;
}

CharacteristicVerdict is_characteristic(const NilpotentOperator& f, const Subspace& s,
                                        const ClassifierOptions& options) {
  return Classifier(f, options).characteristic(s);
}

bool is_marked(const NilpotentOperator& f, const Subspace& w) {
  if (w.ambient_dim() != f.dim()) throw DimensionMismatch("is_marked: dimension mismatch");
  if (w.is_zero()) return true;
  if (!is_invariant(f, w)) return false;
  const std::size_t top = f.index();
  for (std::size_t s = 0; s <= top; ++s) {
    const Gf2Matrix& fs = f.power(s);
    const Subspace fs_w = map_subspace(fs, w);
    for (std::size_t r = 0; r <= top; ++r) {
      const Subspace lhs = intersect(fs_w, f.image_of_power(s + r));
      const Subspace rhs = map_subspace(fs, intersect(w, f.image_of_power(r)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

ClassificationReport classify(const NilpotentOperator& f, const Subspace& s,
                              const ClassifierOptions& options) {
  return Classifier(f, options).classify(s);
}

// -------------------------------------------------------------- W(r, U)

AdmissibleTuple::AdmissibleTuple(std::span<const std::size_t> exponents,
                                 std::vector<std::size_t> shifts)
    : shifts_(std::move(shifts)) {
  if (shifts_.size() != exponents.size()) {
    throw InadmissibleTuple("tuple has " + std::to_string(shifts_.size()) + " entries, expected " +
                            std::to_string(exponents.size()));
  }
  for (std::size_t i = 0; i < shifts_.size(); ++i) {
    if (shifts_[i] > exponents[i]) {
      throw InadmissibleTuple("r_" + std::to_string(i + 1) + " = " + std::to_string(shifts_[i]) +
                              " exceeds t_" + std::to_string(i + 1) + " = " +
                              std::to_string(exponents[i]));
    }
  }
}

std::vector<AdmissibleTuple> admissible_tuples(std::span<const std::size_t> exponents) {
  std::vector<AdmissibleTuple> out;
  std::vector<std::size_t> r(exponents.size(), 0);
  while (true) {
    out.emplace_back(exponents, r);
    std::size_t i = 0;
    while (i < r.size() && r[i] == exponents[i]) r[i++] = 0;
    if (i == r.size()) break;
    ++r[i];
  }
  return out;
}

Subspace w_of_r(const NilpotentOperator& f, const GeneratorTuple& u, const AdmissibleTuple& r) {
  if (r.size() != u.size()) throw InadmissibleTuple("tuple length does not match generator tuple");
  AdmissibleTuple checked(u.exponents(), r.shifts());
  std::vector<Gf2Vector> heads;
  heads.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) heads.push_back(f.power(r[i]).apply(u.generator(i)));
  return cyclic_span(f, heads);
}

bool qv_condition(std::span<const std::size_t> exponents, const AdmissibleTuple& r) {
  if (r.size() != exponents.size()) throw InadmissibleTuple("tuple length mismatch");
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    if (r[i] > r[i + 1]) return false;
    if (exponents[i] - r[i] > exponents[i + 1] - r[i + 1]) return false;
  }
  return true;
}

// ------------------------------------------------------ hyperinvariants

std::vector<Subspace> hinv_lattice(const NilpotentOperator& f) {
  std::vector<Subspace> members;
  std::unordered_set<Subspace> seen;
  auto add = [&](Subspace s) {
    if (seen.insert(s).second) members.push_back(std::move(s));
  };
  for (std::size_t k = 0; k <= f.index(); ++k) {
    add(f.kernel_of_power(k));
    add(f.image_of_power(k));
  }
  // Worklist fixed point: every new member is combined with all earlier ones.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Subspace s = sum(members[i], members[j]);
      Subspace m = intersect(members[i], members[j]);
      add(std::move(s));
      add(std::move(m));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

LargestHyperinvariant largest_hyperinvariant_inside(const NilpotentOperator& f,
                                                    const GeneratorTuple& u, const Subspace& x,
                                                    bool verify) {
  if (x.ambient_dim() != f.dim()) throw DimensionMismatch("largest_hyperinvariant_inside");
  if (verify) {
    if (!is_invariant(f, x) || !is_characteristic(f, x).characteristic) {
      throw NotCharacteristic("largest_hyperinvariant_inside: subspace is not characteristic");
    }
  }
  LargestHyperinvariant out;
  out.subspace = Subspace(f.dim());
  for (const ExponentClass& cls : u.classes()) {
    const auto gens = std::span<const Gf2Vector>(u.generators()).subspan(cls.first, cls.count);
    const Subspace summand = cyclic_span(f, gens);
    const Subspace part = intersect(x, summand);
    out.subspace = sum(out.subspace, part);

    std::optional<std::size_t> shift;
    if (part.dim() % cls.count == 0) {
      const std::size_t c = cls.exponent - part.dim() / cls.count;
      if (map_subspace(f.power(c), summand) == part) shift = c;
    }
    out.shifts.push_back(shift);
  }
  return out;
}

}  // namespace charsub
