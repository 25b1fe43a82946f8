#include "charsub/shoda.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "charsub/enumerate.hpp"
#include "charsub/errors.hpp"

namespace charsub {

namespace {

std::vector<std::size_t> sizes_with_multiplicity_one(const UlmSequence& u) {
  std::vector<std::size_t> out;
  for (std::size_t r = 1; r <= u.length(); ++r) {
    if (u.d(r) == 1) out.push_back(r);
  }
  return out;
}

void check_witness_classes(const GeneratorTuple& u, std::size_t rho, std::size_t tau) {
  const auto& classes = u.classes();
  if (rho >= classes.size() || tau >= classes.size()) {
    throw ShodaConditionFails("class index out of range");
  }
  if (classes[rho].count != 1 || classes[tau].count != 1) {
    throw ShodaConditionFails("both exponent classes must contain exactly one generator");
  }
  if (classes[rho].exponent + 1 >= classes[tau].exponent) {
    throw ShodaConditionFails("need a_rho + 1 < a_tau, got a_rho = " +
                              std::to_string(classes[rho].exponent) +
                              ", a_tau = " + std::to_string(classes[tau].exponent));
  }
}

// <classes lo..hi-1> ∩ Ker f^j.
Subspace class_range_socle(const NilpotentOperator& f, const GeneratorTuple& u, std::size_t lo,
                           std::size_t hi, std::size_t j) {
  if (lo >= hi) return Subspace(f.dim());
  const auto& classes = u.classes();
  const std::size_t first = classes[lo].first;
  const std::size_t last = classes[hi - 1].first + classes[hi - 1].count;
  const auto gens = std::span<const Gf2Vector>(u.generators()).subspan(first, last - first);
  return intersect(cyclic_span(f, gens), f.kernel_of_power(j));
}

}  // namespace

bool shoda_condition(const UlmSequence& u) { return shoda_block_sizes(u).has_value(); }

bool ulm_form_condition(const UlmSequence& u) {
  const auto ones = sizes_with_multiplicity_one(u);
  if (ones.size() <= 1) return true;
  return ones.size() == 2 && ones[1] == ones[0] + 1;
}

std::optional<std::pair<std::size_t, std::size_t>> shoda_block_sizes(const UlmSequence& u) {
  const auto ones = sizes_with_multiplicity_one(u);
  for (std::size_t i = 0; i < ones.size(); ++i) {
    for (std::size_t j = i + 1; j < ones.size(); ++j) {
      if (ones[j] > ones[i] + 1) return std::make_pair(ones[i], ones[j]);
    }
  }
  return std::nullopt;
}

Gf2Vector construct_z(const NilpotentOperator& f, const GeneratorTuple& u, std::size_t rho_index,
                      std::size_t tau_index) {
  check_witness_classes(u, rho_index, tau_index);
  const ExponentClass& rho = u.classes()[rho_index];
  const ExponentClass& tau = u.classes()[tau_index];
  return f.power(rho.exponent - 1).apply(u.generator(rho.first)) +
         f.power(tau.exponent - 2).apply(u.generator(tau.first));
}

Subspace construct_y_span(const NilpotentOperator& f, const GeneratorTuple& u,
                          std::size_t rho_index, std::size_t tau_index) {
  const Gf2Vector z = construct_z(f, u, rho_index, tau_index);
  Subspace y = cyclic_subspace(f, z);
  y = sum(y, class_range_socle(f, u, rho_index + 1, tau_index, 1));
  y = sum(y, class_range_socle(f, u, tau_index + 1, u.classes().size(), 2));
  return y;
}

ShodaWitness make_shoda_witness(const NilpotentOperator& f, const GeneratorTuple& u,
                                std::size_t rho_index, std::size_t tau_index) {
  ShodaWitness w;
  w.rho_index = rho_index;
  w.tau_index = tau_index;
  w.z = construct_z(f, u, rho_index, tau_index);
  w.a_rho = u.classes()[rho_index].exponent;
  w.a_tau = u.classes()[tau_index].exponent;
  w.y_span = construct_y_span(f, u, rho_index, tau_index);
  return w;
}

Subspace enumerate_y_oracle(const NilpotentOperator& f, std::size_t a_rho, std::size_t a_tau,
                            std::size_t cap_log2) {
  if (a_rho == 0 || a_tau == 0) throw PreconditionViolation("block sizes must be positive");
  const Subspace& candidates = f.image_of_power(a_rho - 1);
  std::vector<Gf2Vector> members;
  for (const Gf2Vector& y : enumerate_vectors(candidates, cap_log2)) {
    if (y.is_zero() || exponent(f, y) != 2) continue;
    if (height(f, y) != Height(a_rho - 1)) continue;
    if (height(f, f.apply(y)) != Height(a_tau - 1)) continue;
    members.push_back(y);
  }
  return Subspace::span(f.dim(), members);
}

std::optional<Counterexample> counterexample(const NilpotentOperator& f,
                                             const ClassifierOptions& options) {
  const auto sizes = shoda_block_sizes(ulm_sequence(f));
  if (!sizes) return std::nullopt;

  const GeneratorTuple u = generator_tuple(f);
  std::size_t rho = 0;
  std::size_t tau = 0;
  for (std::size_t c = 0; c < u.classes().size(); ++c) {
    if (u.classes()[c].exponent == sizes->first) rho = c;
    if (u.classes()[c].exponent == sizes->second) tau = c;
  }

  Counterexample out;
  out.witness = make_shoda_witness(f, u, rho, tau);
  out.subspace = out.witness.y_span;
  out.projection = exponent_projection(f, u, rho);
  out.projected_z = out.projection.apply(out.witness.z);

  const Classifier classifier(f, options);
  out.method = classifier.characteristic_method();
  const auto chr = classifier.characteristic(out.subspace);
  const auto hyper = classifier.hyperinvariant(out.subspace);
  if (chr.complete && !chr.characteristic) {
    throw std::logic_error("counterexample: constructed <Y> is not characteristic");
  }
  if (hyper.hyperinvariant || out.subspace.contains(out.projected_z)) {
    throw std::logic_error("counterexample: constructed <Y> is hyperinvariant");
  }
  return out;
}

}  // namespace charsub
