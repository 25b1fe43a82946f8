#include "charsub/commutant.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "charsub/errors.hpp"

namespace charsub {

namespace {

Gf2Matrix sum_of(const CommutantBasis& c, std::size_t n, const Gf2Vector& coefficients) {
  Gf2Matrix g(n, n);
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (coefficients.test(i)) g += c.basis[i];
  }
  return g;
}

// One socle layer Q_r with a chosen lift of its basis.
struct Layer {
  std::size_t size = 0;         // d(r)
  std::vector<Gf2Vector> lift;  // q_1..q_d spanning Q_r modulo the lower part
  Gf2Matrix coords;             // columns: lower basis then lift; solve against it
  std::size_t lower_dim = 0;
  std::size_t offset = 0;  // position of this block in the flattened layer action
};

std::vector<Layer> socle_layers(const NilpotentOperator& f) {
  const std::size_t n = f.dim();
  const Subspace& socle = f.kernel_of_power(1);
  std::vector<Layer> layers;
  std::size_t offset = 0;
  for (std::size_t r = 1; r <= f.index(); ++r) {
    const Subspace upper = intersect(socle, f.image_of_power(r - 1));
    const Subspace lower = intersect(socle, f.image_of_power(r));
    if (upper.dim() == lower.dim()) continue;
    Layer layer;
    Subspace covered = lower;
    for (const auto& v : upper.basis()) {
      if (covered.contains(v)) continue;
      layer.lift.push_back(v);
      covered = sum(covered, Subspace::span(n, {v}));
    }
    layer.size = layer.lift.size();
    layer.lower_dim = lower.dim();
    std::vector<Gf2Vector> cols = lower.basis();
    cols.insert(cols.end(), layer.lift.begin(), layer.lift.end());
    layer.coords = Gf2Matrix::from_columns(n, cols);
    layer.offset = offset;
    offset += layer.size * layer.size;
    layers.push_back(std::move(layer));
  }
  return layers;
}

// Flattened matrices of g acting on every layer; block entry (row j, col i)
// is the q_j coordinate of g q_i.
Gf2Vector layer_action(const std::vector<Layer>& layers, std::size_t total, const Gf2Matrix& g) {
  Gf2Vector out(total);
  for (const auto& layer : layers) {
    for (std::size_t i = 0; i < layer.size; ++i) {
      const auto x = solve(layer.coords, g.apply(layer.lift[i]));
      if (!x) throw std::logic_error("endomorphism does not preserve a socle layer");
      for (std::size_t j = 0; j < layer.size; ++j) {
        if (x->test(layer.lower_dim + j)) out.set(layer.offset + j * layer.size + i);
      }
    }
  }
  return out;
}

Gf2Matrix kron_with_identity(const Gf2Matrix& c, std::size_t a) {
  const std::size_t k = c.rows();
  Gf2Matrix out(k * a, k * a);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      if (!c.get(p, q)) continue;
      for (std::size_t s = 0; s < a; ++s) out.set(p * a + s, q * a + s);
    }
  }
  return out;
}

}  // namespace

CommutantBasis commutant_basis(const NilpotentOperator& f) {
  const std::size_t n = f.dim();
  const Gf2Matrix& m = f.matrix();
  // Unknown g_{ij} sits at column i*n + j. Equation (a,b):
  //   sum_c g_{ac} f_{cb} + sum_c f_{ac} g_{cb} = 0.
  Gf2Matrix system(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Gf2Vector& eq = system.row(a * n + b);
      for (std::size_t c = 0; c < n; ++c) {
        if (m.get(c, b)) eq.flip(a * n + c);
        if (m.get(a, c)) eq.flip(c * n + b);
      }
    }
  }
  CommutantBasis out;
  const Subspace solutions = kernel(system);
  for (const auto& v : solutions.basis()) out.basis.push_back(Gf2Matrix::unflatten(n, n, v));
  return out;
}

std::size_t expected_commutant_dimension(std::span<const std::size_t> divisors) {
  std::size_t total = 0;
  for (std::size_t a : divisors) {
    for (std::size_t b : divisors) total += std::min(a, b);
  }
  return total;
}

bool commutes(const Gf2Matrix& g, const NilpotentOperator& f) {
  return g * f.matrix() == f.matrix() * g;
}

AutomorphismSet enumerate_automorphisms(const CommutantBasis& c, std::uint64_t cap) {
  const std::size_t d = c.dim();
  if (d >= 63 || (std::uint64_t{1} << d) > cap) {
    const std::uint64_t required = d >= 64 ? UINT64_MAX : (std::uint64_t{1} << d);
    throw CapExceeded("enumerate_automorphisms: commutant of dimension " + std::to_string(d) +
                          " needs 2^" + std::to_string(d) + " candidates",
                      required, cap);
  }
  AutomorphismSet out;
  out.complete = true;
  if (d == 0) return out;
  const std::size_t n = c.basis.front().rows();
  // Gray-code walk: step i toggles basis element ctz(i).
  Gf2Matrix current(n, n);
  const std::uint64_t count = std::uint64_t{1} << d;
  for (std::uint64_t i = 1; i < count; ++i) {
    current += c.basis[static_cast<std::size_t>(__builtin_ctzll(i))];
    if (is_invertible(current)) out.elements.push_back(current);
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

AutomorphismSet sample_automorphisms(const CommutantBasis& c, std::size_t attempts,
                                     std::uint64_t seed) {
  AutomorphismSet out;
  if (c.dim() == 0) return out;
  const std::size_t n = c.basis.front().rows();
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t t = 0; t < attempts; ++t) {
    Gf2Matrix g(n, n);
    for (const auto& b : c.basis) {
      if (coin(rng)) g += b;
    }
    if (is_invertible(g)) out.elements.push_back(std::move(g));
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
  return out;
}

std::vector<Gf2Matrix> span_basis(std::span<const Gf2Matrix> matrices) {
  std::vector<Gf2Vector> flat;
  flat.reserve(matrices.size());
  for (const auto& m : matrices) flat.push_back(m.flatten());
  std::vector<Gf2Matrix> out;
  for (std::size_t i : independent_subset(flat)) out.push_back(matrices[i]);
  return out;
}

std::vector<Gf2Matrix> automorphism_span(const NilpotentOperator& f, const CommutantBasis& c) {
  const std::size_t n = f.dim();
  const Gf2Matrix identity = Gf2Matrix::identity(n);
  if (n == 0) return {};

  const std::vector<Layer> layers = socle_layers(f);
  std::size_t total = 0;
  for (const auto& layer : layers) total += layer.size * layer.size;

  // Column i of `action` is the layer action of basis element g_i.
  Gf2Matrix action(total, c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const Gf2Vector phi = layer_action(layers, total, c.basis[i]);
    for (std::size_t r = 0; r < total; ++r) {
      if (phi.test(r)) action.set(r, i);
    }
  }

  std::vector<Gf2Matrix> units{identity};
  // Kernel of the layer action: nilpotent, so identity + j is a unit.
  const Subspace radical = kernel(action);
  for (const auto& coeffs : radical.basis()) units.push_back(identity + sum_of(c, n, coeffs));

  // Lifts of identity-except-one-block targets on blocks of size >= 2.
  const Gf2Vector id_action = layer_action(layers, total, identity);
  for (const auto& layer : layers) {
    const std::size_t d = layer.size;
    if (d < 2) continue;
    auto entry = [&](std::size_t row, std::size_t col) { return layer.offset + row * d + col; };
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        Gf2Vector target = id_action;
        if (a != b) {
          target.flip(entry(a, b));  // transvection I + E_ab
        } else {
          // I + E_aa + E_ab' + E_b'a: invertible, and together with the two
          // transvections and I it spans E_aa.
          const std::size_t other = (a + 1) % d;
          target.flip(entry(a, a));
          target.flip(entry(a, other));
          target.flip(entry(other, a));
        }
        const auto coeffs = solve(action, target);
        if (!coeffs) throw std::logic_error("layer action of the commutant is not surjective");
        units.push_back(sum_of(c, n, *coeffs));
      }
    }
  }

  for (const auto& u : units) {
    if (!is_invertible(u) || !commutes(u, f)) {
      throw std::logic_error("automorphism_span produced a non-automorphism");
    }
  }
  return span_basis(units);
}

Gf2Matrix automorphism_from_tuple_images(const NilpotentOperator& f, const GeneratorTuple& u,
                                         std::span<const Gf2Vector> images) {
  if (images.size() != u.size()) {
    throw NotAGeneratorTuple("expected " + std::to_string(u.size()) + " images, got " +
                             std::to_string(images.size()));
  }
  std::vector<Gf2Vector> image_chains;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].dim() != f.dim()) throw DimensionMismatch("image dimension mismatch");
    if (exponent(f, images[i]) != u.exponents()[i]) {
      throw NotAGeneratorTuple("image " + std::to_string(i) + " has exponent " +
                               std::to_string(exponent(f, images[i])) + ", expected " +
                               std::to_string(u.exponents()[i]));
    }
    Gf2Vector v = images[i];
    for (std::size_t j = 0; j < u.exponents()[i]; ++j) {
      image_chains.push_back(v);
      v = f.apply(v);
    }
  }
  const Gf2Matrix target = Gf2Matrix::from_columns(f.dim(), image_chains);
  if (!is_invertible(target)) {
    throw NotAGeneratorTuple("images do not decompose V into a direct sum of cyclic subspaces");
  }
  const Gf2Matrix alpha = target * *inverse(u.chain_basis(f));
  if (!commutes(alpha, f)) throw std::logic_error("tuple-image map does not commute with f");
  return alpha;
}

ExchangeResult exchange_generator(const NilpotentOperator& f, std::span<const Gf2Vector> generators,
                                  const Gf2Vector& x) {
  if (generators.empty()) throw PreconditionViolation("exchange_generator: empty generator list");
  if (x.dim() != f.dim()) throw DimensionMismatch("exchange_generator: vector dimension mismatch");
  const std::size_t a = exponent(f, generators.front());
  for (const auto& u : generators) {
    if (exponent(f, u) != a) {
      throw PreconditionViolation("exchange_generator: generators must share one exponent");
    }
  }
  if (x.is_zero()) throw PreconditionViolation("exchange_generator: x must be nonzero");
  const Subspace span = cyclic_span(f, generators);
  if (!span.contains(x)) throw PreconditionViolation("exchange_generator: x outside <U>");
  if (map_subspace(f.matrix(), span).contains(x)) {
    throw PreconditionViolation("exchange_generator: x must have height 0");
  }

  // Coordinates of x in the chain basis (u_i, f u_i, ..., f^{a-1} u_i)_i;
  // c_{i0} sits at position i*a.
  std::vector<Gf2Vector> chains;
  for (const auto& u : generators) {
    Gf2Vector v = u;
    for (std::size_t j = 0; j < a; ++j) {
      chains.push_back(v);
      v = f.apply(v);
    }
  }
  const auto coords = solve(Gf2Matrix::from_columns(f.dim(), chains), x);
  if (!coords) throw std::logic_error("exchange_generator: coordinates not found");

  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (!coords->test(j * a)) continue;
    ExchangeResult result;
    result.index = j;
    result.generators.assign(generators.begin(), generators.end());
    result.generators[j] = x;
    if (cyclic_span(f, result.generators).dim() != span.dim()) {
      throw std::logic_error("exchange_generator: replacement lost a dimension");
    }
    return result;
  }
  throw std::logic_error("exchange_generator: no nonsingular coefficient block");
}

Gf2Matrix shift_automorphism(const NilpotentOperator& f, const GeneratorTuple& u,
                             std::size_t w_index, std::size_t y_index) {
  if (w_index >= u.size() || y_index >= u.size()) {
    throw PreconditionViolation("shift_automorphism: generator index out of range");
  }
  if (u.exponents()[w_index] >= u.exponents()[y_index]) {
    throw ExponentOrderViolation("shift_automorphism: need e(w) < e(y), got " +
                                 std::to_string(u.exponents()[w_index]) + " and " +
                                 std::to_string(u.exponents()[y_index]));
  }
  std::vector<Gf2Vector> images = u.generators();
  images[y_index] += u.generator(w_index);
  return automorphism_from_tuple_images(f, u, images);
}

BetaGammaPair beta_gamma_pair(const NilpotentOperator& f) {
  const UlmSequence ulm = ulm_sequence(f);
  const auto sizes = ulm.distinct_sizes();
  if (sizes.size() != 1) throw NotHomogeneous("beta_gamma_pair: Jordan blocks of different sizes");
  const std::size_t a = sizes.front();
  const std::size_t k = ulm.d(a);
  if (k < 2) throw SingleBlock("beta_gamma_pair: needs at least two Jordan blocks");

  BetaGammaPair out;
  Gf2Matrix coeff(k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    coeff.set(i + 1, i);
    coeff.set(i, i + 1);
  }
  coeff.set(0, 0);
  if (!is_invertible(coeff + Gf2Matrix::identity(k))) {
    // Companion matrix of x^k + x + 1: det C = p(0) = 1, det(C + I) = p(1) = 1.
    coeff = Gf2Matrix(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) coeff.set(i + 1, i);
    coeff.set(0, k - 1);
    coeff.set(1, k - 1);
    out.construction = BetaGammaConstruction::Companion;
  }

  const GeneratorTuple u = generator_tuple(f);
  const Gf2Matrix basis = u.chain_basis(f);
  const Gf2Matrix basis_inv = *inverse(basis);
  const Gf2Matrix beta_jordan = kron_with_identity(coeff, a);
  const Gf2Matrix gamma_jordan = kron_with_identity(coeff + Gf2Matrix::identity(k), a);
  out.beta = basis * beta_jordan * basis_inv;
  out.gamma = basis * gamma_jordan * basis_inv;
  return out;
}

}  // namespace charsub
