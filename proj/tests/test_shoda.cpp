#include <doctest.h>

#include <random>
#include <set>

#include "charsub/census.hpp"
#include "charsub/errors.hpp"
#include "charsub/shoda.hpp"
#include "support.hpp"

using namespace charsub;
using namespace charsub::testing;

namespace {

Gf2Matrix example_f() { return mat({"0000", "0000", "0100", "0010"}); }

NilpotentOperator jordan(std::vector<std::size_t> sizes) {
  return validate_nilpotent(jordan_matrix(sizes));
}

// Direct reading of the definition: some r < s, s > r + 1, one block each.
bool brute_shoda(const std::vector<std::size_t>& sizes) {
  for (std::size_t r : sizes) {
    for (std::size_t s : sizes) {
      if (s > r + 1 && std::count(sizes.begin(), sizes.end(), r) == 1 &&
          std::count(sizes.begin(), sizes.end(), s) == 1)
        return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("shoda_condition and ulm_form_condition") {
  CHECK(shoda_condition(UlmSequence({1, 0, 1})));
  CHECK_FALSE(shoda_condition(UlmSequence({1, 1})));
  CHECK_FALSE(shoda_condition(UlmSequence({0, 2})));
  CHECK_FALSE(ulm_form_condition(UlmSequence({1, 0, 1})));
  CHECK(ulm_form_condition(UlmSequence({1, 1, 0})));
  CHECK_FALSE(ulm_form_condition(UlmSequence({1, 1, 1})));
  CHECK(ulm_form_condition(UlmSequence{}));

  CHECK(shoda_block_sizes(UlmSequence({1, 0, 1})) == std::make_pair<std::size_t, std::size_t>(1, 3));
  CHECK(shoda_block_sizes(UlmSequence({1, 1, 1, 1})) ==
        std::make_pair<std::size_t, std::size_t>(1, 3));
  CHECK_FALSE(shoda_block_sizes(UlmSequence({0, 2, 0, 0, 1})));

  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& sizes : partitions(n)) {
      const auto u = UlmSequence::from_block_sizes(sizes);
      CHECK(shoda_condition(u) == brute_shoda(sizes));
      CHECK(shoda_condition(u) != ulm_form_condition(u));
      CHECK(shoda_block_sizes(u).has_value() == shoda_condition(u));
    }
  }
}

TEST_CASE("construct_z") {
  SUBCASE("golden example") {
    const auto f = validate_nilpotent(example_f());
    const auto u = generator_tuple(f);
    CHECK(construct_z(f, u, 0, 1) == vec("1010"));
  }
  SUBCASE("t = (1, 4)") {
    const auto f = jordan({1, 4});
    const auto u = generator_tuple(f);
    const Gf2Vector z = construct_z(f, u, 0, 1);
    CHECK(z == u.generator(0) + f.matrix().power(2).apply(u.generator(1)));
    CHECK(exponent(f, z) == 2);
    CHECK(height(f, z) == Height(0));
    CHECK(height(f, f.apply(z)) == Height(3));
  }
  SUBCASE("errors") {
    const auto f = jordan({2, 2});
    CHECK_THROWS_AS(construct_z(f, generator_tuple(f), 0, 1), ShodaConditionFails);
    const auto g = jordan({1, 2});
    CHECK_THROWS_AS(construct_z(g, generator_tuple(g), 0, 1), ShodaConditionFails);
    const auto h = jordan({1, 3, 3});
    CHECK_THROWS_AS(construct_z(h, generator_tuple(h), 0, 1), ShodaConditionFails);
  }
}

TEST_CASE("construct_y_span and the oracle") {
  SUBCASE("golden example: Y spans X") {
    const auto f = validate_nilpotent(example_f());
    const auto u = generator_tuple(f);
    const Subspace x = Subspace::span(4, {vec("1010"), vec("0001")});
    CHECK(construct_y_span(f, u, 0, 1) == x);
    CHECK(enumerate_y_oracle(f, 1, 3) == x);
    CHECK(cyclic_subspace(f, vec("1010")) == x);
  }
  SUBCASE("t = (1, 2, 4): middle socle only") {
    const auto f = jordan({1, 2, 4});
    const auto u = generator_tuple(f);
    const Subspace y = construct_y_span(f, u, 0, 2);
    CHECK(y.dim() == 3);
    CHECK(y == enumerate_y_oracle(f, 1, 4));
  }
  SUBCASE("t = (1, 3, 4): tail only") {
    const auto f = jordan({1, 3, 4});
    const auto u = generator_tuple(f);
    const Subspace y = construct_y_span(f, u, 0, 1);
    CHECK(y.dim() == 4);
    CHECK(y == enumerate_y_oracle(f, 1, 3));
  }
  SUBCASE("t = (1, 3, 5) with the outer classes") {
    const auto f = jordan({1, 3, 5});
    CHECK(construct_y_span(f, generator_tuple(f), 0, 2) == enumerate_y_oracle(f, 1, 5));
  }
  SUBCASE("no candidates for t = (2, 2)") {
    CHECK(enumerate_y_oracle(jordan({2, 2}), 1, 3).is_zero());
  }
  SUBCASE("every valid pair for n <= 8, conjugated") {
    std::mt19937_64 rng(55);
    for (std::size_t n = 4; n <= 8; ++n) {
      for (const auto& sizes : partitions(n)) {
        const auto f = validate_nilpotent(conjugated_jordan(sizes, rng));
        const auto u = generator_tuple(f);
        const auto& cls = u.classes();
        for (std::size_t i = 0; i < cls.size(); ++i) {
          for (std::size_t j = i + 1; j < cls.size(); ++j) {
            if (cls[i].count != 1 || cls[j].count != 1 || cls[i].exponent + 1 >= cls[j].exponent)
              continue;
            const auto w = make_shoda_witness(f, u, i, j);
            CHECK(w.y_span == enumerate_y_oracle(f, w.a_rho, w.a_tau));
            CHECK(w.y_span.contains(w.z));
            CHECK(is_invariant(f, w.y_span));
          }
        }
      }
    }
  }
}

TEST_CASE("counterexample") {
  SUBCASE("golden example") {
    const auto f = validate_nilpotent(example_f());
    const auto c = counterexample(f);
    REQUIRE(c);
    CHECK(c->subspace == Subspace::span(4, {vec("1010"), vec("0001")}));
    CHECK(c->witness.rho_index == 0);
    CHECK(c->witness.tau_index == 1);
    CHECK(c->witness.z == vec("1010"));
    CHECK(c->projection == mat({"1000", "0000", "0000", "0000"}));
    CHECK(c->projected_z == vec("1000"));
    CHECK(c->method == CharacteristicMethod::Exhaustive);
  }
  SUBCASE("no counterexample") {
    CHECK_FALSE(counterexample(jordan({5})));
    CHECK_FALSE(counterexample(jordan({2, 2, 5})));
    CHECK_FALSE(counterexample(jordan({1, 2})));
  }
  SUBCASE("verified for every shoda configuration with n <= 8") {
    std::mt19937_64 rng(66);
    for (std::size_t n = 4; n <= 8; ++n) {
      for (const auto& sizes : partitions(n)) {
        const auto f = validate_nilpotent(conjugated_jordan(sizes, rng));
        const auto c = counterexample(f);
        CHECK(c.has_value() == brute_shoda(sizes));
        if (!c) continue;
        CHECK(is_characteristic(f, c->subspace).characteristic);
        CHECK_FALSE(is_hyperinvariant(f, c->subspace).hyperinvariant);
        CHECK(commutes(c->projection, f));
        CHECK_FALSE(c->subspace.contains(c->projected_z));
      }
    }
  }
}

TEST_CASE("lattice census") {
  SUBCASE("golden example") {
    const auto census = lattice_census(validate_nilpotent(example_f()));
    CHECK(census.subspaces_scanned == 67);
    CHECK(census.complete);
    CHECK(census.hyperinvariant_count() == 6);
    CHECK(census.chinv_exceeds_hinv());
    const auto extra = census.characteristic_not_hyperinvariant();
    CHECK(std::find(extra.begin(), extra.end(),
                    Subspace::span(4, {vec("1010"), vec("0001")})) != extra.end());
    for (const auto& e : census.invariant) CHECK(e.hyperinvariant == (e.characteristic && e.marked));
  }
  SUBCASE("invariant counts against brute force for n <= 4") {
    std::mt19937_64 rng(9);
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const auto& sizes : partitions(n)) {
        const Gf2Matrix m = conjugated_jordan(sizes, rng);
        const auto census = lattice_census(validate_nilpotent(m));
        const auto fm = masks_of(m);
        std::size_t invariant = 0;
        for (const auto& s : enumerate_subspaces(n)) {
          if (brute_stable({fm}, member_set(s))) ++invariant;
        }
        CHECK(census.invariant.size() == invariant);
      }
    }
  }
  SUBCASE("Chinv exceeds Hinv exactly under the shoda condition, n <= 5") {
    std::mt19937_64 rng(10);
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const auto& sizes : partitions(n)) {
        const auto census = lattice_census(validate_nilpotent(conjugated_jordan(sizes, rng)),
                                           CensusOptions{.max_dim = 6,
                                                         .classifier = {},
                                                         .evaluate_marked = false});
        CHECK(census.chinv_exceeds_hinv() == brute_shoda(sizes));
      }
    }
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(lattice_census(jordan({7})), CapExceeded);
  }
}

TEST_CASE("counterexample exists exactly when the census finds Chinv > Hinv, n <= 7") {
  std::mt19937_64 rng(70);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& sizes : partitions(n)) {
      const auto f = validate_nilpotent(conjugated_jordan(sizes, rng));
      const auto census = lattice_census(f, CensusOptions{.max_dim = 7,
                                                          .classifier = {},
                                                          .evaluate_marked = false});
      CAPTURE(n);
      CHECK(census.complete);
      const auto c = counterexample(f);
      CHECK(c.has_value() == census.chinv_exceeds_hinv());
      if (c) {
        const auto extra = census.characteristic_not_hyperinvariant();
        CHECK(std::find(extra.begin(), extra.end(), c->subspace) != extra.end());
      }
    }
  }
}
