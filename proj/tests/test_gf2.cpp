#include <doctest.h>

#include <random>
#include <set>

#include "charsub/enumerate.hpp"
#include "charsub/errors.hpp"
#include "charsub/gf2.hpp"
#include "charsub/text_format.hpp"
#include "support.hpp"

using namespace charsub;
using namespace charsub::testing;

namespace {

// The 4x4 nilpotent operator with e2 -> e3 -> e4 -> 0 and e1 -> 0.
Gf2Matrix example_f() { return mat({"0000", "0000", "0100", "0010"}); }

Gf2Vector e(std::size_t n, std::size_t i) { return Gf2Vector::unit(n, i - 1); }

}  // namespace

TEST_CASE("vector basics") {
  Gf2Vector v(70);
  CHECK(v.is_zero());
  CHECK(v.lowest_set() == 70);
  v.set(65);
  v.set(3);
  CHECK(v.popcount() == 2);
  CHECK(v.lowest_set() == 3);
  CHECK(v.test(65));
  v.flip(3);
  CHECK(v.lowest_set() == 65);
  CHECK((v + v).is_zero());
  CHECK(vec("1010").to_string() == "1 0 1 0");
  CHECK_THROWS_AS(vec("101") + vec("1010"), DimensionMismatch);
  CHECK(Gf2Vector::from_word(3, 0xFF).popcount() == 3);
}

TEST_CASE("rref") {
  SUBCASE("identity is already canonical") {
    CHECK(rref(Gf2Matrix::identity(3)) == Gf2Matrix::identity(3));
  }
  SUBCASE("one elimination step") {
    const auto m = Gf2Matrix::from_rows(4, {vec("1010"), vec("0010")});
    CHECK(rref(m) == Gf2Matrix::from_rows(4, {vec("1000"), vec("0010")}));
  }
  SUBCASE("random rank-4 6x6 keeps its row span") {
    std::mt19937_64 rng(11);
    Gf2Matrix m;
    do {
      m = random_matrix(6, 4, rng) * random_matrix(4, 6, rng);
    } while (span_set(masks_of(m)).size() != 16);  // oracle: 2^rank members
    const Gf2Matrix r = rref(m);
    std::size_t nonzero = 0;
    for (const auto& row : r.row_vectors()) nonzero += row.is_zero() ? 0 : 1;
    CHECK(nonzero == 4);
    CHECK(span_set(masks_of(r)) == span_set(masks_of(m)));
  }
}

TEST_CASE("rank") {
  CHECK(rank(Gf2Matrix::zero(4, 4)) == 0);
  CHECK(rank(Gf2Matrix::identity(7)) == 7);
  // Oracle: f v over all 16 v hits 4 = 2^2 vectors.
  CHECK(brute_image(masks_of(example_f()), 4).size() == 4);
  CHECK(rank(example_f()) == 2);
}

TEST_CASE("kernel and image") {
  const Gf2Matrix f = example_f();
  CHECK(kernel(f) == Subspace::span(4, {e(4, 1), e(4, 4)}));
  CHECK(kernel(Gf2Matrix::identity(4)).is_zero());

  const Gf2Matrix f2 = f * f;
  CHECK(brute_kernel(masks_of(f2), 4) == std::set<Mask>{0b0000, 0b0001, 0b0100, 0b0101, 0b1000,
                                                        0b1001, 0b1100, 0b1101});
  CHECK(kernel(f2) == Subspace::span(4, {e(4, 1), e(4, 3), e(4, 4)}));

  CHECK(image(f) == Subspace::span(4, {e(4, 3), e(4, 4)}));
  CHECK(image(Gf2Matrix::zero(4, 4)).is_zero());
  CHECK(brute_image(masks_of(f2), 4) == std::set<Mask>{0, 0b1000});
  CHECK(image(f2) == Subspace::span(4, {e(4, 4)}));
}

TEST_CASE("sum and intersect") {
  const Subspace a = Subspace::span(4, {e(4, 1), e(4, 4)});
  const Subspace b = Subspace::span(4, {e(4, 3), e(4, 4)});
  CHECK(sum(a, Subspace(4)) == a);
  CHECK(sum(Subspace::span(4, {e(4, 1)}), Subspace::span(4, {e(4, 4)})) == a);
  CHECK(intersect(a, a) == a);
  CHECK(intersect(a, Subspace(4)).is_zero());
  // Member-set oracle: {0,e1,e4,e1+e4} ∩ {0,e3,e4,e3+e4} = {0,e4}.
  std::set<Mask> meet;
  const auto ma = member_set(a);
  const auto mb = member_set(b);
  for (Mask m : ma) {
    if (mb.count(m)) meet.insert(m);
  }
  CHECK(meet == std::set<Mask>{0, 0b1000});
  CHECK(intersect(a, b) == Subspace::span(4, {e(4, 4)}));

  CHECK_THROWS_AS(sum(a, Subspace(5)), DimensionMismatch);
  CHECK_THROWS_AS(intersect(a, Subspace(3)), DimensionMismatch);
}

TEST_CASE("sum and intersect agree with member-set brute force in GF(2)^5") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Gf2Vector> ga, gb;
    std::uniform_int_distribution<int> count(0, 4);
    for (int i = count(rng); i > 0; --i) ga.push_back(random_vector(5, rng));
    for (int i = count(rng); i > 0; --i) gb.push_back(random_vector(5, rng));
    const Subspace a = Subspace::span(5, ga);
    const Subspace b = Subspace::span(5, gb);
    const auto ma = member_set(a);
    const auto mb = member_set(b);
    std::set<Mask> sums, meet;
    for (Mask x : ma) {
      for (Mask y : mb) sums.insert(x ^ y);
      if (mb.count(x)) meet.insert(x);
    }
    CHECK(member_set(sum(a, b)) == sums);
    CHECK(member_set(intersect(a, b)) == meet);
  }
}

TEST_CASE("contains and map_subspace") {
  const Gf2Vector z = vec("1010");
  const Subspace x = Subspace::span(4, {z, example_f().apply(z)});
  CHECK_FALSE(contains(x, e(4, 1)));
  CHECK(contains(x, e(4, 4)));
  CHECK(contains(x, Gf2Vector(4)));
  CHECK_THROWS_AS(contains(x, Gf2Vector(3)), DimensionMismatch);

  // f applied to the four members {0, z, fz, z+fz} gives {0, e4}.
  std::set<Mask> images;
  for (Mask v : member_set(x)) images.insert(apply_mask(masks_of(example_f()), v));
  CHECK(images == std::set<Mask>{0, 0b1000});
  CHECK(map_subspace(example_f(), x) == Subspace::span(4, {e(4, 4)}));
  CHECK(map_subspace(example_f(), Subspace(4)).is_zero());
  CHECK(map_subspace(Gf2Matrix::identity(4), x) == x);
  CHECK_THROWS_AS(map_subspace(Gf2Matrix::identity(3), x), DimensionMismatch);
}

TEST_CASE("enumerate_vectors") {
  CHECK(enumerate_vectors(Subspace(3)) == std::vector<Gf2Vector>{Gf2Vector(3)});
  const Subspace x = Subspace::span(4, {vec("1010"), vec("0001")});
  CHECK(enumerate_vectors(x) ==
        std::vector<Gf2Vector>{vec("0000"), vec("1010"), vec("0001"), vec("1011")});
  const Subspace plane = Subspace::span(3, {vec("100"), vec("010")});
  CHECK(enumerate_vectors(plane) ==
        std::vector<Gf2Vector>{vec("000"), vec("100"), vec("010"), vec("110")});
  CHECK_THROWS_AS(enumerate_vectors(Subspace::full(10), 9), CapExceeded);
}

TEST_CASE("enumerate_subspaces") {
  CHECK(enumerate_subspaces(1).size() == 2);
  CHECK(enumerate_subspaces(2).size() == 5);   // 1 + 3 + 1
  CHECK(enumerate_subspaces(4).size() == 67);  // 1 + 15 + 35 + 15 + 1
  CHECK(subspace_count(6) == 2825);
  CHECK(gaussian_binomial2(4, 2) == 35);

  // Each subspace exactly once, and every dimension count matches the
  // number of distinct member sets of that size found by brute force.
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = enumerate_subspaces(n);
    std::set<std::set<Mask>> member_sets;
    for (const auto& s : all) member_sets.insert(member_set(s));
    CHECK(member_sets.size() == all.size());
    CHECK(all.size() == subspace_count(n));
  }
  CHECK_THROWS_AS(enumerate_subspaces(9), CapExceeded);
  CHECK(enumerate_subspaces(9, 9).size() == subspace_count(9));
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto pair = random_invertible(6, rng);
    const auto inv = inverse(pair.p);
    REQUIRE(inv.has_value());
    CHECK(*inv == pair.p_inv);
    const Gf2Vector b = random_vector(6, rng);
    const auto x = solve(pair.p, b);
    REQUIRE(x.has_value());
    CHECK(pair.p.apply(*x) == b);
  }
  CHECK_FALSE(inverse(example_f()).has_value());
  CHECK_FALSE(solve(example_f(), vec("1000")).has_value());
  CHECK(solve(example_f(), vec("0011")).has_value());
}

TEST_CASE("algebraic properties") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 9);
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng);
    const Gf2Matrix m = random_matrix(rows, cols, rng);
    CHECK(rref(rref(m)) == rref(m));
    CHECK(rank(m) + kernel(m).dim() == cols);
    CHECK(image(m).dim() == rank(m));
  }
}

TEST_CASE("canonical form is the equality witness") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 6;
    std::vector<Gf2Vector> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_vector(n, rng));
    // A second spanning family of the same space: random combinations plus
    // the originals shuffled.
    std::vector<Gf2Vector> other = gens;
    std::shuffle(other.begin(), other.end(), rng);
    for (int i = 0; i < 3; ++i) {
      Gf2Vector c(n);
      for (const auto& g : gens) {
        if (rng() & 1U) c += g;
      }
      other.push_back(c);
    }
    std::vector<Mask> ma, mb;
    for (const auto& g : gens) ma.push_back(mask_of(g));
    for (const auto& g : other) mb.push_back(mask_of(g));
    REQUIRE(span_set(ma) == span_set(mb));
    CHECK(Subspace::span(n, gens) == Subspace::span(n, other));
  }
}

TEST_CASE("modular law and brute-force lattice ops on all of GF(2)^4") {
  const auto all = enumerate_subspaces(4);
  for (const auto& a : all) {
    const auto ma = member_set(a);
    for (const auto& b : all) {
      const Subspace s = sum(a, b);
      const Subspace m = intersect(a, b);
      CHECK(s.dim() + m.dim() == a.dim() + b.dim());
      const auto mb = member_set(b);
      std::set<Mask> sums, meet;
      for (Mask x : ma) {
        for (Mask y : mb) sums.insert(x ^ y);
        if (mb.count(x)) meet.insert(x);
      }
      REQUIRE(member_set(s) == sums);
      REQUIRE(member_set(m) == meet);
    }
  }
}

TEST_CASE("wide vectors use more than one word") {
  const std::size_t n = 130;
  Gf2Matrix shift(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) shift.set(i + 1, i);
  CHECK(rank(shift) == n - 1);
  CHECK(kernel(shift) == Subspace::span(n, {Gf2Vector::unit(n, n - 1)}));
  CHECK(image(shift).dim() == n - 1);
  CHECK_FALSE(image(shift).contains(Gf2Vector::unit(n, 0)));
  CHECK(shift.power(n).is_zero());
  CHECK_FALSE(shift.power(n - 1).is_zero());
}

TEST_CASE("text format") {
  const Gf2Matrix f = example_f();
  const std::string text = format_matrix(f);
  CHECK(text == "4 4\n0 0 0 0\n0 0 0 0\n0 1 0 0\n0 0 1 0\n");
  CHECK(parse_matrix(text) == f);
  CHECK(parse_matrix("# comment\n2 3\n\n1 0 1\n0 1 1\n") == mat({"101", "011"}));

  const Subspace s = parse_subspace("3 4\n1 0 1 0\n0 0 0 1\n1 0 1 1\n");
  CHECK(s == Subspace::span(4, {vec("1010"), vec("0001")}));
  CHECK(format_subspace(s) == "2 4\n1 0 1 0\n0 0 0 1\n");
  CHECK(parse_subspace("0 4\n").is_zero());

  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 0\n0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 1\n1\n1\n"), ParseError);
}
