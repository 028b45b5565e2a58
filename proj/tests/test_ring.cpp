#include <gtest/gtest.h>

#include <random>

#include "altring/generators.hpp"
#include "altring/identities.hpp"
#include "altring/ring_io.hpp"
#include "oracles.hpp"

using namespace altring;
using fixtures::kind_of;

namespace {

std::span<const std::int64_t> sp(const Vec<PrimeField>& v) { return v; }

}  // namespace

TEST(Ring, CreateValidatesShapeAndUnit) {
  PrimeField f(5);
  EXPECT_EQ(kind_of([&] { Ring<PrimeField>::create("empty", f, {}, {}, {}); }), ErrorKind::InvalidRing);
  EXPECT_EQ(kind_of([&] { Ring<PrimeField>::create("short", f, {"a"}, {1, 0}, {1}); }),
            ErrorKind::InvalidRing);
  // b * b = b but the declared unit is 0.
  EXPECT_EQ(kind_of([&] { Ring<PrimeField>::create("no_unit", f, {"b"}, {1}, {0}); }),
            ErrorKind::InvalidRing);
}

TEST(Ring, ElementsFromDifferentRingsDoNotMix) {
  PrimeField f(5);
  auto a = make_m2(f);
  auto b = make_m2(f);
  EXPECT_FALSE(a == b);
  auto copy = a;
  EXPECT_TRUE(copy == a);
  EXPECT_EQ(kind_of([&] { a.mul(a.one(), b.one()); }), ErrorKind::RingMismatch);
  EXPECT_EQ(kind_of([&] { a.add(a.element({1, 0, 0, 0}), b.zero()); }), ErrorKind::RingMismatch);
}

TEST(Ring, M2MultiplicationMatchesMatrixOracle) {
  PrimeField f(5);
  auto r = make_m2(f);
  std::mt19937_64 rng(1);
  auto all = oracle::all_matrices(5);
  for (int t = 0; t < 500; ++t) {
    const auto& x = all[rng() % all.size()];
    const auto& y = all[rng() % all.size()];
    auto got = r.mul(oracle::coords(x), oracle::coords(y));
    EXPECT_EQ(oracle::from(got), oracle::mul(x, y, 5));
  }
}

TEST(Ring, MultiplicationIsBilinearAndCommutatorAntisymmetric) {
  PrimeField f(7);
  auto r = make_zorn(f);
  std::mt19937_64 rng(2);
  auto rnd = [&] {
    Vec<PrimeField> v(r.dim());
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % 7);
    return v;
  };
  for (int t = 0; t < 200; ++t) {
    auto x = rnd(), y = rnd(), z = rnd();
    std::int64_t s = static_cast<std::int64_t>(rng() % 7);
    auto sx_plus_y = vec_add(f, sp(vec_scale(f, s, std::span<const std::int64_t>(x))),
                             std::span<const std::int64_t>(y));
    auto lhs = r.mul(sx_plus_y, z);
    auto rhs = vec_add(f, sp(vec_scale(f, s, sp(r.mul(x, z)))), sp(r.mul(y, z)));
    EXPECT_EQ(lhs, rhs);
    auto c1 = r.commutator(x, y);
    auto c2 = r.commutator(y, x);
    EXPECT_EQ(c1, vec_neg(f, sp(c2)));
  }
}

TEST(Identities, ClassifiesTheStandardRings) {
  PrimeField f(5);
  EXPECT_TRUE(is_associative(make_m2(f)).holds);
  EXPECT_TRUE(is_associative(make_triangular2(f)).holds);

  auto zorn = make_zorn(f);
  EXPECT_TRUE(is_alternative(zorn).holds);
  EXPECT_TRUE(is_flexible(zorn).holds);
  auto assoc = is_associative(zorn);
  ASSERT_FALSE(assoc.holds);
  ASSERT_TRUE(assoc.witness);
  const auto& [x, y, z] = *assoc.witness;
  auto assoc_value = vec_sub(f, sp(zorn.mul(zorn.mul(x, y), z)), sp(zorn.mul(x, zorn.mul(y, z))));
  EXPECT_FALSE(is_zero_vec(f, sp(assoc_value)));
}

TEST(Identities, PerturbedM2IsNotAlternative) {
  PrimeField f(5);
  auto r = fixtures::perturbed_m2(f);
  auto check = is_alternative(r);
  ASSERT_FALSE(check.holds);
  EXPECT_FALSE(check.law.empty());
  ASSERT_TRUE(check.witness);
  const auto& [x, y, z] = *check.witness;
  auto a = vec_sub(f, sp(r.mul(r.mul(x, y), z)), sp(r.mul(x, r.mul(y, z))));
  EXPECT_FALSE(is_zero_vec(f, sp(a)));
  // Direct oracle: (E12, E12, E11) = E21 E11 - E12 (E12 E11) = E21.
  auto e11 = r.basis_vec(0), e12 = r.basis_vec(1);
  auto direct = vec_sub(f, sp(r.mul(r.mul(e12, e12), e11)), sp(r.mul(e12, r.mul(e12, e11))));
  EXPECT_EQ(direct, r.basis_vec(2));
}

// Any unital algebra of dimension 2 is associative, whatever b^2 is.
TEST(Identities, EveryTwoDimensionalUnitalAlgebraIsAssociative) {
  PrimeField f(5);
  for (std::int64_t s = 0; s < 5; ++s)
    for (std::int64_t t = 0; t < 5; ++t) {
      EXPECT_TRUE(is_associative(fixtures::two_dim(f, s, t)).holds) << s << "," << t;
    }
}

TEST(Identities, ChecksAgreeWithBruteForceOnSmallField) {
  // Over F_3 the Zorn algebra has 3^8 elements; brute-force the left
  // alternative law on a random sample of full elements, not just the
  // polarization points.
  PrimeField f(3);
  auto r = make_zorn(f);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    Vec<PrimeField> x(8), y(8);
    for (auto& v : x) v = static_cast<std::int64_t>(rng() % 3);
    for (auto& v : y) v = static_cast<std::int64_t>(rng() % 3);
    EXPECT_EQ(r.mul(r.mul(x, x), y), r.mul(x, r.mul(x, y)));
    EXPECT_EQ(r.mul(r.mul(y, x), x), r.mul(y, r.mul(x, x)));
  }
}

TEST(Identities, TorsionFreeness) {
  EXPECT_TRUE(is_k_torsion_free(make_m2(PrimeField(5)), 2));
  EXPECT_TRUE(is_k_torsion_free(make_m2(PrimeField(5)), 3));
  EXPECT_FALSE(is_k_torsion_free(make_m2(PrimeField(3)), 3));
  EXPECT_FALSE(is_k_torsion_free(make_m2(PrimeField(2)), 2));
  EXPECT_TRUE(is_k_torsion_free(make_m2(Rationals{}), 6));
}

TEST(Generators, DirectSumNamesAndUnit) {
  PrimeField f(5);
  auto s = make_direct_sum(make_m2(f), make_m2(f));
  EXPECT_EQ(s.dim(), 8u);
  EXPECT_EQ(s.name(), "m2_f5_plus_m2_f5");
  EXPECT_EQ(s.unit(), (Vec<PrimeField>{1, 0, 0, 1, 1, 0, 0, 1}));
  EXPECT_TRUE(is_associative(s).holds);
  EXPECT_EQ(kind_of([&] { make_direct_sum(make_m2(f), make_m2(PrimeField(7))); }),
            ErrorKind::RingMismatch);
}

TEST(RingIo, RoundTripPreservesConstants) {
  for (const AnyRing& r : {AnyRing(make_zorn(PrimeField(5))), AnyRing(make_m2(Rationals{})),
                           AnyRing(make_triangular2(PrimeField(7)))}) {
    auto j = ring_to_json(r);
    auto back = ring_from_json(j);
    EXPECT_EQ(ring_to_json(back), j);
  }
}

TEST(RingIo, RationalCoefficientsParse) {
  Json j = ring_to_json(make_m2(Rationals{}));
  j["unit"] = Json::array({"2/2", 0, 0, "1"});
  auto r = std::get<Ring<Rationals>>(ring_from_json(j));
  EXPECT_EQ(r.unit(), make_m2(Rationals{}).unit());
}

TEST(RingIo, MalformedInputIsAParseError) {
  Json good = ring_to_json(make_m2(PrimeField(5)));

  Json bad_unit = good;
  bad_unit["unit"] = Json::array({1, 0, 0, 0});
  try {
    ring_from_json(bad_unit);
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("unit axiom"), std::string::npos) << e.what();
  }

  Json bad_domain = good;
  bad_domain["domain"] = Json{{"Fp", 6}};
  EXPECT_EQ(kind_of([&] { ring_from_json(bad_domain); }), ErrorKind::ParseError);

  Json bad_shape = good;
  bad_shape["mul"].erase(0);
  EXPECT_EQ(kind_of([&] { ring_from_json(bad_shape); }), ErrorKind::ParseError);

  Json missing = good;
  missing.erase("basis");
  EXPECT_EQ(kind_of([&] { ring_from_json(missing); }), ErrorKind::ParseError);

  EXPECT_EQ(kind_of([&] { load_ring("/nonexistent/ring.json"); }), ErrorKind::ParseError);
}

TEST(RingIo, ParseCoords) {
  PrimeField f(5);
  EXPECT_EQ(parse_coords(f, "1,0,-1,1/2", 4), (Vec<PrimeField>{1, 0, 4, 3}));
  EXPECT_EQ(kind_of([&] { parse_coords(f, "1,0", 4); }), ErrorKind::ParseError);
}
