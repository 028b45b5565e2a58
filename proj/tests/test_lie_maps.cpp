#include <gtest/gtest.h>

#include "altring/decompose.hpp"
#include "altring/generators.hpp"
#include "altring/lie_checks.hpp"
#include "oracles.hpp"

using namespace altring;
using fixtures::kind_of;

namespace {

constexpr std::int64_t P = 5;

FpVec coords_of(const Json& j, const PrimeField& f) {
  FpVec v;
  for (const auto& x : j) v.push_back(f.parse(x.get<std::string>()));
  return v;
}

bool is_scalar(const oracle::Mat2& m) { return m.b == 0 && m.c == 0 && m.a == m.d; }

oracle::Mat2 inverse(const oracle::Mat2& u, std::int64_t p) {
  PrimeField f(p);
  auto det_inv = f.inv(oracle::md(u.a * u.d - u.b * u.c, p));
  return {oracle::md(u.d * det_inv, p), oracle::md(-u.b * det_inv, p), oracle::md(-u.c * det_inv, p),
          oracle::md(u.a * det_inv, p)};
}

// x -> x^2, which is not Lie multiplicative.
MapTable squaring(const FpRing& r) {
  std::vector<FpVec> images;
  ElementSpace s(r.field(), r.dim());
  for (std::uint64_t k = 0; k < s.size(); ++k) {
    auto x = s.at(k);
    images.push_back(r.mul(x, x));
  }
  return MapTable::dense(r, r, std::move(images));
}

// x -> x + t tr(x) 1 on M2.
MapTable plus_trace_multiple(const FpRing& r, std::int64_t t) {
  const auto& f = r.field();
  return MapTable::structured(r, r, Matrix<PrimeField>::identity(f, r.dim()), trace_functional(r),
                              vec_scale(f, f.from_int(t), FpSpan(r.unit())));
}

const FpVec kE11{1, 0, 0, 0};

}  // namespace

TEST(Builders, NegTransposePlusTraceMatchesOracle) {
  PrimeField f(P);
  auto r = make_m2(f);
  auto m = neg_transpose_plus_trace(r);
  ASSERT_TRUE(m.structured_part());
  auto all = oracle::all_matrices(P);
  ASSERT_EQ(m.size(), all.size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    EXPECT_EQ(oracle::from(m.image(k)), oracle::neg_transpose_plus_trace(all[k], P));
  }
}

TEST(Builders, ConjugationMatchesOracle) {
  PrimeField f(P);
  auto r = make_m2(f);
  const oracle::Mat2 u{1, 1, 0, 1};
  auto m = conjugation_map(r, oracle::coords(u));
  auto ui = inverse(u, P);
  for (const auto& x : oracle::all_matrices(P)) {
    EXPECT_EQ(oracle::from(m(oracle::coords(x))), oracle::mul(oracle::mul(u, x, P), ui, P));
  }
}

TEST(Builders, Errors) {
  PrimeField f(P);
  auto m2 = make_m2(f);
  EXPECT_EQ(kind_of([&] { neg_transpose_plus_trace(make_zorn(PrimeField(3))); }), ErrorKind::NotAssociative);
  EXPECT_EQ(kind_of([&] { neg_transpose_plus_trace(make_triangular2(f)); }), ErrorKind::NotMatrixRing);
  EXPECT_EQ(kind_of([&] { conjugation_map(m2, kE11); }), ErrorKind::NotInvertible);
  EXPECT_EQ(kind_of([&] { MapTable::dense(m2, m2, {}); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([&] { MapTable::dense(m2, make_m2(PrimeField(7)), {}); }), ErrorKind::RingMismatch);
  // The offset must be central once the functional is nonzero.
  EXPECT_EQ(kind_of([&] {
              MapTable::structured(m2, m2, Matrix<PrimeField>::identity(f, 4), trace_functional(m2),
                                   {0, 1, 0, 0});
            }),
            ErrorKind::OffsetNotCentral);
  // ... and the functional must kill commutators: E12 = [E11, E12].
  EXPECT_EQ(kind_of([&] {
              MapTable::structured(m2, m2, Matrix<PrimeField>::identity(f, 4), {0, 1, 0, 0}, m2.unit());
            }),
            ErrorKind::OffsetNotCentral);
  auto id = identity_map(m2);
  auto other = identity_map(make_m2(f));
  EXPECT_EQ(kind_of([&] { compose({id, other}); }), ErrorKind::RingMismatch);
  EXPECT_EQ(kind_of([&] { identity_map(make_zorn(f), 1000); }), ErrorKind::BudgetExceeded);
}

TEST(Builders, ComposeAppliesLeftToRight) {
  PrimeField f(P);
  auto r = make_m2(f);
  const oracle::Mat2 u{1, 1, 0, 1};
  auto c = compose({conjugation_map(r, oracle::coords(u)), neg_transpose_plus_trace(r)});
  auto ui = inverse(u, P);
  for (const auto& x : oracle::all_matrices(P)) {
    auto expected = oracle::neg_transpose_plus_trace(oracle::mul(oracle::mul(u, x, P), ui, P), P);
    EXPECT_EQ(oracle::from(c(oracle::coords(x))), expected);
  }
  EXPECT_FALSE(c.structured_part());
}

TEST(LieMultiplicative, StandardMapsPass) {
  PrimeField f(P);
  auto r = make_m2(f);
  for (const auto& m : {identity_map(r), neg_transpose_plus_trace(r), conjugation_map(r, FpVec{2, 1, 1, 1}),
                        plus_trace_multiple(r, 1)}) {
    auto rep = verify_lie_multiplicative(m);
    EXPECT_TRUE(rep.pass) << to_json(rep).dump();
    EXPECT_EQ(rep.quantifier_space["mode"], "exhaustive");
    EXPECT_EQ(rep.quantifier_space["pairs_checked"], 625 * 625);
  }
}

TEST(LieMultiplicative, SquaringFailsWithCheckableWitness) {
  PrimeField f(P);
  auto r = make_m2(f);
  auto m = squaring(r);
  auto rep = verify_lie_multiplicative(m);
  ASSERT_FALSE(rep.pass);
  auto x = oracle::from(coords_of(rep.witness["x"], f));
  auto y = oracle::from(coords_of(rep.witness["y"], f));
  auto bracket = [](const oracle::Mat2& a, const oracle::Mat2& b) {
    auto ab = oracle::mul(a, b, P), ba = oracle::mul(b, a, P);
    return oracle::Mat2{oracle::md(ab.a - ba.a, P), oracle::md(ab.b - ba.b, P), oracle::md(ab.c - ba.c, P),
                        oracle::md(ab.d - ba.d, P)};
  };
  auto sq = [](const oracle::Mat2& a) { return oracle::mul(a, a, P); };
  EXPECT_NE(sq(bracket(x, y)), bracket(sq(x), sq(y)));
}

TEST(LieMultiplicative, SampledScanIsSeededAndReported) {
  PrimeField f(P);
  auto r = make_m2(f);
  auto m = neg_transpose_plus_trace(r);
  auto a = verify_lie_multiplicative(m, {1000, 7});
  auto b = verify_lie_multiplicative(m, {1000, 7});
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.quantifier_space["mode"], "sampled");
  EXPECT_EQ(to_json(a), to_json(b));
}

TEST(Bijective, DetectsCollapse) {
  PrimeField f(P);
  auto r = make_m2(f);
  EXPECT_TRUE(verify_bijective(neg_transpose_plus_trace(r)).pass);
  // x - tr(x)/2 1 kills the unit.
  auto collapse = plus_trace_multiple(r, 2);  // 2 = -1/2 mod 5
  EXPECT_EQ(collapse(r.unit()), r.zero_vec());
  EXPECT_TRUE(verify_lie_multiplicative(collapse).pass);
  EXPECT_FALSE(verify_bijective(collapse).pass);
  EXPECT_EQ(kind_of([&] { verify_preserves_idempotents(collapse); }), ErrorKind::NotBijective);
}

TEST(PreservesIdempotents, StandardMapsPass) {
  PrimeField f(P);
  auto r = make_m2(f);
  EXPECT_TRUE(verify_preserves_idempotents(identity_map(r)).pass);
  EXPECT_TRUE(verify_preserves_idempotents(neg_transpose_plus_trace(r)).pass);
  EXPECT_TRUE(verify_preserves_idempotents(conjugation_map(r, FpVec{1, 1, 0, 1})).pass);
}

TEST(PreservesIdempotents, TraceShiftFailsWithWitness) {
  PrimeField f(P);
  auto r = make_m2(f);
  auto m = plus_trace_multiple(r, 1);
  EXPECT_TRUE(verify_bijective(m).pass);
  auto rep = verify_preserves_idempotents(m);
  ASSERT_FALSE(rep.pass);
  // Replay the witness with the oracle: exactly one side is idempotent.
  auto src = oracle::from(coords_of(rep.witness["source_element"], f));
  auto tgt = oracle::from(coords_of(rep.witness["target_element"], f));
  EXPECT_EQ(oracle::mul(tgt, tgt, P) == tgt, rep.witness["target_idempotent"].get<bool>());
  EXPECT_NE(oracle::mul(src, src, P) == src, oracle::mul(tgt, tgt, P) == tgt);
}

TEST(PreservesIdempotents, RefusesSmallCharacteristic) {
  PrimeField f(3);
  auto r = make_m2(f);
  EXPECT_EQ(kind_of([&] { verify_preserves_idempotents(identity_map(r)); }), ErrorKind::UnsupportedDomain);
}

TEST(Consequences, HoldForNegTransposePlusTrace) {
  PrimeField f(P);
  auto reports = check_bijection_consequences(neg_transpose_plus_trace(make_m2(f)));
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_TRUE(all_pass(reports)) << to_json(reports).dump();
}

TEST(AlmostAdditive, CentralPerturbationsKeepItNonCentralOnesBreakIt) {
  PrimeField f(P);
  auto r = make_m2(f);
  auto m = neg_transpose_plus_trace(r);
  EXPECT_TRUE(check_almost_additivity(m).pass);
  // Moving one value by a central element leaves every defect central.
  auto central = m.with_entry(7, vec_add(f, FpSpan(m.image(7)), FpSpan(r.unit())));
  EXPECT_TRUE(check_almost_additivity(central).pass);
  auto broken = m.with_entry(7, vec_add(f, FpSpan(m.image(7)), FpSpan(FpVec{0, 1, 0, 0})));
  auto rep = check_almost_additivity(broken);
  ASSERT_FALSE(rep.pass);
  auto a = oracle::from(coords_of(rep.witness["a"], f));
  auto b = oracle::from(coords_of(rep.witness["b"], f));
  auto sum = oracle::coords(oracle::Mat2{oracle::md(a.a + b.a, P), oracle::md(a.b + b.b, P),
                                         oracle::md(a.c + b.c, P), oracle::md(a.d + b.d, P)});
  auto defect = vec_sub(f, FpSpan(broken(sum)),
                        FpSpan(vec_add(f, FpSpan(broken(oracle::coords(a))), FpSpan(broken(oracle::coords(b))))));
  EXPECT_FALSE(is_scalar(oracle::from(defect)));
}

TEST(PeirceImage, NegTransposePlusTraceRespectsCells) {
  PrimeField f(P);
  auto r = make_m2(f);
  auto m = neg_transpose_plus_trace(r);
  EXPECT_EQ(image_idempotent(m, kE11), (FpVec{0, 0, 0, 1}));
  auto reports = check_peirce_image(m, kE11);
  EXPECT_TRUE(all_pass(reports)) << to_json(reports).dump();
  auto collapse = plus_trace_multiple(r, 2);
  EXPECT_EQ(kind_of([&] { image_idempotent(collapse, r.unit()); }), ErrorKind::NotIdempotentImage);
}

TEST(Branch, BothHoldOnTwoByTwoMatrices) {
  PrimeField f(P);
  auto r = make_m2(f);
  for (const auto& m : {identity_map(r), neg_transpose_plus_trace(r), conjugation_map(r, FpVec{1, 1, 0, 1})}) {
    auto b = detect_branch(m, kE11);
    EXPECT_TRUE(b.dagger);
    EXPECT_TRUE(b.double_dagger);
    EXPECT_EQ(b.parts.size(), 4u);
  }
}

TEST(Decompose, NegTransposePlusTraceUnderDoubleDagger) {
  PrimeField f(P);
  auto r = make_m2(f);
  auto m = neg_transpose_plus_trace(r);
  auto d = decompose(m, kE11, {Branch::DoubleDagger, {}});
  EXPECT_EQ(d.branch, Branch::DoubleDagger);
  auto all = oracle::all_matrices(P);
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& x = all[k];
    EXPECT_EQ(oracle::from(d.psi_table[k]), oracle::neg_transpose(x, P));
    const auto t = oracle::md(x.a + x.d, P);
    EXPECT_EQ(oracle::from(d.tau[k]), (oracle::Mat2{t, 0, 0, t}));
  }
  for (const auto& c : d.certificates) EXPECT_TRUE(c.pass || !c.required) << c.condition;
  EXPECT_NE(find_report(d.certificates, "neg_antihomomorphism"), nullptr);
  EXPECT_NE(find_report(d.certificates, "antihom_case_V"), nullptr);
}

// Under the other branch the same map splits as a conjugation plus a
// central part; check psi is multiplicative and tau scalar with the oracle.
TEST(Decompose, NegTransposePlusTraceUnderDagger) {
  PrimeField f(P);
  auto r = make_m2(f);
  auto m = neg_transpose_plus_trace(r);
  auto d = decompose(m, kE11, {Branch::Dagger, {}});
  auto all = oracle::all_matrices(P);
  for (std::size_t k = 0; k < all.size(); ++k) {
    EXPECT_TRUE(is_scalar(oracle::from(d.tau[k])));
    auto sum = vec_add(f, FpSpan(d.psi_table[k]), FpSpan(d.tau[k]));
    EXPECT_EQ(sum, m.image(k));
  }
  for (std::size_t i = 0; i < all.size(); i += 7)
    for (std::size_t j = 0; j < all.size(); j += 11) {
      auto prod = oracle::mul(all[i], all[j], P);
      auto psi_prod = oracle::from(d.psi_table[m.source_space().index_of(oracle::coords(prod))]);
      EXPECT_EQ(psi_prod, oracle::mul(oracle::from(d.psi_table[i]), oracle::from(d.psi_table[j]), P));
    }
}

TEST(Decompose, ConjugationIsItsOwnPsi) {
  PrimeField f(P);
  auto r = make_m2(f);
  const FpVec u{1, 1, 0, 1};
  auto m = conjugation_map(r, u);
  auto d = decompose(m, kE11, {Branch::Dagger, {}});
  auto expected = conjugation_matrix(r, u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(d.psi(i, j), expected(i, j));
  for (const auto& t : d.tau) EXPECT_EQ(t, r.zero_vec());
  EXPECT_NE(find_report(d.certificates, "hom_case_I"), nullptr);
}

TEST(Decompose, BothBranchesWithoutChoiceIsUndetermined) {
  PrimeField f(P);
  auto r = make_m2(f);
  EXPECT_EQ(kind_of([&] { decompose(identity_map(r), kE11); }), ErrorKind::BranchUndetermined);
}

TEST(Decompose, SourceHypothesisFailures) {
  PrimeField f(3);
  auto sum = make_direct_sum(make_m2(f), make_m2(f));
  try {
    split_map(identity_map(sum), FpVec{1, 0, 0, 0, 1, 0, 0, 0}, {Branch::Dagger, {}});
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisFailed);
    EXPECT_EQ(e.detail()["condition"], "condition_4");
  }
  auto tri = make_triangular2(PrimeField(P));
  try {
    split_map(identity_map(tri), FpVec{1, 0, 0}, {Branch::Dagger, {}});
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisFailed);
    EXPECT_EQ(e.detail()["condition"], "condition_1");
  }
}

TEST(Decompose, CommutativeTargetMakesCentralSplitAmbiguous) {
  PrimeField f(P);
  auto m2 = make_m2(f);
  auto target = fixtures::split_commutative4(f);
  auto m = linear_map(m2, target, Matrix<PrimeField>::identity(f, 4));
  EXPECT_EQ(kind_of([&] { split_map(m, kE11, {Branch::Dagger, {}}); }), ErrorKind::AmbiguousCentralSplit);
}

TEST(Decompose, NonMultiplicativeScalingFailsCertification) {
  PrimeField f(P);
  auto r = make_m2(f);
  auto scale = Matrix<PrimeField>::identity(f, 4);
  scale(1, 1) = 2;  // E12 -> 2 E12, everything else fixed
  auto m = linear_map(r, r, scale);
  try {
    decompose(m, kE11, {Branch::Dagger, {}});
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CertificationFailed);
    EXPECT_EQ(e.detail()["certificate"], "homomorphism");
    auto a = oracle::from(coords_of(e.detail()["witness"]["a"], f));
    auto b = oracle::from(coords_of(e.detail()["witness"]["b"], f));
    auto psi = [&](const oracle::Mat2& x) { return oracle::from(m(oracle::coords(x))); };
    EXPECT_NE(psi(oracle::mul(a, b, P)), oracle::mul(psi(a), psi(b), P));
  }
}

TEST(Decompose, CorruptedPsiTableIsCaught) {
  PrimeField f(P);
  auto r = make_m2(f);
  auto m = conjugation_map(r, FpVec{1, 1, 0, 1});
  auto d = split_map(m, kE11, {Branch::Dagger, {}});
  EXPECT_TRUE(all_pass(verify_decomposition(m, d)));
  const std::uint64_t k = m.source_space().index_of(FpVec{1, 1, 0, 0});
  d.psi_table[k] = vec_add(f, FpSpan(d.psi_table[k]), FpSpan(FpVec{0, 0, 1, 0}));
  auto certs = verify_decomposition(m, d);
  auto* rec = find_report(certs, "recomposition");
  ASSERT_TRUE(rec);
  EXPECT_FALSE(rec->pass);
  EXPECT_EQ(rec->witness["x"], Json::array({"1", "1", "0", "0"}));
  EXPECT_FALSE(find_report(certs, "psi_matrix_consistent")->pass);
  EXPECT_FALSE(find_report(certs, "psi_additive")->pass);
  EXPECT_TRUE(find_report(certs, "tau_central")->pass);
}

TEST(Decompose, ZornIdentityUnderEitherBranch) {
  // Zorn over F_3 keeps the table small; both corners are one-dimensional.
  PrimeField f(3);
  auto r = make_zorn(f);
  auto m = identity_map(r);
  auto e = zorn_corner_idempotent(f);
  auto d = decompose(m, e, {Branch::Dagger, {}});
  for (const auto& t : d.tau) EXPECT_EQ(t, r.zero_vec());
  auto dd = decompose(m, e, {Branch::DoubleDagger, {}});
  for (std::size_t k = 0; k < dd.tau.size(); ++k) {
    EXPECT_TRUE(center(r).contains(FpSpan(dd.tau[k])));
  }
}
