#include <gtest/gtest.h>

#include "altring/generators.hpp"
#include "altring/pipeline.hpp"
#include "oracles.hpp"

using namespace altring;

namespace {

const FpVec kE11{1, 0, 0, 0};

std::vector<std::string> stage_names(const TheoremReport& r) {
  std::vector<std::string> out;
  for (const auto& s : r.stages) out.push_back(s.name);
  return out;
}

}  // namespace

TEST(Theorem, NegTransposePlusTracePassesEveryStage) {
  PrimeField f(5);
  auto r = make_m2(f);
  auto report = verify_theorem(neg_transpose_plus_trace(r), kE11, {Branch::DoubleDagger, {}});
  EXPECT_TRUE(report.pass()) << report.to_json().dump(2);
  EXPECT_EQ(report.exit_code(), 0);
  EXPECT_EQ(stage_names(report),
            (std::vector<std::string>{"ring_hypotheses", "lie_multiplicative", "bijective",
                                      "preserves_idempotents", "consequences", "almost_additive",
                                      "hypotheses", "peirce_image", "branch", "decomposition"}));
  ASSERT_TRUE(report.decomposition);
  EXPECT_TRUE(report.failed().empty());
  auto j = report.to_json();
  EXPECT_TRUE(j["halted_at"].is_null());
  EXPECT_EQ(j["decomposition"]["branch"], "ddagger");
}

TEST(Theorem, MissingBranchChoiceIsAUsageError) {
  PrimeField f(5);
  auto r = make_m2(f);
  auto report = verify_theorem(identity_map(r), kE11);
  EXPECT_FALSE(report.usage_error.empty());
  EXPECT_EQ(report.exit_code(), 2);
  EXPECT_EQ(report.halted_at, "branch");
  EXPECT_FALSE(report.decomposition);
}

TEST(Theorem, TraceShiftHaltsAtIdempotentPreservation) {
  PrimeField f(5);
  auto r = make_m2(f);
  auto m = MapTable::structured(r, r, Matrix<PrimeField>::identity(f, 4), trace_functional(r), r.unit());
  auto report = verify_theorem(m, kE11, {Branch::Dagger, {}});
  EXPECT_EQ(report.exit_code(), 1);
  EXPECT_EQ(report.halted_at, "preserves_idempotents");
  ASSERT_EQ(report.failed().size(), 1u);
  EXPECT_FALSE(report.failed()[0].witness.is_null());
}

TEST(Theorem, CorruptedEntryHaltsWithOneFailure) {
  PrimeField f(5);
  auto r = make_m2(f);
  auto m = neg_transpose_plus_trace(r).with_entry(5, FpVec{0, 2, 0, 0});
  auto report = verify_theorem(m, kE11, {Branch::DoubleDagger, {}});
  EXPECT_EQ(report.exit_code(), 1);
  EXPECT_EQ(report.halted_at, "lie_multiplicative");
  ASSERT_EQ(report.failed().size(), 1u);
  EXPECT_EQ(report.failed()[0].condition, "lie_multiplicative");
}

TEST(Theorem, NonAlternativeSourceHaltsFirst) {
  PrimeField f(5);
  auto r = fixtures::perturbed_m2(f);
  auto report = verify_theorem(identity_map(r), kE11);
  EXPECT_EQ(report.halted_at, "ring_hypotheses");
  ASSERT_EQ(report.failed().size(), 2u);  // source and target are the same ring
  EXPECT_EQ(report.failed()[0].condition, "source_alternative");
}

TEST(Theorem, CharacteristicThreeFailsTorsion) {
  PrimeField f(3);
  auto r = make_m2(f);
  auto report = verify_theorem(identity_map(r), kE11);
  EXPECT_EQ(report.halted_at, "ring_hypotheses");
  ASSERT_EQ(report.failed().size(), 1u);
  EXPECT_EQ(report.failed()[0].condition, "source_3_torsion_free");
}

TEST(Theorem, ReportsAreDeterministic) {
  PrimeField f(5);
  auto r = make_m2(f);
  auto m = conjugation_map(r, FpVec{1, 2, 0, 1});
  TheoremOptions opts{Branch::Dagger, {200000, 11}};  // forces seeded sampling
  auto a = verify_theorem(m, kE11, opts).to_json().dump();
  auto b = verify_theorem(m, kE11, opts).to_json().dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"sampled\""), std::string::npos);
}

TEST(Commands, AnalyzeM2) {
  auto j = analyze_ring(make_m2(PrimeField(5)));
  EXPECT_EQ(j["centre"]["dim"], 1);
  EXPECT_EQ(j["nucleus"]["dim"], 4);
  EXPECT_EQ(j["idempotents"]["total"], oracle::m2_idempotent_count(5));
  EXPECT_EQ(j["idempotents"]["nontrivial"], oracle::m2_idempotent_count(5) - 2);
  EXPECT_TRUE(j["primeness"]["prime"].get<bool>());
  EXPECT_FALSE(j["partial"].get<bool>());
}

TEST(Commands, AnalyzeOverQIsPartial) {
  auto j = analyze_ring(make_m2(Rationals{}));
  EXPECT_TRUE(j["partial"].get<bool>());
  EXPECT_EQ(j["idempotents"]["status"], "skipped");
  EXPECT_EQ(j["idempotents"]["reason"], "UnsupportedDomain");
  EXPECT_EQ(j["centre"]["dim"], 1);
}

TEST(Commands, AnalyzeOverBudgetIsPartial) {
  auto j = analyze_ring(make_zorn(PrimeField(5)), {1000, 0});
  EXPECT_TRUE(j["partial"].get<bool>());
  EXPECT_EQ(j["idempotents"]["reason"], "BudgetExceeded");
}

TEST(Commands, PeirceAndConditionsReports) {
  AnyRing r = make_zorn(PrimeField(5));
  auto p = peirce_report(r, "1,0,0,0,0,0,0,0");
  EXPECT_TRUE(p["pass"].get<bool>());
  EXPECT_EQ(p["dims"], Json::array({1, 3, 3, 1}));
  auto c = conditions_report(r, "1,0,0,0,0,0,0,0");
  for (const auto& rep : c["conditions"]) EXPECT_TRUE(rep["pass"].get<bool>()) << rep.dump();
  for (const auto& rep : c["diagonal_centrality"]) EXPECT_TRUE(rep["pass"].get<bool>()) << rep.dump();
}

TEST(Commands, TextRenderingHasOneLinePerCheck) {
  AnyRing r = make_m2(PrimeField(5));
  auto text = render_text(peirce_report(r, "1,0,0,0"));
  EXPECT_NE(text.find("PASS relations.0.projectors"), std::string::npos) << text;
  EXPECT_EQ(text.find("FAIL"), std::string::npos);
  auto broken = render_text(peirce_report(AnyRing(fixtures::perturbed_m2(PrimeField(5))), "1,0,0,0"));
  EXPECT_NE(broken.find("FAIL relations."), std::string::npos) << broken;
}
