#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "altring/generators.hpp"
#include "altring/lie_map.hpp"
#include "altring/map_io.hpp"
#include "oracles.hpp"

using namespace altring;
using fixtures::kind_of;

namespace {

struct M2Fixture : ::testing::Test {
  PrimeField f{5};
  FpRing r = make_m2(f);

  Json with_repr(Json repr) const {
    return Json{{"source", r.name()}, {"target", r.name()}, {"repr", std::move(repr)}};
  }
};

}  // namespace

TEST_F(M2Fixture, BuildersMatchLibraryMaps) {
  auto ntt = map_from_json(with_repr(Json{{"kind", "neg_transpose_plus_trace"}}), r, r);
  EXPECT_EQ(ntt.images(), neg_transpose_plus_trace(r).images());

  auto id = map_from_json(with_repr(Json{{"kind", "identity"}}), r, r);
  EXPECT_EQ(id.images(), identity_map(r).images());

  auto conj = map_from_json(with_repr(Json{{"kind", "conjugation"}, {"element", {1, 1, 0, 1}}}), r, r);
  EXPECT_EQ(conj.images(), conjugation_map(r, FpVec{1, 1, 0, 1}).images());

  Json transpose{{"kind", "linear"},
                 {"matrix", {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}}};
  auto t = map_from_json(with_repr(transpose), r, r);
  for (const auto& x : oracle::all_matrices(5)) {
    EXPECT_EQ(oracle::from(t(oracle::coords(x))), (oracle::Mat2{x.a, x.c, x.b, x.d}));
  }

  // transpose followed by conjugation, left to right
  auto both = map_from_json(
      with_repr(Json{{"kind", "compose"},
                     {"maps", {transpose, Json{{"kind", "conjugation"}, {"element", {1, 1, 0, 1}}}}}}),
      r, r);
  EXPECT_EQ(both.images(), compose({t, conj}).images());
}

TEST_F(M2Fixture, StructuredTopLevelAndBuilderAgree) {
  Json top = with_repr("structured");
  top["linear"] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  top["functional"] = {1, 0, 0, 1};
  top["central"] = {1, 0, 0, 1};
  Json builder = with_repr(Json{{"kind", "structured"},
                                {"linear", top["linear"]},
                                {"functional", top["functional"]},
                                {"central", top["central"]}});
  auto a = map_from_json(top, r, r);
  auto b = map_from_json(builder, r, r);
  EXPECT_EQ(a.images(), b.images());
  ASSERT_TRUE(a.structured_part());
  EXPECT_EQ(a(r.unit()), (FpVec{3, 0, 0, 3}));
}

TEST_F(M2Fixture, DenseRoundTripAndOverrides) {
  auto ntt = neg_transpose_plus_trace(r);
  Json dense = map_to_json(ntt);
  EXPECT_EQ(dense["repr"], "table");
  EXPECT_EQ(dense["table"].size(), 625u);
  auto back = map_from_json(dense, r, r);
  EXPECT_EQ(back.images(), ntt.images());

  dense["overrides"] = Json::array({Json{{"index", 5}, {"value", {0, 2, 0, 0}}}});
  auto corrupted = map_from_json(dense, r, r);
  EXPECT_EQ(corrupted.image(5), (FpVec{0, 2, 0, 0}));
  for (std::uint64_t k = 0; k < 625; ++k)
    if (k != 5) EXPECT_EQ(corrupted.image(k), ntt.image(k));
}

TEST_F(M2Fixture, DenseTableFileResolvesRelativeToMapFile) {
  auto dir = std::filesystem::temp_directory_path() / "altring_map_io_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "table.json") << map_to_json(identity_map(r)).dump();
    std::ofstream(dir / "map.json") << with_repr(Json{{"kind", "dense_table"}, {"file", "table.json"}}).dump();
  }
  auto m = load_map(dir / "map.json", r, r);
  EXPECT_EQ(m.images(), identity_map(r).images());
  std::filesystem::remove_all(dir);
}

TEST_F(M2Fixture, Errors) {
  auto zorn = make_zorn(PrimeField(3));
  Json named = with_repr(Json{{"kind", "identity"}});
  named["source"] = "something_else";
  EXPECT_EQ(kind_of([&] { map_from_json(named, r, r); }), ErrorKind::RingMismatch);

  EXPECT_EQ(kind_of([&] { map_from_json(with_repr(Json{{"kind", "frobnicate"}}), r, r); }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { map_from_json(with_repr("bogus"), r, r); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { map_from_json(Json{{"source", r.name()}}, r, r); }), ErrorKind::ParseError);

  Json short_table = with_repr("table");
  short_table["table"] = Json::array({{0, 0, 0, 0}});
  EXPECT_EQ(kind_of([&] { map_from_json(short_table, r, r); }), ErrorKind::DimensionMismatch);

  Json bad_override = map_to_json(identity_map(r));
  bad_override["overrides"] = Json::array({Json{{"index", 625}, {"value", {0, 0, 0, 0}}}});
  EXPECT_EQ(kind_of([&] { map_from_json(bad_override, r, r); }), ErrorKind::ParseError);

  auto other = make_m2(PrimeField(7));
  Json across = Json{{"source", r.name()}, {"target", other.name()}, {"repr", Json{{"kind", "identity"}}}};
  EXPECT_EQ(kind_of([&] { map_from_json(across, r, other); }), ErrorKind::RingMismatch);

  EXPECT_EQ(kind_of([&] { load_map("/nonexistent/map.json", r, r); }), ErrorKind::ParseError);
  Json zorn_id{{"source", zorn.name()}, {"target", zorn.name()}, {"repr", Json{{"kind", "identity"}}}};
  EXPECT_EQ(kind_of([&] { map_from_json(zorn_id, zorn, zorn, {}, 100); }),
            ErrorKind::BudgetExceeded);
}
