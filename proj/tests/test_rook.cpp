#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catsl11/rook.hpp"

using namespace catsl11;

namespace {
BasisState S(const char* s) { return BasisState::parse(s); }
BasisState P(int n, std::vector<int> pos) { return BasisState::from_positions(n, pos); }
}  // namespace

TEST_CASE("elementary diagram data") {
  // Strand at 8 moves to 1 across strands at 4, 6, 7.
  const auto d = ElementaryDiagram::make(P(8, {4, 6, 7, 8}), 4, 1);
  CHECK(d.b == 8);
  CHECK(d.i == 1);
  CHECK(d.s1 == 3);
  CHECK(d.v == std::vector<int>{2, 1, 0, 0});
  CHECK(d.s0 == 3);
  CHECK(d.y == P(8, {1, 4, 6, 7}));
  CHECK(d.grade() == Bigrade{-2, 4});
  CHECK(d.crossed_strands() == std::vector<int>{1, 2, 3});
  CHECK(d.markings() == std::vector<int>{2, 3, 5});

  const auto u = ElementaryDiagram::make(S("01"), 1, 1);
  CHECK(u.is_unit());
  CHECK(u.v == std::vector<int>{0});
  CHECK(u.grade() == Bigrade{1, 1});

  const auto m = ElementaryDiagram::make(S("001"), 1, 1);
  CHECK(m.v == std::vector<int>{1});
  CHECK(m.s0 == 1);
  CHECK(m.grade() == Bigrade{1, 2});

  CHECK_THROWS(ElementaryDiagram::make(S("011"), 2, 2));  // occupied
  CHECK_THROWS(ElementaryDiagram::make(S("011"), 1, 3));  // not leftward
}

TEST_CASE("resolving a marking splits the strand") {
  const auto d = ElementaryDiagram::make(S("001"), 1, 1);
  const auto w = resolve_marking(d, 2);
  REQUIRE(w.gens.size() == 2);
  CHECK(rook_target(w.gens[0]) == S("010"));
  CHECK(w.target() == S("100"));
  CHECK(w.grade() == Bigrade{2, 2});
  CHECK_THROWS(resolve_marking(d, 1));
}

TEST_CASE("resolving a crossing") {
  // x = {2,3}: the strand at 3 moves to 1 crossing the strand at 2.
  const auto d = ElementaryDiagram::make(P(3, {2, 3}), 2, 1);
  const auto ws = resolve_crossing(d, 1);
  REQUIRE(ws.size() == 2);
  const auto r1 = ElementaryDiagram::make(P(3, {2, 3}), 1, 1);
  const auto r2 = ElementaryDiagram::make(P(3, {1, 3}), 2, 2);
  CHECK(r1.y == P(3, {1, 3}));
  CHECK(r2.y == P(3, {1, 2}));
  CHECK(ws[0].gens.size() == 3);
  CHECK(std::get<LoopGen>(ws[0].gens[0]) == LoopGen{P(3, {2, 3}), 1});
  CHECK(std::get<ElementaryDiagram>(ws[0].gens[1]) == r1);
  CHECK(std::get<ElementaryDiagram>(ws[0].gens[2]) == r2);
  CHECK(std::get<LoopGen>(ws[1].gens[2]) == LoopGen{P(3, {1, 2}), 2});
  CHECK(diagram_differential(d).size() == 2);
}

TEST_CASE("resolutions conserve decorations") {
  for (int n = 1; n <= 5; ++n) {
    const auto r = check_decoration_conservation(n, 3);
    CHECK_MESSAGE(r.pass, r.witness);
  }
}

TEST_CASE("loops commute and square to zero") {
  const auto R = build_rook_algebra(3, false);
  const auto x = P(3, {1, 3});
  const Word a = R.word({x, {LoopGen{x, 1}, LoopGen{x, 2}}});
  const Word b = R.word({x, {LoopGen{x, 2}, LoopGen{x, 1}}});
  CHECK(R.alg.normal_form(a) == R.alg.normal_form(b));
  CHECK_FALSE(R.alg.normal_form(R.word({x, {LoopGen{x, 1}, LoopGen{x, 1}}})).has_value());
}

TEST_CASE("d squared vanishes on small diagrams") {
  for (int n = 1; n <= 4; ++n) {
    const auto R = build_rook_algebra(n, false);
    const auto r = check_rook_d_squared(R, 3);
    CHECK_MESSAGE(r.pass, r.witness);
  }
}

TEST_CASE("two crossings are not a composite") {
  const auto R = build_rook_algebra(4, false);
  const auto x = P(4, {3, 4});
  const auto direct = ElementaryDiagram::make(x, 2, 1);  // crosses the strand at 3, marks position 2
  const auto first = ElementaryDiagram::make(x, 2, 2);
  const auto second = ElementaryDiagram::make(first.y, 1, 1);
  const auto nf_direct = R.alg.normal_form(R.word({x, {direct}}));
  const auto nf_pair = R.alg.normal_form(R.word({x, {first, second}}));
  REQUIRE(nf_direct.has_value());
  REQUIRE(nf_pair.has_value());
  CHECK(*nf_direct != *nf_pair);
}

TEST_CASE("normal forms are stable under random rewrites") {
  const auto R = build_rook_algebra(4, false);
  const auto r = check_normal_form_confluence(R, 2000, 20261016u);
  CHECK(r.cases >= 2000);
  CHECK_MESSAGE(r.pass, r.witness);
}
