#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catsl11/dga.hpp"
#include "catsl11/gf2.hpp"

using namespace catsl11;

namespace {

Word W(std::initializer_list<int> ids) {
  Word w;
  for (int g : ids) w.push_back(static_cast<char16_t>(g));
  return w;
}

bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) {
      MESSAGE(r.name << ": " << r.witness);
      return false;
    }
  return true;
}

// Four vertices joined by an up arrow and a down arrow whose composite vanishes.
DGAlgebra small_quiver() {
  DGAlgebra a("quiver");
  for (const char* v : {"F", "I", "EF", "E"}) a.add_vertex(v);
  const int up = a.add_generator("up", 1, 2, {0, 0, 0});
  const int down = a.add_generator("down", 2, 1, {1, 1, 0});
  a.add_zero_relation(W({up, down}));
  return a;
}

// Exterior-like algebra on one vertex: a, b with a^2 = b^2 = 0, ab = ba, d(a) = b.
DGAlgebra koszul_pair() {
  DGAlgebra a("pair");
  a.add_vertex("v");
  const int x = a.add_generator("a", 0, 0, {0, 0, 0});
  const int y = a.add_generator("b", 0, 0, {1, 0, 0});
  a.add_zero_relation(W({x, x}));
  a.add_zero_relation(W({y, y}));
  a.add_relation(W({x, y}), W({y, x}));
  a.set_differential(x, {W({y})});
  return a;
}

}  // namespace

TEST_CASE("bit vectors and ranks") {
  BitVec a(70), b(70), c(70);
  a.set(1);
  a.set(65);
  b.set(65);
  c.set(1);
  CHECK(a.lowest() == 1);
  CHECK(gf2_rank({a, b, c}, 70) == 2);
  BitVec z(70);
  CHECK(z.lowest() == 70);
  EchelonBasis e(70);
  CHECK(e.insert(a));
  CHECK(e.insert(b));
  CHECK(e.contains(c));
}

TEST_CASE("kernel of a small matrix") {
  // e0 -> (1,0), e1 -> (1,0), e2 -> (0,1), e3 -> 0
  std::vector<BitVec> imgs(4, BitVec(2));
  imgs[0].set(0);
  imgs[1].set(0);
  imgs[2].set(1);
  const auto k = gf2_kernel(imgs, 2);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) {
    BitVec sum(2);
    for (std::size_t i = 0; i < 4; ++i)
      if (v.get(i)) sum ^= imgs[i];
    CHECK_FALSE(sum.any());
  }
}

TEST_CASE("element arithmetic cancels in pairs") {
  CHECK(elt_normalize({3, 1, 3, 2, 3}) == Elt{1, 2, 3});
  CHECK(elt_add({1, 2}, {2, 5}) == Elt{1, 5});
}

TEST_CASE("relations are validated") {
  DGAlgebra a = small_quiver();
  CHECK_THROWS(a.add_relation(W({0}), W({1})));        // endpoints differ
  CHECK_THROWS(a.add_relation(W({0, 1}), W({0})));     // length changes
  CHECK_THROWS(a.add_zero_relation(W({0, 0})));        // not a path
}

TEST_CASE("small quiver enumerates to dimension seven") {
  DGAlgebra a = small_quiver();
  const auto st = a.enumerate();
  CHECK(st.finite);
  CHECK(a.dim() == 7);
  CHECK(a.hom_dim(2, 2) == 2);
  CHECK(a.hom_dim(1, 1) == 1);
  CHECK(a.mul(a.find(W({0})), a.find(W({1}))) == -1);
  CHECK(a.find(W({1, 0})) >= 0);
  CHECK(all_pass(check_algebra(a)));
}

TEST_CASE("normal forms agree with enumeration") {
  DGAlgebra a = koszul_pair();
  CHECK(a.normal_form(W({1, 0})) == W({0, 1}));
  CHECK_FALSE(a.normal_form(W({0, 1, 0})).has_value());
  a.enumerate();
  CHECK(a.dim() == 4);
  CHECK(a.find(W({1, 0})) == a.find(W({0, 1})));
  CHECK(all_pass(check_algebra(a)));
}

TEST_CASE("cohomology of the pair") {
  DGAlgebra a = koszul_pair();
  a.enumerate();
  const auto h = cohomology_dims(a);
  CHECK(h.at(Trigrade{0, 0, 0}) == 1);
  CHECK(h.at(Trigrade{1, 0, 0}) == 1);  // the product ab survives
  CHECK(h.size() == 2);
}

TEST_CASE("infinite presentations are reported") {
  DGAlgebra a("loop");
  a.add_vertex("v");
  a.add_generator("x", 0, 0, {0, 0, 0});
  const auto st = a.enumerate(10);
  CHECK_FALSE(st.finite);
  CHECK_FALSE(all_pass(check_algebra(a)));
}

TEST_CASE("quasi-isomorphism checks") {
  DGAlgebra a = koszul_pair();
  a.enumerate();
  AlgebraMap id{&a, &a, {0}, {a.gen_elt(0), a.gen_elt(1)}};
  CHECK(all_pass(check_quasi_isomorphism(id)));

  DGAlgebra point("point");
  point.add_vertex("v");
  point.enumerate();
  AlgebraMap collapse{&a, &point, {0}, {Elt{}, Elt{}}};
  const auto rs = check_quasi_isomorphism(collapse);
  CHECK(rs.back().name.find("cohomology") != std::string::npos);
  CHECK_FALSE(rs.back().pass);
  CHECK(rs[3].pass);  // still a chain map
}
