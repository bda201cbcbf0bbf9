#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "catsl11/foundation.hpp"

using namespace catsl11;

TEST_CASE("canonical text form") {
  CHECK(LaurentPoly::parse("1 - t^2").to_string() == "1 - t^2");
  CHECK((poly_t(0) - poly_t(2)).to_string() == "1 - t^2");
  CHECK(poly_t(2, 3).to_string() == "3t^2");
  CHECK(LaurentPoly().to_string() == "0");
  LaurentPoly2 p = LaurentPoly2::monomial({1, -1}, -1);
  CHECK(p.to_string() == "-T1T2^-1");
  CHECK(LaurentPoly2::parse("-T1T2^-1") == p);
  CHECK(LaurentPoly::parse("t^-1 + 2 - 3t").to_string() == "t^-1 + 2 - 3t");
  CHECK_THROWS(LaurentPoly::parse("1 +"));
  CHECK_THROWS(LaurentPoly::parse("1 t"));
}

TEST_CASE("json form round trip") {
  LaurentPoly p = LaurentPoly::parse("t^-2 - 5 + 7t^3");
  CHECK(p.to_json().dump() == "[[-2,1],[0,-5],[3,7]]");
  CHECK(LaurentPoly::from_json(p.to_json()) == p);
  LaurentPoly2 q = LaurentPoly2::parse("T1 - T1T2 + 4T2^-3");
  CHECK(LaurentPoly2::from_json(q.to_json()) == q);
  CHECK(LaurentPoly2::from_json(nlohmann::json::parse("[[[1,0],2]]")) == LaurentPoly2::monomial({1, 0}, 2));
}

TEST_CASE("substitution examples") {
  const LaurentPoly2 t1t2 = LaurentPoly2::monomial({1, 1});
  CHECK(laurent_substitute(t1t2, 1, 1) == poly_t(2));
  CHECK(laurent_substitute(LaurentPoly2::constant(1) - t1t2, 1, 1) == poly_t(0) - poly_t(2));
  const LaurentPoly2 sum = LaurentPoly2::monomial({1, 0}) + LaurentPoly2::monomial({0, 1});
  CHECK(laurent_substitute(sum, 3, 0) == poly_t(3) + poly_t(0));
}

TEST_CASE("grade addition") {
  CHECK(bigrade_add({1, 1}, {-1, -1}) == Bigrade{0, 0});
  CHECK(trigrade_add({1, 0, 0}, {0, 1, 0}) == Trigrade{1, 1, 0});
  CHECK(bigrade_add({2, 1}, {0, 0}) == Bigrade{2, 1});
}

TEST_CASE("overflow aborts instead of wrapping") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
  LaurentPoly p = poly_t(0, big);
  CHECK_THROWS_AS(p + p, std::overflow_error);
  CHECK_THROWS_AS(p * poly_t(1, 3), std::overflow_error);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(20261016);
  auto random_poly = [&] {
    std::uniform_int_distribution<int> len(0, 4), ex(-3, 3), co(-9, 9);
    LaurentPoly p;
    for (int i = len(rng); i > 0; --i) p.add_term({ex(rng)}, co(rng));
    return p;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == LaurentPoly());
    CHECK(LaurentPoly::parse(a.to_string()) == a);
    const LaurentPoly ab = a * b;
    for (const auto& [e, k] : ab.terms()) CHECK(k != 0);
  }
}

TEST_CASE("F2 arithmetic") {
  CHECK(F2(true) + F2(true) == F2(false));
  CHECK(F2(true) * F2(false) == F2(false));
}
