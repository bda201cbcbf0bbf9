#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catsl11/decat.hpp"

using namespace catsl11;

namespace {

UtElt class_of_product(UtBasis a, UtBasis b) {
  auto bundle = build_named_bimodule("N", 0);
  return k0_as_ut(k0_class(tensor_with(bundle.bimodule(), 4 * static_cast<int>(a) + static_cast<int>(b))));
}

UtTensorElt class_of_coproduct(UtBasis g) {
  auto bundle = build_named_bimodule("S", 0);
  return k0_as_ut2(k0_class(tensor_with(bundle.bimodule(), static_cast<int>(g))));
}

VnElt class_of_action(UtBasis g, const BasisState& x) {
  auto bundle = build_named_bimodule("Cn", x.n, false);
  return k0_as_vn(k0_class(tensor_with(bundle.bimodule(), bundle.box->vertex(static_cast<AVertex>(g), x))), x.n);
}

LaurentPoly2 T1(int e, std::int64_t c = 1) { return LaurentPoly2::monomial({e, 0}, c); }
LaurentPoly2 T2(int e, std::int64_t c = 1) { return LaurentPoly2::monomial({0, e}, c); }

}  // namespace

TEST_CASE("products") {
  UtElt fe;
  fe[UtBasis::I] = poly_T(0) - poly_T(1);
  fe[UtBasis::EF] = -poly_T(0);
  CHECK(class_of_product(UtBasis::F, UtBasis::E) == fe);
  CHECK(class_of_product(UtBasis::E, UtBasis::F) == UtElt::basis(UtBasis::EF));
  CHECK(class_of_product(UtBasis::EF, UtBasis::E) == UtElt::basis(UtBasis::E, poly_T(0) - poly_T(1)));
  CHECK(class_of_product(UtBasis::E, UtBasis::E).is_zero());
}

TEST_CASE("coproducts") {
  UtTensorElt e;
  e.at(UtBasis::E, UtBasis::I) = T1(0);
  e.at(UtBasis::I, UtBasis::E) = T1(0);
  CHECK(class_of_coproduct(UtBasis::E) == e);

  UtTensorElt f;
  f.at(UtBasis::I, UtBasis::F) = T1(0);
  f.at(UtBasis::F, UtBasis::I) = T2(1);
  CHECK(class_of_coproduct(UtBasis::F) == f);
  CHECK(class_of_coproduct(UtBasis::F) == ut_comul(UtElt::basis(UtBasis::F)));

  UtTensorElt ef;
  ef.at(UtBasis::E, UtBasis::F) = T1(0);
  ef.at(UtBasis::I, UtBasis::EF) = T1(0);
  ef.at(UtBasis::EF, UtBasis::I) = T2(1);
  ef.at(UtBasis::F, UtBasis::E) = T2(1, -1);
  CHECK(class_of_coproduct(UtBasis::EF) == ef);
  CHECK(ef == ut_comul(UtElt::basis(UtBasis::EF)));
}

TEST_CASE("action values") {
  const BasisState x00{2, 0b00};
  VnElt f = VnElt::basis(BasisState{2, 0b01}) + VnElt::basis(BasisState{2, 0b10}, poly_t(1));
  CHECK(class_of_action(UtBasis::F, x00) == f);
  CHECK(class_of_action(UtBasis::F, x00) == act_basis(UtBasis::F, x00));

  const BasisState x1{1, 0b1};
  CHECK(class_of_action(UtBasis::E, x1) == VnElt::basis(BasisState{1, 0b0}, poly_t(0) - poly_t(1)));

  const BasisState x3{3, 0b101};
  CHECK(class_of_action(UtBasis::I, x3) == VnElt::basis(x3));
}

TEST_CASE("theorem reports pass up to n = 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& r : check_decat(n)) {
      CHECK_MESSAGE(r.pass(), r.theorem << " at n=" << n);
      CHECK(!r.cases.empty());
    }
  CHECK(check_thm_multiplication().cases.size() == 16);
  CHECK(check_thm_comultiplication().cases.size() == 4);
  CHECK(check_thm_action(3).cases.size() == 32);
}

TEST_CASE("report json") {
  const DecatReport r = check_thm_comultiplication();
  const nlohmann::json j = r.to_json();
  CHECK(j.at("theorem") == "comultiplication");
  CHECK(j.at("cases").size() == 4);
  CHECK(j.at("cases")[0].contains("expected"));
  const DecatReport back = DecatReport::from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.to_json() == j);
}

TEST_CASE("a failing comparison is reported") {
  DecatReport r;
  r.add("x", "1", "2", false);
  CHECK_FALSE(r.pass());
}
