#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catsl11/ut_hopf.hpp"

using namespace catsl11;
using B = UtBasis;

namespace {
UtElt basis(B b) { return UtElt::basis(b); }
LaurentPoly T(int e, std::int64_t c = 1) { return poly_T(e, c); }
LaurentPoly2 T12(int a, int b, std::int64_t c = 1) { return LaurentPoly2::monomial({a, b}, c); }
}  // namespace

TEST_CASE("multiplication examples") {
  CHECK(ut_mul(basis(B::E), basis(B::F)) == basis(B::EF));
  CHECK(ut_mul(basis(B::F), basis(B::E)) == UtElt::basis(B::I, T(0) - T(1)) - basis(B::EF));
  CHECK(ut_mul(basis(B::E), basis(B::E)).is_zero());
  CHECK(ut_mul(basis(B::EF), basis(B::EF)) == UtElt::basis(B::EF, T(0) - T(1)));
  CHECK(ut_mul(basis(B::F), basis(B::F)).is_zero());
}

TEST_CASE("independent matrix model agrees with the product table") {
  for (B a : kUtBasis)
    for (B b : kUtBasis) CHECK(matrix_model_mul(a, b) == ut_mul_basis(a, b));
}

TEST_CASE("relation EF + FE = I - T holds in the product") {
  const UtElt s = ut_mul(basis(B::E), basis(B::F)) + ut_mul(basis(B::F), basis(B::E));
  CHECK(s == UtElt::basis(B::I, T(0) - T(1)));
}

TEST_CASE("comultiplication examples") {
  CHECK(ut_comul(basis(B::E)) ==
        UtTensorElt::pure(B::E, B::I, T12(0, 0)) + UtTensorElt::pure(B::I, B::E, T12(0, 0)));
  CHECK(ut_comul(basis(B::I)) == UtTensorElt::pure(B::I, B::I, T12(0, 0)));
  const UtTensorElt dEF = UtTensorElt::pure(B::EF, B::I, T12(0, 1)) + UtTensorElt::pure(B::E, B::F, T12(0, 0)) +
                          UtTensorElt::pure(B::F, B::E, T12(0, 1, -1)) + UtTensorElt::pure(B::I, B::EF, T12(0, 0));
  CHECK(ut_comul(basis(B::EF)) == dEF);
  // T maps to T1 T2
  CHECK(ut_comul(UtElt::basis(B::I, T(1))) == UtTensorElt::pure(B::I, B::I, T12(1, 1)));
}

TEST_CASE("graded tensor product signs") {
  const LaurentPoly2 one = T12(0, 0);
  CHECK(ut_tensor_mul(UtTensorElt::pure(B::E, B::I, one), UtTensorElt::pure(B::I, B::E, one)) ==
        UtTensorElt::pure(B::E, B::E, one));
  CHECK(ut_tensor_mul(UtTensorElt::pure(B::I, B::E, one), UtTensorElt::pure(B::E, B::I, one)) ==
        UtTensorElt::pure(B::E, B::E, T12(0, 0, -1)));
  CHECK(ut_tensor_mul(UtTensorElt::pure(B::F, B::I, T12(0, 1)), UtTensorElt::pure(B::F, B::I, one)).is_zero());
}

TEST_CASE("Delta(E)Delta(F) + Delta(F)Delta(E) = I(x)I - T(x)T") {
  const UtTensorElt dE = ut_comul(basis(B::E)), dF = ut_comul(basis(B::F));
  const UtTensorElt s = ut_tensor_mul(dE, dF) + ut_tensor_mul(dF, dE);
  CHECK(s == UtTensorElt::pure(B::I, B::I, T12(0, 0) - T12(1, 1)));
  CHECK(ut_tensor_mul(dE, dE).is_zero());
}

TEST_CASE("counit and antipode examples") {
  CHECK(ut_counit(basis(B::EF)) == T(0, 0));
  CHECK(ut_counit(UtElt::basis(B::I, T(2))) == T(0));
  CHECK(ut_counit(UtElt::basis(B::I, T(0) - T(1))).is_zero());
  CHECK(ut_antipode(basis(B::E)) == UtElt::basis(B::E, T(0, -1)));
  CHECK(ut_antipode(basis(B::I)) == basis(B::I));
  CHECK(ut_antipode(basis(B::F)) == UtElt::basis(B::F, T(-1, -1)));
  // S(EF) = -T^{-1}(I - T - EF)
  const UtElt expect = (UtElt::basis(B::I, T(0) - T(1)) - basis(B::EF)).scaled(T(-1, -1));
  CHECK(ut_antipode(basis(B::EF)) == expect);
}

TEST_CASE("m(S (x) id) Delta(F) = 0") {
  const UtTensorElt d = ut_comul(basis(B::F));
  UtElt acc;
  for (B a : kUtBasis)
    for (B b : kUtBasis)
      for (const auto& [e, k] : d.at(a, b).terms())
        acc = acc + ut_mul(ut_antipode(UtElt::basis(a, T(e[0], k))), UtElt::basis(b, T(e[1])));
  CHECK(acc.is_zero());
}

TEST_CASE("all Hopf axioms and structural checks pass") {
  for (const auto& r : check_hopf_axioms()) {
    INFO(r.axiom << " " << r.counterexample);
    CHECK(r.pass);
  }
  const auto h = check_hopf_axioms();
  CHECK(h[0].cases == 16);
  CHECK(h[1].cases == 8);
  for (const auto& r : check_ut_structure()) {
    INFO(r.axiom << " " << r.counterexample);
    CHECK(r.pass);
  }
}

TEST_CASE("text form") {
  CHECK(ut_mul(basis(B::F), basis(B::E)).to_string() == "(1 - T)·I + -EF");
  CHECK(UtElt().to_string() == "0");
}
