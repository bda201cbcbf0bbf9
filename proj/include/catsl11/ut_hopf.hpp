// The Hopf superalgebra U_t as a rank-4 free module over Z[T, T^-1].
#pragma once

#include <array>
#include <string>
#include <vector>

#include "catsl11/foundation.hpp"

namespace catsl11 {

// Basis order used everywhere: F, I, EF, E.
enum class UtBasis : int { F = 0, I = 1, EF = 2, E = 3 };
inline constexpr std::array<UtBasis, 4> kUtBasis = {UtBasis::F, UtBasis::I, UtBasis::EF, UtBasis::E};

int parity(UtBasis b);
const char* basis_name(UtBasis b);
UtBasis parse_basis(const std::string& s);

struct UtElt {
  std::array<LaurentPoly, 4> coords;

  UtElt();
  static UtElt basis(UtBasis b, const LaurentPoly& c);
  static UtElt basis(UtBasis b) { return basis(b, poly_T(0)); }

  LaurentPoly& operator[](UtBasis b) { return coords[static_cast<int>(b)]; }
  const LaurentPoly& operator[](UtBasis b) const { return coords[static_cast<int>(b)]; }

  UtElt operator+(const UtElt& o) const;
  UtElt operator-(const UtElt& o) const;
  UtElt operator-() const;
  UtElt scaled(const LaurentPoly& c) const;
  bool operator==(const UtElt& o) const { return coords == o.coords; }
  bool is_zero() const;
  std::string to_string() const;
  nlohmann::json to_json() const;
};

// Elements of U_t (x) U_t, coordinates indexed by 4*left + right; T1 = T(x)I, T2 = I(x)T.
struct UtTensorElt {
  std::array<LaurentPoly2, 16> coords;

  LaurentPoly2& at(UtBasis a, UtBasis b) { return coords[4 * static_cast<int>(a) + static_cast<int>(b)]; }
  const LaurentPoly2& at(UtBasis a, UtBasis b) const {
    return coords[4 * static_cast<int>(a) + static_cast<int>(b)];
  }
  UtTensorElt operator+(const UtTensorElt& o) const;
  UtTensorElt operator-(const UtTensorElt& o) const;
  bool operator==(const UtTensorElt& o) const { return coords == o.coords; }
  bool is_zero() const;
  std::string to_string() const;
  nlohmann::json to_json() const;
  static UtTensorElt pure(UtBasis a, UtBasis b, const LaurentPoly2& c);
};

// Triple tensor power, used for coassociativity.
struct UtTensor3Elt {
  std::array<LaurentPoly3, 64> coords;
  LaurentPoly3& at(UtBasis a, UtBasis b, UtBasis c) {
    return coords[16 * static_cast<int>(a) + 4 * static_cast<int>(b) + static_cast<int>(c)];
  }
  bool operator==(const UtTensor3Elt& o) const { return coords == o.coords; }
  std::string to_string() const;
};

UtElt ut_mul(const UtElt& a, const UtElt& b);
UtElt ut_mul_basis(UtBasis a, UtBasis b);
UtTensorElt ut_tensor_mul(const UtTensorElt& u, const UtTensorElt& v);
UtTensorElt ut_comul(const UtElt& a);
LaurentPoly ut_counit(const UtElt& a);
UtElt ut_antipode(const UtElt& a);

UtTensor3Elt comul_left(const UtTensorElt& u);   // (Delta (x) id)
UtTensor3Elt comul_right(const UtTensorElt& u);  // (id (x) Delta)

// Independent model: left-regular representation on the PBW basis {I, E, F, FE}.
UtElt matrix_model_mul(UtBasis a, UtBasis b);

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  int cases = 0;
  std::string counterexample;
};

std::vector<AxiomResult> check_hopf_axioms();
std::vector<AxiomResult> check_ut_structure();  // associativity, parity additivity, model agreement

}  // namespace catsl11
