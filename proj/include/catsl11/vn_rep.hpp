// The representation V1 of U_t and its tensor powers.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "catsl11/foundation.hpp"
#include "catsl11/ut_hopf.hpp"

namespace catsl11 {

// A basis vector of V1^{(x)n}. Position p (1-indexed, left to right) is stored at
// bit (n - p), so the mask equals the bitstring read as a binary number.
struct BasisState {
  int n = 0;
  std::uint32_t mask = 0;

  static BasisState from_positions(int n, const std::vector<int>& positions);
  static BasisState parse(const std::string& s);  // accepts "|0110⟩", "|0110>", or "0110"

  bool occupied(int p) const { return (mask >> (n - p)) & 1u; }
  int k() const { return __builtin_popcount(mask); }
  std::vector<int> positions() const;   // x_1 < ... < x_k
  std::vector<int> complement() const;  // xbar_1 < ... < xbar_{n-k}
  BasisState with(int p) const;
  BasisState without(int p) const;
  std::string bits() const;
  std::string to_string() const;  // "|0110⟩"
  auto operator<=>(const BasisState&) const = default;
};

// All 2^n states in canonical (binary) order.
std::vector<BasisState> all_states(int n);
// The states with exactly k ones, in canonical order.
std::vector<BasisState> states_with_k(int n, int k);

struct VnElt {
  int n = 0;
  std::map<std::uint32_t, LaurentPoly> coords;

  VnElt() = default;
  explicit VnElt(int n_) : n(n_) {}
  static VnElt basis(const BasisState& s, const LaurentPoly& c);
  static VnElt basis(const BasisState& s) { return basis(s, poly_t(0)); }

  void add(const BasisState& s, const LaurentPoly& c);
  VnElt operator+(const VnElt& o) const;
  VnElt operator-(const VnElt& o) const;
  VnElt scaled(const LaurentPoly& c) const;
  bool operator==(const VnElt& o) const;
  bool is_zero() const { return coords.empty(); }
  LaurentPoly coeff(const BasisState& s) const;
  std::string to_string() const;
  nlohmann::json to_json() const;
};

int beta(const BasisState& x, int p);

VnElt act_F(const BasisState& x);
VnElt act_E(const BasisState& x);
VnElt act_T(const VnElt& v);
VnElt act_basis(UtBasis b, const BasisState& x);
VnElt act(const UtElt& a, const VnElt& v);

// Independent path: the action induced by iterating the comultiplication,
// V^{(x)n} = V^{(x)(n-1)} (x) V1 with Koszul signs.
VnElt act_by_comultiplication(UtBasis b, const BasisState& x);

std::vector<AxiomResult> verify_rep(int n);

}  // namespace catsl11
