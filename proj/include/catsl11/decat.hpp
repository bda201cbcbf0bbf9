// Grothendieck-group shadows of the three bimodule functors, compared with the
// algebraic structure maps computed by ut_hopf and vn_rep.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "catsl11/bimodule.hpp"
#include "catsl11/ut_hopf.hpp"
#include "catsl11/vn_rep.hpp"

namespace catsl11 {

struct DecatCase {
  std::string input;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct DecatReport {
  std::string theorem;
  int n = 0;
  std::vector<DecatCase> cases;

  bool pass() const;
  void add(std::string input, std::string expected, std::string computed, bool ok);
  nlohmann::json to_json() const;
  static DecatReport from_json(const nlohmann::json& j);
};

// K0 classes read as algebra elements. A summand P(v){t1,t2}[h] counts as
// (-1)^h T1^t1 T2^t2 [v].
UtElt k0_as_ut(const K0Class& c);            // modules over A
UtTensorElt k0_as_ut2(const K0Class& c);     // modules over A⊗A or B (vertex 4a+b)
VnElt k0_as_vn(const K0Class& c, int n);     // modules over H(R_n)

// Class of b ⊗ M for a module M over the right algebra of b, summand by summand.
K0Class k0_of_tensor(const DGBimodule& b, const DGModule& m);

// Products: [N ⊗ χ(P(a), P(b))] against ut_mul_basis(a, b), all 16 pairs.
DecatReport check_thm_multiplication();
// N(Γ, I) = N(I, Γ) = P(Γ), and T-shifts on either factor give T·(a b).
DecatReport check_multiplication_units_and_shifts();
// Coproducts: [S ⊗ P(Γ)] against ut_comul(Γ).
DecatReport check_thm_comultiplication();
// A shift {k} on P(Γ) becomes (T1 T2)^k.
DecatReport check_comultiplication_shifts();
// Action: [C_n ⊗ P(Γ, x)] against Γ·x in V_1^{⊗n}, all 4·2^n pairs.
DecatReport check_thm_action(int n);
// The A-side T acting through χ_n as t^n.
DecatReport check_action_shifts(int n);
// Idempotent counts of A, A⊗A, B, H(R_n), A⊠R_n, and freeness of the shift action.
DecatReport check_k0_module_structures(int n);

// All of the above at a given n.
std::vector<DecatReport> check_decat(int n);

}  // namespace catsl11
