// Finite direct sums of shifted projective DG modules over a presented algebra.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catsl11/dga.hpp"
#include "catsl11/foundation.hpp"
#include "catsl11/zoo.hpp"

namespace catsl11 {

// GF(2)-combination of terms b·m_s: pairs (summand s, left basis index b) with
// tgt(b) equal to the vertex of s. Sorted, without repetition.
using ModElt = std::vector<std::pair<int, int>>;

ModElt mod_normalize(ModElt v);
ModElt mod_add(const ModElt& a, const ModElt& b);

// Shift data of P(v){t1,t2}[h]; the generator then sits in degree (-h; -t1, -t2).
struct Shift {
  int h = 0;
  int t1 = 0;
  int t2 = 0;
  Trigrade degree() const { return {-h, -t1, -t2}; }
  static Shift of_degree(const Trigrade& d) { return {-d.h, -d.t1, -d.t2}; }
};

struct ProjSummand {
  int vertex = 0;
  Trigrade deg;  // degree of the generator
  std::string label;
  Shift shift() const { return Shift::of_degree(deg); }
};

class DGModule {
 public:
  explicit DGModule(const DGAlgebra* alg = nullptr) : alg_(alg) {}

  const DGAlgebra& algebra() const { return *alg_; }
  int add_summand(int vertex, Shift s, std::string label);
  int add_summand_deg(int vertex, Trigrade deg, std::string label);
  // Differential on the generator of summand s.
  void set_differential(int s, ModElt image);
  void add_to_differential(int s, const ModElt& image);

  int size() const { return static_cast<int>(summands_.size()); }
  const ProjSummand& summand(int s) const { return summands_[static_cast<std::size_t>(s)]; }
  const ModElt& dgen(int s) const { return dgen_[static_cast<std::size_t>(s)]; }
  ModElt generator(int s) const;

  ModElt left_mul(int a, const ModElt& m) const;
  ModElt left_mul(const Elt& a, const ModElt& m) const;
  // Leibniz extension: d(b·m_s) = d(b)·m_s + b·d(m_s).
  ModElt d(const ModElt& m) const;
  Trigrade term_degree(int s, int b) const;
  std::string to_string(const ModElt& m) const;
  std::string dump() const;

  // Basis of the underlying GF(2) vector space.
  std::vector<std::pair<int, int>> vector_basis() const;

 private:
  const DGAlgebra* alg_;
  std::vector<ProjSummand> summands_;
  std::vector<ModElt> dgen_;
};

CheckResult check_module_d_squared(const DGModule& m);
// Every differential term starts at the summand's vertex and has degree one more.
CheckResult check_module_homogeneous(const DGModule& m);

// Classes in the Grothendieck group: vertex -> Laurent polynomial in (T1, T2).
// A summand contributes (-1)^h T1^{t1} T2^{t2}.
struct K0Class {
  std::map<int, LaurentPoly2> coords;
  bool operator==(const K0Class& o) const;
  K0Class operator+(const K0Class& o) const;
  K0Class operator-(const K0Class& o) const;
  std::string to_string(const DGAlgebra& alg) const;
};
K0Class k0_class(const DGModule& m);

// A map of left modules given on generators.
struct ModuleMap {
  const DGModule* src = nullptr;
  const DGModule* dst = nullptr;
  std::vector<ModElt> image;  // one entry per summand of src, in dst
  ModElt apply(const ModElt& m) const;
};
CheckResult check_chain_map(const ModuleMap& f);
// src[1] ⊕ dst with differential (d_src, f + d_dst).
DGModule cone(const ModuleMap& f);
ModuleMap identity_map(const DGModule& m);
DGModule shifted(const DGModule& m, Shift s);

// Homology dimensions keyed by (left vertex, degree).
std::map<std::pair<int, Trigrade>, std::size_t> homology(const DGModule& m);

// Twisted external tensor product of two modules over A, as a module over A⊗A.
// The twist adds 2·t(m1)·p(m2) to the cohomological degree.
DGModule chi(const DGModule& m1, const DGModule& m2, const DGAlgebra& aoa);
// Tensor product of a module over A and a module over H(R_n), as a module over
// A⊗H(R_n) built with build_A_tensor. t-degrees combine as n·t1 + t2 and the
// cohomological degree gains 2k·t1.
DGModule chi_n(const DGModule& m1, const DGModule& m2, const ARAlgebra& product);

}  // namespace catsl11
