// DG bimodules given by a left module of shifted projectives, a block index
// (the right idempotent each summand belongs to) and right actions of the
// generators of the right algebra.
#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "catsl11/dgmod.hpp"
#include "catsl11/rook.hpp"
#include "catsl11/zoo.hpp"

namespace catsl11 {

class DGBimodule {
 public:
  // Converts the degree of a right-algebra element into the left grading.
  using RightDegree = std::function<Trigrade(const Trigrade&)>;

  DGBimodule(std::string name, const DGAlgebra* left, const DGAlgebra* right, RightDegree right_degree);

  const std::string& name() const { return name_; }
  const DGAlgebra& left() const { return module_.algebra(); }
  const DGAlgebra& right() const { return *right_; }
  Trigrade right_degree(const Trigrade& d) const { return right_degree_(d); }

  int add_summand(int block, int left_vertex, Shift s, std::string label);
  DGModule& module() { return module_; }
  const DGModule& module() const { return module_; }
  int block(int s) const { return block_[static_cast<std::size_t>(s)]; }
  const std::vector<int>& summands_in_block(int right_vertex) const;

  // m_s × g for a right generator g. Unset entries are zero.
  void set_action(int s, int gen, ModElt image);
  const ModElt& action(int s, int gen) const;
  std::size_t nonzero_actions() const;

  ModElt act(const ModElt& m, int gen) const;
  // Action of a path starting at right vertex src; the empty path is e(src).
  ModElt act_word(const ModElt& m, int src, const Word& w) const;
  // Action of a basis element of the (enumerated) right algebra.
  ModElt act_basis(const ModElt& m, int r) const;

  std::string dump() const;

 private:
  std::string name_;
  const DGAlgebra* right_;
  RightDegree right_degree_;
  DGModule module_;
  std::vector<int> block_;
  std::vector<std::vector<int>> by_block_;
  std::vector<std::unordered_map<int, ModElt>> act_;
};

// Checks: left d² = 0 and homogeneity, table entries lie in the right block and
// start at the summand's vertex, a·(m×r) = (a·m)×r, relation compatibility,
// Leibniz rule d(m×g) = dm×g + m×dg, and gradings.
std::vector<CheckResult> verify_bimodule(const DGBimodule& b);

// b ⊗ P(v) for a shifted right projective: the block at v with shifted degrees.
DGModule tensor_with(const DGBimodule& b, int right_vertex, Shift right_shift = {});
// Graded dimensions of b ⊗ P(v) computed two ways: from the block, and as the
// quotient of span{m ⊗ r} by (m×g) ⊗ r - m ⊗ g·r. Keys are (left vertex, degree).
using GradedDims = std::map<std::pair<int, Trigrade>, std::size_t>;
GradedDims block_dims(const DGBimodule& b, int right_vertex);
GradedDims tensor_quotient_dims(const DGBimodule& b, int right_vertex);

// ---------------------------------------------------------------------------
// The three bimodules.

// (A, A⊗A)-bimodule; a is build_A(), aoa is build_AoA(), both enumerated.
DGBimodule build_N(const DGAlgebra& a, const DGAlgebra& aoa);
// (B, A)-bimodule; b is build_B(), a is build_A(), both enumerated.
DGBimodule build_S(const DGAlgebra& b, const DGAlgebra& a);

// (H(R_n), A⊠R_n)-bimodule together with the summand bookkeeping.
struct CnBimodule {
  int n = 0;
  DGBimodule bim;
  std::vector<int> gen_I;                                    // [mask]
  std::vector<std::vector<int>> gen_F;                       // [mask][j-1]
  std::vector<std::vector<std::array<int, 2>>> gen_E;        // [mask][i-1][prime]
  std::vector<std::vector<std::vector<std::array<int, 2>>>> gen_EF;  // [mask][j-1][i-1][prime]
};
// hrn: the cohomology presentation, enumerated. rn: the full rook algebra and
// box: A⊠R_n built from it (enumeration not required).
CnBimodule build_Cn(const RookAlgebra& hrn, const RookAlgebra& rn, const ARAlgebra& box);

// Owning bundle for the command line and the acceptance checks.
struct BimoduleBundle {
  std::string which;
  int n = 0;
  std::unique_ptr<DGAlgebra> left_plain, right_plain;
  std::unique_ptr<RookAlgebra> hrn, rn;
  std::unique_ptr<ARAlgebra> box;
  std::unique_ptr<DGBimodule> bim;
  std::unique_ptr<CnBimodule> cn;
  const DGBimodule& bimodule() const { return cn ? cn->bim : *bim; }
};
// which ∈ {N, S, Cn}. enumerate_right controls whether the right algebra is
// enumerated (needed by act_basis and tensor_quotient_dims).
BimoduleBundle build_named_bimodule(const std::string& which, int n, bool enumerate_right = true);

}  // namespace catsl11
