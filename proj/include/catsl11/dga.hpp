// Finite-dimensional DG algebras over GF(2) presented by a quiver with
// length-preserving binomial and monomial relations.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "catsl11/foundation.hpp"

namespace catsl11 {

// A path is a word of generator ids; the empty path at a vertex is its idempotent.
using Word = std::u16string;
// GF(2)-combination of basis elements: sorted indices without repetition.
using Elt = std::vector<int>;

Elt elt_add(const Elt& a, const Elt& b);
// Sorts and cancels repeated indices in pairs.
Elt elt_normalize(std::vector<int> v);

struct EnumerationStats {
  bool finite = true;
  int max_length = 0;       // longest nonzero path
  std::size_t dim = 0;      // number of basis elements
  std::size_t words = 0;    // nonzero words stored
  std::string message;
};

class DGAlgebra {
 public:
  struct Generator {
    std::string name;
    int src = 0;
    int tgt = 0;
    Trigrade deg;
    std::vector<Word> d;  // differential as a sum of paths
  };
  struct BasisElt {
    Word rep;  // a word in the class, extending the representative of its prefix; empty for idempotents
    int src = 0;
    int tgt = 0;
    Trigrade deg;
  };
  struct BlockKey {
    int src, tgt;
    Trigrade deg;
    auto operator<=>(const BlockKey&) const = default;
  };

  explicit DGAlgebra(std::string name = "") : name_(std::move(name)) {}

  // ---- presentation ----
  int add_vertex(const std::string& name);
  int add_generator(const std::string& name, int src, int tgt, Trigrade deg);
  void add_relation(const Word& lhs, const Word& rhs);  // lhs = rhs
  void add_zero_relation(const Word& w);                // w = 0
  void set_differential(int gen, std::vector<Word> terms);

  const std::string& name() const { return name_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::string& vertex_name(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  int find_vertex(const std::string& name) const;
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const Generator& generator(int g) const { return gens_[static_cast<std::size_t>(g)]; }
  int find_generator(const std::string& name) const;  // -1 when absent
  const std::vector<std::pair<Word, Word>>& relations() const { return binomials_; }
  const std::vector<Word>& zero_relations() const { return monomials_; }

  // Validity of a word as a path, and its endpoints/degree.
  bool is_path(const Word& w) const;
  Trigrade word_degree(const Word& w) const;
  std::string word_to_string(const Word& w, int src = -1) const;

  // Canonical form without enumeration: the least word in the rewriting class,
  // or nullopt when the class is zero.
  std::optional<Word> normal_form(const Word& w) const;

  // ---- enumeration ----
  EnumerationStats enumerate(int length_cap = 64, std::size_t word_cap = 40'000'000);
  bool enumerated() const { return enumerated_; }
  const EnumerationStats& stats() const { return stats_; }

  std::size_t dim() const { return basis_.size(); }
  const BasisElt& basis(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  int idempotent(int vertex) const { return idem_[static_cast<std::size_t>(vertex)]; }
  int find(const Word& w) const;              // basis index of a nonempty word, -1 if zero
  int find_path(int src, const Word& w) const;  // also handles the empty path
  int mul(int a, int b) const;                // -1 if zero
  Elt mul(const Elt& a, const Elt& b) const;
  Elt gen_elt(int g) const;                   // a generator as an element
  const Elt& d(int a) const { return dtable_[static_cast<std::size_t>(a)]; }
  Elt d(const Elt& a) const;
  Elt d_word(int src, const Word& w) const;   // Leibniz expansion of an arbitrary word
  Elt word_elt(int src, const Word& w) const; // the element a word represents
  std::string elt_to_string(const Elt& e) const;

  // Basis elements grouped by (source, target, degree).
  const std::map<BlockKey, std::vector<int>>& blocks() const { return blocks_; }
  // Dimension of e(src) * algebra * e(tgt).
  std::size_t hom_dim(int src, int tgt) const;

 private:
  void build_tables();
  int fold(int b, const Word& w) const;  // b·w, -1 if zero

  std::string name_;
  std::vector<std::string> vertices_;
  std::unordered_map<std::string, int> vertex_index_;
  std::vector<Generator> gens_;
  std::unordered_map<std::string, int> gen_index_;
  std::vector<std::pair<Word, Word>> binomials_;
  std::vector<Word> monomials_;
  std::unordered_map<Word, std::vector<Word>> rewrites_;
  std::vector<std::size_t> rewrite_lengths_;
  std::unordered_map<Word, bool> monomial_set_;
  std::vector<std::size_t> monomial_lengths_;

  bool enumerated_ = false;
  EnumerationStats stats_;
  std::vector<BasisElt> basis_;
  std::vector<int> idem_;
  std::vector<std::vector<int>> rmul_;  // rmul_[b][slot of g] = b·g, -1 if zero
  std::vector<std::vector<int>> out_gens_;
  std::vector<int> out_pos_;
  std::vector<Elt> dtable_;
  std::map<BlockKey, std::vector<int>> blocks_;
};

// ---------------------------------------------------------------------------
// Structural checks.

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string witness;  // the first failing case
  void record(bool ok, const std::string& w) {
    ++cases;
    if (!ok) ++failures;
    if (!ok && pass) {
      pass = false;
      witness = w;
    }
  }
};

CheckResult check_differential_well_defined(const DGAlgebra& a);
CheckResult check_d_squared(const DGAlgebra& a);
CheckResult check_d_degree(const DGAlgebra& a);
CheckResult check_associativity(const DGAlgebra& a);
CheckResult check_grading_additivity(const DGAlgebra& a);
std::vector<CheckResult> check_algebra(const DGAlgebra& a);

// ---------------------------------------------------------------------------
// Cohomology.

struct CohomologyBlock {
  std::size_t dim_h = 0;
  std::size_t dim_z = 0;
  std::size_t dim_b = 0;
  std::vector<Elt> representatives;  // cocycles spanning a complement of the boundaries
};

std::map<DGAlgebra::BlockKey, CohomologyBlock> cohomology(const DGAlgebra& a, bool with_representatives = false);
// Graded dimension table with the (source, target) information summed out.
std::map<Trigrade, std::size_t> graded_dims(const DGAlgebra& a);
std::map<Trigrade, std::size_t> cohomology_dims(const DGAlgebra& a);

// ---------------------------------------------------------------------------
// Algebra maps given on generators.

struct AlgebraMap {
  const DGAlgebra* src = nullptr;
  const DGAlgebra* dst = nullptr;
  std::vector<int> vertex_map;
  std::vector<Elt> gen_image;  // in the basis of dst

  Elt apply_word(int src_vertex, const Word& w) const;
  Elt apply(int basis_index) const;
};

std::vector<CheckResult> check_quasi_isomorphism(const AlgebraMap& f);

}  // namespace catsl11
