#include "catsl11/dga.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "catsl11/gf2.hpp"

namespace catsl11 {

Elt elt_normalize(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  Elt out;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(v[i]);
    i = j;
  }
  return out;
}

Elt elt_add(const Elt& a, const Elt& b) {
  Elt out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------
// Presentation

int DGAlgebra::add_vertex(const std::string& name) {
  if (vertex_index_.count(name)) throw std::invalid_argument("duplicate vertex " + name);
  vertex_index_[name] = static_cast<int>(vertices_.size());
  vertices_.push_back(name);
  enumerated_ = false;
  return static_cast<int>(vertices_.size()) - 1;
}

int DGAlgebra::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  return it == vertex_index_.end() ? -1 : it->second;
}

int DGAlgebra::add_generator(const std::string& name, int src, int tgt, Trigrade deg) {
  if (gen_index_.count(name)) throw std::invalid_argument("duplicate generator " + name);
  if (gens_.size() >= 0xF000) throw std::length_error("too many generators");
  if (src < 0 || tgt < 0 || src >= num_vertices() || tgt >= num_vertices())
    throw std::invalid_argument("generator endpoints out of range: " + name);
  gen_index_[name] = static_cast<int>(gens_.size());
  gens_.push_back({name, src, tgt, deg, {}});
  enumerated_ = false;
  return static_cast<int>(gens_.size()) - 1;
}

int DGAlgebra::find_generator(const std::string& name) const {
  auto it = gen_index_.find(name);
  return it == gen_index_.end() ? -1 : it->second;
}

bool DGAlgebra::is_path(const Word& w) const {
  if (w.empty()) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= gens_.size()) return false;
    if (i > 0 && gens_[w[i - 1]].tgt != gens_[w[i]].src) return false;
  }
  return true;
}

Trigrade DGAlgebra::word_degree(const Word& w) const {
  Trigrade d;
  for (char16_t g : w) d = d + gens_[g].deg;
  return d;
}

std::string DGAlgebra::word_to_string(const Word& w, int src) const {
  if (w.empty()) return "e(" + (src >= 0 ? vertices_[static_cast<std::size_t>(src)] : std::string("?")) + ")";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "·";
    s += gens_[w[i]].name;
  }
  return s;
}

void DGAlgebra::add_relation(const Word& lhs, const Word& rhs) {
  if (!is_path(lhs) || !is_path(rhs)) throw std::invalid_argument("relation sides must be paths");
  if (lhs.size() != rhs.size())
    throw std::invalid_argument("relation is not length-preserving: " + word_to_string(lhs) + " = " +
                                word_to_string(rhs));
  if (gens_[lhs.front()].src != gens_[rhs.front()].src || gens_[lhs.back()].tgt != gens_[rhs.back()].tgt)
    throw std::invalid_argument("relation endpoints differ: " + word_to_string(lhs) + " = " + word_to_string(rhs));
  if (!(word_degree(lhs) == word_degree(rhs)))
    throw std::invalid_argument("relation is not homogeneous: " + word_to_string(lhs) + " = " + word_to_string(rhs));
  if (lhs == rhs) return;
  binomials_.emplace_back(lhs, rhs);
  rewrites_[lhs].push_back(rhs);
  rewrites_[rhs].push_back(lhs);
  if (std::find(rewrite_lengths_.begin(), rewrite_lengths_.end(), lhs.size()) == rewrite_lengths_.end())
    rewrite_lengths_.push_back(lhs.size());
  enumerated_ = false;
}

void DGAlgebra::add_zero_relation(const Word& w) {
  if (!is_path(w)) throw std::invalid_argument("zero relation must be a path");
  if (monomial_set_.count(w)) return;
  monomials_.push_back(w);
  monomial_set_[w] = true;
  if (std::find(monomial_lengths_.begin(), monomial_lengths_.end(), w.size()) == monomial_lengths_.end())
    monomial_lengths_.push_back(w.size());
  enumerated_ = false;
}

void DGAlgebra::set_differential(int gen, std::vector<Word> terms) {
  const Generator& g = gens_.at(static_cast<std::size_t>(gen));
  for (const auto& t : terms) {
    if (!is_path(t) || gens_[t.front()].src != g.src || gens_[t.back()].tgt != g.tgt)
      throw std::invalid_argument("differential term of " + g.name + " has wrong endpoints");
  }
  gens_[static_cast<std::size_t>(gen)].d = std::move(terms);
  enumerated_ = false;
}

// ---------------------------------------------------------------------------
// Normal forms by closure of a single rewriting class.

std::optional<Word> DGAlgebra::normal_form(const Word& w) const {
  if (!is_path(w)) throw std::invalid_argument("normal_form: not a path");
  std::unordered_set<Word> seen{w};
  std::deque<Word> queue{w};
  Word best = w;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t len : monomial_lengths_)
      for (std::size_t pos = 0; pos + len <= cur.size(); ++pos)
        if (monomial_set_.count(cur.substr(pos, len))) return std::nullopt;
    if (cur < best) best = cur;
    for (std::size_t len : rewrite_lengths_)
      for (std::size_t pos = 0; pos + len <= cur.size(); ++pos) {
        auto it = rewrites_.find(cur.substr(pos, len));
        if (it == rewrites_.end()) continue;
        for (const Word& alt : it->second) {
          Word next = cur;
          next.replace(pos, len, alt);
          if (seen.insert(next).second) queue.push_back(std::move(next));
        }
      }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int root(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = root(a);
    b = root(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

EnumerationStats DGAlgebra::enumerate(int length_cap, std::size_t word_cap) {
  basis_.clear();
  rmul_.clear();
  idem_.assign(vertices_.size(), -1);
  stats_ = {};
  out_gens_.assign(vertices_.size(), {});
  out_pos_.assign(gens_.size(), -1);
  for (int g = 0; g < num_generators(); ++g) {
    auto& list = out_gens_[static_cast<std::size_t>(gens_[static_cast<std::size_t>(g)].src)];
    out_pos_[static_cast<std::size_t>(g)] = static_cast<int>(list.size());
    list.push_back(g);
  }

  // Every relation instance is applied with its last letter at the end of a
  // word: v·s·g ~ v·s'·g' for each class v of the right length. Rules are
  // indexed by their source vertex and length. A monomial rule has no target.
  struct Rule {
    Word s, s2;
    int g = 0, g2 = -1;
  };
  std::map<std::pair<int, std::size_t>, std::vector<Rule>> rules;
  std::size_t max_rule = 0;
  auto add_rule = [&](const Word& u, const Word& v) {
    Rule r{u.substr(0, u.size() - 1), v.empty() ? Word() : v.substr(0, v.size() - 1), u.back(), v.empty() ? -1 : v.back()};
    rules[{gens_[u.front()].src, u.size()}].push_back(std::move(r));
    max_rule = std::max(max_rule, u.size());
  };
  for (const auto& [u, v] : binomials_) {
    add_rule(u, v);
    add_rule(v, u);
  }
  for (const auto& m : monomials_) add_rule(m, Word());

  std::vector<std::vector<int>> levels(1);
  for (int v = 0; v < num_vertices(); ++v) {
    idem_[static_cast<std::size_t>(v)] = static_cast<int>(basis_.size());
    levels[0].push_back(static_cast<int>(basis_.size()));
    basis_.push_back({Word(), v, v, Trigrade{}});
    rmul_.emplace_back();
  }

  for (int L = 1;; ++L) {
    const std::vector<int>& prev = levels.back();
    // Candidates at this length are pairs (class of length L-1, next generator).
    std::vector<std::size_t> offset(prev.size() + 1, 0);
    for (std::size_t k = 0; k < prev.size(); ++k)
      offset[k + 1] = offset[k] + out_gens_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(prev[k])].tgt)].size();
    const std::size_t ncand = offset.back();
    const int first = prev.empty() ? 0 : prev.front();  // classes of one length are contiguous
    auto cand = [&](int b, int g) {
      return offset[static_cast<std::size_t>(b - first)] + static_cast<std::size_t>(out_pos_[static_cast<std::size_t>(g)]);
    };
    if (ncand > 0 && L > length_cap) {
      stats_.finite = false;
      stats_.message = "nonzero paths of length " + std::to_string(L - 1) + " reach the length cap";
      break;
    }
    if (stats_.words + ncand > word_cap) {
      stats_.finite = false;
      stats_.message = "candidate budget exceeded at length " + std::to_string(L);
      break;
    }
    UnionFind uf(ncand);
    std::vector<char> zero(ncand, 0);
    for (std::size_t l = 1; l <= std::min<std::size_t>(max_rule, static_cast<std::size_t>(L)); ++l) {
      for (int b0 : levels[static_cast<std::size_t>(L) - l]) {
        auto it = rules.find({basis_[static_cast<std::size_t>(b0)].tgt, l});
        if (it == rules.end()) continue;
        for (const Rule& r : it->second) {
          const int b = fold(b0, r.s);
          if (b < 0) continue;
          const std::size_t c = cand(b, r.g);
          if (r.g2 < 0) {
            zero[c] = 1;
            continue;
          }
          const int b2 = fold(b0, r.s2);
          if (b2 < 0) {
            zero[c] = 1;
          } else {
            uf.unite(static_cast<int>(c), static_cast<int>(cand(b2, r.g2)));
          }
        }
      }
    }
    std::vector<char> comp_zero(ncand, 0);
    for (std::size_t i = 0; i < ncand; ++i)
      if (zero[i]) comp_zero[static_cast<std::size_t>(uf.root(static_cast<int>(i)))] = 1;
    std::vector<int> comp_basis(ncand, -1);
    std::vector<int> next;
    for (std::size_t k = 0; k < prev.size(); ++k) {
      const int b = prev[k];
      const auto& outs = out_gens_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(b)].tgt)];
      std::vector<int> row(outs.size(), -1);
      for (std::size_t j = 0; j < outs.size(); ++j) {
        const std::size_t c = offset[k] + j;
        const auto root = static_cast<std::size_t>(uf.root(static_cast<int>(c)));
        if (comp_zero[root]) continue;
        if (comp_basis[root] < 0) {
          comp_basis[root] = static_cast<int>(basis_.size());
          const BasisElt& pb = basis_[static_cast<std::size_t>(b)];
          const int g = outs[j];
          basis_.push_back({pb.rep + static_cast<char16_t>(g), pb.src, gens_[static_cast<std::size_t>(g)].tgt,
                            pb.deg + gens_[static_cast<std::size_t>(g)].deg});
          rmul_.emplace_back();
          next.push_back(comp_basis[root]);
        }
        row[j] = comp_basis[root];
      }
      rmul_[static_cast<std::size_t>(b)] = std::move(row);
    }
    stats_.words += ncand;
    if (next.empty()) break;
    stats_.max_length = L;
    levels.push_back(std::move(next));
  }
  stats_.dim = basis_.size();
  enumerated_ = stats_.finite;
  if (enumerated_) build_tables();
  return stats_;
}

int DGAlgebra::fold(int b, const Word& w) const {
  for (char16_t g : w) {
    if (b < 0) return -1;
    const BasisElt& e = basis_[static_cast<std::size_t>(b)];
    if (gens_[g].src != e.tgt) return -1;
    const auto& row = rmul_[static_cast<std::size_t>(b)];
    const int pos = out_pos_[g];
    b = static_cast<std::size_t>(pos) < row.size() ? row[static_cast<std::size_t>(pos)] : -1;
  }
  return b;
}

void DGAlgebra::build_tables() {
  dtable_.assign(basis_.size(), Elt{});
  blocks_.clear();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& b = basis_[i];
    if (!b.rep.empty()) dtable_[i] = d_word(b.src, b.rep);
    blocks_[{b.src, b.tgt, b.deg}].push_back(static_cast<int>(i));
  }
}

int DGAlgebra::find(const Word& w) const {
  if (w.empty() || !enumerated_) return -1;
  return fold(idem_[static_cast<std::size_t>(gens_[w.front()].src)], w);
}

int DGAlgebra::find_path(int src, const Word& w) const {
  if (w.empty()) return idem_[static_cast<std::size_t>(src)];
  if (gens_[w.front()].src != src) return -1;
  return find(w);
}

int DGAlgebra::mul(int a, int b) const {
  if (a < 0 || b < 0) return -1;
  const BasisElt& x = basis_[static_cast<std::size_t>(a)];
  const BasisElt& y = basis_[static_cast<std::size_t>(b)];
  if (x.tgt != y.src) return -1;
  if (y.rep.empty()) return a;
  return fold(a, y.rep);
}

Elt DGAlgebra::mul(const Elt& a, const Elt& b) const {
  std::vector<int> out;
  for (int x : a)
    for (int y : b) {
      const int p = mul(x, y);
      if (p >= 0) out.push_back(p);
    }
  return elt_normalize(std::move(out));
}

Elt DGAlgebra::gen_elt(int g) const {
  const int i = find(Word(1, static_cast<char16_t>(g)));
  return i < 0 ? Elt{} : Elt{i};
}

Elt DGAlgebra::d(const Elt& a) const {
  Elt out;
  for (int x : a) out = elt_add(out, dtable_[static_cast<std::size_t>(x)]);
  return out;
}

Elt DGAlgebra::d_word(int src, const Word& w) const {
  (void)src;
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& terms = gens_[w[i]].d;
    if (terms.empty()) continue;
    const Word pre = w.substr(0, i), post = w.substr(i + 1);
    for (const Word& t : terms) {
      const int k = find(pre + t + post);
      if (k >= 0) out.push_back(k);
    }
  }
  return elt_normalize(std::move(out));
}

Elt DGAlgebra::word_elt(int src, const Word& w) const {
  const int k = find_path(src, w);
  return k < 0 ? Elt{} : Elt{k};
}

std::string DGAlgebra::elt_to_string(const Elt& e) const {
  if (e.empty()) return "0";
  std::string s;
  for (int x : e) {
    if (!s.empty()) s += " + ";
    const auto& b = basis_[static_cast<std::size_t>(x)];
    s += word_to_string(b.rep, b.src);
  }
  return s;
}

std::size_t DGAlgebra::hom_dim(int src, int tgt) const {
  std::size_t n = 0;
  for (const auto& b : basis_)
    if (b.src == src && b.tgt == tgt) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Checks

CheckResult check_differential_well_defined(const DGAlgebra& a) {
  CheckResult r{"differential respects the relations"};
  for (const auto& [u, v] : a.relations()) {
    const int s = a.generator(u.front()).src;
    const Elt du = a.d_word(s, u), dv = a.d_word(s, v);
    r.record(du == dv, a.word_to_string(u) + " = " + a.word_to_string(v) + ": d gives " + a.elt_to_string(du) +
                           " vs " + a.elt_to_string(dv));
  }
  for (const auto& m : a.zero_relations()) {
    const Elt dm = a.d_word(a.generator(m.front()).src, m);
    r.record(dm.empty(), a.word_to_string(m) + " = 0 but d gives " + a.elt_to_string(dm));
  }
  return r;
}

CheckResult check_d_squared(const DGAlgebra& a) {
  CheckResult r{"d^2 = 0"};
  for (int i = 0; i < static_cast<int>(a.dim()); ++i) {
    const Elt dd = a.d(a.d(i));
    r.record(dd.empty(), a.elt_to_string({i}) + " -> " + a.elt_to_string(dd));
  }
  return r;
}

CheckResult check_d_degree(const DGAlgebra& a) {
  CheckResult r{"d has degree (1,0)"};
  const Trigrade one{1, 0, 0};
  for (int g = 0; g < a.num_generators(); ++g)
    for (const Word& t : a.generator(g).d)
      r.record(a.word_degree(t) == a.generator(g).deg + one,
               a.generator(g).name + " -> " + a.word_to_string(t) + " has degree " + a.word_degree(t).to_string());
  for (int i = 0; i < static_cast<int>(a.dim()); ++i)
    for (int j : a.d(i))
      r.record(a.basis(j).deg == a.basis(i).deg + one && a.basis(j).src == a.basis(i).src &&
                   a.basis(j).tgt == a.basis(i).tgt,
               a.elt_to_string({i}) + " -> " + a.elt_to_string({j}));
  return r;
}

CheckResult check_associativity(const DGAlgebra& a) {
  CheckResult r{"associativity on all basis triples"};
  std::vector<std::vector<int>> by_src(static_cast<std::size_t>(a.num_vertices()));
  for (int i = 0; i < static_cast<int>(a.dim()); ++i) by_src[static_cast<std::size_t>(a.basis(i).src)].push_back(i);
  for (int x = 0; x < static_cast<int>(a.dim()); ++x)
    for (int y : by_src[static_cast<std::size_t>(a.basis(x).tgt)]) {
      const int xy = a.mul(x, y);
      for (int z : by_src[static_cast<std::size_t>(a.basis(y).tgt)]) {
        const int yz = a.mul(y, z);
        const int lhs = xy < 0 ? -1 : a.mul(xy, z);
        const int rhs = yz < 0 ? -1 : a.mul(x, yz);
        if (lhs != rhs && r.pass) {
          r.record(false, a.elt_to_string({x}) + " | " + a.elt_to_string({y}) + " | " + a.elt_to_string({z}));
        } else {
          r.record(lhs == rhs, {});
        }
      }
    }
  return r;
}

CheckResult check_grading_additivity(const DGAlgebra& a) {
  CheckResult r{"grading is additive on nonzero products"};
  std::vector<std::vector<int>> by_src(static_cast<std::size_t>(a.num_vertices()));
  for (int i = 0; i < static_cast<int>(a.dim()); ++i) by_src[static_cast<std::size_t>(a.basis(i).src)].push_back(i);
  for (int x = 0; x < static_cast<int>(a.dim()); ++x)
    for (int y : by_src[static_cast<std::size_t>(a.basis(x).tgt)]) {
      const int xy = a.mul(x, y);
      if (xy < 0) continue;
      const bool ok = a.basis(xy).deg == a.basis(x).deg + a.basis(y).deg;
      r.record(ok, ok || !r.pass ? std::string() : a.elt_to_string({x}) + " · " + a.elt_to_string({y}));
    }
  return r;
}

std::vector<CheckResult> check_algebra(const DGAlgebra& a) {
  CheckResult enumer{"basis enumeration stabilizes"};
  enumer.record(a.enumerated() && a.stats().finite, a.stats().message);
  if (!enumer.pass) return {enumer};
  return {enumer,
          check_differential_well_defined(a),
          check_d_degree(a),
          check_d_squared(a),
          check_associativity(a),
          check_grading_additivity(a)};
}

// ---------------------------------------------------------------------------
// Cohomology

namespace {

struct LocalBlock {
  const std::vector<int>* members = nullptr;
  std::unordered_map<int, std::size_t> local;
  BitVec to_bits(const Elt& e) const {
    BitVec v(members ? members->size() : 0);
    for (int x : e) {
      auto it = local.find(x);
      if (it == local.end()) throw std::logic_error("element outside its block");
      v.flip(it->second);
    }
    return v;
  }
  Elt from_bits(const BitVec& v) const {
    Elt e;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v.get(i)) e.push_back((*members)[i]);
    std::sort(e.begin(), e.end());
    return e;
  }
};

LocalBlock make_local(const std::vector<int>* members) {
  LocalBlock b;
  b.members = members;
  if (members)
    for (std::size_t i = 0; i < members->size(); ++i) b.local[(*members)[i]] = i;
  return b;
}

const std::vector<int>* block_members(const DGAlgebra& a, const DGAlgebra::BlockKey& k) {
  auto it = a.blocks().find(k);
  return it == a.blocks().end() ? nullptr : &it->second;
}

// Cycles and a spanning set of boundaries for one block.
struct BlockData {
  LocalBlock here;
  std::vector<BitVec> cycles;
  std::vector<BitVec> boundaries;
};

BlockData block_data(const DGAlgebra& a, const DGAlgebra::BlockKey& k) {
  BlockData out;
  out.here = make_local(block_members(a, k));
  const Trigrade one{1, 0, 0};
  const auto* next = block_members(a, {k.src, k.tgt, k.deg + one});
  const auto* prev = block_members(a, {k.src, k.tgt, k.deg - one});
  const LocalBlock next_local = make_local(next);
  const std::size_t width = next ? next->size() : 0;
  std::vector<BitVec> images;
  for (int x : *out.here.members) images.push_back(next ? next_local.to_bits(a.d(x)) : BitVec(0));
  out.cycles = gf2_kernel(images, width);
  if (prev)
    for (int x : *prev) out.boundaries.push_back(out.here.to_bits(a.d(x)));
  return out;
}

}  // namespace

std::map<DGAlgebra::BlockKey, CohomologyBlock> cohomology(const DGAlgebra& a, bool with_representatives) {
  std::map<DGAlgebra::BlockKey, CohomologyBlock> out;
  for (const auto& [k, members] : a.blocks()) {
    BlockData bd = block_data(a, k);
    EchelonBasis b(members.size());
    for (auto& v : bd.boundaries) b.insert(v);
    CohomologyBlock cb;
    cb.dim_z = bd.cycles.size();
    cb.dim_b = b.rank();
    cb.dim_h = cb.dim_z - cb.dim_b;
    if (with_representatives)
      for (const auto& z : bd.cycles)
        if (b.insert(z)) cb.representatives.push_back(bd.here.from_bits(z));
    out[k] = std::move(cb);
  }
  return out;
}

std::map<Trigrade, std::size_t> graded_dims(const DGAlgebra& a) {
  std::map<Trigrade, std::size_t> out;
  for (const auto& [k, m] : a.blocks()) out[k.deg] += m.size();
  return out;
}

std::map<Trigrade, std::size_t> cohomology_dims(const DGAlgebra& a) {
  std::map<Trigrade, std::size_t> out;
  for (const auto& [k, c] : cohomology(a))
    if (c.dim_h) out[k.deg] += c.dim_h;
  return out;
}

// ---------------------------------------------------------------------------
// Algebra maps

Elt AlgebraMap::apply_word(int src_vertex, const Word& w) const {
  Elt acc{dst->idempotent(vertex_map[static_cast<std::size_t>(src_vertex)])};
  for (char16_t g : w) {
    acc = dst->mul(acc, gen_image[g]);
    if (acc.empty()) break;
  }
  return acc;
}

Elt AlgebraMap::apply(int basis_index) const {
  const auto& b = src->basis(basis_index);
  return apply_word(b.src, b.rep);
}

std::vector<CheckResult> check_quasi_isomorphism(const AlgebraMap& f) {
  const DGAlgebra& S = *f.src;
  const DGAlgebra& D = *f.dst;
  CheckResult shape{"map is given on all vertices and generators"};
  shape.record(static_cast<int>(f.vertex_map.size()) == S.num_vertices() &&
                   static_cast<int>(f.gen_image.size()) == S.num_generators(),
               "size mismatch");
  {
    std::vector<int> vm = f.vertex_map;
    std::sort(vm.begin(), vm.end());
    shape.record(std::adjacent_find(vm.begin(), vm.end()) == vm.end() &&
                     static_cast<int>(vm.size()) == D.num_vertices(),
                 "vertex map is not a bijection");
  }
  if (!shape.pass) return {shape};

  CheckResult grading{"map preserves endpoints and degrees"};
  for (int g = 0; g < S.num_generators(); ++g)
    for (int y : f.gen_image[static_cast<std::size_t>(g)]) {
      const auto& b = D.basis(y);
      const auto& G = S.generator(g);
      grading.record(b.src == f.vertex_map[static_cast<std::size_t>(G.src)] &&
                         b.tgt == f.vertex_map[static_cast<std::size_t>(G.tgt)] && b.deg == G.deg,
                     G.name + " -> " + D.elt_to_string({y}));
    }

  CheckResult rel{"map respects the relations"};
  for (const auto& [u, v] : S.relations()) {
    const int s = S.generator(u.front()).src;
    const Elt fu = f.apply_word(s, u), fv = f.apply_word(s, v);
    rel.record(fu == fv, S.word_to_string(u) + " = " + S.word_to_string(v) + " maps to " + D.elt_to_string(fu) +
                             " vs " + D.elt_to_string(fv));
  }
  for (const auto& m : S.zero_relations()) {
    const Elt fm = f.apply_word(S.generator(m.front()).src, m);
    rel.record(fm.empty(), S.word_to_string(m) + " = 0 maps to " + D.elt_to_string(fm));
  }

  CheckResult chain{"map commutes with the differentials"};
  for (int g = 0; g < S.num_generators(); ++g) {
    const auto& G = S.generator(g);
    Elt lhs;
    for (const Word& t : G.d) lhs = elt_add(lhs, f.apply_word(G.src, t));
    const Elt rhs = D.d(f.gen_image[static_cast<std::size_t>(g)]);
    chain.record(lhs == rhs, "generator " + G.name + ": f(d) = " + D.elt_to_string(lhs) +
                                 ", d(f) = " + D.elt_to_string(rhs));
  }

  CheckResult iso{"induced map on cohomology is a bigraded isomorphism"};
  const auto hs = cohomology(S), hd = cohomology(D);
  std::map<DGAlgebra::BlockKey, DGAlgebra::BlockKey> image_key;
  std::set<DGAlgebra::BlockKey> covered;
  for (const auto& [k, c] : hs) {
    const DGAlgebra::BlockKey kd{f.vertex_map[static_cast<std::size_t>(k.src)],
                                 f.vertex_map[static_cast<std::size_t>(k.tgt)], k.deg};
    covered.insert(kd);
    auto it = hd.find(kd);
    const std::size_t dst_h = it == hd.end() ? 0 : it->second.dim_h;
    if (c.dim_h != dst_h) {
      iso.record(false, "block " + S.vertex_name(k.src) + "->" + S.vertex_name(k.tgt) + " " + k.deg.to_string() +
                            ": dim H " + std::to_string(c.dim_h) + " vs " + std::to_string(dst_h));
      continue;
    }
    if (dst_h == 0) {
      iso.record(true, "");
      continue;
    }
    // Surjectivity: images of source cycles together with target boundaries span target cycles.
    const BlockData src_bd = block_data(S, k);
    const BlockData dst_bd = block_data(D, kd);
    EchelonBasis eb(dst_bd.here.members->size());
    for (auto& b : dst_bd.boundaries) eb.insert(b);
    const std::size_t rank_b = eb.rank();
    for (const auto& z : src_bd.cycles) {
      Elt img;
      for (int x : src_bd.here.from_bits(z)) img = elt_add(img, f.apply(x));
      eb.insert(dst_bd.here.to_bits(img));
    }
    iso.record(eb.rank() - rank_b == dst_h, "block " + S.vertex_name(k.src) + "->" + S.vertex_name(k.tgt) + " " +
                                                k.deg.to_string() + ": image has rank " +
                                                std::to_string(eb.rank() - rank_b) + " of " + std::to_string(dst_h));
  }
  for (const auto& [k, c] : hd)
    if (!covered.count(k))
      iso.record(c.dim_h == 0, "target block " + D.vertex_name(k.src) + "->" + D.vertex_name(k.tgt) + " " +
                                   k.deg.to_string() + " has cohomology outside the image");
  return {shape, grading, rel, chain, iso};
}

}  // namespace catsl11
