#include "catsl11/dgmod.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "catsl11/gf2.hpp"

namespace catsl11 {

ModElt mod_normalize(ModElt v) {
  std::sort(v.begin(), v.end());
  ModElt out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(v[i]);
    i = j;
  }
  return out;
}

ModElt mod_add(const ModElt& a, const ModElt& b) {
  ModElt out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      out.push_back(b[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

int DGModule::add_summand(int vertex, Shift s, std::string label) {
  return add_summand_deg(vertex, s.degree(), std::move(label));
}

int DGModule::add_summand_deg(int vertex, Trigrade deg, std::string label) {
  if (vertex < 0 || vertex >= alg_->num_vertices()) throw std::out_of_range("summand vertex out of range");
  summands_.push_back({vertex, deg, std::move(label)});
  dgen_.emplace_back();
  return size() - 1;
}

void DGModule::set_differential(int s, ModElt image) { dgen_.at(static_cast<std::size_t>(s)) = mod_normalize(std::move(image)); }

void DGModule::add_to_differential(int s, const ModElt& image) {
  auto& slot = dgen_.at(static_cast<std::size_t>(s));
  slot = mod_add(slot, mod_normalize(image));
}

ModElt DGModule::generator(int s) const { return {{s, alg_->idempotent(summand(s).vertex)}}; }

ModElt DGModule::left_mul(int a, const ModElt& m) const {
  ModElt out;
  for (const auto& [s, b] : m) {
    const int c = alg_->mul(a, b);
    if (c >= 0) out.emplace_back(s, c);
  }
  return mod_normalize(std::move(out));
}

ModElt DGModule::left_mul(const Elt& a, const ModElt& m) const {
  ModElt out;
  for (int x : a)
    for (const auto& [s, b] : m) {
      const int c = alg_->mul(x, b);
      if (c >= 0) out.emplace_back(s, c);
    }
  return mod_normalize(std::move(out));
}

ModElt DGModule::d(const ModElt& m) const {
  ModElt out;
  for (const auto& [s, b] : m) {
    for (int c : alg_->d(b)) out.emplace_back(s, c);
    const ModElt tail = left_mul(b, dgen(s));
    out.insert(out.end(), tail.begin(), tail.end());
  }
  return mod_normalize(std::move(out));
}

Trigrade DGModule::term_degree(int s, int b) const { return alg_->basis(b).deg + summand(s).deg; }

std::string DGModule::to_string(const ModElt& m) const {
  if (m.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += " + ";
    const auto& [s, b] = m[i];
    if (b != alg_->idempotent(summand(s).vertex)) out += alg_->elt_to_string({b}) + "·";
    out += summand(s).label;
  }
  return out;
}

std::string DGModule::dump() const {
  std::ostringstream os;
  for (int s = 0; s < size(); ++s) {
    const auto& p = summand(s);
    const Shift sh = p.shift();
    os << s << " " << p.label << " : P(" << alg_->vertex_name(p.vertex) << "){" << sh.t1;
    if (sh.t2) os << "," << sh.t2;
    os << "}[" << sh.h << "]";
    if (!dgen(s).empty()) os << "  d = " << to_string(dgen(s));
    os << "\n";
  }
  return os.str();
}

std::vector<std::pair<int, int>> DGModule::vector_basis() const {
  std::vector<std::vector<int>> into(static_cast<std::size_t>(alg_->num_vertices()));
  for (int b = 0; b < static_cast<int>(alg_->dim()); ++b) into[static_cast<std::size_t>(alg_->basis(b).tgt)].push_back(b);
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < size(); ++s)
    for (int b : into[static_cast<std::size_t>(summand(s).vertex)]) out.emplace_back(s, b);
  return out;
}

CheckResult check_module_d_squared(const DGModule& m) {
  CheckResult r("module differential squares to zero");
  for (int s = 0; s < m.size(); ++s) {
    const ModElt dd = m.d(m.dgen(s));
    r.record(dd.empty(), "d²(" + m.summand(s).label + ") = " + m.to_string(dd));
  }
  return r;
}

CheckResult check_module_homogeneous(const DGModule& m) {
  CheckResult r("module differential is homogeneous of degree (1,0)");
  const DGAlgebra& A = m.algebra();
  for (int s = 0; s < m.size(); ++s)
    for (const auto& [t, b] : m.dgen(s)) {
      const bool ends = A.basis(b).src == m.summand(s).vertex && A.basis(b).tgt == m.summand(t).vertex;
      const bool deg = m.term_degree(t, b) == m.summand(s).deg + Trigrade{1, 0, 0};
      r.record(ends && deg, "d(" + m.summand(s).label + ") has term " + m.to_string({{t, b}}) + " of degree " +
                                m.term_degree(t, b).to_string() + ", generator degree " +
                                m.summand(s).deg.to_string());
    }
  return r;
}

// ---------------------------------------------------------------------------

bool K0Class::operator==(const K0Class& o) const {
  auto clean = [](const std::map<int, LaurentPoly2>& c) {
    std::map<int, LaurentPoly2> out;
    for (const auto& [v, p] : c)
      if (!p.is_zero()) out.emplace(v, p);
    return out;
  };
  return clean(coords) == clean(o.coords);
}

K0Class K0Class::operator+(const K0Class& o) const {
  K0Class r = *this;
  for (const auto& [v, p] : o.coords) r.coords[v] += p;
  return r;
}

K0Class K0Class::operator-(const K0Class& o) const {
  K0Class r = *this;
  for (const auto& [v, p] : o.coords) r.coords[v] -= p;
  return r;
}

std::string K0Class::to_string(const DGAlgebra& alg) const {
  std::string out;
  for (const auto& [v, p] : coords) {
    if (p.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + p.to_string() + ")[" + alg.vertex_name(v) + "]";
  }
  return out.empty() ? "0" : out;
}

K0Class k0_class(const DGModule& m) {
  K0Class c;
  for (int s = 0; s < m.size(); ++s) {
    const Shift sh = m.summand(s).shift();
    const std::int64_t sign = (sh.h % 2 == 0) ? 1 : -1;
    c.coords[m.summand(s).vertex] += LaurentPoly2::monomial({sh.t1, sh.t2}, sign);
  }
  return c;
}

// ---------------------------------------------------------------------------

ModElt ModuleMap::apply(const ModElt& m) const {
  ModElt out;
  for (const auto& [s, b] : m) {
    const ModElt part = dst->left_mul(b, image[static_cast<std::size_t>(s)]);
    out.insert(out.end(), part.begin(), part.end());
  }
  return mod_normalize(std::move(out));
}

CheckResult check_chain_map(const ModuleMap& f) {
  CheckResult r("map is a degree-preserving chain map");
  const DGAlgebra& A = f.src->algebra();
  r.record(f.image.size() == static_cast<std::size_t>(f.src->size()), "image table has the wrong size");
  if (!r.pass) return r;
  for (int s = 0; s < f.src->size(); ++s) {
    for (const auto& [t, b] : f.image[static_cast<std::size_t>(s)])
      r.record(A.basis(b).src == f.src->summand(s).vertex && f.dst->term_degree(t, b) == f.src->summand(s).deg,
               "f(" + f.src->summand(s).label + ") has a term of the wrong endpoint or degree");
    const ModElt lhs = f.apply(f.src->dgen(s));
    const ModElt rhs = f.dst->d(f.image[static_cast<std::size_t>(s)]);
    r.record(lhs == rhs, "f(d " + f.src->summand(s).label + ") = " + f.dst->to_string(lhs) + " but d f(" +
                             f.src->summand(s).label + ") = " + f.dst->to_string(rhs));
  }
  return r;
}

DGModule cone(const ModuleMap& f) {
  DGModule c(&f.src->algebra());
  const int offset = f.src->size();
  for (int s = 0; s < f.src->size(); ++s) {
    const auto& p = f.src->summand(s);
    c.add_summand_deg(p.vertex, p.deg - Trigrade{1, 0, 0}, p.label + "[1]");
  }
  for (int s = 0; s < f.dst->size(); ++s) {
    const auto& p = f.dst->summand(s);
    c.add_summand_deg(p.vertex, p.deg, p.label);
  }
  for (int s = 0; s < f.src->size(); ++s) {
    ModElt img = f.src->dgen(s);
    for (const auto& [t, b] : f.image[static_cast<std::size_t>(s)]) img.emplace_back(t + offset, b);
    c.set_differential(s, std::move(img));
  }
  for (int s = 0; s < f.dst->size(); ++s) {
    ModElt img;
    for (const auto& [t, b] : f.dst->dgen(s)) img.emplace_back(t + offset, b);
    c.set_differential(s + offset, std::move(img));
  }
  return c;
}

ModuleMap identity_map(const DGModule& m) {
  ModuleMap f{&m, &m, {}};
  for (int s = 0; s < m.size(); ++s) f.image.push_back(m.generator(s));
  return f;
}

DGModule shifted(const DGModule& m, Shift s) {
  DGModule out(&m.algebra());
  for (int i = 0; i < m.size(); ++i) {
    const auto& p = m.summand(i);
    out.add_summand_deg(p.vertex, p.deg + s.degree(), p.label);
  }
  for (int i = 0; i < m.size(); ++i) out.set_differential(i, m.dgen(i));
  return out;
}

std::map<std::pair<int, Trigrade>, std::size_t> homology(const DGModule& m) {
  using Key = std::pair<int, Trigrade>;
  const DGAlgebra& A = m.algebra();
  std::map<Key, std::vector<std::pair<int, int>>> groups;
  for (const auto& [s, b] : m.vector_basis()) groups[{A.basis(b).src, m.term_degree(s, b)}].emplace_back(s, b);
  std::map<Key, std::map<std::pair<int, int>, std::size_t>> position;
  for (const auto& [k, members] : groups)
    for (std::size_t i = 0; i < members.size(); ++i) position[k][members[i]] = i;

  std::map<Key, std::size_t> rank_out;
  for (const auto& [k, members] : groups) {
    const Key next{k.first, k.second + Trigrade{1, 0, 0}};
    auto it = position.find(next);
    if (it == position.end()) continue;
    std::vector<BitVec> rows;
    for (const auto& e : members) {
      BitVec row(it->second.size());
      for (const auto& term : m.d({e})) row.flip(it->second.at(term));
      rows.push_back(std::move(row));
    }
    rank_out[k] = gf2_rank(rows, it->second.size());
  }
  std::map<Key, std::size_t> out;
  for (const auto& [k, members] : groups) {
    const Key prev{k.first, k.second - Trigrade{1, 0, 0}};
    const std::size_t in = rank_out.count(prev) ? rank_out[prev] : 0;
    const std::size_t h = members.size() - rank_out[k] - in;
    if (h) out[k] = h;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Maps a basis element of the first factor (second factor) to a word in the
// product algebra, given the vertex of the other factor.
template <class LeftWord, class RightWord>
DGModule external_product(const DGModule& m1, const DGModule& m2, const DGAlgebra& prod, int width,
                          const std::function<Trigrade(int, const Trigrade&, int, const Trigrade&)>& gen_degree,
                          LeftWord left_word, RightWord right_word) {
  const DGAlgebra& A1 = m1.algebra();
  const DGAlgebra& A2 = m2.algebra();
  DGModule out(&prod);
  auto index = [&](int s1, int s2) { return s1 * m2.size() + s2; };
  for (int s1 = 0; s1 < m1.size(); ++s1)
    for (int s2 = 0; s2 < m2.size(); ++s2) {
      const auto& p1 = m1.summand(s1);
      const auto& p2 = m2.summand(s2);
      out.add_summand_deg(p1.vertex * width + p2.vertex, gen_degree(p1.vertex, p1.deg, p2.vertex, p2.deg),
                          p1.label + "⊗" + p2.label);
    }
  auto as_basis = [&](int src, const Word& w) { return prod.word_elt(src, w); };
  for (int s1 = 0; s1 < m1.size(); ++s1)
    for (int s2 = 0; s2 < m2.size(); ++s2) {
      const int v1 = m1.summand(s1).vertex, v2 = m2.summand(s2).vertex;
      ModElt img;
      for (const auto& [t, a] : m1.dgen(s1)) {
        const auto& b = A1.basis(a);
        for (int c : as_basis(b.src * width + v2, left_word(b.rep, v2))) img.emplace_back(index(t, s2), c);
      }
      for (const auto& [t, a] : m2.dgen(s2)) {
        const auto& b = A2.basis(a);
        for (int c : as_basis(v1 * width + b.src, right_word(b.rep, v1))) img.emplace_back(index(s1, t), c);
      }
      out.set_differential(index(s1, s2), std::move(img));
    }
  return out;
}

}  // namespace

DGModule chi(const DGModule& m1, const DGModule& m2, const DGAlgebra& aoa) {
  const DGAlgebra& A = m1.algebra();
  std::vector<std::array<int, 4>> left(static_cast<std::size_t>(A.num_generators()));
  std::vector<std::array<int, 4>> right(left.size());
  for (int g = 0; g < A.num_generators(); ++g)
    for (AVertex v : kAVertices) {
      const std::string name = A.generator(g).name;
      const std::string ev = "e(" + avertex_name(v) + ")";
      left[static_cast<std::size_t>(g)][static_cast<std::size_t>(v)] = aoa.find_generator(name + "⊗" + ev);
      right[static_cast<std::size_t>(g)][static_cast<std::size_t>(v)] = aoa.find_generator(ev + "⊗" + name);
      if (left[static_cast<std::size_t>(g)][static_cast<std::size_t>(v)] < 0 ||
          right[static_cast<std::size_t>(g)][static_cast<std::size_t>(v)] < 0)
        throw std::invalid_argument("chi: the second algebra is not the tensor square of the first");
    }
  auto gen_degree = [](int, const Trigrade& d1, int v2, const Trigrade& d2) -> Trigrade {
    return {d1.h + d2.h + 2 * d1.t1 * avertex_parity(static_cast<AVertex>(v2)), d1.t1, d2.t1};
  };
  auto lw = [&](const Word& w, int other) {
    Word out;
    for (char16_t g : w) out.push_back(static_cast<char16_t>(left[g][static_cast<std::size_t>(other)]));
    return out;
  };
  auto rw = [&](const Word& w, int other) {
    Word out;
    for (char16_t g : w) out.push_back(static_cast<char16_t>(right[g][static_cast<std::size_t>(other)]));
    return out;
  };
  return external_product(m1, m2, aoa, 4, gen_degree, lw, rw);
}

DGModule chi_n(const DGModule& m1, const DGModule& m2, const ARAlgebra& product) {
  const int n = product.n;
  const int width = 1 << n;
  auto gen_degree = [n](int, const Trigrade& d1, int v2, const Trigrade& d2) -> Trigrade {
    const int k = __builtin_popcount(static_cast<unsigned>(v2));
    return {d1.h + d2.h + 2 * k * d1.t1, n * d1.t1 + d2.t1, 0};
  };
  auto lw = [&](const Word& w, int mask) {
    Word out;
    for (char16_t g : w) out.push_back(static_cast<char16_t>(product.a_gen.at({g, static_cast<std::uint32_t>(mask)})));
    return out;
  };
  auto rw = [&](const Word& w, int gamma) {
    Word out;
    for (char16_t g : w) out.push_back(static_cast<char16_t>(product.side[g][static_cast<std::size_t>(gamma)]));
    return out;
  };
  return external_product(m1, m2, product.alg, width, gen_degree, lw, rw);
}

}  // namespace catsl11
