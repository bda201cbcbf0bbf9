#include "catsl11/ut_hopf.hpp"

#include <sstream>

namespace catsl11 {

namespace {

LaurentPoly T0() { return poly_T(0); }
LaurentPoly zeroT() { return LaurentPoly({"T"}); }

// Lift a polynomial in T into the k-th variable of a multivariate polynomial.
template <std::size_t N>
LaurentPolyN<N> lift(const LaurentPoly& p, std::size_t slot) {
  std::array<std::array<int, N>, 1> rule{};
  rule[0][slot] = 1;
  return p.substitute<N>(rule);
}

std::string coeff_prefix(const std::string& c) {
  if (c == "1") return "";
  if (c == "-1") return "-";
  if (c.find(' ') == std::string::npos) return c + "·";
  return "(" + c + ")·";
}

}  // namespace

int parity(UtBasis b) {
  switch (b) {
    case UtBasis::F: return 1;
    case UtBasis::I: return 0;
    case UtBasis::EF: return 0;
    case UtBasis::E: return -1;
  }
  return 0;
}

const char* basis_name(UtBasis b) {
  switch (b) {
    case UtBasis::F: return "F";
    case UtBasis::I: return "I";
    case UtBasis::EF: return "EF";
    case UtBasis::E: return "E";
  }
  return "?";
}

UtBasis parse_basis(const std::string& s) {
  for (UtBasis b : kUtBasis)
    if (s == basis_name(b)) return b;
  throw std::invalid_argument("unknown U_t basis element '" + s + "'");
}

UtElt::UtElt() {
  for (auto& c : coords) c = zeroT();
}

UtElt UtElt::basis(UtBasis b, const LaurentPoly& c) {
  UtElt e;
  e[b] = c;
  e[b].set_vars({"T"});
  return e;
}

UtElt UtElt::operator+(const UtElt& o) const {
  UtElt r;
  for (int i = 0; i < 4; ++i) r.coords[i] = coords[i] + o.coords[i];
  return r;
}
UtElt UtElt::operator-() const {
  UtElt r;
  for (int i = 0; i < 4; ++i) r.coords[i] = -coords[i];
  return r;
}
UtElt UtElt::operator-(const UtElt& o) const { return *this + (-o); }
UtElt UtElt::scaled(const LaurentPoly& c) const {
  UtElt r;
  for (int i = 0; i < 4; ++i) r.coords[i] = coords[i] * c;
  return r;
}
bool UtElt::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

std::string UtElt::to_string() const {
  std::string out;
  for (UtBasis b : kUtBasis) {
    const auto& c = (*this)[b];
    if (c.is_zero()) continue;
    LaurentPoly named = c;
    named.set_vars({"T"});
    if (!out.empty()) out += " + ";
    out += coeff_prefix(named.to_string()) + basis_name(b);
  }
  return out.empty() ? "0" : out;
}

nlohmann::json UtElt::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (UtBasis b : kUtBasis)
    if (!(*this)[b].is_zero()) j[basis_name(b)] = (*this)[b].to_json();
  return j;
}

UtTensorElt UtTensorElt::pure(UtBasis a, UtBasis b, const LaurentPoly2& c) {
  UtTensorElt u;
  u.at(a, b) = c;
  return u;
}
UtTensorElt UtTensorElt::operator+(const UtTensorElt& o) const {
  UtTensorElt r;
  for (int i = 0; i < 16; ++i) r.coords[i] = coords[i] + o.coords[i];
  return r;
}
UtTensorElt UtTensorElt::operator-(const UtTensorElt& o) const {
  UtTensorElt r;
  for (int i = 0; i < 16; ++i) r.coords[i] = coords[i] - o.coords[i];
  return r;
}
bool UtTensorElt::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}
std::string UtTensorElt::to_string() const {
  std::string out;
  for (UtBasis a : kUtBasis)
    for (UtBasis b : kUtBasis) {
      const auto& c = at(a, b);
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += coeff_prefix(c.to_string()) + basis_name(a) + "⊗" + basis_name(b);
    }
  return out.empty() ? "0" : out;
}
nlohmann::json UtTensorElt::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (UtBasis a : kUtBasis)
    for (UtBasis b : kUtBasis)
      if (!at(a, b).is_zero()) j[std::string(basis_name(a)) + "⊗" + basis_name(b)] = at(a, b).to_json();
  return j;
}

std::string UtTensor3Elt::to_string() const {
  std::string out;
  for (int i = 0; i < 64; ++i) {
    if (coords[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coeff_prefix(coords[i].to_string()) + basis_name(kUtBasis[i / 16]) + "⊗" +
           basis_name(kUtBasis[(i / 4) % 4]) + "⊗" + basis_name(kUtBasis[i % 4]);
  }
  return out.empty() ? "0" : out;
}

UtElt ut_mul_basis(UtBasis a, UtBasis b) {
  using B = UtBasis;
  const LaurentPoly one = T0();
  const LaurentPoly one_minus_T = T0() - poly_T(1);
  if (a == B::I) return UtElt::basis(b);
  if (b == B::I) return UtElt::basis(a);
  switch (a) {
    case B::F:
      if (b == B::F) return UtElt();
      if (b == B::EF) return UtElt::basis(B::F, one_minus_T);
      // F E = I - T - EF
      return UtElt::basis(B::I, one_minus_T) - UtElt::basis(B::EF);
    case B::EF:
      if (b == B::F) return UtElt();
      if (b == B::EF) return UtElt::basis(B::EF, one_minus_T);
      return UtElt::basis(B::E, one_minus_T);
    case B::E:
      if (b == B::F) return UtElt::basis(B::EF, one);
      return UtElt();
    default: break;
  }
  return UtElt();
}

UtElt ut_mul(const UtElt& a, const UtElt& b) {
  UtElt r;
  for (UtBasis x : kUtBasis) {
    if (a[x].is_zero()) continue;
    for (UtBasis y : kUtBasis) {
      if (b[y].is_zero()) continue;
      r = r + ut_mul_basis(x, y).scaled(a[x] * b[y]);
    }
  }
  return r;
}

UtTensorElt ut_tensor_mul(const UtTensorElt& u, const UtTensorElt& v) {
  UtTensorElt r;
  for (UtBasis a : kUtBasis)
    for (UtBasis b : kUtBasis) {
      const auto& cu = u.at(a, b);
      if (cu.is_zero()) continue;
      for (UtBasis c : kUtBasis)
        for (UtBasis d : kUtBasis) {
          const auto& cv = v.at(c, d);
          if (cv.is_zero()) continue;
          const int sign = ((parity(b) * parity(c)) % 2 == 0) ? 1 : -1;
          const UtElt ac = ut_mul_basis(a, c);
          const UtElt bd = ut_mul_basis(b, d);
          const LaurentPoly2 coeff = (cu * cv).scaled(sign);
          for (UtBasis p : kUtBasis) {
            if (ac[p].is_zero()) continue;
            for (UtBasis q : kUtBasis) {
              if (bd[q].is_zero()) continue;
              r.at(p, q) += coeff * lift<2>(ac[p], 0) * lift<2>(bd[q], 1);
            }
          }
        }
    }
  return r;
}

namespace {

UtTensorElt comul_basis(UtBasis b) {
  using B = UtBasis;
  const LaurentPoly2 one = LaurentPoly2::constant(1);
  const LaurentPoly2 T2 = LaurentPoly2::monomial({0, 1});
  switch (b) {
    case B::I: return UtTensorElt::pure(B::I, B::I, one);
    case B::E: return UtTensorElt::pure(B::E, B::I, one) + UtTensorElt::pure(B::I, B::E, one);
    case B::F: return UtTensorElt::pure(B::F, B::I, T2) + UtTensorElt::pure(B::I, B::F, one);
    case B::EF: return ut_tensor_mul(comul_basis(B::E), comul_basis(B::F));
  }
  return {};
}

}  // namespace

UtTensorElt ut_comul(const UtElt& a) {
  UtTensorElt r;
  for (UtBasis b : kUtBasis) {
    if (a[b].is_zero()) continue;
    // T maps to T1 T2.
    const LaurentPoly2 c = a[b].substitute<2>({{{1, 1}}});
    UtTensorElt d = comul_basis(b);
    for (auto& x : d.coords) x = x * c;
    r = r + d;
  }
  return r;
}

LaurentPoly ut_counit(const UtElt& a) {
  // Algebra map to Z: T -> 1, I -> 1, E, F -> 0 (so EF -> 0).
  return poly_T(0, a[UtBasis::I].eval_at_one());
}

UtElt ut_antipode(const UtElt& a) {
  using B = UtBasis;
  const UtElt sF = UtElt::basis(B::F, poly_T(-1, -1));
  const UtElt sE = UtElt::basis(B::E, poly_T(0, -1));
  // S(EF) = (-1)^{p(E)p(F)} S(F) S(E)
  const int sign = ((parity(B::E) * parity(B::F)) % 2 == 0) ? 1 : -1;
  const UtElt sEF = ut_mul(sF, sE).scaled(poly_T(0, sign));
  UtElt r;
  for (B b : kUtBasis) {
    if (a[b].is_zero()) continue;
    const LaurentPoly c = a[b].inverted();
    switch (b) {
      case B::I: r = r + UtElt::basis(B::I, c); break;
      case B::E: r = r + sE.scaled(c); break;
      case B::F: r = r + sF.scaled(c); break;
      case B::EF: r = r + sEF.scaled(c); break;
    }
  }
  return r;
}

UtTensor3Elt comul_left(const UtTensorElt& u) {
  UtTensor3Elt r;
  for (UtBasis a : kUtBasis)
    for (UtBasis b : kUtBasis) {
      const auto& c = u.at(a, b);
      if (c.is_zero()) continue;
      // T1 -> T1 T2 (the first slot is split), T2 -> T3.
      const LaurentPoly3 c3 = c.substitute<3>({{{1, 1, 0}, {0, 0, 1}}});
      const UtTensorElt da = ut_comul(UtElt::basis(a));
      for (UtBasis p : kUtBasis)
        for (UtBasis q : kUtBasis) {
          const auto& d = da.at(p, q);
          if (d.is_zero()) continue;
          r.at(p, q, b) += c3 * d.substitute<3>({{{1, 0, 0}, {0, 1, 0}}});
        }
    }
  return r;
}

UtTensor3Elt comul_right(const UtTensorElt& u) {
  UtTensor3Elt r;
  for (UtBasis a : kUtBasis)
    for (UtBasis b : kUtBasis) {
      const auto& c = u.at(a, b);
      if (c.is_zero()) continue;
      const LaurentPoly3 c3 = c.substitute<3>({{{1, 0, 0}, {0, 1, 1}}});
      const UtTensorElt db = ut_comul(UtElt::basis(b));
      for (UtBasis p : kUtBasis)
        for (UtBasis q : kUtBasis) {
          const auto& d = db.at(p, q);
          if (d.is_zero()) continue;
          r.at(a, p, q) += c3 * d.substitute<3>({{{0, 1, 0}, {0, 0, 1}}});
        }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Matrix model. PBW coordinates (I, E, F, FE); columns are images of basis vectors.

namespace {

using Vec4 = std::array<LaurentPoly, 4>;
using Mat4 = std::array<Vec4, 4>;  // Mat4[col] = image of basis vector col

Vec4 zero_vec() { return {zeroT(), zeroT(), zeroT(), zeroT()}; }

Mat4 identity4() {
  Mat4 m;
  for (int c = 0; c < 4; ++c) {
    m[c] = zero_vec();
    m[c][c] = T0();
  }
  return m;
}

Vec4 mat_apply(const Mat4& m, const Vec4& v) {
  Vec4 r = zero_vec();
  for (int c = 0; c < 4; ++c) {
    if (v[c].is_zero()) continue;
    for (int row = 0; row < 4; ++row) r[row] += m[c][row] * v[c];
  }
  return r;
}

Mat4 compose(const Mat4& a, const Mat4& b) {  // a after b
  Mat4 r;
  for (int c = 0; c < 4; ++c) r[c] = mat_apply(a, b[c]);
  return r;
}

Mat4 left_E() {
  Mat4 m;
  for (auto& c : m) c = zero_vec();
  m[0][1] = T0();                      // I -> E
  m[2][0] = T0() - poly_T(1);          // F -> I - T - FE
  m[2][3] = poly_T(0, -1);
  m[3][1] = T0() - poly_T(1);          // FE -> (1 - T) E
  return m;
}

Mat4 left_F() {
  Mat4 m;
  for (auto& c : m) c = zero_vec();
  m[0][2] = T0();  // I -> F
  m[1][3] = T0();  // E -> FE
  return m;
}

Mat4 left_of(UtBasis b) {
  switch (b) {
    case UtBasis::I: return identity4();
    case UtBasis::E: return left_E();
    case UtBasis::F: return left_F();
    case UtBasis::EF: return compose(left_E(), left_F());
  }
  return identity4();
}

}  // namespace

UtElt matrix_model_mul(UtBasis a, UtBasis b) {
  Vec4 unit = zero_vec();
  unit[0] = T0();
  const Vec4 v = mat_apply(compose(left_of(a), left_of(b)), unit);
  UtElt r;
  r[UtBasis::I] = v[0];
  r[UtBasis::E] = v[1];
  r[UtBasis::F] = v[2];
  // FE = I - T - EF
  r[UtBasis::I] += v[3] * (T0() - poly_T(1));
  r[UtBasis::EF] += -v[3];
  for (auto& c : r.coords) c.set_vars({"T"});
  return r;
}

// ---------------------------------------------------------------------------

std::vector<AxiomResult> check_hopf_axioms() {
  std::vector<AxiomResult> out;
  std::vector<UtElt> inputs;
  std::vector<std::string> names;
  for (UtBasis b : kUtBasis) {
    inputs.push_back(UtElt::basis(b));
    names.push_back(basis_name(b));
    inputs.push_back(UtElt::basis(b, poly_T(1)));
    names.push_back(std::string("T·") + basis_name(b));
  }

  AxiomResult mult{"comultiplication is an algebra map"};
  for (UtBasis a : kUtBasis)
    for (UtBasis b : kUtBasis) {
      ++mult.cases;
      const UtTensorElt lhs = ut_comul(ut_mul_basis(a, b));
      const UtTensorElt rhs = ut_tensor_mul(ut_comul(UtElt::basis(a)), ut_comul(UtElt::basis(b)));
      if (!(lhs == rhs) && mult.pass) {
        mult.pass = false;
        mult.counterexample = std::string(basis_name(a)) + "·" + basis_name(b) + ": " + lhs.to_string() +
                              " vs " + rhs.to_string();
      }
    }
  out.push_back(mult);

  AxiomResult coassoc{"coassociativity"};
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    ++coassoc.cases;
    const UtTensorElt d = ut_comul(inputs[i]);
    const UtTensor3Elt l = comul_left(d);
    const UtTensor3Elt r = comul_right(d);
    if (!(l == r) && coassoc.pass) {
      coassoc.pass = false;
      coassoc.counterexample = names[i] + ": " + l.to_string() + " vs " + r.to_string();
    }
  }
  out.push_back(coassoc);

  AxiomResult counit{"counit"};
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    ++counit.cases;
    const UtTensorElt d = ut_comul(inputs[i]);
    UtElt left, right;
    for (UtBasis a : kUtBasis)
      for (UtBasis b : kUtBasis) {
        const auto& c = d.at(a, b);
        if (c.is_zero()) continue;
        // (eps (x) id): T1 -> 1 and keep b; (id (x) eps): T2 -> 1 and keep a.
        if (a == UtBasis::I) left = left + UtElt::basis(b, c.substitute<1>({{{0}, {1}}}));
        if (b == UtBasis::I) right = right + UtElt::basis(a, c.substitute<1>({{{1}, {0}}}));
      }
    if ((!(left == inputs[i]) || !(right == inputs[i])) && counit.pass) {
      counit.pass = false;
      counit.counterexample = names[i] + ": " + left.to_string() + " / " + right.to_string();
    }
  }
  out.push_back(counit);

  AxiomResult antipode{"antipode"};
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    ++antipode.cases;
    const UtTensorElt d = ut_comul(inputs[i]);
    UtElt left, right;
    for (UtBasis a : kUtBasis)
      for (UtBasis b : kUtBasis) {
        const auto& c = d.at(a, b);
        if (c.is_zero()) continue;
        // Split the coefficient monomial-wise: T1^e1 T2^e2.
        for (const auto& [e, k] : c.terms()) {
          const UtElt A = UtElt::basis(a, poly_T(e[0], k));
          const UtElt Bv = UtElt::basis(b, poly_T(e[1]));
          left = left + ut_mul(ut_antipode(A), Bv);
          right = right + ut_mul(A, ut_antipode(Bv));
        }
      }
    const UtElt expect = UtElt::basis(UtBasis::I, ut_counit(inputs[i]));
    if ((!(left == expect) || !(right == expect)) && antipode.pass) {
      antipode.pass = false;
      antipode.counterexample = names[i] + ": " + left.to_string() + " / " + right.to_string() +
                                " expected " + expect.to_string();
    }
  }
  out.push_back(antipode);
  return out;
}

std::vector<AxiomResult> check_ut_structure() {
  std::vector<AxiomResult> out;
  AxiomResult assoc{"associativity"};
  for (UtBasis a : kUtBasis)
    for (UtBasis b : kUtBasis)
      for (UtBasis c : kUtBasis) {
        ++assoc.cases;
        const UtElt l = ut_mul(ut_mul_basis(a, b), UtElt::basis(c));
        const UtElt r = ut_mul(UtElt::basis(a), ut_mul_basis(b, c));
        if (!(l == r) && assoc.pass) {
          assoc.pass = false;
          assoc.counterexample = std::string(basis_name(a)) + basis_name(b) + basis_name(c);
        }
      }
  out.push_back(assoc);

  AxiomResult par{"parity additivity"};
  for (UtBasis a : kUtBasis)
    for (UtBasis b : kUtBasis) {
      ++par.cases;
      const UtElt p = ut_mul_basis(a, b);
      for (UtBasis c : kUtBasis)
        if (!p[c].is_zero() && parity(c) != parity(a) + parity(b) && par.pass) {
          par.pass = false;
          par.counterexample = std::string(basis_name(a)) + "·" + basis_name(b);
        }
    }
  out.push_back(par);

  AxiomResult model{"agreement with the matrix model"};
  for (UtBasis a : kUtBasis)
    for (UtBasis b : kUtBasis) {
      ++model.cases;
      const UtElt x = ut_mul_basis(a, b);
      const UtElt y = matrix_model_mul(a, b);
      if (!(x == y) && model.pass) {
        model.pass = false;
        model.counterexample = std::string(basis_name(a)) + "·" + basis_name(b) + ": " + x.to_string() +
                               " vs " + y.to_string();
      }
    }
  out.push_back(model);
  return out;
}

}  // namespace catsl11
