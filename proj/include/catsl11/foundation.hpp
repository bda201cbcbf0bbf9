// Exact scalars and grading bookkeeping.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace catsl11 {

// ---------------------------------------------------------------------------
// Checked 64-bit integer arithmetic: overflow throws instead of wrapping.

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);

// The two-element field.
struct F2 {
  bool value = false;
  constexpr F2() = default;
  constexpr explicit F2(bool v) : value(v) {}
  constexpr F2 operator+(F2 o) const { return F2(value != o.value); }
  constexpr F2 operator*(F2 o) const { return F2(value && o.value); }
  constexpr bool operator==(const F2&) const = default;
};

// ---------------------------------------------------------------------------
// Laurent polynomials in N commuting variables with integer coefficients.

template <std::size_t N>
class LaurentPolyN {
 public:
  using Exponent = std::array<int, N>;
  using TermMap = std::map<Exponent, std::int64_t>;

  LaurentPolyN() { vars_ = default_vars(); }
  explicit LaurentPolyN(std::array<std::string, N> vars) : vars_(std::move(vars)) {}

  static LaurentPolyN constant(std::int64_t c) {
    LaurentPolyN p;
    p.add_term(Exponent{}, c);
    return p;
  }
  static LaurentPolyN monomial(const Exponent& e, std::int64_t c = 1) {
    LaurentPolyN p;
    p.add_term(e, c);
    return p;
  }
  // Single-variable convenience: c * var^e.
  static LaurentPolyN mono1(int e, std::int64_t c = 1) requires(N == 1) {
    return monomial(Exponent{e}, c);
  }

  void add_term(const Exponent& e, std::int64_t c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }
  const std::array<std::string, N>& vars() const { return vars_; }
  void set_vars(std::array<std::string, N> v) { vars_ = std::move(v); }

  LaurentPolyN operator+(const LaurentPolyN& o) const {
    LaurentPolyN r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  LaurentPolyN operator-() const {
    LaurentPolyN r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, checked_neg(c));
    return r;
  }
  LaurentPolyN operator-(const LaurentPolyN& o) const { return *this + (-o); }
  LaurentPolyN operator*(const LaurentPolyN& o) const {
    LaurentPolyN r(vars_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < N; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, checked_mul(c1, c2));
      }
    return r;
  }
  LaurentPolyN& operator+=(const LaurentPolyN& o) { return *this = *this + o; }
  LaurentPolyN& operator-=(const LaurentPolyN& o) { return *this = *this - o; }
  LaurentPolyN& operator*=(const LaurentPolyN& o) { return *this = *this * o; }
  LaurentPolyN scaled(std::int64_t k) const { return *this * constant(k); }

  // Equality ignores variable names.
  bool operator==(const LaurentPolyN& o) const { return terms_ == o.terms_; }

  // Sum of coefficients: evaluation at all variables = 1.
  std::int64_t eval_at_one() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
  }

  // Exponent substitution: variable i maps to the monomial prod_j u_j^{rule[i][j]}.
  template <std::size_t M>
  LaurentPolyN<M> substitute(const std::array<std::array<int, M>, N>& rule) const {
    LaurentPolyN<M> r;
    for (const auto& [e, c] : terms_) {
      std::array<int, M> f{};
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < M; ++j) f[j] += e[i] * rule[i][j];
      r.add_term(f, c);
    }
    return r;
  }

  // Inversion of every variable (T -> T^{-1}).
  LaurentPolyN inverted() const {
    LaurentPolyN r(vars_);
    for (const auto& [e, c] : terms_) {
      Exponent f;
      for (std::size_t i = 0; i < N; ++i) f[i] = -e[i];
      r.add_term(f, c);
    }
    return r;
  }

  std::string to_string() const;
  nlohmann::json to_json() const;
  static LaurentPolyN from_json(const nlohmann::json& j);
  static LaurentPolyN parse(const std::string& s, std::array<std::string, N> vars = default_vars());

  static std::array<std::string, N> default_vars() {
    std::array<std::string, N> v;
    if constexpr (N == 1) {
      v[0] = "t";
    } else {
      for (std::size_t i = 0; i < N; ++i) v[i] = "T" + std::to_string(i + 1);
    }
    return v;
  }

 private:
  TermMap terms_;
  std::array<std::string, N> vars_;
};

using LaurentPoly = LaurentPolyN<1>;
using LaurentPoly2 = LaurentPolyN<2>;
using LaurentPoly3 = LaurentPolyN<3>;

// Single-variable polynomials with a named variable ("T" or "t").
LaurentPoly poly_T(int e, std::int64_t c = 1);
LaurentPoly poly_t(int e, std::int64_t c = 1);

// Collapse a two-variable polynomial to one variable with T1 -> t^a, T2 -> t^b.
LaurentPoly laurent_substitute(const LaurentPoly2& p, int a, int b, const std::string& var = "t");

// ---------------------------------------------------------------------------
// Gradings.

struct Bigrade {
  int h = 0;
  int t = 0;
  Bigrade operator+(const Bigrade& o) const { return {h + o.h, t + o.t}; }
  Bigrade operator-(const Bigrade& o) const { return {h - o.h, t - o.t}; }
  bool operator==(const Bigrade&) const = default;
  auto operator<=>(const Bigrade&) const = default;
  std::string to_string() const;
};

struct Trigrade {
  int h = 0;
  int t1 = 0;
  int t2 = 0;
  Trigrade operator+(const Trigrade& o) const { return {h + o.h, t1 + o.t1, t2 + o.t2}; }
  Trigrade operator-(const Trigrade& o) const { return {h - o.h, t1 - o.t1, t2 - o.t2}; }
  bool operator==(const Trigrade&) const = default;
  auto operator<=>(const Trigrade&) const = default;
  std::string to_string() const;
  Bigrade bigrade() const { return {h, t1}; }
  static Trigrade from(const Bigrade& b) { return {b.h, b.t, 0}; }
};

inline Bigrade bigrade_add(const Bigrade& a, const Bigrade& b) { return a + b; }
inline Trigrade trigrade_add(const Trigrade& a, const Trigrade& b) { return a + b; }

}  // namespace catsl11
