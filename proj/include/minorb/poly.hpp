#ifndef MINORB_POLY_HPP
#define MINORB_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorb/numeric.hpp"

namespace minorb {

/// Exponent vector of a monomial; one slot per variable.
using Monomial = std::vector<std::uint8_t>;

inline int mono_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

/// Graded lexicographic order: lower total degree first, then lexicographic
/// on the exponent vector read from variable 0. Fixed once; the cache format
/// and every chosen basis depend on it.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

inline std::string mono_str(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(static_cast<int>(m[i]));
  }
  return s;
}

inline Monomial mono_parse(const std::string& s, int nvars) {
  Monomial m;
  m.reserve(nvars);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    m.push_back(static_cast<std::uint8_t>(std::stoi(s.substr(pos, comma - pos))));
    pos = comma + 1;
  }
  if (static_cast<int>(m.size()) != nvars) throw std::runtime_error("bad monomial: " + s);
  return m;
}

/// All monomials of total degree d in nvars variables, in grlex order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial cur(nvars, 0);
  // recursive enumeration, lexicographic by construction
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == nvars - 1) {
      cur[var] = static_cast<std::uint8_t>(rem);
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      cur[var] = static_cast<std::uint8_t>(e);
      self(self, var + 1, rem - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

/// Sparse multivariate polynomial over Gaussian rationals.
class Poly {
 public:
  using Terms = std::map<Monomial, GQ, GrlexLess>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, GQ c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), std::move(c));
    return p;
  }
  static Poly variable(int nvars, int idx, GQ c = GQ(1)) {
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[idx] = 1;
    p.add_term(std::move(m), std::move(c));
    return p;
  }
  /// Linear form sum_i coeffs[i] * x_i.
  static Poly linear(std::span<const GQ> coeffs) {
    Poly p(static_cast<int>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      Monomial m(coeffs.size(), 0);
      m[i] = 1;
      p.terms_.emplace(std::move(m), coeffs[i]);
    }
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(Monomial m, GQ c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = mono_degree(terms_.begin()->first);
    for (auto& [m, c] : terms_)
      if (mono_degree(m) != d) return false;
    return true;
  }

  Poly& operator+=(const Poly& o) {
    check_vars(o);
    for (auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_vars(o);
    for (auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  Poly operator-() const {
    Poly r(nvars_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Poly& operator*=(const GQ& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Poly operator*(Poly a, const GQ& s) { return a *= s; }
  friend Poly operator*(const GQ& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_vars(b);
    Poly r(a.nvars_);
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) {
        Monomial m(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
        r.add(m, ca * cb);
      }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Poly derivative(int var) const {
    Poly r(nvars_);
    for (auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial d = m;
      d[var] -= 1;
      r.terms_.emplace(std::move(d), c * GQ(Rat(static_cast<long>(m[var]))));
    }
    return r;
  }

  /// Grading operator: multiplies each degree-d term by d.
  Poly euler_apply() const {
    Poly r(nvars_);
    for (auto& [m, c] : terms_) {
      int d = mono_degree(m);
      if (d == 0) continue;
      r.terms_.emplace(m, c * GQ(Rat(d)));
    }
    return r;
  }

  /// Homogeneous component of total degree d.
  Poly component(int d) const {
    Poly r(nvars_);
    for (auto& [m, c] : terms_)
      if (mono_degree(m) == d) r.terms_.emplace(m, c);
    return r;
  }

  Poly conj_coeffs() const {
    Poly r(nvars_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
    return r;
  }

  GQ evaluate(std::span<const GQ> point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw std::invalid_argument("evaluate: point has wrong dimension");
    GQ acc(0);
    for (auto& [m, c] : terms_) {
      GQ t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int e = 0; e < m[i]; ++e) t *= point[i];
      acc += t;
    }
    return acc;
  }

  GQ coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GQ(0) : it->second;
  }

 private:
  void check_vars(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable-count mismatch");
  }
  void add(const Monomial& m, GQ c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int nvars_;
  Terms terms_;
};

}  // namespace minorb

#endif
