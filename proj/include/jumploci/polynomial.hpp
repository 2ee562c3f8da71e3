#pragma once

// Exact polynomials over Q: univariate arithmetic, square-free
// factorization, Sturm-sequence real root isolation, interpolation and
// resultants; a small dense bivariate type for eliminating one variable.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/error.hpp"
#include "jumploci/matrix.hpp"
#include "jumploci/scalars.hpp"

namespace jumploci {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs) {
    for (long x : coeffs) c_.emplace_back(x);
    trim();
  }

  static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }
  static Poly monomial(std::size_t k, const Rational& c) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
  }
  // x - r
  static Poly linear_root(const Rational& r) {
    return Poly(std::vector<Rational>{-r, Rational(1)});
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& lead() const {
    if (c_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
    return c_.back();
  }

  Rational operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k)
      d.push_back(c_[k] * Rational(static_cast<long>(k)));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Poly p = *this;
    Rational l = lead();
    for (auto& x : p.c_) x /= l;
    return p;
  }

  // x^deg p(1/x) for the given formal degree.
  Poly reversed(std::size_t formal_degree) const {
    std::vector<Rational> r(formal_degree + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (k > formal_degree) throw PreconditionError("formal degree too small");
      r[formal_degree - k] = c_[k];
    }
    return Poly(std::move(r));
  }

  // Multiply by the lcm of denominators and divide by the content, making
  // the leading coefficient positive.
  Poly primitive() const {
    if (is_zero()) return *this;
    mpz_class den = 1, g = 0;
    for (const auto& x : c_) den = lcm(den, x.denominator());
    std::vector<Rational> out;
    for (const auto& x : c_) {
      mpz_class v = x.numerator() * (den / x.denominator());
      g = gcd(g, v);
      out.emplace_back(v);
    }
    if (c_.back().sign() < 0) g = -g;
    for (auto& x : out) x /= Rational(g);
    return Poly(std::move(out));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly&, const Poly&) = default;

  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    Poly r = a;
    if (r.degree() < b.degree()) return {Poly{}, r};
    std::vector<Rational> q(r.c_.size() - b.c_.size() + 1);
    const Rational inv = b.lead().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      std::size_t shift = r.c_.size() - b.c_.size();
      Rational f = r.lead() * inv;
      q[shift] = f;
      for (std::size_t k = 0; k < b.c_.size(); ++k) r.c_[shift + k] -= f * b.c_[k];
      r.trim();
    }
    return {Poly(std::move(q)), r};
  }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
  // Exact division; throws if b does not divide a.
  friend Poly operator/(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw PreconditionError("inexact polynomial division");
    return q;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      Rational c = c_[k];
      bool neg = c.sign() < 0;
      if (!s.empty()) s += neg ? " - " : " + ";
      else if (neg) s += "-";
      Rational a = c.abs();
      bool unit = a == Rational(1);
      if (k == 0 || !unit) s += a.str();
      if (k > 0) {
        if (!unit) s += "*";
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;  // c_[k] is the coefficient of x^k
};

inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Poly power(const Poly& p, std::size_t k) {
  Poly out = Poly::constant(Rational(1));
  for (std::size_t i = 0; i < k; ++i) out = out * p;
  return out;
}

// Yun's algorithm: p = c * prod f_i^i with f_i monic, square-free and
// pairwise coprime. Returns the nonconstant f_i with their exponent i.
inline std::vector<std::pair<Poly, std::size_t>> square_free_factorization(
    const Poly& p) {
  if (p.is_zero()) throw PreconditionError("square-free factorization of zero");
  std::vector<std::pair<Poly, std::size_t>> out;
  if (p.degree() < 1) return out;
  Poly a = p.monic();
  Poly d = a.derivative();
  Poly g = gcd(a, d);
  Poly b = a / g;
  Poly c = d / g;
  Poly e = c - b.derivative();
  for (std::size_t i = 1; b.degree() > 0; ++i) {
    Poly f = gcd(b, e);
    b = b / f;
    c = e / f;
    e = c - b.derivative();
    if (f.degree() > 0) out.emplace_back(f, i);
  }
  return out;
}

inline Poly square_free_part(const Poly& p) {
  Poly out = Poly::constant(Rational(1));
  for (const auto& [f, m] : square_free_factorization(p)) out = out * f;
  return out;
}

inline std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = seq[seq.size() - 2] % seq.back();
    seq.push_back(Rational(-1) * r);
  }
  seq.pop_back();
  return seq;
}

inline int sign_changes(const std::vector<Poly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : seq) {
    int s = q(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// All real roots lie in (-bound, bound).
inline Rational cauchy_bound(const Poly& p) {
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, (p.coeff(k) / p.lead()).abs());
  return m + Rational(1);
}

struct RealRoot {
  Rational lo, hi;               // the root lies in (lo, hi], or equals lo = hi
  std::optional<Rational> exact;  // set when the root is rational
};

namespace detail {

inline int roots_in(const std::vector<Poly>& seq, const Rational& a,
                    const Rational& b) {
  return sign_changes(seq, a) - sign_changes(seq, b);
}

}  // namespace detail

// Isolating intervals for the distinct real roots of p, in increasing order.
// Rational roots are detected exactly.
inline std::vector<RealRoot> real_roots(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("roots of the zero polynomial");
  std::vector<RealRoot> out;
  if (p.degree() < 1) return out;
  Poly s = square_free_part(p).primitive();
  auto seq = sturm_sequence(s);
  Rational bound = cauchy_bound(s);
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = detail::roots_in(seq, a, b);
    if (n == 0) continue;
    if (n == 1) {
      isolated.emplace_back(a, b);
      continue;
    }
    Rational mid = (a + b) / Rational(2);
    stack.emplace_back(a, mid);
    stack.emplace_back(mid, b);
  }
  std::sort(isolated.begin(), isolated.end());
  // A rational root of the primitive integer polynomial s has denominator
  // dividing its leading coefficient L, so shrinking an interval below
  // width 1/L leaves at most one candidate k / L.
  const Rational step = Rational(1) / s.lead().abs();
  for (auto [a, b] : isolated) {
    RealRoot r{a, b, std::nullopt};
    while (true) {
      if (s(b).is_zero()) {
        r = {b, b, b};
        break;
      }
      if (b - a < step) {
        Rational t = b / step;
        mpz_class num = t.numerator(), den = t.denominator(), k;
        mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Rational cand = Rational(k) * step;  // largest multiple of step <= b
        if (cand > a && s(cand).is_zero()) r = {cand, cand, cand};
        else r = {a, b, std::nullopt};
        break;
      }
      Rational mid = (a + b) / Rational(2);
      if (detail::roots_in(seq, a, mid) == 1) b = mid;
      else a = mid;
    }
    out.push_back(r);
  }
  return out;
}

// Shrinks an isolating interval of a simple root of p below `width`.
inline RealRoot refine(const Poly& p, RealRoot r, const Rational& width) {
  if (r.exact) return r;
  auto seq = sturm_sequence(square_free_part(p));
  while (r.hi - r.lo >= width) {
    Rational mid = (r.lo + r.hi) / Rational(2);
    if (detail::roots_in(seq, r.lo, mid) == 1) r.hi = mid;
    else r.lo = mid;
  }
  return r;
}

// Newton interpolation through (xs[i], ys[i]) with distinct xs.
inline Poly interpolate(const std::vector<Rational>& xs,
                        const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw PreconditionError("interpolation size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      Rational den = xs[i] - xs[i - j];
      if (den.is_zero()) throw PreconditionError("repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / den;
      if (i == j) break;
    }
  Poly out;
  for (std::size_t i = n; i-- > 0;)
    out = out * Poly::linear_root(xs[i]) + Poly::constant(dd[i]);
  return out;
}

// Determinant of the Sylvester matrix of a and b taken with the given formal
// degrees (leading coefficients may vanish).
inline Rational sylvester_resultant(const Poly& a, std::size_t m, const Poly& b,
                                    std::size_t n) {
  if (m + n == 0) return Rational(1);
  Matrix<Rational> s(m + n, m + n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s(i, i + k) = a.coeff(m - k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s(n + i, i + k) = b.coeff(n - k);
  return determinant(s);
}

// Dense polynomial in two variables; coefficient of x^i y^j at (i, j).
class BiPoly {
 public:
  BiPoly() = default;
  static BiPoly constant(const Rational& c) {
    BiPoly p;
    p.add(0, 0, c);
    return p;
  }
  // a x + b y + c
  static BiPoly linear(const Rational& a, const Rational& b, const Rational& c) {
    BiPoly p;
    p.add(1, 0, a);
    p.add(0, 1, b);
    p.add(0, 0, c);
    return p;
  }

  void add(std::size_t i, std::size_t j, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<std::size_t, std::size_t>, Rational>& terms() const {
    return terms_;
  }
  std::size_t total_degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
  }
  std::size_t degree_in_second() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
  }

  Rational operator()(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c * pow(x, e.first) * pow(y, e.second);
    return acc;
  }

  // Polynomial in the second variable after fixing the first.
  Poly at_first(const Rational& x) const {
    std::vector<Rational> v(degree_in_second() + 1);
    for (const auto& [e, c] : terms_) v[e.second] += c * pow(x, e.first);
    return Poly(std::move(v));
  }

  // Substitute x = u - s y, giving a polynomial in (u, y).
  BiPoly sheared(const Rational& s) const {
    BiPoly out;
    for (const auto& [e, c] : terms_) {
      auto [i, j] = e;
      Rational binom(1);
      for (std::size_t k = 0; k <= i; ++k) {
        // C(i, k) u^{i-k} (-s y)^k y^j
        out.add(i - k, j + k, c * binom * pow(-s, k));
        binom = binom * Rational(static_cast<long>(i - k)) /
                Rational(static_cast<long>(k + 1));
      }
    }
    return out;
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, c);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [e, c] : a.terms_)
      for (const auto& [f, d] : b.terms_)
        out.add(e.first + f.first, e.second + f.second, c * d);
    return out;
  }
  friend BiPoly operator*(const Rational& s, const BiPoly& a) {
    BiPoly out;
    for (const auto& [e, c] : a.terms_) out.add(e.first, e.second, s * c);
    return out;
  }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  static Rational pow(const Rational& x, std::size_t k) {
    Rational r(1);
    for (std::size_t i = 0; i < k; ++i) r *= x;
    return r;
  }
  std::map<std::pair<std::size_t, std::size_t>, Rational> terms_;
};

}  // namespace jumploci
