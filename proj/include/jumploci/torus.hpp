#pragma once

// Laurent polynomial systems on an algebraic torus, exponential tangent cone
// membership, and tangent cones of hypersurfaces at the identity.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/error.hpp"
#include "jumploci/scalars.hpp"

namespace jumploci {

using Exponent = std::vector<long>;

// Finite map from exponent vectors to nonzero rational coefficients. With
// nonnegative exponents this doubles as an ordinary polynomial.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(std::size_t rank = 0) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Rational& c) {
    if (e.size() != rank_)
      throw PreconditionError("exponent vector has length " +
                              std::to_string(e.size()) + ", expected " +
                              std::to_string(rank_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational at_identity() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  // Value at a point with nonzero coordinates.
  Rational operator()(const std::vector<Rational>& z) const {
    if (z.size() != rank_) throw PreconditionError("point has the wrong length");
    Rational s(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t j = 0; j < rank_; ++j) {
        Rational base = e[j] >= 0 ? z[j] : z[j].inverse();
        for (long k = 0; k < (e[j] >= 0 ? e[j] : -e[j]); ++k) t *= base;
      }
      s += t;
    }
    return s;
  }

  std::size_t min_degree() const {
    std::size_t d = ~std::size_t(0);
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (long x : e) s += x;
      d = std::min(d, static_cast<std::size_t>(s));
    }
    return d;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b) {
    if (a.rank_ != b.rank_) throw PreconditionError("torus rank mismatch");
    LaurentPolynomial out(a.rank_);
    for (const auto& [e, c] : a.terms_)
      for (const auto& [f, d] : b.terms_) {
        Exponent g(e.size());
        for (std::size_t j = 0; j < e.size(); ++j) g[j] = e[j] + f[j];
        out.add_term(g, c * d);
      }
    return out;
  }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::size_t rank_;
  std::map<Exponent, Rational> terms_;
};

struct LaurentSystem {
  std::size_t rank = 0;
  std::vector<LaurentPolynomial> equations;
};

// t -> sum c_k exp(mu_k t) with distinct, sorted frequencies mu_k.
class ExpPolynomial {
 public:
  void add(const Rational& freq, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(freq, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  // Exponentials with distinct frequencies are linearly independent, so
  // the function vanishes identically iff every grouped coefficient is 0.
  bool identically_zero() const { return terms_.empty(); }
  const std::map<Rational, Rational>& terms() const { return terms_; }

 private:
  std::map<Rational, Rational> terms_;
};

// P(exp(t alpha_1), ..., exp(t alpha_r)) as an exponential polynomial.
inline ExpPolynomial along_direction(const LaurentPolynomial& p,
                                     const std::vector<Rational>& alpha) {
  if (alpha.size() != p.rank())
    throw PreconditionError("direction has length " + std::to_string(alpha.size()) +
                            ", expected " + std::to_string(p.rank()));
  ExpPolynomial e;
  for (const auto& [m, c] : p.terms()) {
    Rational freq(0);
    for (std::size_t j = 0; j < m.size(); ++j) freq += Rational(m[j]) * alpha[j];
    e.add(freq, c);
  }
  return e;
}

// Whether exp(t alpha) lies in W for all t.
inline bool etc_membership(const LaurentSystem& w, const std::vector<Rational>& alpha) {
  if (alpha.size() != w.rank)
    throw PreconditionError("direction has length " + std::to_string(alpha.size()) +
                            ", expected " + std::to_string(w.rank));
  return std::all_of(w.equations.begin(), w.equations.end(), [&](const auto& p) {
    return along_direction(p, alpha).identically_zero();
  });
}

// Lowest-degree homogeneous part of P(1 + x) for a hypersurface through the
// identity. Negative exponents are cleared first by a monomial, which is a
// unit near the identity and leaves the lowest part unchanged.
inline LaurentPolynomial tangent_cone_hypersurface(const LaurentPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("zero polynomial has no tangent cone");
  if (!p.at_identity().is_zero())
    throw PreconditionError("the hypersurface does not pass through the identity");
  const std::size_t r = p.rank();
  Exponent shift(r, 0);
  for (const auto& [e, c] : p.terms())
    for (std::size_t j = 0; j < r; ++j) shift[j] = std::min(shift[j], e[j]);

  LaurentPolynomial expanded(r);
  for (const auto& [e, c] : p.terms()) {
    // prod_j (1 + x_j)^{e_j - shift_j}
    LaurentPolynomial term(r);
    term.add_term(Exponent(r, 0), c);
    for (std::size_t j = 0; j < r; ++j) {
      long k = e[j] - shift[j];
      LaurentPolynomial binom(r);
      Rational b(1);
      for (long i = 0; i <= k; ++i) {
        Exponent x(r, 0);
        x[j] = i;
        binom.add_term(x, b);
        b = b * Rational(k - i) / Rational(i + 1);
      }
      term = term * binom;
    }
    for (const auto& [f, d] : term.terms()) expanded.add_term(f, d);
  }
  std::size_t low = expanded.min_degree();
  LaurentPolynomial out(r);
  for (const auto& [f, d] : expanded.terms()) {
    long s = 0;
    for (long x : f) s += x;
    if (static_cast<std::size_t>(s) == low) out.add_term(f, d);
  }
  return out;
}

}  // namespace jumploci
