#pragma once

// Exterior algebras on at most 64 degree-one generators and their
// truncated graded quotients, optionally carrying a Hodge bigrading on the
// generators. A monomial e_S is a bit mask S; its degree is popcount(S).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jumploci/error.hpp"
#include "jumploci/matrix.hpp"
#include "jumploci/scalars.hpp"

namespace jumploci {

using Mask = std::uint64_t;
inline constexpr std::size_t max_generators = 64;

// Sign of e_s ^ e_t relative to e_{s|t}: (-1)^(#pairs i in s, j in t, i > j).
inline int wedge_sign(Mask s, Mask t) {
  int inversions = 0;
  for (Mask rest = t; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    Mask above = j == 63 ? 0 : ~((Mask(2) << j) - 1);
    inversions += std::popcount(s & above);
  }
  return (inversions & 1) ? -1 : 1;
}

inline std::vector<std::size_t> mask_indices(Mask m) {
  std::vector<std::size_t> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// Lexicographic order on sorted index lists of equal-size subsets.
inline bool lex_less(Mask a, Mask b) {
  Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & -diff)) != 0;
}

// All k-subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<Mask> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= Mask(1) << i;
    out.push_back(m);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

template <Field F>
class Multivector {
 public:
  explicit Multivector(std::size_t n = 0, F zero = F{})
      : n_(n), zero_(zero_like(zero)) {
    if (n > max_generators)
      throw PreconditionError("at most 64 generators are supported");
  }

  static Multivector monomial(std::size_t n, Mask m, F coeff) {
    Multivector v(n, coeff);
    v.add_term(m, coeff);
    return v;
  }
  static Multivector generator(std::size_t n, std::size_t i, F zero = F{}) {
    return monomial(n, Mask(1) << i, one_like(zero));
  }
  // Degree-one element sum_i coeffs[i] e_i.
  static Multivector linear(std::span<const F> coeffs, F zero = F{}) {
    Multivector v(coeffs.size(), zero);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      v.add_term(Mask(1) << i, coeffs[i]);
    return v;
  }

  std::size_t generator_count() const { return n_; }
  const F& zero() const { return zero_; }
  const std::map<Mask, F>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  F coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? zero_ : it->second;
  }

  void add_term(Mask m, const F& c) {
    if (n_ < 64 && (m >> n_) != 0)
      throw PreconditionError("monomial uses a generator index >= " +
                              std::to_string(n_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Degree if homogeneous and nonzero.
  std::optional<std::size_t> degree() const {
    if (terms_.empty()) return std::nullopt;
    std::size_t d = std::popcount(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (std::size_t(std::popcount(m)) != d) return std::nullopt;
    return d;
  }

  Multivector& operator+=(const Multivector& o) {
    same_count(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    same_count(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Multivector& operator*=(const F& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) {
    return a += b;
  }
  friend Multivector operator-(Multivector a, const Multivector& b) {
    return a -= b;
  }
  friend Multivector operator*(const F& s, Multivector a) { return a *= s; }
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  friend Multivector wedge(const Multivector& u, const Multivector& v) {
    u.same_count(v);
    Multivector out(u.n_, u.zero_);
    for (const auto& [s, a] : u.terms_)
      for (const auto& [t, b] : v.terms_) {
        if (s & t) continue;
        F c = a * b;
        out.add_term(s | t, wedge_sign(s, t) < 0 ? -c : c);
      }
    return out;
  }

 private:
  void same_count(const Multivector& o) const {
    if (o.n_ != n_)
      throw PreconditionError("generator count mismatch: " +
                              std::to_string(n_) + " vs " +
                              std::to_string(o.n_));
  }

  std::size_t n_;
  F zero_;
  std::map<Mask, F> terms_;
};

struct HodgeType {
  int p = 0;
  int q = 0;
  friend bool operator==(const HodgeType&, const HodgeType&) = default;
};

template <Field F>
class GradedAlgebra;

template <Field F>
GradedAlgebra<F> build_quotient_algebra(
    std::size_t n, const std::vector<Multivector<F>>& ideal_gens,
    std::size_t top, F zero = F{},
    std::optional<std::vector<HodgeType>> hodge = std::nullopt);

// Quotient of the exterior algebra by a homogeneous ideal, truncated above
// `top`. Degree d has basis the lexicographically smallest monomials that
// complete an echelon basis of the ideal's degree-d part; every other
// monomial is stored with its normal form in that basis.
template <Field F>
class GradedAlgebra {
 public:
  std::size_t generator_count() const { return n_; }
  std::size_t top_degree() const { return top_; }
  const F& zero() const { return zero_; }
  F one() const { return one_like(zero_); }

  std::size_t dim(std::size_t d) const {
    return d <= top_ ? degrees_[d].basis.size() : 0;
  }
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d <= top_; ++d) out.push_back(dim(d));
    return out;
  }
  const std::vector<Mask>& basis(std::size_t d) const {
    return degrees_.at(d).basis;
  }
  const std::vector<Mask>& monomials(std::size_t d) const {
    return degrees_.at(d).monomials;
  }
  const std::vector<Multivector<F>>& ideal_generators() const {
    return ideal_;
  }
  bool has_hodge_types() const { return hodge_.has_value(); }
  const std::vector<HodgeType>& hodge_types() const {
    if (!hodge_) throw PreconditionError("algebra carries no Hodge types");
    return *hodge_;
  }
  HodgeType monomial_type(Mask m) const {
    const auto& h = hodge_types();
    HodgeType t;
    for (auto i : mask_indices(m)) {
      t.p += h[i].p;
      t.q += h[i].q;
    }
    return t;
  }

  // Coordinates of the degree-d class of v (v must be homogeneous of
  // degree d or zero). Degrees above `top` are the zero space.
  Vector<F> project(const Multivector<F>& v, std::size_t d) const {
    if (v.generator_count() != n_)
      throw PreconditionError("generator count mismatch");
    Vector<F> out(dim(d), zero_);
    for (const auto& [m, c] : v.terms()) {
      if (std::size_t(std::popcount(m)) != d)
        throw PreconditionError("element is not homogeneous of degree " +
                                std::to_string(d));
      if (d > top_) continue;
      accumulate_monomial(out, d, m, c);
    }
    return out;
  }

  Multivector<F> lift(std::size_t d, std::span<const F> coords) const {
    if (coords.size() != dim(d)) throw PreconditionError("dimension mismatch");
    Multivector<F> v(n_, zero_);
    for (std::size_t i = 0; i < coords.size(); ++i)
      v.add_term(degrees_[d].basis[i], coords[i]);
    return v;
  }

  Vector<F> multiply(std::size_t d1, std::span<const F> a, std::size_t d2,
                     std::span<const F> b) const {
    return project(wedge(lift(d1, a), lift(d2, b)), d1 + d2);
  }

  // Matrix of x -> alpha ^ x from A^d to A^(d+1); alpha is given in the
  // degree-one basis (which is all generators, since the ideal starts in
  // degree two).
  Matrix<F> left_multiplication(std::span<const F> alpha,
                                std::size_t d) const {
    if (alpha.size() != n_)
      throw PreconditionError("degree-one element must have " +
                              std::to_string(n_) + " coordinates");
    Matrix<F> m(dim(d + 1), dim(d), zero_);
    if (d + 1 > top_) return m;
    const auto& src = degrees_[d].basis;
    for (std::size_t col = 0; col < src.size(); ++col) {
      Vector<F> image(dim(d + 1), zero_);
      for (std::size_t i = 0; i < n_; ++i) {
        Mask bit = Mask(1) << i;
        if (alpha[i].is_zero() || (src[col] & bit)) continue;
        F c = wedge_sign(bit, src[col]) < 0 ? -alpha[i] : alpha[i];
        accumulate_monomial(image, d + 1, src[col] | bit, c);
      }
      for (std::size_t r = 0; r < image.size(); ++r) m(r, col) = image[r];
    }
    return m;
  }

  // dim(d) x C(n, d) matrix sending monomial coordinates to quotient ones.
  Matrix<F> projection_matrix(std::size_t d) const {
    const auto& mons = degrees_.at(d).monomials;
    Matrix<F> m(dim(d), mons.size(), zero_);
    for (std::size_t j = 0; j < mons.size(); ++j)
      for (const auto& [r, c] : degrees_[d].image[j]) m(r, j) = c;
    return m;
  }

  // Coordinates of sum_i coeffs[i] e_i in A^1.
  Vector<F> degree_one(std::span<const F> coeffs) const {
    return project(Multivector<F>::linear(coeffs, zero_), 1);
  }

 private:
  friend GradedAlgebra build_quotient_algebra<F>(
      std::size_t, const std::vector<Multivector<F>>&, std::size_t, F,
      std::optional<std::vector<HodgeType>>);

  struct Degree {
    std::vector<Mask> monomials;  // lexicographic
    std::unordered_map<Mask, std::size_t> monomial_index;
    std::vector<Mask> basis;  // lexicographic
    // Normal form of each monomial as sparse quotient coordinates.
    std::vector<std::vector<std::pair<std::size_t, F>>> image;
  };

  void accumulate_monomial(Vector<F>& out, std::size_t d, Mask m,
                           const F& c) const {
    const Degree& deg = degrees_[d];
    auto it = deg.monomial_index.find(m);
    if (it == deg.monomial_index.end())
      throw PreconditionError("monomial outside the generator range");
    for (const auto& [r, v] : deg.image[it->second]) out[r] += c * v;
  }

  std::size_t n_ = 0;
  std::size_t top_ = 0;
  F zero_{};
  std::optional<std::vector<HodgeType>> hodge_;
  std::vector<Multivector<F>> ideal_;
  std::vector<Degree> degrees_;
};

template <Field F>
GradedAlgebra<F> build_quotient_algebra(
    std::size_t n, const std::vector<Multivector<F>>& ideal_gens,
    std::size_t top, F zero, std::optional<std::vector<HodgeType>> hodge) {
  if (n > max_generators)
    throw PreconditionError("at most 64 generators are supported");
  if (hodge && hodge->size() != n)
    throw PreconditionError("need one Hodge type per generator");
  GradedAlgebra<F> alg;
  alg.n_ = n;
  alg.top_ = std::min(top, n);
  alg.zero_ = zero_like(zero);
  alg.hodge_ = std::move(hodge);

  std::vector<std::pair<std::size_t, Multivector<F>>> gens;
  for (std::size_t g = 0; g < ideal_gens.size(); ++g) {
    const auto& gen = ideal_gens[g];
    if (gen.generator_count() != n)
      throw PreconditionError("ideal generator " + std::to_string(g) +
                              " has the wrong generator count");
    if (gen.is_zero()) continue;
    auto deg = gen.degree();
    if (!deg)
      throw PreconditionError("ideal generator " + std::to_string(g) +
                              " is not homogeneous");
    if (*deg < 2)
      throw PreconditionError(
          "ideal generator " + std::to_string(g) + " has degree " +
          std::to_string(*deg) +
          "; eliminate degree-one relations by removing generators instead");
    if (alg.hodge_) {
      HodgeType t0 = alg.monomial_type(gen.terms().begin()->first);
      for (const auto& [m, c] : gen.terms())
        if (!(alg.monomial_type(m) == t0))
          throw PreconditionError("ideal generator " + std::to_string(g) +
                                  " is not of pure Hodge type");
    }
    gens.emplace_back(*deg, gen);
    alg.ideal_.push_back(gen);
  }

  const F one = one_like(alg.zero_);
  alg.degrees_.resize(alg.top_ + 1);
  for (std::size_t d = 0; d <= alg.top_; ++d) {
    auto& deg = alg.degrees_[d];
    deg.monomials = subsets_of_size(n, d);
    const std::size_t N = deg.monomials.size();
    for (std::size_t i = 0; i < N; ++i) deg.monomial_index[deg.monomials[i]] = i;

    // Ideal part in degree d; column c holds monomial N-1-c so that pivots
    // land on the lexicographically largest monomials.
    std::vector<Vector<F>> rows;
    for (const auto& [e, g] : gens) {
      if (e > d) continue;
      for (Mask m : subsets_of_size(n, d - e)) {
        Multivector<F> prod = wedge(g, Multivector<F>::monomial(n, m, one));
        if (prod.is_zero()) continue;
        Vector<F> row(N, alg.zero_);
        for (const auto& [mask, c] : prod.terms())
          row[N - 1 - deg.monomial_index.at(mask)] = c;
        rows.push_back(std::move(row));
      }
    }
    std::vector<long> pivot_row(N, -1);  // by monomial index
    Echelon<F> ech;
    if (!rows.empty()) {
      ech = rref(Matrix<F>::from_rows(rows, N, alg.zero_));
      for (std::size_t r = 0; r < ech.pivots.size(); ++r)
        pivot_row[N - 1 - ech.pivots[r]] = static_cast<long>(r);
    }
    std::vector<long> basis_pos(N, -1);
    for (std::size_t i = 0; i < N; ++i)
      if (pivot_row[i] < 0) {
        basis_pos[i] = static_cast<long>(deg.basis.size());
        deg.basis.push_back(deg.monomials[i]);
      }
    deg.image.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
      if (basis_pos[i] >= 0) {
        deg.image[i].emplace_back(basis_pos[i], one);
        continue;
      }
      auto row = ech.reduced.row(pivot_row[i]);
      for (std::size_t j = 0; j < N; ++j) {
        if (basis_pos[j] < 0 || row[N - 1 - j].is_zero()) continue;
        deg.image[i].emplace_back(basis_pos[j], -row[N - 1 - j]);
      }
    }
  }
  return alg;
}

// Basis (in quotient coordinates, reduced echelon) of F^p A^d: the span of
// classes of degree-d monomials whose generator p-indices sum to >= p.
template <Field F>
std::vector<Vector<F>> hodge_filtration_subspace(const GradedAlgebra<F>& a,
                                                 int p, std::size_t d) {
  if (!a.has_hodge_types())
    throw PreconditionError("Hodge filtration requires Hodge types");
  if (d > a.top_degree()) return {};
  std::vector<Vector<F>> spanning;
  for (Mask m : a.monomials(d)) {
    if (a.monomial_type(m).p < p) continue;
    Vector<F> v = a.project(Multivector<F>::monomial(a.generator_count(), m,
                                                     a.one()),
                            d);
    if (std::any_of(v.begin(), v.end(), [](const F& x) { return !x.is_zero(); }))
      spanning.push_back(std::move(v));
  }
  return echelon_basis(spanning, a.dim(d), a.zero());
}

}  // namespace jumploci
