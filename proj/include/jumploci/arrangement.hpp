#pragma once

// Hyperplane arrangements over Q, their matroids, and Orlik-Solomon algebras.
//
// A central arrangement in C^n stores each form as n coefficients. An affine
// arrangement in C^n stores n coefficients followed by the constant term,
// so x + y - 1 in C^2 is {1, 1, -1}. Forms are normalized so that the first
// nonzero coefficient is 1.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/error.hpp"
#include "jumploci/exterior.hpp"
#include "jumploci/matrix.hpp"
#include "jumploci/scalars.hpp"

namespace jumploci {

using Form = std::vector<Rational>;

inline Form normalize_form(Form f) {
  auto it = std::find_if(f.begin(), f.end(),
                         [](const Rational& x) { return !x.is_zero(); });
  if (it == f.end()) return f;
  Rational lead = *it;
  for (auto& x : f) x /= lead;
  return f;
}

class Arrangement {
 public:
  Arrangement() = default;
  Arrangement(std::size_t ambient, bool central, std::vector<Form> forms)
      : ambient_(ambient), central_(central) {
    if (forms.size() > max_generators)
      throw PreconditionError("at most 64 hyperplanes are supported");
    const std::size_t width = central ? ambient : ambient + 1;
    for (std::size_t j = 0; j < forms.size(); ++j) {
      if (forms[j].size() != width)
        throw PreconditionError(
            "form " + std::to_string(j) + " has " +
            std::to_string(forms[j].size()) + " entries, expected " +
            std::to_string(width) +
            (central ? "" : " (coefficients then constant term)"));
      bool linear_zero = std::all_of(
          forms[j].begin(), forms[j].begin() + ambient,
          [](const Rational& x) { return x.is_zero(); });
      if (linear_zero)
        throw PreconditionError("form " + std::to_string(j) +
                                " has no linear part");
      Form f = normalize_form(std::move(forms[j]));
      for (std::size_t i = 0; i < forms_.size(); ++i)
        if (forms_[i] == f)
          throw PreconditionError("hyperplanes " + std::to_string(i) +
                                  " and " + std::to_string(j) + " coincide");
      forms_.push_back(std::move(f));
    }
  }

  // Like the constructor, but silently merges repeated hyperplanes and
  // drops forms whose linear part vanishes.
  static Arrangement deduplicated(std::size_t ambient, bool central,
                                  const std::vector<Form>& forms) {
    std::vector<Form> kept;
    for (const auto& f : forms) {
      bool linear_zero =
          std::all_of(f.begin(), f.begin() + ambient,
                      [](const Rational& x) { return x.is_zero(); });
      if (linear_zero) continue;
      Form g = normalize_form(f);
      if (std::find(kept.begin(), kept.end(), g) == kept.end())
        kept.push_back(std::move(g));
    }
    return Arrangement(ambient, central, std::move(kept));
  }

  std::size_t ambient() const { return ambient_; }
  bool central() const { return central_; }
  std::size_t size() const { return forms_.size(); }
  const std::vector<Form>& forms() const { return forms_; }
  const Form& form(std::size_t j) const { return forms_.at(j); }

  std::vector<Rational> linear_part(std::size_t j) const {
    return {forms_.at(j).begin(), forms_.at(j).begin() + ambient_};
  }
  Rational constant(std::size_t j) const {
    return central_ ? Rational(0) : forms_.at(j).back();
  }

  // Rank of the linear parts of the hyperplanes in `subset`.
  std::size_t linear_rank(Mask subset) const {
    return subset_rank(subset, false);
  }
  // Rank of the homogenized forms (coefficients and constant term).
  std::size_t homogenized_rank(Mask subset) const {
    return subset_rank(subset, true);
  }
  // Whether the hyperplanes in `subset` have a common point.
  bool consistent(Mask subset) const {
    return central_ || linear_rank(subset) == homogenized_rank(subset);
  }

  Mask all() const {
    return forms_.size() == 64 ? ~Mask(0) : (Mask(1) << forms_.size()) - 1;
  }
  std::size_t rank() const { return linear_rank(all()); }
  bool essential() const { return rank() == ambient_; }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::size_t subset_rank(Mask subset, bool homogenized) const {
    std::vector<Vector<Rational>> rows;
    for (auto j : mask_indices(subset)) {
      Form f = forms_.at(j);
      if (!homogenized && !central_) f.pop_back();
      rows.push_back(std::move(f));
    }
    std::size_t width =
        (homogenized && !central_) ? ambient_ + 1 : ambient_;
    return span_dimension(rows, width, Rational(0));
  }

  std::size_t ambient_ = 0;
  bool central_ = true;
  std::vector<Form> forms_;
};

using Circuit = std::vector<std::size_t>;

// Minimal dependent sets of the homogenized forms, lexicographically sorted.
inline std::vector<Circuit> matroid_circuits(const Arrangement& arr) {
  if (arr.size() == 0)
    throw PreconditionError("matroid of the empty arrangement");
  const std::size_t n = arr.size();
  const std::size_t rk = arr.homogenized_rank(arr.all());
  std::vector<Circuit> out;
  for (std::size_t k = 2; k <= std::min(n, rk + 1); ++k)
    for (Mask s : subsets_of_size(n, k)) {
      if (arr.homogenized_rank(s) != k - 1) continue;
      bool minimal = true;
      for (Mask rest = s; rest && minimal; rest &= rest - 1) {
        Mask drop = rest & -rest;
        minimal = arr.homogenized_rank(s & ~drop) == k - 1;
      }
      if (minimal) out.push_back(mask_indices(s));
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Minimal sets of hyperplanes with empty common intersection (affine only).
inline std::vector<Circuit> minimal_inconsistent_sets(const Arrangement& arr) {
  std::vector<Circuit> out;
  if (arr.central()) return out;
  const std::size_t n = arr.size();
  for (std::size_t k = 2; k <= std::min(n, arr.rank() + 1); ++k)
    for (Mask s : subsets_of_size(n, k)) {
      if (arr.consistent(s)) continue;
      bool minimal = true;
      for (Mask rest = s; rest && minimal; rest &= rest - 1)
        minimal = arr.consistent(s & ~(rest & -rest));
      if (minimal) out.push_back(mask_indices(s));
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline Mask to_mask(const Circuit& c) {
  Mask m = 0;
  for (auto i : c) m |= Mask(1) << i;
  return m;
}

// Boundary of e_S: sum_k (-1)^k e_{S minus its k-th element}.
template <Field F>
Multivector<F> os_boundary(std::size_t n, const Circuit& s, F zero = F{}) {
  Multivector<F> out(n, zero);
  Mask full = to_mask(s);
  for (std::size_t k = 0; k < s.size(); ++k) {
    F c = from_integer(k % 2 == 0 ? 1 : -1, zero);
    out.add_term(full & ~(Mask(1) << s[k]), c);
  }
  return out;
}

template <Field F>
struct OSAlgebra {
  GradedAlgebra<F> algebra;
  std::vector<std::size_t> hyperplane_of_generator;  // e_j <-> H_j
  std::vector<std::size_t> poincare;                 // dim A^k, k <= top
  std::size_t matroid_rank = 0;
  bool truncated = false;  // top < matroid rank
};

// Orlik-Solomon algebra: the exterior algebra on e_1..e_d modulo the ideal
// generated by the boundaries of dependent sets with a common point, and by
// e_S for sets S with empty intersection. Every generator has Hodge type
// (1,1).
template <Field F = Rational>
OSAlgebra<F> os_algebra(const Arrangement& arr, std::optional<std::size_t> top = {},
                        F zero = F{}) {
  const std::size_t rk = arr.rank();
  const std::size_t t = top.value_or(rk);
  if (t > rk)
    throw PreconditionError("top degree " + std::to_string(t) +
                            " exceeds the matroid rank " + std::to_string(rk));
  const std::size_t n = arr.size();
  std::vector<Multivector<F>> ideal;
  if (n > 0) {
    for (const auto& c : matroid_circuits(arr))
      if (arr.consistent(to_mask(c)) && c.size() - 1 <= t)
        ideal.push_back(os_boundary<F>(n, c, zero));
    for (const auto& s : minimal_inconsistent_sets(arr))
      if (s.size() <= t)
        ideal.push_back(
            Multivector<F>::monomial(n, to_mask(s), one_like(zero)));
  }
  OSAlgebra<F> os{build_quotient_algebra<F>(n, ideal, t, zero,
                                            std::vector<HodgeType>(n, {1, 1})),
                  {}, {}, rk, t < rk};
  for (std::size_t j = 0; j < n; ++j) os.hyperplane_of_generator.push_back(j);
  os.poincare = os.algebra.dims();
  return os;
}

struct PoincareEuler {
  std::vector<std::size_t> coefficients;
  long euler = 0;
};

template <Field F>
PoincareEuler poincare_and_euler(const OSAlgebra<F>& os) {
  if (os.truncated)
    throw PreconditionError(
        "Euler characteristic unavailable: algebra truncated at degree " +
        std::to_string(os.algebra.top_degree()) + " below rank " +
        std::to_string(os.matroid_rank));
  PoincareEuler out{os.poincare, 0};
  for (std::size_t k = 0; k < os.poincare.size(); ++k)
    out.euler += (k % 2 == 0 ? 1 : -1) * static_cast<long>(os.poincare[k]);
  return out;
}

struct DeconedArrangement {
  Arrangement affine;
  std::vector<std::size_t> original_index;  // affine form i <- central form
};

namespace detail {

// Substitute x_p = (value - sum_{k != p} a_k x_k) / a_p into `target`
// (n coefficients, then a constant). Returns coefficients over the
// remaining variables followed by the new constant.
inline Form substitute(const Form& a, std::size_t p, const Rational& value,
                       const Form& target, std::size_t n) {
  Form out;
  const Rational& bp = target[p];
  Rational ratio = bp / a[p];
  for (std::size_t k = 0; k < n; ++k)
    if (k != p) out.push_back(target[k] - ratio * a[k]);
  out.push_back(target[n] + ratio * value);
  return out;
}

inline std::size_t last_nonzero(const Form& f, std::size_t n) {
  for (std::size_t k = n; k-- > 0;)
    if (!f[k].is_zero()) return k;
  throw PreconditionError("zero linear form");
}

inline Form with_constant(const Arrangement& arr, std::size_t j) {
  Form f = arr.linear_part(j);
  f.push_back(arr.constant(j));
  return f;
}

}  // namespace detail

// Sends H_j to infinity: the chart f_j = 1 of the projectivization, as an
// affine arrangement of the remaining forms in one fewer variable.
inline DeconedArrangement decone(const Arrangement& arr, std::size_t j) {
  if (!arr.central()) throw PreconditionError("decone needs a central arrangement");
  if (j >= arr.size())
    throw PreconditionError("hyperplane index " + std::to_string(j) +
                            " out of range (arrangement has " +
                            std::to_string(arr.size()) + ")");
  const std::size_t n = arr.ambient();
  Form a = detail::with_constant(arr, j);
  std::size_t p = detail::last_nonzero(a, n);
  DeconedArrangement out;
  std::vector<Form> forms;
  for (std::size_t m = 0; m < arr.size(); ++m) {
    if (m == j) continue;
    forms.push_back(
        detail::substitute(a, p, Rational(1), detail::with_constant(arr, m), n));
    out.original_index.push_back(m);
  }
  out.affine = Arrangement(n - 1, false, std::move(forms));
  return out;
}

inline Arrangement deletion(const Arrangement& arr, std::size_t j) {
  if (j >= arr.size()) throw PreconditionError("hyperplane index out of range");
  std::vector<Form> forms = arr.forms();
  forms.erase(forms.begin() + static_cast<long>(j));
  return Arrangement(arr.ambient(), arr.central(), std::move(forms));
}

// The arrangement induced on H_j, in coordinates obtained by eliminating
// the last variable that appears in f_j.
inline Arrangement restriction(const Arrangement& arr, std::size_t j) {
  if (j >= arr.size()) throw PreconditionError("hyperplane index out of range");
  const std::size_t n = arr.ambient();
  Form a = detail::with_constant(arr, j);
  std::size_t p = detail::last_nonzero(a, n);
  Rational value = -a[n];
  Form lin = a;
  lin[n] = Rational(0);
  std::vector<Form> forms;
  for (std::size_t m = 0; m < arr.size(); ++m) {
    if (m == j) continue;
    Form f = detail::substitute(lin, p, value, detail::with_constant(arr, m), n);
    if (arr.central()) f.pop_back();
    forms.push_back(std::move(f));
  }
  return Arrangement::deduplicated(n - 1, arr.central(), forms);
}

// Codimension-two flats of a central arrangement containing >= min_mult
// hyperplanes (for an arrangement in C^3: the multiple points of the
// projective line arrangement). Each flat lists its hyperplanes.
inline std::vector<Circuit> rank_two_flats(const Arrangement& arr,
                                           std::size_t min_mult = 3) {
  if (!arr.central()) throw PreconditionError("flats of a central arrangement");
  std::set<Circuit> flats;
  const std::size_t n = arr.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Mask pair = (Mask(1) << i) | (Mask(1) << j);
      Circuit flat;
      for (std::size_t k = 0; k < n; ++k)
        if (arr.linear_rank(pair | (Mask(1) << k)) == 2) flat.push_back(k);
      if (flat.size() >= min_mult) flats.insert(flat);
    }
  return {flats.begin(), flats.end()};
}

}  // namespace jumploci
