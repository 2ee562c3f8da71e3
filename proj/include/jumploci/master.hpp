#pragma once

// Zeros of the logarithmic 1-form sum_j w_j d log f_j for points on a line
// and lines in the plane, with the boundary behaviour on P^1 and residues
// along the boundary of a compactification of a line arrangement.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/arrangement.hpp"
#include "jumploci/error.hpp"
#include "jumploci/polynomial.hpp"
#include "jumploci/scalars.hpp"

namespace jumploci {

enum class ZeroSite { interior, boundary_point, infinity };

inline const char* site_name(ZeroSite s) {
  switch (s) {
    case ZeroSite::interior: return "interior";
    case ZeroSite::boundary_point: return "boundary";
    case ZeroSite::infinity: return "infinity";
  }
  return "?";
}

struct CriticalZero {
  ZeroSite site = ZeroSite::interior;
  std::optional<std::size_t> boundary_index;  // which puncture, for boundary points
  Poly factor;             // monic square-free factor whose roots this entry covers
  std::size_t count = 1;   // number of roots described (more than one for non-real groups)
  std::size_t multiplicity = 1;
  std::optional<RealRoot> real;  // location of a real root
  // Bivariate reports: the point when it is rational.
  std::optional<std::pair<Rational, Rational>> point;
};

struct DivisorReport {
  std::vector<CriticalZero> zeros;
  std::size_t interior_degree = 0;
  std::size_t boundary_degree = 0;
  std::size_t total_degree = 0;
  long euler = 0;              // Euler characteristic of the complement
  std::size_t expected = 0;    // |euler|
  bool matches_euler = false;
  Poly numerator;              // univariate: N; bivariate: cleaned eliminant
  // Bivariate: the eliminant and real root locations are in u = x + shear * y.
  std::optional<Rational> shear;
};

namespace detail {

inline void check_points(const std::vector<Rational>& points,
                         const std::vector<Rational>& weights) {
  if (points.empty()) throw PreconditionError("need at least one point");
  if (points.size() != weights.size())
    throw PreconditionError("need one weight per point (" +
                            std::to_string(points.size()) + " points, " +
                            std::to_string(weights.size()) + " weights)");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw PreconditionError("points " + std::to_string(i) + " and " +
                                std::to_string(j) + " coincide");
  if (std::all_of(weights.begin(), weights.end(),
                  [](const Rational& w) { return w.is_zero(); }))
    throw PreconditionError("all weights are zero");
}

inline std::size_t root_multiplicity(Poly p, const Rational& r) {
  std::size_t m = 0;
  Poly lin = Poly::linear_root(r);
  while (!p.is_zero() && p(r).is_zero()) {
    p = p / lin;
    ++m;
  }
  return m;
}

inline void append_factor_zeros(std::vector<CriticalZero>& out, const Poly& f,
                                std::size_t mult) {
  auto roots = real_roots(f);
  for (const auto& r : roots) {
    CriticalZero z;
    z.factor = f;
    z.multiplicity = mult;
    z.real = r;
    out.push_back(std::move(z));
  }
  std::size_t nonreal = static_cast<std::size_t>(f.degree()) - roots.size();
  if (nonreal > 0) {
    CriticalZero z;
    z.factor = f;
    z.count = nonreal;
    z.multiplicity = mult;
    out.push_back(std::move(z));
  }
}

}  // namespace detail

// N(x) = sum_j w_j prod_{k != j} (x - c_k): the form equals N(x) dx / prod(x - c_k).
inline Poly log_form_numerator(const std::vector<Rational>& points,
                               const std::vector<Rational>& weights) {
  Poly n;
  for (std::size_t j = 0; j < points.size(); ++j) {
    Poly term = Poly::constant(weights[j]);
    for (std::size_t k = 0; k < points.size(); ++k)
      if (k != j) term = term * Poly::linear_root(points[k]);
    n += term;
  }
  return n;
}

// Zeros of the form in C minus the points.
inline DivisorReport critical_points_univariate(const std::vector<Rational>& points,
                                                const std::vector<Rational>& weights) {
  detail::check_points(points, weights);
  DivisorReport r;
  r.numerator = log_form_numerator(points, weights);
  Poly interior = r.numerator;
  for (const auto& c : points)
    while (interior(c).is_zero()) interior = interior / Poly::linear_root(c);
  for (const auto& [f, m] : square_free_factorization(interior))
    detail::append_factor_zeros(r.zeros, f, m);
  r.interior_degree = static_cast<std::size_t>(std::max(interior.degree(), 0));
  r.total_degree = r.interior_degree;
  r.euler = 1 - static_cast<long>(points.size());
  r.expected = points.size() - 1;
  r.matches_euler = r.total_degree == r.expected;
  return r;
}

// Zeros of the form as a section of the log cotangent sheaf of P^1 with
// poles along the points and infinity. The degree is always |D| - 2.
inline DivisorReport log_zero_divisor_p1(const std::vector<Rational>& points,
                                         const std::vector<Rational>& weights) {
  DivisorReport r = critical_points_univariate(points, weights);
  const std::size_t d = points.size();
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t m = detail::root_multiplicity(r.numerator, points[j]);
    if (m == 0) continue;
    CriticalZero z;
    z.site = ZeroSite::boundary_point;
    z.boundary_index = j;
    z.factor = Poly::linear_root(points[j]);
    z.multiplicity = m;
    z.real = RealRoot{points[j], points[j], points[j]};
    r.zeros.push_back(z);
    r.boundary_degree += m;
  }
  // Near infinity, w = 1/z: the coefficient against dw/w has order
  // (d - 1) - deg N.
  std::size_t at_inf = d - 1 - static_cast<std::size_t>(r.numerator.degree());
  if (at_inf > 0) {
    CriticalZero z;
    z.site = ZeroSite::infinity;
    z.factor = Poly::monomial(1, Rational(1));
    z.multiplicity = at_inf;
    r.zeros.push_back(z);
    r.boundary_degree += at_inf;
  }
  r.total_degree = r.interior_degree + r.boundary_degree;
  r.matches_euler = r.total_degree == r.expected;
  return r;
}

struct LocalKoszul {
  std::size_t zero_index = 0;  // into DivisorReport::zeros
  std::size_t h0 = 0;
  std::size_t h1 = 0;
};

// At each zero the log de Rham complex localizes to O --g--> O with g the
// local equation of the form. H^0 vanishes because g is a nonzero element of
// a domain; H^1 = O/(g) has length deg gcd(g, f^K) / deg f for the
// square-free factor f carrying the zero.
inline std::vector<LocalKoszul> local_koszul(const std::vector<Rational>& points,
                                             const DivisorReport& report) {
  const std::size_t d = points.size();
  std::vector<LocalKoszul> out;
  for (std::size_t i = 0; i < report.zeros.size(); ++i) {
    const auto& z = report.zeros[i];
    Poly g = z.site == ZeroSite::infinity ? report.numerator.reversed(d - 1)
                                          : report.numerator;
    LocalKoszul k;
    k.zero_index = i;
    if (g.is_zero()) throw PreconditionError("form vanishes identically");
    k.h0 = 0;
    std::size_t big = static_cast<std::size_t>(g.degree()) + 1;
    Poly common = gcd(g, power(z.factor, big));
    k.h1 = static_cast<std::size_t>(common.degree() / z.factor.degree());
    out.push_back(k);
  }
  return out;
}

namespace detail {

// The two coefficients of sum_j w_j d log f_j after clearing the common
// denominator prod f_j.
inline std::pair<BiPoly, BiPoly> planar_form(const Arrangement& arr,
                                             const std::vector<Rational>& w) {
  BiPoly p, q;
  const std::size_t n = arr.size();
  for (std::size_t j = 0; j < n; ++j) {
    BiPoly rest = BiPoly::constant(w[j]);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) {
        const auto& f = arr.form(k);
        rest = rest * BiPoly::linear(f[0], f[1], f[2]);
      }
    p += arr.form(j)[0] * rest;
    q += arr.form(j)[1] * rest;
  }
  return {p, q};
}

struct PlanarCount {
  std::size_t count = 0;
  Poly eliminant;
  Rational shear;
  bool repeated = false;
  std::vector<CriticalZero> zeros;
};

inline std::vector<std::pair<Rational, Rational>> line_crossings(
    const Arrangement& arr) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (std::size_t i = 0; i < arr.size(); ++i)
    for (std::size_t j = i + 1; j < arr.size(); ++j) {
      const auto& f = arr.form(i);
      const auto& g = arr.form(j);
      Rational det = f[0] * g[1] - f[1] * g[0];
      if (det.is_zero()) continue;
      Rational x = (-f[2] * g[1] + f[1] * g[2]) / det;
      Rational y = (-f[0] * g[2] + f[2] * g[0]) / det;
      if (std::find(pts.begin(), pts.end(), std::pair(x, y)) == pts.end())
        pts.emplace_back(x, y);
    }
  return pts;
}

// Leading coefficient in y after the shear x = u - s y, for a polynomial of
// total degree `deg`: its top homogeneous part evaluated at (-s, 1).
inline Rational shear_lead(const BiPoly& p, const Rational& s) {
  std::size_t deg = p.total_degree();
  Rational acc(0);
  for (const auto& [e, c] : p.terms())
    if (e.first + e.second == deg) {
      Rational t = c;
      for (std::size_t i = 0; i < e.first; ++i) t *= -s;
      acc += t;
    }
  return acc;
}

inline std::optional<PlanarCount> count_with_shear(
    const BiPoly& p, const BiPoly& q,
    const std::vector<std::pair<Rational, Rational>>& crossings,
    const Rational& s) {
  if (shear_lead(p, s).is_zero() || shear_lead(q, s).is_zero()) return std::nullopt;
  std::vector<Rational> us;
  for (const auto& [x, y] : crossings) {
    Rational u = x + s * y;
    if (std::find(us.begin(), us.end(), u) != us.end()) return std::nullopt;
    us.push_back(u);
  }
  BiPoly ps = p.sheared(s), qs = q.sheared(s);
  const std::size_t m = ps.degree_in_second(), n = qs.degree_in_second();
  const std::size_t bound = p.total_degree() * q.total_degree();
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= bound; ++k) {
    Rational u(static_cast<long>(k));
    xs.push_back(u);
    ys.push_back(sylvester_resultant(ps.at_first(u), m, qs.at_first(u), n));
  }
  Poly res = interpolate(xs, ys);
  if (res.is_zero())
    throw DegeneracyError(
        "resultant vanishes identically: the critical set is not isolated "
        "for these weights");
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const Rational& u = us[i];
    if (!res(u).is_zero()) continue;
    // Only the crossing itself may lie over u.
    Poly g = gcd(ps.at_first(u), qs.at_first(u));
    Poly lin = Poly::linear_root(crossings[i].second);
    if (g.degree() < 1 || g != power(lin, static_cast<std::size_t>(g.degree())))
      return std::nullopt;
    while (res(u).is_zero()) res = res / Poly::linear_root(u);
  }
  PlanarCount out;
  out.shear = s;
  out.eliminant = res.monic();
  out.count = static_cast<std::size_t>(std::max(res.degree(), 0));
  // A repeated factor is either a multiple zero or two zeros sharing a
  // projection; the caller tells them apart by trying other shears.
  out.repeated = res.degree() > 0 && gcd(res, res.derivative()).degree() > 0;
  if (!out.repeated && res.degree() > 0) {
    detail::append_factor_zeros(out.zeros, res.monic(), 1);
    for (auto& z : out.zeros) {
      if (!z.real || !z.real->exact) continue;
      const Rational& u = *z.real->exact;
      Poly g = gcd(ps.at_first(u), qs.at_first(u));
      if (g.degree() == 1) {
        Rational y = -g.coeff(0);
        z.point = std::pair(u - s * y, y);
      }
    }
  }
  return out;
}

inline PlanarCount planar_count(const Arrangement& arr, const std::vector<Rational>& w) {
  auto [p, q] = planar_form(arr, w);
  if (p.is_zero() && q.is_zero())
    throw DegeneracyError("the form vanishes identically");
  auto crossings = line_crossings(arr);
  std::size_t repeated = 0;
  for (long k = 0; k < 64; ++k) {
    Rational s(k % 2 == 0 ? k / 2 : -(k + 1) / 2);
    if (k >= 16) s = Rational(k, 7);
    auto r = count_with_shear(p, q, crossings, s);
    if (!r) continue;
    if (!r->repeated) return *r;
    if (++repeated == 4)
      throw DegeneracyError(
          "critical points are not simple for these weights (eliminant has a "
          "repeated factor under every projection tried)");
  }
  throw DegeneracyError("no admissible projection direction found");
}

}  // namespace detail

// Isolated zeros of sum_j w_j d log f_j in the complement of an affine line
// arrangement, counted by eliminating one variable with a resultant. The
// count is cross-checked against a perturbation of the weights; any sign of
// non-genericity raises DegeneracyError instead of returning a count.
inline DivisorReport critical_points_bivariate(const Arrangement& arr,
                                               const std::vector<Rational>& weights,
                                               std::uint64_t seed = 0) {
  if (arr.central() || arr.ambient() != 2)
    throw PreconditionError("need an affine arrangement of lines in the plane");
  if (weights.size() != arr.size())
    throw PreconditionError("need one weight per line");
  if (!arr.essential()) throw PreconditionError("arrangement is not essential");
  auto pc = detail::planar_count(arr, weights);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> step(-5, 5);
  std::vector<Rational> nudged = weights;
  for (auto& w : nudged) w += Rational(step(rng), 101);
  auto check = detail::planar_count(arr, nudged);
  if (check.count != pc.count)
    throw DegeneracyError("critical point count changes under a perturbation "
                          "of the weights (" + std::to_string(pc.count) +
                          " vs " + std::to_string(check.count) + ")");

  DivisorReport r;
  r.numerator = pc.eliminant;
  r.shear = pc.shear;
  r.zeros = std::move(pc.zeros);
  r.interior_degree = pc.count;
  r.total_degree = pc.count;
  r.euler = poincare_and_euler(os_algebra(arr)).euler;
  r.expected = static_cast<std::size_t>(r.euler < 0 ? -r.euler : r.euler);
  r.matches_euler = r.total_degree == r.expected;
  return r;
}

struct ResidueEntry {
  bool exceptional = false;         // blown-up multiple point rather than a line
  std::vector<std::size_t> lines;   // the line, or the lines through the point
  Rational residue;
  bool zero() const { return residue.is_zero(); }
};

// Residues of sum_j w_j d log f_j along the boundary of the compactification
// of a projective line arrangement (a central arrangement in C^3) obtained by
// blowing up its points of multiplicity >= 3.
inline std::vector<ResidueEntry> residues_line_arrangement(
    const Arrangement& arr, const std::vector<Rational>& weights) {
  if (!arr.central() || arr.ambient() != 3)
    throw PreconditionError("need a central arrangement in C^3");
  if (weights.size() != arr.size())
    throw PreconditionError("need one weight per line");
  Rational total(0);
  for (const auto& w : weights) total += w;
  if (!total.is_zero())
    throw PreconditionError("weights must sum to zero on a projective arrangement");
  std::vector<ResidueEntry> out;
  for (std::size_t j = 0; j < arr.size(); ++j)
    out.push_back({false, {j}, weights[j]});
  for (const auto& flat : rank_two_flats(arr, 3)) {
    Rational s(0);
    for (auto j : flat) s += weights[j];
    out.push_back({true, flat, s});
  }
  return out;
}

}  // namespace jumploci
