#pragma once

// Cohomology model of the configuration space of n distinct points on an
// elliptic curve with period matrix (1, i).
//
// A degree-one class is described by real coordinates (x, y): alpha =
// sum x_k a_k + y_k b_k. Internally the algebra is generated over Q(i) by
// w_k = a_k + i b_k (type (1,0)) and its conjugate a_k - i b_k (type (0,1)),
// interleaved as w_1, conj w_1, w_2, conj w_2, ... The diagonal classes are
// (a_i - a_j)(b_i - b_j), the Kunneth class of the diagonal of C x C with
// the point classes removed by the relation in the configuration space.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/aomoto.hpp"
#include "jumploci/error.hpp"
#include "jumploci/exterior.hpp"
#include "jumploci/matrix.hpp"
#include "jumploci/scalars.hpp"

namespace jumploci {

using Gauss = GaussianRational;
using GaussVector = std::vector<Gauss>;

struct RealCoords {
  GaussVector x, y;
};

struct HodgeSplit {
  RealCoords holomorphic;      // (u, i u)
  RealCoords antiholomorphic;  // (v, -i v)
  RealCoords mixed;            // always zero on this model
};

class EllipticModel {
 public:
  explicit EllipticModel(std::size_t points, std::size_t top = 2)
      : points_(points) {
    if (points < 2 || points > 32)
      throw PreconditionError("number of points must be between 2 and 32, got " +
                              std::to_string(points));
    const std::size_t n = 2 * points;
    std::vector<HodgeType> types;
    for (std::size_t k = 0; k < points; ++k) {
      types.push_back({1, 0});
      types.push_back({0, 1});
    }
    for (std::size_t i = 0; i < points; ++i)
      for (std::size_t j = i + 1; j < points; ++j) {
        diagonals_.push_back(wedge(a_class(i) - a_class(j),
                                   b_class(i) - b_class(j)));
        pairs_.emplace_back(i, j);
      }
    algebra_ = build_quotient_algebra<Gauss>(n, diagonals_, top, Gauss(0),
                                             types);
  }

  std::size_t points() const { return points_; }
  const GradedAlgebra<Gauss>& algebra() const { return algebra_; }
  const std::vector<Multivector<Gauss>>& diagonal_classes() const {
    return diagonals_;
  }
  const std::vector<std::pair<std::size_t, std::size_t>>& diagonal_pairs() const {
    return pairs_;
  }

  Multivector<Gauss> a_class(std::size_t k) const {
    // a = (w + conj w) / 2
    Multivector<Gauss> v(2 * points_, Gauss(0));
    v.add_term(Mask(1) << (2 * k), Gauss(Rational(1, 2)));
    v.add_term(Mask(1) << (2 * k + 1), Gauss(Rational(1, 2)));
    return v;
  }
  Multivector<Gauss> b_class(std::size_t k) const {
    // b = (w - conj w) / (2i) = -(i/2) w + (i/2) conj w
    Multivector<Gauss> v(2 * points_, Gauss(0));
    v.add_term(Mask(1) << (2 * k), Gauss(Rational(0), Rational(-1, 2)));
    v.add_term(Mask(1) << (2 * k + 1), Gauss(Rational(0), Rational(1, 2)));
    return v;
  }

  // Degree-one class from real coordinates, as quotient coordinates.
  GaussVector degree_one(const GaussVector& x, const GaussVector& y) const {
    check_length(x, y);
    GaussVector out(2 * points_, Gauss(0));
    const Gauss half(Rational(1, 2));
    const Gauss i = Gauss::i();
    for (std::size_t k = 0; k < points_; ++k) {
      out[2 * k] = half * (x[k] - i * y[k]);
      out[2 * k + 1] = half * (x[k] + i * y[k]);
    }
    return algebra_.project(algebra_.lift(1, out), 1);
  }
  GaussVector degree_one(const RealCoords& c) const { return degree_one(c.x, c.y); }

  RealCoords real_coords(const GaussVector& alpha) const {
    if (alpha.size() != 2 * points_)
      throw PreconditionError("class is not in degree one");
    RealCoords c{GaussVector(points_), GaussVector(points_)};
    const Gauss i = Gauss::i();
    for (std::size_t k = 0; k < points_; ++k) {
      c.x[k] = alpha[2 * k] + alpha[2 * k + 1];
      c.y[k] = i * (alpha[2 * k] - alpha[2 * k + 1]);
    }
    return c;
  }

  // The (1,0) part: classes (x, i x).
  GaussVector holomorphic(const GaussVector& x) const {
    GaussVector y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) y[k] = Gauss::i() * x[k];
    return degree_one(x, y);
  }

  // span{a_i - a_j, b_i - b_j}: pullback of H^1 of the curve under the
  // difference map of points i and j.
  std::vector<GaussVector> tangent_space(std::size_t i, std::size_t j) const {
    if (i >= points_ || j >= points_ || i == j)
      throw PreconditionError("tangent space needs two distinct point indices");
    GaussVector dx(points_, Gauss(0)), zero(points_, Gauss(0));
    dx[i] = Gauss(1);
    dx[j] = Gauss(-1);
    return {degree_one(dx, zero), degree_one(zero, dx)};
  }

 private:
  void check_length(const GaussVector& x, const GaussVector& y) const {
    if (x.size() != points_ || y.size() != points_)
      throw PreconditionError("coordinate vectors must have length " +
                              std::to_string(points_));
  }

  std::size_t points_;
  GradedAlgebra<Gauss> algebra_;
  std::vector<Multivector<Gauss>> diagonals_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

inline EllipticModel elliptic_model(std::size_t points, std::size_t top = 2) {
  return EllipticModel(points, top);
}

// Sum x = sum y = 0 and rank [x; y] <= 1.
template <Field F>
bool scroll_membership(const std::vector<F>& x, const std::vector<F>& y) {
  if (x.size() != y.size())
    throw PreconditionError("scroll coordinates have different lengths");
  if (x.empty()) return true;
  F sx = zero_like(x[0]), sy = zero_like(x[0]);
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
  }
  if (!sx.is_zero() || !sy.is_zero()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (!(x[i] * y[j] - x[j] * y[i]).is_zero()) return false;
  return true;
}

inline HodgeSplit hodge_decompose(const EllipticModel& m, const RealCoords& c) {
  const std::size_t n = m.points();
  if (c.x.size() != n || c.y.size() != n)
    throw PreconditionError("coordinate vectors must have length " +
                            std::to_string(n));
  const Gauss i = Gauss::i();
  const Gauss half(Rational(1, 2));
  HodgeSplit s;
  s.holomorphic = {GaussVector(n), GaussVector(n)};
  s.antiholomorphic = {GaussVector(n), GaussVector(n)};
  s.mixed = {GaussVector(n, Gauss(0)), GaussVector(n, Gauss(0))};
  for (std::size_t k = 0; k < n; ++k) {
    // x = u + v, y = i u - i v
    Gauss u = half * (c.x[k] - i * c.y[k]);
    Gauss v = half * (c.x[k] + i * c.y[k]);
    s.holomorphic.x[k] = u;
    s.holomorphic.y[k] = i * u;
    s.antiholomorphic.x[k] = v;
    s.antiholomorphic.y[k] = -(i * v);
  }
  return s;
}

// E2 page of the twisted spectral sequence at alpha = (x, i x), degrees <= 2.
inline E2Page elliptic_e2_page(const EllipticModel& m, const GaussVector& x) {
  return e2_page(m.algebra(), m.holomorphic(x), 2);
}

}  // namespace jumploci
