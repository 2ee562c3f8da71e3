#pragma once

// The acceptance suite: eight exact checks, each reduced to a verdict and a
// one-line summary. Shared by the acceptance test binary and the CLI.

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jumploci/aomoto.hpp"
#include "jumploci/arrangement.hpp"
#include "jumploci/elliptic.hpp"
#include "jumploci/fixtures.hpp"
#include "jumploci/foxcalc.hpp"
#include "jumploci/master.hpp"
#include "jumploci/matrix.hpp"
#include "jumploci/polynomial.hpp"
#include "jumploci/scalars.hpp"
#include "jumploci/torus.hpp"

namespace jumploci::acceptance {

struct Options {
  std::uint64_t seed = 0;
  std::uint32_t prime = ModP::default_prime;
  std::size_t trials = 100;  // randomized trials for the sampling criteria
};

struct Criterion {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

// Collects failures; a criterion passes when no check failed and nothing
// threw.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary(const std::string& extra) const {
    std::ostringstream s;
    s << checks_ << " checks, " << failed_ << " failed";
    if (!extra.empty()) s << "; " << extra;
    for (const auto& f : failures_) s << "; " << f;
    return s.str();
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

template <class F>
Vector<F> combine(std::mt19937_64& rng, const std::vector<Vector<F>>& basis,
                  std::size_t dim, const F& zero, long bound = 50) {
  Vector<F> v(dim, zero);
  for (const auto& b : basis) {
    F c = random_scalar(rng, zero, bound);
    for (std::size_t i = 0; i < dim; ++i) v[i] += c * b[i];
  }
  return v;
}

template <class F>
std::vector<Vector<F>> kernel_of_equations(const std::vector<Vector<F>>& eqs,
                                           std::size_t dim, const F& zero) {
  Matrix<F> m(eqs.size(), dim, zero);
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = eqs[r][c];
  return rank_and_kernel(m).kernel;
}

template <class F>
std::vector<Vector<F>> unit_vectors(std::size_t dim, const F& zero) {
  std::vector<Vector<F>> out;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector<F> v(dim, zero);
    v[i] = one_like(zero);
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<std::size_t> shifted_sum(const std::vector<std::size_t>& del,
                                            const std::vector<std::size_t>& res,
                                            std::size_t length) {
  std::vector<std::size_t> sum(std::max({del.size(), res.size() + 1, length}), 0);
  for (std::size_t k = 0; k < del.size(); ++k) sum[k] += del[k];
  for (std::size_t k = 0; k < res.size(); ++k) sum[k + 1] += res[k];
  while (sum.size() > length && sum.back() == 0) sum.pop_back();
  return sum;
}

inline Gauss rational_gauss(std::mt19937_64& rng, long bound = 9, long den = 4) {
  return Gauss(random_scalar(rng, Rational(0), bound, den));
}

inline GaussVector random_real_vector(std::mt19937_64& rng, std::size_t n,
                                      bool sum_zero) {
  GaussVector v(n);
  Gauss s(0);
  for (std::size_t k = 0; k < n; ++k) {
    v[k] = rational_gauss(rng);
    s += v[k];
  }
  if (sum_zero) v[n - 1] -= s;
  return v;
}

inline std::size_t aomoto_h1(const GradedAlgebra<Gauss>& a, const GaussVector& alpha) {
  return cohomology_dims(aomoto_complex(a, alpha)).h[1];
}

// Multiplicity of the factor f in p, by repeated exact division.
inline std::size_t divisibility_order(Poly p, const Poly& f) {
  std::size_t k = 0;
  while (!p.is_zero()) {
    auto [q, r] = divmod(p, f);
    if (!r.is_zero()) break;
    p = q;
    ++k;
  }
  return k;
}

}  // namespace detail

// 1. Orlik-Solomon Poincare polynomials against broken-circuit counts and
// deletion-restriction on every fixture.
inline Criterion os_algebra_correctness(const Options&) {
  detail::Tally t;
  std::size_t lines = 0;
  for (const auto& [name, arr] : arrangement_library()) {
    auto full = os_algebra(arr).poincare;
    t.check(full == broken_circuit_poincare(arr), name + ": broken-circuit count");
    if (arr.ambient() == 2 && arr.size() <= 6) ++lines;
    for (std::size_t j = 0; j < arr.size(); ++j) {
      auto del = os_algebra(deletion(arr, j)).poincare;
      auto res = os_algebra(restriction(arr, j)).poincare;
      t.check(detail::shifted_sum(del, res, full.size()) == full,
              name + ": deletion-restriction at " + std::to_string(j));
    }
  }
  t.check(lines >= 8, "fewer than 8 line arrangements in the fixture set");
  return {1, "Orlik-Solomon correctness", t.ok(),
          t.summary(std::to_string(lines) + " line arrangements")};
}

// 2. Degree-two resonance of the six-hyperplane arrangement in C^4.
inline Criterion c4_resonance_components(const Options& opt) {
  detail::Tally t;
  std::mt19937_64 rng(opt.seed ^ 0x2);
  const ModP zero(0, opt.prime);
  auto os = os_algebra<ModP>(c4_arrangement(), std::nullopt, zero);
  const auto& a = os.algebra;
  const std::size_t dim = a.dim(1);
  auto eq = [&](std::vector<long> c) {
    Vector<ModP> v;
    for (long x : c) v.emplace_back(x, opt.prime);
    return v;
  };
  // Coordinates follow the hyperplane order x, y, z, w, x+y+z, y-z+w.
  std::vector<Vector<ModP>> e1_eqs{eq({1, 1, 1, 0, 1, 0}), eq({0, 0, 0, 1, 0, 0}),
                                    eq({0, 0, 0, 0, 0, 1})};
  std::vector<Vector<ModP>> e2_eqs{eq({0, 1, 1, 1, 0, 1}), eq({1, 0, 0, 0, 0, 0}),
                                    eq({0, 0, 0, 0, 1, 0})};
  auto e1 = detail::kernel_of_equations(e1_eqs, dim, zero);
  auto e2 = detail::kernel_of_equations(e2_eqs, dim, zero);

  auto generic = generic_dims_sample(a, detail::unit_vectors(dim, zero), 20, rng).generic[2];
  auto on_e1 = generic_dims_sample(a, e1, 20, rng).generic[2];
  auto on_e2 = generic_dims_sample(a, e2, 20, rng).generic[2];
  t.check(on_e1 > generic, "h2 on the first component does not jump");
  t.check(on_e2 > generic, "h2 on the second component does not jump");
  std::size_t meet = intersection_dimension(e1, e2, dim, zero);
  t.check(meet == 1, "components meet in dimension " + std::to_string(meet));

  auto in_component = [&](const std::vector<Vector<ModP>>& eqs, const Vector<ModP>& v) {
    for (const auto& e : eqs) {
      ModP s = zero;
      for (std::size_t i = 0; i < dim; ++i) s += e[i] * v[i];
      if (!s.is_zero()) return false;
    }
    return true;
  };
  std::size_t outside = 0;
  while (outside < opt.trials) {
    Vector<ModP> v(dim, zero);
    for (auto& x : v) x = random_scalar(rng, zero);
    if (in_component(e1_eqs, v) || in_component(e2_eqs, v)) continue;
    ++outside;
    auto h = cohomology_dims(aomoto_complex(a, v)).h[2];
    t.check(h == generic, "sample outside both components has h2 = " + std::to_string(h));
  }
  std::ostringstream s;
  s << "generic h2 = " << generic << ", on components " << on_e1 << " and " << on_e2
    << ", intersection dim " << meet << ", " << outside << " samples outside";
  return {2, "resonance components in C^4", t.ok(), t.summary(s.str())};
}

struct NamedVerdict {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct EllipticSampleSizes {
  std::size_t scroll = 200;
  std::size_t filtration = 100;
  std::size_t e2 = 25;
};

// Resonance, log resonance, E2 and tangent-space checks on the model of n
// points on an elliptic curve.
inline std::vector<NamedVerdict> elliptic_checks(std::size_t n, std::mt19937_64& rng,
                                                 const EllipticSampleSizes& sizes = {}) {
  const Gauss zero(0);
  EllipticModel m(n, 3);
  const auto& a = m.algebra();
  std::vector<NamedVerdict> out;
  auto finish = [&](const std::string& name, const detail::Tally& t,
                    const std::string& extra) {
    out.push_back({name, t.ok(), t.summary(extra)});
  };

  // scroll membership agrees with the jump of h1
  detail::Tally scroll_t;
  std::size_t members = 0;
  for (std::size_t s = 0; s < sizes.scroll; ++s) {
    GaussVector x, y;
    auto rank_one = [&](bool sum_zero) {
      auto v = detail::random_real_vector(rng, n, sum_zero);
      Gauss p = detail::rational_gauss(rng), q = detail::rational_gauss(rng);
      for (const auto& c : v) {
        x.push_back(p * c);
        y.push_back(q * c);
      }
    };
    switch (s % 4) {
      case 0:  // arbitrary
        x = detail::random_real_vector(rng, n, false);
        y = detail::random_real_vector(rng, n, false);
        break;
      case 1:  // zero sums, generically rank two
        x = detail::random_real_vector(rng, n, true);
        y = detail::random_real_vector(rng, n, true);
        break;
      case 2: rank_one(true); break;
      default: rank_one(false);
    }
    bool scroll = scroll_membership(x, y);
    members += scroll;
    bool jumps = detail::aomoto_h1(a, m.degree_one(x, y)) >= 1;
    scroll_t.check(scroll == jumps, "scroll and h1 disagree");
  }
  finish("scroll_equivalence", scroll_t,
         std::to_string(members) + " of " + std::to_string(sizes.scroll) + " in the scroll");

  // holomorphic classes with zero coordinate sum are resonant
  detail::Tally f1_t, lr_t;
  for (std::size_t s = 0; s < sizes.filtration; ++s) {
    auto x0 = detail::random_real_vector(rng, n, true);
    f1_t.check(detail::aomoto_h1(a, m.holomorphic(x0)) >= 1,
               "holomorphic zero-sum class not resonant");
    // no logarithmic resonance anywhere on F^1
    GaussVector x(n);
    for (auto& c : x)
      c = Gauss(random_scalar(rng, Rational(0), 9, 4), random_scalar(rng, Rational(0), 9, 4));
    auto lr = log_resonance_membership(a, m.holomorphic(x));
    lr_t.check(lr.zero_alpha || (!lr.member && lr.h1 == 0),
               "kernel on F^1 larger than the line through alpha");
  }
  finish("holomorphic_zero_sum_resonant", f1_t, "");
  finish("log_resonance_vanishes", lr_t, "");

  // E2 page for nonzero zero-sum holomorphic classes
  detail::Tally e2_t;
  for (std::size_t s = 0; s < sizes.e2; ++s) {
    GaussVector x;
    do x = detail::random_real_vector(rng, n, true);
    while (std::all_of(x.begin(), x.end(), [](const Gauss& c) { return c.is_zero(); }));
    auto page = elliptic_e2_page(m, x);
    e2_t.check(page.at(1, 0) == 0, "E2^{1,0} nonzero");
    e2_t.check(page.at(0, 1) == 1,
               "E2^{0,1} has dimension " + std::to_string(page.at(0, 1)));
  }
  finish("e2_page", e2_t, "");

  // tangent spaces of the components through the identity
  detail::Tally tan_t;
  const auto& pairs = m.diagonal_pairs();
  for (const auto& [i, j] : pairs) {
    auto e = m.tangent_space(i, j);
    tan_t.check(isotropic_check(a, e).isotropic, "tangent space not isotropic");
    for (std::size_t s = 0; s < 3; ++s) {
      auto c = m.real_coords(detail::combine(rng, e, 2 * n, zero));
      tan_t.check(scroll_membership(c.x, c.y), "tangent space leaves the scroll");
    }
    for (const auto& [k, l] : pairs)
      if (std::pair(i, j) < std::pair(k, l))
        tan_t.check(intersection_dimension(e, m.tangent_space(k, l), 2 * n, zero) == 0,
                    "tangent spaces intersect");
  }
  finish("tangent_spaces", tan_t, std::to_string(pairs.size()) + " pairs");

  // a resonant class in no tangent space; needs three points
  if (n >= 3) {
    detail::Tally w_t;
    GaussVector wx(n, zero), wy(n, zero);
    wx[0] = Gauss(1), wx[1] = Gauss(1), wx[2] = Gauss(-2);
    wy[0] = Gauss(2), wy[1] = Gauss(2), wy[2] = Gauss(-4);
    auto witness = m.degree_one(wx, wy);
    w_t.check(scroll_membership(wx, wy) && detail::aomoto_h1(a, witness) >= 1,
              "witness not resonant");
    for (const auto& [i, j] : pairs)
      w_t.check(!in_span(m.tangent_space(i, j), witness, zero),
                "witness lies in a tangent space");
    finish("strict_witness", w_t, "");
  }
  return out;
}

// 3. The configuration space of points on an elliptic curve, n = 3, 4, 5.
inline Criterion elliptic_suite(const Options& opt) {
  detail::Tally t;
  std::mt19937_64 rng(opt.seed ^ 0x3);
  for (std::size_t n : {3, 4, 5})
    for (const auto& v : elliptic_checks(n, rng))
      t.check(v.passed, "n=" + std::to_string(n) + " " + v.name + ": " + v.detail);
  return {3, "elliptic configuration spaces", t.ok(), t.summary("n = 3, 4, 5")};
}

// 4. Degree of the zero divisor of logarithmic forms.
inline Criterion hopf_index(const Options& opt) {
  detail::Tally t;
  std::mt19937_64 rng(opt.seed ^ 0x4);
  std::uniform_int_distribution<int> size(1, 8), weight(-6, 6);
  for (int c = 0; c < 20; ++c) {
    std::vector<Rational> pts, lam;
    const int d = size(rng);
    while (static_cast<int>(pts.size()) < d) {
      Rational p = random_scalar(rng, Rational(0), 12, 3);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    Rational sum(0);
    bool generic = true;
    for (int j = 0; j < d; ++j) {
      lam.emplace_back(weight(rng));
      sum += lam.back();
      generic = generic && !lam.back().is_zero();
    }
    if (std::all_of(lam.begin(), lam.end(), [](const Rational& x) { return x.is_zero(); }))
      lam[0] = sum = Rational(1);
    // interior count equals |chi| when no weight and not the total vanishes
    generic = generic && !sum.is_zero();
    auto r = log_zero_divisor_p1(pts, lam);
    t.check(r.total_degree == pts.size() - 1, "degree on P^1 differs from |D| - 2");
    if (generic)
      t.check(critical_points_univariate(pts, lam).total_degree == pts.size() - 1,
              "generic interior count differs from |chi|");
  }
  auto tri = critical_points_bivariate(affine_arrangement({{1, 0, 0}, {0, 1, 0}, {1, 1, -1}}),
                                       {Rational(1), Rational(1), Rational(1)});
  t.check(tri.total_degree == 1 && tri.expected == 1, "triangle count is not 1");
  std::size_t arrangements = 0, declared = 0;
  for (const auto& [name, arr] : arrangement_library()) {
    if (arr.central() || arr.ambient() != 2 || !arr.essential()) continue;
    bool counted = false;
    for (int s = 0; s < 4; ++s) {
      std::vector<Rational> lam;
      for (std::size_t j = 0; j < arr.size(); ++j) lam.emplace_back(weight(rng));
      try {
        auto r = critical_points_bivariate(arr, lam, opt.seed + static_cast<unsigned>(s));
        t.check(r.matches_euler, name + ": count " + std::to_string(r.total_degree) +
                                     " differs from |chi| = " + std::to_string(r.expected));
        counted = true;
      } catch (const DegeneracyError&) {
        ++declared;
      }
    }
    arrangements += counted;
  }
  t.check(arrangements >= 3, "fewer than 3 plane arrangements produced a count");
  return {4, "logarithmic Hopf index", t.ok(),
          t.summary(std::to_string(arrangements) + " plane arrangements counted, " +
                    std::to_string(declared) + " declared degenerate")};
}

// 5. Local Koszul cohomology at the zeros, including multiple ones.
inline Criterion local_koszul_vanishing(const Options& opt) {
  detail::Tally t;
  std::mt19937_64 rng(opt.seed ^ 0x5);
  std::uniform_int_distribution<int> size(2, 7), root(-4, 4), mult(1, 3);
  std::size_t zeros = 0, multiple = 0;
  for (int c = 0; c < 40; ++c) {
    std::vector<Rational> pts;
    const int d = size(rng);
    while (static_cast<int>(pts.size()) < d) {
      Rational p = random_scalar(rng, Rational(0), 12, 2);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    // Half the configurations get weights from a prescribed numerator with
    // repeated roots (partial fractions); the rest are random.
    std::vector<Rational> lam;
    if (c % 2 == 0) {
      Poly target = Poly::constant(Rational(1));
      while (target.degree() < d - 1) {
        Poly f = Poly::linear_root(Rational(root(rng), 5));
        for (int k = mult(rng); k > 0 && target.degree() < d - 1; --k) target = target * f;
      }
      for (int j = 0; j < d; ++j) {
        Rational den(1);
        for (int k = 0; k < d; ++k)
          if (k != j) den *= pts[static_cast<std::size_t>(j)] - pts[static_cast<std::size_t>(k)];
        lam.push_back(target(pts[static_cast<std::size_t>(j)]) / den);
      }
      if (std::all_of(lam.begin(), lam.end(), [](const Rational& x) { return x.is_zero(); }))
        continue;
    } else {
      std::uniform_int_distribution<int> w(-5, 5);
      for (int j = 0; j < d; ++j) lam.emplace_back(w(rng));
      if (std::all_of(lam.begin(), lam.end(), [](const Rational& x) { return x.is_zero(); }))
        lam[0] = Rational(1);
    }
    auto r = log_zero_divisor_p1(pts, lam);
    for (const auto& k : local_koszul(pts, r)) {
      const auto& z = r.zeros[k.zero_index];
      Poly local = z.site == ZeroSite::infinity ? r.numerator.reversed(pts.size() - 1)
                                                : r.numerator;
      std::size_t m = detail::divisibility_order(local, z.factor);
      t.check(m == z.multiplicity, "reported multiplicity differs from division order");
      t.check(k.h0 == 0, "local H^0 nonzero");
      t.check(k.h1 == m, "local H^1 differs from the multiplicity");
      ++zeros;
      multiple += m > 1;
    }
  }
  t.check(multiple > 0, "no multiple zero exercised");
  return {5, "local Koszul vanishing", t.ok(),
          t.summary(std::to_string(zeros) + " zeros, " + std::to_string(multiple) +
                    " multiple")};
}

// 6. Exponential tangent cones of subtori and of a translated hypersurface.
inline Criterion etc_suite(const Options& opt) {
  detail::Tally t;
  std::mt19937_64 rng(opt.seed ^ 0x6);
  auto binomial = [](std::size_t r, const Exponent& m) {
    LaurentPolynomial p(r);
    p.add_term(m, Rational(1));
    p.add_term(Exponent(r, 0), Rational(-1));
    return p;
  };
  auto dot = [](const Exponent& m, const std::vector<Rational>& a) {
    Rational s(0);
    for (std::size_t j = 0; j < m.size(); ++j) s += Rational(m[j]) * a[j];
    return s;
  };
  struct Sub {
    std::size_t rank;
    std::vector<Exponent> lattice;
  };
  std::vector<Sub> subtori{{2, {{1, 1}}}, {3, {{1, -1, 0}, {0, 2, 1}}}, {3, {{2, 0, -3}}}};
  std::size_t accepted = 0;
  for (const auto& sub : subtori) {
    LaurentSystem w{sub.rank, {}};
    std::vector<Vector<Rational>> eqs;
    for (const auto& m : sub.lattice) {
      w.equations.push_back(binomial(sub.rank, m));
      Vector<Rational> row;
      for (long x : m) row.emplace_back(x);
      eqs.push_back(row);
    }
    auto lie = detail::kernel_of_equations(eqs, sub.rank, Rational(0));
    for (int s = 0; s < 50; ++s) {
      std::vector<Rational> alpha;
      if (s % 2 == 0) alpha = detail::combine(rng, lie, sub.rank, Rational(0), 9);
      else
        for (std::size_t j = 0; j < sub.rank; ++j)
          alpha.push_back(random_scalar(rng, Rational(0), 9, 3));
      bool in_lie = std::all_of(sub.lattice.begin(), sub.lattice.end(),
                                [&](const Exponent& m) { return dot(m, alpha).is_zero(); });
      bool member = etc_membership(w, alpha);
      t.check(member == in_lie, "subtorus membership differs from its Lie algebra");
      if (!member) continue;
      ++accepted;
      for (const auto& p : w.equations) {
        auto cone = tangent_cone_hypersurface(p);
        Rational v(0);
        for (const auto& [e, c] : cone.terms()) {
          Rational term = c;
          for (std::size_t j = 0; j < e.size(); ++j)
            for (long k = 0; k < e[j]; ++k) term *= alpha[j];
          v += term;
        }
        t.check(v.is_zero(), "accepted direction outside the tangent cone");
      }
    }
  }
  LaurentPolynomial translated(2);
  translated.add_term({1, 0}, Rational(1));
  translated.add_term({0, 1}, Rational(1));
  translated.add_term({0, 0}, Rational(-2));
  LaurentSystem line{2, {translated}};
  std::size_t rejected = 0;
  while (rejected < 50) {
    std::vector<Rational> alpha{random_scalar(rng, Rational(0), 9, 3),
                                random_scalar(rng, Rational(0), 9, 3)};
    if (alpha[0].is_zero() && alpha[1].is_zero()) continue;
    t.check(!etc_membership(line, alpha), "translated line accepts a direction");
    ++rejected;
  }
  return {6, "exponential tangent cones", t.ok(),
          t.summary(std::to_string(accepted) + " accepted subtorus directions")};
}

// 7. Twisted h1 of a punctured line from Fox calculus against Aomoto h1.
inline Criterion fox_aomoto_cross_check(const Options& opt) {
  detail::Tally t;
  std::mt19937_64 rng(opt.seed ^ 0x7);
  for (std::size_t d = 2; d <= 6; ++d) {
    std::vector<Form> pts;
    for (std::size_t k = 0; k < d; ++k) pts.push_back({Rational(1), Rational(static_cast<long>(k))});
    auto os = os_algebra(Arrangement(1, false, pts));
    Presentation free_group(d, {});
    for (int s = 0; s < 20; ++s) {
      std::vector<Rational> values;
      bool trivial = true;
      for (std::size_t j = 0; j < d; ++j) {
        Rational v;
        do v = random_scalar(rng, Rational(0), 7, 3);
        while (v.is_zero());
        trivial = trivial && v == Rational(1);
        values.push_back(v);
      }
      if (trivial) values[0] = Rational(2);
      std::size_t fox = twisted_h1(free_group, Character<Rational>(values));
      Vector<Rational> alpha;
      do alpha = detail::combine(rng, detail::unit_vectors(d, Rational(0)), d, Rational(0), 9);
      while (is_zero_vector(alpha));
      std::size_t aomoto = cohomology_dims(aomoto_complex(os.algebra, alpha)).h[1];
      t.check(fox == d - 1 && aomoto == d - 1,
              "d=" + std::to_string(d) + ": fox " + std::to_string(fox) + ", aomoto " +
                  std::to_string(aomoto));
    }
  }
  return {7, "Fox calculus against Aomoto", t.ok(), t.summary("d = 2..6")};
}

// 8. Structural invariants on randomized runs over every fixture.
inline Criterion structural_invariants(const Options& opt) {
  detail::Tally t;
  std::mt19937_64 rng(opt.seed ^ 0x8);
  auto run = [&](const std::string& name, const auto& a, const auto& zero) {
    using F = std::decay_t<decltype(zero)>;
    const std::size_t dim = a.dim(1);
    auto f1 = hodge_filtration_subspace(a, 1, 1);
    for (std::size_t s = 0; s < opt.trials; ++s) {
      // small coefficients so that special classes come up
      Vector<F> alpha = s % 2 == 0 ? detail::combine(rng, f1, dim, zero, 2)
                                   : detail::combine(rng, detail::unit_vectors(dim, zero), dim, zero, 2);
      auto c = aomoto_complex(a, alpha);
      const auto& d = c.differentials();
      for (std::size_t j = 0; j + 1 < d.size(); ++j)
        t.check((d[j + 1] * d[j]).is_zero(), name + ": differential squares to nonzero");
      auto h = cohomology_dims(c);
      t.check(h.euler == algebra_euler(a), name + ": Euler characteristic changed");
      Vector<F> scaled = alpha;
      F k = from_integer(-3, zero);
      for (auto& x : scaled) x *= k;
      t.check(cohomology_dims(aomoto_complex(a, scaled)).h == h.h,
              name + ": scaling changed cohomology");
      if (a.top_degree() >= 2 && in_span(f1, alpha, zero)) {
        auto lr = log_resonance_membership(a, alpha);
        if (lr.member) t.check(h.h[1] >= 1, name + ": log resonant but not resonant");
      }
    }
  };
  for (const auto& [name, arr] : arrangement_library())
    run(name, os_algebra(arr).algebra, Rational(0));
  run("C^4 arrangement", os_algebra(c4_arrangement()).algebra, Rational(0));
  for (std::size_t n : {2, 3}) run("elliptic n=" + std::to_string(n),
                                   EllipticModel(n).algebra(), Gauss(0));
  return {8, "structural invariants", t.ok(),
          t.summary(std::to_string(opt.trials) + " trials per fixture")};
}

inline std::vector<Criterion> run_all(const Options& opt = {}) {
  if (opt.trials < 100)
    throw PreconditionError("acceptance runs need at least 100 trials");
  using Fn = Criterion (*)(const Options&);
  const Fn suite[] = {os_algebra_correctness, c4_resonance_components,
                      elliptic_suite,         hopf_index,
                      local_koszul_vanishing, etc_suite,
                      fox_aomoto_cross_check, structural_invariants};
  std::vector<Criterion> out;
  for (Fn f : suite) {
    auto start = std::chrono::steady_clock::now();
    Criterion c;
    try {
      c = f(opt);
    } catch (const std::exception& e) {
      c.id = static_cast<int>(out.size()) + 1;
      c.title = "criterion " + std::to_string(c.id);
      c.passed = false;
      c.detail = std::string("threw: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(c));
  }
  return out;
}

inline std::string format_line(const Criterion& c) {
  return std::string(c.passed ? "PASS" : "FAIL") + " [" + std::to_string(c.id) + "] " +
         c.title + ": " + c.detail;
}

}  // namespace jumploci::acceptance
