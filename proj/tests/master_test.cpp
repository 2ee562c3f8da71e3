#include <gtest/gtest.h>

#include <random>

#include "jumploci/master.hpp"
#include "arrangement_library.hpp"

namespace jumploci {
namespace {

using Q = Rational;

std::vector<Q> qs(std::vector<long> xs) {
  std::vector<Q> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Largest k with f^k dividing p, by repeated division.
std::size_t divisibility_order(Poly p, const Poly& f) {
  std::size_t k = 0;
  while (true) {
    auto [q, r] = divmod(p, f);
    if (!r.is_zero()) return k;
    p = q;
    ++k;
  }
}

TEST(Univariate, TwoPoints) {
  auto r = critical_points_univariate(qs({0, 1}), qs({1, 1}));
  EXPECT_EQ(r.numerator, (Poly{-1, 2}));
  ASSERT_EQ(r.zeros.size(), 1u);
  EXPECT_EQ(r.zeros[0].real->exact, Q(1, 2));
  EXPECT_EQ(r.total_degree, 1u);
  EXPECT_TRUE(r.matches_euler);
}

TEST(Univariate, ThreePoints) {
  auto r = critical_points_univariate(qs({0, 1, 2}), qs({1, 1, 1}));
  EXPECT_EQ(r.numerator, (Poly{2, -6, 3}));
  ASSERT_EQ(r.zeros.size(), 2u);
  for (const auto& z : r.zeros) {
    EXPECT_EQ(z.multiplicity, 1u);
    EXPECT_FALSE(z.real->exact.has_value());
  }
  EXPECT_EQ(r.expected, 2u);
  EXPECT_TRUE(r.matches_euler);
}

TEST(Univariate, BalancedWeightsLoseInteriorZero) {
  auto r = critical_points_univariate(qs({0, 1}), qs({1, -1}));
  EXPECT_EQ(r.numerator, (Poly{-1}));
  EXPECT_TRUE(r.zeros.empty());
}

TEST(Univariate, Errors) {
  EXPECT_THROW(critical_points_univariate(qs({0, 0}), qs({1, 1})), PreconditionError);
  EXPECT_THROW(critical_points_univariate(qs({0, 1}), qs({0, 0})), PreconditionError);
  EXPECT_THROW(critical_points_univariate(qs({0, 1}), qs({1})), PreconditionError);
}

TEST(ProjectiveLine, Examples) {
  auto r = log_zero_divisor_p1(qs({0, 1}), qs({1, -1}));
  ASSERT_EQ(r.zeros.size(), 1u);
  EXPECT_EQ(r.zeros[0].site, ZeroSite::infinity);
  EXPECT_EQ(r.zeros[0].multiplicity, 1u);
  EXPECT_EQ(r.total_degree, 1u);

  auto three = log_zero_divisor_p1(qs({0, 1, 2}), qs({1, 1, 1}));
  EXPECT_EQ(three.total_degree, 2u);
  EXPECT_EQ(three.interior_degree, 2u);

  auto one = log_zero_divisor_p1(qs({0}), qs({1}));
  EXPECT_TRUE(one.zeros.empty());
  EXPECT_EQ(one.total_degree, 0u);
  EXPECT_EQ(one.euler, 0);
}

TEST(ProjectiveLine, ZeroWeightPutsZeroOnPuncture) {
  // N = (x - 1)(x - 2) - x (x - 1) = -2 (x - 1)
  auto r = log_zero_divisor_p1(qs({0, 1, 2}), qs({1, 0, -1}));
  EXPECT_EQ(r.interior_degree, 0u);
  EXPECT_EQ(r.boundary_degree, 2u);
  ASSERT_EQ(r.zeros.size(), 2u);
  EXPECT_EQ(r.zeros[0].site, ZeroSite::boundary_point);
  EXPECT_EQ(r.zeros[0].boundary_index, std::optional<std::size_t>(1));
  EXPECT_EQ(r.zeros[1].site, ZeroSite::infinity);
}

TEST(ProjectiveLine, DoubleZero) {
  // weights chosen by partial fractions so that N = (x - 3)^2
  auto pts = qs({0, 1, 2});
  std::vector<Q> w{Q(9, 2), Q(-4), Q(1, 2)};
  auto r = log_zero_divisor_p1(pts, w);
  EXPECT_EQ(r.numerator, (Poly{9, -6, 1}));
  ASSERT_EQ(r.zeros.size(), 1u);
  EXPECT_EQ(r.zeros[0].multiplicity, 2u);
  auto k = local_koszul(pts, r);
  EXPECT_EQ(k[0].h0, 0u);
  EXPECT_EQ(k[0].h1, 2u);
}

std::pair<std::vector<Q>, std::vector<Q>> random_configuration(std::mt19937_64& rng,
                                                               bool allow_zero) {
  std::uniform_int_distribution<int> size(1, 8), w(-4, 4);
  std::vector<Q> pts, lam;
  int d = size(rng);
  while (static_cast<int>(pts.size()) < d) {
    Q c = random_scalar(rng, Q(0), 10, 3);
    if (std::find(pts.begin(), pts.end(), c) == pts.end()) pts.push_back(c);
  }
  do {
    lam.clear();
    for (int j = 0; j < d; ++j) {
      int v = w(rng);
      if (!allow_zero && v == 0) v = 1;
      lam.emplace_back(v);
    }
  } while (std::all_of(lam.begin(), lam.end(), [](const Q& x) { return x.is_zero(); }));
  return {pts, lam};
}

TEST(Properties, DegreeAndKoszul) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    auto [pts, lam] = random_configuration(rng, true);
    auto r = log_zero_divisor_p1(pts, lam);
    EXPECT_EQ(r.total_degree, pts.size() - 1);
    std::size_t sum = 0;
    for (const auto& z : r.zeros) sum += z.count * z.multiplicity;
    EXPECT_EQ(sum, r.total_degree);
    auto koszul = local_koszul(pts, r);
    ASSERT_EQ(koszul.size(), r.zeros.size());
    for (const auto& k : koszul) {
      const auto& z = r.zeros[k.zero_index];
      EXPECT_EQ(k.h0, 0u);
      EXPECT_EQ(k.h1, z.multiplicity);
      Poly local = z.site == ZeroSite::infinity
                       ? r.numerator.reversed(pts.size() - 1)
                       : r.numerator;
      EXPECT_EQ(divisibility_order(local, z.factor), z.multiplicity);
    }
    // scaling
    std::vector<Q> scaled = lam;
    for (auto& x : scaled) x *= Q(-3, 5);
    auto s = log_zero_divisor_p1(pts, scaled);
    ASSERT_EQ(s.zeros.size(), r.zeros.size());
    for (std::size_t i = 0; i < s.zeros.size(); ++i) {
      EXPECT_EQ(s.zeros[i].multiplicity, r.zeros[i].multiplicity);
      EXPECT_EQ(s.zeros[i].factor, r.zeros[i].factor);
    }
  }
}

TEST(Properties, GenericWeightsHitEulerCharacteristic) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 50; ++t) {
    auto [pts, lam] = random_configuration(rng, false);
    Q sum(0);
    for (const auto& x : lam) sum += x;
    if (sum.is_zero()) continue;
    EXPECT_TRUE(critical_points_univariate(pts, lam).matches_euler);
  }
}

TEST(Bivariate, GenericTriangle) {
  auto arr = affine({{1, 0, 0}, {0, 1, 0}, {1, 1, -1}});
  auto r = critical_points_bivariate(arr, qs({1, 1, 1}));
  EXPECT_EQ(r.total_degree, 1u);
  ASSERT_EQ(r.zeros.size(), 1u);
  EXPECT_EQ(r.zeros[0].point, std::pair(Q(1, 3), Q(1, 3)));
  EXPECT_EQ(r.euler, 1);
  EXPECT_TRUE(r.matches_euler);
}

TEST(Bivariate, BooleanHasNone) {
  auto r = critical_points_bivariate(affine({{1, 0, 0}, {0, 1, 0}}), qs({2, 3}));
  EXPECT_EQ(r.total_degree, 0u);
  EXPECT_EQ(r.euler, 0);
  EXPECT_TRUE(r.matches_euler);
}

TEST(Bivariate, TriplePointPlusLine) {
  auto arr = affine({{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {1, 1, -1}});
  auto r = critical_points_bivariate(arr, qs({2, 3, 5, 7}));
  EXPECT_EQ(r.euler, 2);
  EXPECT_EQ(r.total_degree, 2u);
}

TEST(Bivariate, SharedProjectionIsNotADoubleZero) {
  // with the first shear two distinct zeros project to the same point
  auto arr = affine({{1, 0, 0}, {0, 1, 0}, {1, 0, -1}, {0, 1, -1}, {1, -1, 0}});
  auto r = critical_points_bivariate(arr, qs({-2, -6, 1, 2, 2}), 0);
  EXPECT_EQ(r.total_degree, 2u);
  EXPECT_TRUE(r.matches_euler);
}

TEST(Bivariate, ZeroWeightIsDegenerate) {
  auto arr = affine({{1, 0, 0}, {0, 1, 0}, {1, 1, -1}});
  EXPECT_THROW(critical_points_bivariate(arr, qs({1, 1, 0})), DegeneracyError);
}

TEST(Bivariate, NeverAWrongCount) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> w(-3, 3);
  int counted = 0;
  for (const auto& [name, arr] : arrangement_library()) {
    if (arr.central() || arr.ambient() != 2 || !arr.essential()) continue;
    for (int t = 0; t < 6; ++t) {
      std::vector<Q> lam;
      for (std::size_t j = 0; j < arr.size(); ++j) lam.emplace_back(w(rng));
      try {
        auto r = critical_points_bivariate(arr, lam, static_cast<std::uint64_t>(t));
        EXPECT_TRUE(r.matches_euler) << name;
        ++counted;
      } catch (const DegeneracyError&) {
      }
    }
  }
  EXPECT_GT(counted, 10);
}

// Pull the form back along (u, v) -> p + (u, u v) at a fixed v and read the
// order of each factor along u = 0.
Q blowup_residue(const std::vector<std::pair<Form, Q>>& affine_lines,
                 const std::pair<Q, Q>& p) {
  const Q v(7, 3);
  Q res(0);
  for (const auto& [f, w] : affine_lines) {
    // f(p + (u, u v)) = f(p) + u (a + b v)
    Poly g(std::vector<Q>{f[0] * p.first + f[1] * p.second + f[2], f[0] + f[1] * v});
    std::size_t ord = 0;
    while (!g.is_zero() && g(Q(0)).is_zero()) {
      g = g / Poly{0, 1};
      ++ord;
    }
    res += Q(static_cast<long>(ord)) * w;
  }
  return res;
}

TEST(Residues, TriplePoint) {
  auto arr = central({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  auto lam = qs({1, 1, -2, 0});
  auto table = residues_line_arrangement(arr, lam);
  ASSERT_EQ(table.size(), 5u);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(table[j].residue, lam[j]);
  EXPECT_TRUE(table[4].exceptional);
  EXPECT_EQ(table[4].lines, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(table[4].zero());
  // chart z = 1 through the triple point at the origin
  auto d = decone(arr, 3);
  std::vector<std::pair<Form, Q>> lines;
  for (std::size_t i = 0; i < d.affine.size(); ++i)
    lines.emplace_back(d.affine.form(i), lam[d.original_index[i]]);
  EXPECT_EQ(blowup_residue(lines, {Q(0), Q(0)}), table[4].residue);
}

TEST(Residues, MatchBlowupOracle) {
  std::mt19937_64 rng(29);
  // braid arrangement: four triple points
  auto arr = central({{1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {1, 0, 0}, {0, 1, 0},
                      {0, 0, 1}});
  for (int t = 0; t < 10; ++t) {
    std::vector<Q> lam;
    Q sum(0);
    for (int j = 0; j < 5; ++j) {
      lam.push_back(random_scalar(rng, Q(0), 5));
      sum += lam.back();
    }
    lam.push_back(-sum);
    auto table = residues_line_arrangement(arr, lam);
    std::size_t points = 0;
    for (const auto& e : table) {
      if (!e.exceptional) continue;
      ++points;
      // decone along a line missing the point; locate the point in that chart
      std::size_t off = 0;
      while (std::find(e.lines.begin(), e.lines.end(), off) != e.lines.end()) ++off;
      auto d = decone(arr, off);
      std::vector<std::pair<Form, Q>> lines;
      std::vector<Form> through;
      for (std::size_t i = 0; i < d.affine.size(); ++i) {
        lines.emplace_back(d.affine.form(i), lam[d.original_index[i]]);
        if (std::find(e.lines.begin(), e.lines.end(), d.original_index[i]) !=
            e.lines.end())
          through.push_back(d.affine.form(i));
      }
      const auto& f = through[0];
      const auto& g = through[1];
      Q det = f[0] * g[1] - f[1] * g[0];
      std::pair<Q, Q> p{(-f[2] * g[1] + f[1] * g[2]) / det,
                        (-f[0] * g[2] + f[2] * g[0]) / det};
      EXPECT_EQ(blowup_residue(lines, p), e.residue);
    }
    EXPECT_EQ(points, 4u);
  }
}

TEST(Residues, GenericPositionListsOnlyLines) {
  auto table = residues_line_arrangement(
      central({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}), qs({1, 2, -4, 1}));
  EXPECT_EQ(table.size(), 4u);
  EXPECT_THROW(residues_line_arrangement(central({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                                         qs({1, 1, 1})),
               PreconditionError);
}

}  // namespace
}  // namespace jumploci
