#include <gtest/gtest.h>

#include <random>

#include "jumploci/aomoto.hpp"
#include "jumploci/arrangement.hpp"
#include "arrangement_library.hpp"

namespace jumploci {
namespace {

using Q = Rational;

Vector<Q> vec(std::vector<long> xs) {
  Vector<Q> v;
  for (long x : xs) v.push_back(Q(x));
  return v;
}

// Dimension of {beta in degree one : alpha ^ beta lies in the ideal}, computed
// in the full exterior algebra from the degree-two ideal generators. This
// avoids the quotient bases entirely.
std::size_t oracle_degree_one_kernel(std::size_t n,
                                     const std::vector<Multivector<Q>>& gens,
                                     const Vector<Q>& alpha) {
  std::vector<Mask> mons;
  for (Mask m = 0; m < (Mask(1) << n); ++m)
    if (__builtin_popcountll(m) == 2) mons.push_back(m);
  auto coords = [&](const Multivector<Q>& v) {
    Vector<Q> out;
    for (Mask m : mons) out.push_back(v.coeff(m));
    return out;
  };
  auto a = Multivector<Q>::linear(alpha);
  std::vector<Vector<Q>> ideal, images;
  for (const auto& g : gens)
    if (g.degree() == std::optional<std::size_t>(2)) ideal.push_back(coords(g));
  for (std::size_t k = 0; k < n; ++k)
    images.push_back(coords(wedge(a, Multivector<Q>::generator(n, k))));
  auto both = ideal;
  both.insert(both.end(), images.begin(), images.end());
  std::size_t r = span_dimension(both, mons.size(), Q(0)) -
                  span_dimension(ideal, mons.size(), Q(0));
  return n - r;
}

TEST(Complex, ZeroAlphaGivesZeroMaps) {
  auto os = os_algebra(affine({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
  auto c = aomoto_complex(os.algebra, vec({0, 0, 0}));
  for (const auto& d : c.differentials()) EXPECT_TRUE(d.is_zero());
}

TEST(Complex, CompositionZero) {
  auto os = os_algebra(affine({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
  auto c = aomoto_complex(os.algebra, vec({1, 1, 1}));
  ASSERT_EQ(c.differentials().size(), 2u);
  EXPECT_TRUE((c.differential(1) * c.differential(0)).is_zero());
}

TEST(Complex, RejectsNonDegreeOne) {
  auto os = os_algebra(affine({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
  auto two = Multivector<Q>::monomial(3, 0b011, Q(1));
  EXPECT_THROW(aomoto_complex(os.algebra, two), PreconditionError);
  EXPECT_THROW(aomoto_complex(os.algebra, vec({1, 1})), PreconditionError);
}

TEST(Cohomology, ThreePunctures) {
  auto os = os_algebra(affine({{1, 0}, {1, -1}, {1, 2}}));
  auto r = cohomology_dims(aomoto_complex(os.algebra, vec({1, 1, 1})));
  EXPECT_EQ(r.h, (std::vector<std::size_t>{0, 2}));
  auto z = cohomology_dims(aomoto_complex(os.algebra, vec({0, 0, 0})));
  EXPECT_EQ(z.h, (std::vector<std::size_t>{1, 3}));
}

TEST(Cohomology, ConcurrentLinesLocalResonance) {
  auto os = os_algebra(affine({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
  auto alpha = vec({1, 1, -2});
  auto r = cohomology_dims(aomoto_complex(os.algebra, alpha));
  std::size_t oracle =
      oracle_degree_one_kernel(3, os.algebra.ideal_generators(), alpha) - 1;
  EXPECT_EQ(r.h[1], oracle);
  EXPECT_EQ(r.h[1], 1u);
}

TEST(Resonance, MembershipMatchesKernelOracle) {
  std::mt19937_64 rng(3);
  for (const auto& [name, arr] : arrangement_library()) {
    auto os = os_algebra(arr, std::min<std::size_t>(2, arr.rank()));
    if (os.algebra.top_degree() < 2) continue;
    for (int t = 0; t < 10; ++t) {
      Vector<Q> alpha;
      for (std::size_t k = 0; k < arr.size(); ++k)
        alpha.push_back(random_scalar(rng, Q(0), 2));
      if (is_zero_vector(alpha)) continue;
      auto r = resonance_membership(os.algebra, alpha, 1, 1);
      std::size_t oracle =
          oracle_degree_one_kernel(arr.size(), os.algebra.ideal_generators(),
                                   alpha) - 1;
      EXPECT_EQ(r.h[1], oracle) << name;
      EXPECT_EQ(r.member, oracle >= 1) << name;
    }
  }
}

TEST(Resonance, DegreeAboveTopThrows) {
  auto os = os_algebra(affine({{1, 0}, {1, -1}}));
  EXPECT_THROW(resonance_membership(os.algebra, vec({1, 1}), 2, 1),
               PreconditionError);
}

TEST(Resonance, FourSpaceComponentsJump) {
  auto os = os_algebra(c4_arrangement());
  // Components in the order x, y, z, w, x+y+z, y-z+w: the triple-point
  // subarrangements {x, y, z, x+y+z} and {y, z, w, y-z+w}.
  auto e1 = resonance_membership(os.algebra, vec({1, 0, 0, 0, -1, 0}), 2, 1);
  auto e2 = resonance_membership(os.algebra, vec({0, 1, 0, 0, 0, -1}), 2, 1);
  EXPECT_TRUE(e1.member);
  EXPECT_TRUE(e2.member);
  auto generic = resonance_membership(os.algebra, vec({3, -1, 4, 1, -5, -2}), 2, 1);
  EXPECT_FALSE(generic.member);
}

TEST(Sampling, GenericDims) {
  std::mt19937_64 rng(5);
  auto pts = os_algebra(affine({{1, 0}, {1, -1}, {1, 2}}));
  std::vector<Vector<Q>> full{vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})};
  EXPECT_EQ(generic_dims_sample(pts.algebra, full, 50, rng).generic[1], 2u);

  auto conc = os_algebra(affine({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
  std::vector<Vector<Q>> sum_zero{vec({1, 0, -1}), vec({0, 1, -1})};
  auto g = generic_dims_sample(conc.algebra, sum_zero, 20, rng);
  std::size_t oracle =
      oracle_degree_one_kernel(3, conc.algebra.ideal_generators(), vec({2, 5, -7})) - 1;
  EXPECT_EQ(g.generic[1], oracle);
  EXPECT_EQ(g.generic[1], 1u);

  EXPECT_THROW(generic_dims_sample(conc.algebra, {vec({0, 0, 0})}, 5, rng),
               PreconditionError);
  EXPECT_THROW(generic_dims_sample(conc.algebra, full, 0, rng), PreconditionError);
}

TEST(Isotropy, OSExamples) {
  auto os = os_algebra(affine({{1, 0, 0}, {0, 1, 0}, {1, 1, -1}}));
  EXPECT_TRUE(isotropic_check(os.algebra, {vec({1, -1, 0})}).isotropic);
  auto r = isotropic_check(os.algebra, {vec({1, 0, 0}), vec({0, 1, 0})});
  EXPECT_FALSE(r.isotropic);
  EXPECT_EQ(r.witness, (std::pair<std::size_t, std::size_t>{0, 1}));
}

TEST(LogResonance, PureWeightTwoMatchesResonance) {
  auto os = os_algebra(affine({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
  auto r = log_resonance_membership(os.algebra, vec({1, 1, -2}));
  EXPECT_TRUE(r.member);
  EXPECT_EQ(r.h1, 1u);
  auto zero = log_resonance_membership(os.algebra, vec({0, 0, 0}));
  EXPECT_FALSE(zero.member);
  EXPECT_TRUE(zero.zero_alpha);
}

TEST(LogResonance, RequiresFilteredClass) {
  std::vector<HodgeType> types{{1, 0}, {0, 1}, {1, 1}};
  auto a = build_quotient_algebra<Q>(3, {}, 2, Q(0), types);
  EXPECT_THROW(log_resonance_membership(a, vec({0, 1, 0})), PreconditionError);
  EXPECT_NO_THROW(log_resonance_membership(a, vec({1, 0, 1})));
}

// Algebra-level invariants on the fixture library with random alpha.
TEST(Properties, EulerScalingSemicontinuity) {
  std::mt19937_64 rng(17);
  for (const auto& [name, arr] : arrangement_library()) {
    auto os = os_algebra(arr);
    if (os.algebra.top_degree() < 1) continue;
    std::vector<Vector<Q>> full;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      Vector<Q> e(arr.size(), Q(0));
      e[k] = Q(1);
      full.push_back(e);
    }
    auto generic = generic_dims_sample(os.algebra, full, 5, rng).generic;
    const long euler = algebra_euler(os.algebra);
    for (int t = 0; t < 10; ++t) {
      Vector<Q> alpha;
      // small coefficients hit special loci often
      for (std::size_t k = 0; k < arr.size(); ++k)
        alpha.push_back(random_scalar(rng, Q(0), 1));
      auto c = aomoto_complex(os.algebra, alpha);
      for (std::size_t j = 0; j + 1 < c.differentials().size(); ++j)
        ASSERT_TRUE((c.differential(j + 1) * c.differential(j)).is_zero());
      auto h = cohomology_dims(c);
      EXPECT_EQ(h.euler, euler) << name;
      Vector<Q> scaled = alpha;
      Q s = Q(-7, 3);
      for (auto& x : scaled) x *= s;
      EXPECT_EQ(cohomology_dims(aomoto_complex(os.algebra, scaled)).h, h.h) << name;
      for (std::size_t j = 0; j < h.h.size(); ++j)
        EXPECT_GE(h.h[j], generic[j]) << name;
      if (os.algebra.top_degree() >= 2 &&
          log_resonance_membership(os.algebra, alpha).member)
        EXPECT_GE(h.h[1], 1u) << name;
    }
  }
}

}  // namespace
}  // namespace jumploci
