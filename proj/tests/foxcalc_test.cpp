#include <gtest/gtest.h>

#include <random>

#include "jumploci/aomoto.hpp"
#include "jumploci/arrangement.hpp"
#include "jumploci/foxcalc.hpp"

namespace jumploci {
namespace {

using Q = Rational;

Character<Q> chi(std::vector<long> v) {
  std::vector<Q> out;
  for (long x : v) out.emplace_back(x);
  return Character<Q>(out);
}

Presentation torus() { return Presentation(2, {{1, 2, -1, -2}}); }

TEST(Fox, TorusJacobian) {
  auto j = fox_jacobian(torus(), chi({2, 1}));
  EXPECT_EQ(j(0, 0), Q(0));
  EXPECT_EQ(j(0, 1), Q(1));
  EXPECT_EQ(twisted_h1(torus(), chi({2, 1})), 0u);
  auto trivial = twisted_cohomology(torus(), chi({1, 1}));
  EXPECT_EQ(trivial.h0, 1u);
  EXPECT_EQ(trivial.h1, 2u);
  EXPECT_EQ(trivial.h2_presentation, 1u);
}

TEST(Fox, FreeGroups) {
  EXPECT_EQ(twisted_h1(Presentation(2, {}), chi({2, 3})), 1u);
  EXPECT_EQ(twisted_h1(Presentation(3, {}), chi({1, 1, 1})), 3u);
  EXPECT_EQ(twisted_cohomology(Presentation(3, {}), chi({1, 5, 1})).h0, 0u);
}

TEST(Fox, Errors) {
  EXPECT_THROW(Presentation(2, {{1, 3}}), PreconditionError);
  EXPECT_THROW(Presentation(2, {{0}}), PreconditionError);
  EXPECT_THROW(chi({1, 0}), PreconditionError);
  // x1^2 = 1 forces chi(x1) = +-1
  EXPECT_THROW(twisted_h1(Presentation(1, {{1, 1}}), chi({2})), PreconditionError);
  EXPECT_THROW(twisted_h1(torus(), chi({1, 1, 1})), PreconditionError);
}

TEST(Fox, FreeReduction) {
  EXPECT_EQ(freely_reduce({1, 2, -2, -1, 3}), (Word{3}));
  Presentation p(2, {{1, 2, -2, 2}});
  EXPECT_EQ(p.relators()[0], (Word{1, 2}));
}

Word random_word(std::mt19937_64& rng, int g, int len) {
  std::uniform_int_distribution<int> gen(1, g), sign(0, 1);
  Word w;
  for (int k = 0; k < len; ++k) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return w;
}

TEST(Properties, FundamentalIdentity) {
  // sum_j dw/dx_j (chi(x_j) - 1) = chi(w) - 1
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long> v(1, 6);
  for (int t = 0; t < 200; ++t) {
    auto c = chi({v(rng), -v(rng), v(rng)});
    Word w = random_word(rng, 3, 9);
    Q lhs(0);
    for (std::size_t j = 0; j < 3; ++j) lhs += fox_derivative(w, j, c) * (c[j] - Q(1));
    EXPECT_EQ(lhs, c.word(w) - Q(1));
  }
}

TEST(Properties, ProductRule) {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<long> v(2, 6);
  for (int t = 0; t < 100; ++t) {
    auto c = chi({v(rng), v(rng)});
    Word u = random_word(rng, 2, 5), w = random_word(rng, 2, 5);
    Word uw = u;
    uw.insert(uw.end(), w.begin(), w.end());
    for (std::size_t j = 0; j < 2; ++j)
      EXPECT_EQ(fox_derivative(uw, j, c),
                fox_derivative(u, j, c) + c.word(u) * fox_derivative(w, j, c));
  }
}

TEST(Properties, EulerCharacteristicOfPresentation) {
  // h0 - h1 + h2 = 1 - g + r for every character
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> v(1, 4);
  for (int t = 0; t < 60; ++t) {
    // commutator relators are trivial on any abelian character
    Presentation p(3, {{1, 2, -1, -2}, {2, 3, -2, -3}});
    auto c = chi({v(rng), v(rng), v(rng)});
    auto h = twisted_cohomology(p, c);
    EXPECT_EQ(static_cast<long>(h.h0) - static_cast<long>(h.h1) +
                  static_cast<long>(h.h2_presentation),
              1 - 3 + 2);
  }
}

TEST(Properties, PuncturedLineMatchesAomotoAtTrivialCharacter) {
  // the complement of d points is free of rank d; at the trivial character
  // h1 equals dim A^1 and the Aomoto complex at zero gives the same number
  for (std::size_t d = 1; d <= 5; ++d) {
    std::vector<Form> pts;
    for (std::size_t k = 0; k < d; ++k) pts.push_back({Q(1), Q(static_cast<long>(k))});
    Arrangement arr(1, false, pts);
    auto os = os_algebra(arr);
    Vector<Q> zero(os.algebra.dim(1), Q(0));
    auto h = cohomology_dims(aomoto_complex(os.algebra, zero)).h;
    std::vector<long> ones(d, 1);
    EXPECT_EQ(twisted_h1(Presentation(d, {}), chi(ones)), h[1]);
    // nontrivial characters drop to d - 1, the generic Aomoto value
    std::vector<long> gen(d, 2);
    Vector<Q> alpha(os.algebra.dim(1), Q(1));
    EXPECT_EQ(twisted_h1(Presentation(d, {}), chi(gen)),
              cohomology_dims(aomoto_complex(os.algebra, alpha)).h[1]);
  }
}

TEST(Fox, GaussianCharacter) {
  using G = GaussianRational;
  // i^4 = 1; d(x^4)/dx = 1 + i + i^2 + i^3 = 0
  Character<G> c({G(Q(0), Q(1))});
  Presentation cyclic(1, {{1, 1, 1, 1}});
  EXPECT_TRUE(fox_jacobian(cyclic, c).is_zero());
  auto h = twisted_cohomology(cyclic, c);
  EXPECT_EQ(h.h0, 0u);
  EXPECT_EQ(h.h1, 0u);
  EXPECT_EQ(h.h2_presentation, 1u);
}

}  // namespace
}  // namespace jumploci
