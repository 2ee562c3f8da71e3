#include <gtest/gtest.h>

#include <random>

#include "jumploci/matrix.hpp"
#include "jumploci/scalars.hpp"

namespace jumploci {
namespace {

using Mask = std::uint64_t;

std::vector<Mask> subsets_of_size_for_test(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask(1) << n); ++m)
    if (static_cast<std::size_t>(__builtin_popcountll(m)) == k) out.push_back(m);
  return out;
}

Matrix<Rational> rational_matrix(std::vector<std::vector<long>> rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix<Rational> m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rows[i][j]);
  return m;
}

// Cofactor expansion; only used as an oracle on small matrices.
Rational cofactor_det(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational det(0);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<Rational> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Rational term = m(0, j) * cofactor_det(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

TEST(Rational, LowestTermsAndPositiveDenominator) {
  Rational q(6, -4);
  EXPECT_EQ(q.str(), "-3/2");
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_EQ(Rational::parse(" 10/4 ").str(), "5/2");
  EXPECT_EQ(Rational::parse("-7").str(), "-7");
  EXPECT_EQ(Rational::parse("+3/1").str(), "3");
}

TEST(Rational, ParseRejectsZeroDenominatorAndJunk) {
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1/-2"), ParseError);
}

TEST(ModP, ResidueRangeAndInverse) {
  ModP a(-3, 7);
  EXPECT_EQ(a.residue(), 4u);
  EXPECT_EQ((a * a.inverse()).residue(), 1u);
  EXPECT_EQ(ModP::from_rational(Rational(1, 2), 7).residue(), 4u);
  EXPECT_THROW(ModP::from_rational(Rational(1, 7), 7), PreconditionError);
  EXPECT_THROW(ModP(1, 7) + ModP(1, 11), FieldMismatch);
  EXPECT_TRUE(is_prime_u32(ModP::default_prime));
  EXPECT_FALSE(is_prime_u32(2147483647u - 2));
}

TEST(GaussianRational, Arithmetic) {
  GaussianRational i = GaussianRational::i();
  EXPECT_EQ(i * i, GaussianRational(-1));
  GaussianRational z(Rational(1, 2), Rational(-3));
  EXPECT_EQ(z * z.inverse(), GaussianRational(1));
  EXPECT_EQ(z.str(), "1/2-3i");
}

TEST(FieldValue, MixedArithmeticThrows) {
  FieldValue a = Rational(1, 2);
  FieldValue b = ModP(3, 7);
  EXPECT_THROW(a + b, FieldMismatch);
  EXPECT_EQ((a + a).str(), "1");
}

TEST(RankKernel, IdentityOverQ) {
  auto rk = rank_and_kernel(Matrix<Rational>::identity(2));
  EXPECT_EQ(rk.rank, 2u);
  EXPECT_TRUE(rk.kernel.empty());
}

TEST(RankKernel, ZeroMatrix) {
  auto rk = rank_and_kernel(Matrix<Rational>(3, 4));
  EXPECT_EQ(rk.rank, 0u);
  EXPECT_EQ(rk.kernel.size(), 4u);
}

TEST(RankKernel, AllOnesRowOverF7) {
  Matrix<ModP> m(1, 3, ModP(0, 7));
  for (std::size_t j = 0; j < 3; ++j) m(0, j) = ModP(1, 7);
  auto rk = rank_and_kernel(m);
  EXPECT_EQ(rk.rank, 1u);
  ASSERT_EQ(rk.kernel.size(), 2u);
  // Free columns 1 and 2: (-1, 1, 0) and (-1, 0, 1), i.e. 6 mod 7.
  EXPECT_EQ(rk.kernel[0], (Vector<ModP>{ModP(6, 7), ModP(1, 7), ModP(0, 7)}));
  EXPECT_EQ(rk.kernel[1], (Vector<ModP>{ModP(6, 7), ModP(0, 7), ModP(1, 7)}));
}

TEST(RankKernel, MixedFieldEntriesRejected) {
  Matrix<FieldValue> m(1, 2, FieldValue(Rational(0)));
  m(0, 0) = FieldValue(Rational(1));
  m(0, 1) = FieldValue(ModP(1, 7));
  EXPECT_THROW(rank_and_kernel(m), FieldMismatch);
}

TEST(SolveLinear, Examples) {
  auto id = Matrix<Rational>::identity(2);
  Vector<Rational> rhs{Rational(1), Rational(2)};
  EXPECT_EQ(*solve_linear(id, std::span<const Rational>(rhs)), rhs);

  auto row = rational_matrix({{1, 1}});
  Vector<Rational> zero{Rational(0)};
  EXPECT_EQ(*solve_linear(row, std::span<const Rational>(zero)),
            (Vector<Rational>{Rational(0), Rational(0)}));

  auto twice = rational_matrix({{1, 1}, {1, 1}});
  Vector<Rational> bad{Rational(1), Rational(2)};
  EXPECT_FALSE(solve_linear(twice, std::span<const Rational>(bad)).has_value());

  EXPECT_THROW(solve_linear(twice, std::span<const Rational>(zero)),
               PreconditionError);
}

TEST(Properties, RankOfTransposeOverFp) {
  std::mt19937_64 rng(1);
  const ModP proto(0, 101);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + rng() % 6;
    Matrix<ModP> m(n, n, proto);
    std::size_t planted = rng() % (n + 1);
    // Low-rank plant: rows beyond `planted` are combinations of earlier ones.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = i < planted ? random_scalar(rng, proto) : proto;
    for (std::size_t i = planted; i < n && planted > 0; ++i) {
      ModP c = random_scalar(rng, proto);
      for (std::size_t j = 0; j < n; ++j) m(i, j) = c * m(rng() % planted, j);
    }
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Properties, RankOverQBoundsRankModP) {
  std::mt19937_64 rng(2);
  const std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
  for (int trial = 0; trial < 40; ++trial) {
    Matrix<Rational> m(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        m(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
    std::size_t r = rank(m);
    // A nonzero r x r minor certifies the rank mod every p not dividing it.
    Rational minor_det(0);
    if (r > 0) {
      for (Mask rows : subsets_of_size_for_test(3, r)) {
        for (Mask cols : subsets_of_size_for_test(4, r)) {
          Matrix<Rational> sub(r, r);
          std::size_t a = 0;
          for (std::size_t i = 0; i < 3; ++i) {
            if (!(rows >> i & 1)) continue;
            std::size_t b = 0;
            for (std::size_t j = 0; j < 4; ++j)
              if (cols >> j & 1) sub(a, b++) = m(i, j);
            ++a;
          }
          Rational d = cofactor_det(sub);
          if (!d.is_zero()) {
            minor_det = d;
            break;
          }
        }
        if (!minor_det.is_zero()) break;
      }
    }
    for (auto p : primes) {
      Matrix<ModP> mp(3, 4, ModP(0, p));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          mp(i, j) = ModP::from_rational(m(i, j), p);
      std::size_t rp = rank(mp);
      EXPECT_LE(rp, r);
      if (r > 0 && ModP::from_rational(minor_det, p).residue() != 0)
        EXPECT_EQ(rp, r);
    }
  }
}

TEST(Properties, BareissAgreesWithPlainGaussJordan) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    Matrix<Rational> m(rows, cols);
    Matrix<FieldValue> generic(rows, cols, FieldValue(Rational(0)));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        Rational q = (rng() % 3 == 0)
                         ? Rational(0)
                         : Rational(static_cast<long>(rng() % 9) - 4,
                                    static_cast<long>(1 + rng() % 3));
        m(i, j) = q;
        generic(i, j) = FieldValue(q);
      }
    auto a = rank_and_kernel(m);
    auto b = rank_and_kernel(generic);
    ASSERT_EQ(a.rank, b.rank);
    EXPECT_EQ(a.rank + a.kernel.size(), cols);
    for (std::size_t k = 0; k < a.kernel.size(); ++k) {
      for (std::size_t j = 0; j < cols; ++j)
        EXPECT_EQ(FieldValue(a.kernel[k][j]), b.kernel[k][j]);
      auto image = m.apply(std::span<const Rational>(a.kernel[k]));
      for (const auto& x : image) EXPECT_TRUE(x.is_zero());
    }
  }
}

TEST(Properties, DeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + rng() % 5;
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = Rational(static_cast<long>(rng() % 11) - 5,
                           static_cast<long>(1 + rng() % 4));
    EXPECT_EQ(determinant(m), cofactor_det(m));
    Matrix<FieldValue> g(n, n, FieldValue(Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = FieldValue(m(i, j));
    EXPECT_EQ(determinant(g), FieldValue(cofactor_det(m)));
  }
}

template <class F>
void check_field_laws(std::mt19937_64& rng, const F& proto) {
  for (int trial = 0; trial < 200; ++trial) {
    F a = random_scalar(rng, proto, 30, 7);
    F b = random_scalar(rng, proto, 30, 7);
    F c = random_scalar(rng, proto, 30, 7);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), one_like(proto));
  }
}

TEST(Properties, FieldLaws) {
  std::mt19937_64 rng(5);
  check_field_laws(rng, Rational(0));
  check_field_laws(rng, ModP(0, 2147483629u));
  check_field_laws(rng, ModP(0, 13));
  for (int trial = 0; trial < 200; ++trial) {
    GaussianRational a(random_scalar(rng, Rational(0), 9, 5),
                       random_scalar(rng, Rational(0), 9, 5));
    GaussianRational b(random_scalar(rng, Rational(0), 9, 5),
                       random_scalar(rng, Rational(0), 9, 5));
    GaussianRational c(random_scalar(rng, Rational(0), 9, 5),
                       random_scalar(rng, Rational(0), 9, 5));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), GaussianRational(1));
  }
}

}  // namespace
}  // namespace jumploci
