#pragma once

// Dense matrices over an exact field with rank, kernel, and solve.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/error.hpp"
#include "jumploci/scalars.hpp"

namespace jumploci {

template <Field F>
using Vector = std::vector<F>;

template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, F zero = F{})
      : rows_(rows), cols_(cols), zero_(zero_like(zero)),
        data_(rows * cols, zero_) {}

  static Matrix identity(std::size_t n, F zero = F{}) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(m.zero_);
    return m;
  }
  static Matrix from_rows(const std::vector<Vector<F>>& rows,
                          std::size_t cols, F zero = F{}) {
    Matrix m(rows.size(), cols, zero);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw PreconditionError("ragged row " + std::to_string(i));
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& zero() const { return zero_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<F> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const F> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  FieldTag field() const { return field_tag(zero_); }

  // Throws FieldMismatch unless every entry lives in the matrix's field.
  void check_uniform_field() const {
    FieldTag t = field();
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!(field_tag(data_[k]) == t))
        throw FieldMismatch("entry (" + std::to_string(k / cols_) + "," +
                            std::to_string(k % cols_) + ") lies in " +
                            field_tag(data_[k]).name() + ", matrix field is " +
                            t.name());
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const F& x) { return x.is_zero(); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vector<F> apply(std::span<const F> v) const {
    if (v.size() != cols_) throw PreconditionError("dimension mismatch");
    Vector<F> out(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero())
          out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("dimension mismatch");
    Matrix c(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  F zero_{};
  std::vector<F> data_;
};

template <Field F>
struct Echelon {
  Matrix<F> reduced;                // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

namespace detail {

// Fraction-free forward elimination over Z (Bareiss) for a rational matrix:
// rows are first scaled to integers. Returns the echelon rows with the same
// row space and their pivot columns.
inline std::pair<std::vector<std::vector<mpz_class>>, std::vector<std::size_t>>
bareiss_echelon(const Matrix<Rational>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              m(i, j).denominator().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
  }
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return {std::move(a), std::move(pivots)};
}

}  // namespace detail

// Reduced row echelon form. Over Q the forward pass is fraction-free.
template <Field F>
Echelon<F> rref(const Matrix<F>& m) {
  m.check_uniform_field();
  const std::size_t rows = m.rows(), cols = m.cols();
  Echelon<F> e{Matrix<F>(rows, cols, m.zero()), {}};
  Matrix<F>& a = e.reduced;
  if constexpr (std::is_same_v<F, Rational>) {
    auto [ech, piv] = detail::bareiss_echelon(m);
    for (std::size_t i = 0; i < ech.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = Rational(ech[i][j]);
    e.pivots = std::move(piv);
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
      std::size_t c = e.pivots[r];
      F inv = a(r, c).inverse();
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(r, j) *= inv;
      for (std::size_t i = 0; i < r; ++i) {
        if (a(i, c).is_zero()) continue;
        F f = a(i, c);
        for (std::size_t j = c; j < cols; ++j)
          if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
  } else {
    a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && a(p, c).is_zero()) ++p;
      if (p == rows) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      F inv = a(r, c).inverse();
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(r, j) *= inv;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || a(i, c).is_zero()) continue;
        F f = a(i, c);
        for (std::size_t j = c; j < cols; ++j)
          if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
      e.pivots.push_back(c);
      ++r;
    }
  }
  return e;
}

template <Field F>
struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vector<F>> kernel;  // one vector per free column, ascending
};

// Kernel vectors come from the free columns of the reduced echelon form:
// the vector for free column f has a 1 at f, zeros at the other free
// columns, and minus the pivot rows' entries elsewhere.
template <Field F>
RankKernel<F> rank_and_kernel(const Matrix<F>& m) {
  Echelon<F> e = rref(m);
  RankKernel<F> out;
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector<F> v(m.cols(), m.zero());
    v[f] = one_like(m.zero());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -e.reduced(r, f);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

// Solution with every free variable set to zero, or nullopt if inconsistent.
template <Field F>
std::optional<Vector<F>> solve_linear(const Matrix<F>& m,
                                      std::span<const F> rhs) {
  if (rhs.size() != m.rows())
    throw PreconditionError("right-hand side has length " +
                            std::to_string(rhs.size()) + ", expected " +
                            std::to_string(m.rows()));
  Matrix<F> aug(m.rows(), m.cols() + 1, m.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  Echelon<F> e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector<F> x(m.cols(), m.zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

template <Field F>
F determinant(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of non-square");
  const std::size_t n = m.rows();
  if constexpr (std::is_same_v<F, Rational>) {
    // Bareiss on the integer-scaled matrix; undo the row scalings.
    Matrix<Rational> s = m;
    Rational scale(1);
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class l = 1;
      for (std::size_t j = 0; j < n; ++j)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                m(i, j).denominator().get_mpz_t());
      for (std::size_t j = 0; j < n; ++j) s(i, j) = m(i, j) * Rational(l);
      scale *= Rational(l);
    }
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = s(i, j).numerator();
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      if (p != k) {
        std::swap(a[p], a[k]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
          mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(),
                       prev.get_mpz_t());
        }
        a[i][k] = 0;
      }
      prev = a[k][k];
    }
    if (n == 0) return Rational(1);
    return Rational(mpz_class(a[n - 1][n - 1] * sign)) / scale;
  } else {
    Matrix<F> a = m;
    F det = one_like(m.zero());
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return m.zero();
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
        det = -det;
      }
      det *= a(k, k);
      F inv = a(k, k).inverse();
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k).is_zero()) continue;
        F f = a(i, k) * inv;
        for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      }
    }
    return det;
  }
}

// Dimension of the span of the given vectors (all of length `dim`).
template <Field F>
std::size_t span_dimension(const std::vector<Vector<F>>& vs, std::size_t dim,
                           const F& zero) {
  if (vs.empty()) return 0;
  return rank(Matrix<F>::from_rows(vs, dim, zero));
}

// Dimension of the intersection of two spans.
template <Field F>
std::size_t intersection_dimension(const std::vector<Vector<F>>& u,
                                   const std::vector<Vector<F>>& v,
                                   std::size_t dim, const F& zero) {
  std::vector<Vector<F>> both = u;
  both.insert(both.end(), v.begin(), v.end());
  return span_dimension(u, dim, zero) + span_dimension(v, dim, zero) -
         span_dimension(both, dim, zero);
}

// Reduced echelon basis of a span (deterministic representative).
template <Field F>
std::vector<Vector<F>> echelon_basis(const std::vector<Vector<F>>& vs,
                                     std::size_t dim, const F& zero) {
  std::vector<Vector<F>> out;
  if (vs.empty()) return out;
  Echelon<F> e = rref(Matrix<F>::from_rows(vs, dim, zero));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    auto row = e.reduced.row(r);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

}  // namespace jumploci
