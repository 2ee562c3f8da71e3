#pragma once

// The complex (A, alpha ^) on a graded algebra, its cohomology, and the
// pointwise resonance predicates built on it.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/error.hpp"
#include "jumploci/exterior.hpp"
#include "jumploci/matrix.hpp"

namespace jumploci {

template <Field F>
bool is_zero_vector(const Vector<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const F& x) { return x.is_zero(); });
}

template <Field F>
class AomotoComplex {
 public:
  // `alpha` in quotient coordinates of A^1.
  AomotoComplex(const GradedAlgebra<F>& a, Vector<F> alpha)
      : algebra_(&a), alpha_(std::move(alpha)) {
    if (a.top_degree() < 1 || alpha_.size() != a.dim(1))
      throw PreconditionError("alpha must have " + std::to_string(a.dim(1)) +
                              " coordinates in degree one");
    for (std::size_t d = 0; d < a.top_degree(); ++d)
      diff_.push_back(a.left_multiplication(alpha_, d));
    for (std::size_t d = 0; d + 1 < diff_.size(); ++d) {
      auto comp = diff_[d + 1] * diff_[d];
      for (std::size_t i = 0; i < comp.rows(); ++i)
        for (std::size_t j = 0; j < comp.cols(); ++j)
          if (!comp(i, j).is_zero())
            throw std::logic_error("alpha ^ alpha ^ is not zero in degree " +
                                   std::to_string(d));
    }
  }

  const GradedAlgebra<F>& algebra() const { return *algebra_; }
  const Vector<F>& alpha() const { return alpha_; }
  // d^j : A^j -> A^{j+1} for j < top degree.
  const std::vector<Matrix<F>>& differentials() const { return diff_; }
  const Matrix<F>& differential(std::size_t j) const { return diff_.at(j); }

 private:
  const GradedAlgebra<F>* algebra_;
  Vector<F> alpha_;
  std::vector<Matrix<F>> diff_;
};

template <Field F>
AomotoComplex<F> aomoto_complex(const GradedAlgebra<F>& a, Vector<F> alpha) {
  return AomotoComplex<F>(a, std::move(alpha));
}

template <Field F>
AomotoComplex<F> aomoto_complex(const GradedAlgebra<F>& a,
                                const Multivector<F>& alpha) {
  auto deg = alpha.degree();
  if (!alpha.is_zero() && deg != std::optional<std::size_t>(1))
    throw PreconditionError("alpha is not of degree one");
  return AomotoComplex<F>(a, a.project(alpha, 1));
}

struct ResonanceReport {
  std::vector<std::size_t> h;  // h^j for j = 0..top (A^{top+1} taken as 0)
  long euler = 0;
  std::size_t degree = 0;      // queried j
  std::size_t depth = 0;       // queried k
  bool member = false;         // h^j >= k
};

template <Field F>
long algebra_euler(const GradedAlgebra<F>& a) {
  long e = 0;
  for (std::size_t d = 0; d <= a.top_degree(); ++d)
    e += (d % 2 == 0 ? 1 : -1) * static_cast<long>(a.dim(d));
  return e;
}

template <Field F>
ResonanceReport cohomology_dims(const AomotoComplex<F>& c) {
  const auto& a = c.algebra();
  const std::size_t top = a.top_degree();
  std::vector<std::size_t> ranks(top + 1, 0);  // rank of d^j
  for (std::size_t j = 0; j < top; ++j) ranks[j] = rank(c.differential(j));
  ResonanceReport r;
  for (std::size_t j = 0; j <= top; ++j) {
    std::size_t kernel = a.dim(j) - ranks[j];
    std::size_t image = j == 0 ? 0 : ranks[j - 1];
    r.h.push_back(kernel - image);
    r.euler += (j % 2 == 0 ? 1 : -1) * static_cast<long>(r.h.back());
  }
  return r;
}

template <Field F>
ResonanceReport resonance_membership(const GradedAlgebra<F>& a,
                                     const Vector<F>& alpha, std::size_t j,
                                     std::size_t k) {
  if (j > a.top_degree())
    throw PreconditionError("degree " + std::to_string(j) +
                            " exceeds the top degree " +
                            std::to_string(a.top_degree()));
  auto r = cohomology_dims(aomoto_complex(a, alpha));
  r.degree = j;
  r.depth = k;
  r.member = r.h[j] >= k;
  return r;
}

struct GenericDims {
  std::vector<std::size_t> generic;     // minimum h^j over the samples
  std::vector<std::size_t> exceedances; // samples with h^j above the minimum
  std::size_t trials = 0;
};

// Samples alpha = sum c_i basis_i with independent uniform c_i. Over a large
// prime field a sample lands on a proper subvariety with probability at most
// deg / p per trial.
template <Field F, class Rng>
GenericDims generic_dims_sample(const GradedAlgebra<F>& a,
                                const std::vector<Vector<F>>& basis,
                                std::size_t trials, Rng& rng) {
  if (trials == 0) throw PreconditionError("need at least one trial");
  if (basis.empty() || span_dimension(basis, a.dim(1), a.zero()) == 0)
    throw PreconditionError("sampling subspace is zero");
  std::vector<std::vector<std::size_t>> all;
  for (std::size_t t = 0; t < trials; ++t) {
    Vector<F> alpha(a.dim(1), a.zero());
    for (const auto& b : basis) {
      F c = random_scalar(rng, a.zero(), 1000);
      for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] += c * b[i];
    }
    all.push_back(cohomology_dims(aomoto_complex(a, alpha)).h);
  }
  GenericDims g;
  g.trials = trials;
  g.generic = all.front();
  for (const auto& h : all)
    for (std::size_t j = 0; j < h.size(); ++j)
      g.generic[j] = std::min(g.generic[j], h[j]);
  g.exceedances.assign(g.generic.size(), 0);
  for (const auto& h : all)
    for (std::size_t j = 0; j < h.size(); ++j)
      if (h[j] > g.generic[j]) ++g.exceedances[j];
  return g;
}

struct IsotropyReport {
  bool isotropic = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

template <Field F>
IsotropyReport isotropic_check(const GradedAlgebra<F>& a,
                               const std::vector<Vector<F>>& basis) {
  for (const auto& v : basis)
    if (v.size() != a.dim(1))
      throw PreconditionError("isotropy basis vector not in degree one");
  IsotropyReport r;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!is_zero_vector(a.multiply(1, basis[i], 1, basis[j]))) {
        r.isotropic = false;
        r.witness = {i, j};
        return r;
      }
  return r;
}

template <Field F>
bool in_span(const std::vector<Vector<F>>& basis, const Vector<F>& v,
             const F& zero) {
  auto with = basis;
  with.push_back(v);
  return span_dimension(with, v.size(), zero) ==
         span_dimension(basis, v.size(), zero);
}

// Kernel dimension of the linear map `m` restricted to span(basis).
template <Field F>
std::size_t restricted_kernel_dim(const Matrix<F>& m,
                                  const std::vector<Vector<F>>& basis) {
  if (basis.empty()) return 0;
  Matrix<F> sub(m.rows(), basis.size(), m.zero());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    auto col = m.apply(basis[c]);
    for (std::size_t r = 0; r < m.rows(); ++r) sub(r, c) = col[r];
  }
  return basis.size() - rank(sub);
}

struct LogResonanceReport {
  bool member = false;
  std::size_t h1 = 0;       // dim H^1 of the top-filtration subcomplex
  bool zero_alpha = false;  // alpha = 0: non-member by convention
};

template <Field F>
LogResonanceReport log_resonance_membership(const GradedAlgebra<F>& a,
                                            const Vector<F>& alpha) {
  if (a.top_degree() < 2)
    throw PreconditionError("log resonance needs the algebra up to degree 2");
  auto f1 = hodge_filtration_subspace(a, 1, 1);
  if (alpha.size() != a.dim(1) || !in_span(f1, alpha, a.zero()))
    throw PreconditionError(
        "alpha is not in filtration level F^1 of degree one");
  LogResonanceReport r;
  if (is_zero_vector(alpha)) {
    r.zero_alpha = true;
    r.h1 = f1.size();
    return r;
  }
  auto ker = restricted_kernel_dim(a.left_multiplication(alpha, 1), f1);
  r.h1 = ker - 1;
  r.member = r.h1 > 0;
  return r;
}

struct E2Page {
  // gr[m][p] = dim Gr_F^p H_m, i.e. the (p, m - p) entry.
  std::vector<std::vector<std::size_t>> gr;
  std::vector<std::size_t> h;  // dim H_m
  std::size_t at(std::size_t p, std::size_t q) const {
    std::size_t m = p + q;
    if (m >= gr.size()) throw PreconditionError("E2 entry beyond computed range");
    return p < gr[m].size() ? gr[m][p] : 0;
  }
};

// Graded pieces of the filtration induced on H_m = K_m / I_m by the Hodge
// filtration, where K_m = ker(alpha ^) and I_m = im(alpha ^) in degree m.
template <Field F>
E2Page e2_page(const GradedAlgebra<F>& a, const Vector<F>& alpha,
               std::size_t max_degree = 2) {
  if (a.top_degree() < max_degree + 1)
    throw PreconditionError("E2 page up to degree " +
                            std::to_string(max_degree) +
                            " needs the algebra up to degree " +
                            std::to_string(max_degree + 1));
  if (alpha.size() != a.dim(1))
    throw PreconditionError("alpha is not in degree one");
  if (is_zero_vector(alpha)) throw PreconditionError("alpha must be nonzero");
  if (!in_span(hodge_filtration_subspace(a, 1, 1), alpha, a.zero()))
    throw PreconditionError("alpha is not in filtration level F^1");
  E2Page page;
  for (std::size_t m = 0; m <= max_degree; ++m) {
    auto kernel = rank_and_kernel(a.left_multiplication(alpha, m)).kernel;
    std::vector<Vector<F>> image;
    if (m > 0) {
      auto d = a.left_multiplication(alpha, m - 1);
      for (std::size_t c = 0; c < d.cols(); ++c) {
        Vector<F> col(d.rows(), a.zero());
        for (std::size_t r = 0; r < d.rows(); ++r) col[r] = d(r, c);
        image.push_back(std::move(col));
      }
    }
    const std::size_t dim = a.dim(m);
    auto level = [&](int p) {
      auto fp = hodge_filtration_subspace(a, p, m);
      return intersection_dimension(kernel, fp, dim, a.zero()) -
             intersection_dimension(image, fp, dim, a.zero());
    };
    std::vector<std::size_t> gr;
    for (std::size_t p = 0; p <= m; ++p)
      gr.push_back(level(static_cast<int>(p)) - level(static_cast<int>(p) + 1));
    page.h.push_back(level(0));
    page.gr.push_back(std::move(gr));
  }
  return page;
}

}  // namespace jumploci
