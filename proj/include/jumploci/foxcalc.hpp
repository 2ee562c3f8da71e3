#pragma once

// Free differential calculus on finite presentations: Fox Jacobians at rank
// one characters and the twisted first cohomology of the presentation
// complex.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/error.hpp"
#include "jumploci/matrix.hpp"
#include "jumploci/scalars.hpp"

namespace jumploci {

// A word is a sequence of nonzero generator indices: +k for x_k, -k for its
// inverse (1-based).
using Word = std::vector<int>;

inline Word freely_reduce(const Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) out.pop_back();
    else out.push_back(letter);
  }
  return out;
}

class Presentation {
 public:
  Presentation(std::size_t generators, std::vector<Word> relators)
      : generators_(generators) {
    for (std::size_t r = 0; r < relators.size(); ++r) {
      for (int letter : relators[r])
        if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > generators)
          throw PreconditionError("relator " + std::to_string(r) +
                                  " uses letter " + std::to_string(letter) +
                                  " outside 1.." + std::to_string(generators));
      relators_.push_back(freely_reduce(relators[r]));
    }
  }

  std::size_t generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

 private:
  std::size_t generators_;
  std::vector<Word> relators_;
};

template <Field F>
class Character {
 public:
  explicit Character(std::vector<F> values) : values_(std::move(values)) {
    if (values_.empty()) throw PreconditionError("character needs at least one value");
    for (std::size_t j = 0; j < values_.size(); ++j) {
      if (values_[j].is_zero())
        throw PreconditionError("character value " + std::to_string(j) + " is zero");
      if (!(field_tag(values_[j]) == field_tag(values_[0])))
        throw FieldMismatch("character values from different fields");
    }
  }

  std::size_t size() const { return values_.size(); }
  const F& operator[](std::size_t j) const { return values_.at(j); }
  F zero() const { return zero_like(values_[0]); }
  F one() const { return one_like(values_[0]); }
  bool trivial() const {
    return std::all_of(values_.begin(), values_.end(),
                       [&](const F& v) { return v == one(); });
  }

  F letter(int l) const {
    const F& v = values_.at(static_cast<std::size_t>(std::abs(l)) - 1);
    return l > 0 ? v : v.inverse();
  }
  F word(const Word& w) const {
    F acc = one();
    for (int l : w) acc *= letter(l);
    return acc;
  }

 private:
  std::vector<F> values_;
};

namespace detail {

template <Field F>
void check_character(const Presentation& p, const Character<F>& chi) {
  if (chi.size() != p.generators())
    throw PreconditionError("character has " + std::to_string(chi.size()) +
                            " values for " + std::to_string(p.generators()) +
                            " generators");
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    if (chi.word(p.relators()[r]) != chi.one())
      throw PreconditionError("character is not trivial on relator " +
                              std::to_string(r));
}

}  // namespace detail

// Fox derivative d w / d x_j pushed through the character.
template <Field F>
F fox_derivative(const Word& w, std::size_t j, const Character<F>& chi) {
  F acc = chi.zero();
  F prefix = chi.one();
  const int gen = static_cast<int>(j) + 1;
  for (int l : w) {
    if (l == gen) acc += prefix;
    if (l == -gen) acc -= prefix * chi.letter(l);
    prefix *= chi.letter(l);
  }
  return acc;
}

// Rows indexed by relators, columns by generators.
template <Field F>
Matrix<F> fox_jacobian(const Presentation& p, const Character<F>& chi) {
  detail::check_character(p, chi);
  Matrix<F> m(p.relators().size(), p.generators(), chi.zero());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (std::size_t j = 0; j < p.generators(); ++j)
      m(r, j) = fox_derivative(p.relators()[r], j, chi);
  return m;
}

struct TwistedCohomology {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  std::size_t h2_presentation = 0;  // of the 2-complex, not of the space
};

// Cochains C^0 = F, C^1 = F^g, C^2 = F^r with coboundaries
// x -> ((chi(x_j) - 1) x)_j and the Fox Jacobian.
template <Field F>
TwistedCohomology twisted_cohomology(const Presentation& p, const Character<F>& chi) {
  auto jac = fox_jacobian(p, chi);
  Matrix<F> d0(p.generators(), 1, chi.zero());
  for (std::size_t j = 0; j < p.generators(); ++j) d0(j, 0) = chi[j] - chi.one();
  std::size_t r0 = rank(d0);
  std::size_t r1 = p.relators().empty() ? 0 : rank(jac);
  TwistedCohomology h;
  h.h0 = 1 - r0;
  h.h1 = p.generators() - r1 - r0;
  h.h2_presentation = p.relators().size() - r1;
  return h;
}

template <Field F>
std::size_t twisted_h1(const Presentation& p, const Character<F>& chi) {
  return twisted_cohomology(p, chi).h1;
}

}  // namespace jumploci
