#pragma once

// Named arrangements used by the acceptance suite and the tests, plus a
// broken-circuit counter that computes Betti numbers without building the
// Orlik-Solomon algebra.

#include <string>
#include <utility>
#include <vector>

#include "jumploci/arrangement.hpp"

namespace jumploci {


inline std::vector<Form> forms(std::vector<std::vector<long>> rows) {
  std::vector<Form> out;
  for (const auto& r : rows) {
    Form f;
    for (long x : r) f.push_back(Rational(x));
    out.push_back(std::move(f));
  }
  return out;
}

inline Arrangement central_arrangement(std::vector<std::vector<long>> rows) {
  std::size_t n = rows.at(0).size();
  return Arrangement(n, true, forms(std::move(rows)));
}

inline Arrangement affine_arrangement(std::vector<std::vector<long>> rows) {
  std::size_t n = rows.at(0).size() - 1;
  return Arrangement(n, false, forms(std::move(rows)));
}

// Line arrangements with at most six lines, affine and central.
inline std::vector<std::pair<std::string, Arrangement>> arrangement_library() {
  return {
      {"boolean plane", central_arrangement({{1, 0}, {0, 1}})},
      {"three generic lines", affine_arrangement({{1, 0, 0}, {0, 1, 0}, {1, 1, -1}})},
      {"three concurrent lines", affine_arrangement({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})},
      {"two parallel plus transversal", affine_arrangement({{1, 0, 0}, {1, 0, -1}, {0, 1, 0}})},
      {"four generic lines",
       affine_arrangement({{1, 0, 0}, {0, 1, 0}, {1, 1, -1}, {1, -1, -3}})},
      {"pencil of four", affine_arrangement({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}})},
      {"braid A3 deconed",
       affine_arrangement({{1, 0, 0}, {0, 1, 0}, {1, 0, -1}, {0, 1, -1}, {1, -1, 0}})},
      {"six lines with triple points",
       affine_arrangement({{1, 0, 0}, {0, 1, 0}, {1, 0, -1}, {0, 1, -1}, {1, -1, 0},
               {1, 1, -1}})},
      {"braid A3 central",
       central_arrangement({{1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {1, 0, 0}, {0, 1, 0},
                {0, 0, 1}})},
      {"near pencil in P2",
       central_arrangement({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}, {0, 0, 1}})},
      {"generic planes",
       central_arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}})},
      {"points on a line", affine_arrangement({{1, 0}, {1, -1}, {1, 2}})},
  };
}

// Six hyperplanes in C^4 whose resonance in degree two has two components
// meeting in a line.
inline Arrangement c4_arrangement() {
  return central_arrangement({{1, 0, 0, 0},
                              {0, 1, 0, 0},
                              {0, 0, 1, 0},
                              {0, 0, 0, 1},
                              {1, 1, 1, 0},
                              {0, 1, -1, 1}});
}

// Brute force over subsets: the number of independent k-sets containing no
// broken circuit (a circuit minus its least element) gives the k-th Betti
// number of the complement. Affine arrangements are handled through the
// cone, whose Poincare polynomial is (1 + t) times the affine one.
inline std::vector<std::size_t> broken_circuit_poincare(const Arrangement& arr) {
  std::vector<Form> cone;
  std::size_t n = arr.ambient() + (arr.central() ? 0 : 1);
  for (std::size_t j = 0; j < arr.size(); ++j) cone.push_back(arr.form(j));
  if (!arr.central()) {
    Form inf(n, Rational(0));
    inf.back() = Rational(1);
    cone.push_back(inf);
  }
  const std::size_t d = cone.size();
  auto rank = [&](Mask s) {
    std::vector<Vector<Rational>> rows;
    for (std::size_t j = 0; j < d; ++j)
      if (s >> j & 1) rows.push_back(cone[j]);
    return span_dimension(rows, n, Rational(0));
  };
  std::vector<Mask> broken;
  for (Mask s = 1; s < (Mask(1) << d); ++s) {
    auto k = static_cast<std::size_t>(__builtin_popcountll(s));
    if (rank(s) != k - 1) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < d; ++j)
      if ((s >> j & 1) && rank(s & ~(Mask(1) << j)) != k - 1) minimal = false;
    if (minimal) broken.push_back(s & (s - 1));
  }
  std::vector<std::size_t> p;
  for (Mask s = 0; s < (Mask(1) << d); ++s) {
    auto k = static_cast<std::size_t>(__builtin_popcountll(s));
    if (rank(s) != k) continue;
    bool nbc = true;
    for (Mask b : broken)
      if ((s & b) == b) nbc = false;
    if (!nbc) continue;
    if (p.size() <= k) p.resize(k + 1, 0);
    ++p[k];
  }
  if (arr.central()) return p;
  // divide by 1 + t
  std::vector<std::size_t> q(p.size() - 1, 0);
  long carry = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    long c = static_cast<long>(p[k]) - carry;
    q[k] = static_cast<std::size_t>(c);
    carry = c;
  }
  return q;
}

}  // namespace jumploci
