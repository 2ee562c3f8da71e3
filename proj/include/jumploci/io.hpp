#pragma once

// JSON reading and writing for the library's input and report types. Parse
// errors carry the JSON path of the offending entry.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "jumploci/arrangement.hpp"
#include "jumploci/error.hpp"
#include "jumploci/exterior.hpp"
#include "jumploci/foxcalc.hpp"
#include "jumploci/scalars.hpp"
#include "jumploci/torus.hpp"

namespace jumploci::io {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

inline const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

inline long integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

inline std::size_t count(const Json& j, const std::string& path) {
  long v = integer(j, path);
  if (v < 0) fail(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

inline std::string idx(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

}  // namespace detail

// Rationals are "p/q" strings; bare JSON integers are accepted as well.
inline Rational parse_rational(const Json& j, const std::string& path = "$") {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) detail::fail(path, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    detail::fail(path, e.what());
  }
}

inline Json to_json(const Rational& q) { return q.str(); }

inline GaussianRational parse_gaussian(const Json& j, const std::string& path = "$") {
  if (!j.is_object()) return GaussianRational(parse_rational(j, path), Rational(0));
  return GaussianRational(parse_rational(detail::field(j, "re", path), path + ".re"),
                          parse_rational(detail::field(j, "im", path), path + ".im"));
}

inline Json to_json(const GaussianRational& z) {
  return Json{{"re", z.re().str()}, {"im", z.im().str()}};
}

inline Json to_json(const ModP& x) { return std::to_string(x.residue()); }

inline Json to_json(const FieldValue& x) {
  return std::visit([](const auto& v) { return to_json(v); }, x.variant());
}

inline std::vector<Rational> parse_rational_list(const Json& j,
                                                 const std::string& path = "$") {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < detail::array(j, path).size(); ++i)
    out.push_back(parse_rational(j[i], detail::idx(path, i)));
  return out;
}

// Comma separated command line lists such as "1,-1,1/2".
inline std::vector<Rational> parse_rational_csv(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const ParseError& e) {
      throw ParseError("entry " + std::to_string(i) + ": " + e.what());
    }
    ++i;
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

template <class T>
Json to_json(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline Arrangement parse_arrangement(const Json& j, const std::string& path = "$") {
  using namespace detail;
  std::size_t ambient = count(field(j, "ambient", path), path + ".ambient");
  const Json& central = field(j, "central", path);
  if (!central.is_boolean()) fail(path + ".central", "expected a boolean");
  const Json& forms = array(field(j, "forms", path), path + ".forms");
  std::vector<Form> fs;
  for (std::size_t i = 0; i < forms.size(); ++i)
    fs.push_back(parse_rational_list(forms[i], idx(path + ".forms", i)));
  try {
    return Arrangement(ambient, central.get<bool>(), std::move(fs));
  } catch (const PreconditionError& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

inline Json to_json(const Arrangement& a) {
  Json forms = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) forms.push_back(to_json(a.form(i)));
  return Json{{"ambient", a.ambient()}, {"central", a.central()}, {"forms", forms}};
}

inline LaurentPolynomial parse_laurent(const Json& j, std::size_t rank,
                                       const std::string& path) {
  using namespace detail;
  LaurentPolynomial p(rank);
  for (std::size_t t = 0; t < array(j, path).size(); ++t) {
    const std::string tp = idx(path, t);
    const Json& mono = array(field(j[t], "monomial", tp), tp + ".monomial");
    if (mono.size() != rank)
      fail(tp + ".monomial", "has length " + std::to_string(mono.size()) +
                                 ", expected " + std::to_string(rank));
    Exponent e;
    for (std::size_t k = 0; k < mono.size(); ++k)
      e.push_back(integer(mono[k], idx(tp + ".monomial", k)));
    p.add_term(e, parse_rational(field(j[t], "coeff", tp), tp + ".coeff"));
  }
  return p;
}

// Either a bare list of polynomials (rank read off the first monomial) or
// {"rank": r, "equations": [...]}.
inline LaurentSystem parse_laurent_system(const Json& j, const std::string& path = "$") {
  using namespace detail;
  LaurentSystem sys;
  const Json* eqs = &j;
  std::string eq_path = path;
  if (j.is_object()) {
    sys.rank = count(field(j, "rank", path), path + ".rank");
    eqs = &field(j, "equations", path);
    eq_path = path + ".equations";
  } else {
    array(j, path);
    if (j.empty() || !j[0].is_array() || j[0].empty())
      fail(path, "cannot infer the torus rank from an empty system");
    sys.rank = array(field(j[0][0], "monomial", path + "[0][0]"),
                     path + "[0][0].monomial").size();
  }
  for (std::size_t i = 0; i < array(*eqs, eq_path).size(); ++i)
    sys.equations.push_back(parse_laurent((*eqs)[i], sys.rank, idx(eq_path, i)));
  return sys;
}

inline Json to_json(const LaurentPolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back(Json{{"monomial", e}, {"coeff", c.str()}});
  return out;
}

inline Json to_json(const LaurentSystem& s) {
  Json eqs = Json::array();
  for (const auto& p : s.equations) eqs.push_back(to_json(p));
  return Json{{"rank", s.rank}, {"equations", eqs}};
}

inline Presentation parse_presentation(const Json& j, const std::string& path = "$") {
  using namespace detail;
  std::size_t g = count(field(j, "generators", path), path + ".generators");
  std::vector<Word> rels;
  const Json& rs = array(field(j, "relators", path), path + ".relators");
  for (std::size_t r = 0; r < rs.size(); ++r) {
    const std::string rp = idx(path + ".relators", r);
    Word w;
    for (std::size_t k = 0; k < array(rs[r], rp).size(); ++k)
      w.push_back(static_cast<int>(integer(rs[r][k], idx(rp, k))));
    rels.push_back(std::move(w));
  }
  try {
    return Presentation(g, std::move(rels));
  } catch (const PreconditionError& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

inline Json to_json(const Presentation& p) {
  return Json{{"generators", p.generators()}, {"relators", p.relators()}};
}

// Subsets may be listed in any order; the coefficient picks up the sign of
// the sorting permutation.
template <class ParseScalar>
auto parse_multivector(const Json& j, std::size_t n, ParseScalar parse_scalar,
                       const std::string& path = "$") {
  using namespace detail;
  using F = decltype(parse_scalar(Json(), std::string()));
  Multivector<F> v(n);
  for (std::size_t t = 0; t < array(j, path).size(); ++t) {
    const std::string tp = idx(path, t);
    const Json& subset = array(field(j[t], "subset", tp), tp + ".subset");
    std::vector<long> s;
    for (std::size_t k = 0; k < subset.size(); ++k) {
      long x = integer(subset[k], idx(tp + ".subset", k));
      if (x < 0 || static_cast<std::size_t>(x) >= n)
        fail(idx(tp + ".subset", k), "index outside 0.." + std::to_string(n - 1));
      s.push_back(x);
    }
    bool odd = false;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (s[a] == s[b]) fail(tp + ".subset", "repeated index");
        if (s[a] > s[b]) odd = !odd;
      }
    Mask m = 0;
    for (long x : s) m |= Mask(1) << x;
    F c = parse_scalar(field(j[t], "coeff", tp), tp + ".coeff");
    if (odd) c = zero_like(c) - c;
    v.add_term(m, c);
  }
  return v;
}

template <Field F>
Json to_json(const Multivector<F>& v) {
  Json out = Json::array();
  for (const auto& [m, c] : v.terms()) {
    Json subset = Json::array();
    for (std::size_t i = 0; i < 64; ++i)
      if ((m >> i) & 1) subset.push_back(i);
    out.push_back(Json{{"subset", subset}, {"coeff", to_json(c)}});
  }
  return out;
}

// Parse with nlohmann's byte-position diagnostics, prefixed by the source.
inline Json parse_text(const std::string& text, const std::string& source = "input") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

inline Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

// FNV-1a over bytes; used as the input digest in reports.
inline std::uint64_t fnv1a(std::string_view bytes,
                           std::uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex(std::uint64_t x) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, x >>= 4) s[static_cast<std::size_t>(i)] = digits[x & 15];
  return s;
}

}  // namespace jumploci::io
