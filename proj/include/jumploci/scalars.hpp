#pragma once

// Exact scalar fields: arbitrary-precision rationals, Gaussian rationals
// Q(i), and prime fields F_p with a runtime modulus p < 2^31.

#include <gmpxx.h>

#include <cctype>
#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "jumploci/error.hpp"

namespace jumploci {

enum class FieldKind { rational, gaussian, prime };

struct FieldTag {
  FieldKind kind = FieldKind::rational;
  std::uint32_t modulus = 0;  // only meaningful for FieldKind::prime

  friend bool operator==(const FieldTag&, const FieldTag&) = default;

  std::string name() const {
    switch (kind) {
      case FieldKind::rational: return "Q";
      case FieldKind::gaussian: return "Q(i)";
      case FieldKind::prime: return "F_" + std::to_string(modulus);
    }
    return "?";
  }
};

class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}  // NOLINT: integers embed
  Rational(long num, long den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  // Accepts "p" or "p/q" with an optional sign; rejects q = 0.
  static Rational parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto valid_int = [](std::string_view t, bool allow_sign) {
      if (t.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
      return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
      throw ParseError("malformed rational \"" + std::string(text) + "\"");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
      throw ParseError("rational \"" + std::string(text) +
                       "\" has zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    return Rational(mpq_class(1) / v_);
  }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw PreconditionError("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend auto operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

class GaussianRational {
 public:
  GaussianRational() = default;
  template <std::integral I>
  GaussianRational(I v) : re_(v) {}  // NOLINT
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    Rational n = norm();
    return {re_ / n, -im_ / n};
  }

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag = im_ == Rational(1)    ? "i"
                       : im_ == Rational(-1) ? "-i"
                                             : im_.str() + "i";
    if (re_.is_zero()) return imag;
    return re_.str() + (im_.sign() > 0 ? "+" : "") + imag;
  }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
  }
  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a,
                                    const GaussianRational& b) {
    return a /= b;
  }
  friend bool operator==(const GaussianRational&,
                         const GaussianRational&) = default;

 private:
  Rational re_, im_;
};

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d : {2u, 3u, 5u, 7u, 11u, 13u})
    if (n % d == 0) return n == d;
  // Deterministic Miller-Rabin for 32-bit inputs.
  auto pow_mod = [](std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    for (; e; e >>= 1, b = b * b % m)
      if (e & 1) r = r * b % m;
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2u, 7u, 61u}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = x * x % n;
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

class ModP {
 public:
  static constexpr std::uint32_t default_prime = 2147483629u;

  ModP() = default;
  ModP(long long v, std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31))
      throw PreconditionError("prime modulus must lie in [2, 2^31)");
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    r_ = static_cast<std::uint32_t>(r);
  }
  template <std::integral I>
  ModP(I v) : ModP(static_cast<long long>(v), default_prime) {}  // NOLINT

  static ModP from_rational(const Rational& q, std::uint32_t p) {
    mpz_class m(static_cast<unsigned long>(p));
    mpz_class num = q.numerator() % m;
    mpz_class den = q.denominator() % m;
    if (den == 0)
      throw PreconditionError("denominator of " + q.str() +
                              " vanishes mod " + std::to_string(p));
    ModP n(static_cast<long long>(num.get_si()), p);
    ModP d(static_cast<long long>(den.get_si()), p);
    return n / d;
  }

  std::uint32_t residue() const { return r_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return r_ == 0; }

  ModP inverse() const {
    if (r_ == 0) throw PreconditionError("inverse of zero");
    std::uint64_t r = 1, b = r_, e = p_ - 2;
    for (; e; e >>= 1, b = b * b % p_)
      if (e & 1) r = r * b % p_;
    return raw(static_cast<std::uint32_t>(r), p_);
  }

  std::string str() const { return std::to_string(r_); }

  ModP operator-() const { return raw(r_ == 0 ? 0 : p_ - r_, p_); }
  ModP& operator+=(const ModP& o) {
    same(o);
    std::uint64_t s = std::uint64_t(r_) + o.r_;
    r_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  ModP& operator-=(const ModP& o) { return *this += -o; }
  ModP& operator*=(const ModP& o) {
    same(o);
    r_ = static_cast<std::uint32_t>(std::uint64_t(r_) * o.r_ % p_);
    return *this;
  }
  ModP& operator/=(const ModP& o) {
    same(o);
    return *this *= o.inverse();
  }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) {
    return a.p_ == b.p_ && a.r_ == b.r_;
  }

 private:
  static ModP raw(std::uint32_t r, std::uint32_t p) {
    ModP m;
    m.r_ = r;
    m.p_ = p;
    return m;
  }
  void same(const ModP& o) const {
    if (o.p_ != p_)
      throw FieldMismatch("arithmetic between F_" + std::to_string(p_) +
                          " and F_" + std::to_string(o.p_));
  }

  std::uint32_t r_ = 0;
  std::uint32_t p_ = default_prime;
};

// ---------------------------------------------------------------------------
// Uniform field interface, found by ADL.

inline FieldTag field_tag(const Rational&) { return {FieldKind::rational, 0}; }
inline FieldTag field_tag(const GaussianRational&) {
  return {FieldKind::gaussian, 0};
}
inline FieldTag field_tag(const ModP& x) {
  return {FieldKind::prime, x.modulus()};
}

inline Rational from_integer(long v, const Rational&) { return Rational(v); }
inline GaussianRational from_integer(long v, const GaussianRational&) {
  return GaussianRational(v);
}
inline ModP from_integer(long v, const ModP& proto) {
  return ModP(v, proto.modulus());
}

inline Rational from_rational(const Rational& q, const Rational&) { return q; }
inline GaussianRational from_rational(const Rational& q,
                                      const GaussianRational&) {
  return GaussianRational(q);
}
inline ModP from_rational(const Rational& q, const ModP& proto) {
  return ModP::from_rational(q, proto.modulus());
}

inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const GaussianRational& x) { return x.str(); }
inline std::string to_string(const ModP& x) { return x.str(); }

// Runtime-tagged scalar. Arithmetic between different alternatives throws
// FieldMismatch; this is the currency of file formats and the CLI.
class FieldValue {
 public:
  using Variant = std::variant<Rational, GaussianRational, ModP>;

  FieldValue() = default;
  FieldValue(Rational v) : v_(std::move(v)) {}          // NOLINT
  FieldValue(GaussianRational v) : v_(std::move(v)) {}  // NOLINT
  FieldValue(ModP v) : v_(v) {}                         // NOLINT
  template <std::integral I>
  FieldValue(I v) : v_(Rational(v)) {}  // NOLINT

  const Variant& variant() const { return v_; }
  FieldTag tag() const {
    return std::visit([](const auto& x) { return field_tag(x); }, v_);
  }
  bool is_zero() const {
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
  }
  FieldValue inverse() const {
    return std::visit([](const auto& x) { return FieldValue(x.inverse()); },
                      v_);
  }
  std::string str() const {
    return std::visit([](const auto& x) { return x.str(); }, v_);
  }

  FieldValue operator-() const {
    return std::visit([](const auto& x) { return FieldValue(-x); }, v_);
  }
  FieldValue& operator+=(const FieldValue& o) {
    return *this = binary(o, [](const auto& a, const auto& b) { return a + b; });
  }
  FieldValue& operator-=(const FieldValue& o) {
    return *this = binary(o, [](const auto& a, const auto& b) { return a - b; });
  }
  FieldValue& operator*=(const FieldValue& o) {
    return *this = binary(o, [](const auto& a, const auto& b) { return a * b; });
  }
  FieldValue& operator/=(const FieldValue& o) {
    return *this = binary(o, [](const auto& a, const auto& b) { return a / b; });
  }
  friend FieldValue operator+(FieldValue a, const FieldValue& b) {
    return a += b;
  }
  friend FieldValue operator-(FieldValue a, const FieldValue& b) {
    return a -= b;
  }
  friend FieldValue operator*(FieldValue a, const FieldValue& b) {
    return a *= b;
  }
  friend FieldValue operator/(FieldValue a, const FieldValue& b) {
    return a /= b;
  }
  friend bool operator==(const FieldValue& a, const FieldValue& b) {
    return a.v_ == b.v_;
  }

 private:
  template <class Op>
  FieldValue binary(const FieldValue& o, Op op) const {
    return std::visit(
        [&](const auto& a, const auto& b) -> FieldValue {
          using A = std::decay_t<decltype(a)>;
          using B = std::decay_t<decltype(b)>;
          if constexpr (std::is_same_v<A, B>) {
            return FieldValue(op(a, b));
          } else {
            throw FieldMismatch("arithmetic between " + field_tag(a).name() +
                                " and " + field_tag(b).name());
          }
        },
        v_, o.v_);
  }

  Variant v_;
};

inline FieldTag field_tag(const FieldValue& x) { return x.tag(); }
inline FieldValue from_integer(long v, const FieldValue& proto) {
  return std::visit([v](const auto& p) { return FieldValue(from_integer(v, p)); },
                    proto.variant());
}
inline FieldValue from_rational(const Rational& q, const FieldValue& proto) {
  return std::visit(
      [&q](const auto& p) { return FieldValue(from_rational(q, p)); },
      proto.variant());
}
inline std::string to_string(const FieldValue& x) { return x.str(); }

template <class F>
concept Field = std::regular<F> && requires(const F a, const F b, long n,
                                            const Rational q) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::convertible_to<F>;
  { field_tag(a) } -> std::same_as<FieldTag>;
  { from_integer(n, a) } -> std::convertible_to<F>;
  { from_rational(q, a) } -> std::convertible_to<F>;
};

template <Field F>
F zero_like(const F& proto) {
  return from_integer(0, proto);
}
template <Field F>
F one_like(const F& proto) {
  return from_integer(1, proto);
}

// Uniform random element: a residue for F_p, otherwise a rational with
// numerator in [-bound, bound] and denominator in [1, den_bound].
template <Field F, class Rng>
F random_scalar(Rng& rng, const F& proto, long bound = 20, long den_bound = 1) {
  if constexpr (std::is_same_v<F, ModP>) {
    std::uniform_int_distribution<std::uint32_t> dist(0, proto.modulus() - 1);
    return ModP(static_cast<long long>(dist(rng)), proto.modulus());
  } else {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    long n = num(rng);
    long d = den(rng);
    return from_rational(Rational(n, d), proto);
  }
}

}  // namespace jumploci
