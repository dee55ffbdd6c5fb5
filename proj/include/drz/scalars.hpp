#pragma once

// Exact scalar kernels: arbitrary-precision rationals and integers (GMP),
// prime fields GF(p) and modular rings Z_n on 64-bit words.  No floating
// point anywhere; every operation is exact.

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "errors.hpp"

namespace drz {

enum class DomainKind { Rationals, PrimeField, Modular, Integers };

namespace modarith {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) + b) % m);
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul(r, a, m);
    a = mul(a, a, m);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Extended Euclid; returns x with a*x = 1 (mod m) when gcd(a, m) = 1.
inline std::optional<std::uint64_t> inverse(std::uint64_t a, std::uint64_t m) {
  __int128 r0 = static_cast<__int128>(m), r1 = static_cast<__int128>(a % m);
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1;
    __int128 s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) return std::nullopt;
  if (s0 < 0) s0 += m;
  return static_cast<std::uint64_t>(s0);
}

}  // namespace modarith

// Deterministic Miller-Rabin, exact for every 64-bit input.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is a proven witness set for all n < 3.3e24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = modarith::pow(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = modarith::mul(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Which exact scalar structure is in force.  Validated at construction:
// PrimeField moduli must pass the deterministic primality check.
class Domain {
 public:
  static Domain rationals() { return Domain(DomainKind::Rationals, 0); }
  static Domain integers() { return Domain(DomainKind::Integers, 0); }
  static Domain prime_field(std::uint64_t p) {
    if (!is_prime_u64(p))
      throw InvalidDomain("GF modulus " + std::to_string(p) + " is not prime");
    return Domain(DomainKind::PrimeField, p);
  }
  static Domain modular(std::uint64_t n) {
    if (n < 2)
      throw InvalidDomain("Zn modulus must be at least 2, got " +
                          std::to_string(n));
    return Domain(DomainKind::Modular, n);
  }

  DomainKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_field() const {
    return kind_ == DomainKind::Rationals || kind_ == DomainKind::PrimeField;
  }
  // Characteristic; 0 for Q and Z.
  std::uint64_t characteristic() const {
    return kind_ == DomainKind::PrimeField ? modulus_ : 0;
  }

  bool operator==(const Domain&) const = default;

  // CLI tag: Q | GF:<p> | Zn:<n> | Z.
  std::string tag() const {
    switch (kind_) {
      case DomainKind::Rationals: return "Q";
      case DomainKind::PrimeField: return "GF:" + std::to_string(modulus_);
      case DomainKind::Modular: return "Zn:" + std::to_string(modulus_);
      case DomainKind::Integers: return "Z";
    }
    return "?";
  }
  // Matrix-file header tag: Q | GF <p> | Zn <n> | Z.
  std::string file_tag() const {
    switch (kind_) {
      case DomainKind::Rationals: return "Q";
      case DomainKind::PrimeField: return "GF " + std::to_string(modulus_);
      case DomainKind::Modular: return "Zn " + std::to_string(modulus_);
      case DomainKind::Integers: return "Z";
    }
    return "?";
  }

  static std::optional<Domain> from_tag(const std::string& tag);

 private:
  Domain(DomainKind k, std::uint64_t m) : kind_(k), modulus_(m) {}
  DomainKind kind_;
  std::uint64_t modulus_;
};

// ---------------------------------------------------------------------------
// Scalar types.  All values are immutable once constructed and carry their
// domain, so mixing moduli is caught at the first arithmetic operation.
// ---------------------------------------------------------------------------

namespace detail {

inline mpz_class parse_mpz(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("bad integer literal '" + s + "'");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw ParseError("bad integer literal '" + s + "'");
  return mpz_class(s, 10);
}

inline std::uint64_t parse_residue(const std::string& s, std::uint64_t m,
                                   const char* what) {
  mpz_class z = parse_mpz(s);
  if (z < 0)
    throw ParseError(std::string(what) + " literal must be nonnegative, got '" +
                     s + "'");
  mpz_class r = z % mpz_class(std::to_string(m));
  return std::stoull(r.get_str());
}

}  // namespace detail

// Arbitrary-precision rational, always canonical: positive denominator,
// coprime numerator/denominator, zero represented as 0/1.  mpq arithmetic
// preserves canonical form.
class Rational {
 public:
  Rational() : v_(0) {}
  explicit Rational(long n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational zero(const Domain&) { return Rational(); }
  static Rational one(const Domain&) { return Rational(1); }
  Domain domain() const { return Domain::rationals(); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_unit() const { return v_ != 0; }
  bool is_nilpotent() const { return v_ == 0; }

  std::optional<Rational> try_inverse() const {
    if (v_ == 0) return std::nullopt;
    return Rational(mpq_class(1 / v_));
  }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  bool operator==(const Rational& o) const { return v_ == o.v_; }

  std::string str() const { return v_.get_str(); }

  static Rational parse(const std::string& s, const Domain&) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
      return Rational(detail::parse_mpz(s), mpz_class(1));
    std::string den = s.substr(slash + 1);
    if (den.empty() || den[0] == '-' || den[0] == '+')
      throw ParseError("rational denominator must be a positive integer in '" +
                       s + "'");
    mpz_class d = detail::parse_mpz(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(detail::parse_mpz(s.substr(0, slash)), d);
  }

 private:
  mpq_class v_;
};

// Element of GF(p), reduced representative in [0, p).
class Fp {
 public:
  Fp() : v_(0), p_(2) {}
  Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

  static Fp zero(const Domain& d) { return Fp(0, d.modulus()); }
  static Fp one(const Domain& d) { return Fp(1 % d.modulus(), d.modulus()); }
  Domain domain() const { return Domain::prime_field(p_); }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_unit() const { return v_ != 0; }
  bool is_nilpotent() const { return v_ == 0; }

  std::optional<Fp> try_inverse() const {
    if (v_ == 0) return std::nullopt;
    return Fp(*modarith::inverse(v_, p_), p_);
  }

  Fp operator+(const Fp& o) const { check(o); return Fp(modarith::add(v_, o.v_, p_), p_); }
  Fp operator-(const Fp& o) const { check(o); return Fp(modarith::sub(v_, o.v_, p_), p_); }
  Fp operator*(const Fp& o) const { check(o); return Fp(modarith::mul(v_, o.v_, p_), p_); }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }

  std::string str() const { return std::to_string(v_); }

  static Fp parse(const std::string& s, const Domain& d) {
    return Fp(detail::parse_residue(s, d.modulus(), "GF"), d.modulus());
  }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_)
      throw DomainMismatch("GF(" + std::to_string(p_) + ") vs GF(" +
                           std::to_string(o.p_) + ")");
  }
  std::uint64_t v_, p_;
};

// Element of Z_n, composite moduli allowed.
class Zn {
 public:
  Zn() : v_(0), n_(2) {}
  Zn(std::uint64_t v, std::uint64_t n) : v_(v % n), n_(n) {}

  static Zn zero(const Domain& d) { return Zn(0, d.modulus()); }
  static Zn one(const Domain& d) { return Zn(1 % d.modulus(), d.modulus()); }
  Domain domain() const { return Domain::modular(n_); }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return n_; }

  bool is_zero() const { return v_ == 0; }
  bool is_unit() const { return modarith::gcd(v_ % n_, n_) == 1; }

  // x is nilpotent mod n iff every prime factor of n divides x.  Strip
  // common factors via gcd iteration; x is nilpotent iff nothing but
  // x-coprime cofactor 1 remains.
  bool is_nilpotent() const {
    std::uint64_t m = n_;
    while (m > 1) {
      std::uint64_t g = modarith::gcd(v_ % m, m);
      if (g == 1) return false;
      m /= g;
    }
    return true;
  }

  std::optional<Zn> try_inverse() const {
    auto inv = modarith::inverse(v_, n_);
    if (!inv) return std::nullopt;
    return Zn(*inv, n_);
  }

  Zn operator+(const Zn& o) const { check(o); return Zn(modarith::add(v_, o.v_, n_), n_); }
  Zn operator-(const Zn& o) const { check(o); return Zn(modarith::sub(v_, o.v_, n_), n_); }
  Zn operator*(const Zn& o) const { check(o); return Zn(modarith::mul(v_, o.v_, n_), n_); }
  Zn operator-() const { return Zn(v_ == 0 ? 0 : n_ - v_, n_); }
  bool operator==(const Zn& o) const { return n_ == o.n_ && v_ == o.v_; }

  std::string str() const { return std::to_string(v_); }

  static Zn parse(const std::string& s, const Domain& d) {
    return Zn(detail::parse_residue(s, d.modulus(), "Zn"), d.modulus());
  }

 private:
  void check(const Zn& o) const {
    if (n_ != o.n_)
      throw DomainMismatch("Z_" + std::to_string(n_) + " vs Z_" +
                           std::to_string(o.n_));
  }
  std::uint64_t v_, n_;
};

// Arbitrary-precision integer (the ring Z).
class Int {
 public:
  Int() : v_(0) {}
  explicit Int(long v) : v_(v) {}
  explicit Int(mpz_class v) : v_(std::move(v)) {}

  static Int zero(const Domain&) { return Int(); }
  static Int one(const Domain&) { return Int(1); }
  Domain domain() const { return Domain::integers(); }

  const mpz_class& value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_unit() const { return v_ == 1 || v_ == -1; }
  bool is_nilpotent() const { return v_ == 0; }

  std::optional<Int> try_inverse() const {
    if (!is_unit()) return std::nullopt;
    return *this;
  }

  Int operator+(const Int& o) const { return Int(mpz_class(v_ + o.v_)); }
  Int operator-(const Int& o) const { return Int(mpz_class(v_ - o.v_)); }
  Int operator*(const Int& o) const { return Int(mpz_class(v_ * o.v_)); }
  Int operator-() const { return Int(mpz_class(-v_)); }
  bool operator==(const Int& o) const { return v_ == o.v_; }

  std::string str() const { return v_.get_str(); }

  static Int parse(const std::string& s, const Domain&) {
    return Int(detail::parse_mpz(s));
  }

 private:
  mpz_class v_;
};

template <class S>
concept Scalar = requires(const S& a, const S& b, const Domain& d,
                          const std::string& text) {
  { S::zero(d) } -> std::same_as<S>;
  { S::one(d) } -> std::same_as<S>;
  { S::parse(text, d) } -> std::same_as<S>;
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_unit() } -> std::convertible_to<bool>;
  { a.is_nilpotent() } -> std::convertible_to<bool>;
  { a.try_inverse() } -> std::same_as<std::optional<S>>;
  { a.domain() } -> std::same_as<Domain>;
  { a.str() } -> std::same_as<std::string>;
};

// Elimination and Drazin inversion need exact division, i.e. a field.
template <class S>
inline constexpr bool is_field_scalar_v = false;
template <>
inline constexpr bool is_field_scalar_v<Rational> = true;
template <>
inline constexpr bool is_field_scalar_v<Fp> = true;

template <class S>
concept FieldScalar = Scalar<S> && is_field_scalar_v<S>;

// ---------------------------------------------------------------------------
// Free operations on scalars.
// ---------------------------------------------------------------------------

inline Rational normalize_rational(const mpz_class& num, const mpz_class& den) {
  return Rational(num, den);  // canonicalizes; throws ZeroDenominator
}

template <Scalar S>
S invert_scalar(const S& x) {
  auto inv = x.try_inverse();
  if (!inv) throw NotAUnit(x.str() + " is not a unit in " + x.domain().tag());
  return *inv;
}

template <Scalar S>
bool is_nilpotent_scalar(const S& x) {
  return x.is_nilpotent();
}

inline std::optional<Domain> Domain::from_tag(const std::string& tag) {
  try {
    if (tag == "Q") return rationals();
    if (tag == "Z") return integers();
    if (tag.rfind("GF:", 0) == 0)
      return prime_field(std::stoull(tag.substr(3)));
    if (tag.rfind("Zn:", 0) == 0) return modular(std::stoull(tag.substr(3)));
  } catch (const InvalidDomain&) {
    throw;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace drz
