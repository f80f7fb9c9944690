#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "paramkit/error.hpp"

namespace paramkit {

/// Coefficient fields supported by the polynomial layer. A field object is a
/// small value (it may carry a modulus); elements are plain values and all
/// arithmetic goes through the field.
template <class F>
concept CoefficientField =
    std::equality_comparable<F> &&
    requires(const F& f, const typename F::Element& a, const mpz_class& n) {
      { f.characteristic() } -> std::same_as<std::uint32_t>;
      { f.zero() } -> std::same_as<typename F::Element>;
      { f.one() } -> std::same_as<typename F::Element>;
      { f.from_integer(n) } -> std::same_as<typename F::Element>;
      { f.from_int(long{}) } -> std::same_as<typename F::Element>;
      { f.is_zero(a) } -> std::same_as<bool>;
      { f.is_one(a) } -> std::same_as<bool>;
      { f.add(a, a) } -> std::same_as<typename F::Element>;
      { f.sub(a, a) } -> std::same_as<typename F::Element>;
      { f.mul(a, a) } -> std::same_as<typename F::Element>;
      { f.neg(a) } -> std::same_as<typename F::Element>;
      { f.inv(a) } -> std::same_as<typename F::Element>;
      { f.equal(a, a) } -> std::same_as<bool>;
      { f.format(a) } -> std::same_as<std::string>;
      { f.name() } -> std::same_as<std::string>;
    };

/// The rationals, backed by GMP.
class Rationals {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "QQ"; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_integer(const mpz_class& n) const { return Element(n); }
  Element from_int(long n) const { return Element(n); }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw Error(ErrorCode::ZeroDivisorQuery, "zero denominator");
    Element q(num, den);
    q.canonicalize();
    return q;
  }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw Error(ErrorCode::ZeroDivisorQuery, "inverse of zero");
    return Element(1) / a;
  }

  std::string format(const Element& a) const { return a.get_str(); }

  bool operator==(const Rationals&) const = default;
};

/// Z/p for a prime p < 2^31, elements stored as residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p)) {
      throw Error(ErrorCode::InvalidArgument,
                  "characteristic must be a prime below 2^31, got " + std::to_string(p));
    }
  }

  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(const mpz_class& n) const {
    mpz_class r = n % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
  }
  Element from_int(long n) const {
    long r = n % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    Element d = from_integer(den);
    if (d == 0) throw Error(ErrorCode::ZeroDivisorQuery, "denominator vanishes mod p");
    return mul(from_integer(num), inv(d));
  }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) throw Error(ErrorCode::ZeroDivisorQuery, "inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
  }

  // Symmetric representative, so that p-1 prints as -1.
  std::string format(Element a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }

  bool operator==(const PrimeField&) const = default;

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  std::uint32_t p_;
};

static_assert(CoefficientField<Rationals>);
static_assert(CoefficientField<PrimeField>);

}  // namespace paramkit
