#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include "paramkit/error.hpp"

namespace paramkit {

/// Upper bound on ambient variables, including internal tag variables used
/// for elimination.
inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with a cached total degree.
class Monomial {
 public:
  using Exponent = std::uint32_t;
  static constexpr std::uint64_t kMaxExponent = (std::uint64_t{1} << 31) - 1;

  Monomial() = default;

  explicit Monomial(std::size_t nvars) : size_(check_size(nvars)) {}

  Monomial(std::initializer_list<Exponent> exps) : size_(check_size(exps.size())) {
    std::size_t i = 0;
    for (Exponent e : exps) set(i++, e);
  }

  static Monomial from_exponents(std::span<const Exponent> exps) {
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
  }

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent e = 1) {
    Monomial m(nvars);
    m.set(index, e);
    return m;
  }

  std::size_t size() const { return size_; }
  std::uint64_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }

  void set(std::size_t i, Exponent e) {
    if (e > kMaxExponent) throw Error(ErrorCode::ExponentOverflow, "exponent overflow");
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }

  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < size_; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < size_; ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }

  // Support (the set of variables with positive exponent) as a bitmask.
  std::uint32_t support() const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < size_; ++i) {
      if (exps_[i] != 0) mask |= (1u << i);
    }
    return mask;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) {
      r.set(i, checked(std::uint64_t{a.exps_[i]} + b.exps_[i]));
    }
    return r;
  }

  // Requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const {
    Monomial r(size_);
    for (std::size_t i = 0; i < size_; ++i) r.set(i, exps_[i] - divisor.exps_[i]);
    return r;
  }

  Monomial lcm(const Monomial& other) const {
    Monomial r(size_);
    for (std::size_t i = 0; i < size_; ++i) r.set(i, std::max(exps_[i], other.exps_[i]));
    return r;
  }

  Monomial pow(std::uint64_t k) const {
    Monomial r(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      if (exps_[i] != 0 && k > kMaxExponent / exps_[i]) {
        throw Error(ErrorCode::ExponentOverflow, "exponent overflow in power");
      }
      r.set(i, static_cast<Exponent>(exps_[i] * k));
    }
    return r;
  }

  bool operator==(const Monomial& other) const {
    return size_ == other.size_ && degree_ == other.degree_ && exps_ == other.exps_;
  }

 private:
  static std::uint8_t check_size(std::size_t n) {
    if (n > kMaxVariables) {
      throw Error(ErrorCode::InvalidArgument,
                  "at most " + std::to_string(kMaxVariables) + " variables are supported");
    }
    return static_cast<std::uint8_t>(n);
  }
  static Exponent checked(std::uint64_t e) {
    if (e > kMaxExponent) throw Error(ErrorCode::ExponentOverflow, "exponent overflow");
    return static_cast<Exponent>(e);
  }

  std::array<Exponent, kMaxVariables> exps_{};
  std::uint64_t degree_ = 0;
  std::uint8_t size_ = 0;
};

/// Monomial orders. Variables are ranked by declaration order (x_0 > x_1 > ...).
/// The elimination order compares the first `block` variables first (grevlex on
/// that block) and breaks ties with grevlex on the remaining variables.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::elimination, block);
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  std::string name() const {
    switch (kind_) {
      case Kind::grevlex: return "grevlex";
      case Kind::lex: return "lex";
      case Kind::elimination: return "elim" + std::to_string(block_);
    }
    return "?";
  }

  // No length check; callers inside a ring always pass equal lengths.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::grevlex: return grevlex_range(a, b, 0, a.size(), a.degree(), b.degree());
      case Kind::lex:
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] != b[i]) return a[i] <=> b[i];
        }
        return std::strong_ordering::equal;
      case Kind::elimination: {
        const std::size_t k = std::min(block_, a.size());
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = 0; i < k; ++i) {
          da += a[i];
          db += b[i];
        }
        auto c = grevlex_range(a, b, 0, k, da, db);
        if (c != 0) return c;
        return grevlex_range(a, b, k, a.size(), a.degree() - da, b.degree() - db);
      }
    }
    return std::strong_ordering::equal;
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  static std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b,
                                            std::size_t lo, std::size_t hi,
                                            std::uint64_t da, std::uint64_t db) {
    if (da != db) return da <=> db;
    for (std::size_t i = hi; i > lo; --i) {
      if (a[i - 1] != b[i - 1]) return b[i - 1] <=> a[i - 1];
    }
    return std::strong_ordering::equal;
  }

  Kind kind_ = Kind::grevlex;
  std::size_t block_ = 0;
};

inline std::strong_ordering monomial_compare(const MonomialOrder& order, const Monomial& a,
                                             const Monomial& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "monomials have different lengths");
  }
  return order.compare(a, b);
}

}  // namespace paramkit
