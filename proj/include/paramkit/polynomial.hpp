#pragma once

#include <algorithm>
#include <cctype>
#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paramkit/error.hpp"
#include "paramkit/field.hpp"
#include "paramkit/monomial.hpp"

namespace paramkit {

/// Ambient polynomial ring k[vars] with a fixed monomial order.
template <CoefficientField F>
class PolyRing {
 public:
  PolyRing(F field, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::grevlex())
      : field_(std::move(field)), variables_(std::move(variables)), order_(order) {
    if (variables_.size() > kMaxVariables) {
      throw Error(ErrorCode::InvalidArgument,
                  "at most " + std::to_string(kMaxVariables) + " variables are supported");
    }
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (variables_[i].empty()) throw Error(ErrorCode::InvalidArgument, "empty variable name");
      for (std::size_t j = 0; j < i; ++j) {
        if (variables_[i] == variables_[j]) {
          throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + variables_[i] + "'");
        }
      }
    }
  }

  const F& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (variables_[i] == name) return i;
    }
    return std::nullopt;
  }

  std::shared_ptr<const PolyRing> with_order(MonomialOrder order) const {
    return std::make_shared<const PolyRing>(field_, variables_, order);
  }

  bool operator==(const PolyRing& o) const {
    return field_ == o.field_ && order_ == o.order_ && variables_ == o.variables_;
  }

 private:
  F field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(F field, std::vector<std::string> variables,
                     MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const PolyRing<F>>(std::move(field), std::move(variables), order);
}

/// Sparse polynomial. Terms are kept strictly ascending in the ring's order,
/// so the leading term is the last one; zero coefficients are never stored.
template <CoefficientField F>
class Polynomial {
 public:
  using Element = typename F::Element;
  struct Term {
    Monomial monomial;
    Element coef;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<F> ring, Element c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({Monomial(p.ring_->nvars()), std::move(c)});
    return p;
  }
  template <std::integral I>
  static Polynomial constant(RingPtr<F> ring, I c) {
    Element e = ring->field().from_int(static_cast<long>(c));
    return constant(std::move(ring), std::move(e));
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t index) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->nvars(), index), ring->field().one()});
    return p;
  }
  static Polynomial term(RingPtr<F> ring, Monomial m, Element c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  // Terms already strictly ascending with nonzero coefficients.
  static Polynomial from_ascending(RingPtr<F> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  // Terms in any order, possibly with repeats and zeros.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const auto& ord = p.ring_->order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return ord.compare(a.monomial, b.monomial) < 0;
    });
    const F& k = p.field();
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coef = k.add(p.terms_.back().coef, t.coef);
        if (k.is_zero(p.terms_.back().coef)) p.terms_.pop_back();
      } else if (!k.is_zero(t.coef)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  const Term& leading_term() const { return terms_.back(); }
  const Monomial& leading_monomial() const { return terms_.back().monomial; }
  const Element& leading_coef() const { return terms_.back().coef; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.front().monomial.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return t.monomial.degree() == d; });
  }

  // Removes and returns the leading term.
  Term pop_leading() {
    Term t = std::move(terms_.back());
    terms_.pop_back();
    return t;
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial, field().neg(t.coef)});
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_ring(a, b);
    return merge(a, b, a.field().one());
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_ring(a, b);
    return merge(a, b, a.field().neg(a.field().one()));
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& big = a.size() <= b.size() ? b : a;
    if (small.size() <= 4) {
      Polynomial acc(a.ring_);
      for (const auto& t : small.terms_) acc.add_mul_term(t.coef, t.monomial, big);
      return acc;
    }
    const F& k = a.field();
    std::vector<Term> all;
    all.reserve(small.size() * big.size());
    for (const auto& s : small.terms_) {
      for (const auto& t : big.terms_) all.push_back({s.monomial * t.monomial, k.mul(s.coef, t.coef)});
    }
    return from_terms(a.ring_, std::move(all));
  }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(const Element& c) const {
    const F& k = field();
    if (k.is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial, k.mul(t.coef, c)});
    return r;
  }

  Polynomial times_term(const Element& c, const Monomial& m) const {
    const F& k = field();
    if (k.is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, k.mul(t.coef, c)});
    return r;
  }

  Polynomial pow(std::uint64_t k) const {
    Polynomial result = constant(ring_, 1);
    if (k == 0) return result;
    if (is_zero()) return *this;
    if (size() == 1) {
      // monomial powers check exponent overflow directly
      Element c = field().one(), b = terms_[0].coef;
      for (std::uint64_t e = k; e != 0; e >>= 1) {
        if (e & 1) c = field().mul(c, b);
        b = field().mul(b, b);
      }
      return term(ring_, terms_[0].monomial.pow(k), c);
    }
    // overflow check on the top degree before expanding
    for (const auto& t : terms_) (void)t.monomial.pow(k);
    Polynomial base = *this;
    while (true) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k == 0) break;
      base = base * base;
    }
    return result;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading_coef()));
  }

  /// *this -= c * m * g. The workhorse of reduction.
  void sub_mul_term(const Element& c, const Monomial& m, const Polynomial& g) {
    add_mul_term(field().neg(c), m, g);
  }

  /// *this += c * m * g, as one ascending merge.
  void add_mul_term(const Element& c, const Monomial& m, const Polynomial& g) {
    const F& k = field();
    if (k.is_zero(c) || g.is_zero()) return;
    const auto& ord = ring_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    const std::size_t n = terms_.size(), mg = g.terms_.size();
    Monomial gm;
    bool have = false;
    while (i < n || j < mg) {
      if (j < mg && !have) {
        gm = g.terms_[j].monomial * m;
        have = true;
      }
      if (j >= mg) {
        out.push_back(std::move(terms_[i++]));
        continue;
      }
      if (i >= n) {
        out.push_back({gm, k.mul(c, g.terms_[j].coef)});
        ++j;
        have = false;
        continue;
      }
      auto cmp = ord.compare(terms_[i].monomial, gm);
      if (cmp < 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (cmp > 0) {
        out.push_back({gm, k.mul(c, g.terms_[j].coef)});
        ++j;
        have = false;
      } else {
        Element s = k.add(terms_[i].coef, k.mul(c, g.terms_[j].coef));
        if (!k.is_zero(s)) out.push_back({std::move(terms_[i].monomial), std::move(s)});
        ++i;
        ++j;
        have = false;
      }
    }
    terms_ = std::move(out);
  }

  /// Re-express in another ring over the same field. `var_map[i]` is the
  /// target index of source variable i.
  Polynomial map_to(const RingPtr<F>& target, std::span<const std::size_t> var_map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->nvars());
      for (std::size_t i = 0; i < t.monomial.size(); ++i) {
        if (t.monomial[i] != 0) m.set(var_map[i], t.monomial[i]);
      }
      out.push_back({std::move(m), t.coef});
    }
    return from_terms(target, std::move(out));
  }

  /// Same variables, possibly a different order.
  Polynomial reorder(const RingPtr<F>& target) const {
    if (target == ring_) return *this;
    if (target->nvars() != ring_->nvars()) {
      throw Error(ErrorCode::RingMismatch, "variable count differs");
    }
    return from_terms(target, terms_);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
          !a.field().equal(a.terms_[i].coef, b.terms_[i].coef)) {
        return false;
      }
    }
    return true;
  }

  static void check_ring(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ == b.ring_) return;
    if (!a.ring_ || !b.ring_ || !(*a.ring_ == *b.ring_)) {
      throw Error(ErrorCode::RingMismatch, "polynomials belong to different rings");
    }
  }

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, const Element& sign) {
    Polynomial r = a;
    r.add_mul_term(sign, Monomial(a.ring_->nvars()), b);
    return r;
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

}  // namespace paramkit
