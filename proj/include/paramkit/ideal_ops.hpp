#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "paramkit/groebner.hpp"

namespace paramkit {

/// Ordered list of ring elements. Order matters for bracket powers and Koszul signs.
template <CoefficientField F>
class ElementSequence {
 public:
  ElementSequence() = default;
  ElementSequence(PresentationPtr<F> pres, std::vector<Polynomial<F>> entries)
      : pres_(std::move(pres)) {
    Ideal<F> carrier(pres_, {});
    for (auto& e : entries) entries_.push_back(carrier.adopt(e));
  }

  const PresentationPtr<F>& presentation() const { return pres_; }
  const std::vector<Polynomial<F>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Polynomial<F>& operator[](std::size_t i) const { return entries_[i]; }

  Ideal<F> ideal() const { return Ideal<F>(pres_, entries_); }

  /// x_1 * ... * x_n (1 for the empty sequence).
  Polynomial<F> product() const {
    Polynomial<F> p = pres_->constant(1);
    for (const auto& e : entries_) p = p * e;
    return p;
  }

  ElementSequence power(std::uint64_t t) const {
    std::vector<Polynomial<F>> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.pow(t));
    return ElementSequence(pres_, std::move(out));
  }

 private:
  PresentationPtr<F> pres_;
  std::vector<Polynomial<F>> entries_;
};

/// (x)^[t]: the ideal generated by the t-th powers of the entries, in order.
template <CoefficientField F>
struct BracketPower {
  ElementSequence<F> base;
  std::uint64_t exponent = 1;
  Ideal<F> ideal;
};

template <CoefficientField F>
BracketPower<F> bracket_power(const ElementSequence<F>& seq, std::uint64_t t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "bracket power exponent must be >= 1");
  return BracketPower<F>{seq, t, seq.power(t).ideal()};
}

/// Krull dimension of S/I with a maximal independent variable set.
struct DimensionReport {
  std::size_t dim = 0;
  std::vector<std::size_t> witness;  // variable indices
};

namespace detail {

// Ambient ring extended by one tag variable in front, under an elimination
// order for the tag.
template <CoefficientField F>
struct TagSpace {
  RingPtr<F> ring;
  std::vector<std::size_t> embed_map;

  explicit TagSpace(const PresentationPtr<F>& pres) {
    const auto& amb = pres->ambient();
    if (amb->nvars() + 1 > kMaxVariables) {
      throw Error(ErrorCode::InvalidArgument, "no room for an elimination variable");
    }
    std::vector<std::string> names{"_t"};
    for (const auto& v : amb->variables()) names.push_back(v);
    ring = make_ring(amb->field(), std::move(names), MonomialOrder::elimination(1));
    for (std::size_t i = 0; i < amb->nvars(); ++i) embed_map.push_back(i + 1);
  }

  Polynomial<F> embed(const Polynomial<F>& p) const { return p.map_to(ring, embed_map); }
  Polynomial<F> tag() const { return Polynomial<F>::variable(ring, 0); }
  Polynomial<F> one() const { return Polynomial<F>::constant(ring, 1); }

  // Keeps the tag-free part of a Groebner basis, mapped back to the ambient ring.
  std::vector<Polynomial<F>> eliminate(const std::vector<Polynomial<F>>& gens,
                                       const PresentationPtr<F>& pres) const {
    auto gb = buchberger(gens, ring, pres->budget());
    std::vector<Polynomial<F>> out;
    const auto& amb = pres->ambient();
    for (const auto& g : gb) {
      if (g.leading_monomial()[0] != 0) continue;
      std::vector<typename Polynomial<F>::Term> terms;
      for (const auto& t : g.terms()) {
        Monomial m(amb->nvars());
        for (std::size_t i = 0; i < amb->nvars(); ++i) m.set(i, t.monomial[i + 1]);
        terms.push_back({std::move(m), t.coef});
      }
      out.push_back(Polynomial<F>::from_terms(amb, std::move(terms)));
    }
    return out;
  }
};

template <CoefficientField F>
Polynomial<F> exact_quotient(Polynomial<F> h, const Polynomial<F>& f) {
  const F& k = f.field();
  Polynomial<F> q(f.ring());
  auto one = Polynomial<F>::constant(f.ring(), 1);
  while (!h.is_zero()) {
    if (!f.leading_monomial().divides(h.leading_monomial())) {
      throw Error(ErrorCode::InternalError, "inexact division in colon computation");
    }
    auto c = k.mul(h.leading_coef(), k.inv(f.leading_coef()));
    Monomial m = h.leading_monomial().quotient(f.leading_monomial());
    q.add_mul_term(c, m, one);
    h.sub_mul_term(c, m, f);
  }
  return q;
}

template <CoefficientField F>
std::vector<Polynomial<F>> with_quotient(const Ideal<F>& I) {
  return witness_generators(I);
}

}  // namespace detail

template <CoefficientField F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_presentation(a, b);
  std::vector<Polynomial<F>> g = a.gens();
  for (const auto& x : b.gens()) g.push_back(a.adopt(x));
  return Ideal<F>(a.presentation(), std::move(g));
}

template <CoefficientField F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_presentation(a, b);
  std::vector<Polynomial<F>> g;
  for (const auto& x : a.gens()) {
    for (const auto& y : b.gens()) g.push_back(x * a.adopt(y));
  }
  return Ideal<F>(a.presentation(), std::move(g));
}

/// f * I.
template <CoefficientField F>
Ideal<F> ideal_scale(const Ideal<F>& I, const Polynomial<F>& f) {
  std::vector<Polynomial<F>> g;
  Polynomial<F> ff = I.adopt(f);
  for (const auto& x : I.gens()) g.push_back(x * ff);
  return Ideal<F>(I.presentation(), std::move(g));
}

/// The ideal generated by all monomials of degree n (m^n).
template <CoefficientField F>
Ideal<F> maximal_power(const PresentationPtr<F>& pres, std::uint32_t n) {
  std::vector<Polynomial<F>> gens;
  const std::size_t nv = pres->nvars();
  Monomial m(nv);
  auto rec = [&](auto& self, std::size_t start, std::uint32_t left) -> void {
    if (left == 0) {
      gens.push_back(Polynomial<F>::term(pres->ambient(), m, pres->field().one()));
      return;
    }
    for (std::size_t i = start; i < nv; ++i) {
      m.set(i, m[i] + 1);
      self(self, i, left - 1);
      m.set(i, m[i] - 1);
    }
  };
  rec(rec, 0, n);
  return Ideal<F>(pres, std::move(gens));
}

/// I intersect K, via the tag-variable elimination of t*I + (1-t)*K.
template <CoefficientField F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& K) {
  check_same_presentation(I, K);
  const auto& pres = I.presentation();
  detail::TagSpace<F> ts(pres);
  std::vector<Polynomial<F>> gens;
  const auto t = ts.tag();
  const auto one_minus_t = ts.one() - t;
  for (const auto& g : detail::with_quotient(I)) gens.push_back(t * ts.embed(g));
  for (const auto& g : detail::with_quotient(K)) gens.push_back(one_minus_t * ts.embed(K.adopt(g)));
  return Ideal<F>(pres, ts.eliminate(gens, pres));
}

/// I : f = { g : g f in I } in S.
template <CoefficientField F>
Ideal<F> colon(const Ideal<F>& I, const Polynomial<F>& f) {
  const auto& pres = I.presentation();
  Polynomial<F> ff = I.adopt(f);
  if (is_zero_in(ff, pres)) throw Error(ErrorCode::ZeroDivisorQuery, "colon by the zero element");
  if (ff.is_constant()) return I;
  detail::TagSpace<F> ts(pres);
  std::vector<Polynomial<F>> gens;
  const auto t = ts.tag();
  for (const auto& g : detail::with_quotient(I)) gens.push_back(t * ts.embed(g));
  gens.push_back((ts.one() - t) * ts.embed(ff));
  std::vector<Polynomial<F>> quotients;
  for (auto& h : ts.eliminate(gens, pres)) quotients.push_back(detail::exact_quotient(std::move(h), ff));
  return Ideal<F>(pres, std::move(quotients));
}

/// I : K as the intersection of the element colons I : k.
template <CoefficientField F>
Ideal<F> colon(const Ideal<F>& I, const Ideal<F>& K) {
  check_same_presentation(I, K);
  std::optional<Ideal<F>> acc;
  for (const auto& k : K.gens()) {
    if (is_zero_in(k, I.presentation())) continue;
    Ideal<F> c = colon(I, k);
    acc = acc ? intersect(*acc, c) : c;
  }
  return acc ? *acc : Ideal<F>::unit(I.presentation());
}

/// I : f^infinity, via (I + J + (1 - t f)) eliminated.
template <CoefficientField F>
Ideal<F> saturate(const Ideal<F>& I, const Polynomial<F>& f) {
  const auto& pres = I.presentation();
  Polynomial<F> ff = I.adopt(f);
  if (is_zero_in(ff, pres)) throw Error(ErrorCode::ZeroDivisorQuery, "saturation by the zero element");
  detail::TagSpace<F> ts(pres);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : detail::with_quotient(I)) gens.push_back(ts.embed(g));
  gens.push_back(ts.one() - ts.tag() * ts.embed(ff));
  return Ideal<F>(pres, ts.eliminate(gens, pres));
}

/// f lies in the radical of I iff I : f^infinity is the unit ideal.
template <CoefficientField F>
bool radical_member(const Polynomial<F>& f, const Ideal<F>& I) {
  if (is_zero_in(I.adopt(f), I.presentation())) return true;
  return saturate(I, f).is_unit();
}

/// Independent variable sets modulo the leading-term ideal of I + J (grevlex),
/// searched depth-first in declaration order.
template <CoefficientField F>
DimensionReport dimension(const Ideal<F>& I) {
  if (I.is_unit()) throw Error(ErrorCode::EmptyVariety, "the ideal is the whole ring");
  auto gb = I.groebner_basis();
  std::vector<std::uint32_t> supports;
  for (const auto& g : *gb) supports.push_back(g.leading_monomial().support());
  const std::size_t n = I.presentation()->nvars();
  auto independent = [&](std::uint32_t mask) {
    for (auto s : supports) {
      if ((s & ~mask) == 0) return false;
    }
    return true;
  };
  std::uint32_t best = 0;
  std::size_t best_size = 0;
  auto dfs = [&](auto& self, std::size_t start, std::uint32_t mask, std::size_t size) -> void {
    if (size > best_size) {
      best_size = size;
      best = mask;
    }
    if (size + (n - start) <= best_size) return;
    for (std::size_t i = start; i < n; ++i) {
      const std::uint32_t next = mask | (1u << i);
      if (independent(next)) self(self, i + 1, next, size + 1);
    }
  };
  dfs(dfs, 0, 0, 0);
  DimensionReport rep;
  rep.dim = best_size;
  for (std::size_t i = 0; i < n; ++i) {
    if (best & (1u << i)) rep.witness.push_back(i);
  }
  return rep;
}

/// dim S, computed once per presentation.
template <CoefficientField F>
std::size_t ring_dimension(const PresentationPtr<F>& pres) {
  if (auto d = pres->cached_dimension()) return *d;
  const std::size_t d = dimension(Ideal<F>::zero(pres)).dim;
  pres->store_dimension(d);
  return d;
}

inline constexpr std::uint64_t kDefaultLengthCap = 1'000'000;

/// Vector-space dimension of S/I, by counting standard monomials.
template <CoefficientField F>
std::uint64_t length(const Ideal<F>& I, std::uint64_t cap = kDefaultLengthCap) {
  auto gb = I.groebner_basis();
  if (I.is_unit()) return 0;
  if (dimension(I).dim > 0) throw Error(ErrorCode::NotFiniteLength, "S/I has positive dimension");
  std::vector<Monomial> leads;
  for (const auto& g : *gb) leads.push_back(g.leading_monomial());
  const std::size_t n = I.presentation()->nvars();
  std::uint64_t count = 0;
  Monomial m(n);
  auto standard = [&](const Monomial& x) {
    for (const auto& l : leads) {
      if (l.divides(x)) return false;
    }
    return true;
  };
  // Each standard monomial is reached once, from its quotient by its last variable.
  auto rec = [&](auto& self, std::size_t last) -> void {
    if (++count > cap) throw Error(ErrorCode::BudgetExceeded, "standard monomial cap exceeded");
    for (std::size_t i = last; i < n; ++i) {
      m.set(i, m[i] + 1);
      if (standard(m)) self(self, i);
      m.set(i, m[i] - 1);
    }
  };
  rec(rec, 0);
  return count;
}

/// Socle ideal I : m.
template <CoefficientField F>
Ideal<F> socle(const Ideal<F>& I) {
  return colon(I, Ideal<F>::maximal(I.presentation()));
}

/// Length of I/K for K contained in I with I/K of finite length. Uses
/// lambda(I/K) = lambda(S/(K + m^N)) - lambda(S/(I + m^N)) once I meet m^N lies in K.
template <CoefficientField F>
std::uint64_t relative_length(const Ideal<F>& I, const Ideal<F>& K, std::uint32_t max_power = 64) {
  check_same_presentation(I, K);
  if (!ideal_contains(I, K)) throw Error(ErrorCode::InvalidArgument, "relative_length needs K inside I");
  if (ideal_contains(K, I)) return 0;
  const auto& pres = I.presentation();
  for (std::uint32_t n = 1; n <= max_power; ++n) {
    Ideal<F> mn = maximal_power(pres, n);
    if (!ideal_contains(K, intersect(I, mn))) continue;
    return length(ideal_sum(K, mn)) - length(ideal_sum(I, mn));
  }
  throw Error(ErrorCode::NotFiniteLength, "I/K does not have finite length");
}

}  // namespace paramkit
