#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "paramkit/error.hpp"
#include "paramkit/parser.hpp"
#include "paramkit/polynomial.hpp"

namespace paramkit {

/// An explicit monomial order, or nullopt for the presentation's working order.
using OrderChoice = std::optional<MonomialOrder>;

/// Default cap on reduction steps for a single Groebner basis computation.
inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

/// A Groebner basis together with, for every element, its coordinates with
/// respect to the generators it was computed from.
template <CoefficientField F>
struct TrackedBasis {
  std::vector<Polynomial<F>> basis;
  std::vector<std::vector<Polynomial<F>>> cofactors;  // cofactors[k][i] multiplies gens[i]
  std::size_t ngens = 0;
};

namespace detail {

template <CoefficientField F, bool Track>
class BuchbergerEngine {
 public:
  BuchbergerEngine(RingPtr<F> ring, std::uint64_t budget) : ring_(std::move(ring)), budget_(budget) {}

  void run(const std::vector<Polynomial<F>>& gens) {
    ngens_ = gens.size();
    std::vector<std::size_t> order(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return gens[a].total_degree() < gens[b].total_degree();
    });
    for (std::size_t idx : order) {
      if (gens[idx].is_zero()) continue;
      Entry e;
      e.poly = gens[idx].reorder(ring_);
      e.sugar = e.poly.total_degree();
      if constexpr (Track) {
        e.cofactors.assign(ngens_, Polynomial<F>(ring_));
        e.cofactors[idx] = Polynomial<F>::constant(ring_, 1);
      }
      if (insert(std::move(e))) return;
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.sugar < b.sugar ||
            (a.sugar == b.sugar && ring_->order().compare(a.lcm, b.lcm) < 0)) {
          best = k;
        }
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      Entry s = spoly(p);
      if (insert(std::move(s))) return;
    }
  }

  /// Unique reduced basis, sorted by ascending leading monomial.
  std::vector<Polynomial<F>> reduced_basis() {
    std::vector<std::size_t> act = active_indices();
    for (std::size_t k : act) {
      if (entries_[k].poly.is_constant()) return {Polynomial<F>::constant(ring_, 1)};
    }
    std::vector<Polynomial<F>> out;
    out.reserve(act.size());
    for (std::size_t k : act) {
      Entry e = entries_[k];
      reduce_full(e, act, k);
      out.push_back(make_monic(std::move(e)).poly);
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
      return ring_->order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return out;
  }

  TrackedBasis<F> tracked_basis() {
    TrackedBasis<F> tb;
    tb.ngens = ngens_;
    for (std::size_t k : active_indices()) {
      tb.basis.push_back(entries_[k].poly);
      if constexpr (Track) tb.cofactors.push_back(entries_[k].cofactors);
    }
    return tb;
  }

  std::uint64_t steps() const { return steps_; }

 private:
  struct Entry {
    Polynomial<F> poly;
    std::vector<Polynomial<F>> cofactors;
    std::uint64_t sugar = 0;
    bool active = true;
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t sugar;
  };

  std::vector<std::size_t> active_indices() const {
    std::vector<std::size_t> act;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (entries_[k].active) act.push_back(k);
    }
    return act;
  }

  void tick() {
    if (++steps_ > budget_) {
      throw Error(ErrorCode::BudgetExceeded,
                  "Groebner basis work budget of " + std::to_string(budget_) + " steps exceeded");
    }
  }

  Entry make_monic(Entry e) {
    const F& k = ring_->field();
    if (e.poly.is_zero() || k.is_one(e.poly.leading_coef())) return e;
    auto inv = k.inv(e.poly.leading_coef());
    e.poly = e.poly.scaled(inv);
    if constexpr (Track) {
      for (auto& c : e.cofactors) c = c.scaled(inv);
    }
    return e;
  }

  const Entry* find_reducer(const Monomial& m, const std::vector<std::size_t>* subset,
                            std::size_t skip) const {
    if (subset) {
      for (std::size_t k : *subset) {
        if (k != skip && entries_[k].poly.leading_monomial().divides(m)) return &entries_[k];
      }
      return nullptr;
    }
    for (const auto& e : entries_) {
      if (e.active && e.poly.leading_monomial().divides(m)) return &e;
    }
    return nullptr;
  }

  // Full reduction of h by the active basis (or by `subset` minus `skip`).
  void reduce_full(Entry& h, const std::vector<std::size_t>& subset, std::size_t skip) {
    reduce_impl(h, &subset, skip);
  }
  void reduce_full(Entry& h) { reduce_impl(h, nullptr, static_cast<std::size_t>(-1)); }

  void reduce_impl(Entry& h, const std::vector<std::size_t>* subset, std::size_t skip) {
    const F& k = ring_->field();
    std::vector<typename Polynomial<F>::Term> remainder;  // descending
    while (!h.poly.is_zero()) {
      const Entry* g = find_reducer(h.poly.leading_monomial(), subset, skip);
      if (!g) {
        remainder.push_back(h.poly.pop_leading());
        continue;
      }
      auto c = k.mul(h.poly.leading_coef(), k.inv(g->poly.leading_coef()));
      Monomial m = h.poly.leading_monomial().quotient(g->poly.leading_monomial());
      h.poly.sub_mul_term(c, m, g->poly);
      if constexpr (Track) {
        for (std::size_t i = 0; i < ngens_; ++i) h.cofactors[i].sub_mul_term(c, m, g->cofactors[i]);
      }
      tick();
    }
    std::reverse(remainder.begin(), remainder.end());
    h.poly = Polynomial<F>::from_ascending(ring_, std::move(remainder));
  }

  Entry spoly(const Pair& p) {
    const Entry& a = entries_[p.i];
    const Entry& b = entries_[p.j];
    const F& k = ring_->field();
    Monomial ma = p.lcm.quotient(a.poly.leading_monomial());
    Monomial mb = p.lcm.quotient(b.poly.leading_monomial());
    Entry s;
    s.sugar = p.sugar;
    s.poly = a.poly.times_term(k.one(), ma);
    s.poly.sub_mul_term(k.one(), mb, b.poly);
    if constexpr (Track) {
      s.cofactors.reserve(ngens_);
      for (std::size_t i = 0; i < ngens_; ++i) {
        Polynomial<F> c = a.cofactors[i].times_term(k.one(), ma);
        c.sub_mul_term(k.one(), mb, b.cofactors[i]);
        s.cofactors.push_back(std::move(c));
      }
    }
    return s;
  }

  // Reduces, and if nonzero adds to the basis with the Gebauer-Moeller update.
  // Returns true when the unit ideal has been reached.
  bool insert(Entry h) {
    reduce_full(h);
    if (h.poly.is_zero()) return false;
    h = make_monic(std::move(h));
    const std::size_t hi = entries_.size();
    const Monomial lh = h.poly.leading_monomial();
    const bool unit = h.poly.is_constant();
    entries_.push_back(std::move(h));
    if (unit) {
      for (std::size_t k = 0; k < hi; ++k) entries_[k].active = false;
      pairs_.clear();
      return true;
    }

    auto make_pair = [&](std::size_t g) {
      const Entry& eg = entries_[g];
      const Entry& eh = entries_[hi];
      Monomial l = eg.poly.leading_monomial().lcm(lh);
      std::uint64_t sg = eg.sugar + (l.degree() - eg.poly.leading_monomial().degree());
      std::uint64_t sh = eh.sugar + (l.degree() - lh.degree());
      return Pair{g, hi, l, std::max(sg, sh)};
    };

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (entries_[g].active) candidates.push_back(make_pair(g));
    }
    std::vector<Pair> kept;
    while (!candidates.empty()) {
      Pair p = std::move(candidates.back());
      candidates.pop_back();
      bool keep = entries_[p.i].poly.leading_monomial().coprime(lh);
      if (!keep) {
        keep = true;
        for (const auto& q : candidates) {
          if (q.lcm.divides(p.lcm)) {
            keep = false;
            break;
          }
        }
        if (keep) {
          for (const auto& q : kept) {
            if (q.lcm.divides(p.lcm)) {
              keep = false;
              break;
            }
          }
        }
      }
      if (keep) kept.push_back(std::move(p));
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) &&
                        !(entries_[p.i].poly.leading_monomial().lcm(lh) == p.lcm) &&
                        !(entries_[p.j].poly.leading_monomial().lcm(lh) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : kept) {
      if (!entries_[p.i].poly.leading_monomial().coprime(lh)) next.push_back(std::move(p));
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < hi; ++g) {
      if (entries_[g].active && lh.divides(entries_[g].poly.leading_monomial())) {
        entries_[g].active = false;
      }
    }
    return false;
  }

  RingPtr<F> ring_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::size_t ngens_ = 0;
  std::vector<Entry> entries_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// Reduced Groebner basis of `gens` in the order of `ring`. Zero generators are
/// dropped; the output is sorted by ascending leading monomial.
template <CoefficientField F>
std::vector<Polynomial<F>> buchberger(const std::vector<Polynomial<F>>& gens, const RingPtr<F>& ring,
                                      std::uint64_t budget = kDefaultBudget) {
  detail::BuchbergerEngine<F, false> engine(ring, budget);
  engine.run(gens);
  return engine.reduced_basis();
}

/// Groebner basis (not interreduced) with cofactor rows for each element.
template <CoefficientField F>
TrackedBasis<F> buchberger_tracked(const std::vector<Polynomial<F>>& gens, const RingPtr<F>& ring,
                                   std::uint64_t budget = kDefaultBudget) {
  detail::BuchbergerEngine<F, true> engine(ring, budget);
  engine.run(gens);
  return engine.tracked_basis();
}

/// Fully reduced remainder of f modulo a Groebner basis (all in f's ring).
template <CoefficientField F>
Polynomial<F> reduce(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis) {
  const F& k = f.field();
  Polynomial<F> h = f;
  std::vector<typename Polynomial<F>::Term> remainder;
  while (!h.is_zero()) {
    const Polynomial<F>* g = nullptr;
    for (const auto& b : basis) {
      if (b.leading_monomial().divides(h.leading_monomial())) {
        g = &b;
        break;
      }
    }
    if (!g) {
      remainder.push_back(h.pop_leading());
      continue;
    }
    auto c = k.mul(h.leading_coef(), k.inv(g->leading_coef()));
    h.sub_mul_term(c, h.leading_monomial().quotient(g->leading_monomial()), *g);
  }
  std::reverse(remainder.begin(), remainder.end());
  return Polynomial<F>::from_ascending(f.ring(), std::move(remainder));
}

/// Reduces f by a tracked basis. On a zero remainder the returned row w
/// satisfies f = sum_i w[i] * gens[i].
template <CoefficientField F>
std::pair<Polynomial<F>, std::vector<Polynomial<F>>> reduce_tracked(const Polynomial<F>& f,
                                                                    const TrackedBasis<F>& tb) {
  const F& k = f.field();
  const auto& ring = f.ring();
  Polynomial<F> h = f;
  std::vector<Polynomial<F>> quotients(tb.basis.size(), Polynomial<F>(ring));
  std::vector<typename Polynomial<F>::Term> remainder;
  while (!h.is_zero()) {
    std::size_t found = tb.basis.size();
    for (std::size_t b = 0; b < tb.basis.size(); ++b) {
      if (tb.basis[b].leading_monomial().divides(h.leading_monomial())) {
        found = b;
        break;
      }
    }
    if (found == tb.basis.size()) {
      remainder.push_back(h.pop_leading());
      continue;
    }
    const auto& g = tb.basis[found];
    auto c = k.mul(h.leading_coef(), k.inv(g.leading_coef()));
    Monomial m = h.leading_monomial().quotient(g.leading_monomial());
    quotients[found].add_mul_term(c, m, Polynomial<F>::constant(ring, 1));
    h.sub_mul_term(c, m, g);
  }
  std::reverse(remainder.begin(), remainder.end());
  std::vector<Polynomial<F>> row(tb.ngens, Polynomial<F>(ring));
  for (std::size_t b = 0; b < tb.basis.size(); ++b) {
    if (quotients[b].is_zero()) continue;
    for (std::size_t i = 0; i < tb.ngens; ++i) {
      if (!tb.cofactors[b][i].is_zero()) row[i] += quotients[b] * tb.cofactors[b][i];
    }
  }
  return {Polynomial<F>::from_ascending(ring, std::move(remainder)), std::move(row)};
}

/// The quotient S = k[vars]/J. Holds the per-session Groebner basis cache,
/// keyed by (generator multiset, order); J is implicitly part of every key.
template <CoefficientField F>
class RingPresentation {
 public:
  using BasisPtr = std::shared_ptr<const std::vector<Polynomial<F>>>;

  /// `working_order` is the order used whenever an operation is not given one
  /// explicitly. The ambient ring itself always carries grevlex.
  static std::shared_ptr<const RingPresentation> create(RingPtr<F> ambient,
                                                        std::vector<Polynomial<F>> quotient_gens = {},
                                                        MonomialOrder working_order = MonomialOrder::grevlex()) {
    return std::shared_ptr<const RingPresentation>(
        new RingPresentation(std::move(ambient), std::move(quotient_gens), working_order));
  }

  /// Ambient ring in the default (grevlex) order.
  const RingPtr<F>& ambient() const { return ambient_; }
  const F& field() const { return ambient_->field(); }
  std::size_t nvars() const { return ambient_->nvars(); }
  std::uint32_t characteristic() const { return field().characteristic(); }
  const std::vector<Polynomial<F>>& quotient_gens() const { return quotient_gens_; }
  const MonomialOrder& working_order() const { return working_order_; }
  MonomialOrder resolve(const OrderChoice& order) const { return order.value_or(working_order_); }

  RingPtr<F> ring(const MonomialOrder& order) const {
    if (order == ambient_->order()) return ambient_;
    std::lock_guard lock(ring_mutex_);
    for (const auto& r : ordered_rings_) {
      if (r->order() == order) return r;
    }
    ordered_rings_.push_back(ambient_->with_order(order));
    return ordered_rings_.back();
  }

  Polynomial<F> parse(std::string_view text) const { return parse_polynomial(text, ambient_); }
  Polynomial<F> constant(long c) const { return Polynomial<F>::constant(ambient_, c); }
  Polynomial<F> variable(std::size_t i) const { return Polynomial<F>::variable(ambient_, i); }

  std::uint64_t budget() const { return budget_.load(); }
  void set_budget(std::uint64_t b) const { budget_.store(b); }

  /// Reduced basis of (gens + J) in `order`, cached.
  BasisPtr groebner_basis(const std::vector<Polynomial<F>>& gens, const MonomialOrder& order) const {
    RingPtr<F> r = ring(order);
    std::vector<Polynomial<F>> all;
    all.reserve(gens.size() + quotient_gens_.size());
    std::vector<std::string> keys;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      all.push_back(g.reorder(r));
      keys.push_back(render(all.back()));
    }
    std::sort(keys.begin(), keys.end());
    std::string key = order.name();
    for (const auto& k : keys) key += "\n" + k;
    {
      std::shared_lock lock(cache_mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    for (const auto& q : quotient_gens_) all.push_back(q.reorder(r));
    auto basis = std::make_shared<const std::vector<Polynomial<F>>>(buchberger(all, r, budget()));
    std::unique_lock lock(cache_mutex_);
    return cache_.emplace(std::move(key), std::move(basis)).first->second;
  }

  /// Basis of J alone in the default order.
  BasisPtr quotient_basis() const { return groebner_basis({}, ambient_->order()); }

  std::optional<std::size_t> cached_dimension() const {
    std::lock_guard lock(ring_mutex_);
    return dimension_;
  }
  void store_dimension(std::size_t d) const {
    std::lock_guard lock(ring_mutex_);
    dimension_ = d;
  }

  bool same_as(const RingPresentation& o) const {
    if (this == &o) return true;
    if (!(working_order_ == o.working_order_) || !(*ambient_ == *o.ambient_) || quotient_gens_.size() != o.quotient_gens_.size()) return false;
    for (std::size_t i = 0; i < quotient_gens_.size(); ++i) {
      if (!(quotient_gens_[i] == o.quotient_gens_[i])) return false;
    }
    return true;
  }

 private:
  RingPresentation(RingPtr<F> ambient, std::vector<Polynomial<F>> quotient_gens, MonomialOrder working_order)
      : ambient_(std::move(ambient)), working_order_(working_order) {
    if (!(ambient_->order() == MonomialOrder::grevlex())) ambient_ = ambient_->with_order(MonomialOrder::grevlex());
    for (auto& q : quotient_gens) {
      if (q.ring()->variables() != ambient_->variables() || !(q.field() == ambient_->field())) {
        throw Error(ErrorCode::RingMismatch, "quotient generator lives in a different ring");
      }
      if (!q.is_zero()) quotient_gens_.push_back(q.reorder(ambient_));
    }
  }

  RingPtr<F> ambient_;
  MonomialOrder working_order_;
  std::vector<Polynomial<F>> quotient_gens_;
  mutable std::atomic<std::uint64_t> budget_{kDefaultBudget};
  mutable std::mutex ring_mutex_;
  mutable std::vector<RingPtr<F>> ordered_rings_;
  mutable std::optional<std::size_t> dimension_;
  mutable std::shared_mutex cache_mutex_;
  mutable std::map<std::string, BasisPtr> cache_;
};

template <CoefficientField F>
using PresentationPtr = std::shared_ptr<const RingPresentation<F>>;

/// Ideal of S given by generators (polynomials of the ambient ring).
template <CoefficientField F>
class Ideal {
 public:
  Ideal() = default;
  Ideal(PresentationPtr<F> pres, std::vector<Polynomial<F>> gens) : pres_(std::move(pres)) {
    gens_.reserve(gens.size());
    for (auto& g : gens) gens_.push_back(adopt(g));
  }

  static Ideal zero(PresentationPtr<F> pres) { return Ideal(std::move(pres), {}); }
  static Ideal unit(PresentationPtr<F> pres) {
    auto one = pres->constant(1);
    return Ideal(std::move(pres), {one});
  }
  static Ideal maximal(PresentationPtr<F> pres) {
    std::vector<Polynomial<F>> vars;
    for (std::size_t i = 0; i < pres->nvars(); ++i) vars.push_back(pres->variable(i));
    return Ideal(std::move(pres), std::move(vars));
  }

  const PresentationPtr<F>& presentation() const { return pres_; }
  const std::vector<Polynomial<F>>& gens() const { return gens_; }

  typename RingPresentation<F>::BasisPtr groebner_basis(const OrderChoice& order = std::nullopt) const {
    return pres_->groebner_basis(gens_, pres_->resolve(order));
  }

  bool is_unit() const {
    auto gb = groebner_basis();
    return gb->size() == 1 && (*gb)[0].is_constant() && !(*gb)[0].is_zero();
  }

  /// Brings a polynomial of a compatible ring into the ambient ring.
  Polynomial<F> adopt(const Polynomial<F>& p) const {
    const auto& amb = pres_->ambient();
    if (p.ring() == amb) return p;
    if (!p.ring() || p.ring()->variables() != amb->variables() || !(p.field() == amb->field())) {
      throw Error(ErrorCode::RingMismatch, "polynomial does not belong to this ring");
    }
    return p.reorder(amb);
  }

 private:
  PresentationPtr<F> pres_;
  std::vector<Polynomial<F>> gens_;
};

template <CoefficientField F>
void check_same_presentation(const Ideal<F>& a, const Ideal<F>& b) {
  if (!a.presentation() || !b.presentation() || !a.presentation()->same_as(*b.presentation())) {
    throw Error(ErrorCode::RingMismatch, "ideals live in different rings");
  }
}

/// Unique fully reduced remainder of f modulo I + J, returned in the ambient ring.
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const Ideal<F>& I,
                          const OrderChoice& order = std::nullopt) {
  const auto& pres = I.presentation();
  RingPtr<F> r = pres->ring(pres->resolve(order));
  auto gb = I.groebner_basis(order);
  return reduce(I.adopt(f).reorder(r), *gb).reorder(pres->ambient());
}

template <CoefficientField F>
struct MembershipWitness {
  // Aligned with I.gens() followed by the quotient generators.
  std::vector<Polynomial<F>> coefficients;
};

template <CoefficientField F>
struct MembershipResult {
  bool member = false;
  std::optional<MembershipWitness<F>> witness;
};

/// Generators of I followed by those of J: the list witnesses refer to.
template <CoefficientField F>
std::vector<Polynomial<F>> witness_generators(const Ideal<F>& I) {
  std::vector<Polynomial<F>> gens = I.gens();
  for (const auto& q : I.presentation()->quotient_gens()) gens.push_back(q);
  return gens;
}

/// Tracked basis of I + J with respect to witness_generators(I).
template <CoefficientField F>
TrackedBasis<F> tracked_basis(const Ideal<F>& I, const OrderChoice& order = std::nullopt) {
  const auto& pres = I.presentation();
  RingPtr<F> r = pres->ring(pres->resolve(order));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : witness_generators(I)) gens.push_back(g.reorder(r));
  return buchberger_tracked(gens, r, pres->budget());
}

/// Witness for f in I + J from a tracked basis; nullopt when f is not a member.
/// The returned coefficients are checked to expand exactly to f.
template <CoefficientField F>
std::optional<MembershipWitness<F>> witness_from(const Polynomial<F>& f, const Ideal<F>& I,
                                                 const TrackedBasis<F>& tb) {
  const auto& pres = I.presentation();
  RingPtr<F> r = tb.basis.empty() ? pres->ambient() : tb.basis.front().ring();
  auto [rem, row] = reduce_tracked(I.adopt(f).reorder(r), tb);
  if (!rem.is_zero()) return std::nullopt;
  MembershipWitness<F> w;
  Polynomial<F> check(pres->ambient());
  const auto gens = witness_generators(I);
  for (std::size_t i = 0; i < row.size(); ++i) {
    w.coefficients.push_back(row[i].reorder(pres->ambient()));
    check += w.coefficients.back() * gens[i];
  }
  if (!(check == I.adopt(f))) {
    throw Error(ErrorCode::InternalError, "membership witness does not expand to the element");
  }
  return w;
}

/// f in I (as ideals of S). The witness, when requested, reconstructs f exactly
/// in the ambient ring from the generators of I and J.
template <CoefficientField F>
MembershipResult<F> ideal_member(const Polynomial<F>& f, const Ideal<F>& I, bool want_witness = false,
                                 const OrderChoice& order = std::nullopt) {
  MembershipResult<F> res;
  res.member = normal_form(f, I, order).is_zero();
  if (res.member && want_witness) {
    res.witness = witness_from(f, I, tracked_basis(I, order));
  }
  return res;
}

/// small is contained in big.
template <CoefficientField F>
bool ideal_contains(const Ideal<F>& big, const Ideal<F>& small) {
  check_same_presentation(big, small);
  auto gb = big.groebner_basis();
  for (const auto& g : small.gens()) {
    if (!reduce(big.adopt(g), *gb).is_zero()) return false;
  }
  return true;
}

template <CoefficientField F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b,
                 const OrderChoice& order = std::nullopt) {
  check_same_presentation(a, b);
  auto ga = a.groebner_basis(order);
  auto gb = b.groebner_basis(order);
  if (ga->size() != gb->size()) return false;
  for (std::size_t i = 0; i < ga->size(); ++i) {
    if (!((*ga)[i] == (*gb)[i])) return false;
  }
  return true;
}

template <CoefficientField F>
bool is_zero_in(const Polynomial<F>& f, const PresentationPtr<F>& pres) {
  return reduce(f.reorder(pres->ambient()), *pres->quotient_basis()).is_zero();
}

}  // namespace paramkit
