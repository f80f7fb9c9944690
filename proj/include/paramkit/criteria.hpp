#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "paramkit/koszul.hpp"
#include "paramkit/limit_closure.hpp"

namespace paramkit {

struct SopReport {
  bool sop = false;
  std::size_t ring_dim = 0;
  std::optional<std::size_t> quotient_dim;  // absent when (seq) is the unit ideal
  std::string diagnostic;
};

/// seq is a system of parameters: its length is dim S and S/(seq) has dimension 0.
template <CoefficientField F>
SopReport sop_report(const ElementSequence<F>& seq) {
  SopReport r;
  r.ring_dim = ring_dimension(seq.presentation());
  const Ideal<F> I = seq.ideal();
  if (I.is_unit()) {
    r.diagnostic = "the sequence generates the unit ideal";
  } else {
    r.quotient_dim = dimension(I).dim;
  }
  if (seq.size() != r.ring_dim) {
    r.diagnostic = "sequence has " + std::to_string(seq.size()) + " elements but dim S = " +
                   std::to_string(r.ring_dim);
    return r;
  }
  if (r.quotient_dim && *r.quotient_dim != 0) {
    r.diagnostic = "S/(seq) is not zero-dimensional";
    return r;
  }
  r.sop = r.quotient_dim.has_value();
  return r;
}

template <CoefficientField F>
bool is_sop(const ElementSequence<F>& seq) {
  return sop_report(seq).sop;
}

/// Monomial-conjecture instance check for a system of parameters.
template <CoefficientField F>
MonomialConjectureResult monomial_conjecture_check(const ElementSequence<F>& seq, std::uint64_t t_max = 16) {
  if (!is_sop(seq)) throw Error(ErrorCode::NotSOP, "sequence is not a system of parameters");
  return monomial_conjecture_scan(seq, t_max);
}

/// A with y = A x in S, read off membership witnesses of each y_i in (x).
template <CoefficientField F>
CoeffMatrix<F> lift_matrix(const ElementSequence<F>& y, const ElementSequence<F>& x,
                           const OrderChoice& order = std::nullopt) {
  const auto& pres = x.presentation();
  const Ideal<F> ix = x.ideal();
  const auto tb = tracked_basis(ix, order);
  CoeffMatrix<F> a(pres, y.size(), x.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    auto w = witness_from(y[i], ix, tb);
    if (!w) {
      throw Error(ErrorCode::NotContained, "y_" + std::to_string(i + 1) + " is not in (x)");
    }
    // Coefficients of the quotient generators vanish in S.
    for (std::size_t j = 0; j < x.size(); ++j) a(i, j) = w->coefficients[j];
  }
  return a;
}

template <CoefficientField F>
struct Map5Report {
  bool injective = false;
  Polynomial<F> det;
  Ideal<F> colon;  // (y) : det A
};

/// R/(x) --det A--> R/(y) is injective iff ((y) : det A) lies in (x).
template <CoefficientField F>
Map5Report<F> map5_report(const ElementSequence<F>& x, const ElementSequence<F>& y, const CoeffMatrix<F>& a) {
  require_lift(x, y, a);
  const auto& pres = x.presentation();
  Map5Report<F> r{false, determinant(a), Ideal<F>()};
  const Ideal<F> iy = y.ideal();
  const Ideal<F> ix = x.ideal();
  for (const auto& g : x.entries()) {
    if (!ideal_member(r.det * g, iy).member) {
      throw Error(ErrorCode::InternalError, "det A * (x) is not contained in (y)");
    }
  }
  r.colon = is_zero_in(r.det, pres) ? Ideal<F>::unit(pres) : colon(iy, r.det);
  r.injective = ideal_contains(ix, r.colon);
  return r;
}

template <CoefficientField F>
bool map5_test(const ElementSequence<F>& x, const ElementSequence<F>& y, const CoeffMatrix<F>& a) {
  return map5_report(x, y, a).injective;
}

template <CoefficientField F>
struct Map1Report {
  bool injective = false;
  Polynomial<F> det;
  LimitClosureResult<F> x_lim;
  LimitClosureResult<F> y_lim;
};

/// R/(x)^lim --det A--> R/(y)^lim is injective iff ((y)^lim : det A) lies in (x)^lim.
template <CoefficientField F>
Map1Report<F> map1_report(const ElementSequence<F>& x, const ElementSequence<F>& y, const CoeffMatrix<F>& a,
                          LimitClosureOptions opts = {}) {
  require_lift(x, y, a);
  const auto& pres = x.presentation();
  Map1Report<F> r{false, determinant(a), limit_closure(x, opts), limit_closure(y, opts)};
  const Ideal<F> c = is_zero_in(r.det, pres) ? Ideal<F>::unit(pres) : colon(r.y_lim.closure, r.det);
  r.injective = ideal_contains(r.x_lim.closure, c);
  return r;
}

template <CoefficientField F>
bool map1_lim_test(const ElementSequence<F>& x, const ElementSequence<F>& y, const CoeffMatrix<F>& a,
                   LimitClosureOptions opts = {}) {
  return map1_report(x, y, a, opts).injective;
}

/// y^[s] = B x^[n] with s minimal.
template <CoefficientField F>
struct StageLift {
  std::uint64_t n = 1;
  std::uint64_t s = 1;
  CoeffMatrix<F> b;
};

template <CoefficientField F>
StageLift<F> stage_lift(const ElementSequence<F>& x, const ElementSequence<F>& y, std::uint64_t n) {
  const Ideal<F> ix = x.ideal();
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!ideal_member(y[i], ix).member) {
      throw Error(ErrorCode::NotContained, "y_" + std::to_string(i + 1) + " is not in (x)");
    }
  }
  const auto xn = x.power(n);
  const Ideal<F> ixn = xn.ideal();
  // y in (x) gives y_i^s in (x)^s, which lies in (x)^[n] once s > d (n - 1).
  const std::uint64_t bound = x.size() * (n - 1) + 1;
  for (std::uint64_t s = 1; s <= bound; ++s) {
    const auto ys = y.power(s);
    bool all = true;
    for (const auto& e : ys.entries()) {
      if (!ideal_member(e, ixn).member) {
        all = false;
        break;
      }
    }
    if (all) return StageLift<F>{n, s, lift_matrix(ys, xn)};
  }
  throw Error(ErrorCode::InternalError, "no bracket power of y lies in (x)^[n]");
}

template <CoefficientField F>
struct Map2Stage {
  StageLift<F> lift;
  bool injective = false;
};

/// Stage maps R/((x)^[n])^lim --det B--> R/((y)^[s])^lim for n = 1..stages.
template <CoefficientField F>
std::vector<Map2Stage<F>> map2_stage_test(const ElementSequence<F>& x, const ElementSequence<F>& y,
                                          std::uint64_t stages, LimitClosureOptions opts = {}) {
  if (!is_sop(x)) throw Error(ErrorCode::NotSOP, "x is not a system of parameters");
  std::vector<Map2Stage<F>> out;
  for (std::uint64_t n = 1; n <= stages; ++n) {
    auto lift = stage_lift(x, y, n);
    const bool inj = map1_lim_test(x.power(n), y.power(lift.s), lift.b, opts);
    out.push_back(Map2Stage<F>{std::move(lift), inj});
  }
  return out;
}

struct NamedCheck {
  std::string name;
  bool passed = false;
};

template <CoefficientField F>
struct OneDimReport {
  Polynomial<F> y;
  bool map5_x_to_y = false;  // R/(x) --u--> R/(y)
  bool map5_u_to_y = false;  // R/(u) --x--> R/(y)
  bool map1 = false;
  bool y_is_parameter = false;
  std::uint64_t colon_quotient_length = 0;  // length of (0:x)/u(0:x)
  std::uint64_t double_colon_length = 0;    // length of 0:(x,u)
  std::vector<NamedCheck> checks;
};

/// One-dimensional checks for y = u x with x a parameter.
template <CoefficientField F>
OneDimReport<F> one_dim_theorems(const PresentationPtr<F>& pres, const Polynomial<F>& x_param,
                                 const Polynomial<F>& u, LimitClosureOptions opts = {}) {
  if (ring_dimension(pres) != 1) throw Error(ErrorCode::WrongDimension, "one_dim_theorems needs dim S = 1");
  const ElementSequence<F> xs(pres, {x_param});
  if (!is_sop(xs)) throw Error(ErrorCode::NotParameter, "x is not a parameter");
  const ElementSequence<F> us(pres, {u});
  OneDimReport<F> r;
  r.y = xs[0] * us[0];
  const ElementSequence<F> ys(pres, {r.y});
  r.map5_x_to_y = map5_test(xs, ys, CoeffMatrix<F>::diagonal(pres, {us[0]}));
  r.map5_u_to_y = map5_test(us, ys, CoeffMatrix<F>::diagonal(pres, {xs[0]}));
  r.map1 = map1_lim_test(xs, ys, CoeffMatrix<F>::diagonal(pres, {us[0]}), opts);
  r.y_is_parameter = is_sop(ys);

  const Ideal<F> zero = Ideal<F>::zero(pres);
  const Ideal<F> ann_x = colon(zero, xs[0]);
  r.colon_quotient_length = relative_length(ann_x, ideal_scale(ann_x, us[0]));
  r.double_colon_length = relative_length(colon(zero, Ideal<F>(pres, {xs[0], us[0]})), zero);

  r.checks.push_back({"map5 => y parameter", !r.map5_x_to_y || r.y_is_parameter});
  // The converse needs u to be a parameter as well, i.e. y a parameter.
  r.checks.push_back({"map5 x=>u", !r.map5_x_to_y || r.map5_u_to_y});
  r.checks.push_back({"map5 symmetry", !r.y_is_parameter || r.map5_x_to_y == r.map5_u_to_y});
  r.checks.push_back({"map1 <=> y parameter", r.map1 == r.y_is_parameter});
  r.checks.push_back({"length identity", r.colon_quotient_length == r.double_colon_length});
  return r;
}

/// Random elements and systems of parameters. Coefficients are drawn from
/// {-2..2} in characteristic 0 and from all of F_p otherwise.
template <CoefficientField F>
class SopSampler {
 public:
  SopSampler(PresentationPtr<F> pres, std::uint64_t seed, std::uint32_t ell = 1)
      : pres_(std::move(pres)), rng_(seed), ell_(ell == 0 ? 1 : ell) {
    monomials_ = maximal_power(pres_, ell_).gens();
  }

  typename F::Element coefficient() {
    const auto p = pres_->characteristic();
    if (p == 0) return pres_->field().from_int(std::uniform_int_distribution<long>(-2, 2)(rng_));
    return pres_->field().from_int(std::uniform_int_distribution<long>(0, static_cast<long>(p) - 1)(rng_));
  }

  /// Combination of the degree-ell monomials (inside m^ell).
  Polynomial<F> element() {
    Polynomial<F> f(pres_->ambient());
    for (const auto& m : monomials_) f += m.scaled(coefficient());
    return f;
  }

  ElementSequence<F> sequence(std::size_t n) {
    std::vector<Polynomial<F>> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(element());
    return ElementSequence<F>(pres_, std::move(v));
  }

  /// Rejection sampling; nullopt when `attempts` draws all fail.
  std::optional<ElementSequence<F>> sop(std::size_t attempts = 64) {
    const std::size_t d = ring_dimension(pres_);
    for (std::size_t k = 0; k < attempts; ++k) {
      auto s = sequence(d);
      if (is_sop(s)) return s;
    }
    return std::nullopt;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  PresentationPtr<F> pres_;
  std::mt19937_64 rng_;
  std::uint32_t ell_;
  std::vector<Polynomial<F>> monomials_;
};

enum class CMVerdict { CMConsistent, NotCM };

template <CoefficientField F>
struct CMProbeResult {
  CMVerdict verdict = CMVerdict::CMConsistent;
  std::size_t tested = 0;
  std::optional<ElementSequence<F>> sop;    // the failing sop
  std::optional<Polynomial<F>> witness;     // element of (x)^lim outside (x)
};

/// Samples sops and compares (x) with (x)^lim. A strict inclusion certifies
/// that S is not Cohen-Macaulay; agreement on every trial is only evidence.
template <CoefficientField F>
CMProbeResult<F> cm_probe(const PresentationPtr<F>& pres, std::size_t trials, std::uint64_t seed,
                          std::uint32_t ell = 1, LimitClosureOptions opts = {}) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  SopSampler<F> sampler(pres, seed, ell);
  CMProbeResult<F> r;
  for (std::size_t t = 0; t < trials; ++t) {
    auto x = sampler.sop();
    if (!x) continue;
    ++r.tested;
    const Ideal<F> ix = x->ideal();
    const auto lim = limit_closure(*x, opts);
    for (const auto& g : *lim.closure.groebner_basis()) {
      if (!ideal_member(g, ix).member) {
        r.verdict = CMVerdict::NotCM;
        r.sop = *x;
        r.witness = g.reorder(pres->ambient());
        return r;
      }
    }
  }
  if (r.tested == 0) throw Error(ErrorCode::NoSOPFound, "sampling found no system of parameters");
  return r;
}

template <CoefficientField F>
struct DepthProbeResult {
  std::size_t depth_lower_bound = 0;
  std::size_t tested = 0;
  std::optional<ElementSequence<F>> best;  // sop realising the bound
};

/// Longest initial regular subsequence over sampled sops. This is a lower
/// bound for depth S, not a certified depth.
template <CoefficientField F>
DepthProbeResult<F> depth_probe(const PresentationPtr<F>& pres, std::size_t trials, std::uint64_t seed,
                                std::uint32_t ell = 1) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  SopSampler<F> sampler(pres, seed, ell);
  DepthProbeResult<F> r;
  for (std::size_t t = 0; t < trials; ++t) {
    auto x = sampler.sop();
    if (!x) continue;
    ++r.tested;
    const auto reg = is_regular_sequence(*x);
    const std::size_t prefix = reg.regular ? x->size() : *reg.first_failure - 1;
    if (!r.best || prefix > r.depth_lower_bound) {
      r.depth_lower_bound = prefix;
      r.best = *x;
    }
    if (prefix == x->size()) break;
  }
  if (r.tested == 0) throw Error(ErrorCode::NoSOPFound, "sampling found no system of parameters");
  return r;
}

template <CoefficientField F>
struct FrobeniusRow {
  std::uint64_t q = 0;
  bool det_identity = false;        // det(A^[q]) = (det A)^q
  bool hypothesis = false;          // c z^q in (x)^[q]
  std::optional<bool> conclusion;   // c (det A)^q z^q in (y)^[q], when the hypothesis holds
};

/// Per q: if c z^q lies in (x)^[q] then c (det A)^q z^q lies in (y)^[q]. A failed
/// conclusion is reported as an internal error.
template <CoefficientField F>
std::vector<FrobeniusRow<F>> frobenius_certificate_check(const Polynomial<F>& c, const Polynomial<F>& z,
                                                         const ElementSequence<F>& x, const ElementSequence<F>& y,
                                                         const CoeffMatrix<F>& a,
                                                         const std::vector<std::uint64_t>& q_list) {
  const auto& pres = x.presentation();
  const std::uint64_t p = pres->characteristic();
  if (p == 0) throw Error(ErrorCode::WrongCharacteristic, "Frobenius checks need positive characteristic");
  for (auto q : q_list) {
    std::uint64_t v = q;
    while (v > 1 && v % p == 0) v /= p;
    if (q < p || v != 1) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a power of " + std::to_string(p));
  }
  require_lift(x, y, a);
  const Ideal<F> carrier(pres, {});
  const auto cc = carrier.adopt(c);
  const auto zz = carrier.adopt(z);
  const auto det = determinant(a);
  std::vector<FrobeniusRow<F>> rows;
  for (auto q : q_list) {
    FrobeniusRow<F> row;
    row.q = q;
    const auto detq = det.pow(q);
    row.det_identity = is_zero_in(determinant(a.bracket(q)) - detq, pres);
    const auto czq = cc * zz.pow(q);
    row.hypothesis = ideal_member(czq, bracket_power(x, q).ideal).member;
    if (row.hypothesis) {
      row.conclusion = ideal_member(czq * detq, bracket_power(y, q).ideal).member;
      if (!*row.conclusion) {
        throw Error(ErrorCode::InternalError, "c (det A)^q z^q is not in (y)^[q] for q = " + std::to_string(q));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <CoefficientField F>
struct ZeroColonResult {
  Ideal<F> annihilator;  // 0 : u
  std::optional<ElementSequence<F>> found;
  std::size_t tested = 0;
};

/// Looks for a sampled sop whose ideal contains 0 : u.
template <CoefficientField F>
ZeroColonResult<F> zero_colon_probe(const PresentationPtr<F>& pres, const Polynomial<F>& u, std::size_t trials,
                                    std::uint64_t seed, std::uint32_t ell = 1) {
  const Ideal<F> zero = Ideal<F>::zero(pres);
  ZeroColonResult<F> r;
  r.annihilator = colon(zero, u);
  if (ideal_contains(zero, r.annihilator)) throw Error(ErrorCode::ZeroAnnihilator, "0 : u is zero");
  SopSampler<F> sampler(pres, seed, ell);
  for (std::size_t t = 0; t < trials; ++t) {
    auto x = sampler.sop();
    if (!x) continue;
    ++r.tested;
    if (ideal_contains(x->ideal(), r.annihilator)) {
      r.found = *x;
      return r;
    }
  }
  if (r.tested == 0) throw Error(ErrorCode::NoSOPFound, "sampling found no system of parameters");
  return r;
}

template <CoefficientField F>
struct DRReport {
  bool x_is_sop = false;
  bool y_is_sop = false;
  CoeffMatrix<F> a;
  Polynomial<F> det_a;
  bool map5_injective = false;
  bool map1_injective = false;
  std::vector<Map2Stage<F>> map2_stages;
  std::vector<NamedCheck> checks;

  bool consistent() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

struct DROptions {
  std::uint64_t stages = 3;
  LimitClosureOptions lim;
};

/// Runs maps (5), (1) and the stage maps (2) for y inside (x). When no matrix
/// is supplied, A is the witness lift; a second lift from another order is used
/// for the lift-independence check.
template <CoefficientField F>
DRReport<F> dr_test(const ElementSequence<F>& x, const ElementSequence<F>& y,
                    std::optional<CoeffMatrix<F>> a = std::nullopt, DROptions opts = {}) {
  DRReport<F> r;
  r.x_is_sop = is_sop(x);
  r.y_is_sop = is_sop(y);
  r.a = a ? *a : lift_matrix(y, x);
  const auto m5 = map5_report(x, y, r.a);
  r.det_a = m5.det;
  r.map5_injective = m5.injective;
  r.map1_injective = map1_lim_test(x, y, r.a, opts.lim);
  const bool lex_working = x.presentation()->working_order() == MonomialOrder::lex();
  const auto second = lift_matrix(y, x, lex_working ? MonomialOrder::grevlex() : MonomialOrder::lex());
  const bool map1_second = map1_lim_test(x, y, second, opts.lim);
  if (r.x_is_sop) r.map2_stages = map2_stage_test(x, y, opts.stages, opts.lim);

  bool all_stages = true;
  for (const auto& s : r.map2_stages) all_stages = all_stages && s.injective;
  r.checks.push_back({"cramer", true});  // map5_report throws otherwise
  r.checks.push_back({"sop=>map1", !r.y_is_sop || r.map1_injective});
  r.checks.push_back({"sop=>map2", !r.y_is_sop || all_stages});
  r.checks.push_back({"lift-independence", map1_second == r.map1_injective});
  if (!r.map2_stages.empty()) {
    r.checks.push_back({"map2-stage1=map1", r.map2_stages.front().injective == r.map1_injective});
  }
  return r;
}

}  // namespace paramkit
