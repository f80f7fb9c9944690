#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "paramkit/ideal_ops.hpp"

namespace paramkit {

/// (x)^[t] : (x_1...x_d)^(t-1). Stage 1 is (x) itself.
template <CoefficientField F>
Ideal<F> lim_stage(const ElementSequence<F>& seq, std::uint64_t t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "stage index must be >= 1");
  Ideal<F> bracket = bracket_power(seq, t).ideal;
  if (t == 1) return bracket;
  const auto multiplier = seq.product().pow(t - 1);
  if (is_zero_in(multiplier, seq.presentation())) return Ideal<F>::unit(seq.presentation());
  return colon(bracket, multiplier);
}

struct LimitClosureOptions {
  std::uint64_t t_max = 16;
  std::uint64_t window = 2;
};

template <CoefficientField F>
struct LimitClosureResult {
  Ideal<F> closure;
  std::uint64_t stabilized_at = 1;
  std::uint64_t stages_checked = 0;
  std::uint64_t verified_window = 0;
};

/// Ascends the stages until `window` consecutive stages after t* equal stage t*.
/// Each step also checks stage t inside stage t+1.
template <CoefficientField F>
LimitClosureResult<F> limit_closure(const ElementSequence<F>& seq, LimitClosureOptions opts = {}) {
  if (opts.window < 1 || opts.t_max < 1 + opts.window) {
    throw Error(ErrorCode::InvalidArgument, "t_max must be at least 1 + window and window >= 1");
  }
  Ideal<F> anchor = lim_stage(seq, 1);
  std::uint64_t anchor_t = 1;
  Ideal<F> prev = anchor;
  for (std::uint64_t t = 2; t <= opts.t_max; ++t) {
    Ideal<F> cur = lim_stage(seq, t);
    if (!ideal_contains(cur, prev)) {
      throw Error(ErrorCode::InternalError, "limit closure stages are not ascending at t = " + std::to_string(t));
    }
    if (!ideal_contains(prev, cur)) {
      anchor = cur;
      anchor_t = t;
    } else if (t - anchor_t == opts.window) {
      return LimitClosureResult<F>{anchor, anchor_t, t, opts.window};
    }
    prev = std::move(cur);
  }
  throw Error(ErrorCode::Unstabilized, "no stable window of " + std::to_string(opts.window) +
                                           " stages up to t = " + std::to_string(opts.t_max) +
                                           " (last change at t = " + std::to_string(anchor_t) + ")");
}

struct MonomialConjectureResult {
  std::uint64_t holds_up_to = 0;
  std::optional<std::uint64_t> violated_at;
};

/// (x_1...x_d)^(t-1) not in (x)^[t] for t = 1..t_max. The caller is responsible
/// for checking that seq is a system of parameters (see criteria.hpp).
template <CoefficientField F>
MonomialConjectureResult monomial_conjecture_scan(const ElementSequence<F>& seq, std::uint64_t t_max) {
  MonomialConjectureResult r;
  const auto prod = seq.product();
  for (std::uint64_t t = 1; t <= t_max; ++t) {
    if (ideal_member(prod.pow(t - 1), bracket_power(seq, t).ideal).member) {
      r.violated_at = t;
      return r;
    }
    r.holds_up_to = t;
  }
  return r;
}

}  // namespace paramkit
