#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "paramkit/matrix.hpp"

namespace paramkit {

inline constexpr std::size_t kMaxKoszulLength = 8;

/// K(x; S). Free module K_k has basis lex_subsets(d, k); differentials[k - 1]
/// is the matrix of d_k : K_k -> K_{k-1} acting on column vectors, with
/// d(e_{i1..ik}) = sum_j (-1)^(j+1) x_{ij} e_{i1..^ij..ik}.
template <CoefficientField F>
struct KoszulComplex {
  ElementSequence<F> seq;
  std::vector<CoeffMatrix<F>> differentials;

  std::size_t length() const { return seq.size(); }
  const CoeffMatrix<F>& differential(std::size_t k) const {
    if (k < 1 || k > differentials.size()) throw Error(ErrorCode::BadLevel, "no such differential");
    return differentials[k - 1];
  }
};

template <CoefficientField F>
CoeffMatrix<F> koszul_differential(const ElementSequence<F>& seq, std::size_t k) {
  const std::size_t d = seq.size();
  const auto src = lex_subsets(d, k);
  const auto dst = lex_subsets(d, k - 1);
  CoeffMatrix<F> m(seq.presentation(), dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (!(src[c] & (1u << i))) continue;
      const std::uint32_t face = src[c] & ~(1u << i);
      const std::size_t r =
          static_cast<std::size_t>(std::lower_bound(dst.begin(), dst.end(), face,
                                                    [&](std::uint32_t a, std::uint32_t b) {
                                                      return lex_less(a, b);
                                                    }) -
                                   dst.begin());
      m(r, c) = j % 2 == 0 ? seq[i] : -seq[i];
      ++j;
    }
  }
  return m;
}

/// Builds the complex and verifies d_k d_{k+1} = 0 in S.
template <CoefficientField F>
KoszulComplex<F> koszul_complex(const ElementSequence<F>& seq) {
  const std::size_t d = seq.size();
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "Koszul complex of an empty sequence");
  if (d > kMaxKoszulLength) throw Error(ErrorCode::TooLong, "Koszul complex limited to 8 elements");
  KoszulComplex<F> kc{seq, {}};
  for (std::size_t k = 1; k <= d; ++k) kc.differentials.push_back(koszul_differential(seq, k));
  for (std::size_t k = 1; k < d; ++k) {
    const auto prod = kc.differentials[k - 1] * kc.differentials[k];
    if (!equal_in_ring(prod, CoeffMatrix<F>(seq.presentation(), prod.rows(), prod.cols()))) {
      throw Error(ErrorCode::InternalError, "Koszul differentials do not compose to zero");
    }
  }
  return kc;
}

/// Exterior powers of A for levels 0..d.
template <CoefficientField F>
struct ComparisonMap {
  CoeffMatrix<F> a;
  std::vector<CoeffMatrix<F>> levels;
};

template <CoefficientField F>
CoeffMatrix<F> exterior_power_map(const CoeffMatrix<F>& a, long k) {
  if (k < 0 || static_cast<std::size_t>(k) > a.rows()) {
    throw Error(ErrorCode::BadLevel, "exterior power level out of range");
  }
  return exterior_power(a, static_cast<std::size_t>(k));
}

template <CoefficientField F>
ComparisonMap<F> comparison_map(const CoeffMatrix<F>& a) {
  ComparisonMap<F> cm{a, {}};
  for (std::size_t k = 0; k <= a.rows(); ++k) cm.levels.push_back(exterior_power(a, k));
  return cm;
}

/// Throws NotALift unless A is d x d and y = A x in S.
template <CoefficientField F>
void require_lift(const ElementSequence<F>& x, const ElementSequence<F>& y, const CoeffMatrix<F>& a) {
  if (x.size() != y.size() || a.rows() != y.size() || a.cols() != x.size()) {
    throw Error(ErrorCode::NotALift, "matrix shape does not match the sequences");
  }
  const auto ax = a.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!is_zero_in(ax[i] - y[i], x.presentation())) {
      throw Error(ErrorCode::NotALift, "y_" + std::to_string(i + 1) + " differs from (A x)_" +
                                           std::to_string(i + 1));
    }
  }
}

/// With y = A x, the comparison K(y) -> K(x) is (wedge^k A)^T at level k. Checks
/// d^x_k (wedge^k A)^T = (wedge^(k-1) A)^T d^y_k in S for every k.
template <CoefficientField F>
bool chain_map_check(const ElementSequence<F>& x, const ElementSequence<F>& y, const CoeffMatrix<F>& a) {
  require_lift(x, y, a);
  const auto kx = koszul_complex(x);
  const auto ky = koszul_complex(y);
  const auto cm = comparison_map(a);
  for (std::size_t k = 1; k <= x.size(); ++k) {
    const auto lhs = kx.differential(k) * cm.levels[k].transpose();
    const auto rhs = cm.levels[k - 1].transpose() * ky.differential(k);
    if (!equal_in_ring(lhs, rhs)) return false;
  }
  return true;
}

/// (y_1...y_d)^d (det A - det B) in (y)^[d+1].
template <CoefficientField F>
bool detcor_check(const ElementSequence<F>& y, const CoeffMatrix<F>& a, const CoeffMatrix<F>& b,
                  const ElementSequence<F>& x) {
  require_lift(x, y, a);
  require_lift(x, y, b);
  const std::size_t d = y.size();
  const auto lhs = y.product().pow(d) * (determinant(a) - determinant(b));
  return ideal_member(lhs, bracket_power(y, d + 1).ideal).member;
}

struct RegularSequenceResult {
  bool regular = false;
  std::optional<std::size_t> first_failure;  // 1-based
};

/// Successive colon checks (x_1..x_{i-1}) : x_i = (x_1..x_{i-1}), plus properness.
template <CoefficientField F>
RegularSequenceResult is_regular_sequence(const ElementSequence<F>& seq) {
  const auto& pres = seq.presentation();
  std::vector<Polynomial<F>> prefix;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Ideal<F> prev(pres, prefix);
    prefix.push_back(seq[i]);
    const std::size_t pos = i + 1;
    if (Ideal<F>(pres, prefix).is_unit()) return {false, pos};
    if (is_zero_in(seq[i], pres)) return {false, pos};
    if (!ideal_contains(prev, colon(prev, seq[i]))) return {false, pos};
  }
  return {true, std::nullopt};
}

}  // namespace paramkit
