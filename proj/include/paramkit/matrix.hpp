#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "paramkit/ideal_ops.hpp"

namespace paramkit {

/// Dense matrix of ring elements over a presentation.
template <CoefficientField F>
class CoeffMatrix {
 public:
  CoeffMatrix() = default;

  CoeffMatrix(PresentationPtr<F> pres, std::size_t rows, std::size_t cols)
      : pres_(std::move(pres)), rows_(rows), cols_(cols),
        data_(rows * cols, Polynomial<F>(pres_->ambient())) {}

  CoeffMatrix(PresentationPtr<F> pres, const std::vector<std::vector<Polynomial<F>>>& rows)
      : pres_(std::move(pres)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
    Ideal<F> carrier(pres_, {});
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "matrix rows have different lengths");
      for (const auto& e : r) data_.push_back(carrier.adopt(e));
    }
  }

  static CoeffMatrix identity(PresentationPtr<F> pres, std::size_t n) {
    CoeffMatrix m(pres, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = pres->constant(1);
    return m;
  }

  static CoeffMatrix diagonal(PresentationPtr<F> pres, const std::vector<Polynomial<F>>& entries) {
    CoeffMatrix m(pres, entries.size(), entries.size());
    Ideal<F> carrier(pres, {});
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = carrier.adopt(entries[i]);
    return m;
  }

  const PresentationPtr<F>& presentation() const { return pres_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Polynomial<F>& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Polynomial<F>& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::vector<Polynomial<F>>> to_rows() const {
    std::vector<std::vector<Polynomial<F>>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j));
    }
    return out;
  }

  CoeffMatrix transpose() const {
    CoeffMatrix t(pres_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  /// Entrywise q-th powers A^[q].
  CoeffMatrix bracket(std::uint64_t q) const {
    CoeffMatrix m = *this;
    for (auto& e : m.data_) e = e.pow(q);
    return m;
  }

  friend CoeffMatrix operator*(const CoeffMatrix& a, const CoeffMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::LengthMismatch, "matrix shapes do not compose");
    CoeffMatrix c(a.pres_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend CoeffMatrix operator+(const CoeffMatrix& a, const CoeffMatrix& b) {
    check_shape(a, b);
    CoeffMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend CoeffMatrix operator-(const CoeffMatrix& a, const CoeffMatrix& b) {
    check_shape(a, b);
    CoeffMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  /// A * x for a column of ring elements.
  ElementSequence<F> apply(const ElementSequence<F>& x) const {
    if (x.size() != cols_) throw Error(ErrorCode::LengthMismatch, "matrix and sequence sizes differ");
    std::vector<Polynomial<F>> out;
    for (std::size_t i = 0; i < rows_; ++i) {
      Polynomial<F> s(pres_->ambient());
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!(*this)(i, j).is_zero()) s += (*this)(i, j) * x[j];
      }
      out.push_back(std::move(s));
    }
    return ElementSequence<F>(pres_, std::move(out));
  }

 private:
  static void check_shape(const CoeffMatrix& a, const CoeffMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw Error(ErrorCode::LengthMismatch, "matrix shapes differ");
    }
  }

  PresentationPtr<F> pres_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial<F>> data_;
};

/// Entrywise equality in S.
template <CoefficientField F>
bool equal_in_ring(const CoeffMatrix<F>& a, const CoeffMatrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const auto& pres = a.presentation();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!is_zero_in(a(i, j) - b(i, j), pres)) return false;
    }
  }
  return true;
}

/// Entrywise equality of sequences in S.
template <CoefficientField F>
bool equal_in_ring(const ElementSequence<F>& a, const ElementSequence<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero_in(a[i] - b[i], a.presentation())) return false;
  }
  return true;
}

/// Lexicographic comparison of equal-size subsets by their sorted element lists.
inline bool lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & diff & (~diff + 1)) != 0;
}

/// k-subsets of {0..n-1} as bitmasks, in lexicographic order of their sorted
/// element lists.
inline std::vector<std::uint32_t> lex_subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  auto rec = [&](auto& self, std::size_t start, std::size_t left, std::uint32_t mask) -> void {
    if (left == 0) {
      out.push_back(mask);
      return;
    }
    for (std::size_t i = start; i + left <= n; ++i) self(self, i + 1, left - 1, mask | (1u << i));
  };
  rec(rec, 0, k, 0);
  return out;
}

namespace detail {

// Minors of a square matrix by Laplace expansion along the first row of the
// row set, memoized on (row set, column set).
template <CoefficientField F>
class MinorTable {
 public:
  explicit MinorTable(const CoeffMatrix<F>& a) : a_(a) {}

  Polynomial<F> minor(std::uint32_t rows, std::uint32_t cols) {
    if (rows == 0) return a_.presentation()->constant(1);
    const auto key = (std::uint64_t{rows} << 32) | cols;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::size_t r = static_cast<std::size_t>(__builtin_ctz(rows));
    Polynomial<F> sum(a_.presentation()->ambient());
    std::size_t pos = 0;
    for (std::size_t j = 0; j < a_.cols(); ++j) {
      if (!(cols & (1u << j))) continue;
      const auto& entry = a_(r, j);
      if (!entry.is_zero()) {
        Polynomial<F> term = entry * minor(rows & ~(1u << r), cols & ~(1u << j));
        if (pos % 2 == 0) sum += term;
        else sum -= term;
      }
      ++pos;
    }
    return memo_.emplace(key, std::move(sum)).first->second;
  }

 private:
  const CoeffMatrix<F>& a_;
  std::map<std::uint64_t, Polynomial<F>> memo_;
};

}  // namespace detail

template <CoefficientField F>
Polynomial<F> determinant(const CoeffMatrix<F>& a) {
  if (!a.is_square()) throw Error(ErrorCode::LengthMismatch, "determinant of a non-square matrix");
  const std::uint32_t all = a.rows() >= 32 ? ~0u : (1u << a.rows()) - 1;
  detail::MinorTable<F> table(a);
  return table.minor(all, all);
}

/// Matrix of k x k minors of a square matrix: entry (R, C) is the minor on row
/// set R and column set C, both indexed by lex_subsets(d, k).
template <CoefficientField F>
CoeffMatrix<F> exterior_power(const CoeffMatrix<F>& a, std::size_t k) {
  if (!a.is_square()) throw Error(ErrorCode::LengthMismatch, "exterior power of a non-square matrix");
  const std::size_t d = a.rows();
  if (k > d) throw Error(ErrorCode::BadLevel, "exterior power level exceeds the matrix size");
  const auto basis = lex_subsets(d, k);
  CoeffMatrix<F> out(a.presentation(), basis.size(), basis.size());
  detail::MinorTable<F> table(a);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) out(i, j) = table.minor(basis[i], basis[j]);
  }
  return out;
}

}  // namespace paramkit
