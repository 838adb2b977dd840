#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "gss/scalar.hpp"

namespace gss {

namespace detail {

// Echelon reduction over an exact field. Returns pivot columns; `m` is left
// in row echelon form. Pivots are chosen by largest |.|^2 to slow the
// growth of the fractions.
template <class S>
std::vector<Index> exact_echelon(Matrix<S>& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index best = -1;
    typename ScalarOps<S>::Weight best_w = ScalarOps<S>::abs2(ScalarOps<S>::from_int(0));
    for (Index r = row; r < m.rows(); ++r) {
      if (!ScalarOps<S>::is_zero(m(r, col))) {
        auto w = abs2_of(m(r, col));
        if (best < 0 || best_w < w) {
          best = r;
          best_w = w;
        }
      }
    }
    if (best < 0) continue;
    if (best != row) m.row(best).swap(m.row(row));
    S inv_pivot = ScalarOps<S>::from_int(1) / m(row, col);
    for (Index c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv_pivot;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || ScalarOps<S>::is_zero(m(r, col))) continue;
      S f = m(r, col);
      for (Index c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int float_rank_from_singular_values(const Eigen::VectorXd& sv, const Tolerance& tol,
                                           double* margin_out) {
  if (sv.size() == 0 || sv(0) == 0.0) {
    if (margin_out) *margin_out = std::numeric_limits<double>::infinity();
    return 0;
  }
  double scale = sv(0);
  int rank = 0;
  double margin = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < sv.size(); ++i) {
    double ratio = sv(i) / scale;
    if (ratio >= tol.indeterminate_band) {
      ++rank;
      margin = std::min(margin, ratio / tol.indeterminate_band);
    } else if (ratio < tol.decide_tol) {
      margin = std::min(margin, tol.decide_tol / std::max(ratio, 1e-300));
    } else {
      throw IndeterminateError("rank decision inside tolerance band", ratio);
    }
  }
  if (margin_out) *margin_out = margin;
  return rank;
}

}  // namespace detail

template <class S>
int rank_of(Matrix<S> m, const Tolerance& tol = {}, double* margin_out = nullptr) {
  if (m.rows() == 0 || m.cols() == 0) {
    if (margin_out) *margin_out = std::numeric_limits<double>::infinity();
    return 0;
  }
  if constexpr (ScalarOps<S>::exact) {
    if (margin_out) *margin_out = std::numeric_limits<double>::infinity();
    // Row scaling preserves rank; primitive rows keep the fractions small.
    for (Index i = 0; i < m.rows(); ++i) {
      Vector<S> row = m.row(i).transpose();
      m.row(i) = primitive_ray(std::move(row)).transpose();
    }
    return static_cast<int>(detail::exact_echelon(m).size());
  } else {
    Eigen::JacobiSVD<Matrix<S>> svd(m);
    return detail::float_rank_from_singular_values(svd.singularValues(), tol, margin_out);
  }
}

template <class S>
Matrix<S> columns_matrix(const std::vector<Vector<S>>& cols) {
  if (cols.empty()) return Matrix<S>(0, 0);
  Matrix<S> m(cols.front().size(), static_cast<Index>(cols.size()));
  for (Index j = 0; j < m.cols(); ++j) m.col(j) = cols[static_cast<size_t>(j)];
  return m;
}

// Is `target` in the linear span of `span`? Float mode decides by the
// relative least-squares residual and reports it as the margin; residuals
// inside the tolerance band raise IndeterminateError.
template <class S>
bool in_span(const std::vector<Vector<S>>& span, const Vector<S>& target,
             const Tolerance& tol = {}, double* margin_out = nullptr) {
  bool target_zero = true;
  for (Index i = 0; i < target.size(); ++i)
    if (!ScalarOps<S>::is_zero(target(i))) target_zero = false;
  if (target_zero) {
    if (margin_out) *margin_out = std::numeric_limits<double>::infinity();
    return true;
  }
  if (span.empty()) {
    if (margin_out) *margin_out = std::numeric_limits<double>::infinity();
    return false;
  }
  if constexpr (ScalarOps<S>::exact) {
    Matrix<S> a = columns_matrix(span);
    Matrix<S> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = target;
    int ra = rank_of(a);
    int raug = rank_of(aug);
    if (margin_out) *margin_out = std::numeric_limits<double>::infinity();
    return ra == raug;
  } else {
    Matrix<S> a = columns_matrix(span);
    Vector<S> c = a.colPivHouseholderQr().solve(target);
    double res = std::sqrt(ScalarOps<S>::weight_to_double(squared_norm<S>(a * c - target)));
    double rel = res / std::sqrt(ScalarOps<S>::weight_to_double(squared_norm<S>(target)));
    if (margin_out) *margin_out = rel;
    if (rel < tol.decide_tol) return true;
    if (rel >= tol.indeterminate_band) return false;
    throw IndeterminateError("span membership inside tolerance band", rel);
  }
}

// Coefficients expressing `target` in the span, when it is a member.
template <class S>
std::optional<Vector<S>> span_coefficients(const std::vector<Vector<S>>& span,
                                           const Vector<S>& target, const Tolerance& tol = {}) {
  if (span.empty()) return std::nullopt;
  Matrix<S> a = columns_matrix(span);
  if constexpr (ScalarOps<S>::exact) {
    // Solve by echelon reduction of [a | target].
    Matrix<S> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = target;
    Matrix<S> work = aug;
    std::vector<Index> pivots = detail::exact_echelon(work);
    for (Index p : pivots)
      if (p == a.cols()) return std::nullopt;  // inconsistent
    Vector<S> coeff = Vector<S>::Constant(a.cols(), ScalarOps<S>::from_int(0));
    for (size_t i = 0; i < pivots.size(); ++i)
      coeff(pivots[i]) = work(static_cast<Index>(i), a.cols());
    return coeff;
  } else {
    Vector<S> c = a.colPivHouseholderQr().solve(target);
    double res = std::sqrt(ScalarOps<S>::weight_to_double(squared_norm<S>(a * c - target)));
    double scale = std::sqrt(ScalarOps<S>::weight_to_double(squared_norm<S>(target)));
    if (scale == 0.0) scale = 1.0;
    if (res / scale >= tol.decide_tol) return std::nullopt;
    return c;
  }
}

// Basis of { v : m v = 0 }.
template <class S>
std::vector<Vector<S>> nullspace(const Matrix<S>& m, const Tolerance& tol = {}) {
  std::vector<Vector<S>> basis;
  if (m.cols() == 0) return basis;
  if (m.rows() == 0) {
    for (Index j = 0; j < m.cols(); ++j) {
      Vector<S> e = Vector<S>::Constant(m.cols(), ScalarOps<S>::from_int(0));
      e(j) = ScalarOps<S>::from_int(1);
      basis.push_back(e);
    }
    return basis;
  }
  if constexpr (ScalarOps<S>::exact) {
    Matrix<S> work = m;
    std::vector<Index> pivots = detail::exact_echelon(work);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    for (Index free = 0; free < m.cols(); ++free) {
      if (is_pivot[static_cast<size_t>(free)]) continue;
      Vector<S> v = Vector<S>::Constant(m.cols(), ScalarOps<S>::from_int(0));
      v(free) = ScalarOps<S>::from_int(1);
      for (size_t i = 0; i < pivots.size(); ++i)
        v(pivots[i]) = -work(static_cast<Index>(i), free);
      basis.push_back(v);
    }
    return basis;
  } else {
    Eigen::JacobiSVD<Matrix<S>> svd(m, Eigen::ComputeFullV);
    double margin = 0.0;
    int r = detail::float_rank_from_singular_values(svd.singularValues(), tol, &margin);
    const Matrix<S>& v = svd.matrixV();
    for (Index j = r; j < v.cols(); ++j) basis.push_back(v.col(j));
    return basis;
  }
}

// All 2x2 minors of the pair (a, b); the pair is linearly dependent exactly
// when every minor vanishes.
template <class S>
std::vector<S> wedge_minors(const Vector<S>& a, const Vector<S>& b) {
  std::vector<S> minors;
  for (Index i = 0; i < a.size(); ++i)
    for (Index j = i + 1; j < a.size(); ++j) minors.push_back(a(i) * b(j) - a(j) * b(i));
  return minors;
}

template <class S>
bool linearly_dependent(const Vector<S>& a, const Vector<S>& b, const Tolerance& tol = {}) {
  if constexpr (ScalarOps<S>::exact) {
    for (const S& m : wedge_minors(a, b))
      if (!ScalarOps<S>::is_zero(m)) return false;
    return true;
  } else {
    double scale = std::sqrt(ScalarOps<S>::weight_to_double(squared_norm(a)) *
                             ScalarOps<S>::weight_to_double(squared_norm(b)));
    if (scale == 0.0) return true;
    double worst = 0.0;
    for (const S& m : wedge_minors(a, b))
      worst = std::max(worst, std::sqrt(ScalarOps<S>::weight_to_double(abs2_of(m))));
    double rel = worst / scale;
    if (rel < tol.decide_tol) return true;
    if (rel >= tol.indeterminate_band) return false;
    throw IndeterminateError("dependence test inside tolerance band", rel);
  }
}

}  // namespace gss
