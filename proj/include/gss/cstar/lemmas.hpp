#pragma once

#include "gss/cstar/algebra.hpp"

namespace gss::cstar {

// Does sum_j omega_{x_j, y_j} vanish? Decided by summing the trace-duality
// matrices.
template <class S>
bool like_tensor_check(const std::vector<Vector<S>>& xs, const std::vector<Vector<S>>& ys,
                       const Tolerance& tol = {}) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("like-tensor needs equal-length nonempty lists");
  const Index n = xs.front().size();
  Matrix<S> sum = Matrix<S>::Constant(n, n, ScalarOps<S>::from_int(0));
  typename ScalarOps<S>::Weight scale = ScalarOps<S>::abs2(ScalarOps<S>::from_int(0));
  for (size_t j = 0; j < xs.size(); ++j) {
    sum += hermitian_outer(xs[j], ys[j]);
    scale = scale + squared_norm(xs[j]) + squared_norm(ys[j]);
  }
  if constexpr (ScalarOps<S>::exact) {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (!ScalarOps<S>::is_zero(sum(i, j))) return false;
    return true;
  } else {
    double fro = std::sqrt(ScalarOps<S>::weight_to_double(squared_norm(flatten(sum))));
    double rel = fro / std::max(ScalarOps<S>::weight_to_double(scale), 1e-300);
    if (rel < tol.decide_tol) return true;
    if (rel >= tol.indeterminate_band) return false;
    throw IndeterminateError("like-tensor sum inside tolerance band", rel);
  }
}

// When the sum vanishes, produce the coefficient matrix C with
//   sum_j conj(C_{jk}) x_j = 0  for every k,
//   sum_k C_{jk} y_k = y_j      for every j,
// built as C = A B from a basis of span{y_j}: A holds the coordinates of
// the y_j in the basis and B expresses the basis back in terms of the y_k.
// Exact mode takes a maximal independent subfamily of the y_j as the basis;
// float mode orthonormalizes.
template <class S>
Matrix<S> like_tensor_decompose(const std::vector<Vector<S>>& xs, const std::vector<Vector<S>>& ys,
                                const Tolerance& tol = {}) {
  if (!like_tensor_check(xs, ys, tol))
    throw std::invalid_argument("decompose called on a non-vanishing functional sum");
  const Index m = static_cast<Index>(ys.size());
  Matrix<S> c = Matrix<S>::Constant(m, m, ScalarOps<S>::from_int(0));

  bool all_zero = true;
  for (const auto& y : ys)
    for (Index i = 0; i < y.size(); ++i)
      if (!ScalarOps<S>::is_zero(y(i))) all_zero = false;
  if (all_zero) return c;  // C = 0 handles the trivial case

  std::vector<Vector<S>> basis;
  std::vector<Index> basis_index;  // exact mode: which y spans slot l
  if constexpr (ScalarOps<S>::exact) {
    for (Index j = 0; j < m; ++j) {
      if (!in_span(basis, ys[static_cast<size_t>(j)], tol)) {
        basis.push_back(ys[static_cast<size_t>(j)]);
        basis_index.push_back(j);
      }
    }
  } else {
    for (Index j = 0; j < m; ++j) {
      Vector<S> v = ys[static_cast<size_t>(j)];
      for (const auto& e : basis) v -= e * inner_product(v, e);
      double norm = std::sqrt(ScalarOps<S>::weight_to_double(squared_norm(v)));
      if (norm > tol.indeterminate_band) {
        basis.push_back(v / S(norm));
        basis_index.push_back(j);
      }
    }
  }
  const Index r = static_cast<Index>(basis.size());

  // A: coordinates of each y_j in the basis.
  Matrix<S> a = Matrix<S>::Constant(m, r, ScalarOps<S>::from_int(0));
  for (Index j = 0; j < m; ++j) {
    if constexpr (ScalarOps<S>::exact) {
      auto coords = span_coefficients(basis, ys[static_cast<size_t>(j)], tol);
      if (!coords) throw std::logic_error("basis failed to span a y vector");
      a.row(j) = coords->transpose();
    } else {
      for (Index l = 0; l < r; ++l)
        a(j, l) = inner_product(ys[static_cast<size_t>(j)], basis[static_cast<size_t>(l)]);
    }
  }

  // B: each basis vector in terms of the y_k.
  Matrix<S> b = Matrix<S>::Constant(r, m, ScalarOps<S>::from_int(0));
  if constexpr (ScalarOps<S>::exact) {
    for (Index l = 0; l < r; ++l) b(l, basis_index[static_cast<size_t>(l)]) = ScalarOps<S>::from_int(1);
  } else {
    std::vector<Vector<S>> y_cols(ys.begin(), ys.end());
    for (Index l = 0; l < r; ++l) {
      auto coords = span_coefficients(y_cols, basis[static_cast<size_t>(l)], tol);
      if (!coords) throw std::logic_error("basis vector escaped span{y}");
      b.row(l) = coords->transpose();
    }
  }
  return a * b;
}

// Both identities of the decomposition, as a checkable predicate.
template <class S>
bool like_tensor_verify(const std::vector<Vector<S>>& xs, const std::vector<Vector<S>>& ys,
                        const Matrix<S>& c, double float_tol = 1e-10) {
  const Index m = static_cast<Index>(xs.size());
  const Index n = xs.front().size();
  double worst = 0.0;
  for (Index k = 0; k < m; ++k) {
    Vector<S> acc = Vector<S>::Constant(n, ScalarOps<S>::from_int(0));
    for (Index j = 0; j < m; ++j) acc += xs[static_cast<size_t>(j)] * conj_of(c(j, k));
    if constexpr (ScalarOps<S>::exact) {
      for (Index i = 0; i < n; ++i)
        if (!ScalarOps<S>::is_zero(acc(i))) return false;
    } else {
      worst = std::max(worst, std::sqrt(ScalarOps<S>::weight_to_double(squared_norm(acc))));
    }
  }
  for (Index j = 0; j < m; ++j) {
    Vector<S> acc = Vector<S>::Constant(n, ScalarOps<S>::from_int(0));
    for (Index k = 0; k < m; ++k) acc += ys[static_cast<size_t>(k)] * c(j, k);
    acc -= ys[static_cast<size_t>(j)];
    if constexpr (ScalarOps<S>::exact) {
      for (Index i = 0; i < n; ++i)
        if (!ScalarOps<S>::is_zero(acc(i))) return false;
    } else {
      worst = std::max(worst, std::sqrt(ScalarOps<S>::weight_to_double(squared_norm(acc))));
    }
  }
  if constexpr (ScalarOps<S>::exact) return true;
  else return worst <= float_tol;
}

// Solution space of: trace(B x y^*) = 0 whenever trace(A x y^*) = 0.
// Constraints are assembled from a spanning family of probe vectors x, each
// paired with a basis of (Ax)^⊥ (all y when Ax = 0); the answer is the
// nullspace of the stacked system. For nonzero A the space is span{A}.
template <class S>
struct SublemmaResult {
  std::vector<Matrix<S>> basis;
  int dimension = 0;
};

template <class S>
SublemmaResult<S> sublemma_solve(const Matrix<S>& a, const Tolerance& tol = {}) {
  const Index n = a.rows();
  if (n != a.cols() || n < 1) throw std::invalid_argument("sublemma needs a square matrix");

  std::vector<Vector<S>> probes;
  auto unit = [&](Index i) {
    Vector<S> v = Vector<S>::Constant(n, ScalarOps<S>::from_int(0));
    v(i) = ScalarOps<S>::from_int(1);
    return v;
  };
  for (Index j = 0; j < n; ++j) probes.push_back(unit(j));
  for (Index j = 0; j < n; ++j)
    for (Index k = j + 1; k < n; ++k) {
      probes.push_back(unit(j) + unit(k));
      probes.push_back(unit(j) + unit(k) * ScalarOps<S>::imag_unit());
    }
  // When A is rank deficient, the pairs (u, v) with u in ker A constrain B
  // on the whole kernel; a kernel basis joins the probe family so the
  // constraint space is spanned there too.
  for (const auto& k : nullspace(a, tol)) probes.push_back(k);

  std::vector<Vector<S>> rows;
  double a_scale = std::sqrt(ScalarOps<S>::weight_to_double(squared_norm(flatten(a)))) + 1e-300;
  for (const auto& x : probes) {
    Vector<S> w = a * x;
    bool w_zero;
    if constexpr (ScalarOps<S>::exact) {
      w_zero = true;
      for (Index i = 0; i < n; ++i)
        if (!ScalarOps<S>::is_zero(w(i))) w_zero = false;
    } else {
      double wn = std::sqrt(ScalarOps<S>::weight_to_double(squared_norm(w)));
      w_zero = wn <= tol.decide_tol * a_scale;
    }
    std::vector<Vector<S>> y_basis;
    if (w_zero) {
      for (Index l = 0; l < n; ++l) y_basis.push_back(unit(l));
    } else {
      Matrix<S> row(1, n);
      for (Index i = 0; i < n; ++i) row(0, i) = conj_of(w(i));
      y_basis = nullspace(row, tol);
    }
    for (const auto& y : y_basis) {
      Vector<S> r(n * n);
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) r(j * n + k) = conj_of(y(j)) * x(k);
      rows.push_back(std::move(r));
    }
  }

  Matrix<S> constraints(static_cast<Index>(rows.size()), n * n);
  for (Index i = 0; i < constraints.rows(); ++i)
    constraints.row(i) = rows[static_cast<size_t>(i)].transpose();

  SublemmaResult<S> result;
  for (const auto& v : nullspace(constraints, tol)) {
    Matrix<S> b(n, n);
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) b(j, k) = v(j * n + k);
    result.basis.push_back(std::move(b));
  }
  result.dimension = static_cast<int>(result.basis.size());
  return result;
}

}  // namespace gss::cstar
