#pragma once

#include <functional>
#include <optional>

#include "gss/banach/model.hpp"
#include "gss/closure/space.hpp"

namespace gss::banach {

// Enumerate the sign vectors of {-1,1}^n as functionals.
template <class S>
std::vector<Vector<S>> real_sign_vectors(int n) {
  if (n > 20) throw std::invalid_argument("sign-vector enumeration capped at 20 coordinates");
  std::vector<Vector<S>> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    Vector<S> v(n);
    for (int i = 0; i < n; ++i)
      v(i) = ScalarOps<S>::from_int((bits >> i) & 1 ? -1 : 1);
    out.push_back(std::move(v));
  }
  return out;
}

// The structure space of a model with finitely many dual vertices: one point
// per scalar orbit of vertices.
template <class S>
std::vector<GssPointB<S>> build_gss_points(const NormModel<S>& model, const Tolerance& tol = {}) {
  std::vector<Vector<S>> vertices;
  switch (model.kind) {
    case NormKind::polyhedral:
      vertices = model.dual_vertices;
      break;
    case NormKind::ell1:
      if (model.complex_field)
        throw std::invalid_argument("complex ell1 has a continuum of points; use torus points");
      vertices = real_sign_vectors<S>(model.dimension);
      break;
    case NormKind::mixed3d:
      throw std::invalid_argument("mixed3d has a continuum of points; construct them directly");
  }
  if (vertices.empty()) throw std::invalid_argument("polyhedral model without dual vertices");
  std::vector<GssPointB<S>> points;
  for (const auto& v : vertices) {
    GssPointB<S> p = GssPointB<S>::from_vector(v);
    bool seen = false;
    for (const auto& q : points)
      if (points_equal(p, q, tol)) seen = true;
    if (!seen) points.push_back(std::move(p));
  }
  return points;
}

// Kernel-intersection closure test: with singleton exposing functionals,
// ker p belongs to S^= exactly when p lies in the span of the functionals
// of S.
template <class S>
bool closure_membership_b(const NormModel<S>& model, const std::vector<GssPointB<S>>& s,
                          const GssPointB<S>& p, const Tolerance& tol = {},
                          double* margin_out = nullptr) {
  if (!model.is_extreme_dual(p.functional, tol))
    throw std::invalid_argument("closure membership asked for a functional outside the structure space");
  std::vector<Vector<S>> span;
  span.reserve(s.size());
  for (const auto& q : s) span.push_back(q.functional);
  return in_span(span, p.functional, tol, margin_out);
}

namespace detail {

template <class S>
bool same_kernel(const Vector<S>& a, const Vector<S>& b, const Tolerance& tol) {
  return linearly_dependent(a, b, tol);
}

// mixed3d: every extreme dual direction has first or second coordinate zero,
// so the extreme directions inside span{p,q} come from intersecting the span
// with those two coordinate planes.
template <class S>
std::optional<Vector<S>> mixed3d_witness(const Vector<S>& p, const Vector<S>& q,
                                         const Tolerance& tol) {
  for (Index coord : {Index(0), Index(1)}) {
    bool p_zero = ScalarOps<S>::is_zero(p(coord));
    bool q_zero = ScalarOps<S>::is_zero(q(coord));
    if (p_zero && q_zero) {
      // The whole span lies inside the plane; every direction in it is
      // extreme, so any direction off the two given lines witnesses.
      for (long long t = 1; t <= 4; ++t) {
        Vector<S> w = p + q * ScalarOps<S>::from_int(t);
        if (!same_kernel(w, p, tol) && !same_kernel(w, q, tol)) return w;
      }
      continue;
    }
    // One-dimensional intersection: q_c * p - p_c * q has coordinate c zero.
    Vector<S> w = p * q(coord) - q * p(coord);
    bool zero = true;
    for (Index i = 0; i < w.size(); ++i)
      if (!ScalarOps<S>::is_zero(w(i))) zero = false;
    if (zero) continue;
    if (!same_kernel(w, p, tol) && !same_kernel(w, q, tol)) return w;
  }
  return std::nullopt;
}

}  // namespace detail

// Is {ker p, ker q} closed? Searches the extreme dual points lying in
// span{p, q} for one with a kernel distinct from both. Polyhedral and real
// ell1 models enumerate their dual vertices; mixed3d intersects the span
// with the two coordinate planes carrying the extreme directions.
template <class S>
bool pair_closed_bruteforce(const NormModel<S>& model, const GssPointB<S>& p,
                            const GssPointB<S>& q, const Tolerance& tol = {},
                            Vector<S>* witness_out = nullptr) {
  if (points_equal(p, q, tol)) throw std::invalid_argument("pair test requires two distinct points");
  switch (model.kind) {
    case NormKind::polyhedral:
    case NormKind::ell1: {
      std::vector<Vector<S>> vertices = model.kind == NormKind::polyhedral
                                            ? model.dual_vertices
                                            : real_sign_vectors<S>(model.dimension);
      std::vector<Vector<S>> span = {p.functional, q.functional};
      for (const auto& w : vertices) {
        if (detail::same_kernel(w, p.functional, tol)) continue;
        if (detail::same_kernel(w, q.functional, tol)) continue;
        if (in_span(span, w, tol)) {
          if (witness_out) *witness_out = w;
          return false;
        }
      }
      return true;
    }
    case NormKind::mixed3d: {
      auto w = detail::mixed3d_witness(p.functional, q.functional, tol);
      if (w) {
        if (witness_out) *witness_out = *w;
        return false;
      }
      return true;
    }
  }
  return true;
}

// Structure-space image of an isometry T between two models, acting on
// functionals by f |-> f ∘ T^{-1}. Verified on the dual vertices: the
// adjoint action must permute them modulo scalars.
template <class S>
class IsometryInducedMap {
 public:
  IsometryInducedMap(Matrix<S> t, const NormModel<S>& src, const NormModel<S>& dst,
                     const Tolerance& tol = {})
      : tol_(tol) {
    if (t.rows() != src.dimension || t.cols() != src.dimension || src.dimension != dst.dimension)
      throw std::invalid_argument("isometry must be a square matrix of the model dimension");
    auto inv = span_coefficients_matrix_inverse(t);
    if (!inv) throw std::invalid_argument("isometry matrix is singular");
    adjoint_ = hermitian_unconjugated_transpose(*inv);
    verify(src, dst);
  }

  GssPointB<S> operator()(const GssPointB<S>& p) const {
    return GssPointB<S>::from_vector(adjoint_ * p.functional);
  }

 private:
  Matrix<S> adjoint_;  // (T^{-1})^T, plain transpose: functionals pair without conjugation
  Tolerance tol_;

  static std::optional<Matrix<S>> span_coefficients_matrix_inverse(const Matrix<S>& m) {
    // Invert by solving m X = I with the shared echelon solver.
    Matrix<S> x(m.rows(), m.cols());
    std::vector<Vector<S>> cols;
    for (Index j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    for (Index j = 0; j < m.cols(); ++j) {
      Vector<S> e = Vector<S>::Constant(m.rows(), ScalarOps<S>::from_int(0));
      e(j) = ScalarOps<S>::from_int(1);
      auto c = span_coefficients(cols, e);
      if (!c) return std::nullopt;
      x.col(j) = *c;
    }
    return x;
  }

  static Matrix<S> hermitian_unconjugated_transpose(const Matrix<S>& m) {
    Matrix<S> r(m.cols(), m.rows());
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
    return r;
  }

  void verify(const NormModel<S>& src, const NormModel<S>& dst) const {
    if (src.kind == NormKind::mixed3d || dst.kind == NormKind::mixed3d) return;
    std::vector<GssPointB<S>> src_pts = build_gss_points(src, tol_);
    std::vector<GssPointB<S>> dst_pts = build_gss_points(dst, tol_);
    if (src_pts.size() != dst_pts.size())
      throw std::invalid_argument("not an isometry for the given norms: point counts differ");
    std::vector<bool> hit(dst_pts.size(), false);
    for (const auto& p : src_pts) {
      GssPointB<S> img = GssPointB<S>::from_vector(adjoint_ * p.functional);
      if (!dst.is_extreme_dual(img.functional, tol_))
        throw std::invalid_argument("not an isometry for the given norms: vertex image is not a vertex");
      bool matched = false;
      for (size_t k = 0; k < dst_pts.size(); ++k) {
        if (!hit[k] && points_equal(img, dst_pts[k], tol_)) {
          hit[k] = true;
          matched = true;
          break;
        }
      }
      if (!matched)
        throw std::invalid_argument("not an isometry for the given norms: images do not permute the points");
    }
  }
};

// The finite closure space induced on a point list by kernel-intersection
// closure. Ground labels are f0, f1, ...
template <class S>
closure::Space induced_space(const NormModel<S>& model, const std::vector<GssPointB<S>>& pts,
                             const Tolerance& tol = {}) {
  const int n = static_cast<int>(pts.size());
  if (n > 20) throw std::invalid_argument("induced space capped at 20 points");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("f" + std::to_string(i));
  std::vector<closure::Subset> family;
  for (closure::Subset mask = 0; mask < (closure::Subset(1) << n); ++mask) {
    std::vector<GssPointB<S>> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (closure::Subset(1) << i)) sub.push_back(pts[static_cast<size_t>(i)]);
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      if (mask & (closure::Subset(1) << i)) continue;
      if (mask == 0) break;
      if (closure_membership_b(model, sub, pts[static_cast<size_t>(i)], tol)) closed = false;
    }
    if (closed) family.push_back(mask);
  }
  return closure::Space::from_masks(std::move(labels), std::move(family));
}

}  // namespace gss::banach
