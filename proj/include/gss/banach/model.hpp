#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gss/linalg.hpp"
#include "gss/scalar.hpp"

namespace gss::banach {

// A point of the structure space of a normed space: a dual functional
// modulo nonzero scalar. The functional acts by plain coefficient pairing
// f(a) = sum_k f_k a_k, with no conjugation.
//
// Canonical form: exact scalars store the canonical primitive integer
// representative of the ray; float scalars are scaled to unit Euclidean
// length with the anchor coordinate rotated positive real. Two points are
// equal exactly when their canonical forms agree.
template <class S>
Vector<S> canonical_functional(Vector<S> v) {
  Index anchor = -1;
  if constexpr (ScalarOps<S>::exact) {
    bool nonzero = false;
    for (Index i = 0; i < v.size(); ++i)
      if (!ScalarOps<S>::is_zero(v(i))) nonzero = true;
    if (!nonzero) throw std::invalid_argument("zero functional rejected at canonicalization");
    return canonical_primitive_ray(std::move(v));
  } else {
    double max_w = 0.0;
    for (Index i = 0; i < v.size(); ++i)
      max_w = std::max(max_w, ScalarOps<S>::weight_to_double(abs2_of(v(i))));
    if (max_w == 0.0) throw std::invalid_argument("zero functional rejected at canonicalization");
    // Anchor on the first coordinate that is a solid fraction of the largest,
    // so the phase choice is stable under perturbation.
    for (Index i = 0; i < v.size() && anchor < 0; ++i)
      if (ScalarOps<S>::weight_to_double(abs2_of(v(i))) >= 1e-14 * max_w) anchor = i;
    double norm = std::sqrt(ScalarOps<S>::weight_to_double(squared_norm(v)));
    S phase = v(anchor);
    double mag = std::sqrt(ScalarOps<S>::weight_to_double(abs2_of(phase)));
    S factor = conj_of(phase) / S(mag * norm);
    for (Index i = 0; i < v.size(); ++i) v(i) = v(i) * factor;
    return v;
  }
}

template <class S>
struct GssPointB {
  Vector<S> functional;  // canonical form

  static GssPointB from_vector(Vector<S> v) { return GssPointB{canonical_functional(std::move(v))}; }
};

template <class S>
bool points_equal(const GssPointB<S>& a, const GssPointB<S>& b, const Tolerance& tol = {}) {
  if (a.functional.size() != b.functional.size()) return false;
  if constexpr (ScalarOps<S>::exact) {
    for (Index i = 0; i < a.functional.size(); ++i)
      if (a.functional(i) != b.functional(i)) return false;
    return true;
  } else {
    Vector<S> d = a.functional - b.functional;
    double res = std::sqrt(ScalarOps<S>::weight_to_double(squared_norm(d)));
    return res < tol.indeterminate_band;
  }
}

enum class NormKind { polyhedral, ell1, mixed3d };

inline std::string norm_kind_name(NormKind k) {
  switch (k) {
    case NormKind::polyhedral: return "polyhedral";
    case NormKind::ell1: return "ell1";
    case NormKind::mixed3d: return "mixed3d";
  }
  return "?";
}

// A finite-dimensional normed space usable by this module: a norm whose
// relevant maximal faces are exposed by a single dual functional each.
// Polyhedral norms carry an explicit dual-vertex list; the ell1 and mixed3d
// kinds have built-in descriptions of their extreme dual points.
template <class S>
struct NormModel {
  NormKind kind;
  bool complex_field;
  int dimension;
  std::vector<Vector<S>> dual_vertices;  // polyhedral only

  static NormModel polyhedral(int dim, bool complex_field, std::vector<Vector<S>> vertices) {
    if (dim < 2) throw std::invalid_argument("models require dimension >= 2");
    for (const auto& v : vertices)
      if (v.size() != dim) throw std::invalid_argument("dual vertex of wrong dimension");
    NormModel m{NormKind::polyhedral, complex_field, dim, std::move(vertices)};
    m.check_vertex_symmetry();
    return m;
  }

  static NormModel ell1(int dim, bool complex_field) {
    if (dim < 2) throw std::invalid_argument("models require dimension >= 2");
    return NormModel{NormKind::ell1, complex_field, dim, {}};
  }

  // R^3 with |(a,b,c)| = || ( ||(a,b)||_inf, c ) ||_2 ; the dual norm is
  // ((|a|+|b|)^2 + c^2)^{1/2}.
  static NormModel mixed3d() { return NormModel{NormKind::mixed3d, false, 3, {}}; }

  // Extreme points of the dual ball, as a predicate on directions.
  //  - polyhedral: proportional to a listed vertex by a unit scalar
  //  - ell1: every coordinate of equal nonzero modulus (sign/torus vectors)
  //  - mixed3d: a = 0 or b = 0 (any such direction normalizes to an extreme
  //    point of the dual ball; certified by sampling in the test suite)
  bool is_extreme_dual(const Vector<S>& f, const Tolerance& tol = {}) const {
    if (f.size() != dimension) return false;
    switch (kind) {
      case NormKind::polyhedral: {
        for (const auto& v : dual_vertices) {
          if (!linearly_dependent(f, v, tol)) continue;
          return true;
        }
        return false;
      }
      case NormKind::ell1: {
        if constexpr (ScalarOps<S>::exact) {
          auto w0 = abs2_of(f(0));
          if (ScalarOps<S>::is_zero(f(0))) return false;
          for (Index i = 1; i < f.size(); ++i)
            if (abs2_of(f(i)) != w0) return false;
          if (!complex_field) {
            // real case: entries must be +/- the same magnitude, which the
            // modulus test above already guarantees
          }
          return true;
        } else {
          double w0 = ScalarOps<S>::weight_to_double(abs2_of(f(0)));
          if (w0 == 0.0) return false;
          for (Index i = 1; i < f.size(); ++i) {
            double wi = ScalarOps<S>::weight_to_double(abs2_of(f(i)));
            if (std::abs(wi - w0) > tol.indeterminate_band * std::max(wi, w0)) return false;
          }
          return true;
        }
      }
      case NormKind::mixed3d: {
        bool a_zero, b_zero, nonzero = false;
        if constexpr (ScalarOps<S>::exact) {
          a_zero = ScalarOps<S>::is_zero(f(0));
          b_zero = ScalarOps<S>::is_zero(f(1));
          for (Index i = 0; i < f.size(); ++i)
            if (!ScalarOps<S>::is_zero(f(i))) nonzero = true;
        } else {
          double scale = std::sqrt(ScalarOps<S>::weight_to_double(squared_norm(f)));
          if (scale == 0.0) return false;
          nonzero = true;
          a_zero = std::sqrt(ScalarOps<S>::weight_to_double(abs2_of(f(0)))) <
                   tol.indeterminate_band * scale;
          b_zero = std::sqrt(ScalarOps<S>::weight_to_double(abs2_of(f(1)))) <
                   tol.indeterminate_band * scale;
        }
        return nonzero && (a_zero || b_zero);
      }
    }
    return false;
  }

 private:
  void check_vertex_symmetry() const {
    for (const auto& v : dual_vertices) {
      bool found = false;
      for (const auto& w : dual_vertices) {
        Vector<S> sum = v + w;
        bool zero = true;
        for (Index i = 0; i < sum.size(); ++i)
          if (!ScalarOps<S>::is_zero(sum(i))) zero = false;
        if (zero) {
          found = true;
          break;
        }
      }
      if (!found)
        throw std::invalid_argument("asymmetric dual-vertex list: missing the negation of a vertex");
    }
  }
};

}  // namespace gss::banach
