#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "gss/rational.hpp"

namespace gss {

using Complex = std::complex<double>;

// A float-mode verdict whose margin fell inside the undecidable band.
// Carries the margin so reports can show how close the call was.
struct IndeterminateError : std::runtime_error {
  double margin;
  explicit IndeterminateError(const std::string& what, double m)
      : std::runtime_error(what + " (margin " + std::to_string(m) + ")"), margin(m) {}
};

// Numeric policy for float mode. Residuals below `decide_tol` count as zero,
// residuals above `indeterminate_band` as nonzero; the band in between is an
// error, never a guess. Exact mode ignores both.
struct Tolerance {
  double decide_tol = 1e-9;
  double indeterminate_band = 1e-6;
};

// Field operations shared by the exact and float scalar backends.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Complex> {
  static constexpr bool exact = false;
  using Weight = double;  // comparable |.|^2
  using RealScalar = double;
  static Complex conj(const Complex& z) { return std::conj(z); }
  static Weight abs2(const Complex& z) { return std::norm(z); }
  static bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }
  static Complex from_int(long long v) { return Complex(static_cast<double>(v), 0.0); }
  static Complex imag_unit() { return Complex(0.0, 1.0); }
  static double weight_to_double(Weight w) { return w; }
};

template <>
struct ScalarOps<GaussianRational> {
  static constexpr bool exact = true;
  using Weight = Rational;
  using RealScalar = Rational;
  static GaussianRational conj(const GaussianRational& z) { return z.conj(); }
  static Weight abs2(const GaussianRational& z) { return z.abs2(); }
  static bool is_zero(const GaussianRational& z) { return z.is_zero(); }
  static GaussianRational from_int(long long v) { return GaussianRational(Rational(v)); }
  static GaussianRational imag_unit() { return {Rational(0), Rational(1)}; }
  static double weight_to_double(const Weight& w) { return w.to_double(); }
};

template <>
struct ScalarOps<double> {
  static constexpr bool exact = false;
  using Weight = double;
  using RealScalar = double;
  static double conj(double x) { return x; }
  static Weight abs2(double x) { return x * x; }
  static bool is_zero(double x) { return x == 0.0; }
  static double from_int(long long v) { return static_cast<double>(v); }
  static double weight_to_double(Weight w) { return w; }
};

template <>
struct ScalarOps<Rational> {
  static constexpr bool exact = true;
  using Weight = Rational;
  using RealScalar = Rational;
  static Rational conj(const Rational& x) { return x; }
  static Weight abs2(const Rational& x) { return x * x; }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational from_int(long long v) { return Rational(v); }
  static double weight_to_double(const Weight& w) { return w.to_double(); }
};

template <class S>
S conj_of(const S& z) {
  return ScalarOps<S>::conj(z);
}

template <class S>
typename ScalarOps<S>::Weight abs2_of(const S& z) {
  return ScalarOps<S>::abs2(z);
}

}  // namespace gss

namespace Eigen {

template <>
struct NumTraits<gss::Rational> {
  using Real = gss::Rational;
  using NonInteger = gss::Rational;
  using Literal = gss::Rational;
  using Nested = gss::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 20,
    MulCost = 20
  };
  static gss::Rational epsilon() { return gss::Rational(0); }
  static gss::Rational dummy_precision() { return gss::Rational(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<gss::GaussianRational> {
  using Real = gss::Rational;
  using NonInteger = gss::GaussianRational;
  using Literal = gss::GaussianRational;
  using Nested = gss::GaussianRational;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 40,
    MulCost = 80
  };
  static gss::Rational epsilon() { return gss::Rational(0); }
  static gss::Rational dummy_precision() { return gss::Rational(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace gss {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

// Entrywise conjugate. Eigen's conjugate() is only trusted for std::complex,
// so all generic code funnels through these helpers.
template <class S>
Vector<S> conjugate(const Vector<S>& v) {
  Vector<S> r(v.size());
  for (Index i = 0; i < v.size(); ++i) r(i) = conj_of(v(i));
  return r;
}

template <class S>
Matrix<S> hermitian_transpose(const Matrix<S>& m) {
  Matrix<S> r(m.cols(), m.rows());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(j, i) = conj_of(m(i, j));
  return r;
}

// Rank-one matrix of the vector functional A |-> <Ax, y>: entries x_j conj(y_k),
// so that trace(A * outer) = <Ax, y> for every A.
template <class S>
Matrix<S> hermitian_outer(const Vector<S>& x, const Vector<S>& y) {
  Matrix<S> r(x.size(), y.size());
  for (Index j = 0; j < x.size(); ++j)
    for (Index k = 0; k < y.size(); ++k) r(j, k) = x(j) * conj_of(y(k));
  return r;
}

template <class S>
S inner_product(const Vector<S>& a, const Vector<S>& b) {
  // <a, b> = sum a_i conj(b_i), linear in the first slot.
  S acc = ScalarOps<S>::from_int(0);
  for (Index i = 0; i < a.size(); ++i) acc += a(i) * conj_of(b(i));
  return acc;
}

template <class S>
typename ScalarOps<S>::Weight squared_norm(const Vector<S>& v) {
  typename ScalarOps<S>::Weight acc = ScalarOps<S>::abs2(ScalarOps<S>::from_int(0));
  for (Index i = 0; i < v.size(); ++i) acc = acc + abs2_of(v(i));
  return acc;
}

// Smallest integer representative of the ray through an exact vector:
// denominators cleared, content gcd divided out. Keeps the heights of
// projective data minimal through long exact computations. Zero vectors
// pass through unchanged; float vectors are returned as-is.
template <class S>
Vector<S> primitive_ray(Vector<S> v) {
  if constexpr (std::is_same_v<S, Rational>) {
    Rational::Int l = 1;
    for (Index i = 0; i < v.size(); ++i) l = detail::int_lcm(l, v(i).den());
    if (l == 0) l = 1;
    Rational::Int g = 0;
    std::vector<Rational::Int> nums(static_cast<size_t>(v.size()));
    for (Index i = 0; i < v.size(); ++i) {
      nums[static_cast<size_t>(i)] = detail::checked_mul_int(v(i).num(), l / v(i).den());
      g = detail::int_gcd(g, nums[static_cast<size_t>(i)]);
    }
    if (g == 0) return v;  // zero vector
    for (Index i = 0; i < v.size(); ++i)
      v(i) = Rational::from_parts(nums[static_cast<size_t>(i)] / g, 1);
    return v;
  } else if constexpr (std::is_same_v<S, GaussianRational>) {
    Rational::Int l = 1;
    for (Index i = 0; i < v.size(); ++i) {
      l = detail::int_lcm(l, v(i).real().den());
      l = detail::int_lcm(l, v(i).imag().den());
    }
    if (l == 0) l = 1;
    std::vector<detail::Gint> ints(static_cast<size_t>(v.size()));
    detail::Gint g{0, 0};
    for (Index i = 0; i < v.size(); ++i) {
      detail::Gint z{detail::checked_mul_int(v(i).real().num(), l / v(i).real().den()),
                     detail::checked_mul_int(v(i).imag().num(), l / v(i).imag().den())};
      ints[static_cast<size_t>(i)] = z;
      g = detail::gint_gcd(g, z);
    }
    if (g.is_zero()) return v;  // zero vector
    Rational::Int gn = detail::checked_add_int(detail::checked_mul_int(g.re, g.re),
                                               detail::checked_mul_int(g.im, g.im));
    for (Index i = 0; i < v.size(); ++i) {
      detail::Gint q = detail::gint_mul(ints[static_cast<size_t>(i)], detail::gint_conj(g));
      v(i) = GaussianRational(Rational::from_parts(q.re / gn, 1),
                              Rational::from_parts(q.im / gn, 1));
    }
    return v;
  } else {
    return v;
  }
}

// Primitive ray with the leading entry rotated into a canonical position:
// first nonzero entry positive (real case) or in the quadrant re > 0,
// im >= 0 (Gaussian case). Two exact vectors span the same ray exactly when
// their canonical primitive forms are equal.
template <class S>
Vector<S> canonical_primitive_ray(Vector<S> v) {
  v = primitive_ray(std::move(v));
  if constexpr (std::is_same_v<S, Rational>) {
    for (Index i = 0; i < v.size(); ++i) {
      if (v(i).is_zero()) continue;
      if (v(i).sign() < 0)
        for (Index j = 0; j < v.size(); ++j) v(j) = -v(j);
      break;
    }
    return v;
  } else if constexpr (std::is_same_v<S, GaussianRational>) {
    for (Index i = 0; i < v.size(); ++i) {
      if (v(i).is_zero()) continue;
      const GaussianRational units[4] = {
          GaussianRational(Rational(1)), GaussianRational(Rational(0), Rational(1)),
          GaussianRational(Rational(-1)), GaussianRational(Rational(0), Rational(-1))};
      for (const auto& u : units) {
        GaussianRational lead = v(i) * u;
        if (lead.real().sign() > 0 && lead.imag().sign() >= 0) {
          for (Index j = 0; j < v.size(); ++j) v(j) = v(j) * u;
          return v;
        }
      }
      break;
    }
    return v;
  } else {
    return v;
  }
}

template <class S>
Vector<S> flatten(const Matrix<S>& m) {
  Vector<S> v(m.rows() * m.cols());
  Index k = 0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) v(k++) = m(i, j);
  return v;
}

}  // namespace gss
