#pragma once

#include <map>
#include <optional>

#include "gss/banach/model.hpp"

namespace gss::banach {

// A unit-modulus coordinate vector, stored exactly: entry k is
// exp(2*pi*i*turns[k]) with turns[k] a rational in [0,1).
struct TorusPoint {
  std::vector<Rational> turns;

  static Rational mod1(const Rational& r) {
    // floor division of num by den
    Rational::Int q = r.num() / r.den();
    if (r.num() % r.den() != 0 && r.num() < 0) q -= 1;
    Rational f = r - Rational::from_parts(q, 1);
    return f;
  }

  static TorusPoint of(std::vector<Rational> t) {
    for (auto& x : t) x = mod1(x);
    return TorusPoint{std::move(t)};
  }

  int size() const { return static_cast<int>(turns.size()); }

  Vector<Complex> to_complex() const {
    Vector<Complex> v(size());
    for (int k = 0; k < size(); ++k) {
      double a = 2.0 * M_PI * turns[static_cast<size_t>(k)].to_double();
      v(k) = Complex(std::cos(a), std::sin(a));
    }
    return v;
  }

  // Canonical representative of the kernel: rotate so the first entry is 1.
  TorusPoint canonical() const {
    std::vector<Rational> t = turns;
    Rational first = t.empty() ? Rational(0) : t[0];
    for (auto& x : t) x = mod1(x - first);
    return TorusPoint{std::move(t)};
  }

  friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.turns == b.turns; }
};

inline bool same_torus_kernel(const TorusPoint& u, const TorusPoint& v) {
  return u.canonical() == v.canonical();
}

// Turn values of the ratios u_k * conj(v_k), in first-occurrence order.
inline std::vector<Rational> distinct_ratio_turns(const TorusPoint& u, const TorusPoint& v) {
  if (u.size() != v.size()) throw std::invalid_argument("torus points of different length");
  std::vector<Rational> distinct;
  for (int k = 0; k < u.size(); ++k) {
    Rational r = TorusPoint::mod1(u.turns[static_cast<size_t>(k)] - v.turns[static_cast<size_t>(k)]);
    bool seen = false;
    for (const auto& d : distinct)
      if (d == r) seen = true;
    if (!seen) distinct.push_back(r);
  }
  return distinct;
}

struct TorusTieResult {
  bool tie = false;
  int ratio_count = 0;
  std::optional<TorusPoint> witness;  // present when the pair is a genuine non-closed pair
};

// Ratio-set criterion: ker f_u and ker f_v tie exactly when {u_k conj(v_k)}
// has at most two values. With exactly two values the half-angle vector
//   w_k = u_k * conj(rho_1)            on the rho_1 class
//   w_k = v_k * exp(i*theta/2)         elsewhere, theta the class gap
// lies in {ker f_u, ker f_v}^= and differs from both.
inline TorusTieResult ell1_complex_tie(const TorusPoint& u, const TorusPoint& v) {
  TorusTieResult res;
  std::vector<Rational> ratios = distinct_ratio_turns(u, v);
  res.ratio_count = static_cast<int>(ratios.size());
  res.tie = res.ratio_count <= 2;
  if (res.ratio_count == 2) {
    Rational r1 = ratios[0];
    Rational theta = TorusPoint::mod1(ratios[1] - ratios[0]);
    Rational half = theta / Rational(2);
    std::vector<Rational> w(static_cast<size_t>(u.size()));
    for (int k = 0; k < u.size(); ++k) {
      Rational rk = TorusPoint::mod1(u.turns[static_cast<size_t>(k)] - v.turns[static_cast<size_t>(k)]);
      if (rk == r1)
        w[static_cast<size_t>(k)] = TorusPoint::mod1(u.turns[static_cast<size_t>(k)] - r1);
      else
        w[static_cast<size_t>(k)] = TorusPoint::mod1(v.turns[static_cast<size_t>(k)] + half);
    }
    res.witness = TorusPoint::of(std::move(w));
  }
  return res;
}

// Exact span membership for w against {u, v} when u and v have at most two
// ratio classes: rows with equal joint ratio profile are proportional, so
// rank [u v w] <= 2 exactly when the joint profile (u/v ratio, u/w ratio)
// takes at most two values.
inline bool torus_in_span_two_classes(const TorusPoint& u, const TorusPoint& v,
                                      const TorusPoint& w) {
  std::vector<std::pair<Rational, Rational>> profiles;
  for (int k = 0; k < u.size(); ++k) {
    std::pair<Rational, Rational> pr = {
        TorusPoint::mod1(u.turns[static_cast<size_t>(k)] - v.turns[static_cast<size_t>(k)]),
        TorusPoint::mod1(u.turns[static_cast<size_t>(k)] - w.turns[static_cast<size_t>(k)])};
    bool seen = false;
    for (const auto& p : profiles)
      if (p == pr) seen = true;
    if (!seen) profiles.push_back(pr);
  }
  return profiles.size() <= 2;
}

// Independent span-search oracle for the complex ell1 pair relation. A
// nontrivial combination alpha*u + beta*v of unit modulus everywhere forces
// Re(conj(alpha)*beta*rho) to take the same value on every ratio class rho.
// Distinct points on the unit circle admit no such common line unless there
// are at most two of them, which the class loop below checks one class at a
// time; with two classes the half-angle construction produces the witness,
// which is then verified exactly.
inline bool pair_closed_bruteforce_torus(const TorusPoint& u, const TorusPoint& v,
                                         TorusTieResult* detail_out = nullptr) {
  std::vector<Rational> ratios = distinct_ratio_turns(u, v);
  if (ratios.size() <= 1) throw std::invalid_argument("pair test requires two distinct kernels");
  if (ratios.size() >= 3) {
    // A line in the plane meets the unit circle in at most two points, so a
    // third class is consistent only if it repeats one of the first two.
    for (size_t k = 2; k < ratios.size(); ++k) {
      if (ratios[k] == ratios[0] || ratios[k] == ratios[1])
        throw std::logic_error("distinct ratio classes repeated");
    }
    if (detail_out) *detail_out = TorusTieResult{false, static_cast<int>(ratios.size()), {}};
    return true;  // closed
  }
  TorusTieResult tie = ell1_complex_tie(u, v);
  if (!tie.witness) throw std::logic_error("two-class pair must produce a witness");
  const TorusPoint& w = *tie.witness;
  if (same_torus_kernel(w, u) || same_torus_kernel(w, v))
    throw std::logic_error("witness collapsed onto an endpoint");
  if (!torus_in_span_two_classes(u, v, w))
    throw std::logic_error("witness failed the exact span check");
  if (detail_out) *detail_out = tie;
  return false;  // not closed
}

// Float-mode variant: clusters the ratio points by angle and applies the
// same criterion; cluster separations inside the tolerance band are an
// explicit indeterminate error.
struct FloatTieResult {
  bool tie = false;
  int cluster_count = 0;
};

inline FloatTieResult ell1_complex_tie_float(const Vector<Complex>& u, const Vector<Complex>& v,
                                             const Tolerance& tol = {}) {
  if (u.size() != v.size()) throw std::invalid_argument("vectors of different length");
  std::vector<double> angles;
  for (Index k = 0; k < u.size(); ++k) {
    Complex r = u(k) * std::conj(v(k));
    angles.push_back(std::atan2(r.imag(), r.real()));
  }
  std::sort(angles.begin(), angles.end());
  std::vector<double> reps;
  for (double a : angles) {
    bool merged = false;
    for (double r : reps) {
      double d = std::abs(a - r);
      d = std::min(d, 2.0 * M_PI - d);
      if (d < tol.decide_tol) {
        merged = true;
        break;
      }
      if (d < tol.indeterminate_band)
        throw IndeterminateError("ratio clustering inside tolerance band", d);
    }
    if (!merged) reps.push_back(a);
  }
  // wrap-around: first and last cluster may be the same angle
  if (reps.size() >= 2) {
    double d = 2.0 * M_PI - (reps.back() - reps.front());
    if (d < tol.decide_tol) reps.pop_back();
  }
  return FloatTieResult{reps.size() <= 2, static_cast<int>(reps.size())};
}

}  // namespace gss::banach
