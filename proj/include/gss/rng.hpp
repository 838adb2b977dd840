#pragma once

#include <cstdint>

#include "gss/scalar.hpp"

namespace gss {

// splitmix64: tiny, portable, and byte-for-byte reproducible across
// platforms, which the determinism contract of the reports relies on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). Rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

  long long int_in(long long lo, long long hi) {  // inclusive range
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double real_in(double lo, double hi) { return lo + (hi - lo) * real01(); }

  bool chance(double p) { return real01() < p; }

 private:
  std::uint64_t state_;
};

// Small-integer Gaussian rational, the exact-mode sampling grain.
inline GaussianRational random_gaussian_rational(Rng& rng, long long span = 3) {
  return {Rational(rng.int_in(-span, span)), Rational(rng.int_in(-span, span))};
}

template <class S>
S random_scalar(Rng& rng);

template <>
inline GaussianRational random_scalar<GaussianRational>(Rng& rng) {
  return random_gaussian_rational(rng);
}

template <>
inline Complex random_scalar<Complex>(Rng& rng) {
  return {rng.real_in(-1.0, 1.0), rng.real_in(-1.0, 1.0)};
}

template <>
inline Rational random_scalar<Rational>(Rng& rng) {
  return Rational(rng.int_in(-3, 3));
}

template <>
inline double random_scalar<double>(Rng& rng) {
  return rng.real_in(-1.0, 1.0);
}

template <class S>
Vector<S> random_nonzero_vector(Rng& rng, Index n) {
  Vector<S> v(n);
  for (;;) {
    bool nonzero = false;
    for (Index i = 0; i < n; ++i) {
      v(i) = random_scalar<S>(rng);
      if (!ScalarOps<S>::is_zero(v(i))) nonzero = true;
    }
    if (nonzero) return v;
  }
}

template <class S>
Matrix<S> random_matrix(Rng& rng, Index rows, Index cols) {
  Matrix<S> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = random_scalar<S>(rng);
  return m;
}

template <class S>
Matrix<S> random_invertible_matrix(Rng& rng, Index n, const Tolerance& tol = {});

}  // namespace gss

#include "gss/linalg.hpp"

namespace gss {

template <class S>
Matrix<S> random_invertible_matrix(Rng& rng, Index n, const Tolerance& tol) {
  for (;;) {
    Matrix<S> m = random_matrix<S>(rng, n, n);
    try {
      if (rank_of<S>(m, tol) == static_cast<int>(n)) return m;
    } catch (const IndeterminateError&) {
      // resample
    }
  }
}

}  // namespace gss
