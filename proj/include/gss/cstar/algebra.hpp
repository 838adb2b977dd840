#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "gss/linalg.hpp"
#include "gss/scalar.hpp"

namespace gss::cstar {

// A finite-dimensional algebra: an ordered direct sum of full matrix blocks
// of the given sizes.
struct FdAlgebra {
  std::vector<int> blocks;

  explicit FdAlgebra(std::vector<int> b) : blocks(std::move(b)) {
    if (blocks.empty()) throw std::invalid_argument("algebra needs at least one block");
    for (int n : blocks)
      if (n < 1) throw std::invalid_argument("block sizes must be positive");
  }

  int block_count() const { return static_cast<int>(blocks.size()); }
  int block_dim(int k) const { return blocks[static_cast<size_t>(k)]; }
  int hilbert_dim() const { return std::accumulate(blocks.begin(), blocks.end(), 0); }
  long long algebra_dim() const {
    long long d = 0;
    for (int n : blocks) d += static_cast<long long>(n) * n;
    return d;
  }

  // Literal form "2+3" for M_2 ⊕ M_3.
  static FdAlgebra parse(const std::string& text) {
    std::vector<int> blocks;
    size_t pos = 0;
    while (pos < text.size()) {
      size_t next = text.find('+', pos);
      std::string token = text.substr(pos, next == std::string::npos ? next : next - pos);
      if (token.empty()) throw std::invalid_argument("malformed block list: " + text);
      blocks.push_back(std::stoi(token));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return FdAlgebra(std::move(blocks));
  }

  std::string str() const {
    std::string out;
    for (size_t i = 0; i < blocks.size(); ++i) {
      if (i) out += "+";
      out += std::to_string(blocks[i]);
    }
    return out;
  }

  friend bool operator==(const FdAlgebra& a, const FdAlgebra& b) { return a.blocks == b.blocks; }
};

// Projective canonicalization of a nonzero coordinate vector: exact scalars
// reduce to the canonical primitive integer vector (heights stay small
// through composed operations); float scalars are unit vectors with the
// anchor coordinate positive real.
template <class S>
Vector<S> canonical_ray(Vector<S> v) {
  Index anchor = -1;
  if constexpr (ScalarOps<S>::exact) {
    bool nonzero = false;
    for (Index i = 0; i < v.size(); ++i)
      if (!ScalarOps<S>::is_zero(v(i))) nonzero = true;
    if (!nonzero) throw std::invalid_argument("zero vector has no projective class");
    return canonical_primitive_ray(std::move(v));
  } else {
    double max_w = 0.0;
    for (Index i = 0; i < v.size(); ++i)
      max_w = std::max(max_w, ScalarOps<S>::weight_to_double(abs2_of(v(i))));
    if (max_w == 0.0) throw std::invalid_argument("zero vector has no projective class");
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
bool rays_equal(const Vector<S>& a, const Vector<S>& b, const Tolerance& tol = {}) {
  if (a.size() != b.size()) return false;
  if constexpr (ScalarOps<S>::exact) {
    for (Index i = 0; i < a.size(); ++i)
      if (a(i) != b(i)) return false;
    return true;
  } else {
    // Scale-invariant comparison; canonical forms of proportional vectors can
    // disagree only through the phase anchor, which dependence ignores.
    return linearly_dependent(a, b, tol);
  }
}

// A point of the structure space of ⊕_k M_{n_k}: the kernel of the vector
// functional A |-> <A_k x, y> on block k, determined by the pair of rays
// (x  ̄, y ̄). Stored in canonical ray form.
template <class S>
struct GssPointC {
  int block = 0;
  Vector<S> x;
  Vector<S> y;
};

template <class S>
GssPointC<S> canonicalize_point(const FdAlgebra& algebra, int block, Vector<S> x, Vector<S> y) {
  if (block < 0 || block >= algebra.block_count())
    throw std::invalid_argument("block index out of range");
  const int n = algebra.block_dim(block);
  if (x.size() != n || y.size() != n)
    throw std::invalid_argument("vector dimensions do not match the block size");
  return GssPointC<S>{block, canonical_ray(std::move(x)), canonical_ray(std::move(y))};
}

// Same kernel <=> same block, proportional x parts and proportional y parts.
template <class S>
bool points_equal(const GssPointC<S>& p, const GssPointC<S>& q, const Tolerance& tol = {}) {
  return p.block == q.block && rays_equal(p.x, q.x, tol) && rays_equal(p.y, q.y, tol);
}

// Trace-duality representative of the functional: the block-k matrix
// x y^* with entries x_j conj(y_k), so trace(A x y^*) = <A x, y>.
template <class S>
struct FunctionalMatrix {
  int block = 0;
  Matrix<S> m;
};

template <class S>
FunctionalMatrix<S> functional_matrix(const FdAlgebra& algebra, const GssPointC<S>& p) {
  (void)algebra;
  return FunctionalMatrix<S>{p.block, hermitian_outer(p.x, p.y)};
}

// Evaluate the functional on a block-diagonal element given per block.
template <class S>
S evaluate_functional(const FunctionalMatrix<S>& f, const std::vector<Matrix<S>>& element) {
  const Matrix<S>& a = element[static_cast<size_t>(f.block)];
  S acc = ScalarOps<S>::from_int(0);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) acc += a(i, j) * f.m(j, i);
  return acc;
}

// An invertible matrix together with a field-automorphism flag; acts by
// v |-> M * sigma(v) where sigma is the identity or entrywise conjugation.
template <class S>
struct SemilinearMap {
  Matrix<S> m;
  bool conjugate = false;

  Vector<S> apply(const Vector<S>& v) const {
    return conjugate ? Vector<S>(m * gss::conjugate(v)) : Vector<S>(m * v);
  }
};

}  // namespace gss::cstar
