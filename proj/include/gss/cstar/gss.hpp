#pragma once

#include <functional>
#include <optional>

#include "gss/closure/space.hpp"
#include "gss/cstar/algebra.hpp"

namespace gss::cstar {

// Kernel-intersection closure: ker p ∈ S^= exactly when the functional of p
// is a linear combination of the functionals of S. Functionals supported on
// different blocks contribute independently, so only same-block members of S
// matter.
template <class S>
bool closure_membership_c(const FdAlgebra& algebra, const std::vector<GssPointC<S>>& s,
                          const GssPointC<S>& p, const Tolerance& tol = {},
                          double* margin_out = nullptr) {
  std::vector<Vector<S>> span;
  for (const auto& q : s) {
    if (q.block != p.block) continue;
    span.push_back(flatten(functional_matrix(algebra, q).m));
  }
  return in_span(span, flatten(functional_matrix(algebra, p).m), tol, margin_out);
}

enum class TieMode { fast, bruteforce };

namespace detail {

// The pencil alpha*x1 y1^* + beta*x2 y2^* with alpha,beta nonzero has all
// 2x2 minors equal to alpha*beta*(x-wedge)*(conj y-wedge); it is rank one
// exactly when one of the wedges vanishes identically. When it is, any
// independent combination of the free slot produces a third kernel in the
// closure of the pair.
template <class S>
bool tie_bruteforce_same_block(const FdAlgebra& algebra, const GssPointC<S>& p,
                               const GssPointC<S>& q, const Tolerance& tol,
                               GssPointC<S>* witness_out) {
  std::vector<S> wx = wedge_minors(p.x, q.x);
  std::vector<S> wy = wedge_minors(p.y, q.y);
  bool x_dep, y_dep;
  if constexpr (ScalarOps<S>::exact) {
    auto all_zero = [](const std::vector<S>& m) {
      for (const auto& v : m)
        if (!ScalarOps<S>::is_zero(v)) return false;
      return true;
    };
    x_dep = all_zero(wx);
    y_dep = all_zero(wy);
  } else {
    x_dep = linearly_dependent(p.x, q.x, tol);
    y_dep = linearly_dependent(p.y, q.y, tol);
  }
  if (!x_dep && !y_dep) return false;  // every minor survives for alpha*beta != 0
  if (x_dep && y_dep) return true;     // same point
  GssPointC<S> witness =
      x_dep ? canonicalize_point<S>(algebra, p.block, p.x, p.y + q.y)
            : canonicalize_point<S>(algebra, p.block, p.x + q.x, p.y);
  if (points_equal(witness, p, tol) || points_equal(witness, q, tol))
    throw std::logic_error("tie witness collapsed onto an endpoint");
  if (!closure_membership_c(algebra, {p, q}, witness, tol))
    throw std::logic_error("tie witness failed the span check");
  if (witness_out) *witness_out = witness;
  return true;
}

}  // namespace detail

// p <-> q in the induced closure space. Fast mode applies the dependence
// criterion; brute-force mode runs the rank-one pencil analysis and verifies
// the produced witness. Cross-block pairs never tie: a combination
// supported on two blocks is not a vector functional of either block.
template <class S>
bool tie_relation_c(const FdAlgebra& algebra, const GssPointC<S>& p, const GssPointC<S>& q,
                    TieMode mode = TieMode::fast, const Tolerance& tol = {},
                    GssPointC<S>* witness_out = nullptr) {
  if (points_equal(p, q, tol)) return true;
  if (p.block != q.block) return false;
  if (mode == TieMode::fast)
    return linearly_dependent(p.x, q.x, tol) || linearly_dependent(p.y, q.y, tol);
  return detail::tie_bruteforce_same_block(algebra, p, q, tol, witness_out);
}

// Partition of a sample by unitary-equivalence class; for these algebras the
// class of a point is exactly its block.
template <class S>
std::vector<std::vector<size_t>> equivalence_classes_c(const FdAlgebra& algebra,
                                                       const std::vector<GssPointC<S>>& pts) {
  std::vector<std::vector<size_t>> classes(static_cast<size_t>(algebra.block_count()));
  for (size_t i = 0; i < pts.size(); ++i)
    classes[static_cast<size_t>(pts[i].block)].push_back(i);
  std::vector<std::vector<size_t>> out;
  for (auto& c : classes)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

// Transitive closure of the tie relation on a sample; used to cross-check
// the block partition on spanning samples.
template <class S>
std::vector<std::vector<size_t>> tie_components(const FdAlgebra& algebra,
                                                const std::vector<GssPointC<S>>& pts,
                                                TieMode mode = TieMode::fast,
                                                const Tolerance& tol = {}) {
  std::vector<int> comp(pts.size(), -1);
  std::vector<std::vector<size_t>> out;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (comp[i] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::vector<size_t> stack = {i};
    comp[i] = id;
    std::vector<size_t> members;
    while (!stack.empty()) {
      size_t t = stack.back();
      stack.pop_back();
      members.push_back(t);
      for (size_t j = 0; j < pts.size(); ++j) {
        if (comp[j] >= 0) continue;
        if (tie_relation_c(algebra, pts[t], pts[j], mode, tol)) {
          comp[j] = id;
          stack.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

enum class InvolutionKind { adjoint, polar };

// adjoint: ker ω_{x,y} |-> ker ω_{y,x} (an involution and a homeomorphism);
// polar:   ker ω_{x,y} |-> ker ω_{x,x} (idempotent).
template <class S>
GssPointC<S> involution(const FdAlgebra& algebra, const GssPointC<S>& p, InvolutionKind kind) {
  switch (kind) {
    case InvolutionKind::adjoint:
      return canonicalize_point<S>(algebra, p.block, p.y, p.x);
    case InvolutionKind::polar:
      return canonicalize_point<S>(algebra, p.block, p.x, p.x);
  }
  throw std::logic_error("unreachable");
}

// The point mapping ker ω_{x,y} |-> ker ω_{Ux,Vy} induced by a pair of
// semilinear bijections with a common automorphism flag, between single
// blocks of equal dimension.
template <class S>
class PairInducedMap {
 public:
  PairInducedMap(SemilinearMap<S> u, SemilinearMap<S> v, const FdAlgebra& src,
                 const FdAlgebra& dst, const Tolerance& tol = {})
      : u_(std::move(u)), v_(std::move(v)), src_(src), dst_(dst) {
    if (src.block_count() != 1 || dst.block_count() != 1)
      throw std::invalid_argument("pair-induced maps act between single blocks");
    if (u_.conjugate != v_.conjugate)
      throw std::invalid_argument("the two maps must share the automorphism flag");
    const int n = src.block_dim(0);
    if (dst.block_dim(0) != n)
      throw std::invalid_argument("pair-induced maps require equal block dimensions");
    if (u_.m.rows() != n || u_.m.cols() != n || v_.m.rows() != n || v_.m.cols() != n)
      throw std::invalid_argument("matrix dimensions do not match the blocks");
    if (rank_of<S>(u_.m, tol) != n || rank_of<S>(v_.m, tol) != n)
      throw std::invalid_argument("singular matrix cannot induce a point mapping");
  }

  GssPointC<S> operator()(const GssPointC<S>& p) const {
    return canonicalize_point<S>(dst_, 0, u_.apply(p.x), v_.apply(p.y));
  }

  const SemilinearMap<S>& u() const { return u_; }
  const SemilinearMap<S>& v() const { return v_; }

 private:
  SemilinearMap<S> u_, v_;
  FdAlgebra src_, dst_;
};

// The finite closure space induced on a point sample, for cross-checks with
// the closure-space engine. Labels are p0, p1, ...
template <class S>
closure::Space induced_space(const FdAlgebra& algebra, const std::vector<GssPointC<S>>& pts,
                             const Tolerance& tol = {}) {
  const int n = static_cast<int>(pts.size());
  if (n > 16) throw std::invalid_argument("induced space capped at 16 points");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  std::vector<closure::Subset> family;
  for (closure::Subset mask = 0; mask < (closure::Subset(1) << n); ++mask) {
    std::vector<GssPointC<S>> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (closure::Subset(1) << i)) sub.push_back(pts[static_cast<size_t>(i)]);
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      if (mask & (closure::Subset(1) << i)) continue;
      if (mask == 0) break;
      if (closure_membership_c(algebra, sub, pts[static_cast<size_t>(i)], tol)) closed = false;
    }
    if (closed) family.push_back(mask);
  }
  return closure::Space::from_masks(std::move(labels), std::move(family));
}

}  // namespace gss::cstar
