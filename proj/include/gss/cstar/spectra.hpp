#pragma once

#include "gss/closure/space.hpp"
#include "gss/cstar/gss.hpp"

namespace gss::cstar {

// Closure of a subset of the primitive-ideal points by the ideal
// intersection formula: T^≅ = { J_k : ⋂_{l ∈ T} J_l ⊆ J_k }, where the
// kernel ideal of block k is the sum of the other blocks. Block sets are
// bitmasks; the empty intersection is the whole algebra.
inline std::uint32_t ps_closure_ideal_formula(int block_count, std::uint32_t t) {
  const std::uint32_t full = block_count >= 32 ? ~0u : (1u << block_count) - 1;
  const std::uint32_t intersection = full & ~t;  // blocks surviving in every J_l, l in T
  std::uint32_t out = 0;
  for (int k = 0; k < block_count; ++k) {
    std::uint32_t j_k = full & ~(1u << k);
    if ((intersection & ~j_k) == 0) out |= 1u << k;
  }
  return out;
}

struct SpectraResult {
  closure::Space gs;  // one point per block ("pi1", ...)
  closure::Space ps;  // kernel ideals ("ker_pi1", ...)
  closure::SpaceMap gamma;  // gs -> ps
  std::vector<std::vector<int>> kernels;  // kernels[k] = blocks of the ideal ker(pi_k)

  SpectraResult(closure::Space g, closure::Space p, closure::SpaceMap gm,
                std::vector<std::vector<int>> kers)
      : gs(std::move(g)), ps(std::move(p)), gamma(std::move(gm)), kernels(std::move(kers)) {}
};

// The two derived spaces of the structure space of ⊕_k M_{n_k}: one point
// per block on each side, with the ps closure evaluated from the ideal
// intersection formula (it comes out discrete), and gamma the evident
// bijection.
inline SpectraResult spectra(const FdAlgebra& algebra) {
  const int k = algebra.block_count();
  if (k > 16) throw std::invalid_argument("spectra materialization capped at 16 blocks");
  std::vector<std::string> gs_labels, ps_labels;
  std::vector<std::vector<int>> kernels;
  for (int b = 0; b < k; ++b) {
    gs_labels.push_back("pi" + std::to_string(b + 1));
    ps_labels.push_back("ker_pi" + std::to_string(b + 1));
    std::vector<int> kernel;
    for (int j = 0; j < k; ++j)
      if (j != b) kernel.push_back(j);
    kernels.push_back(std::move(kernel));
  }

  std::vector<closure::Subset> ps_family;
  for (std::uint32_t t = 0; t < (1u << k); ++t)
    if (ps_closure_ideal_formula(k, t) == t) ps_family.push_back(t);
  closure::Space ps = closure::Space::from_masks(ps_labels, std::move(ps_family));

  std::vector<int> gamma_table(static_cast<size_t>(k));
  for (int b = 0; b < k; ++b) gamma_table[static_cast<size_t>(b)] = b;
  closure::Space gs = closure::pullback_space(gs_labels, gamma_table, ps);
  closure::SpaceMap gamma(gs, ps, std::move(gamma_table));
  return SpectraResult(std::move(gs), std::move(ps), std::move(gamma), std::move(kernels));
}

// Block dimension recovered from structure-space data alone: the greedy
// minimal set of points with common y-ray whose kernel-intersection closure
// absorbs every basis probe on that y-line.
inline int dimension_of_class(const FdAlgebra& algebra, int block, const Tolerance& tol = {}) {
  using S = GaussianRational;
  const int n = algebra.block_dim(block);
  auto unit = [&](int i) {
    Vector<S> v = Vector<S>::Constant(n, ScalarOps<S>::from_int(0));
    v(i) = ScalarOps<S>::from_int(1);
    return v;
  };
  Vector<S> y0 = unit(0);
  std::vector<GssPointC<S>> chosen;
  for (int j = 0; j < n; ++j) {
    GssPointC<S> probe = canonicalize_point<S>(algebra, block, unit(j), y0);
    if (chosen.empty() || !closure_membership_c(algebra, chosen, probe, tol))
      chosen.push_back(std::move(probe));
  }
  // The closure of the chosen set must absorb every point on the y0-line.
  Vector<S> all = Vector<S>::Constant(n, ScalarOps<S>::from_int(1));
  GssPointC<S> mixed = canonicalize_point<S>(algebra, block, all, y0);
  if (!closure_membership_c(algebra, chosen, mixed, tol))
    throw std::logic_error("saturation probe escaped the closure");
  return static_cast<int>(chosen.size());
}

struct Classification {
  bool isomorphic = false;
  std::vector<int> fingerprint_a;
  std::vector<int> fingerprint_b;
  bool ccr_a = true;   // finite-dimensional algebras are CCR
  bool ccr_b = true;
  bool discrete_prim_a = false;
  bool discrete_prim_b = false;
};

// The multiset of block dimensions, recovered through structure-space
// primitives only.
inline std::vector<int> fingerprint(const FdAlgebra& algebra, const Tolerance& tol = {}) {
  std::vector<int> dims;
  dims.reserve(static_cast<size_t>(algebra.block_count()));
  for (int b = 0; b < algebra.block_count(); ++b)
    dims.push_back(dimension_of_class(algebra, b, tol));
  std::sort(dims.begin(), dims.end());
  return dims;
}

inline bool primitive_spectrum_discrete(const FdAlgebra& algebra) {
  const int k = algebra.block_count();
  if (k <= 16) {
    for (std::uint32_t t = 0; t < (1u << k); ++t)
      if (ps_closure_ideal_formula(k, t) != t) return false;
    return true;
  }
  // Beyond exhaustion: discreteness of a finite space reduces to closed
  // singletons plus closed complements, both checked by the formula.
  const std::uint32_t full = (k >= 32) ? ~0u : (1u << k) - 1;
  for (int b = 0; b < k; ++b) {
    std::uint32_t single = 1u << b;
    if (ps_closure_ideal_formula(k, single) != single) return false;
    if (ps_closure_ideal_formula(k, full & ~single) != (full & ~single)) return false;
  }
  return true;
}

inline Classification classify_algebra(const FdAlgebra& a, const FdAlgebra& b,
                                       const Tolerance& tol = {}) {
  Classification c;
  c.fingerprint_a = fingerprint(a, tol);
  c.fingerprint_b = fingerprint(b, tol);
  c.isomorphic = c.fingerprint_a == c.fingerprint_b;
  c.discrete_prim_a = primitive_spectrum_discrete(a);
  c.discrete_prim_b = primitive_spectrum_discrete(b);
  return c;
}

}  // namespace gss::cstar
