#pragma once

#include <functional>

#include "gss/cstar/gss.hpp"
#include "gss/rng.hpp"

namespace gss::cstar {

// Structured failure of a reconstruction: the oracle violated a property a
// tie-preserving bijection must have. `claim` names the check that failed.
struct ReconstructionError : std::runtime_error {
  std::string claim;
  explicit ReconstructionError(std::string c)
      : std::runtime_error("reconstruction failed: " + c), claim(std::move(c)) {}
};

// Maximal pairwise-tied subsets of a one-block sample: each either fixes the
// x-ray or fixes the y-ray.
template <class S>
struct RSet {
  bool x_type = false;  // true: common x-ray, varying y; false: common y-ray
  Vector<S> line;       // the fixed ray
  std::vector<size_t> members;
};

template <class S>
std::vector<RSet<S>> maximal_r_sets(const FdAlgebra& algebra, const std::vector<GssPointC<S>>& pts,
                                    const Tolerance& tol = {}) {
  for (const auto& p : pts)
    if (p.block != pts.front().block)
      throw std::invalid_argument("R-set classification expects a one-block sample");
  (void)algebra;
  std::vector<RSet<S>> sets;
  auto group_by = [&](bool x_type) {
    std::vector<bool> taken(pts.size(), false);
    for (size_t i = 0; i < pts.size(); ++i) {
      if (taken[i]) continue;
      RSet<S> set;
      set.x_type = x_type;
      set.line = x_type ? pts[i].x : pts[i].y;
      for (size_t j = i; j < pts.size(); ++j) {
        const Vector<S>& key = x_type ? pts[j].x : pts[j].y;
        if (!taken[j] && rays_equal(set.line, key, tol)) {
          set.members.push_back(j);
          taken[j] = true;
        }
      }
      sets.push_back(std::move(set));
    }
  };
  group_by(true);
  group_by(false);
  // Drop groups strictly contained in another group; what remains is maximal
  // within the sample.
  std::vector<RSet<S>> maximal;
  for (size_t i = 0; i < sets.size(); ++i) {
    bool contained = false;
    for (size_t j = 0; j < sets.size() && !contained; ++j) {
      if (i == j || sets[i].members.size() >= sets[j].members.size()) continue;
      bool subset = true;
      for (size_t m : sets[i].members) {
        if (std::find(sets[j].members.begin(), sets[j].members.end(), m) ==
            sets[j].members.end())
          subset = false;
      }
      contained = subset;
    }
    if (!contained) maximal.push_back(sets[i]);
  }
  return maximal;
}

// For a type-x set and an outside point on a different x-line, some member
// fails to tie with it; returns such a member.
template <class S>
std::optional<size_t> exhibit_non_tied(const FdAlgebra& algebra, const RSet<S>& set,
                                       const std::vector<GssPointC<S>>& pts,
                                       const GssPointC<S>& outside, const Tolerance& tol = {}) {
  for (size_t m : set.members)
    if (!tie_relation_c(algebra, pts[m], outside, TieMode::fast, tol)) return m;
  return std::nullopt;
}

// Rebuild the pair of semilinear maps behind a tie-preserving bijection of
// the structure space of a full matrix block, m >= 3.
//
// The flip (adjoint-composed form) is detected from the image of an x-type
// set; the ray maps are transported through the oracle; the matrices come
// from the images of the projective frame e_1,...,e_m, e_1+...+e_m; the
// automorphism flag from the image of (e_1 + i e_2). The result is verified
// by a round trip over the frame plus seeded random probes.
template <class S>
struct Reconstruction {
  SemilinearMap<S> u;
  SemilinearMap<S> v;
  bool flipped = false;
};

template <class S>
Reconstruction<S> reconstruct_pair(const FdAlgebra& algebra,
                                   const std::function<GssPointC<S>(const GssPointC<S>&)>& phi,
                                   std::uint64_t probe_seed = 20240601, int random_probes = 50,
                                   const Tolerance& tol = {}) {
  if (algebra.block_count() != 1)
    throw std::invalid_argument("reconstruction acts on a single full block");
  const int m = algebra.block_dim(0);
  if (m < 3) throw std::invalid_argument("reconstruction requires block dimension >= 3");

  auto unit = [&](int i) {
    Vector<S> v = Vector<S>::Constant(m, ScalarOps<S>::from_int(0));
    v(i) = ScalarOps<S>::from_int(1);
    return v;
  };
  auto pt = [&](const Vector<S>& x, const Vector<S>& y) {
    return canonicalize_point<S>(algebra, 0, x, y);
  };

  // Flip detection on the image of an x-type triple.
  GssPointC<S> qa = phi(pt(unit(0), unit(0)));
  GssPointC<S> qb = phi(pt(unit(0), unit(1)));
  GssPointC<S> qc = phi(pt(unit(0), unit(0) + unit(1)));
  bool x_common = rays_equal(qa.x, qb.x, tol) && rays_equal(qa.x, qc.x, tol);
  bool y_common = rays_equal(qa.y, qb.y, tol) && rays_equal(qa.y, qc.y, tol);
  if (x_common && y_common) throw ReconstructionError("oracle is not injective on an R-set");
  if (!x_common && !y_common)
    throw ReconstructionError("image of an x-type set is neither type");
  const bool flipped = y_common;

  auto phi2 = [&](const GssPointC<S>& p) {
    GssPointC<S> img = phi(p);
    return flipped ? involution(algebra, img, InvolutionKind::adjoint) : img;
  };
  auto x_ray_image = [&](const Vector<S>& x) { return phi2(pt(x, unit(0))).x; };
  auto y_ray_image = [&](const Vector<S>& y) { return phi2(pt(unit(0), y)).y; };

  Vector<S> all_ones = Vector<S>::Constant(m, ScalarOps<S>::from_int(1));

  auto build_matrix = [&](const std::function<Vector<S>(const Vector<S>&)>& ray_image,
                          const char* side) {
    std::vector<Vector<S>> z;
    for (int j = 0; j < m; ++j) z.push_back(ray_image(unit(j)));
    Vector<S> zs = ray_image(all_ones);
    auto lambda = span_coefficients(z, zs, tol);
    if (!lambda)
      throw ReconstructionError(std::string(side) + ": frame image escapes the basis span");
    Matrix<S> mat(m, m);
    for (int j = 0; j < m; ++j) {
      const S& c = (*lambda)(j);
      bool zero;
      if constexpr (ScalarOps<S>::exact) {
        zero = ScalarOps<S>::is_zero(c);
      } else {
        zero = std::sqrt(ScalarOps<S>::weight_to_double(abs2_of(c))) < tol.indeterminate_band;
      }
      if (zero)
        throw ReconstructionError(std::string(side) + ": degenerate frame coefficient");
      mat.col(j) = z[static_cast<size_t>(j)] * c;
    }
    // Automorphism flag from the image of (e_1 + i e_2).
    Vector<S> probe = unit(0) + unit(1) * ScalarOps<S>::imag_unit();
    Vector<S> img = ray_image(probe);
    Vector<S> id_candidate = mat.col(0) + mat.col(1) * ScalarOps<S>::imag_unit();
    Vector<S> conj_candidate = mat.col(0) - mat.col(1) * ScalarOps<S>::imag_unit();
    bool is_id = rays_equal(canonical_ray(id_candidate), canonical_ray(img), tol);
    bool is_conj = rays_equal(canonical_ray(conj_candidate), canonical_ray(img), tol);
    if (is_id == is_conj)
      throw ReconstructionError(std::string(side) + ": automorphism flag undecidable");
    return SemilinearMap<S>{std::move(mat), is_conj};
  };

  SemilinearMap<S> u = build_matrix(x_ray_image, "x side");
  SemilinearMap<S> v = build_matrix(y_ray_image, "y side");
  if (u.conjugate != v.conjugate)
    throw ReconstructionError("sides disagree on the automorphism flag");
  if (rank_of<S>(u.m, tol) != m || rank_of<S>(v.m, tol) != m)
    throw ReconstructionError("reconstructed matrix is singular");

  // Round trip over the frame and seeded probes.
  PairInducedMap<S> induced(u, v, algebra, algebra, tol);
  auto wrap = [&](const GssPointC<S>& p) {
    GssPointC<S> img = induced(p);
    return flipped ? involution(algebra, img, InvolutionKind::adjoint) : img;
  };
  std::vector<GssPointC<S>> probes;
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) probes.push_back(pt(unit(j), unit(k)));
  probes.push_back(pt(all_ones, all_ones));
  probes.push_back(pt(unit(0) + unit(1) * ScalarOps<S>::imag_unit(),
                      unit(1) + unit(2) * ScalarOps<S>::imag_unit()));
  Rng rng(probe_seed);
  for (int t = 0; t < random_probes; ++t)
    probes.push_back(pt(random_nonzero_vector<S>(rng, m), random_nonzero_vector<S>(rng, m)));
  for (const auto& p : probes) {
    if (!points_equal(phi(p), wrap(p), tol))
      throw ReconstructionError("round-trip mismatch on a probe point");
  }
  return Reconstruction<S>{std::move(u), std::move(v), flipped};
}

}  // namespace gss::cstar
