#include <doctest.h>

#include "gss/cstar/gss.hpp"
#include "gss/cstar/io.hpp"
#include "gss/cstar/lemmas.hpp"
#include "gss/cstar/spectra.hpp"
#include "gss/rng.hpp"

using namespace gss;
using namespace gss::cstar;

namespace {

using S = GaussianRational;

GaussianRational gr(long long re, long long im = 0) { return {Rational(re), Rational(im)}; }

Vector<S> unit(int n, int i) {
  Vector<S> v = Vector<S>::Constant(n, gr(0));
  v(i) = gr(1);
  return v;
}

Vector<S> gvec(std::initializer_list<GaussianRational> vals) {
  Vector<S> v(static_cast<Index>(vals.size()));
  Index i = 0;
  for (const auto& x : vals) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("algebra literals") {
  FdAlgebra a = FdAlgebra::parse("2+3");
  CHECK(a.blocks == std::vector<int>{2, 3});
  CHECK(a.str() == "2+3");
  CHECK(a.hilbert_dim() == 5);
  CHECK(a.algebra_dim() == 13);
  CHECK_THROWS_AS(FdAlgebra::parse("2+"), std::invalid_argument);
  CHECK_THROWS_AS(FdAlgebra({0}), std::invalid_argument);
  CHECK_THROWS_AS(FdAlgebra(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("point canonicalization and kernel equality") {
  FdAlgebra m2({2});
  // (e1, e2) and (2 e1, i e2) name the same kernel
  GssPointC<S> p = canonicalize_point<S>(m2, 0, unit(2, 0), unit(2, 1));
  GssPointC<S> q = canonicalize_point<S>(m2, 0, unit(2, 0) * gr(2), unit(2, 1) * gr(0, 1));
  CHECK(points_equal(p, q));
  // (e1, e1) and (e1, e2) are distinct
  GssPointC<S> r = canonicalize_point<S>(m2, 0, unit(2, 0), unit(2, 0));
  CHECK_FALSE(points_equal(p, r));
  // zero vectors are rejected
  CHECK_THROWS_AS(canonicalize_point<S>(m2, 0, Vector<S>::Constant(2, gr(0)), unit(2, 0)),
                  std::invalid_argument);
  // wrong dimensions
  CHECK_THROWS_AS(canonicalize_point<S>(m2, 0, unit(3, 0), unit(3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize_point<S>(m2, 5, unit(2, 0), unit(2, 1)), std::invalid_argument);
}

TEST_CASE("functional matrices satisfy the evaluation identity") {
  FdAlgebra m2({2});
  GssPointC<S> p11 = canonicalize_point<S>(m2, 0, unit(2, 0), unit(2, 0));
  FunctionalMatrix<S> f11 = functional_matrix(m2, p11);
  CHECK(f11.m(0, 0) == gr(1));
  CHECK(f11.m(0, 1) == gr(0));
  CHECK(f11.m(1, 0) == gr(0));
  CHECK(f11.m(1, 1) == gr(0));

  // trace(E_{jk} . F) must equal <E_{jk} x, y> for every matrix unit
  GssPointC<S> p12 = canonicalize_point<S>(m2, 0, unit(2, 0), unit(2, 1));
  FunctionalMatrix<S> f12 = functional_matrix(m2, p12);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) {
      Matrix<S> е = Matrix<S>::Constant(2, 2, gr(0));
      е(j, k) = gr(1);
      S lhs = evaluate_functional(f12, {е});
      S rhs = inner_product(Vector<S>(е * p12.x), p12.y);
      CHECK(lhs == rhs);
    }

  // proportional inputs produce the same matrix after canonicalization
  GssPointC<S> q12 = canonicalize_point<S>(m2, 0, unit(2, 0) * gr(0, 2), unit(2, 1) * gr(-3));
  FunctionalMatrix<S> g12 = functional_matrix(m2, q12);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) CHECK(f12.m(i, j) == g12.m(i, j));
}

TEST_CASE("closure membership in a block") {
  FdAlgebra m2({2});
  // span{omega_{x,y1}, omega_{x,y2}} contains omega_{x, y1+y2}
  GssPointC<S> a = canonicalize_point<S>(m2, 0, unit(2, 0), unit(2, 0));
  GssPointC<S> b = canonicalize_point<S>(m2, 0, unit(2, 0), unit(2, 1));
  GssPointC<S> mix = canonicalize_point<S>(m2, 0, unit(2, 0), unit(2, 0) + unit(2, 1));
  CHECK(closure_membership_c(m2, {a, b}, mix));
  CHECK(closure_membership_c(m2, {a, b}, a));  // p in s

  // diagonal functionals do not span the off-diagonal one
  GssPointC<S> d1 = canonicalize_point<S>(m2, 0, unit(2, 0), unit(2, 0));
  GssPointC<S> d2 = canonicalize_point<S>(m2, 0, unit(2, 1), unit(2, 1));
  GssPointC<S> off = canonicalize_point<S>(m2, 0, unit(2, 0) + unit(2, 1),
                                           unit(2, 0) + unit(2, 1));
  CHECK_FALSE(closure_membership_c(m2, {d1, d2}, off));
}

TEST_CASE("tie relation: dependence criterion vs pencil analysis") {
  FdAlgebra m2({2});
  GssPointC<S> p = canonicalize_point<S>(m2, 0, unit(2, 0), unit(2, 0));
  GssPointC<S> q = canonicalize_point<S>(m2, 0, unit(2, 0), unit(2, 1));
  GssPointC<S> r = canonicalize_point<S>(m2, 0, unit(2, 1), unit(2, 1));
  CHECK(tie_relation_c(m2, p, q, TieMode::fast));        // x parts dependent
  CHECK(tie_relation_c(m2, p, q, TieMode::bruteforce));
  CHECK_FALSE(tie_relation_c(m2, p, r, TieMode::fast));  // both parts independent
  CHECK_FALSE(tie_relation_c(m2, p, r, TieMode::bruteforce));

  // the brute-force witness is a third kernel inside the pair closure
  GssPointC<S> witness;
  REQUIRE(tie_relation_c(m2, p, q, TieMode::bruteforce, {}, &witness));
  CHECK_FALSE(points_equal(witness, p));
  CHECK_FALSE(points_equal(witness, q));
  CHECK(closure_membership_c(m2, {p, q}, witness));

  // cross-block pairs never tie
  FdAlgebra m23({2, 3});
  GssPointC<S> b0 = canonicalize_point<S>(m23, 0, unit(2, 0), unit(2, 0));
  GssPointC<S> b1 = canonicalize_point<S>(m23, 1, unit(3, 0), unit(3, 1));
  CHECK_FALSE(tie_relation_c(m23, b0, b1, TieMode::fast));
  CHECK_FALSE(tie_relation_c(m23, b0, b1, TieMode::bruteforce));
}

TEST_CASE("equivalence classes are the blocks") {
  FdAlgebra m22({2, 2});
  Rng rng(5);
  std::vector<GssPointC<S>> pts;
  for (int b = 0; b < 2; ++b)
    for (int i = 0; i < 2; ++i)
      pts.push_back(canonicalize_point<S>(m22, b, random_nonzero_vector<S>(rng, 2),
                                          random_nonzero_vector<S>(rng, 2)));
  auto classes = equivalence_classes_c(m22, pts);
  CHECK(classes.size() == 2);
  CHECK(classes[0].size() == 2);
  CHECK(classes[1].size() == 2);

  FdAlgebra m3({3});
  std::vector<GssPointC<S>> one_block;
  for (int i = 0; i < 10; ++i)
    one_block.push_back(canonicalize_point<S>(m3, 0, random_nonzero_vector<S>(rng, 3),
                                              random_nonzero_vector<S>(rng, 3)));
  CHECK(equivalence_classes_c(m3, one_block).size() == 1);
  CHECK(equivalence_classes_c(m3, std::vector<GssPointC<S>>{one_block[0]}).size() == 1);
}

TEST_CASE("spectra of small algebras") {
  // a single block: one point, zero kernel ideal
  SpectraResult m3 = spectra(FdAlgebra({3}));
  CHECK(m3.gs.size() == 1);
  CHECK(m3.ps.size() == 1);
  CHECK(m3.kernels.size() == 1);
  CHECK(m3.kernels[0].empty());

  // two blocks: discrete two-point spaces, complementary kernels
  SpectraResult m23 = spectra(FdAlgebra({2, 3}));
  CHECK(m23.gs.size() == 2);
  CHECK(m23.ps.size() == 2);
  CHECK(m23.gs.closed_family().size() == 4);
  CHECK(m23.ps.closed_family().size() == 4);
  CHECK(m23.gamma.is_bijective());
  CHECK(m23.kernels[0] == std::vector<int>{1});
  CHECK(m23.kernels[1] == std::vector<int>{0});

  // the abelian case C^2
  SpectraResult c2 = spectra(FdAlgebra({1, 1}));
  CHECK(c2.gs.size() == 2);
  CHECK(c2.gs.closed_family().size() == 4);

  // ideal formula: the closure fixes every subset (discreteness)
  for (std::uint32_t t = 0; t < 8; ++t) CHECK(ps_closure_ideal_formula(3, t) == t);
}

TEST_CASE("like-tensor check and decomposition") {
  // x = (e1, e1), y = (e2, -e2): the sum vanishes and C reproduces both identities
  std::vector<Vector<S>> xs = {unit(2, 0), unit(2, 0)};
  std::vector<Vector<S>> ys = {unit(2, 1), Vector<S>(-unit(2, 1))};
  CHECK(like_tensor_check(xs, ys));
  Matrix<S> c = like_tensor_decompose(xs, ys);
  CHECK(like_tensor_verify(xs, ys, c));

  // all-zero ys: C = 0
  std::vector<Vector<S>> zy = {Vector<S>::Constant(2, gr(0)), Vector<S>::Constant(2, gr(0))};
  Matrix<S> zc = like_tensor_decompose(xs, zy);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) CHECK(ScalarOps<S>::is_zero(zc(i, j)));

  // a non-vanishing sum fails the check and cannot be decomposed
  std::vector<Vector<S>> bad_x = {unit(2, 0)};
  std::vector<Vector<S>> bad_y = {unit(2, 0)};
  CHECK_FALSE(like_tensor_check(bad_x, bad_y));
  CHECK_THROWS_AS(like_tensor_decompose(bad_x, bad_y), std::invalid_argument);
}

TEST_CASE("nullspace solver for the trace constraint system") {
  // identity in M_3: solution space is exactly span{I}
  auto exact = sublemma_solve<S>(Matrix<S>::Identity(3, 3));
  CHECK(exact.dimension == 1);
  // the basis element is a scalar multiple of I
  const Matrix<S>& b = exact.basis[0];
  CHECK(b(0, 1) == gr(0));
  CHECK(b(0, 0) == b(1, 1));
  CHECK(b(1, 1) == b(2, 2));

  // zero matrix: all pairs constrain, dimension 0
  auto zero = sublemma_solve<S>(Matrix<S>::Constant(2, 2, gr(0)));
  CHECK(zero.dimension == 0);

  // rank-one exact input
  Matrix<S> r1 = hermitian_outer(gvec({gr(1), gr(2), gr(0)}), gvec({gr(0, 1), gr(1), gr(1)}));
  auto rank_one = sublemma_solve<S>(r1);
  CHECK(rank_one.dimension == 1);
  CHECK(linearly_dependent(flatten(rank_one.basis[0]), flatten(r1)));
}

TEST_CASE("involutions") {
  FdAlgebra m2({2});
  GssPointC<S> p = canonicalize_point<S>(m2, 0, unit(2, 0), unit(2, 1));
  GssPointC<S> adj = involution(m2, p, InvolutionKind::adjoint);
  CHECK(rays_equal(adj.x, Vector<S>(unit(2, 1))));
  CHECK(rays_equal(adj.y, Vector<S>(unit(2, 0))));
  CHECK(points_equal(involution(m2, adj, InvolutionKind::adjoint), p));

  GssPointC<S> pol = involution(m2, p, InvolutionKind::polar);
  CHECK(rays_equal(pol.x, pol.y));
  CHECK(points_equal(involution(m2, pol, InvolutionKind::polar), pol));

  // adjoint of adjoint is the identity on random points
  Rng rng(11);
  FdAlgebra m3({3});
  for (int i = 0; i < 100; ++i) {
    GssPointC<S> q = canonicalize_point<S>(m3, 0, random_nonzero_vector<S>(rng, 3),
                                           random_nonzero_vector<S>(rng, 3));
    CHECK(points_equal(involution(m3, involution(m3, q, InvolutionKind::adjoint),
                                  InvolutionKind::adjoint),
                       q));
  }
}

TEST_CASE("pair-induced point maps") {
  FdAlgebra m2({2});
  // identity maps to the identity
  PairInducedMap<S> id({Matrix<S>::Identity(2, 2), false}, {Matrix<S>::Identity(2, 2), false},
                       m2, m2);
  GssPointC<S> p = canonicalize_point<S>(m2, 0, unit(2, 0), unit(2, 1));
  CHECK(points_equal(id(p), p));

  // diag(1,2): scaling of basis rays is absorbed by canonicalization
  Matrix<S> d = Matrix<S>::Identity(2, 2);
  d(1, 1) = gr(2);
  PairInducedMap<S> diag({d, false}, {d, false}, m2, m2);
  CHECK(points_equal(diag(p), p));

  // conjugation flag maps rays to conjugate rays
  PairInducedMap<S> conj_map({Matrix<S>::Identity(2, 2), true},
                             {Matrix<S>::Identity(2, 2), true}, m2, m2);
  GssPointC<S> z = canonicalize_point<S>(m2, 0, gvec({gr(1), gr(0, 1)}), unit(2, 1));
  GssPointC<S> zc = conj_map(z);
  CHECK(rays_equal(zc.x, Vector<S>(conjugate(z.x))));

  // mismatched automorphism flags and singular matrices are rejected
  CHECK_THROWS_AS((PairInducedMap<S>({Matrix<S>::Identity(2, 2), true},
                                     {Matrix<S>::Identity(2, 2), false}, m2, m2)),
                  std::invalid_argument);
  Matrix<S> sing = Matrix<S>::Constant(2, 2, gr(1));
  CHECK_THROWS_AS((PairInducedMap<S>({sing, false}, {sing, false}, m2, m2)),
                  std::invalid_argument);
}

TEST_CASE("block dimension from structure-space data") {
  CHECK(dimension_of_class(FdAlgebra({3}), 0) == 3);
  CHECK(dimension_of_class(FdAlgebra({1}), 0) == 1);
  CHECK(dimension_of_class(FdAlgebra({2, 5}), 1) == 5);
}

TEST_CASE("classification by fingerprints") {
  Classification iso = classify_algebra(FdAlgebra({2, 3}), FdAlgebra({3, 2}));
  CHECK(iso.isomorphic);
  CHECK(iso.fingerprint_a == std::vector<int>{2, 3});
  CHECK(iso.ccr_a);
  CHECK(iso.discrete_prim_a);

  Classification non = classify_algebra(FdAlgebra({2, 2}), FdAlgebra({4}));
  CHECK_FALSE(non.isomorphic);
  CHECK(non.fingerprint_a == std::vector<int>{2, 2});
  CHECK(non.fingerprint_b == std::vector<int>{4});

  Classification ab = classify_algebra(FdAlgebra({1, 1, 1}), FdAlgebra({1, 2}));
  CHECK_FALSE(ab.isomorphic);
}

TEST_CASE("point literals") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_gaussian_rational("1/2+3/4i") == GaussianRational(Rational(1, 2), Rational(3, 4)));
  CHECK(parse_gaussian_rational("-i") == gr(0, -1));
  CHECK(parse_gaussian_rational("2i") == gr(0, 2));
  CHECK(parse_gaussian_rational("1-2i") == GaussianRational(Rational(1), Rational(-2)));
  CHECK_THROWS_AS(parse_gaussian_rational("abc"), std::invalid_argument);

  FdAlgebra m23({2, 3});
  GssPointC<S> p = parse_point(m23, "(2; 1,0,i; 0,1,1/2)");
  CHECK(p.block == 1);
  CHECK(p.x.size() == 3);
  // round trip through the literal format preserves the point
  GssPointC<S> q = parse_point(m23, format_point(p));
  CHECK(points_equal(p, q));
  CHECK_THROWS_AS(parse_point(m23, "(1; 1,0; 0,1"), std::invalid_argument);
}

TEST_CASE("induced closure space from a point sample") {
  FdAlgebra m2({2});
  std::vector<GssPointC<S>> pts = {
      canonicalize_point<S>(m2, 0, unit(2, 0), unit(2, 0)),
      canonicalize_point<S>(m2, 0, unit(2, 0), unit(2, 1)),
      canonicalize_point<S>(m2, 0, unit(2, 1), unit(2, 1)),
  };
  closure::Space s = induced_space(m2, pts);
  CHECK(s.size() == 3);
  CHECK(closure::separation_flags(s).t1);
}
