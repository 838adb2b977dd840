#include <doctest.h>

#include "gss/banach/ell1_complex.hpp"
#include "gss/banach/gss.hpp"
#include "gss/banach/io.hpp"
#include "gss/banach/not_transitive.hpp"
#include "gss/closure/transforms.hpp"

using namespace gss;
using namespace gss::banach;

namespace {

Vector<Rational> rvec(std::initializer_list<long long> vals) {
  Vector<Rational> v(static_cast<Index>(vals.size()));
  Index i = 0;
  for (long long x : vals) v(i++) = Rational(x);
  return v;
}

TorusPoint turns(std::initializer_list<Rational> vals) {
  return TorusPoint::of(std::vector<Rational>(vals));
}

}  // namespace

TEST_CASE("canonical functionals identify proportional vectors") {
  auto p = GssPointB<Rational>::from_vector(rvec({-2, 0, 4}));
  auto q = GssPointB<Rational>::from_vector(rvec({1, 0, -2}));
  CHECK(points_equal(p, q));
  CHECK_THROWS_AS(GssPointB<Rational>::from_vector(rvec({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("model construction guards") {
  CHECK_THROWS_AS(NormModel<Rational>::ell1(1, false), std::invalid_argument);
  // asymmetric vertex list
  CHECK_THROWS_WITH_AS(
      NormModel<Rational>::polyhedral(2, false, {rvec({1, 0}), rvec({0, 1}), rvec({0, -1})}),
      doctest::Contains("asymmetric"), std::invalid_argument);
}

TEST_CASE("structure space point counts") {
  auto ell1_2 = build_gss_points(NormModel<Rational>::ell1(2, false));
  CHECK(ell1_2.size() == 2);  // ker f_{(1,1)}, ker f_{(1,-1)}
  auto ell1_3 = build_gss_points(NormModel<Rational>::ell1(3, false));
  CHECK(ell1_3.size() == 4);
  // linf^2: dual ball is the ell1 cross-polytope with 4 vertices, 2 orbits
  std::vector<Vector<Rational>> cross = {rvec({1, 0}), rvec({-1, 0}), rvec({0, 1}), rvec({0, -1})};
  auto linf_2 = build_gss_points(NormModel<Rational>::polyhedral(2, false, cross));
  CHECK(linf_2.size() == 2);
}

TEST_CASE("closure membership is span membership") {
  NormModel<Rational> l13 = NormModel<Rational>::ell1(3, false);
  auto f = [&](std::initializer_list<long long> v) {
    return GssPointB<Rational>::from_vector(rvec(v));
  };
  // p in s
  CHECK(closure_membership_b(l13, {f({1, 1, 1}), f({1, 1, -1})}, f({1, 1, 1})));
  // f_{(1,-1,1)} is not in span{f_{(1,1,1)}, f_{(1,1,-1)}}
  CHECK_FALSE(closure_membership_b(l13, {f({1, 1, 1}), f({1, 1, -1})}, f({1, -1, 1})));
  // a non-point input is rejected before the span test
  CHECK_THROWS_AS(closure_membership_b(l13, {f({1, 1, 1})},
                                       GssPointB<Rational>{rvec({1, 2, 0})}),
                  std::invalid_argument);
}

TEST_CASE("real ell1 pairs are closed") {
  NormModel<Rational> l13 = NormModel<Rational>::ell1(3, false);
  auto pts = build_gss_points(l13);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      CHECK(pair_closed_bruteforce(l13, pts[i], pts[j]));
  CHECK_THROWS_AS(pair_closed_bruteforce(l13, pts[0], pts[0]), std::invalid_argument);
}

TEST_CASE("mixed3d extremality oracle") {
  NormModel<Rational> m = NormModel<Rational>::mixed3d();
  CHECK(m.is_extreme_dual(rvec({1, 0, 0})));
  CHECK(m.is_extreme_dual(rvec({0, 1, 1})));
  CHECK(m.is_extreme_dual(rvec({0, 0, 1})));
  CHECK_FALSE(m.is_extreme_dual(rvec({1, 1, 0})));   // both a and b nonzero
  CHECK_FALSE(m.is_extreme_dual(rvec({1, 2, 3})));
}

TEST_CASE("mixed3d pair closure matches the worked example") {
  NormModel<Rational> m = NormModel<Rational>::mixed3d();
  auto f1 = GssPointB<Rational>::from_vector(rvec({1, 0, 0}));
  auto f2 = GssPointB<Rational>::from_vector(rvec({0, 1, 0}));
  auto e = GssPointB<Rational>::from_vector(rvec({0, 0, 1}));
  Vector<Rational> witness;
  CHECK_FALSE(pair_closed_bruteforce(m, f1, e, {}, &witness));
  CHECK(points_equal(GssPointB<Rational>::from_vector(witness),
                     GssPointB<Rational>::from_vector(rvec({1, 0, 1}))));
  CHECK(pair_closed_bruteforce(m, f1, f2));
}

TEST_CASE("not-transitive case study passes every claim") {
  NotTransitiveReport rep = not_transitive_case_study();
  CHECK(rep.all_pass);
  CHECK(rep.tie_f1_e);
  CHECK(rep.tie_e_f2);
  CHECK(rep.pair_closed_f1_f2);
  CHECK(rep.sim_f1_f2);
  for (const auto& claim : rep.claims) {
    INFO(claim.id);
    CHECK(claim.pass);
  }
}

TEST_CASE("complex ell1 tie criterion and witness") {
  // u=(1,1,1), v=(1,1,-1): ratios {1,-1}, witness (1,1,-i)
  TorusPoint u = turns({Rational(0), Rational(0), Rational(0)});
  TorusPoint v = turns({Rational(0), Rational(0), Rational(1, 2)});
  TorusTieResult t = ell1_complex_tie(u, v);
  CHECK(t.tie);
  CHECK(t.ratio_count == 2);
  REQUIRE(t.witness.has_value());
  CHECK(same_torus_kernel(*t.witness, turns({Rational(0), Rational(0), Rational(3, 4)})));
  CHECK(torus_in_span_two_classes(u, v, *t.witness));

  // u=(1,1,1), v=(1,i,-1): three ratio values, no tie
  TorusPoint v3 = turns({Rational(0), Rational(1, 4), Rational(1, 2)});
  TorusTieResult t3 = ell1_complex_tie(u, v3);
  CHECK_FALSE(t3.tie);
  CHECK(t3.ratio_count == 3);

  // u = v: tie via the singleton ratio set
  TorusTieResult te = ell1_complex_tie(u, u);
  CHECK(te.tie);
  CHECK(te.ratio_count == 1);
  CHECK_FALSE(te.witness.has_value());

  // brute-force span oracle agrees on both
  CHECK_FALSE(pair_closed_bruteforce_torus(u, v));
  CHECK(pair_closed_bruteforce_torus(u, v3));
  CHECK_THROWS_AS(pair_closed_bruteforce_torus(u, u), std::invalid_argument);
}

TEST_CASE("float ratio clustering agrees with exact counting") {
  TorusPoint u = turns({Rational(0), Rational(1, 3), Rational(2, 3), Rational(0)});
  TorusPoint v = turns({Rational(1, 2), Rational(1, 3), Rational(1, 6), Rational(0)});
  TorusTieResult exact = ell1_complex_tie(u, v);
  FloatTieResult ft = ell1_complex_tie_float(u.to_complex(), v.to_complex());
  CHECK(ft.cluster_count == exact.ratio_count);
  CHECK(ft.tie == exact.tie);
}

TEST_CASE("isometry induced maps") {
  NormModel<Rational> l13 = NormModel<Rational>::ell1(3, false);
  auto pts = build_gss_points(l13);

  // identity acts as the identity
  IsometryInducedMap<Rational> id(Matrix<Rational>::Identity(3, 3), l13, l13);
  for (const auto& p : pts) CHECK(points_equal(id(p), p));

  // coordinate permutation permutes the four points
  Matrix<Rational> perm = Matrix<Rational>::Zero(3, 3);
  perm(0, 1) = Rational(1);
  perm(1, 0) = Rational(1);
  perm(2, 2) = Rational(1);
  IsometryInducedMap<Rational> swap01(perm, l13, l13);
  std::vector<bool> hit(pts.size(), false);
  for (const auto& p : pts) {
    auto img = swap01(p);
    bool matched = false;
    for (size_t k = 0; k < pts.size(); ++k)
      if (!hit[k] && points_equal(img, pts[k])) {
        hit[k] = true;
        matched = true;
        break;
      }
    CHECK(matched);
  }

  // a non-isometry is rejected
  Matrix<Rational> stretch = Matrix<Rational>::Identity(3, 3);
  stretch(0, 0) = Rational(2);
  CHECK_THROWS_WITH_AS((IsometryInducedMap<Rational>(stretch, l13, l13)),
                       doctest::Contains("not an isometry"), std::invalid_argument);
}

TEST_CASE("membership induces a closure space on point samples") {
  NormModel<Rational> l12 = NormModel<Rational>::ell1(2, false);
  auto pts = build_gss_points(l12);
  closure::Space s = induced_space(l12, pts);
  CHECK(s.size() == 2);
  // S(X) of a Banach space is T1
  CHECK(closure::separation_flags(s).t1);
  // the two-point sample of a discrete pair relation is the discrete space
  CHECK(s.closed_family().size() == 4);
}

TEST_CASE("norm model files round-trip") {
  NormModel<Rational> l13 = NormModel<Rational>::ell1(3, false);
  std::string text = write_norm_model_real(l13);
  NormModel<Rational> back = read_norm_model_real(text);
  CHECK(back.kind == NormKind::ell1);
  CHECK(back.dimension == 3);

  std::vector<Vector<Rational>> cross = {rvec({1, 0}), rvec({-1, 0}), rvec({0, 1}), rvec({0, -1})};
  NormModel<Rational> poly = NormModel<Rational>::polyhedral(2, false, cross);
  NormModel<Rational> poly_back = read_norm_model_real(write_norm_model_real(poly));
  CHECK(poly_back.kind == NormKind::polyhedral);
  CHECK(poly_back.dual_vertices.size() == 4);
  CHECK(write_norm_model_real(poly_back) == write_norm_model_real(poly));
}
