#include <doctest.h>

#include "gss/linalg.hpp"
#include "gss/rng.hpp"

using namespace gss;

namespace {

template <class S>
Vector<S> vec(std::initializer_list<S> vals) {
  Vector<S> v(static_cast<Index>(vals.size()));
  Index i = 0;
  for (const auto& x : vals) v(i++) = x;
  return v;
}

GaussianRational gr(long long re, long long im = 0) {
  return {Rational(re), Rational(im)};
}

}  // namespace

TEST_CASE("exact rank") {
  Matrix<GaussianRational> m(3, 3);
  m << gr(1), gr(0), gr(1), gr(0), gr(1), gr(1), gr(1), gr(1), gr(2);
  CHECK(rank_of<GaussianRational>(m) == 2);
  m(2, 2) = gr(3);
  CHECK(rank_of<GaussianRational>(m) == 3);
  CHECK(rank_of<GaussianRational>(Matrix<GaussianRational>::Constant(2, 2, gr(0))) == 0);
}

TEST_CASE("float rank with margins") {
  Matrix<Complex> m(2, 3);
  m << Complex(1, 0), Complex(0, 1), Complex(1, 1), Complex(2, 0), Complex(0, 2), Complex(2, 2);
  CHECK(rank_of<Complex>(m) == 1);
  // a gray-zone singular value triggers the indeterminate error
  Matrix<Complex> g = Matrix<Complex>::Identity(2, 2);
  g(1, 1) = Complex(1e-8, 0);
  CHECK_THROWS_AS(rank_of<Complex>(g), IndeterminateError);
}

TEST_CASE("exact span membership and coefficients") {
  using S = GaussianRational;
  std::vector<Vector<S>> span = {vec<S>({gr(1), gr(0), gr(1)}), vec<S>({gr(0), gr(1), gr(1)})};
  Vector<S> in = vec<S>({gr(2), gr(3), gr(5)});
  Vector<S> out = vec<S>({gr(1), gr(0), gr(0)});
  CHECK(in_span(span, in));
  CHECK_FALSE(in_span(span, out));
  auto coeff = span_coefficients(span, in);
  REQUIRE(coeff.has_value());
  CHECK((*coeff)(0) == gr(2));
  CHECK((*coeff)(1) == gr(3));
  CHECK_FALSE(span_coefficients(span, out).has_value());
  // zero target is always in any span
  CHECK(in_span(span, vec<S>({gr(0), gr(0), gr(0)})));
  // empty span contains only zero
  CHECK_FALSE(in_span(std::vector<Vector<S>>{}, in));
}

TEST_CASE("float span membership carries its residual as margin") {
  using S = Complex;
  std::vector<Vector<S>> span = {vec<S>({S(1, 0), S(0, 0)}), vec<S>({S(0, 0), S(1, 0)})};
  double margin = -1;
  CHECK(in_span(span, vec<S>({S(2, 1), S(-3, 0)}), {}, &margin));
  CHECK(margin < 1e-12);
  std::vector<Vector<S>> line = {vec<S>({S(1, 0), S(1, 0)})};
  CHECK_FALSE(in_span(line, vec<S>({S(1, 0), S(-1, 0)}), {}, &margin));
  CHECK(margin > 1e-3);
}

TEST_CASE("nullspace bases") {
  using S = GaussianRational;
  Matrix<S> m(1, 3);
  m << gr(1), gr(1), gr(1);
  auto basis = nullspace(m);
  CHECK(basis.size() == 2);
  for (const auto& v : basis) {
    S acc = gr(0);
    for (Index i = 0; i < 3; ++i) acc += m(0, i) * v(i);
    CHECK(ScalarOps<S>::is_zero(acc));
  }
  // float path
  Matrix<Complex> f(1, 3);
  f << Complex(1, 0), Complex(0, 1), Complex(0, 0);
  auto fb = nullspace(f);
  CHECK(fb.size() == 2);
  for (const auto& v : fb) CHECK(std::abs((f * v)(0)) < 1e-12);
}

TEST_CASE("wedge dependence") {
  using S = GaussianRational;
  Vector<S> a = vec<S>({gr(1), gr(2), gr(-1)});
  Vector<S> b = vec<S>({gr(2, 2), gr(4, 4), gr(-2, -2)});  // (2+2i) * a
  CHECK(linearly_dependent(a, b));
  Vector<S> c = vec<S>({gr(1), gr(2), gr(0)});
  CHECK_FALSE(linearly_dependent(a, c));
}

TEST_CASE("primitive rays are canonical on proportional exact vectors") {
  using S = GaussianRational;
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    Vector<S> v = random_nonzero_vector<S>(rng, 3);
    GaussianRational c = random_gaussian_rational(rng, 3);
    if (c.is_zero()) continue;
    Vector<S> w = v * c;
    Vector<S> cv = canonical_primitive_ray(v);
    Vector<S> cw = canonical_primitive_ray(w);
    for (Index i = 0; i < 3; ++i) CHECK(cv(i) == cw(i));
    // canonicalization is idempotent
    Vector<S> cc = canonical_primitive_ray(cv);
    for (Index i = 0; i < 3; ++i) CHECK(cc(i) == cv(i));
  }
}

TEST_CASE("primitive rays divide out the content") {
  using S = Rational;
  Vector<S> v(3);
  v << Rational(2, 3), Rational(4, 3), Rational(-2);
  Vector<S> p = primitive_ray(v);
  CHECK(p(0) == Rational(1));
  CHECK(p(1) == Rational(2));
  CHECK(p(2) == Rational(-3));
}
