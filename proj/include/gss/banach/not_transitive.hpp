#pragma once

#include <sstream>

#include "gss/banach/gss.hpp"

namespace gss::banach {

// Machine-checked walkthrough of the three-dimensional norm whose tie
// relation fails to be transitive. Everything runs over exact rationals;
// the five functionals are stored projectively.
struct CaseClaim {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct NotTransitiveReport {
  std::vector<CaseClaim> claims;
  bool all_pass = true;

  void add(std::string id, bool pass, std::string detail = {}) {
    all_pass = all_pass && pass;
    claims.push_back(CaseClaim{std::move(id), pass, std::move(detail)});
  }

  bool tie_f1_e = false;
  bool tie_e_f2 = false;
  bool pair_closed_f1_f2 = false;
  bool sim_f1_f2 = false;
};

inline NotTransitiveReport not_transitive_case_study() {
  using S = Rational;
  NormModel<S> model = NormModel<S>::mixed3d();
  Tolerance tol;  // unused by exact paths

  auto vec = [](long long a, long long b, long long c) {
    Vector<S> v(3);
    v << Rational(a), Rational(b), Rational(c);
    return v;
  };
  GssPointB<S> f1 = GssPointB<S>::from_vector(vec(1, 0, 0));
  GssPointB<S> f2 = GssPointB<S>::from_vector(vec(0, 1, 0));
  GssPointB<S> f3 = GssPointB<S>::from_vector(vec(1, 0, 1));   // (1,0,1)/sqrt(2) at unit norm
  GssPointB<S> f4 = GssPointB<S>::from_vector(vec(0, 1, 1));   // (0,1,1)/sqrt(2) at unit norm
  GssPointB<S> e = GssPointB<S>::from_vector(vec(0, 0, 1));

  NotTransitiveReport rep;

  const std::pair<const char*, const GssPointB<S>*> named[] = {
      {"f1", &f1}, {"f2", &f2}, {"f3", &f3}, {"f4", &f4}, {"e", &e}};
  for (const auto& [name, p] : named) {
    rep.add(std::string("exposing-functional-extreme/") + name,
            model.is_extreme_dual(p->functional, tol),
            "unique exposing functional is an extreme dual point");
  }

  Vector<S> witness;
  bool closed_f1_e = pair_closed_bruteforce(model, f1, e, tol, &witness);
  rep.tie_f1_e = !closed_f1_e;
  bool witness_is_f3 =
      !closed_f1_e && points_equal(GssPointB<S>::from_vector(witness), f3, tol);
  rep.add("tie/f1-e", rep.tie_f1_e && witness_is_f3, "witness kernel equals ker f3");

  bool closed_e_f2 = pair_closed_bruteforce(model, f2, e, tol, &witness);
  rep.tie_e_f2 = !closed_e_f2;
  bool witness_is_f4 =
      !closed_e_f2 && points_equal(GssPointB<S>::from_vector(witness), f4, tol);
  rep.add("tie/e-f2", rep.tie_e_f2 && witness_is_f4, "witness kernel equals ker f4");

  rep.pair_closed_f1_f2 = pair_closed_bruteforce(model, f1, f2, tol);
  rep.add("pair-closed/f1-f2", rep.pair_closed_f1_f2,
          "no extreme dual point in span{f1,f2} has a third kernel");

  bool member_f3 = closure_membership_b(model, {f1, e}, f3, tol);
  rep.add("membership/f3-in-closure-f1-e", member_f3, "f3 = f1 + e projectively");
  bool member_f4 = closure_membership_b(model, {f2, e}, f4, tol);
  rep.add("membership/f4-in-closure-f2-e", member_f4, "f4 = f2 + e projectively");
  bool nonmember = !closure_membership_b(model, {f1, f2}, f3, tol);
  rep.add("membership/f3-not-in-closure-f1-f2", nonmember, "span{f1,f2} misses f3");

  auto coeff = span_coefficients<S>({f1.functional, e.functional}, f3.functional);
  bool convex_combination = coeff.has_value() && (*coeff)(0) == Rational(1) && (*coeff)(1) == Rational(1);
  rep.add("decomposition/f3-from-f1-e", convex_combination,
          "projective coefficients (1,1), i.e. f3 = (f1 + e)/sqrt(2) at unit norm");

  rep.sim_f1_f2 = rep.tie_f1_e && rep.tie_e_f2;
  rep.add("sim/f1-f2-via-e", rep.sim_f1_f2, "chain f1 <-> e <-> f2");
  rep.add("tie-not-transitive", rep.sim_f1_f2 && rep.pair_closed_f1_f2,
          "f1 ~ f2 although f1 and f2 do not tie");

  return rep;
}

}  // namespace gss::banach
