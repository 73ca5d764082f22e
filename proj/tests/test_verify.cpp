#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgw/verify.hpp"

using namespace qgw;

TEST_CASE("default carriers use the documented windows") {
  CIModel m{5, {5}};
  IUnderline iu = default_underline(m, 2);
  CHECK(iu.series.zero().lo() == -7);
  CHECK(iu.series.zero().hi() == 5);
  IFixedPoint jf = default_fixed(m, 2, 6);
  CHECK(jf.series.zero().lo() == -2);
  CHECK(jf.series.zero().hi() == 6);
}

TEST_CASE("the difference operator annihilates the I-function") {
  for (CIModel m : {CIModel{5, {5}}, CIModel{6, {3, 3}}}) {
    const int qmax = m.n == 5 ? 3 : 2;
    VerifyOutcome out = pf_check(default_underline(m, qmax));
    CHECK(out.passed);
    CHECK(out.suite == "pf");
    CHECK(out.q_order == qmax);
    CHECK(!out.first_failure.has_value());
  }
}

TEST_CASE("a corrupted I-function is reported as a located failure, not thrown") {
  CIModel m{5, {5}};
  IUnderline iu = default_underline(m, 2);
  auto bump = Laurent<Cyclo>::from_poly(iu.series.zero().lo(), iu.series.zero().hi(),
                                        {Cyclo::one(m.n)}, 0, Cyclo(m.n));
  iu.series[1] += bump;
  VerifyOutcome out = pf_check(iu);
  CHECK(!out.passed);
  REQUIRE(out.first_failure.has_value());
  CHECK(out.first_failure->q_deg == 1);
  CHECK(out.first_failure->place.substr(0, 2) == "z^");
  CHECK(out.first_failure->rhs == "0");
  CHECK(!out.first_failure->lhs.empty());
}

TEST_CASE("shallow windows make the difference check refuse, not guess") {
  CIModel m{5, {5}};
  CHECK_THROWS_AS(pf_check(i_underline(m, 1, -6, m.n - 1)), window_error);
  CHECK_THROWS_AS(pf_check(i_underline(m, 2, -2, m.n)), window_error);
}

TEST_CASE("closed-form suite passes on the quintic") {
  CIModel m{5, {5}};
  const int qmax = 4;
  BirkhoffData bd = compute_ck(default_underline(m, qmax));
  AsymptoticData ad = extract_asymptotics(default_fixed(m, qmax, qmax + 2), 0);
  VerifyOutcome out = popa_check(bd, ad, m);
  CHECK(out.passed);
  CHECK(out.suite == "popa");
  CHECK(out.q_order == qmax);

  // corrupt one constant: the telescoping product breaks at that degree
  BirkhoffData bad = bd;
  bad.c[1][2] += 1;
  VerifyOutcome res = popa_check(bad, ad, m);
  CHECK(!res.passed);
  REQUIRE(res.first_failure.has_value());
  CHECK(res.first_failure->q_deg == 2);
  CHECK(res.first_failure->place.substr(0, 6) == "item 1");

  // corrupt the extracted asymptotics: caught against the closed form
  AsymptoticData adx = ad;
  adx.mu[1] += 1;
  VerifyOutcome res2 = popa_check(bd, adx, m);
  CHECK(!res2.passed);
  REQUIRE(res2.first_failure.has_value());
  CHECK(res2.first_failure->place == "item 4: mu");
  CHECK(res2.first_failure->q_deg == 1);
}

TEST_CASE("loop limit at the distinguished fixed point") {
  VerifyOutcome out = loop_limit_check({5, {5}}, 2);
  CHECK(out.passed);
  CHECK(out.suite == "loop");
  CHECK(!out.first_failure.has_value());
}

TEST_CASE("vertex and loop pieces assemble to the closed genus-one formula") {
  VerifyOutcome q = assembly_check({5, {5}}, 3);
  CHECK(q.passed);
  CHECK(q.suite == "assembly");
  VerifyOutcome c24 = assembly_check({6, {2, 4}}, 2);
  CHECK(c24.passed);
}

TEST_CASE("loop series has the expected first-order cancellation on the quintic") {
  // every ingredient is q^1-exact here, and they cancel: a useful canary
  // against sign or weight regressions in loop_q
  CIModel m{5, {5}};
  const int qmax = 2;
  BirkhoffData bd = compute_ck(default_underline(m, qmax));
  ClosedForms cf = closed_forms(m, qmax);
  QSeries loop = loop_q(m, bd, cf.mu, qmax);
  CHECK(loop[0] == 0);
  CHECK(loop[1] == 0);  // (3/4)*625 + (5/4)*3125 - (6*120 + 3*770 + 1345) = 0
  CHECK(loop[2] == rat_parse("384625/4"));  // same combination at q^2, by hand
}
