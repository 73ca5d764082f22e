#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgw/asymptotics.hpp"

using namespace qgw;

TEST_CASE("e^{-mu/w} for mu = q puts (-1)^d/d! at w^{-d}") {
  QSeries mu = qs_q(4);
  WSeries e = exp_neg_mu_over_w(mu, -4, 2);
  Rat sign(1), fac(1);
  for (int d = 0; d <= 4; ++d) {
    if (d > 0) { sign = -sign; fac *= d; }
    CHECK(e[d].coeff(-d) == sign / fac);
    for (int m = -d + 1; m <= 2; ++m) CHECK(e[d].coeff(m) == 0);
    CHECK(e[d].supp_lo() == -d);
    CHECK(e[d].known_hi() == kPosInf);  // exact by construction
  }
  CHECK_THROWS_AS(exp_neg_mu_over_w(qs_one(3), -3, 1), error);
  CHECK_THROWS_AS(exp_neg_mu_over_w(qs_q(4), -3, 1), window_error);
}

TEST_CASE("closed forms for the quintic, frozen") {
  ClosedForms cf = closed_forms({5, {5}}, 4);
  CHECK(cf.l[0] == 1);
  CHECK(cf.l[1] == 625);
  CHECK(cf.l[2] == 1171875);
  CHECK(cf.mu[0] == 0);
  CHECK(cf.mu[1] == 625);
  CHECK(cf.mu[2] == rat_parse("1171875/2"));
  CHECK(cf.mu[3] == rat_parse("2685546875/3"));
  CHECK(cf.mu[4] == rat_parse("1678466796875"));
  CHECK(cf.r0 == cf.l);  // r = 1: the exponent (r+1)/2 is 1
}

TEST_CASE("extraction from the fixed-point I-function matches the closed forms") {
  for (CIModel m : {CIModel{5, {5}}, CIModel{6, {2, 2, 2}}}) {
    const int qmax = 4;
    IFixedPoint fp = i_fixed_point(m, qmax, -qmax, qmax + 2);
    AsymptoticData ad = extract_asymptotics(fp, 1);
    ClosedForms cf = closed_forms(m, qmax);
    CHECK(ad.clean);
    CHECK(ad.mu == cf.mu);
    CHECK(ad.r[0] == cf.r0);
    CHECK(ad.r[0][0] == 1);
  }
}

TEST_CASE("R_1 is stable under widening the w-window") {
  CIModel m{6, {3, 3}};
  const int qmax = 3;
  IFixedPoint a = i_fixed_point(m, qmax, -qmax, qmax + 2);
  IFixedPoint b = i_fixed_point(m, qmax, -qmax - 2, qmax + 5);
  AsymptoticData ada = extract_asymptotics(a, 1);
  AsymptoticData adb = extract_asymptotics(b, 1);
  CHECK(ada.mu == adb.mu);
  CHECK(ada.r[0] == adb.r[0]);
  CHECK(ada.r[1] == adb.r[1]);
}

TEST_CASE("a corrupted pole part is a hard error, not a window problem") {
  CIModel m{5, {5}};
  IFixedPoint fp = i_fixed_point(m, 2, -3, 4);
  fp.series[1].raw_set(-2, Rat(1));
  fp.series[1].set_meta(-2, kPosInf, kNegInf, 4);
  CHECK_THROWS_WITH_AS(extract_asymptotics(fp, 0),
                       doctest::Contains("excess pole"), error);
}

TEST_CASE("an uncertified pole part is refused as a window problem") {
  CIModel m{5, {5}};
  IFixedPoint fp = i_fixed_point(m, 2, -2, 4);
  fp.series[1].set_meta(-1, kPosInf, 0, 4);  // bottom no longer certified
  CHECK_THROWS_AS(extract_asymptotics(fp, 0), window_error);
  IFixedPoint ok = i_fixed_point(m, 2, -2, 4);
  CHECK_THROWS_AS(extract_asymptotics(ok, 3), window_error);  // 3 + 2 > 4
}
