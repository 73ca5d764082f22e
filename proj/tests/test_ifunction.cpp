#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgw/ifunction.hpp"

using namespace qgw;

namespace {

const CIModel kModels[] = {
    {5, {5}},
    {6, {3, 3}},
    {6, {2, 4}},
    {6, {2, 2, 2}},
};

}  // namespace

TEST_CASE("closed forms of the first descendants") {
  SmallI q = small_i({5, {5}}, 3);
  CHECK(q.i0[0] == 1);
  CHECK(q.i0[1] == 120);
  CHECK(q.i0[2] == 113400);
  CHECK(q.i0[3] == 168168000);
  CHECK(q.f[0] == 0);
  CHECK(q.f[1] == 770);       // 120 * 5 * (1/2 + 1/3 + 1/4 + 1/5)
  CHECK(q.f[2] == 810225);    // 113400 * 5 * (H_10 - H_2)

  SmallI c33 = small_i({6, {3, 3}}, 2);
  CHECK(c33.i0[1] == 36);     // (3!)^2
  CHECK(c33.i0[2] == 8100);   // (6!)^2 / (2!)^6
  CHECK(c33.f[1] == 180);     // 36 * 2 * 3 * (1/2 + 1/3)
}

TEST_CASE("discriminant base") {
  QSeries b = discriminant_base({5, {5}}, 3);
  CHECK(b[0] == 1);
  CHECK(b[1] == -3125);
  CHECK(b[2] == 0);
  CHECK(discriminant_base({6, {2, 4}}, 1)[1] == -1024);
  CHECK(discriminant_base({6, {2, 2, 2}}, 1)[1] == -64);
}

TEST_CASE("big-z expansion starts I = I0 + f H / z + ...") {
  // the z^0 and z^-1 coefficients of every degree reproduce the closed
  // forms; this ties the generic expansion code to independent arithmetic
  for (const auto& m : kModels) {
    const int qmax = 3;
    IUnderline iu = i_underline(m, qmax, -(qmax + m.n), m.n);
    SmallI si = small_i(m, qmax);
    for (int d = 0; d <= qmax; ++d) {
      Cyclo top = iu.series[d].coeff(0);
      CHECK(top.is_scalar());
      CHECK(top[0] == si.i0[d]);
      Cyclo sub = iu.series[d].coeff(-1);
      CHECK(sub == Cyclo::monomial(m.n, 1, si.f[d]));
      CHECK(iu.series[d].coeff(2).is_zero());  // nothing above z^0
    }
  }
}

TEST_CASE("incremental construction equals the standalone polynomial builders") {
  CIModel m{5, {5}};
  const int qmax = 2;
  IUnderline iu = i_underline(m, qmax, -6, 10);
  for (int d = 0; d <= qmax; ++d) {
    auto direct = expand_inv_z(underline_numer(m, d), underline_denom(m, d), -6, 10, Cyclo(m.n));
    for (int e = -6; e <= 0; ++e) CHECK(iu.series[d].coeff(e) == direct.coeff(e));
  }
}

TEST_CASE("fixed-point expansion has pole order exactly d") {
  CIModel m{5, {5}};
  IFixedPoint fp = i_fixed_point(m, 2, -3, 8);
  CHECK(fp.series[0].coeff(0) == 1);
  CHECK(fp.series[0].supp_lo() == 0);
  CHECK(fp.series[1].supp_lo() == -1);
  CHECK(fp.series[1].coeff(-1) == 625);          // 5^5 / 5
  CHECK(fp.series[1].coeff(-2) == 0);
  CHECK(fp.series[2].supp_lo() == -2);
  CHECK(fp.series[2].coeff(-2) == rat(9765625, 50));  // 5^10 / (5 * 10)
  CHECK_THROWS_AS(fp.series[2].coeff(9), window_error);
}

TEST_CASE("fixed-point expansion multiplies back onto its numerator") {
  CIModel m{6, {2, 2, 2}};
  const int qmax = 2;
  const int w_hi = 2 * m.n + 2;  // window wide enough for the degree-2 polynomials
  IFixedPoint fp = i_fixed_point(m, qmax, -qmax, w_hi);
  for (int d = 0; d <= qmax; ++d) {
    auto numer = Laurent<Rat>::from_poly(-qmax, w_hi, fixed_numer(m, d), 0, Rat(0));
    auto denom = Laurent<Rat>::from_poly(-qmax, w_hi, fixed_denom(m, d), 0, Rat(0));
    CHECK(agree_on_overlap(fp.series[d] * denom, numer));
  }
}

TEST_CASE("restriction to the fixed point intertwines the two expansions") {
  // eval_h1 of the underline expansion is the big-z expansion of the same
  // rational function whose small-w expansion is i_fixed_point; both must
  // multiply back onto the H -> 1 numerator
  CIModel m{5, {5}};
  const int qmax = 2;
  IUnderline iu = i_underline(m, qmax, -16, 10);
  WSeries at1 = eval_h1(iu.series);
  for (int d = 0; d <= qmax; ++d) {
    auto numer = Laurent<Rat>::from_poly(-16, 10, fixed_numer(m, d), 0, Rat(0));
    auto denom = Laurent<Rat>::from_poly(-16, 10, fixed_denom(m, d), 0, Rat(0));
    CHECK(agree_on_overlap(at1[d] * denom, numer));
    CHECK(!(at1[d] * denom).is_zero_known());  // the overlap actually has content
  }
}

TEST_CASE("the operator H + z q d/dq acts degreewise") {
  const int n = 5;
  USeries ones(3, Laurent<Cyclo>(-2, 2, Cyclo(n)));
  for (int d = 0; d <= 3; ++d)
    ones[d] = Laurent<Cyclo>::from_poly(-2, 2, {Cyclo::one(n)}, 0, Cyclo(n));
  USeries out = z_qdq_plus_h(ones);
  for (int d = 0; d <= 3; ++d) {
    CHECK(out[d].coeff(0) == Cyclo::H(n));
    CHECK(out[d].coeff(1) == Cyclo::scalar(n, Rat(d)));
  }
  // restriction commutes with the operator (H becomes 1)
  WSeries lhs = eval_h1(out);
  WSeries rhs = z_qdq_plus_1(eval_h1(ones));
  for (int d = 0; d <= 3; ++d) {
    CHECK(lhs[d].coeff(0) == rhs[d].coeff(0));
    CHECK(lhs[d].coeff(1) == rhs[d].coeff(1));
    CHECK(agree_on_overlap(lhs[d], rhs[d]));
  }
}
