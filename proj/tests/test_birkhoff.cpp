#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgw/birkhoff.hpp"

using namespace qgw;

TEST_CASE("quintic normalizing constants, frozen") {
  CIModel m{5, {5}};
  const int qmax = 4;
  IUnderline iu = i_underline(m, qmax, -(qmax + m.n), m.n);
  BirkhoffData bd = compute_ck(iu);
  REQUIRE(static_cast<int>(bd.c.size()) == m.n);
  for (const Rat& r : bd.residuals) CHECK(r == 0);

  SmallI si = small_i(m, qmax);
  CHECK(bd.c[0] == si.i0);  // the cascade starts at the z^0 part of I itself

  const long c1[] = {1, 770, 1435650, 3225308000L};
  const long c2[] = {1, 1345, 3296525, 8940963625L};
  for (int d = 0; d <= 3; ++d) {
    CHECK(bd.c[1][d] == c1[d]);
    CHECK(bd.c[2][d] == c2[d]);
  }
  CHECK(bd.c[1][4] == rat_parse("7894629141250"));
  CHECK(bd.c[2][4] == rat_parse("25306794813125"));
  for (int k = 0; k < m.n; ++k) CHECK(bd.c[static_cast<size_t>(k)][0] == 1);
}

TEST_CASE("normalized cascade reaches pure H^k at z^0") {
  CIModel m{6, {2, 4}};
  const int qmax = 2;
  IUnderline iu = i_underline(m, qmax, -(qmax + m.n), m.n);
  for (int k = 0; k < m.n; ++k) {
    USeries s = s_series(iu, k);
    CHECK(s[0].coeff(0) == Cyclo::monomial(m.n, k, Rat(1)));
    for (int d = 1; d <= qmax; ++d) CHECK(s[d].coeff(0).is_zero());
  }
}

TEST_CASE("both cascade routes produce the same constants") {
  // applying the raw operator to the normalized stage-k series and reading
  // the z^0 part at H = 1 must reproduce C_{k+1} from the other route
  CIModel m{5, {5}};
  const int qmax = 3;
  IUnderline iu = i_underline(m, qmax, -(qmax + m.n), m.n);
  BirkhoffData bd = compute_ck(iu);
  for (int k = 0; k + 1 < m.n; ++k) {
    USeries next = z_qdq_plus_h(s_series(iu, k));
    QSeries norm = qs_zero(qmax);
    for (int d = 0; d <= qmax; ++d) {
      Cyclo z0 = next[d].coeff(0);
      CHECK(z0.is_monomial_in(k + 1));
      norm[d] = z0.eval_h1();
    }
    CHECK(norm == bd.c[static_cast<size_t>(k + 1)]);
  }
}

TEST_CASE("a too-shallow z-window is refused, not misread") {
  CIModel m{5, {5}};
  IUnderline iu = i_underline(m, 2, -2, m.n);
  CHECK_THROWS_AS(compute_ck(iu), window_error);
}

TEST_CASE("fixed-point cascade imports the certified normalizers") {
  CIModel m{5, {5}};
  const int qmax = 2;
  IUnderline iu = i_underline(m, qmax, -(qmax + m.n), m.n);
  BirkhoffData bd = compute_ck(iu);
  IFixedPoint fp = i_fixed_point(m, qmax, -qmax, qmax + 4);

  WSeries s0 = s_series_fixed(fp, bd, 0);
  CHECK(s0[0].coeff(0) == 1);
  CHECK(s0[1].coeff(-1) == 625);   // the pole part is untouched by 1/C_0
  CHECK(s0[1].coeff(0) == fp.series[1].coeff(0) - Rat(120));

  // each stage keeps the full certified w-range: no knowledge decay here
  for (int k = 0; k < m.n; ++k) {
    WSeries sk = s_series_fixed(fp, bd, k);
    for (int d = 0; d <= qmax; ++d) {
      CHECK(sk[d].known_hi() >= qmax + 4);
      CHECK(sk[d].supp_lo() >= -d);
    }
  }
  CHECK_THROWS_AS(s_series_fixed(fp, bd, m.n), error);
}
