#pragma once

// Asymptotic shape of the fixed-point I-function about w = 0:
//
//   J(q, w) = e^{mu(q)/w} (R_0(q) + R_1(q) w + R_2(q) w^2 + ...)
//
// mu and the R_k are extracted degree by degree: with mu known below q^d,
// the product e^{-mu/w} J must have no pole worse than 1/w in its q^d
// coefficient (the "clean" condition, a hard error when violated), and the
// residual 1/w coefficient determines mu_d.  Closed forms
//
//   L = (1 - q prod l_a^{l_a})^{-1/n},  q dmu/dq = L - 1,  R_0 = L^{(r+1)/2}
//
// are computed independently and compared by the verification suites.

#include "qgw/geometry.hpp"
#include "qgw/ifunction.hpp"

namespace qgw {

struct AsymptoticData {
  QSeries mu;              // mu(0) = 0
  std::vector<QSeries> r;  // R_0 .. R_K, R_0(0) = 1
  bool clean = false;      // all excess-pole residuals vanished
};

AsymptoticData extract_asymptotics(const IFixedPoint& j, int k_top);

struct ClosedForms {
  QSeries l;
  QSeries mu;
  QSeries r0;
};

ClosedForms closed_forms(const CIModel& m, int qmax);

// e^{-mu/w} as a w-Laurent q-series on the given window (exact: the q^d
// coefficient only reaches down to w^{-d})
WSeries exp_neg_mu_over_w(const QSeries& mu, int w_lo, int w_hi);

}  // namespace qgw
