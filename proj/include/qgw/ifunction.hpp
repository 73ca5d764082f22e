#pragma once

// The torus-equivariant small I-function of the complete intersection,
// specialized at t = 0 with the torus weights at the n-th roots of unity
// (lambda_0 = 1).  Two avatars are materialized:
//
//  * i_underline: coefficients in Q[H]/(H^n - 1), each q^d term expanded
//    in descending powers of z; the degree-d term is the exact rational
//    function  prod_a prod_{k<=l_a d} (l_a H + k z) / prod_{k<=d} ((H+kz)^n - 1).
//
//  * i_fixed_point: the restriction to the distinguished fixed point
//    (H -> 1) with w = z there, expanded about w = 0; the q^d term has a
//    pole of order exactly d.

#include "qgw/geometry.hpp"
#include "qgw/laurent.hpp"
#include "qgw/series.hpp"

namespace qgw {

using USeries = Series<Laurent<Cyclo>>;   // underline carrier
using WSeries = Series<Laurent<Rat>>;     // fixed-point carrier

struct IUnderline {
  CIModel model;
  USeries series;
};

struct IFixedPoint {
  CIModel model;
  WSeries series;
};

struct SmallI {
  QSeries i0;  // prod_a (l_a d)! / (d!)^n
  QSeries f;   // I_1 = f * H; f_d = i0_d * sum_a sum_{k=d+1}^{l_a d} l_a / k
};

// polynomial data of the degree-d term (ascending powers of z resp. w)
std::vector<Cyclo> underline_numer(const CIModel& m, int d);
std::vector<Cyclo> underline_denom(const CIModel& m, int d);
std::vector<Rat> fixed_numer(const CIModel& m, int d);
std::vector<Rat> fixed_denom(const CIModel& m, int d);

IUnderline i_underline(const CIModel& m, int qmax, int z_lo, int z_hi);
IFixedPoint i_fixed_point(const CIModel& m, int qmax, int w_lo, int w_hi);
SmallI small_i(const CIModel& m, int qmax);

// 1 - q prod_a l_a^{l_a}, the discriminant factor of the family
inline QSeries discriminant_base(const CIModel& m, int qmax) {
  QSeries b = qs_one(qmax);
  if (qmax >= 1) b[1] = -Rat(m.ll_product());
  return b;
}

// the operator (H + z q d/dq) acting on the underline carrier
USeries z_qdq_plus_h(const USeries& f);
// the same operator after H -> 1, acting on the fixed-point carrier
WSeries z_qdq_plus_1(const WSeries& f);

// H -> 1 on every coefficient
WSeries eval_h1(const USeries& f);

}  // namespace qgw
