#pragma once

// Birkhoff-style factorization of the underline I-function.  Starting from
// B_0 = I, the z^0 part of each B_k is certified to be C_k(q) H^k with
// C_k(0) = 1; then B_{k+1} = (H + z q d/dq)(B_k / C_k).  The resulting
// scalar series C_0, ..., C_{n-1} normalize the S-operator
//
//   s_series(I, k) = frak_b^k(I / I_0) = H^k + O(1/z),
//
// where frak_b(F) divides (H + z q d/dq)F by its z^0-leading scalar at
// H = 1 ("value at z = infinity").  Both routes produce the same constants;
// tests assert this.  The constants C_b also admit an interpretation as
// two-pointed genus-zero correlators, which is not used computationally.

#include "qgw/ifunction.hpp"

namespace qgw {

struct BirkhoffData {
  std::vector<QSeries> c;      // C_0 .. C_{n-1}
  std::vector<Rat> residuals;  // per-step max deviation from C_k H^k shape; all must be 0
};

BirkhoffData compute_ck(const IUnderline& i);

// one normalized application of (H + z q d/dq); throws on a vanishing
// normalizer (constant term of the z^0 scalar at H = 1)
USeries frak_b(const USeries& f);

// frak_b^k(I / I_0)
USeries s_series(const IUnderline& i, int k);

// the same S-operator cascade run on the fixed-point avatar (H -> 1,
// expansion about w = 0), reusing the certified normalizers C_1..C_k;
// needed where the value at z = infinity is not readable
WSeries s_series_fixed(const IFixedPoint& j, const BirkhoffData& bd, int k);

}  // namespace qgw
