#pragma once

// Target data: a Calabi-Yau complete intersection X of multidegree
// (l_1, ..., l_r) in P^{n-1}, with sum l_a = n and each l_a >= 2.
// Chern numbers of X are computed by truncated polynomial division in H.

#include <vector>

#include "qgw/rational.hpp"

namespace qgw {

struct CIModel {
  int n = 0;                 // ambient projective space P^{n-1}
  std::vector<int> degrees;  // multidegree (l_1, ..., l_r)

  int r() const { return static_cast<int>(degrees.size()); }
  int dim() const { return n - 1 - r(); }
  // product of the degrees = degree of X in P^{n-1}
  Int deg_x() const;
  // prod l_a^{l_a}, the coefficient in 1 - q * prod l^l
  Int ll_product() const;
  // sum over a of 1/l_a
  Rat sum_inv_degrees() const;
};

// throws qgw::error when the data does not define a smooth CY complete
// intersection threefold-or-higher of the kind handled here
void validate_model(const CIModel& m);

struct ChernData {
  std::vector<Rat> c;  // c[i] = coefficient of H^i in c(TX), i < n
  Int chi_top;         // integral of c_dim(TX) over X
  Int lin_c;           // integral of H * c_{dim-1}(TX) over X
};

ChernData chern_data(const CIModel& m);

// integral over X of a cohomology class written as a polynomial in H
Rat integrate_over_x(const CIModel& m, const std::vector<Rat>& cls);

}  // namespace qgw
