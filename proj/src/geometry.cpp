#include "qgw/geometry.hpp"

#include <numeric>

#include "qgw/errors.hpp"

namespace qgw {

Int CIModel::deg_x() const {
  Int p(1);
  for (int l : degrees) p *= l;
  return p;
}

Int CIModel::ll_product() const {
  Int p(1);
  for (int l : degrees) {
    Int f;
    mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(l));
    p *= f;
  }
  return p;
}

Rat CIModel::sum_inv_degrees() const {
  Rat s(0);
  for (int l : degrees) s += rat(1, l);
  return s;
}

void validate_model(const CIModel& m) {
  if (m.n < 2) throw error("validate_model: need n >= 2");
  if (m.degrees.empty()) throw error("validate_model: empty multidegree");
  int sum = 0;
  for (int l : m.degrees) {
    if (l < 2) throw error("validate_model: every degree must be at least 2");
    sum += l;
  }
  if (sum != m.n) throw error("validate_model: Calabi-Yau condition sum(l_a) = n violated");
  if (m.dim() < 1) throw error("validate_model: dim X = n - 1 - r must be at least 1");
}

// truncated product of (1 + l_a H)^{-1} factors against (1 + H)^n, mod H^n
ChernData chern_data(const CIModel& m) {
  validate_model(m);
  const int n = m.n;
  std::vector<Rat> c(static_cast<size_t>(n), Rat(0));
  for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = Rat(binomial_int(static_cast<unsigned long>(n), static_cast<unsigned long>(i)));
  for (int l : m.degrees) {
    // divide by (1 + l H): d[i] = c[i] - l * d[i-1]
    std::vector<Rat> d(static_cast<size_t>(n), Rat(0));
    d[0] = c[0];
    for (int i = 1; i < n; ++i) d[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] - Rat(l) * d[static_cast<size_t>(i - 1)];
    c = std::move(d);
  }

  ChernData out;
  out.c = c;
  const int dim = m.dim();
  std::vector<Rat> top(static_cast<size_t>(dim) + 1, Rat(0));
  top[static_cast<size_t>(dim)] = c[static_cast<size_t>(dim)];
  Rat chi = integrate_over_x(m, top);
  std::vector<Rat> lin(static_cast<size_t>(dim) + 1, Rat(0));
  lin[static_cast<size_t>(dim)] = c[static_cast<size_t>(dim - 1)];  // H * c_{dim-1} has H-degree dim
  Rat lc = integrate_over_x(m, lin);
  if (chi.get_den() != 1 || lc.get_den() != 1)
    throw error("chern_data: Chern numbers failed to be integers");
  out.chi_top = chi.get_num();
  out.lin_c = lc.get_num();
  return out;
}

Rat integrate_over_x(const CIModel& m, const std::vector<Rat>& cls) {
  // int_X H^j = deg X when j = dim X, else 0
  const int dim = m.dim();
  Rat s(0);
  if (static_cast<int>(cls.size()) > dim) s = cls[static_cast<size_t>(dim)] * Rat(m.deg_x());
  return s;
}

}  // namespace qgw
