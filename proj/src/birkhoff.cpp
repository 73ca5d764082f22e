#include "qgw/birkhoff.hpp"

namespace qgw {

namespace {

Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// certify that the z^0 part of b is s(q) H^k (and nothing above z^0),
// returning s and accumulating the largest off-shape component
QSeries extract_zk_scalar(const USeries& b, int k, Rat& residual) {
  const int n = b.zero().zero().n();
  QSeries s = qs_zero(b.trunc());
  for (int d = 0; d <= b.trunc(); ++d) {
    const Laurent<Cyclo>& lc = b[d];
    if (lc.known_lo() > 0)
      throw window_error("compute_ck: z^0 coefficient not certified");
    // nothing may survive at positive powers of z
    int top = std::min(std::min(lc.hi(), lc.known_hi()), lc.supp_hi());
    for (int e = 1; e <= top; ++e) {
      const Cyclo v = lc.coeff(e);
      for (int i = 0; i < n; ++i) residual = std::max(residual, abs_rat(v[i]));
    }
    Cyclo z0 = lc.coeff(0);
    for (int i = 0; i < n; ++i)
      if (i != k) residual = std::max(residual, abs_rat(z0[i]));
    s[d] = z0[k];
  }
  return s;
}

}  // namespace

BirkhoffData compute_ck(const IUnderline& i) {
  const int n = i.model.n;
  BirkhoffData out;
  USeries b = i.series;
  for (int k = 0; k < n; ++k) {
    Rat residual(0);
    QSeries ck = extract_zk_scalar(b, k, residual);
    out.residuals.push_back(residual);
    if (residual != 0) throw error("compute_ck: z^0 part is not proportional to H^k");
    if (ck[0] != 1) throw error("compute_ck: C_k(0) != 1");
    out.c.push_back(ck);
    if (k + 1 < n) b = z_qdq_plus_h(b.mul_scalar_series(qs_inv(ck)));
  }
  return out;
}

USeries frak_b(const USeries& f) {
  USeries g = z_qdq_plus_h(f);
  QSeries norm = qs_zero(g.trunc());
  for (int d = 0; d <= g.trunc(); ++d) {
    if (g[d].known_lo() > 0)
      throw window_error("frak_b: z^0 coefficient not certified");
    norm[d] = g[d].coeff(0).eval_h1();
  }
  if (norm[0] == 0) throw error("frak_b: vanishing normalizer");
  return g.mul_scalar_series(qs_inv(norm));
}

USeries s_series(const IUnderline& i, int k) {
  Rat residual(0);
  QSeries i0 = extract_zk_scalar(i.series, 0, residual);
  if (residual != 0) throw error("s_series: input is not z^0-scalar");
  USeries f = i.series.mul_scalar_series(qs_inv(i0));
  for (int j = 0; j < k; ++j) f = frak_b(f);
  return f;
}

WSeries s_series_fixed(const IFixedPoint& j, const BirkhoffData& bd, int k) {
  if (k >= static_cast<int>(bd.c.size()))
    throw error("s_series_fixed: not enough normalizers");
  WSeries f = j.series.mul_scalar_series(qs_inv(bd.c[0]));
  for (int p = 1; p <= k; ++p)
    f = z_qdq_plus_1(f).mul_scalar_series(qs_inv(bd.c[static_cast<size_t>(p)]));
  return f;
}

}  // namespace qgw
