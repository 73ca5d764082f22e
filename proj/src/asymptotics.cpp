#include "qgw/asymptotics.hpp"

namespace qgw {

WSeries exp_neg_mu_over_w(const QSeries& mu, int w_lo, int w_hi) {
  if (mu[0] != 0) throw error("exp_neg_mu_over_w: mu(0) must vanish");
  const int qmax = mu.trunc();
  if (-qmax < w_lo) throw window_error("exp_neg_mu_over_w: window too shallow");
  WSeries out(qmax, Laurent<Rat>(w_lo, w_hi, Rat(0)));
  // sum_k (-mu)^k / k! placed at w^{-k}; powers of mu computed iteratively
  QSeries pk = qs_one(qmax);
  Rat kfac(1);
  std::vector<QSeries> terms;  // terms[k] = (-mu)^k / k!
  for (int k = 0; k <= qmax; ++k) {
    if (k > 0) {
      pk = pk * (-mu);
      kfac *= Rat(k);
    }
    terms.push_back(pk.scaled(Rat(1) / kfac));
  }
  for (int d = 0; d <= qmax; ++d) {
    Laurent<Rat> lc(w_lo, w_hi, Rat(0));
    for (int k = 0; k <= d; ++k)
      if (terms[static_cast<size_t>(k)][d] != 0) lc.raw_set(-k, terms[static_cast<size_t>(k)][d]);
    lc.set_meta(-d, 0, kNegInf, kPosInf);
    out[d] = lc;
  }
  return out;
}

AsymptoticData extract_asymptotics(const IFixedPoint& j, int k_top) {
  const int qmax = j.series.trunc();
  const int w_hi = j.series.zero().hi();
  if (w_hi < k_top + qmax)
    throw window_error("extract_asymptotics: w-window top must reach k_top + qmax");
  AsymptoticData out;
  out.mu = qs_zero(qmax);

  WSeries e = j.series;  // e^{-mu/w} * J with the current partial mu
  for (int d = 1; d <= qmax; ++d) {
    const Laurent<Rat>& lc = e[d];
    int bottom = std::max(lc.lo(), lc.supp_lo());
    if (lc.known_lo() > bottom)
      throw window_error("extract_asymptotics: pole part not certified");
    for (int m = bottom; m <= -2; ++m)
      if (lc.coeff(m) != 0)
        throw error("extract_asymptotics: excess pole at q^" + std::to_string(d) +
                    ", w^" + std::to_string(m) + " (inconsistent input)");
    out.mu[d] = lc.coeff(-1);
    e = j.series * exp_neg_mu_over_w(out.mu, j.series.zero().lo(), w_hi);
  }

  // with the full mu, every q-degree must now be clean including 1/w
  for (int d = 0; d <= qmax; ++d) {
    const Laurent<Rat>& lc = e[d];
    int bottom = std::max(lc.lo(), lc.supp_lo());
    for (int m = bottom; m <= -1; ++m)
      if (lc.coeff(m) != 0)
        throw error("extract_asymptotics: residual pole after extraction");
  }
  out.clean = true;

  for (int k = 0; k <= k_top; ++k) {
    QSeries rk = qs_zero(qmax);
    for (int d = 0; d <= qmax; ++d) {
      if (e[d].known_hi() < k)
        throw window_error("extract_asymptotics: window too shallow for R_" + std::to_string(k));
      rk[d] = e[d].coeff(k);
    }
    out.r.push_back(rk);
  }
  return out;
}

ClosedForms closed_forms(const CIModel& m, int qmax) {
  validate_model(m);
  ClosedForms out{qs_zero(qmax), qs_zero(qmax), qs_zero(qmax)};
  out.l = qs_pow_rat(discriminant_base(m, qmax), rat(-1, m.n));
  QSeries lm1 = out.l - qs_one(qmax);
  out.mu = qs_int_dlog(lm1);
  out.r0 = qs_pow_rat(out.l, rat(m.r() + 1, 2));
  return out;
}

}  // namespace qgw
