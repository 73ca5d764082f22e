#include "qgw/elliptic.hpp"

namespace qgw {

namespace {

long g1_log_prefactor_num(const CIModel& m) {
  long s = m.n - 1 - m.r();
  return 3 * s * s + (m.n - m.r() - 3);
}

}  // namespace

QSeries quasimap_g1(const CIModel& m, const BirkhoffData& bd, int qmax) {
  validate_model(m);
  const int n = m.n, r = m.r();
  if (static_cast<int>(bd.c.size()) < n || bd.c[0].trunc() < qmax)
    throw error("quasimap_g1: Birkhoff data too shallow");
  QSeries out = qs_log(discriminant_base(m, qmax)).scaled(rat(-g1_log_prefactor_num(m), 48));
  for (int k = 0; k <= n - 2 - r; ++k) {
    Rat w = rat_of(binomial_int(static_cast<unsigned long>(n - r - k), 2), Int(2));
    out += qs_log(bd.c[static_cast<size_t>(k)].truncated(qmax)).scaled(-w);
  }
  return out;
}

QSeries wall_correction(const CIModel& m, const SmallI& si, const ChernData& cd) {
  validate_model(m);
  if (si.f.trunc() != si.i0.trunc()) throw error("wall_correction: inconsistent SmallI");
  QSeries g = si.f * qs_inv(si.i0);
  QSeries out = qs_log(si.i0).scaled(rat_of(cd.chi_top, Int(24)));
  out += g.scaled(rat_of(cd.lin_c, Int(24)));
  return out;
}

MirrorMap mirror_map(const SmallI& si) {
  if (si.i0[0] != 1) throw error("mirror_map: I_0 must start at 1");
  QSeries g = si.f * qs_inv(si.i0);
  if (g[0] != 0) throw error("mirror_map: f/I_0 must vanish at q = 0");
  return {g, qs_exp(g).times_q()};
}

QSeries invert_map(const QSeries& big_q) {
  const int t = big_q.trunc();
  if (t < 1 || big_q[0] != 0 || big_q[1] != 1)
    throw error("invert_map: expected Q = q + O(q^2)");
  // m(q) = Q(q)/q; its top coefficient is not determined at this truncation
  // but cannot influence the inverse below order t+1, so it is left at 0
  QSeries em = qs_zero(t);
  for (int d = 0; d < t; ++d) em[d] = big_q[d + 1];
  QSeries g = qs_log(em);
  // fixed point of q -> Q e^{-g(q)}; each pass settles one more order
  QSeries inv = qs_q(t);
  for (int pass = 0; pass <= t; ++pass) {
    QSeries next = qs_exp(-qs_compose(g, inv)).times_q();
    if (next == inv) break;
    inv = next;
  }
  return inv;
}

QSeries g1_gw_in_q_direct(const CIModel& m, const BirkhoffData& bd,
                          const SmallI& si, const ChernData& cd, int qmax) {
  validate_model(m);
  const int n = m.n, r = m.r();
  const QSeries c0 = bd.c[0].truncated(qmax);
  QSeries out = qs_log(c0).scaled(rat_of(cd.chi_top, Int(24)));
  out += (si.f.truncated(qmax) * qs_inv(c0)).scaled(rat_of(cd.lin_c, Int(24)));
  out += qs_log(discriminant_base(m, qmax)).scaled(rat(-g1_log_prefactor_num(m), 48));
  for (int k = 0; k <= n - 2 - r; ++k) {
    Rat w = rat_of(binomial_int(static_cast<unsigned long>(n - r - k), 2), Int(2));
    out += qs_log(bd.c[static_cast<size_t>(k)].truncated(qmax)).scaled(-w);
  }
  return out;
}

G1Report gw_g1(const CIModel& m, int qmax) {
  validate_model(m);
  if (qmax < 1) throw error("gw_g1: qmax must be at least 1");
  IUnderline iu = i_underline(m, qmax, -(qmax + m.n), m.n);
  BirkhoffData bd = compute_ck(iu);
  SmallI si = small_i(m, qmax);
  ChernData cd = chern_data(m);

  G1Report rep;
  rep.model = m;
  rep.f_quasimap = quasimap_g1(m, bd, qmax);
  rep.correction = wall_correction(m, si, cd);
  rep.f_gw_in_q = rep.f_quasimap + rep.correction;

  MirrorMap mm = mirror_map(si);
  rep.mirror_q = mm.big_q;
  QSeries q_of_flat = invert_map(mm.big_q);
  rep.f_gw = qs_compose(rep.f_gw_in_q, q_of_flat);

  if (rep.f_quasimap[0] != 0 || rep.correction[0] != 0 || rep.f_gw[0] != 0)
    throw error("gw_g1: genus-one series must vanish at degree zero");
  if (qs_compose(rep.f_gw, mm.big_q) != rep.f_gw_in_q)
    throw error("gw_g1: mirror-map inversion failed to round-trip");

  for (int d = 1; d <= qmax; ++d) rep.invariants.emplace_back(d, rep.f_gw[d]);
  return rep;
}

}  // namespace qgw
