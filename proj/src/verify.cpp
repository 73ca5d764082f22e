#include "qgw/verify.hpp"

#include <algorithm>

#include "qgw/bilaurent.hpp"
#include "qgw/elliptic.hpp"

namespace qgw {

namespace {

void record_failure(VerifyOutcome& out, int d, const std::string& place,
                    const std::string& lhs, const std::string& rhs) {
  if (!out.passed) return;
  out.passed = false;
  out.first_failure = FailureLoc{d, place, lhs, rhs};
}

// z * F, coefficientwise on the carrier
USeries shift_z(const USeries& f) {
  USeries r(f.trunc(), f.zero());
  for (int d = 0; d <= f.trunc(); ++d) r[d] = f[d].shifted(1);
  return r;
}

}  // namespace

IUnderline default_underline(const CIModel& m, int qmax) {
  return i_underline(m, qmax, -(qmax + m.n), m.n);
}

IFixedPoint default_fixed(const CIModel& m, int qmax, int w_hi) {
  return i_fixed_point(m, qmax, -qmax, w_hi);
}

VerifyOutcome pf_check(const IUnderline& i) {
  const CIModel& m = i.model;
  const int n = m.n;
  const int qmax = i.series.trunc();
  VerifyOutcome out{"pf", m, qmax, true, std::nullopt};

  if (i.series.zero().hi() < n)
    throw window_error("pf_check: z-window must reach z^" + std::to_string(n));

  USeries dn = i.series;
  for (int k = 0; k < n; ++k) dn = z_qdq_plus_h(dn);

  USeries prod = i.series;
  for (int l : m.degrees)
    for (int mm = 1; mm <= l; ++mm)
      prod = z_qdq_plus_h(prod).scaled(Rat(l)) + shift_z(prod).scaled(Rat(mm));

  USeries residual = dn - i.series - prod.times_q();

  for (int d = 0; d <= qmax; ++d) {
    const Laurent<Cyclo>& lc = residual[d];
    if (lc.supp_lo() < kPosInf) {  // nothing to certify on an exact zero
      int from = std::max({lc.lo(), lc.known_lo(), lc.supp_lo()});
      if (from > -d)
        throw window_error("pf_check: q^" + std::to_string(d) +
                           " residual certified only from z^" + std::to_string(from));
      if (lc.known_hi() < std::min(lc.supp_hi(), lc.hi()))
        throw window_error("pf_check: residual tail above the certified range");
    }
    if (auto bad = lc.first_nonzero_known()) {
      record_failure(out, d, "z^" + std::to_string(*bad), lc.coeff(*bad).str(), "0");
      break;
    }
  }
  return out;
}

VerifyOutcome popa_check(const BirkhoffData& bd, const AsymptoticData& ad, const CIModel& m) {
  validate_model(m);
  const int n = m.n, r = m.r();
  if (static_cast<int>(bd.c.size()) < n || ad.r.empty())
    throw error("popa_check: incomplete inputs");
  const int qmax = std::min(bd.c[0].trunc(), ad.mu.trunc());
  VerifyOutcome out{"popa", m, qmax, true, std::nullopt};

  auto cmp = [&](const QSeries& lhs, const QSeries& rhs, const std::string& place) {
    for (int d = 0; d <= qmax; ++d)
      if (lhs[d] != rhs[d]) {
        record_failure(out, d, place, rat_str(lhs[d]), rat_str(rhs[d]));
        return;
      }
  };

  QSeries prod = qs_one(qmax);
  for (int i = 0; i <= n - r; ++i) prod = prod * bd.c[static_cast<size_t>(i)].truncated(qmax);
  cmp(prod * discriminant_base(m, qmax), qs_one(qmax), "item 1: prod C_i (1 - q prod l^l)");

  for (int b = 0; b <= n - r; ++b)
    cmp(bd.c[static_cast<size_t>(b)].truncated(qmax),
        bd.c[static_cast<size_t>(n - r - b)].truncated(qmax),
        "item 2: C_" + std::to_string(b) + " vs C_" + std::to_string(n - r - b));

  for (int b = n - r + 1; b < n; ++b)
    cmp(bd.c[static_cast<size_t>(b)].truncated(qmax), qs_one(qmax),
        "item 3: C_" + std::to_string(b));

  ClosedForms cf = closed_forms(m, qmax);
  cmp(ad.mu.truncated(qmax), cf.mu, "item 4: mu");
  cmp(ad.r[0].truncated(qmax), cf.r0, "item 4: R_0");
  return out;
}

QSeries loop_q(const CIModel& m, const BirkhoffData& bd, const QSeries& mu, int qmax) {
  validate_model(m);
  const int n = m.n, r = m.r();
  Rat vertex_weight = rat(n, 24) * (Rat(n - 1) - Rat(2) * m.sum_inv_degrees());
  QSeries out = mu.truncated(qmax).scaled(vertex_weight);
  long s = n - 1 - r;
  out += qs_log(discriminant_base(m, qmax)).scaled(rat(-(3 * s * s + n - 2), 24));
  for (int k = 0; k <= n - 2 - r; ++k)
    out += qs_log(bd.c[static_cast<size_t>(k)].truncated(qmax))
               .scaled(-Rat(binomial_int(static_cast<unsigned long>(n - r - k), 2)));
  return out;
}

VerifyOutcome loop_limit_check(const CIModel& m, int qmax) {
  validate_model(m);
  const int n = m.n, r = m.r();
  VerifyOutcome out{"loop", m, qmax, true, std::nullopt};

  IUnderline iu = default_underline(m, qmax);
  BirkhoffData bd = compute_ck(iu);

  const int w_hi = 2 * qmax + 4;
  IFixedPoint jf = default_fixed(m, qmax, w_hi);
  AsymptoticData ad = extract_asymptotics(jf, 0);

  std::vector<WSeries> g;
  g.reserve(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) g.push_back(s_series_fixed(jf, bd, p));

  Series<BiLaurent> v(qmax, BiLaurent());
  for (int p = 0; p <= n - 1 - r; ++p)
    v += tensor_series(g[static_cast<size_t>(p)], g[static_cast<size_t>(n - 1 - r - p)]);
  for (int p = n - r; p <= n - 1; ++p)
    v += tensor_series(g[static_cast<size_t>(p)], g[static_cast<size_t>(2 * n - 1 - r - p)]);

  WSeries ex = exp_neg_mu_over_w(ad.mu, -qmax, w_hi);
  Series<BiLaurent> bracket = (tensor_series(ex, ex) * v).scaled(rat(1, n));
  bracket[0] += BiLaurent::constant(Rat(-1));

  ClosedForms cf = closed_forms(m, qmax);
  QSeries rhs = (qs_qddq(loop_q(m, bd, ad.mu, qmax)) * qs_inv(cf.l)).scaled(rat(1, n));

  const Rat rays[2] = {Rat(1), Rat(2)};
  for (int d = 0; d <= qmax; ++d) {
    const BiLaurent& b = bracket[d];

    RaySub diag = b.subst_diag(Rat(-1));
    if (diag.t_hi < 1)
      throw window_error("loop_limit_check: q^" + std::to_string(d) +
                         " antidiagonal certified only to total degree " +
                         std::to_string(diag.t_hi));
    for (const auto& [t, val] : diag.coeff)
      if (val != 0) {
        record_failure(out, d, "y = -x, total degree " + std::to_string(t), rat_str(val), "0");
        break;
      }

    Rat kappa[2];
    for (int ci = 0; ci < 2; ++ci) {
      RaySub ray = b.subst_diag(rays[ci]);
      if (ray.t_hi < 1)
        throw window_error("loop_limit_check: ray window too small at q^" + std::to_string(d));
      for (const auto& [t, val] : ray.coeff) {
        if (t > 0) break;
        if (val != 0) {
          record_failure(out, d, "ray y = " + rat_str(rays[ci]) + "x, total degree " +
                                     std::to_string(t), rat_str(val), "0");
          break;
        }
      }
      auto it = ray.coeff.find(1);
      kappa[ci] = (it == ray.coeff.end() ? Rat(0) : it->second) / (Rat(1) + rays[ci]);
    }

    if (kappa[0] != kappa[1])
      record_failure(out, d, "ray limits y = x vs y = 2x", rat_str(kappa[0]), rat_str(kappa[1]));
    else if (kappa[0] != rhs[d])
      record_failure(out, d, "limit vs (1/(nL)) q d/dq Loop", rat_str(kappa[0]), rat_str(rhs[d]));
  }
  return out;
}

VerifyOutcome assembly_check(const CIModel& m, int qmax) {
  validate_model(m);
  const int n = m.n;
  VerifyOutcome out{"assembly", m, qmax, true, std::nullopt};

  IUnderline iu = default_underline(m, qmax);
  BirkhoffData bd = compute_ck(iu);
  IFixedPoint jf = default_fixed(m, qmax, qmax + 2);
  AsymptoticData ad = extract_asymptotics(jf, 0);

  QSeries lhs = qs_log(ad.r[0]).scaled(rat(-n, 24));
  Rat mu_weight = (Rat(n) * m.sum_inv_degrees() - Rat(binomial_int(static_cast<unsigned long>(n), 2))) / 24;
  lhs += ad.mu.scaled(mu_weight);
  lhs += loop_q(m, bd, ad.mu, qmax).scaled(rat(1, 2));

  QSeries rhs = quasimap_g1(m, bd, qmax);
  for (int d = 0; d <= qmax; ++d)
    if (lhs[d] != rhs[d]) {
      record_failure(out, d, "vertex+loop assembly vs closed formula",
                     rat_str(lhs[d]), rat_str(rhs[d]));
      break;
    }
  return out;
}

}  // namespace qgw
