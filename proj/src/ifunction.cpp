#include "qgw/ifunction.hpp"

namespace qgw {

namespace {

// (H + k z)^n - 1 as a z-polynomial over Q[H]/(H^n - 1); its constant term
// H^n - 1 vanishes in the quotient, so the factor starts at z^1
std::vector<Cyclo> denom_factor(int n, int k) {
  std::vector<Cyclo> f(static_cast<size_t>(n) + 1, Cyclo(n));
  for (int j = 0; j <= n; ++j) {
    Rat c = Rat(binomial_int(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) *
            Rat(pow_rat(Rat(k), j));
    f[static_cast<size_t>(j)] += Cyclo::monomial(n, n - j, c);
  }
  f[0] -= Cyclo::one(n);  // H^n == 1 in the quotient ring, so f[0] == 0
  return f;
}

}  // namespace

std::vector<Cyclo> underline_numer(const CIModel& m, int d) {
  const int n = m.n;
  std::vector<Cyclo> numer{Cyclo::one(n)};
  for (int l : m.degrees)
    for (int k = 1; k <= l * d; ++k) {
      std::vector<Cyclo> factor{Cyclo::monomial(n, 1, Rat(l)), Cyclo::scalar(n, Rat(k))};
      numer = poly_mul(numer, factor, Cyclo(n));
    }
  return numer;
}

std::vector<Cyclo> underline_denom(const CIModel& m, int d) {
  const int n = m.n;
  std::vector<Cyclo> denom{Cyclo::one(n)};
  for (int k = 1; k <= d; ++k) denom = poly_mul(denom, denom_factor(n, k), Cyclo(n));
  return denom;
}

std::vector<Rat> fixed_numer(const CIModel& m, int d) {
  std::vector<Rat> numer{Rat(1)};
  for (int l : m.degrees)
    for (int k = 1; k <= l * d; ++k)
      numer = poly_mul(numer, std::vector<Rat>{Rat(l), Rat(k)}, Rat(0));
  return numer;
}

std::vector<Rat> fixed_denom(const CIModel& m, int d) {
  const int n = m.n;
  std::vector<Rat> denom{Rat(1)};
  for (int k = 1; k <= d; ++k) {
    // (1 + k w)^n - 1, vanishing to order one at w = 0
    std::vector<Rat> f(static_cast<size_t>(n) + 1, Rat(0));
    for (int j = 1; j <= n; ++j)
      f[static_cast<size_t>(j)] = Rat(binomial_int(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) * pow_rat(Rat(k), j);
    denom = poly_mul(denom, f, Rat(0));
  }
  return denom;
}

IUnderline i_underline(const CIModel& m, int qmax, int z_lo, int z_hi) {
  validate_model(m);
  const int n = m.n;
  const Cyclo zero(n);
  IUnderline out{m, USeries(qmax, Laurent<Cyclo>(z_lo, z_hi, zero))};

  // build numerator/denominator incrementally in d and expand each degree
  std::vector<Cyclo> numer{Cyclo::one(n)};
  std::vector<Cyclo> denom{Cyclo::one(n)};
  for (int d = 0; d <= qmax; ++d) {
    if (d > 0) {
      for (int l : m.degrees)
        for (int k = l * (d - 1) + 1; k <= l * d; ++k)
          numer = poly_mul(numer, std::vector<Cyclo>{Cyclo::monomial(n, 1, Rat(l)), Cyclo::scalar(n, Rat(k))}, zero);
      denom = poly_mul(denom, denom_factor(n, d), zero);
      // both sides have z-degree n*d, so the expansion tops out at z^0
      if (poly_top(numer) != n * d || poly_top(denom) != n * d)
        throw error("i_underline: unexpected polynomial degree");
    }
    out.series[d] = expand_inv_z(numer, denom, z_lo, z_hi, zero);
  }
  return out;
}

IFixedPoint i_fixed_point(const CIModel& m, int qmax, int w_lo, int w_hi) {
  validate_model(m);
  IFixedPoint out{m, WSeries(qmax, Laurent<Rat>(w_lo, w_hi, Rat(0)))};
  std::vector<Rat> numer{Rat(1)};
  std::vector<Rat> denom{Rat(1)};
  for (int d = 0; d <= qmax; ++d) {
    if (d > 0) {
      for (int l : m.degrees)
        for (int k = l * (d - 1) + 1; k <= l * d; ++k)
          numer = poly_mul(numer, std::vector<Rat>{Rat(l), Rat(k)}, Rat(0));
      std::vector<Rat> f(static_cast<size_t>(m.n) + 1, Rat(0));
      for (int j = 1; j <= m.n; ++j)
        f[static_cast<size_t>(j)] = Rat(binomial_int(static_cast<unsigned long>(m.n), static_cast<unsigned long>(j))) * pow_rat(Rat(d), j);
      denom = poly_mul(denom, f, Rat(0));
    }
    // pole order is exactly d: each factor (1 + kw)^n - 1 vanishes simply
    out.series[d] = expand_pole(numer, denom, d, w_lo, w_hi, Rat(0));
  }
  return out;
}

SmallI small_i(const CIModel& m, int qmax) {
  validate_model(m);
  SmallI out{qs_zero(qmax), qs_zero(qmax)};
  for (int d = 0; d <= qmax; ++d) {
    Rat i0d(1);
    for (int l : m.degrees) i0d *= Rat(factorial_int(static_cast<unsigned long>(l) * static_cast<unsigned long>(d)));
    Rat dfac = Rat(factorial_int(static_cast<unsigned long>(d)));
    i0d /= pow_rat(dfac, m.n);
    out.i0[d] = i0d;
    Rat h(0);
    for (int l : m.degrees)
      for (int k = d + 1; k <= l * d; ++k) h += rat(l, 1) / Rat(k);
    out.f[d] = i0d * h;
  }
  return out;
}

USeries z_qdq_plus_h(const USeries& f) {
  const int n = f.zero().zero().n();
  Cyclo h = Cyclo::H(n);
  USeries r(f.trunc(), f.zero());
  for (int d = 0; d <= f.trunc(); ++d) {
    Laurent<Cyclo> t = f[d].ring_scaled(h);
    if (d > 0) t += f[d].shifted(1).scaled(Rat(d));
    r[d] = t;
  }
  return r;
}

WSeries z_qdq_plus_1(const WSeries& f) {
  WSeries r(f.trunc(), f.zero());
  for (int d = 0; d <= f.trunc(); ++d) {
    Laurent<Rat> t = f[d];
    if (d > 0) t += f[d].shifted(1).scaled(Rat(d));
    r[d] = t;
  }
  return r;
}

WSeries eval_h1(const USeries& f) {
  Laurent<Rat> zl(f.zero().lo(), f.zero().hi(), Rat(0));
  WSeries r(f.trunc(), zl);
  for (int d = 0; d <= f.trunc(); ++d) {
    const Laurent<Cyclo>& src = f[d];
    Laurent<Rat> dst(src.lo(), src.hi(), Rat(0));
    int from = std::max(std::max(src.lo(), src.known_lo()), src.supp_lo());
    int to = std::min(std::min(src.hi(), src.known_hi()), src.supp_hi());
    for (int e = from; e <= to; ++e) dst.raw_set(e, src.coeff(e).eval_h1());
    dst.set_meta(src.supp_lo(), src.supp_hi(), src.known_lo(), src.known_hi());
    r[d] = dst;
  }
  return r;
}

}  // namespace qgw
