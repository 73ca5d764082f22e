#pragma once

// Window-truncated Laurent data in one formal variable (z on the
// cohomological side, w on the fixed-point side), with explicit
// bookkeeping of what the truncation still certifies.
//
// A Laurent value represents a doubly-infinite coefficient family of which
// only a window [lo, hi] is stored.  Metadata tracks two more intervals:
//
//   * structural support [slo, shi]: outside it the true coefficient is
//     exactly zero (e.g. a pole of order d gives slo = -d; a 1/z expansion
//     of a degree-balanced rational function gives shi = 0);
//   * known range [klo, khi]: inside it the stored (or structurally zero)
//     coefficient equals the true one.  Operations shrink this range
//     instead of silently producing wrong entries, and reading outside it
//     throws window_error.
//
// Infinite bounds use saturating sentinels.  Every arithmetic operation
// recomputes the metadata conservatively, so "recompute with a larger
// window and compare on the overlap" is a meaningful stability check.

#include <limits>
#include <optional>
#include <vector>

#include "qgw/cyclo.hpp"
#include "qgw/errors.hpp"
#include "qgw/rational.hpp"

namespace qgw {

inline constexpr int kNegInf = std::numeric_limits<int>::min() / 4;
inline constexpr int kPosInf = std::numeric_limits<int>::max() / 4;

inline int sat_clamp(long long v) {
  if (v <= kNegInf) return kNegInf;
  if (v >= kPosInf) return kPosInf;
  return static_cast<int>(v);
}

// lower structural bounds add with "empty support" (+inf) dominating
inline int sat_add_lo(int a, int b) {
  if (a >= kPosInf || b >= kPosInf) return kPosInf;
  if (a <= kNegInf || b <= kNegInf) return kNegInf;
  return sat_clamp(static_cast<long long>(a) + b);
}
// upper structural bounds add with "empty support" (-inf) dominating
inline int sat_add_hi(int a, int b) {
  if (a <= kNegInf || b <= kNegInf) return kNegInf;
  if (a >= kPosInf || b >= kPosInf) return kPosInf;
  return sat_clamp(static_cast<long long>(a) + b);
}

inline bool ring_is_zero(const Rat& x) { return x == 0; }
inline bool ring_is_zero(const Cyclo& x) { return x.is_zero(); }
inline std::optional<Rat> ring_scalar_part(const Rat& x) { return x; }
inline std::optional<Rat> ring_scalar_part(const Cyclo& x) {
  if (!x.is_scalar()) return std::nullopt;
  return x[0];
}

template <class R>
class Laurent {
 public:
  Laurent() = default;

  // zero object: empty support, known everywhere
  Laurent(int lo, int hi, const R& zero)
      : lo_(lo), hi_(hi), slo_(kPosInf), shi_(kNegInf), klo_(kNegInf), khi_(kPosInf),
        zero_(zero), c_(static_cast<size_t>(check_window(lo, hi)), zero) {}

  // exact finite object from polynomial coefficients: poly[i] sits at
  // exponent offset+i; must fit inside the window
  static Laurent from_poly(int lo, int hi, const std::vector<R>& poly, int offset, const R& zero) {
    Laurent r(lo, hi, zero);
    for (size_t i = 0; i < poly.size(); ++i) {
      if (ring_is_zero(poly[i])) continue;
      int e = offset + static_cast<int>(i);
      if (e < lo || e > hi) throw window_error("Laurent::from_poly: exponent outside window");
      r.c_[static_cast<size_t>(e - lo)] = poly[i];
      if (r.slo_ >= kPosInf) r.slo_ = e; else if (e < r.slo_) r.slo_ = e;
      if (r.shi_ <= kNegInf) r.shi_ = e; else if (e > r.shi_) r.shi_ = e;
    }
    return r;
  }

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int supp_lo() const { return slo_; }
  int supp_hi() const { return shi_; }
  int known_lo() const { return klo_; }
  int known_hi() const { return khi_; }
  const R& zero() const { return zero_; }

  bool same_window(const Laurent& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

  bool knows(int e) const {
    if (e < slo_ || e > shi_) return true;
    return e >= klo_ && e <= khi_;
  }

  R coeff(int e) const {
    if (e < slo_ || e > shi_) return zero_;
    if (e >= klo_ && e <= khi_) return c_[static_cast<size_t>(e - lo_)];
    throw window_error("Laurent: coefficient at exponent " + std::to_string(e) +
                       " lies outside the certified range");
  }

  // builder access for expansion routines and tests
  void raw_set(int e, const R& v) {
    if (e < lo_ || e > hi_) throw window_error("Laurent::raw_set: outside window");
    c_[static_cast<size_t>(e - lo_)] = v;
  }
  void set_meta(int slo, int shi, int klo, int khi) {
    slo_ = slo; shi_ = shi; klo_ = klo; khi_ = khi;
    normalize_meta();
  }

  Laurent& operator+=(const Laurent& o) {
    require_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    slo_ = std::min(slo_, o.slo_);
    shi_ = std::max(shi_, o.shi_);
    klo_ = std::max(klo_, o.klo_);
    khi_ = std::min(khi_, o.khi_);
    normalize_meta();
    return *this;
  }
  Laurent& operator-=(const Laurent& o) { return *this += (-o); }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  Laurent scaled(const Rat& s) const {
    Laurent r = *this;
    if (s == 0) {
      for (auto& x : r.c_) x = zero_;
      r.slo_ = kPosInf; r.shi_ = kNegInf; r.klo_ = kNegInf; r.khi_ = kPosInf;
      return r;
    }
    for (auto& x : r.c_) x = x * s;
    return r;
  }

  // multiply every coefficient by a fixed ring element (used for H·)
  Laurent ring_scaled(const R& h) const {
    Laurent r = *this;
    for (auto& x : r.c_) x = x * h;
    return r;
  }

  // multiply by z^k; content outside the window is dropped with the
  // knowledge metadata clipped accordingly
  Laurent shifted(int k) const {
    Laurent r(lo_, hi_, zero_);
    for (int e = lo_; e <= hi_; ++e) {
      int src = e - k;
      if (src >= lo_ && src <= hi_) r.c_[static_cast<size_t>(e - lo_)] = c_[static_cast<size_t>(src - lo_)];
    }
    r.slo_ = sat_add_lo(slo_, k);
    r.shi_ = sat_add_hi(shi_, k);
    r.klo_ = klo_ <= kNegInf ? kNegInf : sat_clamp(static_cast<long long>(klo_) + k);
    r.khi_ = khi_ >= kPosInf ? kPosInf : sat_clamp(static_cast<long long>(khi_) + k);
    r.normalize_meta();
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.require_same(b);
    Laurent r(a.lo_, a.hi_, a.zero_);
    r.slo_ = sat_add_lo(a.slo_, b.slo_);
    r.shi_ = sat_add_hi(a.shi_, b.shi_);
    if (r.slo_ > r.shi_) {  // zero product
      r.slo_ = kPosInf; r.shi_ = kNegInf; r.klo_ = kNegInf; r.khi_ = kPosInf;
      return r;
    }
    r.klo_ = std::max(lower_need(a, b), lower_need(b, a));
    r.khi_ = std::min(upper_need(a, b), upper_need(b, a));
    r.normalize_meta();
    int e_from = std::max(std::max(r.lo_, r.klo_), r.slo_);
    int e_to = std::min(std::min(r.hi_, r.khi_), r.shi_);
    for (int e = e_from; e <= e_to; ++e) {
      R acc = a.zero_;
      int i_from = std::max(std::max(a.lo_, a.slo_), e - std::min(b.hi_, b.shi_));
      int i_to = std::min(std::min(a.hi_, a.shi_), e - std::max(b.lo_, b.slo_));
      for (int i = i_from; i <= i_to; ++i) {
        const R& ai = a.c_[static_cast<size_t>(i - a.lo_)];
        if (ring_is_zero(ai)) continue;
        const R& bj = b.c_[static_cast<size_t>(e - i - b.lo_)];
        if (ring_is_zero(bj)) continue;
        acc += ai * bj;
      }
      r.c_[static_cast<size_t>(e - r.lo_)] = acc;
    }
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Rat& s) { return a.scaled(s); }
  friend Laurent operator*(const Rat& s, const Laurent& a) { return a.scaled(s); }

  // first certified nonzero coefficient, if any (for zero assertions)
  std::optional<int> first_nonzero_known() const {
    int from = std::max(std::max(lo_, klo_), slo_);
    int to = std::min(std::min(hi_, khi_), shi_);
    for (int e = from; e <= to; ++e)
      if (!ring_is_zero(c_[static_cast<size_t>(e - lo_)])) return e;
    return std::nullopt;
  }
  bool is_zero_known() const { return !first_nonzero_known().has_value(); }

  // agreement on the intersection of the certified ranges
  friend bool agree_on_overlap(const Laurent& a, const Laurent& b) {
    int from = std::max(a.klo_, b.klo_);
    int to = std::min(a.khi_, b.khi_);
    from = std::max(from, std::min(a.slo_, b.slo_));
    to = std::min(to, std::max(a.shi_, b.shi_));
    for (int e = from; e <= to; ++e)
      if (!(a.coeff(e) == b.coeff(e))) return false;
    return true;
  }

 private:
  static int check_window(int lo, int hi) {
    if (lo > hi) throw error("Laurent: empty window");
    return hi - lo + 1;
  }
  void require_same(const Laurent& o) const {
    if (!same_window(o)) throw error("Laurent: window mismatch");
  }
  void normalize_meta() {
    // keep anything claimed known-and-supported inside the window
    if (slo_ < lo_) klo_ = std::max(klo_, lo_);
    if (shi_ > hi_) khi_ = std::min(khi_, hi_);
  }
  // smallest result exponent at which every needed coefficient of a is known
  static int lower_need(const Laurent& a, const Laurent& b) {
    if (a.klo_ <= kNegInf) return kNegInf;
    if (a.slo_ >= a.klo_) return kNegInf;
    if (b.shi_ >= kPosInf) return kPosInf;
    return sat_clamp(static_cast<long long>(a.klo_) + b.shi_);
  }
  static int upper_need(const Laurent& a, const Laurent& b) {
    if (a.khi_ >= kPosInf) return kPosInf;
    if (a.shi_ <= a.khi_) return kPosInf;
    if (b.slo_ <= kNegInf) return kNegInf;
    return sat_clamp(static_cast<long long>(a.khi_) + b.slo_);
  }

  int lo_ = 0, hi_ = 0;
  int slo_ = kPosInf, shi_ = kNegInf;
  int klo_ = kNegInf, khi_ = kPosInf;
  R zero_{};
  std::vector<R> c_;
};

// ---- polynomial helpers (coefficient vectors, ascending exponent) ----

template <class R>
int poly_top(const std::vector<R>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!ring_is_zero(p[static_cast<size_t>(i)])) return i;
  return -1;  // zero polynomial
}

template <class R>
int poly_low(const std::vector<R>& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (!ring_is_zero(p[static_cast<size_t>(i)])) return i;
  return -1;
}

template <class R>
std::vector<R> poly_mul(const std::vector<R>& a, const std::vector<R>& b, const R& zero) {
  if (a.empty() || b.empty()) return {};
  std::vector<R> r(a.size() + b.size() - 1, zero);
  for (size_t i = 0; i < a.size(); ++i) {
    if (ring_is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (ring_is_zero(b[j])) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// Expansion of numer/denom in descending powers of z (about z = infinity).
// Requires the leading denominator coefficient to be an invertible scalar;
// the result is certified on all of [lo, top] where top = deg num - deg den.
template <class R>
Laurent<R> expand_inv_z(const std::vector<R>& numer, const std::vector<R>& denom,
                        int lo, int hi, const R& zero) {
  int dn = poly_top(numer), dd = poly_top(denom);
  if (dd < 0) throw error("expand_inv_z: zero denominator");
  if (dn < 0) return Laurent<R>(lo, hi, zero);
  int top = dn - dd;
  if (top > hi) throw window_error("expand_inv_z: expansion top above window");
  auto lead = ring_scalar_part(denom[static_cast<size_t>(dd)]);
  if (!lead || *lead == 0) throw error("expand_inv_z: leading denominator coefficient is not an invertible scalar");
  Rat inv_lead = Rat(1) / *lead;

  int depth = top - lo;  // number of 1/z steps to fill the window
  std::vector<R> c(static_cast<size_t>(depth) + 1, zero);
  for (int j = 0; j <= depth; ++j) {
    // numerator coefficient of z^{dn-j}, taken as 0 when out of range
    R acc = (dn - j >= 0 && dn - j < static_cast<int>(numer.size()))
                ? numer[static_cast<size_t>(dn - j)] : zero;
    int imax = std::min(j, dd);
    for (int i = 1; i <= imax; ++i) {
      const R& ai = denom[static_cast<size_t>(dd - i)];
      if (ring_is_zero(ai)) continue;
      acc += -(ai * c[static_cast<size_t>(j - i)]);
    }
    c[static_cast<size_t>(j)] = acc * inv_lead;
  }

  Laurent<R> r(lo, hi, zero);
  for (int j = 0; j <= depth; ++j) {
    int e = top - j;
    if (e >= lo && e <= hi) r.raw_set(e, c[static_cast<size_t>(j)]);
  }
  if (poly_low(denom) == dd) {
    // monomial denominator: the expansion terminates and is globally exact
    int slo = poly_low(numer) - dd;
    r.set_meta(slo, top, slo >= lo ? kNegInf : lo, kPosInf);
  } else {
    r.set_meta(kNegInf, top, lo, kPosInf);
  }
  return r;
}

// Expansion of numer/denom about w = 0 where the denominator vanishes to
// order exactly `order`; certified on [-order, hi], with the tail above hi
// truncated (khi = hi) unless the quotient is exact.
template <class R>
Laurent<R> expand_pole(const std::vector<R>& numer, const std::vector<R>& denom,
                       int order, int lo, int hi, const R& zero) {
  int low = poly_low(denom);
  if (low < 0) throw error("expand_pole: zero denominator");
  if (low != order) throw error("expand_pole: pole order mismatch");
  if (-order < lo) throw window_error("expand_pole: pole deeper than window");
  auto lead = ring_scalar_part(denom[static_cast<size_t>(order)]);
  if (!lead || *lead == 0) throw error("expand_pole: lowest denominator coefficient is not an invertible scalar");
  Rat inv_lead = Rat(1) / *lead;

  int dn = poly_top(numer);
  if (dn < 0) return Laurent<R>(lo, hi, zero);
  int dd = poly_top(denom);
  int depth = hi + order;  // power-series depth needed before the shift by -order
  std::vector<R> c(static_cast<size_t>(depth) + 1, zero);
  for (int j = 0; j <= depth; ++j) {
    R acc = (j <= dn) ? numer[static_cast<size_t>(j)] : zero;
    int imax = std::min(j, dd - order);
    for (int i = 1; i <= imax; ++i) {
      const R& ai = denom[static_cast<size_t>(order + i)];
      if (ring_is_zero(ai)) continue;
      acc += -(ai * c[static_cast<size_t>(j - i)]);
    }
    c[static_cast<size_t>(j)] = acc * inv_lead;
  }

  Laurent<R> r(lo, hi, zero);
  for (int j = 0; j <= depth; ++j) {
    int e = j - order;
    if (e >= lo && e <= hi) r.raw_set(e, c[static_cast<size_t>(j)]);
  }
  int slo = poly_low(numer) - order;
  if (dd == low) {
    // monomial denominator: quotient is an exact Laurent polynomial
    int shi = dn - order;
    r.set_meta(slo, shi, kNegInf, shi <= hi ? kPosInf : hi);
  } else {
    r.set_meta(slo, kPosInf, kNegInf, hi);
  }
  return r;
}

}  // namespace qgw
