#pragma once

// Truncated formal power series in the Novikov variable q.  The template
// parameter is the coefficient ring: Rat for scalar series, Cyclo for
// cohomology-valued ones, Laurent<...> for the z- or w-expanded carriers,
// BiLaurent for the two-variable loop data.  Truncation order is explicit
// and binary operations insist on equal orders; use truncated() first when
// mixing.  All arithmetic is exact.

#include <functional>
#include <vector>

#include "qgw/errors.hpp"
#include "qgw/rational.hpp"

namespace qgw {

template <class T>
class Series {
 public:
  Series() = default;
  Series(int trunc, const T& zero)
      : zero_(zero), c_(static_cast<size_t>(check_trunc(trunc)) + 1, zero) {}

  int trunc() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int d) const { return at(d); }
  T& operator[](int d) { return const_cast<T&>(at(d)); }
  const T& zero() const { return zero_; }

  Series truncated(int t) const {
    if (t > trunc()) throw error("Series::truncated: cannot extend truncation");
    Series r(t, zero_);
    for (int d = 0; d <= t; ++d) r[d] = (*this)[d];
    return r;
  }

  Series& operator+=(const Series& o) {
    require_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(const Series& a, const Series& b) {
    a.require_same(b);
    Series r = a;
    for (int d = 0; d <= r.trunc(); ++d) r[d] = r[d] - b[d];
    return r;
  }
  Series operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Series operator*(const Series& a, const Series& b) {
    a.require_same(b);
    Series r(a.trunc(), a.zero_);
    for (int d = 0; d <= a.trunc(); ++d) {
      T acc = a[0] * b[d];
      for (int i = 1; i <= d; ++i) acc += a[i] * b[d - i];
      r[d] = acc;
    }
    return r;
  }

  Series scaled(const Rat& s) const {
    Series r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }

  // multiplication by the scalar series s(q), coefficientwise in the ring
  Series mul_scalar_series(const Series<Rat>& s) const {
    if (s.trunc() != trunc()) throw error("Series: truncation mismatch");
    Series r(trunc(), zero_);
    for (int d = 0; d <= trunc(); ++d) {
      T acc = c_[0] * s[d];
      for (int i = 1; i <= d; ++i) acc += c_[static_cast<size_t>(i)] * s[d - i];
      r[d] = acc;
    }
    return r;
  }

  // multiply by q (degrees shift up; the top coefficient falls off)
  Series times_q() const {
    Series r(trunc(), zero_);
    for (int d = trunc(); d >= 1; --d) r[d] = c_[static_cast<size_t>(d - 1)];
    return r;
  }

  template <class U>
  Series<U> map(const U& zero, const std::function<U(const T&)>& f) const {
    Series<U> r(trunc(), zero);
    for (int d = 0; d <= trunc(); ++d) r[d] = f((*this)[d]);
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) {
    if (a.trunc() != b.trunc()) return false;
    for (int d = 0; d <= a.trunc(); ++d)
      if (!(a[d] == b[d])) return false;
    return true;
  }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  static int check_trunc(int t) {
    if (t < 0) throw error("Series: negative truncation order");
    return t;
  }
  const T& at(int d) const {
    if (d < 0 || d > trunc()) throw error("Series: degree out of range");
    return c_[static_cast<size_t>(d)];
  }
  void require_same(const Series& o) const {
    if (trunc() != o.trunc()) throw error("Series: truncation mismatch");
  }

  T zero_{};
  std::vector<T> c_;
};

using QSeries = Series<Rat>;

inline QSeries qs_zero(int trunc) { return QSeries(trunc, Rat(0)); }

inline QSeries qs_const(int trunc, const Rat& c0) {
  QSeries r = qs_zero(trunc);
  r[0] = c0;
  return r;
}

inline QSeries qs_one(int trunc) { return qs_const(trunc, Rat(1)); }

// q itself
inline QSeries qs_q(int trunc) {
  QSeries r = qs_zero(trunc);
  if (trunc >= 1) r[1] = 1;
  return r;
}

// multiplicative inverse; the constant term must be a nonzero rational
inline QSeries qs_inv(const QSeries& a) {
  if (a[0] == 0) throw error("qs_inv: constant term is zero");
  QSeries b = qs_zero(a.trunc());
  Rat inv0 = Rat(1) / a[0];
  b[0] = inv0;
  for (int d = 1; d <= a.trunc(); ++d) {
    Rat acc(0);
    for (int i = 1; i <= d; ++i) acc += a[i] * b[d - i];
    b[d] = -acc * inv0;
  }
  return b;
}

inline QSeries qs_qddq(const QSeries& a) {
  QSeries r = qs_zero(a.trunc());
  for (int d = 1; d <= a.trunc(); ++d) r[d] = Rat(d) * a[d];
  return r;
}

// integral of a dlog q, i.e. sum a_d q^d / d; requires a(0) = 0
inline QSeries qs_int_dlog(const QSeries& a) {
  if (a[0] != 0) throw error("qs_int_dlog: nonzero constant term");
  QSeries r = qs_zero(a.trunc());
  for (int d = 1; d <= a.trunc(); ++d) r[d] = a[d] / Rat(d);
  return r;
}

// exp of a series with zero constant term, via e' = a' e
inline QSeries qs_exp(const QSeries& a) {
  if (a[0] != 0) throw error("qs_exp: nonzero constant term");
  QSeries e = qs_zero(a.trunc());
  e[0] = 1;
  for (int d = 1; d <= a.trunc(); ++d) {
    Rat acc(0);
    for (int i = 1; i <= d; ++i) acc += Rat(i) * a[i] * e[d - i];
    e[d] = acc / Rat(d);
  }
  return e;
}

// log of a series with constant term 1, via l' = a'/a
inline QSeries qs_log(const QSeries& a) {
  if (a[0] != 1) throw error("qs_log: constant term must be 1");
  QSeries lp = qs_qddq(a) * qs_inv(a);  // q dl/dq
  QSeries l = qs_zero(a.trunc());
  for (int d = 1; d <= a.trunc(); ++d) l[d] = lp[d] / Rat(d);
  return l;
}

// a^e for rational e, constant term of a must be 1
inline QSeries qs_pow_rat(const QSeries& a, const Rat& e) {
  return qs_exp(qs_log(a).scaled(e));
}

// composition f(g(q)); requires g(0) = 0
inline QSeries qs_compose(const QSeries& f, const QSeries& g) {
  if (f.trunc() != g.trunc()) throw error("qs_compose: truncation mismatch");
  if (g[0] != 0) throw error("qs_compose: inner series has nonzero constant term");
  QSeries r = qs_const(f.trunc(), f[f.trunc()]);
  for (int d = f.trunc() - 1; d >= 0; --d) {
    r = r * g;
    r[0] += f[d];
  }
  return r;
}

}  // namespace qgw
