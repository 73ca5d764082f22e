#pragma once

// Elements of Q[H]/(H^n - 1), the torus-weight quotient ring that carries
// every cohomology-valued coefficient once the weights are specialized to
// the n-th roots of unity.  The ring has zero divisors, so there is no
// elementwise division anywhere: elements are only ever scaled by nonzero
// rationals, and anything that looks like division by a series happens at
// the scalar-series level.

#include <vector>

#include "qgw/rational.hpp"

namespace qgw {

class Cyclo {
 public:
  Cyclo() = default;
  explicit Cyclo(int n) : c_(check_n(n)) {}
  Cyclo(int n, const Rat& scalar) : c_(check_n(n)) { c_[0] = scalar; }

  static Cyclo scalar(int n, const Rat& v) { return Cyclo(n, v); }
  static Cyclo one(int n) { return Cyclo(n, Rat(1)); }
  // the class H itself, i.e. H^1
  static Cyclo H(int n) { return monomial(n, 1, Rat(1)); }
  static Cyclo monomial(int n, long k, const Rat& v) {
    Cyclo r(n);
    r.c_[mod(k, n)] = v;
    return r;
  }

  int n() const { return static_cast<int>(c_.size()); }
  const Rat& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  Rat& operator[](int i) { return c_[static_cast<size_t>(i)]; }

  bool is_zero() const;
  // all components vanish except the H^0 one
  bool is_scalar() const;
  // all components vanish except the H^k one
  bool is_monomial_in(int k) const;

  // ring homomorphism H |-> 1 (restriction to the distinguished fixed point)
  Rat eval_h1() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Rat& s);
  // multiply by H^k, a cyclic rotation of components
  Cyclo rotated(long k) const;

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator-(const Cyclo& a);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(Cyclo a, const Rat& s) { return a *= s; }
  friend Cyclo operator*(const Rat& s, Cyclo a) { return a *= s; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  std::string str() const;  // e.g. "3/2 + q... " debug form "a0 + a1*H + ..."

 private:
  static int check_n(int n) {
    if (n < 1) throw error("Cyclo: modulus must be positive");
    return n;
  }
  static int mod(long k, int n) {
    long m = k % n;
    return static_cast<int>(m < 0 ? m + n : m);
  }
  void check_same(const Cyclo& o) const {
    if (n() != o.n()) throw error("Cyclo: ring mismatch");
  }

  std::vector<Rat> c_;
};

}  // namespace qgw
