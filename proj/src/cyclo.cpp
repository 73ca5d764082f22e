#include "qgw/cyclo.hpp"

#include <sstream>

namespace qgw {

bool Cyclo::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclo::is_scalar() const { return is_monomial_in(0); }

bool Cyclo::is_monomial_in(int k) const {
  for (int i = 0; i < n(); ++i)
    if (i != k && c_[static_cast<size_t>(i)] != 0) return false;
  return true;
}

Rat Cyclo::eval_h1() const {
  Rat s(0);
  for (const auto& x : c_) s += x;
  return s;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  check_same(o);
  for (int i = 0; i < n(); ++i) c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  check_same(o);
  for (int i = 0; i < n(); ++i) c_[static_cast<size_t>(i)] -= o.c_[static_cast<size_t>(i)];
  return *this;
}

Cyclo& Cyclo::operator*=(const Rat& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Cyclo operator-(const Cyclo& a) {
  Cyclo r(a.n());
  for (int i = 0; i < a.n(); ++i) r[i] = -a[i];
  return r;
}

Cyclo Cyclo::rotated(long k) const {
  Cyclo r(n());
  for (int i = 0; i < n(); ++i) r.c_[static_cast<size_t>(mod(i + k, n()))] = c_[static_cast<size_t>(i)];
  return r;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  a.check_same(b);
  const int n = a.n();
  Cyclo r(n);
  // cyclic convolution; this inner loop is the hot path of the whole engine
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      int k = i + j;
      if (k >= n) k -= n;
      r[k] += a[i] * b[j];
    }
  }
  return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.n() != b.n()) return false;
  for (int i = 0; i < a.n(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n(); ++i) {
    if (c_[static_cast<size_t>(i)] == 0) continue;
    if (!first) os << " + ";
    os << rat_str(c_[static_cast<size_t>(i)]);
    if (i > 0) os << "*H^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace qgw
