#pragma once

// Rational Laurent data in two variables (x, y), used by the loop-term
// verifier.  Entries are kept sparsely.  The metadata mirrors Laurent's:
// structural lower bounds per variable (pole depths; the true coefficient
// vanishes below them) and known upper bounds per variable (tails above
// them were truncated away).  Exact objects carry khi = +inf.

#include <map>
#include <utility>

#include "qgw/laurent.hpp"
#include "qgw/rational.hpp"
#include "qgw/series.hpp"

namespace qgw {

struct RaySub {
  // substitution y = c x collapses (i, j) to total degree i + j
  std::map<int, Rat> coeff;
  int t_hi;  // coefficients with total degree <= t_hi are certified
};

class BiLaurent {
 public:
  using Key = std::pair<int, int>;

  BiLaurent() = default;  // zero, exact

  static BiLaurent constant(const Rat& v);
  static BiLaurent monomial(int i, int j, const Rat& v);
  // outer product of a Laurent in x and a Laurent in y
  static BiLaurent tensor(const Laurent<Rat>& fx, const Laurent<Rat>& fy);

  bool is_zero() const { return t_.empty(); }
  Rat coeff(int i, int j) const;

  int supp_lo_x() const { return slo_x_; }
  int supp_lo_y() const { return slo_y_; }
  int known_hi_x() const { return khi_x_; }
  int known_hi_y() const { return khi_y_; }

  BiLaurent& operator+=(const BiLaurent& o);
  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  friend BiLaurent operator-(const BiLaurent& a, const BiLaurent& b) { return a + b.scaled(-1); }
  BiLaurent operator-() const { return scaled(-1); }
  BiLaurent scaled(const Rat& s) const;
  friend BiLaurent operator*(const BiLaurent& a, const Rat& s) { return a.scaled(s); }
  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
  friend bool operator==(const BiLaurent& a, const BiLaurent& b);

  // substitute y = c x; certified up to total degree t_hi
  RaySub subst_diag(const Rat& c) const;

  // exact division by (x + y); requires a fully exact operand that
  // vanishes under y = -x (checked), returns the exact quotient
  BiLaurent div_x_plus_y() const;

  const std::map<Key, Rat>& entries() const { return t_; }

 private:
  void set(int i, int j, const Rat& v);
  void prune_unknown();
  bool exact() const { return khi_x_ >= kPosInf && khi_y_ >= kPosInf; }

  std::map<Key, Rat> t_;
  int slo_x_ = kPosInf, slo_y_ = kPosInf;
  int khi_x_ = kPosInf, khi_y_ = kPosInf;
};

// convolution in q of two series tensored into (x, y)
Series<BiLaurent> tensor_series(const Series<Laurent<Rat>>& fx, const Series<Laurent<Rat>>& fy);

}  // namespace qgw
