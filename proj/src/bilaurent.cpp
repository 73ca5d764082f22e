#include "qgw/bilaurent.hpp"

namespace qgw {

BiLaurent BiLaurent::constant(const Rat& v) { return monomial(0, 0, v); }

BiLaurent BiLaurent::monomial(int i, int j, const Rat& v) {
  BiLaurent r;
  if (v != 0) {
    r.t_[{i, j}] = v;
    r.slo_x_ = i;
    r.slo_y_ = j;
  }
  return r;
}

Rat BiLaurent::coeff(int i, int j) const {
  if (i < slo_x_ || j < slo_y_) return Rat(0);
  if (i > khi_x_ || j > khi_y_)
    throw window_error("BiLaurent: coefficient outside the certified range");
  auto it = t_.find({i, j});
  return it == t_.end() ? Rat(0) : it->second;
}

void BiLaurent::set(int i, int j, const Rat& v) {
  if (v == 0) { t_.erase({i, j}); return; }
  t_[{i, j}] = v;
  slo_x_ = std::min(slo_x_, i);
  slo_y_ = std::min(slo_y_, j);
}

void BiLaurent::prune_unknown() {
  for (auto it = t_.begin(); it != t_.end();) {
    if (it->first.first > khi_x_ || it->first.second > khi_y_ || it->second == 0)
      it = t_.erase(it);
    else
      ++it;
  }
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
  for (const auto& [k, v] : o.t_) {
    auto it = t_.find(k);
    if (it == t_.end()) t_[k] = v;
    else {
      it->second += v;
      if (it->second == 0) t_.erase(it);
    }
  }
  slo_x_ = std::min(slo_x_, o.slo_x_);
  slo_y_ = std::min(slo_y_, o.slo_y_);
  khi_x_ = std::min(khi_x_, o.khi_x_);
  khi_y_ = std::min(khi_y_, o.khi_y_);
  prune_unknown();
  return *this;
}

BiLaurent BiLaurent::scaled(const Rat& s) const {
  BiLaurent r;
  if (s == 0) return r;
  r = *this;
  for (auto& [k, v] : r.t_) v *= s;
  return r;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
  BiLaurent r;
  if (a.t_.empty() || b.t_.empty()) return r;
  r.slo_x_ = sat_add_lo(a.slo_x_, b.slo_x_);
  r.slo_y_ = sat_add_lo(a.slo_y_, b.slo_y_);
  // an entry of the product at (i, j) needs the factors' tails up to
  // (i - slo_x, j - slo_y) of the other operand, hence:
  auto bound = [](int khi_a, int slo_b, int khi_b, int slo_a) {
    int u1 = (khi_a >= kPosInf) ? kPosInf : sat_clamp(static_cast<long long>(khi_a) + slo_b);
    int u2 = (khi_b >= kPosInf) ? kPosInf : sat_clamp(static_cast<long long>(khi_b) + slo_a);
    return std::min(u1, u2);
  };
  r.khi_x_ = bound(a.khi_x_, b.slo_x_, b.khi_x_, a.slo_x_);
  r.khi_y_ = bound(a.khi_y_, b.slo_y_, b.khi_y_, a.slo_y_);
  for (const auto& [ka, va] : a.t_)
    for (const auto& [kb, vb] : b.t_) {
      BiLaurent::Key k{ka.first + kb.first, ka.second + kb.second};
      auto it = r.t_.find(k);
      if (it == r.t_.end()) r.t_[k] = va * vb;
      else it->second += va * vb;
    }
  r.prune_unknown();
  return r;
}

bool operator==(const BiLaurent& a, const BiLaurent& b) {
  return a.t_ == b.t_ && a.slo_x_ == b.slo_x_ && a.slo_y_ == b.slo_y_ &&
         a.khi_x_ == b.khi_x_ && a.khi_y_ == b.khi_y_;
}

BiLaurent BiLaurent::tensor(const Laurent<Rat>& fx, const Laurent<Rat>& fy) {
  BiLaurent r;
  if (fx.supp_lo() >= kPosInf || fy.supp_lo() >= kPosInf) return r;  // a factor is zero
  if (fx.supp_lo() < fx.lo() || fy.supp_lo() < fy.lo())
    throw window_error("BiLaurent::tensor: pole below the stored window");
  if (fx.known_lo() > fx.supp_lo() || fy.known_lo() > fy.supp_lo())
    throw window_error("BiLaurent::tensor: factor not certified down to its pole");
  auto side = [](const Laurent<Rat>& f, int& slo, int& khi) {
    slo = f.supp_lo();
    bool exact_tail = f.known_hi() >= kPosInf || f.supp_hi() <= f.known_hi();
    khi = exact_tail ? kPosInf : std::min(f.known_hi(), f.hi());
  };
  int sx, kx, sy, ky;
  side(fx, sx, kx);
  side(fy, sy, ky);
  int x_to = std::min(std::min(fx.hi(), fx.supp_hi()), kx);
  int y_to = std::min(std::min(fy.hi(), fy.supp_hi()), ky);
  for (int i = std::max(fx.lo(), sx); i <= x_to; ++i) {
    Rat xi = fx.coeff(i);
    if (xi == 0) continue;
    for (int j = std::max(fy.lo(), sy); j <= y_to; ++j) {
      Rat yj = fy.coeff(j);
      if (yj == 0) continue;
      r.t_[{i, j}] = xi * yj;
    }
  }
  r.slo_x_ = sx;
  r.slo_y_ = sy;
  r.khi_x_ = kx;
  r.khi_y_ = ky;
  r.prune_unknown();
  return r;
}

RaySub BiLaurent::subst_diag(const Rat& c) const {
  RaySub out;
  // total degree t is certified once the whole line i + j = t lies in the
  // known region: t - slo_y <= khi_x and t - slo_x <= khi_y
  long long t1 = (khi_x_ >= kPosInf || slo_y_ >= kPosInf) ? kPosInf
               : static_cast<long long>(khi_x_) + slo_y_;
  long long t2 = (khi_y_ >= kPosInf || slo_x_ >= kPosInf) ? kPosInf
               : static_cast<long long>(khi_y_) + slo_x_;
  out.t_hi = sat_clamp(std::min(t1, t2));
  for (const auto& [k, v] : t_) {
    int t = k.first + k.second;
    if (t > out.t_hi) continue;
    Rat term = v * pow_rat(c, k.second);
    auto it = out.coeff.find(t);
    if (it == out.coeff.end()) out.coeff[t] = term;
    else {
      it->second += term;
      if (it->second == 0) out.coeff.erase(it);
    }
  }
  for (auto it = out.coeff.begin(); it != out.coeff.end();)
    it = (it->second == 0) ? out.coeff.erase(it) : std::next(it);
  return out;
}

BiLaurent BiLaurent::div_x_plus_y() const {
  if (!exact()) throw error("BiLaurent::div_x_plus_y: operand is not exact");
  RaySub diag = subst_diag(Rat(-1));
  if (!diag.coeff.empty())
    throw error("BiLaurent::div_x_plus_y: operand does not vanish at y = -x");
  BiLaurent q;
  if (t_.empty()) return q;
  // ascending in i: c(i, j) = b(i, j+1) - c(i-1, j+1), with c empty below
  // the structural x-bound; rows terminate because the quotient of exact
  // Laurent polynomials is again an exact Laurent polynomial
  int i_lo = slo_x_;
  int i_hi = t_.rbegin()->first.first;
  for (int i = i_lo; i <= i_hi; ++i) {
    // candidate j values: from b's row i (at j+1) and q's row i-1 (at j+1)
    std::map<int, Rat> row;
    auto from = t_.lower_bound({i, kNegInf});
    auto to = t_.upper_bound({i, kPosInf});
    for (auto it = from; it != to; ++it) row[it->first.second - 1] += it->second;
    auto qfrom = q.t_.lower_bound({i - 1, kNegInf});
    auto qto = q.t_.upper_bound({i - 1, kPosInf});
    for (auto it = qfrom; it != qto; ++it) row[it->first.second - 1] -= it->second;
    for (const auto& [j, v] : row)
      if (v != 0) q.set(i, j, v);
  }
  // defensive exactness check: (x+y) * q == b
  BiLaurent back = q * (BiLaurent::monomial(1, 0, Rat(1)) + BiLaurent::monomial(0, 1, Rat(1)));
  if (!(back.t_ == t_)) throw error("BiLaurent::div_x_plus_y: division failed");
  return q;
}

Series<BiLaurent> tensor_series(const Series<Laurent<Rat>>& fx, const Series<Laurent<Rat>>& fy) {
  if (fx.trunc() != fy.trunc()) throw error("tensor_series: truncation mismatch");
  Series<BiLaurent> r(fx.trunc(), BiLaurent());
  for (int d = 0; d <= fx.trunc(); ++d) {
    BiLaurent acc = BiLaurent::tensor(fx[0], fy[d]);
    for (int i = 1; i <= d; ++i) acc += BiLaurent::tensor(fx[i], fy[d - i]);
    r[d] = acc;
  }
  return r;
}

}  // namespace qgw
