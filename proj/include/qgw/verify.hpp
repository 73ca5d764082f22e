#pragma once

// Certification suites for the derivation-level identities: Picard-Fuchs
// annihilation of the I-function, the closed forms of the Birkhoff
// constants and asymptotics, the loop-term limit, and the assembly of the
// genus-one quasimap series from its vertex and loop pieces.  Every check
// is an exact rational identity.  A window too small to decide a check
// throws window_error; a decided-and-false identity is reported through
// VerifyOutcome, never by exception.

#include <optional>
#include <string>

#include "qgw/asymptotics.hpp"
#include "qgw/birkhoff.hpp"
#include "qgw/geometry.hpp"
#include "qgw/ifunction.hpp"

namespace qgw {

struct FailureLoc {
  int q_deg = 0;
  std::string place;  // exponent / item / ray where the identity broke
  std::string lhs;
  std::string rhs;
};

struct VerifyOutcome {
  std::string suite;
  CIModel model;
  int q_order = 0;
  bool passed = false;
  std::optional<FailureLoc> first_failure;
};

// (z q d/dq + H)^n - 1 - q prod_a prod_{m=1}^{l_a} (l_a (z q d/dq + H) + m z)
// annihilates the underline I-function on the certified z-window
VerifyOutcome pf_check(const IUnderline& i);

// the four closed-form identities: the telescoping product
// prod_{i=0}^{n-r} C_i = (1 - q prod l^l)^{-1}, the symmetry C_b = C_{n-r-b},
// the triviality C_b = 1 for b > n - r, and mu / R_0 against their closed
// forms
VerifyOutcome popa_check(const BirkhoffData& bd, const AsymptoticData& ad, const CIModel& m);

// Loop(q) = (n/24)(n-1-2 sum 1/l_a) mu
//           - ((3(n-1-r)^2 + n-2)/24) log(1 - q prod l^l)
//           - sum_{k=0}^{n-2-r} binom(n-r-k, 2) log C_k
QSeries loop_q(const CIModel& m, const BirkhoffData& bd, const QSeries& mu, int qmax);

// the two-variable loop limit at the distinguished fixed point: the bracket
// e^{-mu(1/x+1/y)} V(x,y,q)/n - 1 vanishes on y = -x, has no pole along the
// rays y = x and y = 2x, and both ray limits equal
// (1/(n L)) q d/dq Loop(q), degree by degree
VerifyOutcome loop_limit_check(const CIModel& m, int qmax);

// -(n/24) log R_0 + (1/24)(sum_a n/l_a - binom(n,2)) mu + (1/2) Loop(q)
// equals the closed genus-one quasimap formula
VerifyOutcome assembly_check(const CIModel& m, int qmax);

// canonical window choices shared by the self-contained suites and the CLI
IUnderline default_underline(const CIModel& m, int qmax);
IFixedPoint default_fixed(const CIModel& m, int qmax, int w_hi);

}  // namespace qgw
