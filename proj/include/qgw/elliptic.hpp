#pragma once

// Genus-one generating functions.  The quasimap side is a closed formula
// in the discriminant and the Birkhoff constants; the wall-crossing
// correction moves it to the Gromov-Witten side, and the mirror map
// carries the result into the flat coordinate Q, where the per-degree
// invariants N_{1,d} are read off.

#include <utility>
#include <vector>

#include "qgw/birkhoff.hpp"
#include "qgw/geometry.hpp"
#include "qgw/ifunction.hpp"

namespace qgw {

struct G1Report {
  CIModel model;
  QSeries f_quasimap;  // elliptic quasimap generating function in q
  QSeries correction;  // wall-crossing correction
  QSeries f_gw_in_q;   // f_quasimap + correction = GW series pulled back to q
  QSeries mirror_q;    // Q(q) = q e^{f/I_0}, starts q + O(q^2)
  QSeries f_gw;        // GW series in the flat coordinate Q
  std::vector<std::pair<int, Rat>> invariants;  // (d, N_{1,d}), d = 1..qmax
};

// -((3(n-1-r)^2 + n - r - 3)/48) log(1 - q prod l^l)
//   - (1/2) sum_{k=0}^{n-2-r} binom(n-r-k, 2) log C_k
QSeries quasimap_g1(const CIModel& m, const BirkhoffData& bd, int qmax);

// (1/24) chi_top log I_0 + (1/24) (f/I_0) * int_X H c_{dim-1}(TX),
// where I_1/I_0 = (f/I_0) H
QSeries wall_correction(const CIModel& m, const SmallI& si, const ChernData& cd);

struct MirrorMap {
  QSeries g;      // f / I_0
  QSeries big_q;  // Q(q) = q e^g
};

MirrorMap mirror_map(const SmallI& si);

// compositional inverse q(Q) of Q(q) = q + O(q^2); q(Q(q)) = q exactly at
// the shared truncation order
QSeries invert_map(const QSeries& big_q);

// one-pass transcription of the combined mirror formula (with I_0 taken
// from the Birkhoff route); must agree with quasimap_g1 + wall_correction
// term by term, which cross-checks the wiring of both assemblies
QSeries g1_gw_in_q_direct(const CIModel& m, const BirkhoffData& bd,
                          const SmallI& si, const ChernData& cd, int qmax);

// full pipeline for one model
G1Report gw_g1(const CIModel& m, int qmax);

}  // namespace qgw
