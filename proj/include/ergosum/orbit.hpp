// Copyright 2026 The ergosum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ERGOSUM_ORBIT_HPP
#define ERGOSUM_ORBIT_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "ergosum/cf.hpp"

namespace ergosum {

/// The symbolic point {k theta + phi} = k theta + phi - m, compared and
/// evaluated through enclosures of theta; no position is ever a float.
struct OrbitPoint {
  Integer k;
  Integer m;
  Enclosure val;  // certified value in [0, 1)
};

struct ThreeGapViolation : std::runtime_error {
  explicit ThreeGapViolation(const std::string& what)
      : std::runtime_error(what) {}
};

/// Level-nu orbit {k theta}, k < Q_nu, in sorted order, built by the
/// three-distance successor walk.  Sortedness is certified a posteriori:
/// the walk's increments are the two positive gap forms, every index is
/// visited exactly once, and the increments telescope exactly to 1, which
/// together prove the visiting order is the value order.  The sentinel
/// x_{nu,Q_nu} = 1 is implicit (the final gap wraps to it).
struct OrderedOrbit {
  long nu = 0;
  Integer Q;
  std::vector<Integer> k;         // sorted by value; k[0] = 0
  std::vector<Integer> m;         // value_i = k[i] theta - m[i]
  std::vector<uint8_t> gap_kind;  // gap after i: 0 = short, 1 = long
  Integer sdk, sdm;               // short gap  = sdk theta - sdm
  Integer ldk, ldm;               // long gap   = ldk theta - ldm
};

struct GapProfile {
  Integer count_short;
  Integer count_long;
  Enclosure short_len;  // ||Q_{nu-1} theta||
  Enclosure long_len;   // ||Q_{nu-1} theta|| + ||Q_nu theta||
};

/// Certified points {k theta + phi} for k = k0 .. k0+Q-1; each value
/// enclosure has width at most 2^-64 (theta is refined up front).
std::vector<OrbitPoint> orbit_points(const ThetaSpec& spec, const Rational& phi,
                                     const Integer& Q, const Integer& k0 = 0);

/// Streaming variant for sums too large to materialize.
void for_each_orbit_point(const ThetaSpec& spec, const Rational& phi,
                          const Integer& Q, const Integer& k0,
                          const std::function<void(const OrbitPoint&)>& fn);

OrderedOrbit sorted_orbit(const ThetaSpec& spec, long nu);

/// Value enclosures of a sorted orbit, in order; endpoints dyadic at
/// 2^-prec resolution plus the k-scaled theta width.
std::vector<Enclosure> orbit_values(const ThetaSpec& spec,
                                    const OrderedOrbit& orbit,
                                    unsigned prec = 96);

/// Classify every gap of the sorted orbit against the two Lemma-3 forms by
/// exact integer match and check the predicted counts (Q_nu - Q_{nu-1},
/// Q_{nu-1}).  A gap matching neither form throws ThreeGapViolation.
GapProfile three_gap_profile(const ThetaSpec& spec, const OrderedOrbit& orbit);

/// Counting-only variant that never materializes the orbit.
GapProfile three_gap_profile(const ThetaSpec& spec, long nu);

/// Exact-formula discrepancy D = max_i max(i - Q xi_(i), Q xi_(i) - (i-1))
/// over the certified-sorted values (1-based i), as an enclosure.
Enclosure discrepancy(const ThetaSpec& spec, std::vector<OrbitPoint> points);

/// Fast path for a level orbit.
Enclosure discrepancy(const ThetaSpec& spec, const OrderedOrbit& orbit);

struct BestApproxResult {
  Verdict verdict = Verdict::Undecided;
  bool skipped = false;    // enumeration budget exceeded
  Integer violating_q;     // set when verdict == Fails
};

/// Exhaustive certified check of the best-approximation property:
/// ||Q_nu theta|| < ||q theta|| for 1 <= q < Q_{nu+1}, q != Q_nu.
BestApproxResult best_approx_check(const ThetaSpec& spec, long nu,
                                   const Integer& budget = Integer(1000000));

/// gaps.csv rows: level,count_short,count_long,short_lo,short_hi,long_lo,long_hi
void write_gaps_csv(std::ostream& os,
                    const std::vector<std::pair<long, GapProfile>>& rows);
/// orbit.csv rows: k,m,value_lo,value_hi
void write_orbit_csv(std::ostream& os, const std::vector<OrbitPoint>& pts);

}  // namespace ergosum

#endif  // ERGOSUM_ORBIT_HPP
