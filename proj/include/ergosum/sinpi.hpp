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

#ifndef ERGOSUM_SINPI_HPP
#define ERGOSUM_SINPI_HPP

#include "ergosum/enclosure.hpp"

namespace ergosum {

/// Certified enclosure of pi (width below 2^-330), computed once from the
/// Machin identity pi = 16 atan(1/5) - 4 atan(1/239) with alternating-series
/// brackets in exact rational arithmetic.
const Enclosure& pi_enclosure();

/// Enclosure of sin(pi q) for rational q.  Argument reduction is exact
/// (q mod 2 and the quarter-wave symmetries are rational operations); the
/// reduced argument is multiplied by the pi enclosure and fed to a Taylor
/// series with a first-omitted-term remainder bound, evaluated in dyadic
/// fixed-point with directed rounding.
Enclosure sinpi_point(const Rational& q, unsigned prec = 160);

/// Range enclosure of sin(pi x) over the interval x.  Uses the exact
/// rational locations of the extrema (half-integers) to decide monotone
/// pieces, so the branch logic never consults pi.
Enclosure sinpi(const Enclosure& x, unsigned prec = 160);

inline Enclosure cospi(const Enclosure& x, unsigned prec = 160) {
  return sinpi(x + Rational(1, 2), prec);
}
inline Enclosure cospi_point(const Rational& q, unsigned prec = 160) {
  return sinpi_point(q + Rational(1, 2), prec);
}

/// cos(2 pi x) and sin(2 pi x) together, i.e. the point e^{2 pi i x}.
struct CS {
  Enclosure cos, sin;
};
CS unit_circle(const Enclosure& x, unsigned prec = 160);
inline CS unit_circle(const Rational& x, unsigned prec = 160) {
  return unit_circle(Enclosure(x), prec);
}

}  // namespace ergosum

#endif  // ERGOSUM_SINPI_HPP
