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

#ifndef ERGOSUM_MODULUS_HPP
#define ERGOSUM_MODULUS_HPP

#include <functional>
#include <string>

#include "ergosum/enclosure.hpp"

namespace ergosum {

/// Monotone upper bound omega(delta) for a modulus of continuity, with
/// omega(0) = 0.  The evaluator must be outward on intervals (monotonicity
/// makes [omega(lo).lo, omega(hi).hi] valid).
struct ModulusBound {
  std::function<Enclosure(const Enclosure& delta)> omega;
  std::string cls;

  Enclosure operator()(const Enclosure& delta) const { return omega(delta); }
  Enclosure operator()(const Rational& delta) const {
    return omega(Enclosure(delta));
  }

  /// omega(d) = c d.
  static ModulusBound lipschitz(const Rational& c);
  /// omega(d) = min(cap, c pi d); the Lipschitz class of c' = c pi.
  static ModulusBound lipschitz_pi_multiple(const Rational& c,
                                            const Rational& cap);
  static ModulusBound zero();
};

}  // namespace ergosum

#endif  // ERGOSUM_MODULUS_HPP
