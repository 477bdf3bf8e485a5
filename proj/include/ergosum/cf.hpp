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

#ifndef ERGOSUM_CF_HPP
#define ERGOSUM_CF_HPP

#include <vector>

#include "ergosum/modulus.hpp"
#include "ergosum/theta_spec.hpp"

namespace ergosum::cf {

/// Hard cap on adaptive refinement: how many continued-fraction levels a
/// certified comparison may descend past its starting point before giving up.
inline constexpr long kRefineCap = 64;

/// Convergent records for nu = -1 .. nu_max.
std::vector<Convergent> convergents(const ThetaSpec& spec, long nu_max);

/// The interval with endpoints P_mu/Q_mu and P_{mu+1}/Q_{mu+1}, ordered.
/// theta is strictly interior; the width is exactly 1/(Q_mu Q_{mu+1}).
Enclosure theta_interval(const ThetaSpec& spec, long mu);

/// theta_interval at the smallest mu whose width is <= width_bound.
Enclosure theta_enclosure(const ThetaSpec& spec, const Rational& width_bound);

/// Enclosure of the tail alpha_{nu+1} = [a_{nu+1}; a_{nu+2}, ...] using
/// `depth` tail quotients (depth >= 1).  depth = 1 gives the one-term
/// bracket (a_{nu+1}, a_{nu+1}+1).
Enclosure alpha_enclosure(const ThetaSpec& spec, long nu, long depth);

/// Enclosure of ||Q_nu theta|| = |Q_nu theta - P_nu|, via the identity
/// ||Q_nu theta|| = 1/(alpha_{nu+1} Q_nu + Q_{nu-1}).
Enclosure quality_enclosure(const ThetaSpec& spec, long nu, long depth = 4);

struct CertifiedCheck {
  Verdict verdict;
  Enclosure certificate;
};

/// Certified check that Q_{nu+1} ||Q_nu theta|| > 1/2.  Refines the alpha
/// bracket up to max_depth tail quotients; an enclosure still straddling
/// 1/2 yields Undecided, never a false verdict.
CertifiedCheck verify_q12(const ThetaSpec& spec, long nu, long max_depth = 16);

/// Exact rationals Q_{nu-1}/a_{nu+1} for nu in [nu_lo, nu_hi].
std::vector<Rational> condition_oo1_trace(const ThetaSpec& spec, long nu_lo,
                                          long nu_hi);

/// Outward-rounded Q_nu * omega(||Q_nu theta||) for nu in [nu_lo, nu_hi].
std::vector<Enclosure> condition_oo1o_trace(const ThetaSpec& spec,
                                            const ModulusBound& omega,
                                            long nu_lo, long nu_hi);

/// Certified sign of a*theta - b for integers a, b.  Equal is returned only
/// for a = b = 0; otherwise refinement always decides (theta is irrational).
Cmp sign_linear(const ThetaSpec& spec, const Integer& a, const Integer& b,
                long start_level = 2);

/// theta_interval refined until its width is <= w.
Enclosure theta_to_width(const ThetaSpec& spec, const Rational& w);

}  // namespace ergosum::cf

#endif  // ERGOSUM_CF_HPP
