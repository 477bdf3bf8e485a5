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

#include "ergosum/cf.hpp"

#include "ergosum/sinpi.hpp"

namespace ergosum::cf {

std::vector<Convergent> convergents(const ThetaSpec& spec, long nu_max) {
  if (nu_max < 0) throw std::invalid_argument("convergents: nu_max < 0");
  std::vector<Convergent> out;
  out.reserve(nu_max + 2);
  for (long nu = -1; nu <= nu_max; ++nu) out.push_back(spec.convergent(nu));
  return out;
}

Enclosure theta_interval(const ThetaSpec& spec, long mu) {
  Convergent c0 = spec.convergent(mu), c1 = spec.convergent(mu + 1);
  Rational r0(c0.P, c0.Q), r1(c1.P, c1.Q);
  r0.canonicalize();
  r1.canonicalize();
  return r0 < r1 ? Enclosure(r0, r1) : Enclosure(r1, r0);
}

Enclosure theta_enclosure(const ThetaSpec& spec, const Rational& width_bound) {
  if (sgn(width_bound) <= 0)
    throw std::invalid_argument("theta_enclosure: width_bound <= 0");
  for (long mu = 0;; ++mu) {
    Convergent c0 = spec.convergent(mu), c1 = spec.convergent(mu + 1);
    Rational width(1, c0.Q * c1.Q);
    width.canonicalize();
    if (width <= width_bound) return theta_interval(spec, mu);
  }
}

Enclosure theta_to_width(const ThetaSpec& spec, const Rational& w) {
  return theta_enclosure(spec, w);
}

Enclosure alpha_enclosure(const ThetaSpec& spec, long nu, long depth) {
  if (depth < 1) throw std::invalid_argument("alpha_enclosure: depth < 1");
  // Finite continued fraction of the tail quotients, evaluated twice: once
  // with the last used quotient as-is and once with it bumped by one.  Every
  // infinite extension lies strictly between the two values.
  Integer hp(1), kp(0);   // convergent j-1 of the tail
  Integer hpp(0), kpp(1); // convergent j-2
  Rational v0, v1;
  for (long j = 0; j < depth; ++j) {
    Integer a = spec.quotient(nu + 1 + j);
    Integer h = a * hp + hpp;
    Integer k = a * kp + kpp;
    if (j == depth - 1) {
      v0 = Rational(h, k);
      v0.canonicalize();
      v1 = Rational(h + hp, k + kp);  // last quotient bumped by one
      v1.canonicalize();
      break;
    }
    hpp = hp;
    kpp = kp;
    hp = h;
    kp = k;
  }
  return v0 < v1 ? Enclosure(v0, v1) : Enclosure(v1, v0);
}

Enclosure quality_enclosure(const ThetaSpec& spec, long nu, long depth) {
  if (nu < 0) throw std::invalid_argument("quality_enclosure: nu < 0");
  Convergent c = spec.convergent(nu), cm1 = spec.convergent(nu - 1);
  Enclosure alpha = alpha_enclosure(spec, nu, depth);
  Rational lo = Rational(1) / (alpha.hi() * c.Q + cm1.Q);
  Rational hi = Rational(1) / (alpha.lo() * c.Q + cm1.Q);
  return Enclosure(lo, hi);
}

CertifiedCheck verify_q12(const ThetaSpec& spec, long nu, long max_depth) {
  Convergent c1 = spec.convergent(nu + 1);
  const Rational half(1, 2);
  Enclosure prod;
  for (long depth = 1; depth <= max_depth; depth *= 2) {
    prod = quality_enclosure(spec, nu, depth) * Rational(c1.Q);
    if (prod.lo() > half) return {Verdict::Holds, prod};
    if (prod.hi() <= half) return {Verdict::Fails, prod};
    if (depth == max_depth) break;
    if (depth * 2 > max_depth) depth = max_depth / 2;  // land on max_depth
  }
  return {Verdict::Undecided, prod};
}

std::vector<Rational> condition_oo1_trace(const ThetaSpec& spec, long nu_lo,
                                          long nu_hi) {
  std::vector<Rational> out;
  for (long nu = nu_lo; nu <= nu_hi; ++nu) {
    Rational r(spec.convergent(nu - 1).Q, spec.quotient(nu + 1));
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

std::vector<Enclosure> condition_oo1o_trace(const ThetaSpec& spec,
                                            const ModulusBound& omega,
                                            long nu_lo, long nu_hi) {
  std::vector<Enclosure> out;
  for (long nu = nu_lo; nu <= nu_hi; ++nu) {
    Enclosure q = quality_enclosure(spec, nu, 8);
    out.push_back(omega(q) * Rational(spec.convergent(nu).Q));
  }
  return out;
}

Cmp sign_linear(const ThetaSpec& spec, const Integer& a, const Integer& b,
                long start_level) {
  if (sgn(a) == 0) {
    int s = -sgn(b);
    return s < 0 ? Cmp::Less : (s > 0 ? Cmp::Greater : Cmp::Equal);
  }
  for (long mu = start_level; mu <= start_level + kRefineCap; mu += 2) {
    Enclosure th = theta_interval(spec, mu);
    Enclosure v = th * Rational(a) - Rational(b);
    if (sgn(v.lo()) > 0) return Cmp::Greater;
    if (sgn(v.hi()) < 0) return Cmp::Less;
  }
  throw RefinementCapError("sign_linear: comparison undecided after " +
                           std::to_string(kRefineCap) + " extra levels");
}

}  // namespace ergosum::cf
