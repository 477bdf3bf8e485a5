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

#include "ergosum/sinpi.hpp"

namespace ergosum {

namespace {

// Partial sums of the alternating series atan(1/x) = sum (-1)^k/((2k+1)x^(2k+1))
// bracket the value; `terms` must make the first omitted term small enough.
void atan_inv_brackets(unsigned long x, int terms, Rational& lo, Rational& hi) {
  Rational even_sum(0), odd_sum(0);  // partial sums ending on even/odd k
  Rational term;
  Integer xpow(x);
  Rational acc(0);
  for (int k = 0; k < terms; ++k) {
    term = Rational(1, (2 * k + 1) * xpow);
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
    if (k % 2 == 0)
      even_sum = acc;  // overshoot
    else
      odd_sum = acc;  // undershoot
    xpow *= x * x;
  }
  lo = odd_sum;
  hi = even_sum;
}

Enclosure compute_pi() {
  Rational l5, h5, l239, h239;
  atan_inv_brackets(5, 76, l5, h5);
  atan_inv_brackets(239, 24, l239, h239);
  Rational lo = 16 * l5 - 4 * h239;
  Rational hi = 16 * h5 - 4 * l239;
  return Enclosure(lo, hi).round_out(336);
}

// Dyadic fixed-point interval: the real value lies in [lo, hi] / 2^prec.
struct Fix {
  Integer lo, hi;
};

// a*b/2^prec with directed rounding; requires a, b >= 0.
Fix mul_pos(const Fix& a, const Fix& b, unsigned prec) {
  Fix r;
  Integer t = a.lo * b.lo;
  mpz_fdiv_q_2exp(r.lo.get_mpz_t(), t.get_mpz_t(), prec);
  t = a.hi * b.hi;
  mpz_cdiv_q_2exp(r.hi.get_mpz_t(), t.get_mpz_t(), prec);
  return r;
}

Fix div_ui(const Fix& a, unsigned long d) {
  Fix r;
  mpz_fdiv_q_ui(r.lo.get_mpz_t(), a.lo.get_mpz_t(), d);
  mpz_cdiv_q_ui(r.hi.get_mpz_t(), a.hi.get_mpz_t(), d);
  return r;
}

// Taylor core on [0, 1/2]: sin(pi q), result endpoints at 2^-prec.
Enclosure sinpi_core(const Rational& q, unsigned prec) {
  if (sgn(q) == 0) return Enclosure(Rational(0));
  if (q == Rational(1, 2)) return Enclosure(Rational(1));
  if (q == Rational(1, 6)) return Enclosure(Rational(1, 2));
  const unsigned P = prec + 32;
  const Enclosure& pi = pi_enclosure();

  // z = pi * q in fixed point (q > 0).
  Fix z;
  {
    Integer nl = pi.lo().get_num() * q.get_num();
    nl <<= P;
    Integer dl = pi.lo().get_den() * q.get_den();
    mpz_fdiv_q(z.lo.get_mpz_t(), nl.get_mpz_t(), dl.get_mpz_t());
    Integer nh = pi.hi().get_num() * q.get_num();
    nh <<= P;
    Integer dh = pi.hi().get_den() * q.get_den();
    mpz_cdiv_q(z.hi.get_mpz_t(), nh.get_mpz_t(), dh.get_mpz_t());
  }
  Fix z2 = mul_pos(z, z, P);

  // sum = z - z^3/3! + z^5/5! - ...; term magnitudes are computed as a
  // positive interval and added with the alternating sign.
  Fix term = z;
  Integer sum_lo = z.lo, sum_hi = z.hi;
  Integer tail_hi;
  int k = 1;
  for (;; ++k) {
    term = mul_pos(term, z2, P);
    term = div_ui(term, (unsigned long)(2 * k) * (2 * k + 1));
    if (term.hi <= 1 && k >= 3) {  // below one ulp; fold into remainder
      tail_hi = term.hi + 1;
      break;
    }
    if (k % 2 == 1) {
      sum_lo -= term.hi;
      sum_hi -= term.lo;
    } else {
      sum_lo += term.lo;
      sum_hi += term.hi;
    }
    if (k > 64) {  // |z| <= pi/2 converges long before this
      tail_hi = term.hi + 1;
      break;
    }
  }
  sum_lo -= tail_hi;
  sum_hi += tail_hi;

  Rational lo(sum_lo, Integer(1) << P), hi(sum_hi, Integer(1) << P);
  lo.canonicalize();
  hi.canonicalize();
  return Enclosure(std::min(lo, Rational(1)), std::min(hi, Rational(1)))
      .round_out(prec);
}

// Reduce to [0, 1] with sign, then to [0, 1/2] by sin(pi(1-q)) = sin(pi q).
Enclosure sinpi_reduced(Rational q, unsigned prec) {
  bool neg = false;
  if (q > 1) {
    q = 2 - q;  // q in (1, 2): sin(pi q) = -sin(pi (2 - q))
    neg = true;
  }
  if (q > Rational(1, 2)) q = 1 - q;
  Enclosure s = sinpi_core(q, prec);
  return neg ? -s : s;
}

}  // namespace

const Enclosure& pi_enclosure() {
  static const Enclosure pi = compute_pi();
  return pi;
}

Enclosure sinpi_point(const Rational& q, unsigned prec) {
  // exact reduction mod 2
  Rational half = q / 2;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(),
             half.get_den().get_mpz_t());
  Rational r = q - 2 * Rational(fl);
  return sinpi_reduced(r, prec);
}

Enclosure sinpi(const Enclosure& x, unsigned prec) {
  if (x.is_point()) return sinpi_point(x.lo(), prec);
  if (x.width() >= 2) return Enclosure(Rational(-1), Rational(1));
  // shift both endpoints by the same even integer into [0, 2) x [0, 4)
  Rational half = x.lo() / 2;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(),
             half.get_den().get_mpz_t());
  Rational a = x.lo() - 2 * Rational(fl);
  Rational b = x.hi() - 2 * Rational(fl);
  Enclosure h = Enclosure::hull(sinpi_reduced(a, prec),
                                b < 2 ? sinpi_reduced(b, prec)
                                      : sinpi_reduced(b - 2, prec));
  Rational lo = h.lo(), hi = h.hi();
  auto inside = [&](const Rational& c) { return a <= c && c <= b; };
  if (inside(Rational(1, 2)) || inside(Rational(5, 2))) hi = 1;
  if (inside(Rational(3, 2)) || inside(Rational(7, 2))) lo = -1;
  return Enclosure(lo, hi);
}

CS unit_circle(const Enclosure& x, unsigned prec) {
  Enclosure two_x = x * Rational(2);
  return CS{sinpi(two_x + Rational(1, 2), prec), sinpi(two_x, prec)};
}

}  // namespace ergosum
