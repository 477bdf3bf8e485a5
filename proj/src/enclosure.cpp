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

#include "ergosum/enclosure.hpp"

#include <algorithm>

namespace ergosum {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    default:
      return "undecided";
  }
}

Enclosure::Enclosure(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("Enclosure: lo > hi");
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
  return Enclosure(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

Enclosure Enclosure::operator+(const Enclosure& o) const {
  return Enclosure(lo_ + o.lo_, hi_ + o.hi_);
}

Enclosure Enclosure::operator-(const Enclosure& o) const {
  return Enclosure(lo_ - o.hi_, hi_ - o.lo_);
}

Enclosure Enclosure::operator*(const Enclosure& o) const {
  Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  return Enclosure(std::min(std::min(a, b), std::min(c, d)),
                   std::max(std::max(a, b), std::max(c, d)));
}

Enclosure Enclosure::operator/(const Enclosure& o) const {
  if (o.lo_ <= 0 && o.hi_ >= 0)
    throw std::domain_error("Enclosure: division by interval containing 0");
  Rational a = lo_ / o.lo_, b = lo_ / o.hi_, c = hi_ / o.lo_, d = hi_ / o.hi_;
  return Enclosure(std::min(std::min(a, b), std::min(c, d)),
                   std::max(std::max(a, b), std::max(c, d)));
}

Enclosure Enclosure::operator*(const Rational& r) const {
  if (sgn(r) >= 0) return Enclosure(lo_ * r, hi_ * r);
  return Enclosure(hi_ * r, lo_ * r);
}

Enclosure Enclosure::abs() const {
  if (sgn(lo_) >= 0) return *this;
  if (sgn(hi_) <= 0) return -*this;
  return Enclosure(Rational(0), std::max(-lo_, hi_));
}

Enclosure Enclosure::round_out(unsigned prec) const {
  return Enclosure(dyadic_floor(lo_, prec), dyadic_ceil(hi_, prec));
}

std::string Enclosure::str() const {
  return "[" + rat_str(lo_) + ", " + rat_str(hi_) + "]";
}

Enclosure emax(const Enclosure& a, const Enclosure& b) {
  return Enclosure(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Enclosure emin(const Enclosure& a, const Enclosure& b) {
  return Enclosure(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Rational dyadic_floor(const Rational& x, unsigned prec) {
  Integer num = x.get_num() << prec;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
  Rational r(q, Integer(1) << prec);
  r.canonicalize();
  return r;
}

Rational dyadic_ceil(const Rational& x, unsigned prec) {
  Integer num = x.get_num() << prec;
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
  Rational r(q, Integer(1) << prec);
  r.canonicalize();
  return r;
}

Enclosure sqrt_enclosure(const Enclosure& x, unsigned prec) {
  if (sgn(x.lo()) < 0)
    throw std::domain_error("sqrt_enclosure: negative lower endpoint");
  // lower: floor(sqrt(floor(lo * 4^prec))) / 2^prec
  Integer lnum = x.lo().get_num() << (2 * prec);
  Integer lq;
  mpz_fdiv_q(lq.get_mpz_t(), lnum.get_mpz_t(), x.lo().get_den().get_mpz_t());
  Integer ls;
  mpz_sqrt(ls.get_mpz_t(), lq.get_mpz_t());
  // upper: ceil(sqrt(ceil(hi * 4^prec))) / 2^prec
  Integer hnum = x.hi().get_num() << (2 * prec);
  Integer hq;
  mpz_cdiv_q(hq.get_mpz_t(), hnum.get_mpz_t(), x.hi().get_den().get_mpz_t());
  Integer hs;
  mpz_sqrt(hs.get_mpz_t(), hq.get_mpz_t());
  if (hs * hs < hq) hs += 1;
  Rational lo(ls, Integer(1) << prec), hi(hs, Integer(1) << prec);
  lo.canonicalize();
  hi.canonicalize();
  return Enclosure(lo, hi);
}

std::string rat_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
  r.canonicalize();
  if (sgn(r.get_den()) == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + s +
                                "'");
  return r;
}

}  // namespace ergosum
