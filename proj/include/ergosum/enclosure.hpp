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

#ifndef ERGOSUM_ENCLOSURE_HPP
#define ERGOSUM_ENCLOSURE_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ergosum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Outcome of a certified inequality check.  `Undecided` means the
/// enclosures straddle the threshold at the refinement cap; it is never
/// silently collapsed to a boolean.
enum class Verdict { Holds, Fails, Undecided };

const char* to_string(Verdict v);

/// Result of a certified three-way comparison.  `Equal` is returned only
/// when the two quantities are provably identical (same symbolic form);
/// comparisons of distinct irrational values always resolve to
/// `Less`/`Greater` after refinement.
enum class Cmp { Less, Equal, Greater };

struct RefinementCapError : std::runtime_error {
  explicit RefinementCapError(const std::string& what)
      : std::runtime_error(what) {}
};

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// A rational interval [lo, hi] certified to contain an exact real value.
///
/// All arithmetic on enclosures is outward: the result interval contains
/// the exact image set {x op y : x in X, y in Y}.  Rational operations are
/// computed exactly, so the only widening comes from the operands
/// themselves or from explicit `round_out` calls, which trade interval
/// width (at most 2^-prec per endpoint) for bounded representation size.
class Enclosure {
 public:
  Enclosure() : lo_(0), hi_(0) {}
  explicit Enclosure(const Rational& v) : lo_(v), hi_(v) {}
  Enclosure(Rational lo, Rational hi);

  static Enclosure hull(const Enclosure& a, const Enclosure& b);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Enclosure& o) const {
    return lo_ <= o.lo_ && o.hi_ <= hi_;
  }
  bool intersects(const Enclosure& o) const {
    return lo_ <= o.hi_ && o.lo_ <= hi_;
  }

  Enclosure operator-() const { return Enclosure(-hi_, -lo_); }
  Enclosure operator+(const Enclosure& o) const;
  Enclosure operator-(const Enclosure& o) const;
  Enclosure operator*(const Enclosure& o) const;
  /// Throws std::domain_error if the divisor encloses zero.
  Enclosure operator/(const Enclosure& o) const;
  Enclosure& operator+=(const Enclosure& o) { return *this = *this + o; }
  Enclosure& operator-=(const Enclosure& o) { return *this = *this - o; }
  Enclosure& operator*=(const Enclosure& o) { return *this = *this * o; }

  Enclosure operator+(const Rational& r) const {
    return Enclosure(lo_ + r, hi_ + r);
  }
  Enclosure operator-(const Rational& r) const {
    return Enclosure(lo_ - r, hi_ - r);
  }
  Enclosure operator*(const Rational& r) const;

  /// Enclosure of |x|.
  Enclosure abs() const;

  /// Widen endpoints outward to denominators 2^prec.  Containment is
  /// preserved; each endpoint moves by less than 2^-prec.
  Enclosure round_out(unsigned prec) const;

  /// Certified strict comparison against a rational threshold.
  Verdict certified_less(const Rational& t) const {
    if (hi_ < t) return Verdict::Holds;
    if (lo_ >= t) return Verdict::Fails;
    return Verdict::Undecided;
  }
  Verdict certified_leq(const Rational& t) const {
    if (hi_ <= t) return Verdict::Holds;
    if (lo_ > t) return Verdict::Fails;
    return Verdict::Undecided;
  }
  Verdict certified_greater(const Rational& t) const {
    if (lo_ > t) return Verdict::Holds;
    if (hi_ <= t) return Verdict::Fails;
    return Verdict::Undecided;
  }

  std::string str() const;

 private:
  Rational lo_, hi_;
};

/// max/min of two enclosures (enclosure of the pointwise max/min).
Enclosure emax(const Enclosure& a, const Enclosure& b);
Enclosure emin(const Enclosure& a, const Enclosure& b);

/// Enclosure of sqrt(x); requires x.lo() >= 0.  Endpoints are dyadic with
/// denominator 2^prec.
Enclosure sqrt_enclosure(const Enclosure& x, unsigned prec);

/// Largest rational with denominator 2^prec that is <= x, resp. smallest >= x.
Rational dyadic_floor(const Rational& x, unsigned prec);
Rational dyadic_ceil(const Rational& x, unsigned prec);

/// Canonical "p/q" rendering used in every report and file format.
std::string rat_str(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace ergosum

#endif  // ERGOSUM_ENCLOSURE_HPP
