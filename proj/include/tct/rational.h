// Copyright 2026 The tct-solver Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TCT_RATIONAL_H_
#define TCT_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tct {

// Exact arithmetic for delays, costs, deadlines and LP values.
using Rational = mpq_class;

// A nonnegative rational or the distinguished value INFINITE, which is
// ordered above every rational. Sums involving INFINITE are INFINITE.
class Extended {
 public:
  Extended() = default;
  Extended(const Rational& value) : value_(value) {}  // NOLINT
  Extended(long value) : value_(value) {}             // NOLINT

  static Extended Infinite() {
    Extended e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  // Requires is_finite().
  const Rational& value() const;

  Extended& operator+=(const Extended& other);
  friend Extended operator+(Extended a, const Extended& b) { return a += b; }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator!=(const Extended& a, const Extended& b) {
    return !(a == b);
  }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator<=(const Extended& a, const Extended& b) {
    return !(b < a);
  }
  friend bool operator>=(const Extended& a, const Extended& b) {
    return !(a < b);
  }

 private:
  bool infinite_ = false;
  Rational value_ = 0;
};

// Parses "p/q", an integer, or a decimal literal such as "0.25" or "1e-3"
// into an exact rational. Throws TctError on malformed input.
Rational ParseRational(std::string_view text);

// As ParseRational, additionally accepting "inf".
Extended ParseExtended(std::string_view text);

// Exact rational value of a finite double. Uses the shortest decimal that
// round-trips, so 0.3 becomes 3/10.
Rational RationalFromDouble(double value);

// "p" for integers, "p/q" otherwise.
// num/den in lowest terms. mpq_class(num, den) does not canonicalize and
// GMP arithmetic requires canonical operands.
inline Rational Frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string ToString(const Rational& value);
std::string ToString(const Extended& value);

double ToDouble(const Rational& value);
// +infinity for INFINITE.
double ToDouble(const Extended& value);

Rational Ceil(const Rational& value);
Rational Floor(const Rational& value);

}  // namespace tct

#endif  // TCT_RATIONAL_H_
