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

#include "tct/rational.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "tct/error.h"

namespace tct {

const Rational& Extended::value() const {
  if (infinite_) {
    throw TctError(ErrorKind::kInternal, "value() called on INFINITE");
  }
  return value_;
}

Extended& Extended::operator+=(const Extended& other) {
  if (infinite_ || other.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += other.value_;
  }
  return *this;
}

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!AllDigits(text)) {
    ThrowInvalid("malformed rational '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(text), 10);
  return negative ? mpz_class(-z) : z;
}

Rational ParseDecimal(std::string_view text) {
  std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(
        exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
      ThrowInvalid("malformed exponent in '" + std::string(whole) + "'");
    }
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !AllDigits(int_part)) ||
        (!frac_part.empty() && !AllDigits(frac_part))) {
      ThrowInvalid("malformed decimal '" + std::string(whole) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!AllDigits(text)) {
      ThrowInvalid("malformed number '" + std::string(whole) + "'");
    }
    digits = std::string(text);
  }
  if (std::labs(exponent) > 4000) {
    ThrowInvalid("exponent out of range in '" + std::string(whole) + "'");
  }
  mpz_class mantissa(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational result = exponent >= 0 ? Rational(mantissa * scale)
                                  : Rational(mantissa, scale);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) ThrowInvalid("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = ParseInteger(text.substr(0, slash), text);
    mpz_class den = ParseInteger(text.substr(slash + 1), text);
    if (den == 0) ThrowInvalid("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return ParseDecimal(text);
}

Extended ParseExtended(std::string_view text) {
  if (text == "inf" || text == "INF" || text == "infinity") {
    return Extended::Infinite();
  }
  return Extended(ParseRational(text));
}

Rational RationalFromDouble(double value) {
  if (!std::isfinite(value)) ThrowInvalid("non-finite number");
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) {
    throw TctError(ErrorKind::kInternal, "to_chars failed");
  }
  return ParseDecimal(std::string_view(buffer, ptr - buffer));
}

std::string ToString(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string ToString(const Extended& value) {
  return value.is_infinite() ? "inf" : ToString(value.value());
}

double ToDouble(const Rational& value) { return value.get_d(); }

double ToDouble(const Extended& value) {
  return value.is_infinite() ? std::numeric_limits<double>::infinity()
                             : value.value().get_d();
}

Rational Ceil(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

Rational Floor(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

}  // namespace tct
