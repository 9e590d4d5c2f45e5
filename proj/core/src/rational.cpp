// Copyright 2026 The graev Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graev/rational.hpp"

#include <cctype>
#include <numeric>

#include "graev/error.hpp"

namespace graev {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kUnknownPoint: return "UnknownPoint";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kNegativeDistance: return "NegativeDistance";
    case ErrorCode::kZeroDiagonalViolation: return "ZeroDiagonalViolation";
    case ErrorCode::kTriangleViolation: return "TriangleViolation";
    case ErrorCode::kNotBoundedByOne: return "NotBoundedByOne";
    case ErrorCode::kDenominatorRange: return "DenominatorRange";
    case ErrorCode::kNotOpen: return "NotOpen";
    case ErrorCode::kPreconditionViolation: return "PreconditionViolation";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kPointSetMismatch: return "PointSetMismatch";
    case ErrorCode::kNotInvolution: return "NotInvolution";
    case ErrorCode::kFixedPoint: return "FixedPoint";
    case ErrorCode::kCrossing: return "Crossing";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kTargetMismatch: return "TargetMismatch";
    case ErrorCode::kMissingEmpty: return "MissingEmpty";
    case ErrorCode::kMissingFull: return "MissingFull";
    case ErrorCode::kNotClosedUnderUnion: return "NotClosedUnderUnion";
    case ErrorCode::kNotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case ErrorCode::kNotT1: return "NotT1";
    case ErrorCode::kConditionViolation: return "ConditionViolation";
    case ErrorCode::kNotReduced: return "NotReduced";
    case ErrorCode::kNotSeparable: return "NotSeparable";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
  }
  boost::multiprecision::mpz_int n{std::string(num)};
  boost::multiprecision::mpz_int d{std::string(den)};
  if (d == 0) {
    throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  }
  Rational value(n, d);
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) { return value.str(); }

ScaledValues::ScaledValues(std::span<const Rational> values) {
  using boost::multiprecision::mpz_int;
  mpz_int scale = 1;
  for (const auto& v : values) {
    mpz_int den = boost::multiprecision::denominator(v);
    scale = boost::multiprecision::lcm(scale, den);
    if (scale > kMaxScale) {
      throw Error(ErrorCode::kDenominatorRange,
                  "common denominator exceeds 2^40; use smaller denominators");
    }
  }
  scale_ = scale.convert_to<std::int64_t>();
  numerators_.reserve(values.size());
  for (const auto& v : values) {
    mpz_int n = boost::multiprecision::numerator(v) *
                (scale / boost::multiprecision::denominator(v));
    if (abs(n) > kMaxNumerator) {
      throw Error(ErrorCode::kDenominatorRange,
                  "scaled value " + v.str() + " exceeds 2^44");
    }
    numerators_.push_back(n.convert_to<std::int64_t>());
  }
}

Rational ScaledValues::unscale(std::int64_t numerator, std::int64_t divisor) const {
  return Rational(boost::multiprecision::mpz_int(numerator),
                  boost::multiprecision::mpz_int(divisor) * scale_);
}

}  // namespace graev
