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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace graev {

/// Exact rational; every distance, prenorm value and radius uses it.
using Rational = boost::multiprecision::mpq_rational;

/// Parses `p/q` or an integer, optionally signed. Throws Error(kParse).
Rational parse_rational(std::string_view text);

/// `p/q` in lowest terms, or `p` when the denominator is 1.
std::string format_rational(const Rational& value);

/// Values of a table rescaled to integers over one shared denominator, so
/// that hot minimisation loops run on int64 instead of GMP. The scale is the
/// lcm of all denominators; construction fails with kDenominatorRange when it
/// exceeds kMaxScale or a numerator exceeds kMaxNumerator.
class ScaledValues {
 public:
  static constexpr std::int64_t kMaxScale = std::int64_t{1} << 40;
  static constexpr std::int64_t kMaxNumerator = std::int64_t{1} << 44;

  ScaledValues() = default;
  explicit ScaledValues(std::span<const Rational> values);

  std::int64_t scale() const noexcept { return scale_; }
  std::int64_t operator[](std::size_t i) const { return numerators_[i]; }
  std::size_t size() const noexcept { return numerators_.size(); }

  /// numerator / (divisor * scale) as an exact rational.
  Rational unscale(std::int64_t numerator, std::int64_t divisor = 1) const;

 private:
  std::int64_t scale_ = 1;
  std::vector<std::int64_t> numerators_;
};

}  // namespace graev
