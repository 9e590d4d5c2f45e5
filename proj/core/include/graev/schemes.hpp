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

#include "graev/metrics.hpp"
#include "graev/rational.hpp"
#include "graev/words.hpp"

namespace graev {

/// A non-crossing fixed-point-free involution on 2n positions. Positions are
/// 0-based in the API and 1-based in the text form `1-4 2-3`.
class Scheme {
 public:
  /// `map[i]` is the 0-based partner of position i; the map must cover
  /// 2n positions. Throws kFixedPoint(i), kNotInvolution(i) or
  /// kCrossing(i, j) with i < j < map[i] < map[j], indices reported 1-based.
  static Scheme validate(std::size_t n, std::span<const std::size_t> map);

  /// The nested scheme on 2n positions: i <-> 2n - 1 - i.
  static Scheme nested(std::size_t n);

  std::size_t n() const noexcept { return partner_.size() / 2; }
  std::size_t size() const noexcept { return partner_.size(); }
  std::size_t partner(std::size_t i) const { return partner_[i]; }
  std::span<const std::uint32_t> map() const noexcept { return partner_; }

  friend bool operator==(const Scheme&, const Scheme&) = default;

 private:
  explicit Scheme(std::vector<std::uint32_t> partner) : partner_(std::move(partner)) {}
  friend std::vector<Scheme> enumerate_schemes(std::size_t, std::size_t);

  std::vector<std::uint32_t> partner_;
};

bool is_nested(const Scheme& s);

inline constexpr std::size_t kDefaultSchemeCap = 8;

/// All schemes on 2n positions, Catalan(n) of them, ordered by the partner of
/// the first position (2, 4, ..., 2n), then recursively inside and after it.
/// n = 0 yields the single empty scheme. Throws kCapExceeded for n > cap.
std::vector<Scheme> enumerate_schemes(std::size_t n, std::size_t cap = kDefaultSchemeCap);

/// Text form: whitespace-separated 1-based pairs `i-j`.
Scheme parse_scheme(std::string_view text);
std::string format_scheme(const Scheme& s);

/// A word over the extended alphabet of even length together with the
/// reduced word it represents.
struct Representation {
  Word word;
  ReducedWord target;

  /// Throws kLengthMismatch for odd length.
  static Representation of(Word word);
  /// Throws kLengthMismatch for odd length, kTargetMismatch if
  /// reduce(word) != target.
  static Representation checked(Word word, ReducedWord target);
};

/// Half the sum over positions i of d*(x_i^-1, x_partner(i)).
/// Throws kLengthMismatch when the word and scheme sizes differ.
Rational gamma(const ExtendedMetric& dstar, const Word& word, const Scheme& s);
inline Rational gamma(const ExtendedMetric& dstar, const Representation& rep, const Scheme& s) {
  return gamma(dstar, rep.word, s);
}

struct NestedRepresentation {
  Representation rep;
  Scheme scheme;
};

/// Rewrites (rep, s) into a representation of the same reduced word, with
/// the same support, carrying a nested scheme of equal cost. The recursion
/// peels an outer pair when s(1) = 2n, and otherwise splits off the first
/// closed block Y and the rest Z, emitting Y' Z' P Q where P Q = 1 pads Y'
/// so that one nested scheme covers everything. The output may be longer
/// than the input. The cost equality is re-checked against dstar.
NestedRepresentation nested_normalize(const Representation& rep, const Scheme& s,
                                      const ExtendedMetric& dstar);

}  // namespace graev
