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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace graev {

using PointId = std::uint32_t;

/// Interned point names. Ids are dense indices in insertion order.
/// Names are [A-Za-z0-9_]+; `e` is reserved for the identity letter.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<std::string> names);

  /// k points named a, b, c, ... (then p26, p27, ... past z, skipping e).
  static PointSet standard(std::size_t k);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(PointId id) const { return names_.at(id); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<PointId> find(std::string_view name) const;
  /// Throws Error(kUnknownPoint).
  PointId id(std::string_view name) const;
  /// Adds the name if missing.
  PointId intern(std::string_view name);

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.names_ == b.names_;
  }

  static bool valid_name(std::string_view name);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, PointId> index_;
};

/// A symbol of the extended alphabet: x, x^-1, or the identity e.
struct Letter {
  static constexpr PointId kIdentityPoint = std::numeric_limits<PointId>::max();

  PointId point = kIdentityPoint;
  int sign = 0;  // +1 or -1; 0 only for e

  static constexpr Letter identity() { return {}; }
  static constexpr Letter positive(PointId p) { return {p, +1}; }
  static constexpr Letter negative(PointId p) { return {p, -1}; }

  constexpr bool is_identity() const { return point == kIdentityPoint; }
  constexpr Letter inverse() const {
    return is_identity() ? *this : Letter{point, -sign};
  }

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  // Point order, x before x^-1, e last.
  friend constexpr std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.point <=> b.point; c != 0) return c;
    return b.sign <=> a.sign;
  }
};

/// A word over the extended alphabet; may be unreduced and may contain e.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  const Letter& operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const Word&, const Word&) = default;
};

/// A freely reduced word without e. The empty word is the group identity.
class ReducedWord {
 public:
  ReducedWord() = default;

  /// Throws Error(kNotReduced) if the letters contain e or a pair x x^-1.
  static ReducedWord from_letters(std::vector<Letter> letters);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  Word as_word() const { return Word(letters_); }

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  /// Shortlex order: length first, then letters.
  friend std::strong_ordering operator<=>(const ReducedWord& a, const ReducedWord& b);

 private:
  struct Trusted {};
  ReducedWord(std::vector<Letter> letters, Trusted) : letters_(std::move(letters)) {}

  friend ReducedWord reduce(const Word& w);
  friend ReducedWord multiply(const ReducedWord& g, const ReducedWord& h);
  friend ReducedWord invert(const ReducedWord& g);
  friend std::vector<ReducedWord> enumerate_reduced_words(std::size_t, std::size_t,
                                                          std::size_t);

  std::vector<Letter> letters_;
};

struct ReducedWordHash {
  std::size_t operator()(const ReducedWord& w) const noexcept;
};

ReducedWord reduce(const Word& w);
ReducedWord multiply(const ReducedWord& g, const ReducedWord& h);
ReducedWord invert(const ReducedWord& g);

/// Number of letters, e included.
inline std::size_t length(const Word& w) { return w.size(); }
/// {x_1, ..., x_n, x_1^-1, ..., x_n^-1} without e.
std::set<Letter> support(const Word& w);
/// Sum of signs; e contributes 0.
int exponent_sum(const Word& w);
int exponent_sum(const ReducedWord& w);
/// No adjacent x x^-1 for any x in the extended alphabet (so no e e either).
bool is_almost_irreducible(const Word& w);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// 1 + sum_{j=1..n} 2k(2k-1)^{j-1}, saturating at SIZE_MAX.
std::size_t count_reduced_words(std::size_t point_count, std::size_t max_length);

/// All reduced words of length <= max_length over points 0..point_count-1,
/// in shortlex order. Throws kCapExceeded when the count exceeds cap.
std::vector<ReducedWord> enumerate_reduced_words(std::size_t point_count,
                                                 std::size_t max_length,
                                                 std::size_t cap = kDefaultEnumerationCap);

// Text syntax: whitespace-separated tokens `name` or `name^-1`; `e` is the
// identity letter; the empty string is the empty word.

/// Unknown names are interned when `intern` is set, otherwise kUnknownPoint.
Word parse_word(std::string_view text, PointSet& points, bool intern);
Word parse_word(std::string_view text, const PointSet& points);
/// Parses, then freely reduces.
ReducedWord parse_reduced_word(std::string_view text, const PointSet& points);

std::string format_letter(const Letter& letter, const PointSet& points);
/// Empty word formats as the empty string.
std::string format_word(const Word& w, const PointSet& points);
/// The identity formats as `e` so that it survives a round trip.
std::string format_word(const ReducedWord& w, const PointSet& points);

}  // namespace graev
