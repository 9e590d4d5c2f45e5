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

#include "graev/schemes.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "graev/error.hpp"

namespace graev {

Scheme Scheme::validate(std::size_t n, std::span<const std::size_t> map) {
  const std::size_t size = 2 * n;
  if (map.size() != size) {
    throw Error(ErrorCode::kLengthMismatch, "map has " + std::to_string(map.size()) +
                                                " entries, expected " + std::to_string(size));
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (map[i] >= size) {
      throw Error(ErrorCode::kNotInvolution, "position " + std::to_string(i + 1) +
                                                 " maps outside 1.." + std::to_string(size));
    }
    if (map[i] == i) throw Error(ErrorCode::kFixedPoint, "position " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (map[map[i]] != i) {
      throw Error(ErrorCode::kNotInvolution, "position " + std::to_string(i + 1));
    }
  }
  // Non-crossing is bracket matching: opening positions are pushed, and a
  // closing position must match the innermost open one.
  std::vector<std::size_t> open;
  for (std::size_t k = 0; k < size; ++k) {
    if (map[k] > k) {
      open.push_back(k);
      continue;
    }
    if (open.back() != map[k]) {
      std::size_t i = map[k], j = open.back();
      throw Error(ErrorCode::kCrossing, "(" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")");
    }
    open.pop_back();
  }
  return Scheme(std::vector<std::uint32_t>(map.begin(), map.end()));
}

Scheme Scheme::nested(std::size_t n) {
  std::vector<std::uint32_t> p(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) p[i] = static_cast<std::uint32_t>(2 * n - 1 - i);
  return Scheme(std::move(p));
}

bool is_nested(const Scheme& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.partner(i) != s.size() - 1 - i) return false;
  }
  return true;
}

namespace {

// Fills [lo, hi) in every way, calling `emit` after each complete filling.
void enumerate_range(std::vector<std::uint32_t>& partner, std::size_t lo, std::size_t hi,
                     const std::function<void()>& emit) {
  if (lo >= hi) {
    emit();
    return;
  }
  for (std::size_t k = lo + 1; k < hi; k += 2) {
    partner[lo] = static_cast<std::uint32_t>(k);
    partner[k] = static_cast<std::uint32_t>(lo);
    enumerate_range(partner, lo + 1, k, [&] { enumerate_range(partner, k + 1, hi, emit); });
  }
}

}  // namespace

std::vector<Scheme> enumerate_schemes(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "scheme enumeration for n = " + std::to_string(n) + " exceeds cap " +
                    std::to_string(cap));
  }
  std::vector<Scheme> out;
  std::vector<std::uint32_t> partner(2 * n);
  enumerate_range(partner, 0, 2 * n, [&] { out.push_back(Scheme(partner)); });
  return out;
}

Scheme parse_scheme(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  while (in >> token) {
    auto dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == token.size()) {
      throw Error(ErrorCode::kParse, "bad pair '" + token + "' (expected i-j)");
    }
    std::size_t i = 0, j = 0;
    try {
      std::size_t used = 0;
      i = std::stoul(token.substr(0, dash), &used);
      if (used != dash) throw std::invalid_argument("");
      j = std::stoul(token.substr(dash + 1), &used);
      if (used != token.size() - dash - 1) throw std::invalid_argument("");
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParse, "bad pair '" + token + "'");
    }
    if (i == 0 || j == 0) throw Error(ErrorCode::kParse, "positions are 1-based in '" + token + "'");
    pairs.emplace_back(i - 1, j - 1);
  }
  const std::size_t size = 2 * pairs.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(size, kUnset);
  for (auto [i, j] : pairs) {
    if (i == j) throw Error(ErrorCode::kFixedPoint, "position " + std::to_string(i + 1));
    if (i >= size || j >= size) {
      throw Error(ErrorCode::kNotInvolution, "pair " + std::to_string(i + 1) + "-" +
                                                 std::to_string(j + 1) + " outside 1.." +
                                                 std::to_string(size));
    }
    for (auto p : {i, j}) {
      if (map[p] != kUnset) {
        throw Error(ErrorCode::kNotInvolution,
                    "position " + std::to_string(p + 1) + " is paired twice");
      }
    }
    map[i] = j;
    map[j] = i;
  }
  return Scheme::validate(pairs.size(), map);
}

std::string format_scheme(const Scheme& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.partner(i) < i) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(i + 1) + "-" + std::to_string(s.partner(i) + 1);
  }
  return out;
}

Representation Representation::of(Word word) {
  if (word.size() % 2 != 0) {
    throw Error(ErrorCode::kLengthMismatch,
                "representation has odd length " + std::to_string(word.size()));
  }
  auto target = reduce(word);
  return Representation{std::move(word), std::move(target)};
}

Representation Representation::checked(Word word, ReducedWord target) {
  auto rep = of(std::move(word));
  if (!(rep.target == target)) {
    throw Error(ErrorCode::kTargetMismatch, "word does not reduce to the stated target");
  }
  return rep;
}

Rational gamma(const ExtendedMetric& dstar, const Word& word, const Scheme& s) {
  if (word.size() != s.size()) {
    throw Error(ErrorCode::kLengthMismatch, "word length " + std::to_string(word.size()) +
                                                " vs scheme on " + std::to_string(s.size()));
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    sum += dstar.scaled(word[i].inverse(), word[s.partner(i)]);
  }
  return dstar.unscale(sum, 2);
}

namespace {

std::vector<Letter> normalize_range(const Word& w, const Scheme& s, std::size_t lo,
                                    std::size_t hi) {
  if (lo >= hi) return {};
  const std::size_t j = s.partner(lo);
  if (j == hi - 1) {
    std::vector<Letter> out;
    out.push_back(w[lo]);
    auto inner = normalize_range(w, s, lo + 1, hi - 1);
    out.insert(out.end(), inner.begin(), inner.end());
    out.push_back(w[hi - 1]);
    return out;
  }
  // [lo, j] is the first closed block; everything after it is the rest.
  auto y = normalize_range(w, s, lo, j + 1);
  auto z = normalize_range(w, s, j + 1, hi);
  const std::size_t q = y.size() / 2;
  std::vector<Letter> out = y;
  out.insert(out.end(), z.begin(), z.end());
  for (std::size_t k = 2 * q; k-- > q;) out.push_back(y[k].inverse());
  for (std::size_t k = q; k < 2 * q; ++k) out.push_back(y[k]);
  return out;
}

}  // namespace

NestedRepresentation nested_normalize(const Representation& rep, const Scheme& s,
                                      const ExtendedMetric& dstar) {
  if (rep.word.size() != s.size()) {
    throw Error(ErrorCode::kLengthMismatch, "word length " + std::to_string(rep.word.size()) +
                                                " vs scheme on " + std::to_string(s.size()));
  }
  Word out(normalize_range(rep.word, s, 0, s.size()));
  auto nested = Scheme::nested(out.size() / 2);
  auto result = Representation::checked(std::move(out), rep.target);
  if (gamma(dstar, result, nested) != gamma(dstar, rep, s)) {
    throw std::logic_error("nested_normalize changed the scheme cost");
  }
  return NestedRepresentation{std::move(result), std::move(nested)};
}

}  // namespace graev
