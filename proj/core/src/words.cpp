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

#include "graev/words.hpp"

#include <cctype>
#include <sstream>

#include "graev/error.hpp"

namespace graev {

bool PointSet::valid_name(std::string_view name) {
  if (name.empty() || name == "e") return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

PointSet::PointSet(std::vector<std::string> names) {
  for (auto& n : names) {
    if (!valid_name(n)) {
      throw Error(ErrorCode::kParse, "invalid point name '" + n + "'");
    }
    if (find(n)) {
      throw Error(ErrorCode::kParse, "duplicate point name '" + n + "'");
    }
    intern(n);
  }
}

PointSet PointSet::standard(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; names.size() < k; ++i) {
    if (i < 26) {
      char c = static_cast<char>('a' + i);
      if (c == 'e') continue;
      names.emplace_back(1, c);
    } else {
      names.push_back("p" + std::to_string(i));
    }
  }
  return PointSet(std::move(names));
}

std::optional<PointId> PointSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PointId PointSet::id(std::string_view name) const {
  if (auto p = find(name)) return *p;
  throw Error(ErrorCode::kUnknownPoint, "unknown point '" + std::string(name) + "'");
}

PointId PointSet::intern(std::string_view name) {
  if (auto p = find(name)) return *p;
  if (!valid_name(name)) {
    throw Error(ErrorCode::kParse, "invalid point name '" + std::string(name) + "'");
  }
  auto id = static_cast<PointId>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  return id;
}

ReducedWord ReducedWord::from_letters(std::vector<Letter> letters) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].is_identity()) {
      throw Error(ErrorCode::kNotReduced, "identity letter at position " + std::to_string(i + 1));
    }
    if (i > 0 && letters[i] == letters[i - 1].inverse()) {
      throw Error(ErrorCode::kNotReduced,
                  "cancelling pair at positions " + std::to_string(i) + "," +
                      std::to_string(i + 1));
    }
  }
  return ReducedWord(std::move(letters), Trusted{});
}

std::strong_ordering operator<=>(const ReducedWord& a, const ReducedWord& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t ReducedWordHash::operator()(const ReducedWord& w) const noexcept {
  std::size_t h = w.length();
  for (const auto& l : w.letters()) {
    std::size_t v = (static_cast<std::size_t>(l.point) << 1) | (l.sign < 0 ? 1u : 0u);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

ReducedWord reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& l : w.letters) {
    if (l.is_identity()) continue;
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return ReducedWord(std::move(out), ReducedWord::Trusted{});
}

ReducedWord multiply(const ReducedWord& g, const ReducedWord& h) {
  std::size_t cancel = 0;
  while (cancel < g.length() && cancel < h.length() &&
         g[g.length() - 1 - cancel] == h[cancel].inverse()) {
    ++cancel;
  }
  std::vector<Letter> out(g.letters_.begin(), g.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), h.letters_.begin() + static_cast<std::ptrdiff_t>(cancel), h.letters_.end());
  return ReducedWord(std::move(out), ReducedWord::Trusted{});
}

ReducedWord invert(const ReducedWord& g) {
  std::vector<Letter> out;
  out.reserve(g.length());
  for (auto it = g.letters_.rbegin(); it != g.letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return ReducedWord(std::move(out), ReducedWord::Trusted{});
}

std::set<Letter> support(const Word& w) {
  std::set<Letter> s;
  for (const auto& l : w.letters) {
    if (l.is_identity()) continue;
    s.insert(l);
    s.insert(l.inverse());
  }
  return s;
}

int exponent_sum(const Word& w) {
  int s = 0;
  for (const auto& l : w.letters) s += l.sign;
  return s;
}

int exponent_sum(const ReducedWord& w) {
  int s = 0;
  for (const auto& l : w.letters()) s += l.sign;
  return s;
}

bool is_almost_irreducible(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) return false;
  }
  return true;
}

std::size_t count_reduced_words(std::size_t point_count, std::size_t max_length) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  if (point_count == 0) return 1;
  std::size_t total = 1;
  std::size_t layer = 2 * point_count;
  for (std::size_t j = 1; j <= max_length; ++j) {
    if (total > kMax - layer) return kMax;
    total += layer;
    if (j < max_length) {
      if (layer > kMax / (2 * point_count - 1)) return kMax;
      layer *= 2 * point_count - 1;
    }
  }
  return total;
}

std::vector<ReducedWord> enumerate_reduced_words(std::size_t point_count,
                                                 std::size_t max_length, std::size_t cap) {
  std::size_t count = count_reduced_words(point_count, max_length);
  if (count > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "FP_" + std::to_string(max_length) + " over " + std::to_string(point_count) +
                    " points has more than " + std::to_string(cap) + " words");
  }
  std::vector<Letter> alphabet;
  for (PointId p = 0; p < point_count; ++p) {
    alphabet.push_back(Letter::positive(p));
    alphabet.push_back(Letter::negative(p));
  }
  std::vector<ReducedWord> out;
  out.reserve(count);
  out.emplace_back();
  // Layer j is generated from layer j-1 by appending every non-cancelling
  // letter, which keeps shortlex order when the alphabet is sorted.
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& l : alphabet) {
        const auto& base = out[i].letters_;
        if (!base.empty() && base.back() == l.inverse()) continue;
        std::vector<Letter> next(base);
        next.push_back(l);
        out.push_back(ReducedWord(std::move(next), ReducedWord::Trusted{}));
      }
    }
    begin = end;
  }
  return out;
}

namespace {

Letter parse_letter(std::string_view token, PointSet* mutable_points,
                    const PointSet& points) {
  if (token == "e") return Letter::identity();
  int sign = +1;
  std::string_view name = token;
  if (auto caret = token.find('^'); caret != std::string_view::npos) {
    std::string_view exp = token.substr(caret + 1);
    if (exp != "-1") {
      throw Error(ErrorCode::kParse, "bad exponent in token '" + std::string(token) +
                                         "' (only ^-1 is allowed)");
    }
    sign = -1;
    name = token.substr(0, caret);
  }
  if (name == "e") return Letter::identity();  // e^-1 = e
  if (!PointSet::valid_name(name)) {
    throw Error(ErrorCode::kParse, "invalid token '" + std::string(token) + "'");
  }
  PointId id = mutable_points ? mutable_points->intern(name) : points.id(name);
  return Letter{id, sign};
}

Word parse_word_impl(std::string_view text, PointSet* mutable_points,
                     const PointSet& points) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string token;
  while (in >> token) letters.push_back(parse_letter(token, mutable_points, points));
  return Word(std::move(letters));
}

}  // namespace

Word parse_word(std::string_view text, PointSet& points, bool intern) {
  return parse_word_impl(text, intern ? &points : nullptr, points);
}

Word parse_word(std::string_view text, const PointSet& points) {
  return parse_word_impl(text, nullptr, points);
}

ReducedWord parse_reduced_word(std::string_view text, const PointSet& points) {
  return reduce(parse_word(text, points));
}

std::string format_letter(const Letter& letter, const PointSet& points) {
  if (letter.is_identity()) return "e";
  std::string s = points.name(letter.point);
  if (letter.sign < 0) s += "^-1";
  return s;
}

std::string format_word(const Word& w, const PointSet& points) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += format_letter(w[i], points);
  }
  return s;
}

std::string format_word(const ReducedWord& w, const PointSet& points) {
  if (w.is_identity()) return "e";
  return format_word(w.as_word(), points);
}

}  // namespace graev
