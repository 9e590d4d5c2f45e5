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

#include "graev/extension.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "graev/error.hpp"

namespace graev {

struct GraevExtension::Memo {
  std::shared_mutex mutex;
  std::unordered_map<ReducedWord, std::int64_t, ReducedWordHash> values;
};

GraevExtension::GraevExtension(ExtendedMetric dstar)
    : dstar_(std::move(dstar)), memo_(std::make_unique<Memo>()) {}

GraevExtension::GraevExtension(GraevExtension&&) noexcept = default;
GraevExtension& GraevExtension::operator=(GraevExtension&&) noexcept = default;
GraevExtension::~GraevExtension() = default;

namespace {

// Integer d* lookups for one word, indexed by position.
struct LetterCosts {
  std::vector<std::size_t> index;
  std::vector<std::size_t> inverse_index;
};

LetterCosts letter_costs(const ExtendedMetric& dstar, std::span<const Letter> letters) {
  LetterCosts c;
  for (const auto& l : letters) {
    c.index.push_back(dstar.index(l));
    c.inverse_index.push_back(dstar.index(l.inverse()));
  }
  return c;
}

// Exhaustive minimum over all schemes on `m` positions, walking every Dyck
// path: each position either opens a pair or closes the innermost open one.
class SchemeSearch {
 public:
  SchemeSearch(std::size_t m, std::vector<std::int64_t> pair_cost)
      : m_(m), pair_cost_(std::move(pair_cost)) {
    open_.reserve(m);
  }

  std::int64_t minimum() {
    best_ = std::numeric_limits<std::int64_t>::max();
    walk(0, 0);
    return best_;
  }

 private:
  void walk(std::size_t pos, std::int64_t acc) {
    if (pos == m_) {
      best_ = std::min(best_, acc);
      return;
    }
    const std::size_t remaining = m_ - pos;
    if (open_.size() + 1 < remaining) {
      open_.push_back(pos);
      walk(pos + 1, acc);
      open_.pop_back();
    }
    if (!open_.empty()) {
      std::size_t top = open_.back();
      open_.pop_back();
      walk(pos + 1, acc + pair_cost_[top * m_ + pos]);
      open_.push_back(top);
    }
  }

  std::size_t m_;
  std::vector<std::int64_t> pair_cost_;
  std::vector<std::size_t> open_;
  std::int64_t best_ = 0;
};

}  // namespace

Rational GraevExtension::prenorm_bruteforce(const ReducedWord& g, std::size_t cap) const {
  if (g.length() > cap) {
    throw Error(ErrorCode::kCapExceeded, "brute force is limited to words of length " +
                                             std::to_string(cap));
  }
  if (g.is_identity()) return 0;
  const std::size_t len = g.length();
  const std::size_t gaps = len + 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<Letter> word;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps); ++mask) {
    const auto inserted = static_cast<std::size_t>(std::popcount(mask));
    if (inserted > len || inserted % 2 != len % 2) continue;
    word.clear();
    for (std::size_t gap = 0; gap < gaps; ++gap) {
      if ((mask >> gap) & 1u) word.push_back(Letter::identity());
      if (gap < len) word.push_back(g[gap]);
    }
    const std::size_t m = word.size();
    const auto costs = letter_costs(dstar_, word);
    std::vector<std::int64_t> pair_cost(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        pair_cost[a * m + b] = dstar_.scaled_at(costs.inverse_index[a], costs.index[b]) +
                               dstar_.scaled_at(costs.inverse_index[b], costs.index[a]);
      }
    }
    best = std::min(best, SchemeSearch(m, std::move(pair_cost)).minimum());
  }
  return dstar_.unscale(best, 2);
}

std::int64_t GraevExtension::scaled_prenorm(const ReducedWord& g) const {
  const std::size_t len = g.length();
  if (len == 0) return 0;
  const auto costs = letter_costs(dstar_, g.letters());
  const std::size_t e = dstar_.index(Letter::identity());
  auto pair = [&](std::size_t a, std::size_t b) {
    return dstar_.scaled_at(costs.inverse_index[a], costs.index[b]) +
           dstar_.scaled_at(costs.inverse_index[b], costs.index[a]);
  };
  // best[i][j]: cheapest cost of letters [i, j).
  const std::size_t w = len + 1;
  std::vector<std::int64_t> best(w * w, 0);
  for (std::size_t span = 1; span <= len; ++span) {
    for (std::size_t i = 0; i + span <= len; ++i) {
      const std::size_t j = i + span;
      std::int64_t v = dstar_.scaled_at(costs.inverse_index[i], e) +
                       dstar_.scaled_at(e, costs.index[i]) + best[(i + 1) * w + j];
      for (std::size_t k = i + 1; k < j; ++k) {
        v = std::min(v, pair(i, k) + best[(i + 1) * w + k] + best[(k + 1) * w + j]);
      }
      best[i * w + j] = v;
    }
  }
  return best[len];
}

Rational GraevExtension::prenorm_dp(const ReducedWord& g) const {
  return dstar_.unscale(scaled_prenorm(g), 2);
}

Rational GraevExtension::prenorm(const ReducedWord& g) const {
  {
    std::shared_lock lock(memo_->mutex);
    auto it = memo_->values.find(g);
    if (it != memo_->values.end()) return dstar_.unscale(it->second, 2);
  }
  const std::int64_t v = scaled_prenorm(g);
  {
    std::unique_lock lock(memo_->mutex);
    memo_->values.insert_or_assign(g, v);
  }
  return dstar_.unscale(v, 2);
}

Rational GraevExtension::distance(const ReducedWord& g, const ReducedWord& h) const {
  return prenorm(multiply(invert(g), h));
}

std::vector<ReducedWord> GraevExtension::ball(const ReducedWord& center, const Rational& radius,
                                              std::span<const ReducedWord> universe) const {
  std::vector<ReducedWord> out;
  for (const auto& h : universe) {
    if (distance(center, h) < radius) out.push_back(h);
  }
  return out;
}

QuasiPseudometric GraevExtension::restricted(std::span<const ReducedWord> universe,
                                             PointSet labels) const {
  if (labels.size() != universe.size()) {
    throw Error(ErrorCode::kPointSetMismatch, "one label per word is required");
  }
  const std::size_t n = universe.size();
  std::vector<Rational> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = distance(universe[i], universe[j]);
  }
  return QuasiPseudometric::validate(std::move(labels), std::move(table));
}

std::size_t GraevExtension::memo_size() const {
  std::shared_lock lock(memo_->mutex);
  return memo_->values.size();
}

AxiomReport check_prenorm_axioms(const GraevExtension& ext, std::span<const ReducedWord> sample,
                                 std::size_t max_tuple_length) {
  AxiomReport report;
  const auto& pts = ext.points();
  auto show = [&](const ReducedWord& w) { return "[" + format_word(w, pts) + "]"; };

  ++report.identity_checks;
  if (ext.prenorm(ReducedWord{}) != 0) report.failures.push_back("N(e) != 0");

  for (const auto& g : sample) {
    for (const auto& h : sample) {
      ++report.subadditivity_checks;
      auto lhs = ext.prenorm(multiply(g, h));
      auto rhs = ext.prenorm(g) + ext.prenorm(h);
      if (lhs > rhs) {
        report.failures.push_back("subadditivity: N(" + show(g) + show(h) + ") = " +
                                  format_rational(lhs) + " > " + format_rational(rhs));
      }
      ++report.conjugation_checks;
      auto conj = ext.prenorm(multiply(multiply(invert(h), g), h));
      if (conj != ext.prenorm(g)) {
        report.failures.push_back("conjugation: N(h^-1 g h) != N(g) for g = " + show(g) +
                                  ", h = " + show(h));
      }
    }
  }

  // Letters: the identity and every x, x^-1.
  std::vector<ReducedWord> letters{ReducedWord{}};
  for (PointId p = 0; p < pts.size(); ++p) {
    letters.push_back(ReducedWord::from_letters({Letter::positive(p)}));
    letters.push_back(ReducedWord::from_letters({Letter::negative(p)}));
  }
  std::vector<std::size_t> xs, ys;
  for (std::size_t k = 1; k <= max_tuple_length; ++k) {
    xs.assign(k, 0);
    // Odometer over all (x_1..x_k, y_1..y_k).
    std::vector<std::size_t> digits(2 * k, 0);
    while (true) {
      ReducedWord left, right;
      Rational bound = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const auto& x = letters[digits[i]];
        const auto& y = letters[digits[k + i]];
        left = multiply(left, x);
        right = multiply(right, y);
        bound += ext.distance(x, y);
      }
      ++report.two_sided_checks;
      if (ext.distance(left, right) > bound) {
        report.failures.push_back("two-sided invariance: d^(" + show(left) + ", " +
                                  show(right) + ") exceeds the letterwise sum");
      }
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == letters.size()) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
  return report;
}

}  // namespace graev
