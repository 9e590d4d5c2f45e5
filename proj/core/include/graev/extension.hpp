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

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "graev/metrics.hpp"
#include "graev/rational.hpp"
#include "graev/words.hpp"

namespace graev {

inline constexpr std::size_t kDefaultBruteForceCap = 8;

/// The Graev extension of a quasi-pseudometric bounded by 1 to the free
/// group: the invariant quasi-prenorm N_d and the two-sided invariant
/// quasi-pseudometric d^(g, h) = N_d(g^-1 h).
///
/// N_d(g) is the minimum, over representations of g obtained by inserting
/// copies of e into distinct gaps of g and over all schemes on them, of the
/// scheme cost. Two engines compute it: an exhaustive search of that space
/// and an O(l^3) interval recurrence. In the recurrence every letter of g is
/// either matched to another letter (non-crossing) or to an inserted e, and
/// an e-match costs 1/2 (d*(x^-1, e) + d*(e, x)) wherever it sits.
///
/// Queries are safe from several threads; the memo is a transparent cache.
class GraevExtension {
 public:
  explicit GraevExtension(ExtendedMetric dstar);
  explicit GraevExtension(const QuasiPseudometric& d) : GraevExtension(ExtendedMetric(d)) {}

  GraevExtension(GraevExtension&&) noexcept;
  GraevExtension& operator=(GraevExtension&&) noexcept;
  ~GraevExtension();

  const ExtendedMetric& dstar() const noexcept { return dstar_; }
  const PointSet& points() const noexcept { return dstar_.points(); }

  /// Memoised interval recurrence.
  Rational prenorm(const ReducedWord& g) const;
  /// Interval recurrence, no memo.
  Rational prenorm_dp(const ReducedWord& g) const;
  /// Exhaustive search. Throws kCapExceeded when length(g) > cap.
  Rational prenorm_bruteforce(const ReducedWord& g,
                              std::size_t cap = kDefaultBruteForceCap) const;

  /// N_d(g^-1 h).
  Rational distance(const ReducedWord& g, const ReducedWord& h) const;

  /// {h in universe : d^(center, h) < radius}, in universe order.
  std::vector<ReducedWord> ball(const ReducedWord& center, const Rational& radius,
                                std::span<const ReducedWord> universe) const;

  /// d^ restricted to a finite set of words, as a metric on `labels`
  /// (one label per word, same order).
  QuasiPseudometric restricted(std::span<const ReducedWord> universe, PointSet labels) const;

  std::size_t memo_size() const;

 private:
  std::int64_t scaled_prenorm(const ReducedWord& g) const;

  struct Memo;
  ExtendedMetric dstar_;
  std::unique_ptr<Memo> memo_;
};

struct AxiomReport {
  std::size_t identity_checks = 0;
  std::size_t subadditivity_checks = 0;
  std::size_t conjugation_checks = 0;
  std::size_t two_sided_checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// N(e) = 0; N(gh) <= N(g) + N(h) and N(h^-1 g h) = N(g) over all pairs of
/// `sample`; and d^(x_1...x_k, y_1...y_k) <= sum d^(x_i, y_i) for all tuples
/// of letters (elements of length <= 1) with k <= max_tuple_length.
AxiomReport check_prenorm_axioms(const GraevExtension& ext, std::span<const ReducedWord> sample,
                                 std::size_t max_tuple_length = 3);

}  // namespace graev
