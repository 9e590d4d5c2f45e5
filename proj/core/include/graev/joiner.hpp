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

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graev/extension.hpp"
#include "graev/metrics.hpp"
#include "graev/topology.hpp"
#include "graev/words.hpp"

namespace graev {

/// A reduced word w = x_1^s_1 ... x_n^s_n in a T1 space with one open set per
/// position (a neighbourhood of x_i for s_i = +1, exactly {x_i} for -1) and,
/// optionally, one open set V_j per distinct letter in order of first
/// occurrence. The product U_1^s_1 ... U_n^s_n is the basic neighbourhood B.
struct JoinerInstance {
  FiniteTopology space;
  ReducedWord w;
  std::vector<Subset> u;
  std::optional<std::vector<Subset>> v;
};

enum class NeighbourhoodChoice {
  kSingletons,  // U_i = {x_i}
  kFullSpace,   // U_i = X for s_i = +1, {x_i} for s_i = -1
};

JoinerInstance make_joiner_instance(FiniteTopology space, ReducedWord w,
                                    NeighbourhoodChoice choice);

/// The distinct letters of w in order of first occurrence, and for each the
/// positions where it occurs with exponent +1.
struct LetterClasses {
  std::vector<PointId> points;
  std::vector<std::vector<std::size_t>> positive_positions;
};
LetterClasses letter_classes(const ReducedWord& w);

/// Throws kNotT1 for a non-T1 space, kUnknownPoint for letters outside it,
/// kLengthMismatch for a wrong number of U or V sets, kPreconditionViolation
/// for a U_i that is not open or misses x_i or is not {x_i} at a -1 slot, and
/// kConditionViolation when a V_j is not open, misses its letter, is not
/// inside U_i for a +1 occurrence, or contains another letter of w.
void validate_instance(const JoinerInstance& inst);

/// The V_j in use: the instance's own, or the intersection of the U_i at the
/// +1 occurrences of the letter minus every other letter of w.
std::vector<Subset> joiner_v_sets(const JoinerInstance& inst);

/// Maximum over ordered pairs j != k of distinct letters of the metric that
/// joins V_j to the k-th letter. The zero metric when w has fewer than two
/// distinct letters.
QuasiPseudometric build_joiner_metric(const JoinerInstance& inst);

struct VerificationMetric {
  QuasiPseudometric metric;
  /// Set when w has a single distinct letter p and the metric is
  /// max(rho_{V_1}, [x != p and y = p]) instead of the empty maximum.
  bool fallback = false;
};
VerificationMetric verification_metric(const JoinerInstance& inst);

/// B as a set of reduced words, shortlex-sorted.
std::vector<ReducedWord> basic_neighbourhood(const JoinerInstance& inst);

/// Outcome of checking B_d^(e, 1) w  n  FP_n  subset of  B, n = length(w).
struct Certificate {
  FiniteTopology space;
  ReducedWord w;
  std::vector<Subset> u;
  std::vector<Subset> v;
  QuasiPseudometric metric;
  bool fallback_metric = false;
  bool verdict = false;
  std::optional<ReducedWord> offending;
  /// N_d(h w^-1) for every h in FP_n, shortlex.
  std::vector<std::pair<ReducedWord, Rational>> values;

  /// The words h with N_d(h w^-1) < 1.
  std::vector<ReducedWord> trace() const;
};

Certificate verify_neighbourhood(const JoinerInstance& inst,
                                 std::size_t cap = kDefaultEnumerationCap);

/// Recomputes every value and the verdict from the certificate's own metric
/// and sets; true iff everything matches.
bool replay(const Certificate& cert, std::size_t cap = kDefaultEnumerationCap);

/// U' with U'_i subset U_i such that every product is reduced of length n:
/// a +1 slot next to a -1 slot {x} drops x.
std::vector<Subset> refine_exact_length(const JoinerInstance& inst);

struct SeparationTarget {
  enum class Kind { kX, kXInverse, kBall } kind = Kind::kX;
  std::size_t n = 0;  // FP_n for kBall

  static SeparationTarget points() { return {Kind::kX, 0}; }
  static SeparationTarget inverse_points() { return {Kind::kXInverse, 0}; }
  static SeparationTarget words_up_to(std::size_t n) { return {Kind::kBall, n}; }
  bool contains(const ReducedWord& w) const;
  std::string describe() const;
};

/// A neighbourhood of w disjoint from the target: either the exponent-sum
/// class of w (each class is open and the target sits inside another class)
/// or a refined basic neighbourhood whose members all have length k, larger
/// than every length in the target.
struct SeparationCertificate {
  enum class Kind { kExponentSum, kJoiner } kind = Kind::kExponentSum;
  ReducedWord w;
  SeparationTarget target;
  int word_class = 0;
  int target_class = 0;
  std::optional<Certificate> neighbourhood;
  std::size_t member_length = 0;
};

/// Throws kNotSeparable when w is in the target and kNotT1 when only a basic
/// neighbourhood could separate and the space is not T1. The result is
/// re-validated: a certificate touching the target is a logic_error.
SeparationCertificate separation_certificate(const FiniteTopology& space, const ReducedWord& w,
                                             const SeparationTarget& target);

/// One line of a check report: `CHECK <name> <instance> PASS|FAIL [witness]`.
struct CheckLine {
  std::string name;
  std::string instance;
  bool pass = false;
  std::string witness;
};
std::string format_check(const CheckLine& line);

/// Desk-scale surrogates for the eight equivalent conditions on a finite
/// space, in order:
///   1 X is T1.
///   2 The d^-ball topology of the rho_U family is T1 on X, and for T1
///     spaces every w in FP_depth has the certified basic neighbourhood {w}.
///   3 Every w outside X with length <= depth + 1 is separated from X.
///   4 X^-1 is discrete in T_A.
///   5 X^-1 is T1 in T_A.
///   6 Every w outside X^-1 with length <= depth + 1 is separated from X^-1.
///   7 For every m in 1..depth, every w with m < length <= depth + 1 is
///     separated from FP_m.
///   8 The same holds for some m in 1..depth.
/// A separation that needs a basic neighbourhood in a non-T1 space fails.
/// depth >= 2 so that the sweeps reach words of exponent sum +-1 and
/// length 3.
struct EquivReport {
  std::vector<CheckLine> conditions;
  bool consistent() const;
};
EquivReport equiv_conds_battery(const FiniteTopology& space, std::size_t depth = 2,
                                std::size_t jobs = 1);

/// (y_1, ..., y_n) -> y_1 ... y_n into FP_n: injectivity, discreteness of the
/// image through certified singleton neighbourhoods, and closedness through
/// certified singleton neighbourhoods of the words outside the image.
/// Throws kNotT1.
struct XPowerReport {
  std::size_t image_size = 0;
  bool injective = false;
  bool discrete = false;
  bool closed = false;
  std::vector<std::string> failures;
  bool ok() const { return injective && discrete && closed; }
};
XPowerReport x_power_check(const FiniteTopology& space, std::size_t n, std::size_t jobs = 1);

/// Line-oriented text form of a certificate, read back by parse_certificate.
std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

}  // namespace graev
