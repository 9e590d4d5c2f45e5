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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graev/error.hpp"
#include "graev/rational.hpp"
#include "graev/topology.hpp"
#include "graev/words.hpp"

namespace graev {

struct AxiomViolation {
  ErrorCode code;  // kNegativeDistance, kZeroDiagonalViolation or kTriangleViolation
  // Triangle: d(x, y) > d(x, z) + d(z, y). Others use x and y only.
  PointId x = 0;
  PointId z = 0;
  PointId y = 0;
};

struct MetricReport {
  std::vector<AxiomViolation> violations;
  bool bounded_by_one = true;

  bool valid() const { return violations.empty(); }
  std::string describe(const PointSet& points) const;
};

/// A quasi-pseudometric on a finite point set: zero self-distance and the
/// triangle inequality, with no symmetry requirement. Values are exact.
class QuasiPseudometric {
 public:
  /// Checks a row-major n x n table and reports every violated axiom
  /// instance; also records whether every value is <= 1.
  static MetricReport check(std::size_t n, std::span<const Rational> table);

  /// Throws the first violation's code with all violations in the message.
  /// kNotSquare if the table size is not points.size()^2.
  static QuasiPseudometric validate(PointSet points, std::vector<Rational> table);

  static QuasiPseudometric zero(PointSet points);
  /// 1 off the diagonal.
  static QuasiPseudometric discrete(PointSet points);

  const PointSet& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Rational& operator()(PointId x, PointId y) const { return table_[x * size() + y]; }
  const std::vector<Rational>& table() const noexcept { return table_; }

  bool bounded_by_one() const noexcept { return bounded_; }
  /// Distinct table values, ascending (always includes 0 when non-empty).
  std::vector<Rational> distinct_values() const;
  /// {y : d(x, y) < radius}.
  Subset ball(PointId x, const Rational& radius) const;
  /// One radius per distinct ball: the midpoints between consecutive
  /// distinct values, then max + 1.
  std::vector<Rational> ball_radii() const;

  /// Entrywise d <= other.
  bool dominated_by(const QuasiPseudometric& other) const;

  friend bool operator==(const QuasiPseudometric& a, const QuasiPseudometric& b) {
    return a.points_ == b.points_ && a.table_ == b.table_;
  }

 private:
  QuasiPseudometric(PointSet points, std::vector<Rational> table, bool bounded)
      : points_(std::move(points)), table_(std::move(table)), bounded_(bounded) {}

  PointSet points_;
  std::vector<Rational> table_;
  bool bounded_ = true;
};

/// x -> min(x, 1) entrywise; preserves the axioms.
QuasiPseudometric cap(const QuasiPseudometric& d);

/// d* on the extended alphabet X u {e} u X^-1, built from d via d_e.
/// Letters are indexed x_p -> p, e -> n, x_p^-1 -> n + 1 + p.
class ExtendedMetric {
 public:
  /// Throws kNotBoundedByOne.
  explicit ExtendedMetric(QuasiPseudometric base);

  const QuasiPseudometric& base() const noexcept { return base_; }
  const PointSet& points() const noexcept { return base_.points(); }
  std::size_t alphabet_size() const noexcept { return 2 * base_.size() + 1; }

  /// Throws kUnknownPoint for letters outside the base point set.
  std::size_t index(const Letter& l) const;
  Letter letter(std::size_t index) const;

  /// d_e on X u {e}; both letters must be positive or the identity.
  Rational d_e(const Letter& x, const Letter& y) const;
  Rational operator()(const Letter& x, const Letter& y) const {
    return table_[index(x) * alphabet_size() + index(y)];
  }
  const std::vector<Rational>& table() const noexcept { return table_; }

  /// d*(x, y) * scale(), as an integer.
  std::int64_t scaled(const Letter& x, const Letter& y) const {
    return scaled_[index(x) * alphabet_size() + index(y)];
  }
  std::int64_t scaled_at(std::size_t ix, std::size_t iy) const {
    return scaled_[ix * alphabet_size() + iy];
  }
  std::int64_t scale() const noexcept { return scaled_.scale(); }
  Rational unscale(std::int64_t numerator, std::int64_t divisor = 1) const {
    return scaled_.unscale(numerator, divisor);
  }

 private:
  QuasiPseudometric base_;
  std::vector<Rational> table_;
  ScaledValues scaled_;
};

ExtendedMetric extend_dstar(const QuasiPseudometric& d);

/// rho_U(x, y) = 1 if x in U and y not in U, else 0. Throws kNotOpen.
QuasiPseudometric rho_from_open_set(Subset u, const FiniteTopology& t);

/// d_ij(x, y) = 1 iff (x != x_j and y = x_j) or (x in U_i and y not in U_i).
/// Requires a T1 space, x_i != x_j, U_i open, x_i in U_i, x_j not in U_i;
/// throws kPreconditionViolation naming the failed hypothesis.
QuasiPseudometric joiner_dij(const FiniteTopology& t, PointId xi, PointId xj, Subset ui);

/// Pointwise maximum. Throws kEmptyFamily or kPointSetMismatch.
QuasiPseudometric max_combine(std::span<const QuasiPseudometric> family);

struct UscWitness {
  PointId x = 0;
  Rational radius;
  Subset ball = 0;
};

struct UscResult {
  bool ok = true;
  std::optional<UscWitness> witness;
};

/// Upper semi-continuity of every section d_x: each ball B_d(x, r) is open.
/// Only one radius per distinct ball is tested.
UscResult check_usc(const QuasiPseudometric& d, const FiniteTopology& t);

/// The topology with every ball B_d(x, r) as a subbase.
FiniteTopology generated_topology(const QuasiPseudometric& d);

}  // namespace graev
