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
#include <vector>

#include "graev/words.hpp"

namespace graev {

/// A subset of a finite point set; bit i stands for point i.
using Subset = std::uint64_t;

inline constexpr std::size_t kMaxTopologyPoints = 64;
/// Generating a topology enumerates subsets, so it is limited further.
inline constexpr std::size_t kMaxGeneratedPoints = 20;

constexpr Subset singleton(PointId p) { return Subset{1} << p; }
constexpr bool contains(Subset s, PointId p) { return (s >> p) & 1u; }
constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
constexpr Subset full_set(std::size_t n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

std::string format_subset(Subset s, const PointSet& points, std::string_view suffix = "");

/// A topology on a finite point set, stored as its (sorted) family of open
/// sets. Finite topologies are Alexandroff: every point has a smallest open
/// neighbourhood, and the topology is determined by those.
class FiniteTopology {
 public:
  /// Checks that the family contains the empty and full sets and is closed
  /// under pairwise union and intersection. Duplicates are dropped. Throws
  /// kMissingEmpty, kMissingFull, kNotClosedUnderUnion or
  /// kNotClosedUnderIntersection naming the offending sets.
  static FiniteTopology validate(PointSet points, std::vector<Subset> opens);

  static FiniteTopology discrete(PointSet points);
  static FiniteTopology indiscrete(PointSet points);
  /// Points {a, b} with opens {}, {a}, {a, b}.
  static FiniteTopology sierpinski();

  /// The topology with `subbase` as a subbase (the full set is always open).
  static FiniteTopology generated_by(PointSet points, std::span<const Subset> subbase);
  /// The topology whose smallest neighbourhoods are `neighbourhoods`; the
  /// caller guarantees x in N(x) and y in N(x) => N(y) subset N(x).
  static FiniteTopology from_neighbourhoods(PointSet points, std::vector<Subset> neighbourhoods);

  const PointSet& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  Subset full() const noexcept { return full_set(points_.size()); }
  const std::vector<Subset>& opens() const noexcept { return opens_; }

  bool is_open(Subset s) const;
  bool is_closed(Subset s) const { return is_open(full() & ~s); }
  std::vector<Subset> closed_sets() const;

  Subset minimal_neighbourhood(PointId x) const;
  /// Smallest closed superset of {x}. Throws kUnknownPoint.
  Subset closure_point(PointId x) const;
  Subset closure(Subset s) const;

  /// Every singleton closed; on a finite space this is discreteness.
  bool is_T1() const;
  bool is_discrete() const { return opens_.size() == (Subset{1} << size()) || size() == 0; }

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.points_ == b.points_ && a.opens_ == b.opens_;
  }

  /// Opens on the same point set; the inclusion of topologies.
  bool is_coarser_than(const FiniteTopology& other) const;

 private:
  FiniteTopology(PointSet points, std::vector<Subset> opens);

  PointSet points_;
  std::vector<Subset> opens_;
  std::vector<Subset> neighbourhoods_;
};

/// All topologies on the labelled points a, b, ... (n <= 5): one per preorder,
/// so the list is duplicate-free. Counts 1, 1, 4, 29, 355, 6942 for n = 0..5.
std::vector<FiniteTopology> all_topologies(std::size_t n);

/// The topology T_A on the formal set X^-1, generated by the sets
/// (cl_X(x))^-1. Point i of `on_inverse` stands for x_i^-1; it reuses the
/// names of the base space.
struct InverseTopology {
  FiniteTopology base;
  FiniteTopology on_inverse;
};

InverseTopology inverse_topology(const FiniteTopology& t);

struct CheckReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// a in cl_X(b)  <=>  b^-1 in cl_{T_A}(a^-1), for all ordered pairs.
CheckReport check_rez_duality(const FiniteTopology& t);
/// A^-1 is open in T_A for every closed A.
CheckReport check_reznichenko(const FiniteTopology& t);

}  // namespace graev
