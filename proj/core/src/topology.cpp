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

#include "graev/topology.hpp"

#include <algorithm>
#include <bit>

#include "graev/error.hpp"

namespace graev {

std::string format_subset(Subset s, const PointSet& points, std::string_view suffix) {
  std::string out = "{";
  bool first = true;
  for (PointId p = 0; p < points.size(); ++p) {
    if (!contains(s, p)) continue;
    if (!first) out += ' ';
    out += points.name(p);
    out += suffix;
    first = false;
  }
  return out + "}";
}

namespace {

void check_size(const PointSet& points, std::size_t limit) {
  if (points.size() > limit) {
    throw Error(ErrorCode::kCapExceeded, "topology on " + std::to_string(points.size()) +
                                             " points exceeds the limit of " +
                                             std::to_string(limit));
  }
}

std::vector<Subset> compute_neighbourhoods(std::size_t n, const std::vector<Subset>& opens) {
  std::vector<Subset> nb(n, full_set(n));
  for (Subset u : opens) {
    for (PointId x = 0; x < n; ++x) {
      if (contains(u, x)) nb[x] &= u;
    }
  }
  return nb;
}

std::vector<Subset> opens_from_neighbourhoods(std::size_t n, const std::vector<Subset>& nb) {
  if (n > kMaxGeneratedPoints) {
    throw Error(ErrorCode::kCapExceeded,
                "cannot list the opens of a topology on " + std::to_string(n) + " points");
  }
  std::vector<Subset> opens;
  const Subset limit = Subset{1} << n;
  for (Subset u = 0; u < limit; ++u) {
    bool open = true;
    for (Subset rest = u; rest && open; rest &= rest - 1) {
      auto x = static_cast<PointId>(std::countr_zero(rest));
      open = is_subset(nb[x], u);
    }
    if (open) opens.push_back(u);
  }
  return opens;
}

}  // namespace

FiniteTopology::FiniteTopology(PointSet points, std::vector<Subset> opens)
    : points_(std::move(points)), opens_(std::move(opens)) {
  neighbourhoods_ = compute_neighbourhoods(points_.size(), opens_);
}

FiniteTopology FiniteTopology::validate(PointSet points, std::vector<Subset> opens) {
  check_size(points, kMaxTopologyPoints);
  const Subset all = full_set(points.size());
  for (Subset u : opens) {
    if (!is_subset(u, all)) {
      throw Error(ErrorCode::kUnknownPoint, "open set mentions a point outside the space");
    }
  }
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  auto has = [&](Subset s) { return std::binary_search(opens.begin(), opens.end(), s); };
  if (!has(0)) throw Error(ErrorCode::kMissingEmpty, "the empty set is not open");
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      Subset a = opens[i], b = opens[j];
      if (!has(a | b)) {
        throw Error(ErrorCode::kNotClosedUnderUnion,
                    format_subset(a, points) + " u " + format_subset(b, points));
      }
      if (!has(a & b)) {
        throw Error(ErrorCode::kNotClosedUnderIntersection,
                    format_subset(a, points) + " n " + format_subset(b, points));
      }
    }
  }
  // After the pairwise checks so that {}, {a}, {b} reports the union.
  if (!has(all)) throw Error(ErrorCode::kMissingFull, "the full set is not open");
  return FiniteTopology(std::move(points), std::move(opens));
}

FiniteTopology FiniteTopology::discrete(PointSet points) {
  std::vector<Subset> nb;
  for (PointId x = 0; x < points.size(); ++x) nb.push_back(singleton(x));
  return from_neighbourhoods(std::move(points), std::move(nb));
}

FiniteTopology FiniteTopology::indiscrete(PointSet points) {
  const Subset all = full_set(points.size());
  std::vector<Subset> opens{0};
  if (all != 0) opens.push_back(all);
  return FiniteTopology(std::move(points), std::move(opens));
}

FiniteTopology FiniteTopology::sierpinski() {
  return FiniteTopology(PointSet({"a", "b"}), {0b00, 0b01, 0b11});
}

FiniteTopology FiniteTopology::generated_by(PointSet points, std::span<const Subset> subbase) {
  check_size(points, kMaxGeneratedPoints);
  const std::size_t n = points.size();
  std::vector<Subset> nb(n, full_set(n));
  for (Subset s : subbase) {
    s &= full_set(n);
    for (PointId x = 0; x < n; ++x) {
      if (contains(s, x)) nb[x] &= s;
    }
  }
  return from_neighbourhoods(std::move(points), std::move(nb));
}

FiniteTopology FiniteTopology::from_neighbourhoods(PointSet points,
                                                   std::vector<Subset> neighbourhoods) {
  check_size(points, kMaxGeneratedPoints);
  auto opens = opens_from_neighbourhoods(points.size(), neighbourhoods);
  return FiniteTopology(std::move(points), std::move(opens));
}

bool FiniteTopology::is_open(Subset s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

std::vector<Subset> FiniteTopology::closed_sets() const {
  std::vector<Subset> out;
  out.reserve(opens_.size());
  for (Subset u : opens_) out.push_back(full() & ~u);
  std::sort(out.begin(), out.end());
  return out;
}

Subset FiniteTopology::minimal_neighbourhood(PointId x) const {
  if (x >= size()) throw Error(ErrorCode::kUnknownPoint, "point index " + std::to_string(x));
  return neighbourhoods_[x];
}

Subset FiniteTopology::closure_point(PointId x) const {
  if (x >= size()) throw Error(ErrorCode::kUnknownPoint, "point index " + std::to_string(x));
  Subset avoid = 0;
  for (Subset u : opens_) {
    if (!contains(u, x)) avoid |= u;
  }
  return full() & ~avoid;
}

Subset FiniteTopology::closure(Subset s) const {
  Subset avoid = 0;
  for (Subset u : opens_) {
    if ((u & s) == 0) avoid |= u;
  }
  return full() & ~avoid;
}

bool FiniteTopology::is_T1() const {
  for (PointId x = 0; x < size(); ++x) {
    if (closure_point(x) != singleton(x)) return false;
  }
  return true;
}

bool FiniteTopology::is_coarser_than(const FiniteTopology& other) const {
  if (!(points_ == other.points_)) {
    throw Error(ErrorCode::kPointSetMismatch, "topologies on different point sets");
  }
  return std::all_of(opens_.begin(), opens_.end(),
                     [&](Subset u) { return other.is_open(u); });
}

std::vector<FiniteTopology> all_topologies(std::size_t n) {
  if (n > 5) {
    throw Error(ErrorCode::kCapExceeded, "exhaustive topology sweep is limited to 5 points");
  }
  const std::size_t off_diagonal = n * (n > 0 ? n - 1 : 0);
  std::vector<FiniteTopology> out;
  PointSet points = PointSet::standard(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << off_diagonal); ++bits) {
    // nb[x] holds x and every y with bit (x, y) set.
    std::vector<Subset> nb(n);
    std::size_t k = 0;
    for (PointId x = 0; x < n; ++x) {
      nb[x] = singleton(x);
      for (PointId y = 0; y < n; ++y) {
        if (x == y) continue;
        if ((bits >> k++) & 1u) nb[x] |= singleton(y);
      }
    }
    bool transitive = true;
    for (PointId x = 0; x < n && transitive; ++x) {
      for (PointId y = 0; y < n && transitive; ++y) {
        if (contains(nb[x], y)) transitive = is_subset(nb[y], nb[x]);
      }
    }
    if (transitive) out.push_back(FiniteTopology::from_neighbourhoods(points, std::move(nb)));
  }
  return out;
}

InverseTopology inverse_topology(const FiniteTopology& t) {
  std::vector<Subset> base;
  for (PointId x = 0; x < t.size(); ++x) base.push_back(t.closure_point(x));
  auto on_inverse = FiniteTopology::generated_by(t.points(), base);
  return InverseTopology{t, std::move(on_inverse)};
}

CheckReport check_rez_duality(const FiniteTopology& t) {
  CheckReport report;
  const auto inv = inverse_topology(t);
  const auto& names = t.points();
  for (PointId a = 0; a < t.size(); ++a) {
    for (PointId b = 0; b < t.size(); ++b) {
      ++report.checked;
      bool left = contains(t.closure_point(b), a);
      bool right = contains(inv.on_inverse.closure_point(a), b);
      if (left != right) {
        report.failures.push_back(names.name(a) + " in cl(" + names.name(b) + ") is " +
                                  (left ? "true" : "false") + " but " + names.name(b) +
                                  "^-1 in cl(" + names.name(a) + "^-1) is " +
                                  (right ? "true" : "false"));
      }
    }
  }
  return report;
}

CheckReport check_reznichenko(const FiniteTopology& t) {
  CheckReport report;
  const auto inv = inverse_topology(t);
  for (Subset a : t.closed_sets()) {
    ++report.checked;
    if (!inv.on_inverse.is_open(a)) {
      report.failures.push_back("closed " + format_subset(a, t.points()) +
                                " has non-open inverse " +
                                format_subset(a, t.points(), "^-1"));
    }
  }
  return report;
}

}  // namespace graev
