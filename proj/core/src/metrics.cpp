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

#include "graev/metrics.hpp"

#include <algorithm>

namespace graev {

std::string MetricReport::describe(const PointSet& points) const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += std::string(to_string(v.code));
    out += '(';
    if (v.code == ErrorCode::kTriangleViolation) {
      out += points.name(v.x) + "," + points.name(v.z) + "," + points.name(v.y);
    } else {
      out += points.name(v.x) + "," + points.name(v.y);
    }
    out += ')';
  }
  return out;
}

MetricReport QuasiPseudometric::check(std::size_t n, std::span<const Rational> table) {
  MetricReport report;
  auto at = [&](std::size_t x, std::size_t y) -> const Rational& { return table[x * n + y]; };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (at(x, y) < 0) {
        report.violations.push_back({ErrorCode::kNegativeDistance, PointId(x), 0, PointId(y)});
      }
      if (at(x, y) > 1) report.bounded_by_one = false;
    }
    if (at(x, x) != 0) {
      report.violations.push_back({ErrorCode::kZeroDiagonalViolation, PointId(x), 0, PointId(x)});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      for (std::size_t y = 0; y < n; ++y) {
        if (at(x, y) > at(x, z) + at(z, y)) {
          report.violations.push_back(
              {ErrorCode::kTriangleViolation, PointId(x), PointId(z), PointId(y)});
        }
      }
    }
  }
  return report;
}

QuasiPseudometric QuasiPseudometric::validate(PointSet points, std::vector<Rational> table) {
  const std::size_t n = points.size();
  if (table.size() != n * n) {
    throw Error(ErrorCode::kNotSquare, "table has " + std::to_string(table.size()) +
                                           " entries for " + std::to_string(n) + " points");
  }
  auto report = check(n, table);
  if (!report.valid()) {
    throw Error(report.violations.front().code, report.describe(points));
  }
  return QuasiPseudometric(std::move(points), std::move(table), report.bounded_by_one);
}

QuasiPseudometric QuasiPseudometric::zero(PointSet points) {
  std::vector<Rational> table(points.size() * points.size());
  return QuasiPseudometric(std::move(points), std::move(table), true);
}

QuasiPseudometric QuasiPseudometric::discrete(PointSet points) {
  const std::size_t n = points.size();
  std::vector<Rational> table(n * n, Rational(1));
  for (std::size_t x = 0; x < n; ++x) table[x * n + x] = 0;
  return QuasiPseudometric(std::move(points), std::move(table), true);
}

std::vector<Rational> QuasiPseudometric::distinct_values() const {
  std::vector<Rational> values = table_;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

Subset QuasiPseudometric::ball(PointId x, const Rational& radius) const {
  Subset s = 0;
  for (PointId y = 0; y < size(); ++y) {
    if ((*this)(x, y) < radius) s |= singleton(y);
  }
  return s;
}

std::vector<Rational> QuasiPseudometric::ball_radii() const {
  auto values = distinct_values();
  std::vector<Rational> radii;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    radii.push_back((values[i] + values[i + 1]) / 2);
  }
  radii.push_back(values.empty() ? Rational(1) : Rational(values.back() + 1));
  return radii;
}

bool QuasiPseudometric::dominated_by(const QuasiPseudometric& other) const {
  if (!(points_ == other.points_)) {
    throw Error(ErrorCode::kPointSetMismatch, "metrics on different point sets");
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] > other.table_[i]) return false;
  }
  return true;
}

QuasiPseudometric cap(const QuasiPseudometric& d) {
  std::vector<Rational> table = d.table();
  for (auto& v : table) {
    if (v > 1) v = 1;
  }
  return QuasiPseudometric::validate(d.points(), std::move(table));
}

ExtendedMetric::ExtendedMetric(QuasiPseudometric base) : base_(std::move(base)) {
  if (!base_.bounded_by_one()) {
    throw Error(ErrorCode::kNotBoundedByOne,
                "the Graev extension needs a metric bounded by 1 (see cap)");
  }
  const std::size_t m = alphabet_size();
  table_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Letter x = letter(i), y = letter(j);
      Rational v;
      if (x == y) {
        v = 0;
      } else if (x.sign >= 0 && y.sign >= 0) {
        v = d_e(x, y);
      } else if (x.sign <= 0 && y.sign <= 0) {
        v = d_e(y.inverse(), x.inverse());
      } else {
        v = 2;
      }
      table_[i * m + j] = v;
    }
  }
  scaled_ = ScaledValues(table_);
}

std::size_t ExtendedMetric::index(const Letter& l) const {
  const std::size_t n = base_.size();
  if (l.is_identity()) return n;
  if (l.point >= n) {
    throw Error(ErrorCode::kUnknownPoint,
                "letter refers to point " + std::to_string(l.point) + " outside the metric");
  }
  return l.sign > 0 ? l.point : n + 1 + l.point;
}

Letter ExtendedMetric::letter(std::size_t index) const {
  const std::size_t n = base_.size();
  if (index < n) return Letter::positive(static_cast<PointId>(index));
  if (index == n) return Letter::identity();
  return Letter::negative(static_cast<PointId>(index - n - 1));
}

Rational ExtendedMetric::d_e(const Letter& x, const Letter& y) const {
  if (x.sign < 0 || y.sign < 0) {
    throw Error(ErrorCode::kPreconditionViolation, "d_e is defined on X u {e} only");
  }
  if (x == y) return 0;
  if (!x.is_identity() && !y.is_identity()) return base_(x.point, y.point);
  return 1;
}

ExtendedMetric extend_dstar(const QuasiPseudometric& d) { return ExtendedMetric(d); }

QuasiPseudometric rho_from_open_set(Subset u, const FiniteTopology& t) {
  if (!t.is_open(u)) {
    throw Error(ErrorCode::kNotOpen, format_subset(u, t.points()) + " is not open");
  }
  const std::size_t n = t.size();
  std::vector<Rational> table(n * n);
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) {
      if (contains(u, x) && !contains(u, y)) table[x * n + y] = 1;
    }
  }
  return QuasiPseudometric::validate(t.points(), std::move(table));
}

QuasiPseudometric joiner_dij(const FiniteTopology& t, PointId xi, PointId xj, Subset ui) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kPreconditionViolation, what);
  };
  const auto& pts = t.points();
  if (xi >= t.size() || xj >= t.size()) fail("point outside the space");
  if (!t.is_T1()) fail("space is not T1");
  if (xi == xj) fail("x_i = x_j = " + pts.name(xi));
  if (!t.is_open(ui)) fail("U_i = " + format_subset(ui, pts) + " is not open");
  if (!contains(ui, xi)) fail(pts.name(xi) + " not in U_i");
  if (contains(ui, xj)) fail(pts.name(xj) + " in U_i");
  const std::size_t n = t.size();
  std::vector<Rational> table(n * n);
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) {
      bool one = (x != xj && y == xj) || (contains(ui, x) && !contains(ui, y));
      if (one) table[x * n + y] = 1;
    }
  }
  return QuasiPseudometric::validate(pts, std::move(table));
}

QuasiPseudometric max_combine(std::span<const QuasiPseudometric> family) {
  if (family.empty()) throw Error(ErrorCode::kEmptyFamily, "max over an empty family");
  std::vector<Rational> table = family.front().table();
  for (const auto& d : family.subspan(1)) {
    if (!(d.points() == family.front().points())) {
      throw Error(ErrorCode::kPointSetMismatch, "max over metrics on different point sets");
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (d.table()[i] > table[i]) table[i] = d.table()[i];
    }
  }
  return QuasiPseudometric::validate(family.front().points(), std::move(table));
}

UscResult check_usc(const QuasiPseudometric& d, const FiniteTopology& t) {
  if (!(d.points() == t.points())) {
    throw Error(ErrorCode::kPointSetMismatch, "metric and topology on different point sets");
  }
  for (PointId x = 0; x < d.size(); ++x) {
    for (const auto& r : d.ball_radii()) {
      Subset b = d.ball(x, r);
      if (!t.is_open(b)) return UscResult{false, UscWitness{x, r, b}};
    }
  }
  return UscResult{};
}

FiniteTopology generated_topology(const QuasiPseudometric& d) {
  std::vector<Subset> subbase;
  for (PointId x = 0; x < d.size(); ++x) {
    for (const auto& r : d.ball_radii()) subbase.push_back(d.ball(x, r));
  }
  return FiniteTopology::generated_by(d.points(), subbase);
}

}  // namespace graev
