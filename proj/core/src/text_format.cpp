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

#include "graev/text_format.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "graev/error.hpp"

namespace graev {

namespace {

struct Line {
  std::size_t number = 0;
  std::string text;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Non-empty lines with comments removed.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t n = 1; std::getline(in, raw); ++n) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto t = trim(raw);
    if (!t.empty()) out.push_back({n, std::move(t)});
  }
  return out;
}

[[noreturn]] void fail(ErrorCode code, std::string_view source, std::size_t line,
                       const std::string& what) {
  throw Error(code, std::string(source) + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> words_of(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Reads the `points:` header, which must be the first content line.
PointSet parse_points(const std::vector<Line>& lines, std::string_view source) {
  if (lines.empty()) fail(ErrorCode::kParse, source, 1, "missing 'points:' header");
  const auto& first = lines.front();
  if (!first.text.starts_with("points:")) {
    fail(ErrorCode::kParse, source, first.number, "expected 'points:' header");
  }
  auto names = words_of(std::string_view(first.text).substr(7));
  PointSet points;
  for (const auto& name : names) {
    if (!PointSet::valid_name(name)) {
      fail(ErrorCode::kParse, source, first.number, "invalid point name '" + name + "'");
    }
    if (points.find(name)) fail(ErrorCode::kParse, source, first.number, "duplicate point '" + name + "'");
    points.intern(name);
  }
  return points;
}

PointId point_at(const PointSet& points, const std::string& name, std::string_view source,
                 std::size_t line) {
  auto id = points.find(name);
  if (!id) fail(ErrorCode::kUnknownPoint, source, line, "unknown point '" + name + "'");
  return *id;
}

}  // namespace

QuasiPseudometric parse_metric(std::string_view text, std::string_view source, bool sparse) {
  const auto lines = content_lines(text);
  PointSet points = parse_points(lines, source);
  const std::size_t n = points.size();
  std::vector<std::optional<Rational>> seen(n * n);
  std::size_t last_line = lines.front().number;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, body] = lines[i];
    last_line = number;
    auto eq = body.find('=');
    if (eq == std::string::npos) fail(ErrorCode::kParse, source, number, "expected 'x y = value'");
    auto pair = words_of(std::string_view(body).substr(0, eq));
    if (pair.size() != 2) fail(ErrorCode::kParse, source, number, "expected two point names before '='");
    PointId x = point_at(points, pair[0], source, number);
    PointId y = point_at(points, pair[1], source, number);
    Rational value;
    try {
      value = parse_rational(trim(std::string_view(body).substr(eq + 1)));
    } catch (const Error& e) {
      fail(e.code(), source, number, e.detail());
    }
    auto& slot = seen[x * n + y];
    if (slot) fail(ErrorCode::kParse, source, number, "pair " + pair[0] + " " + pair[1] + " given twice");
    slot = value;
  }
  std::vector<Rational> table(n * n);
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) {
      const auto& slot = seen[x * n + y];
      if (slot) {
        table[x * n + y] = *slot;
      } else if (x != y && !sparse) {
        fail(ErrorCode::kParse, source, last_line,
             "missing pair " + points.name(x) + " " + points.name(y) + " (use --sparse to default to 0)");
      }
    }
  }
  try {
    return QuasiPseudometric::validate(std::move(points), std::move(table));
  } catch (const Error& e) {
    fail(e.code(), source, lines.front().number, e.detail());
  }
}

FiniteTopology parse_topology(std::string_view text, std::string_view source) {
  const auto lines = content_lines(text);
  PointSet points = parse_points(lines, source);
  std::vector<Subset> opens{0, full_set(points.size())};
  if (points.size() > kMaxTopologyPoints) {
    fail(ErrorCode::kCapExceeded, source, lines.front().number,
         "at most " + std::to_string(kMaxTopologyPoints) + " points");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, body] = lines[i];
    if (!body.starts_with("open:")) fail(ErrorCode::kParse, source, number, "expected 'open:'");
    Subset s = 0;
    for (const auto& name : words_of(std::string_view(body).substr(5))) {
      s |= singleton(point_at(points, name, source, number));
    }
    opens.push_back(s);
  }
  try {
    return FiniteTopology::validate(std::move(points), std::move(opens));
  } catch (const Error& e) {
    fail(e.code(), source, lines.front().number, e.detail());
  }
}

std::string format_metric(const QuasiPseudometric& d) {
  const auto& pts = d.points();
  std::string out = "points:";
  for (const auto& name : pts.names()) out += " " + name;
  out += '\n';
  for (PointId x = 0; x < pts.size(); ++x) {
    for (PointId y = 0; y < pts.size(); ++y) {
      if (x != y) out += pts.name(x) + " " + pts.name(y) + " = " + format_rational(d(x, y)) + "\n";
    }
  }
  return out;
}

std::string format_topology(const FiniteTopology& t) {
  const auto& pts = t.points();
  std::string out = "points:";
  for (const auto& name : pts.names()) out += " " + name;
  out += '\n';
  for (Subset u : t.opens()) {
    if (u == 0 || u == t.full()) continue;
    out += "open:";
    for (PointId p = 0; p < pts.size(); ++p) {
      if (contains(u, p)) out += " " + pts.name(p);
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace graev
