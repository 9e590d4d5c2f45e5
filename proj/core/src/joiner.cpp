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

#include "graev/joiner.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "graev/error.hpp"
#include "graev/inverse_family.hpp"
#include "graev/parallel.hpp"

namespace graev {

JoinerInstance make_joiner_instance(FiniteTopology space, ReducedWord w,
                                    NeighbourhoodChoice choice) {
  std::vector<Subset> u;
  for (const auto& l : w.letters()) {
    const bool full = choice == NeighbourhoodChoice::kFullSpace && l.sign > 0;
    u.push_back(full ? space.full() : singleton(l.point));
  }
  return JoinerInstance{std::move(space), std::move(w), std::move(u), std::nullopt};
}

LetterClasses letter_classes(const ReducedWord& w) {
  LetterClasses c;
  for (std::size_t i = 0; i < w.length(); ++i) {
    auto it = std::find(c.points.begin(), c.points.end(), w[i].point);
    std::size_t j = static_cast<std::size_t>(it - c.points.begin());
    if (it == c.points.end()) {
      c.points.push_back(w[i].point);
      c.positive_positions.emplace_back();
    }
    if (w[i].sign > 0) c.positive_positions[j].push_back(i);
  }
  return c;
}

void validate_instance(const JoinerInstance& inst) {
  const auto& t = inst.space;
  const auto& pts = t.points();
  if (!t.is_T1()) throw Error(ErrorCode::kNotT1, "the space is not T1");
  for (const auto& l : inst.w.letters()) {
    if (l.point >= t.size()) {
      throw Error(ErrorCode::kUnknownPoint, "w uses a point outside the space");
    }
  }
  if (inst.u.size() != inst.w.length()) {
    throw Error(ErrorCode::kLengthMismatch, std::to_string(inst.u.size()) + " U sets for a word of length " +
                                                std::to_string(inst.w.length()));
  }
  for (std::size_t i = 0; i < inst.u.size(); ++i) {
    const auto& l = inst.w[i];
    const std::string where = "U_" + std::to_string(i + 1) + " = " + format_subset(inst.u[i], pts);
    if (l.sign < 0) {
      if (inst.u[i] != singleton(l.point)) {
        throw Error(ErrorCode::kPreconditionViolation, where + " must be {" + pts.name(l.point) + "}");
      }
      continue;
    }
    if (!t.is_open(inst.u[i])) throw Error(ErrorCode::kPreconditionViolation, where + " is not open");
    if (!contains(inst.u[i], l.point)) {
      throw Error(ErrorCode::kPreconditionViolation, where + " misses " + pts.name(l.point));
    }
  }
  if (!inst.v) return;
  const auto classes = letter_classes(inst.w);
  const auto& v = *inst.v;
  if (v.size() != classes.points.size()) {
    throw Error(ErrorCode::kLengthMismatch, std::to_string(v.size()) + " V sets for " +
                                                std::to_string(classes.points.size()) +
                                                " distinct letters");
  }
  for (std::size_t j = 0; j < v.size(); ++j) {
    const std::string where = "V_" + std::to_string(j + 1) + " = " + format_subset(v[j], pts);
    if (!t.is_open(v[j])) throw Error(ErrorCode::kConditionViolation, where + " is not open");
    if (!contains(v[j], classes.points[j])) {
      throw Error(ErrorCode::kConditionViolation, where + " misses " + pts.name(classes.points[j]));
    }
    for (auto i : classes.positive_positions[j]) {
      if (!is_subset(v[j], inst.u[i])) {
        throw Error(ErrorCode::kConditionViolation,
                    "(i) " + where + " is not inside U_" + std::to_string(i + 1));
      }
    }
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k != j && contains(v[j], classes.points[k])) {
        throw Error(ErrorCode::kConditionViolation,
                    "(ii) " + where + " contains " + pts.name(classes.points[k]));
      }
    }
  }
}

std::vector<Subset> joiner_v_sets(const JoinerInstance& inst) {
  if (inst.v) return *inst.v;
  const auto classes = letter_classes(inst.w);
  std::vector<Subset> v;
  for (std::size_t j = 0; j < classes.points.size(); ++j) {
    Subset s = inst.space.full();
    for (auto i : classes.positive_positions[j]) s &= inst.u[i];
    for (std::size_t k = 0; k < classes.points.size(); ++k) {
      if (k != j) s &= ~singleton(classes.points[k]);
    }
    v.push_back(s);
  }
  return v;
}

QuasiPseudometric build_joiner_metric(const JoinerInstance& inst) {
  validate_instance(inst);
  const auto classes = letter_classes(inst.w);
  if (classes.points.size() < 2) return QuasiPseudometric::zero(inst.space.points());
  const auto v = joiner_v_sets(inst);
  std::vector<QuasiPseudometric> family;
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (j == k) continue;
      family.push_back(joiner_dij(inst.space, classes.points[j], classes.points[k], v[j]));
    }
  }
  return max_combine(family);
}

VerificationMetric verification_metric(const JoinerInstance& inst) {
  validate_instance(inst);
  const auto classes = letter_classes(inst.w);
  if (classes.points.size() != 1) return VerificationMetric{build_joiner_metric(inst), false};
  const PointId p = classes.points.front();
  const std::size_t n = inst.space.size();
  std::vector<Rational> closedness(n * n);
  for (PointId x = 0; x < n; ++x) {
    if (x != p) closedness[x * n + p] = 1;
  }
  const QuasiPseudometric parts[] = {
      rho_from_open_set(joiner_v_sets(inst).front(), inst.space),
      QuasiPseudometric::validate(inst.space.points(), std::move(closedness))};
  return VerificationMetric{max_combine(parts), true};
}

std::vector<ReducedWord> basic_neighbourhood(const JoinerInstance& inst) {
  std::set<ReducedWord> out;
  std::vector<Letter> letters;
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == inst.w.length()) {
      out.insert(reduce(Word(letters)));
      return;
    }
    for (PointId p = 0; p < inst.space.size(); ++p) {
      if (!contains(inst.u[i], p)) continue;
      letters.push_back(Letter{p, inst.w[i].sign});
      self(self, i + 1);
      letters.pop_back();
    }
  };
  walk(walk, 0);
  return {out.begin(), out.end()};
}

std::vector<ReducedWord> Certificate::trace() const {
  std::vector<ReducedWord> out;
  for (const auto& [h, value] : values) {
    if (value < 1) out.push_back(h);
  }
  return out;
}

namespace {

// Values and verdict for fixed sets and metric.
void evaluate(Certificate& cert, std::size_t cap) {
  const GraevExtension ext(cert.metric);
  const JoinerInstance inst{cert.space, cert.w, cert.u, cert.v};
  const auto b = basic_neighbourhood(inst);
  auto in_b = [&](const ReducedWord& h) { return std::binary_search(b.begin(), b.end(), h); };
  const auto universe = enumerate_reduced_words(cert.space.size(), cert.w.length(), cap);
  const ReducedWord w_inv = invert(cert.w);
  cert.values.clear();
  cert.offending.reset();
  cert.verdict = in_b(cert.w);
  if (!cert.verdict) cert.offending = cert.w;
  for (const auto& h : universe) {
    auto value = ext.prenorm(multiply(h, w_inv));
    if (value < 1 && !in_b(h) && cert.verdict) {
      cert.verdict = false;
      cert.offending = h;
    }
    cert.values.emplace_back(h, std::move(value));
  }
}

}  // namespace

Certificate verify_neighbourhood(const JoinerInstance& inst, std::size_t cap) {
  auto vm = verification_metric(inst);
  Certificate cert{inst.space,           inst.w,      inst.u, joiner_v_sets(inst),
                   std::move(vm.metric), vm.fallback, false,  std::nullopt,
                   {}};
  evaluate(cert, cap);
  return cert;
}

bool replay(const Certificate& cert, std::size_t cap) {
  const JoinerInstance inst{cert.space, cert.w, cert.u, cert.v};
  auto vm = verification_metric(inst);
  if (!(vm.metric == cert.metric) || vm.fallback != cert.fallback_metric) return false;
  Certificate again = cert;
  evaluate(again, cap);
  return again.verdict == cert.verdict && again.offending == cert.offending &&
         again.values == cert.values;
}

std::vector<Subset> refine_exact_length(const JoinerInstance& inst) {
  validate_instance(inst);
  auto u = inst.u;
  const auto& w = inst.w;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (w[i].sign < 0) continue;
    // A -1 neighbour {x} cancels against x in this slot.
    if (i > 0 && w[i - 1].sign < 0) u[i] &= ~singleton(w[i - 1].point);
    if (i + 1 < w.length() && w[i + 1].sign < 0) u[i] &= ~singleton(w[i + 1].point);
  }
  return u;
}

bool SeparationTarget::contains(const ReducedWord& w) const {
  switch (kind) {
    case Kind::kX:
      return w.length() == 1 && w[0].sign > 0;
    case Kind::kXInverse:
      return w.length() == 1 && w[0].sign < 0;
    case Kind::kBall:
      return w.length() <= n;
  }
  return false;
}

std::string SeparationTarget::describe() const {
  switch (kind) {
    case Kind::kX:
      return "X";
    case Kind::kXInverse:
      return "X^-1";
    case Kind::kBall:
      return "FP_" + std::to_string(n);
  }
  return "";
}

SeparationCertificate separation_certificate(const FiniteTopology& space, const ReducedWord& w,
                                             const SeparationTarget& target) {
  const auto& pts = space.points();
  if (target.contains(w)) {
    throw Error(ErrorCode::kNotSeparable, "[" + format_word(w, pts) + "] lies in " + target.describe());
  }
  SeparationCertificate cert;
  cert.w = w;
  cert.target = target;
  cert.word_class = exponent_sum(w);
  if (target.kind != SeparationTarget::Kind::kBall) {
    cert.target_class = target.kind == SeparationTarget::Kind::kX ? 1 : -1;
    if (cert.word_class != cert.target_class) return cert;
  }
  if (!space.is_T1()) {
    throw Error(ErrorCode::kNotT1, "separating [" + format_word(w, pts) + "] from " +
                                       target.describe() + " needs a basic neighbourhood");
  }
  cert.kind = SeparationCertificate::Kind::kJoiner;
  auto inst = make_joiner_instance(space, w, NeighbourhoodChoice::kSingletons);
  inst.u = refine_exact_length(inst);
  cert.neighbourhood = verify_neighbourhood(inst);
  cert.member_length = w.length();
  if (!cert.neighbourhood->verdict) {
    throw std::logic_error("basic neighbourhood of [" + format_word(w, pts) + "] failed verification");
  }
  for (const auto& m : basic_neighbourhood(inst)) {
    if (m.length() != cert.member_length || target.contains(m)) {
      throw std::logic_error("separating neighbourhood of [" + format_word(w, pts) + "] meets " +
                             target.describe());
    }
  }
  return cert;
}

std::string format_check(const CheckLine& line) {
  std::string out = "CHECK " + line.name + " " + line.instance + (line.pass ? " PASS" : " FAIL");
  if (!line.witness.empty()) out += " " + line.witness;
  return out;
}

namespace {

std::string describe_space(const FiniteTopology& t) {
  std::string out = "X={";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + t.points().name(PointId(i));
  out += "};T={";
  bool first = true;
  for (Subset u : t.opens()) {
    if (!first) out += ',';
    first = false;
    out += '{';
    bool inner = true;
    for (PointId p = 0; p < t.size(); ++p) {
      if (!contains(u, p)) continue;
      if (!inner) out += ',';
      inner = false;
      out += t.points().name(p);
    }
    out += '}';
  }
  return out + "}";
}

std::string bracket(const ReducedWord& w, const PointSet& pts) {
  std::string s = format_word(w, pts);
  std::replace(s.begin(), s.end(), ' ', '.');
  return "w=" + s;
}

// The first word (in the given order) for which `fails` returns a witness.
template <class F>
std::string first_failure(const std::vector<ReducedWord>& words, std::size_t jobs, F&& fails) {
  std::vector<std::string> witness(words.size());
  parallel_for(words.size(), jobs, [&](std::size_t i) { witness[i] = fails(words[i]); });
  for (auto& s : witness) {
    if (!s.empty()) return s;
  }
  return "";
}

std::string separation_failure(const FiniteTopology& t, const ReducedWord& w,
                               const SeparationTarget& target) {
  if (target.contains(w)) return "";
  try {
    separation_certificate(t, w, target);
    return "";
  } catch (const Error& e) {
    return bracket(w, t.points()) + ":" + std::string(to_string(e.code()));
  } catch (const std::logic_error&) {
    return bracket(w, t.points()) + ":Unverified";
  }
}

}  // namespace

bool EquivReport::consistent() const {
  if (conditions.empty()) return true;
  return std::all_of(conditions.begin(), conditions.end(),
                     [&](const CheckLine& c) { return c.pass == conditions.front().pass; });
}

EquivReport equiv_conds_battery(const FiniteTopology& space, std::size_t depth, std::size_t jobs) {
  if (depth < 2) throw Error(ErrorCode::kPreconditionViolation, "depth must be at least 2");
  const auto& pts = space.points();
  const std::string instance = describe_space(space);
  const auto words = enumerate_reduced_words(space.size(), depth + 1);
  EquivReport report;
  auto add = [&](std::string name, std::string witness, bool pass) {
    report.conditions.push_back(CheckLine{std::move(name), instance, pass, std::move(witness)});
  };
  auto sweep = [&](std::string name, const SeparationTarget& target) {
    auto witness = first_failure(words, jobs, [&](const ReducedWord& w) {
      return separation_failure(space, w, target);
    });
    add(std::move(name), witness, witness.empty());
  };

  add("cond1_X_T1", "", space.is_T1());

  {
    std::vector<Subset> subbase;
    for (Subset u : space.opens()) {
      auto opens = letter_ball_topology(GraevExtension(rho_from_open_set(u, space)), +1).opens();
      subbase.insert(subbase.end(), opens.begin(), opens.end());
    }
    auto on_x = FiniteTopology::generated_by(pts, subbase);
    std::string witness;
    if (!on_x.is_T1()) {
      for (PointId p = 0; p < space.size() && witness.empty(); ++p) {
        if (on_x.closure_point(p) != singleton(p)) witness = "cl(" + pts.name(p) + ")!={" + pts.name(p) + "}";
      }
    } else {
      std::vector<ReducedWord> small;
      for (const auto& w : words) {
        if (w.length() <= depth) small.push_back(w);
      }
      witness = first_failure(small, jobs, [&](const ReducedWord& w) -> std::string {
        auto cert = verify_neighbourhood(make_joiner_instance(space, w, NeighbourhoodChoice::kSingletons));
        if (cert.verdict && cert.trace() == std::vector<ReducedWord>{w}) return "";
        return bracket(w, pts) + ":trace";
      });
    }
    add("cond2_FP_T1", witness, witness.empty());
  }

  sweep("cond3_X_closed", SeparationTarget::points());

  const auto t_a = inverse_topology(space).on_inverse;
  add("cond4_Xinv_discrete", "", t_a.is_discrete());
  add("cond5_Xinv_T1", "", t_a.is_T1());

  sweep("cond6_Xinv_closed", SeparationTarget::inverse_points());

  std::vector<std::string> per_m;
  for (std::size_t m = 1; m <= depth; ++m) {
    per_m.push_back(first_failure(words, jobs, [&](const ReducedWord& w) {
      return separation_failure(space, w, SeparationTarget::words_up_to(m));
    }));
  }
  auto all_pass = std::find_if(per_m.begin(), per_m.end(), [](auto& s) { return !s.empty(); });
  add("cond7_FPn_closed_all", all_pass == per_m.end() ? "" : *all_pass, all_pass == per_m.end());
  bool some = std::any_of(per_m.begin(), per_m.end(), [](auto& s) { return s.empty(); });
  add("cond8_FPn_closed_some", some ? "" : per_m.front(), some);
  return report;
}

XPowerReport x_power_check(const FiniteTopology& space, std::size_t n, std::size_t jobs) {
  if (!space.is_T1()) throw Error(ErrorCode::kNotT1, "the space is not T1");
  const auto& pts = space.points();
  const std::size_t k = space.size();
  const std::size_t expected = [&] {
    std::size_t c = 1;
    for (std::size_t i = 0; i < n; ++i) c *= k;
    return c;
  }();
  const auto universe = enumerate_reduced_words(k, n);
  XPowerReport report;
  std::set<ReducedWord> image;
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t count = 0; count < expected; ++count) {
    std::vector<Letter> letters;
    for (auto d : digits) letters.push_back(Letter::positive(PointId(d)));
    image.insert(reduce(Word(letters)));
    for (std::size_t pos = 0; pos < n && ++digits[pos] == k; ++pos) digits[pos] = 0;
  }
  report.image_size = image.size();
  report.injective = image.size() == expected;
  if (!report.injective) report.failures.push_back("the product map is not injective");

  std::vector<ReducedWord> image_words(image.begin(), image.end());
  std::vector<std::string> bad(image_words.size());
  parallel_for(image_words.size(), jobs, [&](std::size_t i) {
    const auto& w = image_words[i];
    auto cert = verify_neighbourhood(make_joiner_instance(space, w, NeighbourhoodChoice::kSingletons));
    if (!cert.verdict || cert.trace() != std::vector<ReducedWord>{w}) {
      bad[i] = "no certified singleton neighbourhood at [" + format_word(w, pts) + "]";
    }
  });
  report.discrete = true;
  for (auto& b : bad) {
    if (b.empty()) continue;
    report.discrete = false;
    report.failures.push_back(b);
  }

  // The image lies in the open class Z_n; every other word of FP_n lies in
  // another class.
  report.closed = true;
  for (const auto& w : universe) {
    const bool in_image = image.contains(w);
    if (in_image != (exponent_sum(w) == static_cast<int>(n))) {
      report.closed = false;
      report.failures.push_back("[" + format_word(w, pts) + "] is not separated by its exponent sum");
    }
  }
  return report;
}

std::string serialize_certificate(const Certificate& cert) {
  const auto& pts = cert.space.points();
  auto set_token = [&](Subset s) {
    std::string out;
    for (PointId p = 0; p < pts.size(); ++p) {
      if (!contains(s, p)) continue;
      if (!out.empty()) out += ',';
      out += pts.name(p);
    }
    return out.empty() ? std::string("-") : out;
  };
  std::ostringstream out;
  out << "certificate 1\n";
  out << "points:";
  for (const auto& name : pts.names()) out << ' ' << name;
  out << '\n';
  for (Subset u : cert.space.opens()) {
    if (u != 0 && u != cert.space.full()) out << "open: " << set_token(u) << '\n';
  }
  out << "word: " << format_word(cert.w, pts) << '\n';
  out << "u:";
  for (Subset s : cert.u) out << ' ' << set_token(s);
  out << "\nv:";
  for (Subset s : cert.v) out << ' ' << set_token(s);
  out << '\n';
  for (PointId x = 0; x < pts.size(); ++x) {
    for (PointId y = 0; y < pts.size(); ++y) {
      if (x != y && cert.metric(x, y) != 0) {
        out << "metric: " << pts.name(x) << ' ' << pts.name(y) << " = "
            << format_rational(cert.metric(x, y)) << '\n';
      }
    }
  }
  out << "fallback: " << (cert.fallback_metric ? 1 : 0) << '\n';
  out << "verdict: " << (cert.verdict ? "PASS" : "FAIL") << '\n';
  if (cert.offending) out << "offending: " << format_word(*cert.offending, pts) << '\n';
  for (const auto& [h, value] : cert.values) {
    out << "value: " << format_word(h, pts) << " = " << format_rational(value) << '\n';
  }
  return out.str();
}

Certificate parse_certificate(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> void {
    throw Error(ErrorCode::kParse, "certificate line " + std::to_string(line_no) + ": " + what);
  };
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::optional<PointSet> pts;
  std::vector<Subset> opens;
  std::optional<ReducedWord> w, offending;
  std::vector<Subset> u, v;
  std::vector<Rational> table;
  bool fallback = false, verdict = false, header = false;
  std::vector<std::pair<ReducedWord, Rational>> values;

  auto need_points = [&]() -> const PointSet& {
    if (!pts) fail("points: must come first");
    return *pts;
  };
  auto parse_set = [&](const std::string& token) {
    Subset s = 0;
    if (token == "-") return s;
    std::istringstream parts(token);
    std::string name;
    while (std::getline(parts, name, ',')) s |= singleton(need_points().id(name));
    return s;
  };
  auto parse_sets = [&](const std::string& rest) {
    std::istringstream tokens(rest);
    std::vector<Subset> out;
    std::string token;
    while (tokens >> token) out.push_back(parse_set(token));
    return out;
  };
  auto split_eq = [&](const std::string& rest) {
    auto eq = rest.rfind('=');
    if (eq == std::string::npos) fail("expected '='");
    return std::pair{trim(rest.substr(0, eq)), trim(rest.substr(eq + 1))};
  };

  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != "certificate 1") fail("expected 'certificate 1'");
      header = true;
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'key: value'");
    const std::string key = line.substr(0, colon);
    const std::string rest = trim(line.substr(colon + 1));
    try {
      if (key == "points") {
        std::istringstream names(rest);
        std::vector<std::string> list;
        for (std::string n; names >> n;) list.push_back(n);
        pts = PointSet(std::move(list));
        table.assign(pts->size() * pts->size(), Rational(0));
      } else if (key == "open") {
        opens.push_back(parse_set(rest));
      } else if (key == "word") {
        w = parse_reduced_word(rest, need_points());
      } else if (key == "u") {
        u = parse_sets(rest);
      } else if (key == "v") {
        v = parse_sets(rest);
      } else if (key == "metric") {
        auto [pair, value] = split_eq(rest);
        std::istringstream names(pair);
        std::string a, b;
        names >> a >> b;
        table[need_points().id(a) * pts->size() + pts->id(b)] = parse_rational(value);
      } else if (key == "fallback") {
        fallback = rest == "1";
      } else if (key == "verdict") {
        if (rest != "PASS" && rest != "FAIL") fail("verdict must be PASS or FAIL");
        verdict = rest == "PASS";
      } else if (key == "offending") {
        offending = parse_reduced_word(rest, need_points());
      } else if (key == "value") {
        auto [word, value] = split_eq(rest);
        values.emplace_back(parse_reduced_word(word, need_points()), parse_rational(value));
      } else {
        fail("unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      if (std::string_view(e.what()).find("certificate line ") != std::string_view::npos) throw;
      fail(e.what());
    }
  }
  if (!header) fail("empty certificate");
  if (!w) fail("missing word:");
  const auto& points = need_points();
  opens.push_back(0);
  opens.push_back(full_set(points.size()));
  auto space = FiniteTopology::validate(points, std::move(opens));
  auto metric = QuasiPseudometric::validate(points, std::move(table));
  return Certificate{std::move(space), std::move(*w), std::move(u), std::move(v),
                     std::move(metric), fallback, verdict, std::move(offending), std::move(values)};
}

}  // namespace graev
