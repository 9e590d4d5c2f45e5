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

#include "graev_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "graev/error.hpp"
#include "graev/extension.hpp"
#include "graev/inverse_family.hpp"
#include "graev/joiner.hpp"
#include "graev/schemes.hpp"
#include "graev/text_format.hpp"

namespace graev::cli {

QuasiPseudometric bench_metric() {
  constexpr std::size_t n = 5;
  std::vector<Rational> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = j > i ? Rational(j - i, 4) : Rational(i - j, 3);
      table[i * n + j] = v > 1 ? Rational(1) : v;
    }
  }
  return QuasiPseudometric::validate(PointSet::standard(n), std::move(table));
}

ReducedWord bench_word(std::size_t points, std::size_t length, std::uint32_t seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<std::size_t> pick(0, 2 * points - 1);
  std::vector<Letter> letters;
  while (letters.size() < length) {
    const std::size_t r = pick(gen);
    const auto p = static_cast<PointId>(r / 2);
    Letter l = r % 2 == 0 ? Letter::positive(p) : Letter::negative(p);
    if (!letters.empty() && letters.back() == l.inverse()) continue;
    letters.push_back(l);
  }
  return ReducedWord::from_letters(std::move(letters));
}

namespace {

using json = nlohmann::json;

class Output {
 public:
  Output(std::ostream& out, bool json_lines) : out_(out), json_(json_lines) {}

  void set_command(std::string command) { command_ = std::move(command); }

  void result(const json& input, const std::string& text, const json& value,
              std::string_view provenance) {
    if (json_) {
      out_ << json{{"command", command_},
                   {"input", input},
                   {"value", value},
                   {"provenance", provenance}}
                  .dump()
           << '\n';
    } else {
      out_ << text << '\n';
    }
  }

  void result(const json& input, const std::string& text, std::string_view provenance) {
    result(input, text, json(text), provenance);
  }

  // Returns the pass flag so callers can fold it into the exit code.
  bool check(const CheckLine& line) {
    json input{{"name", line.name}, {"instance", line.instance}};
    json value{{"pass", line.pass}, {"witness", line.witness}};
    result(input, format_check(line), value, "check");
    return line.pass;
  }

 private:
  std::ostream& out_;
  bool json_;
  std::string command_;
};

struct Inputs {
  std::string metric;
  bool sparse = false;
  std::string space;
};

QuasiPseudometric load_metric(const Inputs& in) {
  return parse_metric(read_text_file(in.metric), in.metric, in.sparse);
}

FiniteTopology load_topology(const std::string& path) {
  return parse_topology(read_text_file(path), path);
}

ReducedWord word_arg(const std::string& text, const PointSet& points, std::string_view flag) {
  try {
    return reduce(parse_word(text, points));
  } catch (const Error& e) {
    throw Error(e.code(), std::string(flag) + ": " + e.detail());
  }
}

std::string space_label(const std::string& path) { return path.empty() ? "-" : path; }

std::string subset_text(Subset s, const PointSet& points, std::string_view suffix = "") {
  return format_subset(s, points, suffix);
}

int exit_for(bool pass) { return pass ? kOk : kCheckFailed; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graev extension of quasi-pseudometrics to free groups", "graev"};
  app.require_subcommand(1);
  std::string format = "text";
  std::size_t jobs = 1;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}));
  app.add_option("--jobs", jobs, "Worker threads for sweeps")->check(CLI::Range(1, 256));

  Inputs in;
  auto metric_opts = [&](CLI::App* sub) {
    sub->add_option("--metric", in.metric, "Metric file")->required();
    sub->add_flag("--sparse", in.sparse, "Omitted pairs default to 0");
  };
  auto space_opt = [&](CLI::App* sub) {
    sub->add_option("--space", in.space, "Topology file")->required();
  };

  std::function<int(Output&)> action;
  auto on = [&](CLI::App* sub, std::function<int(Output&)> f) {
    sub->fallthrough();
    sub->callback([&action, f = std::move(f)] { action = f; });
  };

  // reduce
  std::string word_text;
  auto* reduce_cmd = app.add_subcommand("reduce", "Freely reduce a word");
  reduce_cmd->add_option("word", word_text, "Word, e.g. \"a b^-1 a\"")->required();
  on(reduce_cmd, [&](Output& o) -> int {
    PointSet points;
    auto g = reduce(parse_word(word_text, points, true));
    o.result({{"word", word_text}}, format_word(g, points), "exact");
    return kOk;
  });

  // prenorm
  std::string method = "dp";
  std::size_t brute_cap = kDefaultBruteForceCap;
  auto* prenorm_cmd = app.add_subcommand("prenorm", "Graev quasi-prenorm N_d of a word");
  metric_opts(prenorm_cmd);
  prenorm_cmd->add_option("--word", word_text, "Word")->required();
  prenorm_cmd->add_option("--method", method, "dp, brute or both")
      ->check(CLI::IsMember({"dp", "brute", "both"}));
  prenorm_cmd->add_option("--cap", brute_cap, "Longest word the brute force accepts");
  on(prenorm_cmd, [&](Output& o) -> int {
    GraevExtension ext(load_metric(in));
    auto g = word_arg(word_text, ext.points(), "--word");
    json input{{"metric", in.metric}, {"word", format_word(g, ext.points())}};
    std::optional<Rational> dp, brute;
    if (method != "brute") {
      dp = ext.prenorm_dp(g);
      o.result(input, format_rational(*dp), "dp");
    }
    if (method != "dp") {
      brute = ext.prenorm_bruteforce(g, brute_cap);
      o.result(input, format_rational(*brute), "bruteforce");
    }
    if (dp && brute) {
      const bool agree = *dp == *brute;
      o.result(input, agree ? "AGREE" : "DISAGREE", "comparison");
      return exit_for(agree);
    }
    return static_cast<int>(kOk);
  });

  // dist
  std::string from_text, to_text;
  auto* dist_cmd = app.add_subcommand("dist", "Two-sided invariant distance N_d(g^-1 h)");
  metric_opts(dist_cmd);
  dist_cmd->add_option("--from", from_text, "Word g")->required();
  dist_cmd->add_option("--to", to_text, "Word h")->required();
  on(dist_cmd, [&](Output& o) -> int {
    GraevExtension ext(load_metric(in));
    auto g = word_arg(from_text, ext.points(), "--from");
    auto h = word_arg(to_text, ext.points(), "--to");
    json input{{"metric", in.metric},
               {"from", format_word(g, ext.points())},
               {"to", format_word(h, ext.points())}};
    o.result(input, format_rational(ext.distance(g, h)), "dp");
    return kOk;
  });

  // ball
  std::string radius_text;
  std::size_t max_length = 1;
  auto* ball_cmd = app.add_subcommand("ball", "Words of length <= N within a strict radius");
  metric_opts(ball_cmd);
  ball_cmd->add_option("--center", word_text, "Centre word")->required();
  ball_cmd->add_option("--radius", radius_text, "Radius p/q")->required();
  ball_cmd->add_option("--max-length", max_length, "Universe FP_N");
  on(ball_cmd, [&](Output& o) -> int {
    GraevExtension ext(load_metric(in));
    auto c = word_arg(word_text, ext.points(), "--center");
    auto r = parse_rational(radius_text);
    if (r <= 0) throw Error(ErrorCode::kPreconditionViolation, "--radius must be positive");
    auto universe = enumerate_reduced_words(ext.points().size(), max_length);
    json input{{"metric", in.metric},
               {"center", format_word(c, ext.points())},
               {"radius", format_rational(r)},
               {"max_length", max_length}};
    for (const auto& h : ext.ball(c, r, universe)) {
      o.result(input, format_word(h, ext.points()), "dp");
    }
    return kOk;
  });

  // schemes
  auto* schemes_cmd = app.add_subcommand("schemes", "Non-crossing schemes");
  schemes_cmd->require_subcommand(1);
  std::size_t scheme_n = 0;
  std::string scheme_text;
  auto* enumerate_cmd = schemes_cmd->add_subcommand("enumerate", "All schemes on 2n positions");
  enumerate_cmd->add_option("n", scheme_n, "n")->required();
  on(enumerate_cmd, [&](Output& o) -> int {
    for (const auto& s : enumerate_schemes(scheme_n)) {
      o.result({{"n", scheme_n}}, format_scheme(s), "exact");
    }
    return kOk;
  });
  auto* validate_cmd = schemes_cmd->add_subcommand("validate", "Check a scheme such as \"1-4 2-3\"");
  validate_cmd->add_option("scheme", scheme_text, "Pairs i-j")->required();
  on(validate_cmd, [&](Output& o) -> int {
    json input{{"scheme", scheme_text}};
    try {
      auto s = parse_scheme(scheme_text);
      std::string text = std::string("VALID nested=") + (is_nested(s) ? "true" : "false");
      o.result(input, text, json{{"valid", true}, {"nested", is_nested(s)}}, "exact");
      return kOk;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kParse) throw;
      o.result(input, std::string("INVALID ") + e.what(),
               json{{"valid", false}, {"error", std::string(to_string(e.code()))},
                    {"detail", e.detail()}},
               "exact");
      return static_cast<int>(kCheckFailed);
    }
  });
  auto* normalize_cmd = schemes_cmd->add_subcommand("normalize", "Rewrite to a nested scheme");
  metric_opts(normalize_cmd);
  normalize_cmd->add_option("--word", word_text, "Representation word (may contain e)")->required();
  normalize_cmd->add_option("--scheme", scheme_text, "Scheme on the word")->required();
  on(normalize_cmd, [&](Output& o) -> int {
    ExtendedMetric dstar(load_metric(in));
    auto rep = Representation::of(parse_word(word_text, dstar.points()));
    auto s = parse_scheme(scheme_text);
    auto nested = nested_normalize(rep, s, dstar);
    json input{{"metric", in.metric}, {"word", word_text}, {"scheme", scheme_text}};
    o.result(input, "word: " + format_word(nested.rep.word, dstar.points()),
             format_word(nested.rep.word, dstar.points()), "construction");
    o.result(input, "scheme: " + format_scheme(nested.scheme), format_scheme(nested.scheme),
             "construction");
    auto cost = format_rational(gamma(dstar, nested.rep, nested.scheme));
    o.result(input, "gamma: " + cost, cost, "exact");
    return kOk;
  });

  // gamma
  auto* gamma_cmd = app.add_subcommand("gamma", "Scheme cost of a representation");
  metric_opts(gamma_cmd);
  gamma_cmd->add_option("--word", word_text, "Representation word (may contain e)")->required();
  gamma_cmd->add_option("--scheme", scheme_text, "Scheme on the word")->required();
  on(gamma_cmd, [&](Output& o) -> int {
    ExtendedMetric dstar(load_metric(in));
    auto word = parse_word(word_text, dstar.points());
    auto s = parse_scheme(scheme_text);
    json input{{"metric", in.metric}, {"word", word_text}, {"scheme", scheme_text}};
    o.result(input, format_rational(gamma(dstar, word, s)), "exact");
    return kOk;
  });

  // metric
  auto* metric_cmd = app.add_subcommand("metric", "Quasi-pseudometric files");
  metric_cmd->require_subcommand(1);
  auto* mvalidate_cmd = metric_cmd->add_subcommand("validate", "Check the axioms");
  metric_opts(mvalidate_cmd);
  on(mvalidate_cmd, [&](Output& o) -> int {
    auto d = load_metric(in);
    std::string text = std::string("valid bounded_by_one=") + (d.bounded_by_one() ? "true" : "false");
    o.result({{"metric", in.metric}}, text,
             json{{"valid", true}, {"bounded_by_one", d.bounded_by_one()}}, "exact");
    return kOk;
  });
  auto* usc_cmd = metric_cmd->add_subcommand("usc", "Upper semi-continuity of every section");
  metric_opts(usc_cmd);
  space_opt(usc_cmd);
  on(usc_cmd, [&](Output& o) -> int {
    auto d = load_metric(in);
    auto t = load_topology(in.space);
    auto r = check_usc(d, t);
    std::string witness;
    if (r.witness) {
      witness = "B(" + d.points().name(r.witness->x) + "," + format_rational(r.witness->radius) +
                ")=" + subset_text(r.witness->ball, d.points());
      witness.erase(std::remove(witness.begin(), witness.end(), ' '), witness.end());
    }
    return exit_for(o.check({"usc", in.metric, r.ok, witness}));
  });
  auto* dstar_cmd = metric_cmd->add_subcommand("dstar", "The extension d* to X, e and X^-1");
  metric_opts(dstar_cmd);
  on(dstar_cmd, [&](Output& o) -> int {
    ExtendedMetric dstar(load_metric(in));
    for (std::size_t i = 0; i < dstar.alphabet_size(); ++i) {
      for (std::size_t j = 0; j < dstar.alphabet_size(); ++j) {
        auto x = format_letter(dstar.letter(i), dstar.points());
        auto y = format_letter(dstar.letter(j), dstar.points());
        auto v = format_rational(dstar(dstar.letter(i), dstar.letter(j)));
        o.result({{"metric", in.metric}, {"x", x}, {"y", y}}, x + " " + y + " = " + v, v, "exact");
      }
    }
    return kOk;
  });

  // topology
  auto* topology_cmd = app.add_subcommand("topology", "Finite topological spaces");
  topology_cmd->require_subcommand(1);
  std::string point_name;
  auto* closure_cmd = topology_cmd->add_subcommand("closure", "Closure of a point");
  space_opt(closure_cmd);
  closure_cmd->add_option("--point", point_name, "Point name")->required();
  on(closure_cmd, [&](Output& o) -> int {
    auto t = load_topology(in.space);
    auto s = t.closure_point(t.points().id(point_name));
    o.result({{"space", in.space}, {"point", point_name}}, subset_text(s, t.points()), "exact");
    return kOk;
  });
  auto* t1_cmd = topology_cmd->add_subcommand("t1", "Whether every point is closed");
  space_opt(t1_cmd);
  on(t1_cmd, [&](Output& o) -> int {
    auto t = load_topology(in.space);
    o.result({{"space", in.space}}, t.is_T1() ? "true" : "false", json(t.is_T1()), "exact");
    return kOk;
  });
  auto* inverse_cmd = topology_cmd->add_subcommand("inverse", "Open sets of T_A on X^-1");
  space_opt(inverse_cmd);
  on(inverse_cmd, [&](Output& o) -> int {
    auto t = load_topology(in.space);
    auto inv = inverse_topology(t).on_inverse;
    for (Subset u : inv.opens()) {
      o.result({{"space", in.space}}, subset_text(u, t.points(), "^-1"), "exact");
    }
    return kOk;
  });
  auto* duality_cmd = topology_cmd->add_subcommand("duality", "Closure duality and openness in T_A");
  space_opt(duality_cmd);
  on(duality_cmd, [&](Output& o) -> int {
    auto t = load_topology(in.space);
    auto first = [](const CheckReport& r) { return r.ok() ? std::string() : r.failures.front(); };
    auto dual = check_rez_duality(t);
    auto open = check_reznichenko(t);
    bool ok = o.check({"closure_duality", space_label(in.space), dual.ok(), first(dual)});
    ok = o.check({"closed_inverse_open", space_label(in.space), open.ok(), first(open)}) && ok;
    return exit_for(ok);
  });
  std::size_t family_cap = kDefaultFamilyCap;
  auto* family_cmd = topology_cmd->add_subcommand(
      "family", "Topology on X^-1 from the rho_U family, compared with T_A");
  space_opt(family_cmd);
  family_cmd->add_option("--cap", family_cap, "Largest metric family");
  on(family_cmd, [&](Output& o) -> int {
    auto t = load_topology(in.space);
    auto r = graev_family_topology_on_inverse(t, family_cap);
    json input{{"space", in.space}};
    for (Subset u : r.family_topology.opens()) {
      o.result(input, "family: " + subset_text(u, t.points(), "^-1"),
               subset_text(u, t.points(), "^-1"), "family");
    }
    for (Subset u : r.t_a.on_inverse.opens()) {
      o.result(input, "T_A: " + subset_text(u, t.points(), "^-1"),
               subset_text(u, t.points(), "^-1"), "exact");
    }
    o.result(input, std::string("REPORT family_equals_TA ") + space_label(in.space) +
                        (r.equal ? " true" : " false"),
             json(r.equal), "report");
    return exit_for(o.check({"family_within_TA", space_label(in.space), r.included, ""}));
  });

  // joiner
  auto* joiner_cmd = app.add_subcommand("joiner", "Basic neighbourhoods in FP_n");
  joiner_cmd->require_subcommand(1);
  std::string choice = "singletons", u_text, v_text, cert_out;
  bool refine = false, print_cert = false;
  auto* verify_cmd = joiner_cmd->add_subcommand("verify", "Certify a basic neighbourhood of w");
  space_opt(verify_cmd);
  verify_cmd->add_option("--word", word_text, "Reduced word w")->required();
  verify_cmd->add_option("--choice", choice, "singletons or full")
      ->check(CLI::IsMember({"singletons", "full"}));
  verify_cmd->add_option("--u", u_text, "Explicit U sets, e.g. \"a,b b\"");
  verify_cmd->add_option("--v", v_text, "Explicit V sets, one per distinct letter");
  verify_cmd->add_flag("--refine", refine, "Shrink U so every product has length n");
  verify_cmd->add_option("--certificate-out", cert_out, "Write the certificate here");
  verify_cmd->add_flag("--print-certificate", print_cert, "Print the certificate");
  auto parse_sets = [](const std::string& text, const PointSet& points) {
    std::vector<Subset> out;
    std::istringstream tokens(text);
    for (std::string token; tokens >> token;) {
      Subset s = 0;
      if (token != "-") {
        std::istringstream parts(token);
        for (std::string name; std::getline(parts, name, ',');) s |= singleton(points.id(name));
      }
      out.push_back(s);
    }
    return out;
  };
  on(verify_cmd, [&](Output& o) -> int {
    auto t = load_topology(in.space);
    auto w = word_arg(word_text, t.points(), "--word");
    auto inst = make_joiner_instance(t, w,
                                     choice == "full" ? NeighbourhoodChoice::kFullSpace
                                                      : NeighbourhoodChoice::kSingletons);
    if (!u_text.empty()) inst.u = parse_sets(u_text, t.points());
    if (!v_text.empty()) inst.v = parse_sets(v_text, t.points());
    if (refine) inst.u = refine_exact_length(inst);
    auto cert = verify_neighbourhood(inst);
    const auto& pts = t.points();
    json input{{"space", in.space}, {"word", format_word(w, pts)}};
    std::string trace;
    json trace_json = json::array();
    for (const auto& h : cert.trace()) {
      trace += (trace.empty() ? "" : ", ") + format_word(h, pts);
      trace_json.push_back(format_word(h, pts));
    }
    o.result(input, "trace: {" + trace + "}", trace_json, "certificate");
    o.result(input, std::string("fallback_metric: ") + (cert.fallback_metric ? "true" : "false"),
             json(cert.fallback_metric), "certificate");
    if (!cert_out.empty()) {
      std::ofstream f(cert_out);
      if (!f) throw Error(ErrorCode::kParse, cert_out + ": cannot write file");
      f << serialize_certificate(cert);
    }
    if (print_cert) o.result(input, serialize_certificate(cert), "certificate");
    std::string witness;
    if (cert.offending) {
      witness = "offending=" + format_word(*cert.offending, pts);
      std::replace(witness.begin(), witness.end(), ' ', '.');
    }
    std::string label = "w=" + format_word(w, pts);
    std::replace(label.begin(), label.end(), ' ', '.');
    return exit_for(o.check({"joiner_neighbourhood", label, cert.verdict, witness}));
  });
  std::string cert_path;
  auto* replay_cmd = joiner_cmd->add_subcommand("replay", "Recompute a saved certificate");
  replay_cmd->add_option("certificate", cert_path, "Certificate file")->required();
  on(replay_cmd, [&](Output& o) -> int {
    auto cert = parse_certificate(read_text_file(cert_path));
    bool same = replay(cert);
    bool ok = o.check({"certificate_replay", cert_path, same, ""});
    ok = o.check({"certificate_verdict", cert_path, cert.verdict, ""}) && ok;
    return exit_for(ok);
  });
  std::string target_text;
  auto* separate_cmd = joiner_cmd->add_subcommand("separate", "Neighbourhood of w missing a target");
  space_opt(separate_cmd);
  separate_cmd->add_option("--word", word_text, "Reduced word w")->required();
  separate_cmd->add_option("--target", target_text, "X, X^-1 or FP_n")->required();
  on(separate_cmd, [&](Output& o) -> int {
    auto t = load_topology(in.space);
    const auto& pts = t.points();
    auto w = word_arg(word_text, pts, "--word");
    SeparationTarget target;
    if (target_text == "X") {
      target = SeparationTarget::points();
    } else if (target_text == "X^-1") {
      target = SeparationTarget::inverse_points();
    } else if (target_text.starts_with("FP_")) {
      try {
        target = SeparationTarget::words_up_to(std::stoul(target_text.substr(3)));
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::kParse, "--target: bad FP_n '" + target_text + "'");
      }
    } else {
      throw Error(ErrorCode::kParse, "--target must be X, X^-1 or FP_n");
    }
    auto cert = separation_certificate(t, w, target);
    json input{{"space", in.space}, {"word", format_word(w, pts)}, {"target", target.describe()}};
    if (cert.kind == SeparationCertificate::Kind::kExponentSum) {
      std::string text = "exponent-sum: w in Z_" + std::to_string(cert.word_class) + ", " +
                         target.describe() + " in Z_" + std::to_string(cert.target_class);
      o.result(input, text,
               json{{"kind", "exponent-sum"},
                    {"word_class", cert.word_class},
                    {"target_class", cert.target_class}},
               "certificate");
    } else {
      std::string sets;
      json sets_json = json::array();
      for (std::size_t i = 0; i < w.length(); ++i) {
        auto s = subset_text(cert.neighbourhood->u[i], pts, w[i].sign < 0 ? "^-1" : "");
        sets += s;
        sets_json.push_back(s);
      }
      std::string text = "basic-neighbourhood: " + sets + " members of length " +
                         std::to_string(cert.member_length);
      o.result(input, text,
               json{{"kind", "basic-neighbourhood"},
                    {"sets", sets_json},
                    {"member_length", cert.member_length}},
               "certificate");
    }
    return kOk;
  });

  // equiv-conds
  std::size_t depth = 2;
  auto* equiv_cmd = app.add_subcommand("equiv-conds", "Surrogates for the eight T1 conditions");
  space_opt(equiv_cmd);
  equiv_cmd->add_option("--depth", depth, "Sweep words up to length depth + 1")
      ->check(CLI::Range(2, 6));
  on(equiv_cmd, [&](Output& o) -> int {
    auto t = load_topology(in.space);
    auto report = equiv_conds_battery(t, depth, jobs);
    bool ok = true;
    for (const auto& c : report.conditions) ok = o.check(c) && ok;
    std::string instance = report.conditions.front().instance;
    ok = o.check({"equivalence", instance, report.consistent(), ""}) && ok;
    return exit_for(ok);
  });

  // xpower
  std::size_t power = 2;
  auto* xpower_cmd = app.add_subcommand("xpower", "Copy of X^n inside FP_n");
  space_opt(xpower_cmd);
  xpower_cmd->add_option("--n", power, "Exponent n")->check(CLI::Range(1, 4));
  on(xpower_cmd, [&](Output& o) -> int {
    auto t = load_topology(in.space);
    auto r = x_power_check(t, power, jobs);
    std::string label = space_label(in.space) + ":n=" + std::to_string(power);
    auto first = [&]() { return r.failures.empty() ? std::string() : r.failures.front(); };
    bool ok = o.check({"xpower_injective", label, r.injective,
                       "image=" + std::to_string(r.image_size)});
    ok = o.check({"xpower_discrete", label, r.discrete, r.discrete ? "" : first()}) && ok;
    ok = o.check({"xpower_closed", label, r.closed, r.closed ? "" : first()}) && ok;
    return exit_for(ok);
  });

  // bench
  std::vector<std::size_t> lengths{10, 20, 40};
  auto* bench_cmd = app.add_subcommand("bench", "Time the interval recurrence");
  bench_cmd->add_option("--lengths", lengths, "Word lengths")->delimiter(',');
  on(bench_cmd, [&](Output& o) -> int {
    GraevExtension ext(bench_metric());
    for (auto len : lengths) {
      auto g = bench_word(ext.points().size(), len);
      auto start = std::chrono::steady_clock::now();
      auto v = ext.prenorm_dp(g);
      auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
      std::ostringstream text;
      text << "length=" << len << " value=" << format_rational(v) << " time_ms=" << elapsed.count();
      o.result({{"length", len}, {"points", ext.points().size()}}, text.str(),
               json{{"value", format_rational(v)}, {"time_ms", elapsed.count()}}, "dp");
    }
    return kOk;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Output output(out, format == "json-lines");
  std::string command;
  for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
    sub = sub->get_subcommands().front();
    command += (command.empty() ? "" : " ") + sub->get_name();
  }
  output.set_command(command);
  try {
    return action(output);
  } catch (const Error& e) {
    err << "graev " << command << ": " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "graev " << command << ": internal check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace graev::cli
