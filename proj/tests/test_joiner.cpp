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

#include <gtest/gtest.h>

#include "graev/error.hpp"
#include "graev/extension.hpp"
#include "graev/joiner.hpp"
#include "support.hpp"

namespace graev {
namespace {

using testing::neg;
using testing::pos;
using testing::R;
using testing::rw;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParse;
}

FiniteTopology disc(std::size_t n) { return FiniteTopology::discrete(PointSet::standard(n)); }

JoinerInstance singletons(std::size_t n, ReducedWord w) {
  return make_joiner_instance(disc(n), std::move(w), NeighbourhoodChoice::kSingletons);
}

TEST(JoinerMetric, Examples) {
  auto d = build_joiner_metric(singletons(2, rw({pos(0), pos(1)})));
  EXPECT_EQ(d(0, 1), 1);
  EXPECT_EQ(d(1, 0), 1);

  auto zero = QuasiPseudometric::zero(PointSet::standard(2));
  EXPECT_EQ(build_joiner_metric(singletons(2, rw({pos(0)}))), zero);
  EXPECT_EQ(build_joiner_metric(singletons(2, rw({pos(0), pos(0)}))), zero);
}

TEST(JoinerMetric, IsTheMaximumOfThePairMetrics) {
  for (const auto& w : enumerate_reduced_words(3, 3)) {
    for (auto choice : {NeighbourhoodChoice::kSingletons, NeighbourhoodChoice::kFullSpace}) {
      auto inst = make_joiner_instance(disc(3), w, choice);
      auto classes = letter_classes(w);
      auto v = joiner_v_sets(inst);
      auto d = build_joiner_metric(inst);
      ASSERT_TRUE(d.bounded_by_one());
      ASSERT_TRUE(check_usc(d, inst.space).ok);
      for (PointId x = 0; x < 3; ++x) {
        for (PointId y = 0; y < 3; ++y) {
          bool one = false;
          for (std::size_t j = 0; j < v.size(); ++j) {
            for (std::size_t k = 0; k < v.size(); ++k) {
              if (j == k) continue;
              const PointId xk = classes.points[k];
              one = one || (x != xk && y == xk) || (contains(v[j], x) && !contains(v[j], y));
            }
          }
          ASSERT_EQ(d(x, y), one ? 1 : 0);
        }
      }
    }
  }
}

TEST(JoinerMetric, FallbackForOneLetter) {
  auto vm = verification_metric(singletons(3, rw({pos(1), pos(1)})));
  EXPECT_TRUE(vm.fallback);
  // rho_{b} together with "y = b, x != b".
  EXPECT_EQ(vm.metric.table(),
            (std::vector<Rational>{R(0), R(1), R(0), R(1), R(0), R(1), R(0), R(1), R(0)}));
  EXPECT_FALSE(verification_metric(singletons(3, rw({pos(0), neg(1)}))).fallback);
}

TEST(LetterClasses, FirstOccurrenceOrder) {
  auto c = letter_classes(rw({neg(2), pos(0), pos(2), pos(0)}));
  EXPECT_EQ(c.points, (std::vector<PointId>{2, 0}));
  EXPECT_EQ(c.positive_positions,
            (std::vector<std::vector<std::size_t>>{{2}, {1, 3}}));
}

TEST(ValidateInstance, Errors) {
  auto sier = FiniteTopology::sierpinski();
  EXPECT_EQ(code_of([&] {
              validate_instance(make_joiner_instance(sier, rw({pos(0)}),
                                                     NeighbourhoodChoice::kSingletons));
            }),
            ErrorCode::kNotT1);
  EXPECT_EQ(code_of([&] { validate_instance(singletons(2, rw({pos(2)}))); }),
            ErrorCode::kUnknownPoint);

  auto inst = singletons(3, rw({pos(0), neg(1)}));
  auto bad = inst;
  bad.u.pop_back();
  EXPECT_EQ(code_of([&] { validate_instance(bad); }), ErrorCode::kLengthMismatch);
  bad = inst;
  bad.u[1] = 0b110;  // -1 slot must be exactly {b}
  EXPECT_EQ(code_of([&] { validate_instance(bad); }), ErrorCode::kPreconditionViolation);
  bad = inst;
  bad.u[0] = 0b010;  // misses a
  EXPECT_EQ(code_of([&] { validate_instance(bad); }), ErrorCode::kPreconditionViolation);

  bad = inst;
  bad.v = std::vector<Subset>{0b001};
  EXPECT_EQ(code_of([&] { validate_instance(bad); }), ErrorCode::kLengthMismatch);
  auto full = make_joiner_instance(disc(3), rw({pos(0), neg(1)}), NeighbourhoodChoice::kFullSpace);
  full.v = std::vector<Subset>{0b011, 0b010};  // V_1 holds b
  try {
    validate_instance(full);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConditionViolation);
    EXPECT_NE(std::string(e.what()).find("(ii)"), std::string::npos) << e.what();
  }
  auto wide = make_joiner_instance(disc(3), rw({pos(0), neg(1)}), NeighbourhoodChoice::kFullSpace);
  wide.u[0] = 0b101;
  wide.v = std::vector<Subset>{0b001, 0b010};
  EXPECT_NO_THROW(validate_instance(wide));
  auto narrow = inst;
  narrow.v = std::vector<Subset>{0b101, 0b010};  // V_1 not inside U_1 = {a}
  try {
    validate_instance(narrow);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConditionViolation);
    EXPECT_NE(std::string(e.what()).find("(i)"), std::string::npos) << e.what();
  }
}

TEST(DefaultVSets, SatisfyBothConditions) {
  for (const auto& w : enumerate_reduced_words(3, 3)) {
    auto inst = make_joiner_instance(disc(3), w, NeighbourhoodChoice::kFullSpace);
    auto v = joiner_v_sets(inst);
    inst.v = v;
    ASSERT_NO_THROW(validate_instance(inst));
  }
}

TEST(Verify, Examples) {
  auto cert = verify_neighbourhood(singletons(2, rw({pos(0), pos(1)})));
  EXPECT_TRUE(cert.verdict);
  EXPECT_EQ(cert.values.size(), 17u);
  EXPECT_EQ(cert.trace(), std::vector<ReducedWord>{rw({pos(0), pos(1)})});
  for (const auto& [h, value] : cert.values) {
    if (h != cert.w) EXPECT_GE(value, 1);
  }

  auto empty = verify_neighbourhood(singletons(2, ReducedWord{}));
  EXPECT_TRUE(empty.verdict);
  EXPECT_EQ(basic_neighbourhood(singletons(2, ReducedWord{})), std::vector<ReducedWord>{ReducedWord{}});

  EXPECT_EQ(code_of([] {
              verify_neighbourhood(make_joiner_instance(FiniteTopology::sierpinski(), rw({pos(0)}),
                                                        NeighbourhoodChoice::kSingletons));
            }),
            ErrorCode::kNotT1);
}

TEST(Verify, ValuesMatchAnIndependentExtension) {
  auto inst = singletons(3, rw({pos(0), neg(1), pos(0)}));
  auto cert = verify_neighbourhood(inst);
  GraevExtension ext(cert.metric);
  auto w_inv = invert(inst.w);
  ASSERT_EQ(cert.values.size(), count_reduced_words(3, 3));
  for (const auto& [h, value] : cert.values) {
    ASSERT_EQ(value, ext.prenorm_bruteforce(multiply(h, w_inv)));
  }
}

TEST(Verify, HoldsOnSmallDiscreteSpaces) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& w : enumerate_reduced_words(n, 3)) {
      for (auto choice : {NeighbourhoodChoice::kSingletons, NeighbourhoodChoice::kFullSpace}) {
        auto inst = make_joiner_instance(disc(n), w, choice);
        auto cert = verify_neighbourhood(inst);
        ASSERT_TRUE(cert.verdict) << format_word(w, inst.space.points());
        auto b = basic_neighbourhood(inst);
        ASSERT_TRUE(std::binary_search(b.begin(), b.end(), w));
        for (const auto& h : cert.trace()) ASSERT_TRUE(std::binary_search(b.begin(), b.end(), h));
        if (choice == NeighbourhoodChoice::kSingletons) {
          ASSERT_EQ(cert.trace(), std::vector<ReducedWord>{w});
        }
      }
    }
  }
}

TEST(Verify, DetectsANeighbourhoodThatIsTooSmall) {
  // Shrinking B below {w} cannot happen through U, so check the certificate
  // logic by replaying a tampered value.
  auto cert = verify_neighbourhood(singletons(2, rw({pos(0), pos(1)})));
  EXPECT_TRUE(replay(cert));
  auto tampered = cert;
  tampered.values[3].second = R(1, 2);
  EXPECT_FALSE(replay(tampered));
  auto wrong_metric = cert;
  wrong_metric.metric = QuasiPseudometric::zero(cert.space.points());
  EXPECT_FALSE(replay(wrong_metric));
}

TEST(Certificate, TextRoundTrip) {
  for (const auto& w : {rw({pos(0), neg(1)}), rw({pos(2), pos(2)}), ReducedWord{}}) {
    auto cert = verify_neighbourhood(
        make_joiner_instance(disc(3), w, NeighbourhoodChoice::kFullSpace));
    auto text = serialize_certificate(cert);
    auto back = parse_certificate(text);
    EXPECT_EQ(back.space, cert.space);
    EXPECT_EQ(back.w, cert.w);
    EXPECT_EQ(back.u, cert.u);
    EXPECT_EQ(back.v, cert.v);
    EXPECT_EQ(back.metric, cert.metric);
    EXPECT_EQ(back.fallback_metric, cert.fallback_metric);
    EXPECT_EQ(back.verdict, cert.verdict);
    EXPECT_EQ(back.values, cert.values);
    EXPECT_EQ(serialize_certificate(back), text);
    EXPECT_TRUE(replay(back));
  }
  EXPECT_EQ(code_of([] { parse_certificate("certificate 2\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_certificate("garbage"); }), ErrorCode::kParse);
}

TEST(Refine, Examples) {
  auto inst = singletons(2, rw({pos(0), neg(1)}));
  EXPECT_EQ(refine_exact_length(inst), inst.u);

  auto pos_word = make_joiner_instance(disc(3), rw({pos(0), pos(1)}), NeighbourhoodChoice::kFullSpace);
  pos_word.u[1] = 0b010;
  EXPECT_EQ(refine_exact_length(pos_word), pos_word.u);

  auto mixed = make_joiner_instance(disc(2), rw({pos(0), neg(1)}), NeighbourhoodChoice::kFullSpace);
  EXPECT_EQ(refine_exact_length(mixed), (std::vector<Subset>{0b01, 0b10}));
}

TEST(Refine, EveryMemberHasExactLength) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& w : enumerate_reduced_words(n, 3)) {
      auto inst = make_joiner_instance(disc(n), w, NeighbourhoodChoice::kFullSpace);
      auto refined = inst;
      refined.u = refine_exact_length(inst);
      for (std::size_t i = 0; i < w.length(); ++i) {
        ASSERT_TRUE(is_subset(refined.u[i], inst.u[i]));
        ASSERT_TRUE(contains(refined.u[i], w[i].point));
      }
      auto b = basic_neighbourhood(refined);
      ASSERT_TRUE(std::binary_search(b.begin(), b.end(), w));
      for (const auto& m : b) ASSERT_EQ(m.length(), w.length());
    }
  }
}

TEST(Separation, Examples) {
  auto t = disc(2);
  auto aba = separation_certificate(t, rw({pos(0), pos(1), pos(0)}), SeparationTarget::words_up_to(2));
  EXPECT_EQ(aba.kind, SeparationCertificate::Kind::kJoiner);
  EXPECT_EQ(aba.member_length, 3u);
  ASSERT_TRUE(aba.neighbourhood.has_value());
  EXPECT_EQ(aba.neighbourhood->u, (std::vector<Subset>{0b01, 0b10, 0b01}));

  auto inv = separation_certificate(t, rw({neg(0)}), SeparationTarget::points());
  EXPECT_EQ(inv.kind, SeparationCertificate::Kind::kExponentSum);
  EXPECT_EQ(inv.word_class, -1);
  EXPECT_EQ(inv.target_class, 1);

  auto e = separation_certificate(t, ReducedWord{}, SeparationTarget::points());
  EXPECT_EQ(e.kind, SeparationCertificate::Kind::kExponentSum);
  EXPECT_EQ(e.word_class, 0);

  EXPECT_EQ(code_of([&] { separation_certificate(t, rw({pos(0)}), SeparationTarget::points()); }),
            ErrorCode::kNotSeparable);
  EXPECT_EQ(code_of([] {
              separation_certificate(FiniteTopology::sierpinski(), rw({pos(0), pos(1), neg(0)}),
                                     SeparationTarget::points());
            }),
            ErrorCode::kNotT1);
  // Exponent sums need no T1.
  EXPECT_NO_THROW(separation_certificate(FiniteTopology::sierpinski(), rw({neg(0)}),
                                         SeparationTarget::points()));
}

TEST(Separation, NeverTouchesTheTarget) {
  const SeparationTarget targets[] = {SeparationTarget::points(), SeparationTarget::inverse_points(),
                                      SeparationTarget::words_up_to(1),
                                      SeparationTarget::words_up_to(2)};
  for (const auto& target : targets) {
    for (const auto& w : enumerate_reduced_words(2, 3)) {
      if (target.contains(w)) continue;
      auto cert = separation_certificate(disc(2), w, target);
      if (cert.kind == SeparationCertificate::Kind::kExponentSum) {
        ASSERT_NE(cert.word_class, cert.target_class);
        ASSERT_EQ(cert.word_class, exponent_sum(w));
        continue;
      }
      JoinerInstance inst{cert.neighbourhood->space, w, cert.neighbourhood->u, std::nullopt};
      for (const auto& m : basic_neighbourhood(inst)) ASSERT_FALSE(target.contains(m));
    }
  }
}

TEST(EquivConds, Examples) {
  auto all_pass = equiv_conds_battery(disc(3));
  ASSERT_EQ(all_pass.conditions.size(), 8u);
  for (const auto& c : all_pass.conditions) EXPECT_TRUE(c.pass) << format_check(c);
  EXPECT_TRUE(all_pass.consistent());

  auto sier = equiv_conds_battery(FiniteTopology::sierpinski());
  EXPECT_FALSE(sier.conditions[0].pass);
  EXPECT_FALSE(sier.conditions[3].pass);
  EXPECT_FALSE(sier.conditions[4].pass);
  EXPECT_TRUE(sier.consistent());

  auto ind = equiv_conds_battery(FiniteTopology::indiscrete(PointSet::standard(2)));
  EXPECT_FALSE(ind.conditions[0].pass);
  EXPECT_TRUE(ind.consistent());

  EXPECT_EQ(format_check(all_pass.conditions[0]), "CHECK cond1_X_T1 X={a,b,c};T={{},{a},{b},{a,b},{c},{a,c},{b,c},{a,b,c}} PASS");
  EXPECT_EQ(code_of([] { equiv_conds_battery(disc(2), 1); }), ErrorCode::kPreconditionViolation);
}

TEST(EquivConds, ConsistentOnEverySpaceUpToThreePoints) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& t : all_topologies(n)) {
      auto r = equiv_conds_battery(t);
      ASSERT_TRUE(r.consistent()) << r.conditions.front().instance;
      ASSERT_EQ(r.conditions.front().pass, t.is_T1());
    }
  }
}

TEST(EquivConds, JobsDoNotChangeTheReport) {
  auto one = equiv_conds_battery(FiniteTopology::sierpinski(), 2, 1);
  auto four = equiv_conds_battery(FiniteTopology::sierpinski(), 2, 4);
  ASSERT_EQ(one.conditions.size(), four.conditions.size());
  for (std::size_t i = 0; i < one.conditions.size(); ++i) {
    EXPECT_EQ(format_check(one.conditions[i]), format_check(four.conditions[i]));
  }
}

TEST(XPower, Examples) {
  auto r22 = x_power_check(disc(2), 2);
  EXPECT_EQ(r22.image_size, 4u);
  EXPECT_TRUE(r22.ok());
  auto r21 = x_power_check(disc(2), 1);
  EXPECT_EQ(r21.image_size, 2u);
  EXPECT_TRUE(r21.ok());
  auto r32 = x_power_check(disc(3), 2);
  EXPECT_EQ(r32.image_size, 9u);
  EXPECT_TRUE(r32.ok());
  EXPECT_EQ(code_of([] { x_power_check(FiniteTopology::sierpinski(), 2); }), ErrorCode::kNotT1);
}

}  // namespace
}  // namespace graev
