// Copyright 2026 The seqalloc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "seqalloc/golden.hpp"
#include "seqalloc/instance_io.hpp"
#include "seqalloc/model.hpp"
#include "seqalloc/rational.hpp"
#include "support/random_instances.hpp"

namespace seqalloc {
namespace {

using ::testing::Contains;
using ::testing::HasSubstr;

TEST(Rational, ParsesDecimalsExactly) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("3.1"), Rational(31, 10));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-2.25"), Rational(-9, 4));
  EXPECT_EQ(parse_rational("31/10"), Rational(31, 10));
  EXPECT_GT(parse_rational("3.1"), parse_rational("3"));
}

TEST(Rational, RejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "--1", "1/"}) {
    EXPECT_THROW(parse_rational(bad), RationalParseError) << bad;
  }
}

TEST(Rational, PrintsExactly) {
  EXPECT_EQ(to_exact_string(Rational(31, 10)), "3.1");
  EXPECT_EQ(to_exact_string(Rational(5)), "5");
  EXPECT_EQ(to_exact_string(Rational(-9, 4)), "-2.25");
  EXPECT_EQ(to_exact_string(Rational(1, 8)), "0.125");
  EXPECT_EQ(to_exact_string(Rational(1, 3)), "1/3");
  for (const Rational& r : {Rational(7, 3), Rational(-1, 20), Rational(123456789, 1000)}) {
    EXPECT_EQ(parse_rational(to_exact_string(r)), r);
  }
}

TEST(Model, ValidatesExampleOne) {
  const Instance inst = golden::example1_instance();
  EXPECT_EQ(inst.num_agents(), 2u);
  EXPECT_EQ(inst.num_items(), 4u);
  EXPECT_EQ(inst.turns(inst.agent("1")), 2u);
  EXPECT_TRUE(inst.prefers(inst.agent("2"), inst.item("o3"), inst.item("o2")));
}

TEST(Model, SequenceLongerThanItemsIsRejected) {
  RawInstance raw{{"o1", "o2", "o3", "o4"},
                  {"1", "2"},
                  {{"o1", "o2", "o3", "o4"}, {"o1", "o3", "o2", "o4"}},
                  {"1", "2", "2", "1", "1"}};
  try {
    validate_instance(raw);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_THAT(e.diagnostics(), Contains(HasSubstr("sequence exceeds item count")));
  }
}

TEST(Model, IncompletePreferenceIsRejected) {
  RawInstance raw{{"o1", "o2", "o3", "o4"},
                  {"1", "2"},
                  {{"o1", "o2", "o3", "o4"}, {"o1", "o3", "o2"}},
                  {"1", "2", "2", "1"}};
  try {
    validate_instance(raw);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_THAT(e.diagnostics(), Contains(HasSubstr("incomplete preference")));
  }
}

TEST(Model, ReportsEveryProblemAtOnce) {
  RawInstance raw{{"a", "a", "b"},
                  {"1", "2"},
                  {{"a", "b", "b"}, {"a", "b"}},
                  {"1", "3"}};
  try {
    validate_instance(raw);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_THAT(e.diagnostics(), Contains(HasSubstr("duplicate item id")));
    EXPECT_THAT(e.diagnostics(), Contains(HasSubstr("unknown agent '3'")));
    EXPECT_GE(e.diagnostics().size(), 3u);
  }
}

TEST(Model, LexicographicUtilities) {
  const Preference abc{ItemId{0}, ItemId{1}, ItemId{2}};
  EXPECT_EQ(make_lexicographic_utilities(abc),
            (std::vector<Rational>{Rational(4), Rational(2), Rational(1)}));
  EXPECT_EQ(make_lexicographic_utilities(Preference{ItemId{0}}), std::vector<Rational>{Rational(1)});

  // Prefix dominance, checked by direct summation, on a shuffled order.
  Preference pref;
  for (std::uint32_t i = 0; i < 12; ++i) pref.push_back(ItemId{(i * 5) % 12});
  const auto u = make_lexicographic_utilities(pref);
  for (std::size_t k = 0; k < pref.size(); ++k) {
    Rational below = 0;
    for (std::size_t j = k + 1; j < pref.size(); ++j) below += u[pref[j].index];
    EXPECT_GT(u[pref[k].index], below);
  }
}

TEST(Model, BundleUtility) {
  const Instance inst = golden::counterexample_instance();
  const AgentId one = inst.agent("1");
  UtilityProfile u(3, 4);
  u.set(one, {Rational(31, 10), Rational(3), Rational(2), Rational(1)});
  EXPECT_EQ(bundle_utility(u, one, {inst.item("b"), inst.item("c")}), 5);
  EXPECT_EQ(bundle_utility(u, one, {}), 0);
  u.set(one, {Rational(4), Rational(3), Rational(2), Rational(1)});
  EXPECT_EQ(bundle_utility(u, one, {inst.item("a"), inst.item("d")}), 5);
  EXPECT_THROW(bundle_utility(u, one, {ItemId{9}}), std::out_of_range);
  EXPECT_THROW(bundle_utility(u, inst.agent("2"), {}), std::invalid_argument);
}

TEST(Model, UtilityAdditivityOnRandomSplits) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = testing::random_instance(rng, 1, 6, 6);
    const auto values = testing::random_consistent_utilities(rng, inst.preference(AgentId{0}));
    const UtilityProfile u = testing::utilities_for(inst, AgentId{0}, values);
    Bundle a, b;
    for (ItemId id : inst.items()) (testing::uniform(rng, 0, 1) ? a : b).insert(id);
    Bundle all = a;
    all.insert(b.begin(), b.end());
    EXPECT_EQ(bundle_utility(u, AgentId{0}, all),
              bundle_utility(u, AgentId{0}, a) + bundle_utility(u, AgentId{0}, b));
  }
}

TEST(Model, ConsistencyChecks) {
  const Preference pref{ItemId{2}, ItemId{0}, ItemId{1}};
  EXPECT_TRUE(is_consistent({Rational(5), Rational(1), Rational(9)}, pref));
  EXPECT_FALSE(is_consistent({Rational(5), Rational(6), Rational(9)}, pref));
  EXPECT_EQ(preference_from_utilities({Rational(5), Rational(1), Rational(9)}), pref);
  EXPECT_THROW(preference_from_utilities({Rational(5), Rational(5), Rational(9)}),
               InconsistentUtility);
  UtilityProfile u(1, 3);
  EXPECT_THROW(u.set(AgentId{0}, {Rational(1), Rational(0), Rational(2)}), ValidationError);
}

TEST(Model, AllocationMatrixColumnsSumToOne) {
  const Instance inst = golden::example1_instance();
  Allocation a(2, 4);
  a.record({0, AgentId{0}, ItemId{0}});
  a.record({1, AgentId{1}, ItemId{2}});
  const auto matrix = a.matrix();
  EXPECT_EQ(matrix[0][0] + matrix[1][0], 1);
  EXPECT_EQ(matrix[0][1] + matrix[1][1], 0);
  EXPECT_EQ(a.unallocated(), (Bundle{ItemId{1}, ItemId{3}}));
  EXPECT_THROW(a.record({2, AgentId{0}, ItemId{0}}), std::logic_error);
}

TEST(InstanceIo, ParsesExampleFile) {
  const InstanceFile file = parse_instance_file(R"(# comment
agents 2 items 4 seq 4
o1
o2
o3
o4
pref 1 : o1, o2, o3, o4
pref 2 : o1 o3 o2 o4   # trailing comment
seq : 1 2 2 1
util 1 : 3.1 3 2 1
)");
  EXPECT_EQ(file.instance, golden::example1_instance());
  EXPECT_TRUE(file.utilities.has(AgentId{0}));
  EXPECT_FALSE(file.utilities.has(AgentId{1}));
  EXPECT_EQ(file.utilities.value(AgentId{0}, file.instance.item("o1")), Rational(31, 10));
}

TEST(InstanceIo, DiagnosticsCarryLineNumbers) {
  try {
    parse_instance_file("agents 1 items 2 seq 1\na\nb\npref 1 : a b\nseq : 1\nbogus line here\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_THAT(e.diagnostics(), Contains(HasSubstr("line 6: ")));
  }
}

TEST(InstanceIo, RoundTripsRandomInstances) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_instance_between(rng, testing::uniform(rng, 1, 4), 1, 9);
    UtilityProfile u(inst.num_agents(), inst.num_items());
    for (AgentId a : inst.agents()) {
      if (testing::uniform(rng, 0, 1)) {
        auto values = testing::random_consistent_utilities(rng, inst.preference(a));
        for (Rational& v : values) v /= 7;  // force non-terminating fractions
        u.set(a, values);
      }
    }
    const std::string text = serialize_instance(inst, &u);
    const InstanceFile back = parse_instance_file(text);
    EXPECT_EQ(back.instance, inst);
    for (AgentId a : inst.agents()) {
      ASSERT_EQ(back.utilities.has(a), u.has(a));
      if (u.has(a)) {
        EXPECT_EQ(back.utilities.values(a), u.values(a));
      }
    }
    EXPECT_EQ(serialize_instance(back.instance, &back.utilities), text);
  }
}

}  // namespace
}  // namespace seqalloc
