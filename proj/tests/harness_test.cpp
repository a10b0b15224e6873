// Copyright 2026 The conjcover Authors
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

#include <algorithm>
#include <string>

#include <gtest/gtest.h>

#include "conjcover/error.hpp"
#include "conjcover/harness.hpp"
#include "conjcover/structure.hpp"

namespace conjcover {
namespace {

TEST(GroupSpec, JsonAndShorthandAgree) {
  const GroupSpec a = parse_group_spec(R"({"kind": "dihedral", "n": 7})");
  const GroupSpec b = parse_group_spec("dihedral:7");
  EXPECT_EQ(to_json(a), to_json(b));
  EXPECT_EQ(resolve(a).group->order(), 14u);
}

TEST(GroupSpec, ResolveExamples) {
  const GroupSpec sym5 =
      parse_group_spec(R"j({"kind": "perm", "degree": 5, "generators": ["(1 2 3 4 5)", "(1 2)"]})j");
  EXPECT_EQ(resolve(sym5).group->order(), 120u);

  const ResolvedGroup agl = resolve(parse_group_spec(R"({"kind": "agl1", "p": 13, "k": 4})"));
  EXPECT_EQ(agl.group->order(), 52u);
  ASSERT_TRUE(agl.frame.has_value());
  EXPECT_EQ(agl.frame->k.order(), 4u);
}

TEST(GroupSpec, Shorthands) {
  EXPECT_EQ(resolve(parse_group_spec("symmetric:4")).group->order(), 24u);
  EXPECT_EQ(resolve(parse_group_spec("alternating:5")).group->order(), 60u);
  EXPECT_EQ(resolve(parse_group_spec("cyclic:12")).group->order(), 12u);
  EXPECT_EQ(resolve(parse_group_spec("agl1:13:4")).group->order(), 52u);
  EXPECT_EQ(resolve(parse_group_spec("perm:5:(1 2 3 4 5);(1 2)")).group->order(), 120u);
  EXPECT_EQ(resolve(parse_group_spec("perm:3:")).group->order(), 1u);
}

TEST(GroupSpec, WreathJsonRoundTrip) {
  const std::string text =
      R"({"kind": "wreath", "base": {"kind": "symmetric", "n": 3}, "copies": 2,
          "top": {"kind": "cyclic", "n": 2}})";
  const GroupSpec spec = parse_group_spec(text);
  EXPECT_EQ(resolve(spec).group->order(), 72u);
  EXPECT_EQ(to_json(group_spec_from_json(to_json(spec))), to_json(spec));
}

TEST(GroupSpec, Errors) {
  EXPECT_THROW(parse_group_spec(""), ParseError);
  EXPECT_THROW(parse_group_spec("dodecahedron:3"), ParseError);
  EXPECT_THROW(parse_group_spec("dihedral:x"), ParseError);
  EXPECT_THROW(parse_group_spec("dihedral"), ParseError);
  EXPECT_THROW(parse_group_spec("agl1:13"), ParseError);
  EXPECT_THROW(parse_group_spec("{\"kind\": \"dihedral\""), ParseError);
  EXPECT_THROW(parse_group_spec(R"({"kind": "agl1", "p": 13})"), ParseError);
  EXPECT_THROW(parse_group_spec(R"({"kind": "dihedral", "n": "seven"})"), ParseError);
  EXPECT_THROW(resolve(parse_group_spec("perm:3:(1 4)")), ParseError);
  EXPECT_THROW(resolve(parse_group_spec("agl1:13:5")), InvalidArgument);
  EXPECT_THROW(resolve(parse_group_spec("symmetric:8")), CapExceeded);
  EXPECT_THROW(resolve(parse_group_spec("symmetric:5"), 100), CapExceeded);
}

TEST(Corpus, GatedByMaxOrder) {
  const auto small = build_corpus(100);
  EXPECT_TRUE(std::none_of(small.begin(), small.end(), [](const CorpusEntry& e) { return e.name == "Sym5"; }));
  for (const auto& e : small) EXPECT_LE(e.order, 100u);

  const auto all = build_corpus(10000);
  const auto m11 = std::find_if(all.begin(), all.end(), [](const CorpusEntry& e) { return e.name == "M11"; });
  ASSERT_NE(m11, all.end());
  EXPECT_EQ(resolve(m11->spec).group->order(), 7920u);
}

TEST(Corpus, OrdersMatchResolvedGroupsAndMixNilpotency) {
  bool nilpotent = false, non_nilpotent = false;
  for (const auto& e : build_corpus(720)) {
    const ResolvedGroup rg = resolve(e.spec);
    EXPECT_EQ(rg.group->order(), e.order) << e.name;
    (is_nilpotent(*rg.group) ? nilpotent : non_nilpotent) = true;
  }
  EXPECT_TRUE(nilpotent);
  EXPECT_TRUE(non_nilpotent);
}

TEST(Suites, UnknownNameIsRejected) { EXPECT_THROW(run_suite("no-such-suite"), InvalidArgument); }

TEST(Suites, XnLemmaPassesAndCitesClaims) {
  const SuiteReport r = run_suite("xn-lemma");
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checks.size(), 26u);
  for (const auto& c : r.checks) {
    EXPECT_FALSE(c.claim.empty());
    EXPECT_FALSE(c.seconds.has_value());
  }
}

TEST(Suites, ReportsAreDeterministic) {
  const std::string a = to_json(run_suite("oracle-equivalence")).dump();
  const std::string b = to_json(run_suite("oracle-equivalence")).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(to_text(run_suite("oracle-equivalence")).find("17 passed, 0 failed"), std::string::npos);
}

TEST(Suites, TimingsAreOptIn) {
  SuiteConfig config;
  config.timings = true;
  const SuiteReport r = run_suite("xn-lemma", config);
  for (const auto& c : r.checks) EXPECT_TRUE(c.seconds.has_value());
  EXPECT_TRUE(to_json(r)["checks"][0].contains("seconds"));
}

TEST(Serialization, GammaAndWitness) {
  EXPECT_EQ(gamma_json(Gamma::infinite()), "infinity");
  EXPECT_EQ(gamma_json(Gamma::finite(4)), 4);
  const ResolvedGroup rg = resolve(parse_group_spec("dihedral:7"));
  const GammaResult res = gamma_cp_exact(*rg.group, 8);
  const auto j = witness_json(*rg.group, *res.witness);
  EXPECT_EQ(j["conjugators"].size(), 4u);
  EXPECT_EQ(j["conjugators"][0], "()");
  EXPECT_FALSE(j["base_generators"].empty());
}

}  // namespace
}  // namespace conjcover
