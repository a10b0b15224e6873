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

// Group specifications, the verification corpus and the theorem suites.

#ifndef CONJCOVER_HARNESS_HPP_
#define CONJCOVER_HARNESS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "conjcover/constructions.hpp"
#include "conjcover/covering.hpp"
#include "conjcover/group_table.hpp"

namespace conjcover {

enum class GroupKind { kPerm, kDihedral, kSymmetric, kAlternating, kAgl1, kWreath, kCyclic };

// A recipe for a group. Which fields are meaningful depends on `kind`:
//   perm:                    degree, generators (cycle notation)
//   dihedral/symmetric/
//   alternating/cyclic:      n
//   agl1:                    p, k
//   wreath:                  parts[0] (base), copies, parts[1] (top)
struct GroupSpec {
  GroupKind kind = GroupKind::kPerm;
  std::size_t n = 0;
  std::size_t degree = 0;
  std::vector<std::string> generators;
  unsigned p = 0;
  unsigned k = 0;
  std::size_t copies = 0;
  std::vector<GroupSpec> parts;
};

// Accepts the JSON form ({"kind": "dihedral", "n": 7}, ...) or a shorthand:
//   dihedral:7  symmetric:5  alternating:5  cyclic:12  agl1:13:4
//   perm:5:(1 2 3 4 5);(1 2)
// Throws ParseError on malformed input.
GroupSpec parse_group_spec(std::string_view text);
GroupSpec group_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GroupSpec& spec);

struct ResolvedGroup {
  GroupPtr group;
  std::optional<SolvableFrame> frame;  // set for agl1
};

// Builds the group; CapExceeded when its order is over `cap`.
ResolvedGroup resolve(const GroupSpec& spec, std::size_t cap = default_order_cap());

struct CorpusEntry {
  std::string name;
  GroupSpec spec;
  std::size_t order;
};

// Dihedral D_2n for 3 <= n <= 32, Sym(n) for 2 <= n <= 6, Alt(n) for
// 3 <= n <= 6, AGL1(p, k) for p in {3, 5, 7, 11, 13} and every k > 1
// dividing p - 1, C_m for 2 <= m <= 16, Q_8, and M11 and A5 wr C2 when
// max_order allows. Entries are sorted by order, then name.
std::vector<CorpusEntry> build_corpus(std::size_t max_order);

struct SuiteConfig {
  unsigned threads = 1;
  bool domination_pruning = false;
  // Record per-check wall time. Off by default so reports are reproducible
  // byte for byte.
  bool timings = false;
};

struct CheckRecord {
  std::string claim;  // the statement being checked
  std::string check;  // short identifier of this instance
  nlohmann::json inputs;
  nlohmann::json expected;
  nlohmann::json observed;
  bool pass = false;
  std::optional<double> seconds;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0 && !checks.empty(); }
};

const std::vector<std::string>& suite_names();

// Throws InvalidArgument for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteConfig& config = {});

nlohmann::json to_json(const SuiteReport& report);
std::string to_text(const SuiteReport& report);

// Serialization of coverings in the CLI witness schema.
nlohmann::json witness_json(const GroupTable& g, const CoveringWitness& w);
nlohmann::json gamma_json(const Gamma& value);

}  // namespace conjcover

#endif  // CONJCOVER_HARNESS_HPP_
