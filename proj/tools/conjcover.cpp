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

// Command-line front end: exact gamma, rank, explicit coverings, the X_n
// set, theorem suites and a corpus survey.
//
// Exit status: 0 success, 1 a suite check failed, 2 bad input,
// 3 group over the order cap, 4 search limit exhausted.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "conjcover/constructions.hpp"
#include "conjcover/covering.hpp"
#include "conjcover/error.hpp"
#include "conjcover/harness.hpp"
#include "conjcover/structure.hpp"

namespace {

using nlohmann::json;
using namespace conjcover;

struct GlobalOptions {
  std::string format = "text";
  std::size_t cap = 0;  // 0: default_order_cap()
  unsigned threads = 1;
  bool domination_pruning = false;

  std::size_t order_cap() const { return cap ? cap : default_order_cap(); }
  SearchOptions search() const { return SearchOptions{domination_pruning, threads}; }
  bool json_output() const { return format == "json"; }
};

void emit(const GlobalOptions& opts, const json& j, const std::string& text) {
  if (opts.json_output())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// "stabilizer:<point>" (1-based) or generators in cycle notation separated
// by ';'.
Subgroup parse_subgroup(const GroupTable& g, const std::string& text) {
  const std::string prefix = "stabilizer:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string point = text.substr(prefix.size());
    std::size_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoul(point, &used);
      if (used != point.size()) throw std::invalid_argument(point);
    } catch (const std::exception&) {
      throw ParseError("expected a point number after 'stabilizer:'", prefix.size());
    }
    if (value == 0) throw InvalidArgument("points are numbered from 1");
    return point_stabilizer(g, static_cast<Point>(value - 1));
  }
  std::vector<Elem> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const Permutation p = parse_cycles(std::string_view(text).substr(start, end - start), g.degree());
    const auto idx = g.find(p);
    if (!idx) throw InvalidArgument(p.to_cycles() + " is not an element of the group");
    gens.push_back(*idx);
    start = end + 1;
  }
  return subgroup_closure(g, gens);
}

std::string join_cycles(const json& arr) {
  std::string out;
  for (const auto& s : arr) out += (out.empty() ? "" : ", ") + s.get<std::string>();
  return out;
}

json bounds_json(const GroupTable& g, std::span<const ClassGamma> classes) {
  unsigned lower = std::numeric_limits<unsigned>::max();
  std::size_t rank_plus_one = std::numeric_limits<std::size_t>::max();
  for (const auto& c : classes) {
    lower = std::min(lower, order_lower_bound(g.order(), c.representative.order()));
    rank_plus_one = std::min(rank_plus_one, rank(g, c.representative).r + 1);
  }
  return json{{"lower", lower},
              {"upper", 4.0 * std::log2(static_cast<double>(g.order()))},
              {"rank_plus_one", rank_plus_one}};
}

std::string witness_text(const json& w) {
  return "witness base <" + join_cycles(w["base_generators"]) + ">\nconjugators " +
         join_cycles(w["conjugators"]) + "\n";
}

int cmd_gamma(const GlobalOptions& opts, const std::string& spec_text, unsigned limit, bool oracle) {
  const ResolvedGroup rg = resolve(parse_group_spec(spec_text), opts.order_cap());
  const GroupTable& g = *rg.group;
  const GammaResult res = gamma_cp_exact(g, limit, opts.search());

  json out{{"order", g.order()}, {"gamma", gamma_json(res.value)}};
  std::ostringstream text;
  text << "order " << g.order() << "\ngamma " << res.value.to_string() << "\n";
  if (res.witness) {
    out["witness"] = witness_json(g, *res.witness);
    out["bounds"] = bounds_json(g, res.per_class);
    json per_class = json::array();
    for (const auto& c : res.per_class)
      per_class.push_back({{"subgroup_order", c.representative.order()},
                           {"k", c.k ? json(*c.k) : json("exceeded")}});
    out["per_class"] = per_class;
    text << witness_text(out["witness"]) << "bounds lower " << out["bounds"]["lower"]
         << ", rank+1 " << out["bounds"]["rank_plus_one"] << ", 4 log2|G| "
         << out["bounds"]["upper"].get<double>() << "\n";
  } else {
    out["witness"] = nullptr;
  }
  if (oracle) {
    const GammaResult o = gamma_bruteforce_oracle(g, limit);
    out["oracle"] = gamma_json(o.value);
    out["oracle_agrees"] = o.value == res.value;
    text << "oracle " << o.value.to_string() << (o.value == res.value ? " (agrees)" : " (DISAGREES)")
         << "\n";
  }
  emit(opts, out, text.str());
  return oracle && out["oracle_agrees"] == false ? 1 : 0;
}

int cmd_rank(const GlobalOptions& opts, const std::string& spec_text, const std::string& sub) {
  const ResolvedGroup rg = resolve(parse_group_spec(spec_text), opts.order_cap());
  const GroupTable& g = *rg.group;
  const Subgroup m = parse_subgroup(g, sub);
  const RankResult r = rank(g, m);
  json reps = json::array();
  for (Elem x : r.representatives) reps.push_back(g.element(x).to_cycles());
  const bool normal = is_normal(m);
  const bool maximal = is_maximal(m);
  const json out{{"order", g.order()},     {"subgroup_order", m.order()}, {"rank", r.r},
                 {"rank_plus_one", r.r + 1}, {"normal", normal},          {"maximal", maximal},
                 {"double_coset_representatives", reps}};
  std::ostringstream text;
  text << "order " << g.order() << ", subgroup order " << m.order() << "\nrank " << r.r
       << (normal ? " (normal)" : "") << (maximal ? " (maximal)" : " (not maximal)")
       << "\ndouble coset representatives " << join_cycles(reps) << "\n";
  emit(opts, out, text.str());
  return 0;
}

int cmd_factor(const GlobalOptions& opts, const std::string& spec_text, const std::string& method,
               const std::string& sub, unsigned limit) {
  const GroupSpec spec = parse_group_spec(spec_text);
  const ResolvedGroup rg = resolve(spec, opts.order_cap());
  const GroupTable* g = rg.group.get();
  GroupPtr keep_alive;
  std::optional<CoveringWitness> witness;
  json extra = json::object();

  if (method == "bfs") {
    if (!sub.empty()) {
      const Subgroup m = parse_subgroup(*g, sub);
      const SubgroupGamma sg = gamma_for_subgroup(*g, m, limit, opts.search());
      if (!sg.k) throw SearchLimitExceeded("no covering within the limit", {});
      witness = CoveringWitness{m, sg.conjugators};
      extra["states_visited"] = sg.states_visited;
    } else {
      GammaResult res = gamma_cp_exact(*g, limit, opts.search());
      if (!res.witness) throw InvalidArgument("the group is nilpotent: gamma is infinity");
      witness = std::move(res.witness);
    }
  } else if (method == "rank") {
    Subgroup m = Subgroup::trivial(*g);
    if (!sub.empty()) {
      m = parse_subgroup(*g, sub);
    } else {
      // The non-normal maximal class of least rank.
      std::vector<Subgroup> candidates;
      for (auto& mx : maximal_subgroups(*g))
        if (!mx.is_normal) candidates.push_back(std::move(mx.subgroup));
      const auto reps = conjugacy_class_representatives(candidates);
      if (reps.empty()) throw InvalidArgument("the group is nilpotent: no non-normal maximal subgroup");
      m = *std::min_element(reps.begin(), reps.end(), [&](const Subgroup& a, const Subgroup& b) {
        return rank(*g, a).r < rank(*g, b).r;
      });
    }
    const RankFactorization rf = rank_factorization(*g, m);
    extra["k0"] = rf.k0;
    extra["rank"] = rf.r;
    extra["power_sizes"] = rf.power_sizes;
    extra["recurrence_holds"] = rf.recurrence_holds;
    witness = rf.witness;
  } else if (method == "dihedral") {
    if (spec.kind != GroupKind::kDihedral)
      throw InvalidArgument("method dihedral needs a dihedral spec with an odd prime n");
    DihedralCovering dc = dihedral_factorization(static_cast<unsigned>(spec.n));
    keep_alive = dc.group;
    g = keep_alive.get();
    extra["rotations_covered"] = dc.rotations_covered;
    extra["rotations_times_reflection_is_group"] = dc.rotations_times_reflection_is_group;
    extra["alternating_sums_covered"] = dc.alternating_sums_covered;
    witness = dc.witness;
  } else if (method == "solvable") {
    if (!rg.frame) throw InvalidArgument("method solvable needs an agl1 spec");
    witness = solvable_covering(*rg.frame);
    const SolvableBounds b = solvable_bounds(rg.frame->p, rg.frame->n,
                                             static_cast<unsigned>(rg.frame->k.order()));
    extra["solvable_bounds"] = {{"lower", b.lower}, {"upper", b.upper}};
  } else {
    throw InvalidArgument("unknown method '" + method + "'");
  }

  const WitnessReport report = verify_witness(*g, *witness);
  json out{{"order", g->order()},
           {"method", method},
           {"length", witness->length()},
           {"witness", witness_json(*g, *witness)},
           {"valid", report.valid},
           {"product_size", report.product_size}};
  out.update(extra);
  std::ostringstream text;
  text << "order " << g->order() << ", method " << method << "\nlength " << witness->length()
       << "\n"
       << witness_text(out["witness"]) << "product size " << report.product_size
       << (report.valid ? " (valid covering)" : " (NOT a covering)") << "\n";
  emit(opts, out, text.str());
  return report.valid ? 0 : 1;
}

int cmd_xset(const GlobalOptions& opts, unsigned n, std::optional<std::uint64_t> mod) {
  const XSet xs = x_set(n);
  json out{{"n", n}, {"size", xs.values.size()}, {"values", xs.values}};
  std::ostringstream text;
  text << "X_" << n << " has " << xs.values.size() << " elements, from " << xs.values.front()
       << " to " << xs.values.back() << "\n";
  if (mod) {
    const bool covered = x_set_mod_coverage(n, *mod);
    out["mod"] = *mod;
    out["covers_1_to_k"] = covered;
    text << "{1.." << *mod << "} in X_" << n << " mod " << *mod + 1 << ": "
         << (covered ? "yes" : "no") << "\n";
  }
  emit(opts, out, text.str());
  return 0;
}

int cmd_suite(const GlobalOptions& opts, const std::string& name, bool heavy, bool timings) {
  SuiteConfig config{opts.threads, opts.domination_pruning, timings};
  std::vector<std::string> names;
  if (name == "all") {
    for (const auto& s : suite_names())
      if (heavy || (s != "table1-m11" && s != "wreath-smoke")) names.push_back(s);
  } else {
    names.push_back(name);
  }
  bool ok = true;
  json reports = json::array();
  std::string text;
  for (const auto& s : names) {
    const SuiteReport r = run_suite(s, config);
    ok = ok && r.ok();
    reports.push_back(to_json(r));
    text += to_text(r);
  }
  emit(opts, names.size() == 1 ? reports.front() : reports, text);
  return ok ? 0 : 1;
}

int cmd_survey(const GlobalOptions& opts, std::size_t max_order, unsigned limit) {
  json rows = json::array();
  std::ostringstream text;
  text << "name            order  nilpotent  solvable  qmnn   gamma     lower  rank+1\n";
  for (const auto& e : build_corpus(max_order)) {
    const ResolvedGroup rg = resolve(e.spec, opts.order_cap());
    const GroupTable& g = *rg.group;
    json row{{"name", e.name},
             {"spec", to_json(e.spec)},
             {"order", g.order()},
             {"nilpotent", is_nilpotent(g)},
             {"solvable", is_solvable(g)},
             {"qmnn", is_qmnn(g)}};
    const LatticeCaps caps;
    if (g.order() <= caps.max_group_order) {
      const GammaResult res = gamma_cp_exact(g, limit, opts.search());
      row["gamma"] = gamma_json(res.value);
      row["bounds"] = res.witness ? bounds_json(g, res.per_class) : json(nullptr);
    } else {
      row["gamma"] = "skipped (over the lattice cap)";
      row["bounds"] = nullptr;
    }
    auto cell = [](const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); };
    std::string lower = "-", rp1 = "-";
    if (!row["bounds"].is_null()) {
      lower = row["bounds"]["lower"].dump();
      rp1 = row["bounds"]["rank_plus_one"].dump();
    }
    char line[160];
    std::snprintf(line, sizeof line, "%-15s %5zu  %-9s  %-8s  %-5s  %-8s  %5s  %6s\n",
                  e.name.c_str(), g.order(), row["nilpotent"].get<bool>() ? "yes" : "no",
                  row["solvable"].get<bool>() ? "yes" : "no", row["qmnn"].get<bool>() ? "yes" : "no",
                  cell(row["gamma"]).substr(0, 8).c_str(), lower.c_str(), rp1.c_str());
    text << line;
    rows.push_back(std::move(row));
  }
  emit(opts, json{{"max_order", max_order}, {"groups", rows}}, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugate product coverings of finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cap", opts.cap, "Largest admissible group order (default 10000 or "
                                    "$CONJCOVER_MAX_ORDER)");
  app.add_option("--threads", opts.threads, "Worker threads for per-class searches")
      ->check(CLI::Range(1u, 256u));
  app.add_flag("--domination-pruning", opts.domination_pruning,
               "Skip search states contained in known failures");

  std::string spec;
  std::string subgroup;
  std::string method = "bfs";
  std::string suite_name;
  unsigned limit = 32;
  bool oracle = false;
  bool heavy = false;
  bool timings = false;
  unsigned xn = 1;
  std::optional<std::uint64_t> mod;
  std::size_t max_order = 200;

  auto* gamma = app.add_subcommand("gamma", "Exact gamma with a minimal witness");
  gamma->add_option("spec", spec, "Group spec (JSON or shorthand such as dihedral:7)")->required();
  gamma->add_option("--limit", limit, "Largest covering length searched");
  gamma->add_flag("--oracle", oracle, "Cross-check with exhaustive search (tiny groups)");

  auto* rank_cmd = app.add_subcommand("rank", "Rank of a subgroup (number of double cosets)");
  rank_cmd->add_option("spec", spec, "Group spec")->required();
  rank_cmd->add_option("--subgroup", subgroup, "Generators '(1 2);(3 4)' or stabilizer:<pt>")
      ->required();

  auto* factor = app.add_subcommand("factor", "Build and verify an explicit covering");
  factor->add_option("spec", spec, "Group spec")->required();
  factor->add_option("--method", method, "Construction")
      ->check(CLI::IsMember({"bfs", "rank", "dihedral", "solvable"}));
  factor->add_option("--subgroup", subgroup, "Base subgroup for bfs or rank");
  factor->add_option("--limit", limit, "Largest covering length searched (bfs)");

  auto* xset = app.add_subcommand("xset", "The alternating-sum set X_n");
  xset->add_option("n", xn, "Number of exponents")->required()->check(CLI::Range(1u, 24u));
  xset->add_option("--mod", mod, "Check {1..k} in X_n mod (k+1)");

  auto* suite = app.add_subcommand("suite", "Run a theorem suite ('all' for every suite)");
  suite->add_option("name", suite_name, "Suite name")->required();
  suite->add_flag("--heavy", heavy, "Include the M11 and wreath suites in 'all'");
  suite->add_flag("--timings", timings, "Record per-check wall time");

  auto* survey = app.add_subcommand("survey", "Structure and gamma of the corpus");
  survey->add_option("--max-order", max_order, "Largest corpus group order");
  survey->add_option("--limit", limit, "Largest covering length searched");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gamma) return cmd_gamma(opts, spec, limit, oracle);
    if (*rank_cmd) return cmd_rank(opts, spec, subgroup);
    if (*factor) return cmd_factor(opts, spec, method, subgroup, limit);
    if (*xset) return cmd_xset(opts, xn, mod);
    if (*suite) return cmd_suite(opts, suite_name, heavy, timings);
    if (*survey) return cmd_survey(opts, max_order, limit);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SearchLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
