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

#include "conjcover/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <utility>

#include "conjcover/error.hpp"
#include "conjcover/structure.hpp"

namespace conjcover {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Group specifications

namespace {

struct KindName {
  GroupKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {GroupKind::kPerm, "perm"},         {GroupKind::kDihedral, "dihedral"},
    {GroupKind::kSymmetric, "symmetric"}, {GroupKind::kAlternating, "alternating"},
    {GroupKind::kAgl1, "agl1"},         {GroupKind::kWreath, "wreath"},
    {GroupKind::kCyclic, "cyclic"},
};

const char* kind_name(GroupKind kind) {
  for (const auto& kn : kKindNames)
    if (kn.kind == kind) return kn.name;
  return "?";
}

GroupKind kind_from_name(std::string_view name, std::size_t position) {
  for (const auto& kn : kKindNames)
    if (name == kn.name) return kn.kind;
  throw ParseError("unknown group kind '" + std::string(name) + "'", position);
}

std::size_t parse_count(std::string_view text, std::size_t position) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw ParseError("expected a non-negative integer, got '" + std::string(text) + "'", position);
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at == std::string_view::npos ? at : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

GroupSpec parse_shorthand(std::string_view text) {
  const std::size_t colon = text.find(':');
  GroupSpec spec;
  spec.kind = kind_from_name(text.substr(0, colon), 0);
  if (colon == std::string_view::npos)
    throw ParseError("missing parameters after the group kind", text.size());
  const std::string_view rest = text.substr(colon + 1);
  const std::size_t rest_at = colon + 1;

  switch (spec.kind) {
    case GroupKind::kDihedral:
    case GroupKind::kSymmetric:
    case GroupKind::kAlternating:
    case GroupKind::kCyclic:
      spec.n = parse_count(rest, rest_at);
      return spec;
    case GroupKind::kAgl1: {
      const auto parts = split(rest, ':');
      if (parts.size() != 2) throw ParseError("agl1 expects agl1:<p>:<k>", rest_at);
      spec.p = static_cast<unsigned>(parse_count(parts[0], rest_at));
      spec.k = static_cast<unsigned>(parse_count(parts[1], rest_at + parts[0].size() + 1));
      return spec;
    }
    case GroupKind::kPerm: {
      const std::size_t sep = rest.find(':');
      if (sep == std::string_view::npos)
        throw ParseError("perm expects perm:<degree>:<gens separated by ;>", rest_at);
      spec.degree = parse_count(rest.substr(0, sep), rest_at);
      const std::string_view gens = rest.substr(sep + 1);
      if (!gens.empty())
        for (std::string_view g : split(gens, ';')) spec.generators.emplace_back(g);
      return spec;
    }
    case GroupKind::kWreath:
      break;
  }
  throw ParseError("wreath products are only accepted in JSON form", 0);
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

GroupSpec group_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("group spec must be an object with a string \"kind\"", 0);
  GroupSpec spec;
  spec.kind = kind_from_name(j["kind"].get<std::string>(), 0);
  auto need = [&j](const char* key) -> const json& {
    if (!j.contains(key)) throw ParseError(std::string("group spec is missing \"") + key + "\"", 0);
    return j[key];
  };
  try {
    switch (spec.kind) {
      case GroupKind::kPerm:
        spec.degree = need("degree").get<std::size_t>();
        spec.generators = need("generators").get<std::vector<std::string>>();
        break;
      case GroupKind::kDihedral:
      case GroupKind::kSymmetric:
      case GroupKind::kAlternating:
      case GroupKind::kCyclic:
        spec.n = need("n").get<std::size_t>();
        break;
      case GroupKind::kAgl1:
        spec.p = need("p").get<unsigned>();
        spec.k = need("k").get<unsigned>();
        break;
      case GroupKind::kWreath:
        spec.copies = need("copies").get<std::size_t>();
        spec.parts.push_back(group_spec_from_json(need("base")));
        spec.parts.push_back(group_spec_from_json(need("top")));
        break;
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad group spec field: ") + e.what(), 0);
  }
  return spec;
}

GroupSpec parse_group_spec(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) throw ParseError("empty group spec", 0);
  if (text[first] != '{') return parse_shorthand(text.substr(first));
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return group_spec_from_json(j);
}

json to_json(const GroupSpec& spec) {
  json j{{"kind", kind_name(spec.kind)}};
  switch (spec.kind) {
    case GroupKind::kPerm:
      j["degree"] = spec.degree;
      j["generators"] = spec.generators;
      break;
    case GroupKind::kDihedral:
    case GroupKind::kSymmetric:
    case GroupKind::kAlternating:
    case GroupKind::kCyclic:
      j["n"] = spec.n;
      break;
    case GroupKind::kAgl1:
      j["p"] = spec.p;
      j["k"] = spec.k;
      break;
    case GroupKind::kWreath:
      j["base"] = to_json(spec.parts.at(0));
      j["copies"] = spec.copies;
      j["top"] = to_json(spec.parts.at(1));
      break;
  }
  return j;
}

ResolvedGroup resolve(const GroupSpec& spec, std::size_t cap) {
  auto own = [](GroupTable t) { return std::make_shared<const GroupTable>(std::move(t)); };
  switch (spec.kind) {
    case GroupKind::kPerm: {
      if (spec.degree == 0) throw InvalidArgument("perm spec needs a positive degree");
      std::vector<Permutation> gens;
      for (const auto& s : spec.generators) gens.push_back(parse_cycles(s, spec.degree));
      return {own(GroupTable::generate(spec.degree, gens, cap)), std::nullopt};
    }
    case GroupKind::kDihedral:
      if (2 * spec.n > cap) throw CapExceeded("dihedral group order exceeds the cap");
      return {own(dihedral(spec.n)), std::nullopt};
    case GroupKind::kSymmetric:
      return {own(symmetric(spec.n, cap)), std::nullopt};
    case GroupKind::kAlternating:
      return {own(alternating(spec.n, cap)), std::nullopt};
    case GroupKind::kCyclic:
      if (spec.n == 0) throw InvalidArgument("cyclic group needs n >= 1");
      return {own(cyclic(spec.n, cap)), std::nullopt};
    case GroupKind::kAgl1: {
      if (static_cast<std::size_t>(spec.p) * spec.k > cap)
        throw CapExceeded("agl1 group order exceeds the cap");
      SolvableFrame frame = agl1(spec.p, spec.k);
      GroupPtr g = frame.group;
      return {std::move(g), std::move(frame)};
    }
    case GroupKind::kWreath: {
      if (spec.parts.size() != 2) throw InvalidArgument("wreath spec needs a base and a top");
      const ResolvedGroup base = resolve(spec.parts[0], cap);
      const ResolvedGroup top = resolve(spec.parts[1], cap);
      return {own(wreath_product(*base.group, spec.copies, *top.group, cap)), std::nullopt};
    }
  }
  throw InvalidArgument("unhandled group kind");
}

// ---------------------------------------------------------------------------
// Corpus

std::vector<CorpusEntry> build_corpus(std::size_t max_order) {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, GroupSpec spec, std::size_t order) {
    if (order <= max_order) out.push_back({std::move(name), std::move(spec), order});
  };
  auto simple = [](GroupKind kind, std::size_t n) {
    GroupSpec s;
    s.kind = kind;
    s.n = n;
    return s;
  };

  for (std::size_t n = 3; n <= 32; ++n)
    add("D" + std::to_string(2 * n), simple(GroupKind::kDihedral, n), 2 * n);
  for (std::size_t n = 2; n <= 6; ++n)
    add("Sym" + std::to_string(n), simple(GroupKind::kSymmetric, n), factorial(n));
  for (std::size_t n = 3; n <= 6; ++n)
    add("Alt" + std::to_string(n), simple(GroupKind::kAlternating, n), factorial(n) / 2);
  for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
    for (unsigned k = 2; k <= p - 1; ++k) {
      if ((p - 1) % k != 0) continue;
      GroupSpec s;
      s.kind = GroupKind::kAgl1;
      s.p = p;
      s.k = k;
      add("AGL1(" + std::to_string(p) + "," + std::to_string(k) + ")", s,
          static_cast<std::size_t>(p) * k);
    }
  }
  for (std::size_t m = 2; m <= 16; ++m) add("C" + std::to_string(m), simple(GroupKind::kCyclic, m), m);

  GroupSpec q8;
  q8.kind = GroupKind::kPerm;
  q8.degree = 8;
  q8.generators = {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"};
  add("Q8", q8, 8);

  GroupSpec m11;
  m11.kind = GroupKind::kPerm;
  m11.degree = 11;
  m11.generators = {"(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"};
  add("M11", m11, 7920);

  GroupSpec wr;
  wr.kind = GroupKind::kWreath;
  wr.copies = 2;
  wr.parts = {simple(GroupKind::kAlternating, 5), simple(GroupKind::kCyclic, 2)};
  add("A5wrC2", wr, 7200);

  std::stable_sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.name < b.name;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

json gamma_json(const Gamma& value) {
  if (value.is_infinite()) return "infinity";
  return value.value();
}

json witness_json(const GroupTable& g, const CoveringWitness& w) {
  json base = json::array();
  for (Elem s : w.base.generators()) base.push_back(g.element(s).to_cycles());
  json conj = json::array();
  for (Elem c : w.conjugators) conj.push_back(g.element(c).to_cycles());
  return json{{"base_generators", base}, {"conjugators", conj}};
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; }));
}

std::size_t SuiteReport::failed() const { return checks.size() - passed(); }

json to_json(const SuiteReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json r{{"claim", c.claim},       {"check", c.check},       {"inputs", c.inputs},
           {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}};
    if (c.seconds) r["seconds"] = *c.seconds;
    checks.push_back(std::move(r));
  }
  return json{{"suite", report.suite},
              {"checks", std::move(checks)},
              {"summary", {{"passed", report.passed()}, {"failed", report.failed()}}}};
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << "\n";
  for (const auto& c : report.checks) {
    os << (c.pass ? "  PASS " : "  FAIL ") << c.check << "  expected " << c.expected.dump()
       << "  observed " << c.observed.dump();
    if (c.seconds) os << "  (" << *c.seconds << " s)";
    os << "\n";
    if (!c.pass) os << "       violated: " << c.claim << "\n";
  }
  os << report.passed() << " passed, " << report.failed() << " failed\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Suites

namespace {

constexpr unsigned kSearchLimit = 64;

// Claims, stated by content.
constexpr const char* kClaimDihedral =
    "gamma(D_2p) = ceil(log2 p) + 1 for every odd prime p";
constexpr const char* kClaimDihedralWitness =
    "D_2p = <b>^v <b>^(v^2) ... <b>^(v^(2^(m-1))) <b> with m = ceil(log2 p), via the "
    "rotation chain and the alternating-sum set X_m";
constexpr const char* kClaimDihedralRelations =
    "the dihedral generators satisfy v^n = b^2 = 1 and b v b = v^-1";
constexpr const char* kClaimDihedralConjecture =
    "(conjecture) gamma(D_2n) = infinity if n is a power of 2, else ceil(log2 p) + 1 for the "
    "least odd prime p dividing n";
constexpr const char* kClaimRankTwo = "if the rank r of a non-normal maximal subgroup is 2 then "
                                      "gamma(G) = 3";
constexpr const char* kClaimRankBound =
    "gamma(G) <= r + 1 via G = M M^(x^-1) ... M^(x^-k0) M1, with B^(k+1) = B^k u (MxM)^(k+1) "
    "for B = M u MxM";
constexpr const char* kClaimGap =
    "for AGL1(13, 4) (k = 4) gamma = 4 while the order lower bound is 3";
constexpr const char* kClaimSandwich =
    "n log2 p / log2 k + 1 <= gamma(V x| K) <= length of the explicit K K^t covering <= "
    "2 n ceil(log2 p) <= 2 n (log2 p + 1)";
constexpr const char* kClaimCentralCommutator = "for every v in V there is t in V with v in K K^t";
constexpr const char* kClaimFrameMaximals =
    "in V x| K every maximal subgroup either meets V trivially and is conjugate to K, or "
    "contains V and is normal";
constexpr const char* kClaimBoundsExamples =
    "the order lower bound is 3 for AGL1(p) with k = p - 1, and 4 for D_14";
constexpr const char* kClaimExistence =
    "for every n >= 3 some solvable group has gamma = n, namely D_2p with "
    "2^(n-2) < p < 2^(n-1)";
constexpr const char* kClaimRange = "3 <= gamma(G) <= 4 log2 |G| for non-nilpotent G";
constexpr const char* kClaimInfinite = "gamma(G) = infinity exactly when G is nilpotent";
constexpr const char* kClaimLifting = "gamma(G) <= gamma(G/N) for every normal subgroup N";
constexpr const char* kClaimXn =
    "X_n = {x : -2^(n-1) + 1 <= x <= 2^(n-1)} - {0}, |X_n| = 2^n - 1";
constexpr const char* kClaimXnMod = "{1, ..., k} is contained in X_n mod (k + 1) for 1 <= k < 2^n";
constexpr const char* kClaimQmnn =
    "a qmnn group has a unique minimal normal subgroup and trivial center and Frattini subgroup";
constexpr const char* kClaimQmnnReject = "groups with a non-nilpotent proper quotient are not qmnn";
constexpr const char* kClaimNilpotentMaximals =
    "G is nilpotent iff every maximal subgroup of G is normal";
constexpr const char* kClaimResidual =
    "the last lower central term is the intersection of all N with G/N nilpotent";
constexpr const char* kClaimMinimalNormals =
    "minimal normal subgroups from class closures agree with the subgroup lattice";
constexpr const char* kClaimOracle =
    "minimizing over non-normal maximal classes gives the same gamma as exhaustive search "
    "over all proper subgroups";
constexpr const char* kClaimM11 =
    "M11 is a product of three conjugates of its point stabilizer, which has rank 2";
constexpr const char* kClaimWreath =
    "in A5 wr C2 three conjugate normalizers N_G((U_i n T)^2) multiply to G when "
    "(U_1 n T)(U_2 n T)(U_3 n T) = T";
constexpr const char* kClaimWreathDedekind = "G = N_G(M^m) N with N = T^m and M = V n T, VT = X";
constexpr const char* kClaimWreathSocle = "A5 wr C2 has the unique minimal normal subgroup A5 x A5";

class Recorder {
 public:
  Recorder(const SuiteConfig& config, SuiteReport& report) : config_(config), report_(report) {}

  // Runs `body`, which fills expected/observed/pass. Exceptions fail the
  // check and are reported as the observation.
  void check(std::string claim, std::string id, json inputs,
             const std::function<void(CheckRecord&)>& body) {
    CheckRecord rec;
    rec.claim = std::move(claim);
    rec.check = std::move(id);
    rec.inputs = std::move(inputs);
    const auto start = std::chrono::steady_clock::now();
    try {
      body(rec);
    } catch (const std::exception& e) {
      rec.pass = false;
      rec.observed = json{{"error", e.what()}};
    }
    if (config_.timings)
      rec.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(rec));
  }

 private:
  const SuiteConfig& config_;
  SuiteReport& report_;
};

SearchOptions search_options(const SuiteConfig& config) {
  return SearchOptions{config.domination_pruning, config.threads};
}

Gamma exact_gamma(const GroupTable& g, const SuiteConfig& config) {
  return gamma_cp_exact(g, kSearchLimit, search_options(config)).value;
}

// Resolved corpus groups, built once per suite run.
struct LoadedEntry {
  CorpusEntry entry;
  ResolvedGroup resolved;
};

std::vector<LoadedEntry> load(const std::vector<CorpusEntry>& corpus) {
  std::vector<LoadedEntry> out;
  for (const auto& e : corpus) out.push_back({e, resolve(e.spec)});
  return out;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

unsigned dihedral_formula(std::size_t n) {
  std::size_t p = 3;
  while (n % p != 0 || !is_prime(p)) p += 2;
  return ceil_log2(p) + 1;
}

std::vector<Subgroup> non_normal_maximal_classes(const GroupTable& g) {
  std::vector<Subgroup> candidates;
  for (auto& m : maximal_subgroups(g))
    if (!m.is_normal) candidates.push_back(std::move(m.subgroup));
  return conjugacy_class_representatives(candidates);
}

void suite_dihedral_formula(Recorder& rec, const SuiteConfig& config) {
  for (unsigned p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    rec.check(kClaimDihedral, "gamma D" + std::to_string(2 * p), {{"p", p}}, [&](CheckRecord& r) {
      const GroupTable g = dihedral(p);
      const unsigned expected = ceil_log2(p) + 1;
      const Gamma got = exact_gamma(g, config);
      r.expected = expected;
      r.observed = gamma_json(got);
      r.pass = got == Gamma::finite(expected);
    });
    rec.check(kClaimDihedralWitness, "witness D" + std::to_string(2 * p), {{"p", p}},
              [&](CheckRecord& r) {
                const DihedralCovering dc = dihedral_factorization(p);
                const WitnessReport w = verify_witness(*dc.group, dc.witness);
                const std::size_t expected = ceil_log2(p) + 1;
                r.expected = {{"length", expected}, {"valid", true}, {"chain", true}};
                r.observed = {{"length", dc.witness.length()},
                              {"valid", w.valid},
                              {"chain", dc.rotations_covered &&
                                            dc.rotations_times_reflection_is_group &&
                                            dc.alternating_sums_covered}};
                r.pass = r.expected == r.observed;
              });
  }
  for (std::size_t n = 3; n <= 32; ++n) {
    rec.check(kClaimDihedralRelations, "relations D" + std::to_string(2 * n), {{"n", n}},
              [&](CheckRecord& r) {
                const GroupTable g = dihedral(n);
                const Elem v = g.generators()[0];
                const Elem b = g.generators()[1];
                const bool ok = g.power(v, static_cast<std::int64_t>(n)) == kIdentity &&
                                g.mul(b, b) == kIdentity && g.mul(g.mul(b, v), b) == g.inv(v) &&
                                g.order() == 2 * n;
                r.expected = true;
                r.observed = ok;
                r.pass = ok;
              });
    rec.check(kClaimDihedralConjecture, "gamma D" + std::to_string(2 * n) + " (n=" +
                                            std::to_string(n) + ")",
              {{"n", n}}, [&](CheckRecord& r) {
                const GroupTable g = dihedral(n);
                const Gamma expected = is_power_of_two(n) ? Gamma::infinite()
                                                          : Gamma::finite(dihedral_formula(n));
                const Gamma got = exact_gamma(g, config);
                r.expected = gamma_json(expected);
                r.observed = gamma_json(got);
                r.pass = got == expected;
              });
  }
}

void suite_rank_bound(Recorder& rec, const SuiteConfig& config) {
  auto own = [](GroupTable t) { return std::make_shared<const GroupTable>(std::move(t)); };
  struct Named {
    std::string name;
    std::function<GroupPtr()> build;
  };
  std::vector<Named> rank_two{
      {"Sym3", [&] { return own(symmetric(3)); }},
      {"Alt4", [&] { return own(alternating(4)); }},
      {"Sym4", [&] { return own(symmetric(4)); }},
      {"Alt5", [&] { return own(alternating(5)); }},
      {"Sym5", [&] { return own(symmetric(5)); }},
      {"Alt6 on 10 points", [&] { return own(alternating6_degree10()); }},
  };
  for (unsigned p : {5u, 7u, 11u})
    rank_two.push_back({"AGL1(" + std::to_string(p) + "," + std::to_string(p - 1) + ")",
                        [p] { return agl1(p, p - 1).group; }});

  for (const auto& entry : rank_two) {
    rec.check(kClaimRankTwo, "gamma " + entry.name, {{"group", entry.name}}, [&](CheckRecord& r) {
      const GroupPtr owned = entry.build();
      const GroupTable& g = *owned;
      std::size_t min_rank = g.order();
      for (const auto& m : non_normal_maximal_classes(g)) min_rank = std::min(min_rank, rank(g, m).r);
      const Gamma got = exact_gamma(g, config);
      r.expected = {{"min_rank", 2}, {"gamma", 3}};
      r.observed = {{"min_rank", min_rank}, {"gamma", gamma_json(got)}};
      r.pass = r.expected == r.observed;
    });
  }

  const auto corpus = build_corpus(200);
  for (const auto& le : load(corpus)) {
    const GroupTable& g = *le.resolved.group;
    if (is_nilpotent(g)) continue;
    const auto classes = non_normal_maximal_classes(g);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const Subgroup& m = classes[c];
      rec.check(kClaimRankBound, le.entry.name + " class " + std::to_string(c),
                {{"group", le.entry.name}, {"subgroup_order", m.order()}}, [&](CheckRecord& r) {
                  const RankFactorization rf = rank_factorization(g, m);
                  const WitnessReport w = verify_witness(g, rf.witness);
                  const SubgroupGamma sg =
                      gamma_for_subgroup(g, m, kSearchLimit, search_options(config));
                  r.expected = {{"length_at_most", rf.r + 1}, {"valid", true}, {"recurrence", true}};
                  r.observed = {{"length", rf.witness.length()},
                                {"k0", rf.k0},
                                {"rank", rf.r},
                                {"valid", w.valid},
                                {"recurrence", rf.recurrence_holds},
                                {"gamma_for_subgroup", sg.k ? json(*sg.k) : json("exceeded")}};
                  r.pass = w.valid && rf.recurrence_holds && rf.witness.length() <= rf.r + 1 &&
                           rf.witness.length() == rf.k0 + 2 && sg.k && *sg.k <= rf.r + 1;
                });
    }
  }
}

void suite_solvable_bounds(Recorder& rec, const SuiteConfig& config) {
  rec.check(kClaimGap, "AGL1(13,4) gap", {{"p", 13}, {"k", 4}}, [&](CheckRecord& r) {
    const SolvableFrame f = agl1(13, 4);
    const SolvableBounds b = solvable_bounds(13, 1, 4);
    r.expected = {{"gamma", 4}, {"lower", 3}};
    r.observed = {{"gamma", gamma_json(exact_gamma(*f.group, config))}, {"lower", b.lower}};
    r.pass = r.expected == r.observed;
  });

  rec.check(kClaimBoundsExamples, "lower bound examples", json::object(), [&](CheckRecord& r) {
    json lowers = json::object();
    bool ok = solvable_bounds(7, 1, 2).lower == 4;
    lowers["7,1,2"] = solvable_bounds(7, 1, 2).lower;
    for (unsigned p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
      const unsigned lower = solvable_bounds(p, 1, p - 1).lower;
      lowers[std::to_string(p) + ",1," + std::to_string(p - 1)] = lower;
      ok = ok && lower == 3;
    }
    r.expected = "3 for every (p, 1, p-1); 4 for (7, 1, 2)";
    r.observed = lowers;
    r.pass = ok;
  });

  for (const auto& e : build_corpus(200)) {
    if (e.spec.kind != GroupKind::kAgl1) continue;
    const ResolvedGroup rg = resolve(e.spec);
    const SolvableFrame& f = *rg.frame;
    const GroupTable& g = *f.group;
    const json inputs{{"p", f.p}, {"n", f.n}, {"k", f.k.order()}};

    rec.check(kClaimSandwich, "sandwich " + e.name, inputs, [&](CheckRecord& r) {
      const SolvableBounds b = solvable_bounds(f.p, f.n, static_cast<unsigned>(f.k.order()));
      const Gamma got = exact_gamma(g, config);
      const CoveringWitness w = solvable_covering(f);
      const WitnessReport wr = verify_witness(g, w);
      const std::size_t cap = 2 * f.n * ceil_log2(f.p);
      r.expected = {{"lower", b.lower}, {"construction_at_most", cap}, {"upper", b.upper}};
      r.observed = {{"gamma", gamma_json(got)},
                    {"construction_length", w.length()},
                    {"construction_valid", wr.valid}};
      r.pass = !got.is_infinite() && b.lower <= got.value() && got.value() <= w.length() &&
               w.length() <= cap && static_cast<double>(cap) <= b.upper && wr.valid;
    });

    rec.check(kClaimCentralCommutator, "K K^t " + e.name, inputs, [&](CheckRecord& r) {
      std::size_t solved = 0;
      for (Elem v : f.v.members()) {
        central_commutator_solve(f, v);  // throws if v is not in K K^t
        ++solved;
      }
      r.expected = f.v.order();
      r.observed = solved;
      r.pass = solved == f.v.order();
    });

    rec.check(kClaimFrameMaximals, "maximals " + e.name, inputs, [&](CheckRecord& r) {
      std::size_t complements = 0;
      std::size_t over_v = 0;
      bool ok = true;
      const auto k_conjugates = conjugates_of(g, f.k);
      for (const auto& m : maximal_subgroups(g)) {
        if (intersection(m.subgroup, f.v).is_trivial()) {
          ++complements;
          ok = ok && std::any_of(k_conjugates.begin(), k_conjugates.end(),
                                 [&](const Subgroup& c) { return c == m.subgroup; });
        } else {
          ++over_v;
          ok = ok && f.v.is_subgroup_of(m.subgroup) && m.is_normal;
        }
      }
      r.expected = "each maximal is a conjugate of K or a normal overgroup of V";
      r.observed = {{"complements", complements}, {"normal_over_v", over_v}, {"ok", ok}};
      r.pass = ok;
    });
  }
}

void suite_gamma_range(Recorder& rec, const SuiteConfig& config) {
  for (unsigned n = 3; n <= 8; ++n) {
    rec.check(kClaimExistence, "gamma = " + std::to_string(n), {{"n", n}}, [&](CheckRecord& r) {
      const std::uint64_t p = bertrand_prime(n);
      const GroupTable g = dihedral(p);
      const Gamma got = exact_gamma(g, config);
      r.expected = n;
      r.observed = {{"p", p}, {"gamma", gamma_json(got)}};
      r.pass = got == Gamma::finite(n);
    });
  }
  for (const auto& le : load(build_corpus(200))) {
    const GroupTable& g = *le.resolved.group;
    const json inputs{{"group", le.entry.name}, {"order", g.order()}};
    if (is_nilpotent(g)) {
      rec.check(kClaimInfinite, "infinite " + le.entry.name, inputs, [&](CheckRecord& r) {
        const Gamma got = exact_gamma(g, config);
        r.expected = "infinity";
        r.observed = gamma_json(got);
        r.pass = got.is_infinite();
      });
      continue;
    }
    rec.check(kClaimRange, "range " + le.entry.name, inputs, [&](CheckRecord& r) {
      const GammaResult res = gamma_cp_exact(g, kSearchLimit, search_options(config));
      const double upper = 4.0 * std::log2(static_cast<double>(g.order()));
      const bool witness_ok = res.witness && verify_witness(g, *res.witness).valid;
      r.expected = {{"lower", 3}, {"upper", upper}};
      r.observed = {{"gamma", gamma_json(res.value)}, {"witness_valid", witness_ok}};
      r.pass = !res.value.is_infinite() && res.value.value() >= 3 &&
               res.value.value() <= upper && witness_ok &&
               res.witness->length() == res.value.value();
    });
  }
}

void suite_lifting(Recorder& rec, const SuiteConfig& config) {
  for (const auto& le : load(build_corpus(100))) {
    const GroupTable& g = *le.resolved.group;
    const Gamma whole = exact_gamma(g, config);
    std::size_t index = 0;
    for (const Subgroup& n : normal_subgroups(g)) {
      if (n.is_trivial() || n.is_whole()) continue;
      rec.check(kClaimLifting, le.entry.name + " / N" + std::to_string(index++),
                {{"group", le.entry.name}, {"normal_order", n.order()}}, [&](CheckRecord& r) {
                  const CosetAction q = quotient(g, n);
                  const Gamma lifted = exact_gamma(q.table, config);
                  r.expected = {{"at_most", gamma_json(lifted)}};
                  r.observed = {{"gamma", gamma_json(whole)}, {"quotient_order", q.table.order()}};
                  r.pass = whole <= lifted && q.table.order() * n.order() == g.order();
                });
    }
  }
}

// Alternating sums over the increasing exponent lists, read straight off
// the bits of every nonempty subset of {0, ..., n-1}.
std::vector<std::int64_t> x_set_by_subsets(unsigned n) {
  std::vector<std::int64_t> values;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t sum = 0;
    int sign = 1;
    for (unsigned a = 0; a < n; ++a) {
      if (!(mask >> a & 1)) continue;
      sum += sign * (std::int64_t{1} << a);
      sign = -sign;
    }
    values.push_back(sum);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

void suite_xn_lemma(Recorder& rec, const SuiteConfig&) {
  for (unsigned n = 1; n <= 16; ++n) {
    rec.check(kClaimXn, "X_" + std::to_string(n), {{"n", n}}, [&](CheckRecord& r) {
      const XSet xs = x_set(n);
      const auto oracle = x_set_by_subsets(n);
      const std::int64_t half = std::int64_t{1} << (n - 1);
      std::vector<std::int64_t> interval;
      for (std::int64_t x = -half + 1; x <= half; ++x)
        if (x != 0) interval.push_back(x);
      r.expected = {{"size", interval.size()}, {"min", interval.front()}, {"max", half}};
      r.observed = {{"size", xs.values.size()},
                    {"min", xs.values.front()},
                    {"max", xs.values.back()},
                    {"matches_subset_oracle", xs.values == oracle}};
      r.pass = xs.values == oracle && oracle == interval &&
               interval.size() == (std::size_t{1} << n) - 1;
    });
  }
  for (unsigned n = 1; n <= 10; ++n) {
    rec.check(kClaimXnMod, "X_" + std::to_string(n) + " mod (k+1)", {{"n", n}},
              [&](CheckRecord& r) {
                std::vector<std::uint64_t> failures;
                for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k)
                  if (!x_set_mod_coverage(n, k)) failures.push_back(k);
                r.expected = json::array();
                r.observed = failures;
                r.pass = failures.empty();
              });
  }
}

void suite_qmnn_structure(Recorder& rec, const SuiteConfig&) {
  for (const auto& le : load(build_corpus(2000))) {
    const GroupTable& g = *le.resolved.group;
    const json inputs{{"group", le.entry.name}, {"order", g.order()}};
    const StructureReport sr = structure_report(g);

    if (sr.is_qmnn) {
      rec.check(kClaimQmnn, "qmnn " + le.entry.name, inputs, [&](CheckRecord& r) {
        r.expected = {{"minimal_normals", 1}, {"center", 1}, {"frattini", 1}};
        r.observed = {{"minimal_normals", sr.minimal_normals.size()},
                      {"center", sr.center.order()},
                      {"frattini", sr.frattini->order()}};
        r.pass = r.expected == r.observed;
      });
    }

    rec.check(kClaimNilpotentMaximals, "nilpotency " + le.entry.name, inputs, [&](CheckRecord& r) {
      const auto maximals = maximal_subgroups(g);
      const bool all_normal = std::all_of(maximals.begin(), maximals.end(),
                                          [](const MaximalSubgroup& m) { return m.is_normal; });
      r.expected = {{"all_maximals_normal", sr.is_nilpotent}};
      r.observed = {{"all_maximals_normal", all_normal}};
      r.pass = all_normal == sr.is_nilpotent;
    });

    rec.check(kClaimMinimalNormals, "minimal normals " + le.entry.name, inputs,
              [&](CheckRecord& r) {
                std::vector<Subgroup> normals;
                for (auto& s : all_subgroups(g))
                  if (!s.is_trivial() && is_normal(s)) normals.push_back(std::move(s));
                std::vector<Bitset> lattice_minimal;
                for (const auto& n : normals) {
                  const bool minimal = std::none_of(
                      normals.begin(), normals.end(),
                      [&](const Subgroup& o) { return o.order() < n.order() && o.is_subgroup_of(n); });
                  if (minimal) lattice_minimal.push_back(n.mask());
                }
                std::vector<Bitset> closure_minimal;
                for (const auto& n : sr.minimal_normals) closure_minimal.push_back(n.mask());
                const bool same =
                    lattice_minimal.size() == closure_minimal.size() &&
                    std::all_of(closure_minimal.begin(), closure_minimal.end(), [&](const Bitset& b) {
                      return std::find(lattice_minimal.begin(), lattice_minimal.end(), b) !=
                             lattice_minimal.end();
                    });
                r.expected = lattice_minimal.size();
                r.observed = closure_minimal.size();
                r.pass = same;
              });

    if (g.order() <= 100) {
      rec.check(kClaimResidual, "residual " + le.entry.name, inputs, [&](CheckRecord& r) {
        Bitset mask(g.order());
        mask.set_all();
        for (const auto& n : normal_subgroups(g))
          if (is_nilpotent(quotient(g, n).table)) mask &= n.mask();
        r.expected = sr.nilpotent_residual.order();
        r.observed = mask.count();
        r.pass = mask == sr.nilpotent_residual.mask();
      });
    }
  }

  rec.check(kClaimQmnnReject, "reject D12", {{"group", "D12"}}, [&](CheckRecord& r) {
    const GroupTable g = dihedral(6);
    const bool qmnn = is_qmnn(g);
    r.expected = false;
    r.observed = qmnn;
    r.pass = !qmnn && !structure_report(g).is_qmnn;
  });
}

void suite_oracle_equivalence(Recorder& rec, const SuiteConfig& config) {
  for (const auto& le : load(build_corpus(24))) {
    const GroupTable& g = *le.resolved.group;
    if (is_nilpotent(g)) continue;
    rec.check(kClaimOracle, "oracle " + le.entry.name, {{"group", le.entry.name}},
              [&](CheckRecord& r) {
                const Gamma exact = exact_gamma(g, config);
                const GammaResult oracle = gamma_bruteforce_oracle(g, 8);
                r.expected = gamma_json(oracle.value);
                r.observed = gamma_json(exact);
                r.pass = exact == oracle.value;
              });
  }
}

void suite_table1_m11(Recorder& rec, const SuiteConfig&) {
  rec.check(kClaimM11, "M11 point stabilizer", {{"group", "M11"}}, [&](CheckRecord& r) {
    const GroupTable g = mathieu11();
    const Subgroup m = point_stabilizer(g, 0);
    const RankResult rk = rank(g, m);
    const RankFactorization rf = rank_factorization(g, m);
    const WitnessReport w = verify_witness(g, rf.witness);
    const bool brute = witness_product_bruteforce(rf.witness).is_full();
    r.expected = {{"order", 7920}, {"stabilizer_order", 720}, {"rank", 2}, {"length", 3},
                  {"product_size", 7920}, {"bruteforce_full", true}};
    r.observed = {{"order", g.order()},       {"stabilizer_order", m.order()},
                  {"rank", rk.r},             {"length", rf.witness.length()},
                  {"product_size", w.product_size}, {"bruteforce_full", brute}};
    r.pass = r.expected == r.observed && w.valid;
  });
}

void suite_wreath_smoke(Recorder& rec, const SuiteConfig&) {
  const GroupTable a5 = alternating(5);
  const GroupTable c2 = cyclic(2);
  const GroupTable g = wreath_product(a5, 2, c2);
  const json inputs{{"group", "A5wrC2"}, {"order", g.order()}};

  // The socle T x T, with T = A5 acting on each block.
  std::vector<Elem> socle_gens;
  for (Elem s : a5.generators())
    for (std::size_t block = 0; block < 2; ++block)
      socle_gens.push_back(g.index_of(embed_in_block(a5.element(s), block, 2)));
  const Subgroup socle = subgroup_closure(g, socle_gens);

  // (U n T)^2 for a subgroup U of A5, embedded diagonally block by block.
  auto squared = [&](const Subgroup& u) {
    std::vector<Elem> gens;
    for (Elem s : u.generators())
      for (std::size_t block = 0; block < 2; ++block)
        gens.push_back(g.index_of(embed_in_block(a5.element(s), block, 2)));
    return subgroup_closure(g, gens);
  };

  rec.check(kClaimWreathSocle, "socle", inputs, [&](CheckRecord& r) {
    const auto minimal = minimal_normal_subgroups(g);
    r.expected = {{"minimal_normals", 1}, {"order", 3600}};
    r.observed = {{"minimal_normals", minimal.size()},
                  {"order", minimal.empty() ? 0 : minimal.front().order()}};
    r.pass = minimal.size() == 1 && minimal.front() == socle && socle.order() == 3600;
  });

  const Subgroup u = point_stabilizer(a5, 0);

  rec.check(kClaimWreathDedekind, "G = N_G(M^2) N", inputs, [&](CheckRecord& r) {
    const Subgroup n1 = normalizer(g, squared(u));
    const SubsetMask prod = set_product(SubsetMask::of(n1), SubsetMask::of(socle));
    r.expected = g.order();
    r.observed = prod.cardinality();
    r.pass = prod.is_full();
  });

  rec.check(kClaimWreath, "three normalizers", inputs, [&](CheckRecord& r) {
    const RankFactorization rf = rank_factorization(a5, u);
    const bool t_covered = verify_witness(a5, rf.witness).valid && rf.witness.length() == 3;

    std::vector<Subgroup> normalizers;
    for (Elem c : rf.witness.conjugators) normalizers.push_back(normalizer(g, squared(conjugate(u, c))));

    // Express the factors as conjugates of the first one.
    const auto conj = conjugates_with_conjugators(normalizers.front());
    std::vector<Elem> conjugators;
    for (const auto& nz : normalizers) {
      const auto it = std::find_if(conj.begin(), conj.end(),
                                   [&](const ConjugateSubgroup& c) { return c.subgroup == nz; });
      if (it == conj.end()) throw Error("normalizers are not conjugate");
      conjugators.push_back(it->conjugator);
    }
    const CoveringWitness w{normalizers.front(), conjugators};
    const WitnessReport wr = verify_witness(g, w);
    r.expected = {{"factors", 3}, {"product_size", g.order()}, {"factor_order", 288}};
    r.observed = {{"factors", w.length()},
                  {"product_size", wr.product_size},
                  {"factor_order", normalizers.front().order()},
                  {"T_covered", t_covered}};
    r.pass = t_covered && wr.valid && w.length() == 3;
  });
}

using SuiteFn = void (*)(Recorder&, const SuiteConfig&);

const std::map<std::string, SuiteFn, std::less<>>& suite_table() {
  static const std::map<std::string, SuiteFn, std::less<>> table{
      {"dihedral-formula", suite_dihedral_formula},
      {"rank-bound", suite_rank_bound},
      {"lifting", suite_lifting},
      {"solvable-bounds", suite_solvable_bounds},
      {"xn-lemma", suite_xn_lemma},
      {"qmnn-structure", suite_qmnn_structure},
      {"oracle-equivalence", suite_oracle_equivalence},
      {"table1-m11", suite_table1_m11},
      {"wreath-smoke", suite_wreath_smoke},
      {"gamma-range", suite_gamma_range},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "dihedral-formula", "rank-bound",         "lifting",    "solvable-bounds", "xn-lemma",
      "qmnn-structure",   "oracle-equivalence", "table1-m11", "wreath-smoke",    "gamma-range"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteConfig& config) {
  const auto& table = suite_table();
  const auto it = table.find(name);
  if (it == table.end()) throw InvalidArgument("unknown suite '" + std::string(name) + "'");
  SuiteReport report{std::string(name), {}};
  Recorder rec(config, report);
  it->second(rec, config);
  return report;
}

}  // namespace conjcover
