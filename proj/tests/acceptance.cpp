// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "corpus.hpp"

#include "portal/compilers.hpp"
#include "portal/oracles.hpp"
#include "portal/solver.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace portal;

namespace {

// Pinned limits.
constexpr double kSubsetSumSeconds = 120;
constexpr double kSatSeconds = 180;
constexpr double kHamcycleSeconds = 180;  // per compiler
constexpr double kNclSeconds = 120;
constexpr std::size_t kSwitchSequenceLength = 6;
constexpr int kDoorFamilyMax = 10;
constexpr double kBoundRatioLimit = 1.0;
constexpr int kAlphaSamples = 20;

struct Tally {
  std::uint64_t solves = 0;
  std::uint64_t bound_violations = 0;
  std::uint64_t witnesses = 0;
  std::uint64_t bad_witnesses = 0;
  std::uint64_t oracle_witnesses = 0;
  std::uint64_t bad_oracle_witnesses = 0;
  std::string first_problem;

  void problem(const std::string& what) {
    if (first_problem.empty()) first_problem = what;
  }
};

Tally tally;
int failures = 0;
// Filled in by the subset-sum run, reported with kinematics.
std::string kinematics_margin_detail = "not run";
bool kinematics_margin_ok = false;

void report(const std::string& name, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << ": " << detail << std::endl;
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

double elapsed(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

// Solves, then checks the bound and replays any witness.
Verdict checked_solve(const Level& level, const std::string& label) {
  Verdict v = solve(level);
  ++tally.solves;
  const std::uint64_t explored = std::holds_alternative<Solvable>(v)     ? std::get<Solvable>(v).states_explored
                                 : std::holds_alternative<Unsolvable>(v) ? std::get<Unsolvable>(v).states_explored
                                                                         : 0;
  if (BigInt(explored) > state_bound(level)) {
    ++tally.bound_violations;
    tally.problem(label + ": explored states exceed the bound");
  }
  if (auto* s = std::get_if<Solvable>(&v)) {
    ++tally.witnesses;
    const auto r = replay(level, s->witness);
    if (r.failed_at || r.final_state.avatar_room != level.goal || r.final_state.clock != s->witness_ticks) {
      ++tally.bad_witnesses;
      tally.problem(label + ": witness does not replay");
    }
  }
  return v;
}

bool is_solvable(const Verdict& v) { return std::holds_alternative<Solvable>(v); }

// Well indices a witness drops into, from the rooms it passes through.
std::vector<std::size_t> wells_entered(const Level& level, const Solvable& s) {
  std::vector<std::size_t> wells;
  const Rules rules(level);
  GameState state = rules.initial_state();
  for (const InputEvent& e : s.witness) {
    state = rules.step(state, e).state;
    const std::string& name = level.rooms[state.avatar_room];
    if (name.rfind("well", 0) == 0 && std::holds_alternative<input::Move>(e))
      wells.push_back(std::stoul(name.substr(4, name.find('@') - 4)));
  }
  return wells;
}

void subset_sum_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  KinematicsParams params;
  params.v_h = 1;
  std::uint64_t instances = 0, disagreements = 0, selection_mismatch = 0, subsets = 0, reselections = 0;
  std::uint64_t margin_checks = 0, margin_failures = 0;
  std::string first;
  for (const auto& inst : corpus::subset_sum_instances()) {
    ++instances;
    const auto out = compile_subset_sum(inst, params);
    const std::string label = "subset-sum " + std::to_string(inst.n()) + " values, t=" + std::to_string(inst.target);
    const Verdict v = checked_solve(out.level, label);
    const auto oracle = subset_sum_oracle(inst);
    if (oracle.yes) {
      ++tally.oracle_witnesses;
      if (!check_subset(inst, std::get<SubsetWitness>(*oracle.witness))) ++tally.bad_oracle_witnesses;
    }
    if (is_solvable(v) != oracle.yes) {
      ++disagreements;
      if (first.empty()) first = label;
    }
    if (auto* s = std::get_if<Solvable>(&v)) {
      auto wells = wells_entered(out.level, *s);
      if (std::set<std::size_t>(wells.begin(), wells.end()).size() != wells.size()) ++reselections;
    }
    for (std::uint32_t mask = 0; mask < (1u << inst.n()); ++mask) {
      std::vector<std::size_t> chosen;
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < inst.n(); ++i)
        if (mask >> i & 1) {
          chosen.push_back(i);
          sum += inst.values[i];
        }
      ++subsets;
      const bool hit = std::holds_alternative<Hit>(verify_selection(inst, chosen, params, out.geometry));
      if (hit != (sum == inst.target)) ++selection_mismatch;
    }
    // Neighbouring sums miss by more than the half-width.
    if (inst.n() > 0)
      for (std::int64_t sigma : {inst.target - 1, inst.target + 1}) {
        if (sigma < 0) continue;
        ++margin_checks;
        const Rational d_sq = free_fall(out.geometry.depth_unit * sigma, params).d_sq;
        if (within_sqrt_distance(d_sq, out.geometry.d_target_sq, out.geometry.half_width)) ++margin_failures;
      }
  }
  const double t = elapsed(start);
  std::ostringstream d;
  d << instances << " instances, " << disagreements << " verdict disagreements, " << subsets << " subsets with "
    << selection_mismatch << " hit/sum mismatches, " << reselections << " re-selected wells, " << seconds(t)
    << " (limit " << seconds(kSubsetSumSeconds) << ")";
  if (!first.empty()) d << "; first: " << first;
  report("subset-sum equivalence", disagreements == 0 && selection_mismatch == 0 && reselections == 0 &&
                                       t <= kSubsetSumSeconds,
         d.str());

  std::ostringstream k;
  k << margin_checks << " neighbouring sums, " << margin_failures << " within the platform half-width";
  kinematics_margin_detail = k.str();
  kinematics_margin_ok = margin_failures == 0 && margin_checks > 0;
}

void sat_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CnfFormula> formulas;
  for (int v = 1; v <= 3; ++v) {
    auto f = corpus::small_cnf_formulas(v);
    formulas.insert(formulas.end(), f.begin(), f.end());
  }
  const std::size_t exhaustive = formulas.size();
  auto random = corpus::random_cnf_formulas(4, 200, 20240501);
  formulas.insert(formulas.end(), random.begin(), random.end());
  std::uint64_t disagreements = 0, yes = 0, self_check = 0;
  std::string first;
  for (const auto& f : formulas) {
    const Verdict v = checked_solve(compile_3sat_turrets(f), "3-SAT");
    const auto oracle = sat_oracle(f);
    if (oracle.yes) {
      ++yes;
      ++tally.oracle_witnesses;
      if (!check_assignment(f, std::get<Assignment>(*oracle.witness))) ++tally.bad_oracle_witnesses;
    }
    if (oracle.yes != sat_by_clause_masks(f)) ++self_check;
    if (is_solvable(v) != oracle.yes) {
      ++disagreements;
      if (first.empty()) first = std::to_string(f.variables) + " vars, " + std::to_string(f.clauses.size()) + " clauses";
    }
  }
  const double t = elapsed(start);
  std::ostringstream d;
  d << exhaustive << " canonical formulas + " << random.size() << " random 4-variable, " << yes << " satisfiable, "
    << disagreements << " disagreements, " << self_check << " oracle self-check failures, " << seconds(t) << " (limit "
    << seconds(kSatSeconds) << ")";
  if (!first.empty()) d << "; first: " << first;
  report("3-SAT equivalence", disagreements == 0 && self_check == 0 && t <= kSatSeconds, d.str());
}

void hamcycle_equivalence(const std::string& name, const std::function<Level(const GridGraph&)>& compile) {
  const auto start = std::chrono::steady_clock::now();
  const auto graphs = corpus::grid_subgraphs(7);
  std::uint64_t disagreements = 0, yes = 0, self_check = 0;
  std::string first;
  for (const auto& g : graphs) {
    const Verdict v = checked_solve(compile(g), name);
    const auto oracle = grid_hamcycle_oracle(g);
    if (oracle.yes) {
      ++yes;
      ++tally.oracle_witnesses;
      if (!check_cycle(g, std::get<VertexCycle>(*oracle.witness))) ++tally.bad_oracle_witnesses;
    }
    if (oracle.yes != hamcycle_by_permutations(g)) ++self_check;
    if (is_solvable(v) != oracle.yes) {
      ++disagreements;
      if (first.empty()) {
        for (auto [x, y] : g.vertices) first += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
        first += std::string(" oracle ") + (oracle.yes ? "yes" : "no") + ", level " + std::string(verdict_name(v));
      }
    }
  }
  const double t = elapsed(start);
  std::ostringstream d;
  d << graphs.size() << " grid subgraphs, " << yes << " Hamiltonian, " << disagreements << " disagreements, "
    << self_check << " oracle self-check failures, " << seconds(t) << " (limit " << seconds(kHamcycleSeconds) << ")";
  if (!first.empty()) d << "; first: " << first;
  report(name + " equivalence", disagreements == 0 && self_check == 0 && t <= kHamcycleSeconds, d.str());
}

void ncl_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  auto cases = corpus::random_and_or_graphs(50, 6, 7001);
  const std::size_t random_count = cases.size();
  auto hand = corpus::hand_built_and_or_graphs();
  cases.insert(cases.end(), hand.begin(), hand.end());
  std::uint64_t disagreements = 0, yes = 0, bad_flips = 0, kind_disagreements = 0, kind_runs = 0;
  std::size_t max_fanout = 0;
  std::string first;
  for (const auto& c : cases) {
    const auto compiled = compile_ncl_switches(c.graph, c.target);
    max_fanout = std::max(max_fanout, compiled.max_fanout);
    const Verdict v = checked_solve(compiled.level, "NCL " + c.name);
    const auto d = ncl::decide(c.graph, c.target);
    const bool oracle_yes = std::holds_alternative<ncl::Yes>(d);
    if (oracle_yes) {
      ++yes;
      ++tally.oracle_witnesses;
      ncl::ConstraintGraph cur = c.graph;
      bool ok = true;
      for (auto e : std::get<ncl::Yes>(d).flips) {
        auto r = ncl::flip(cur, e);
        if (!std::holds_alternative<ncl::ConstraintGraph>(r)) {
          ok = false;
          break;
        }
        cur = std::get<ncl::ConstraintGraph>(r);
      }
      ok = ok && cur.edges[c.target].orientation == -c.graph.edges[c.target].orientation;
      if (!ok) {
        ++bad_flips;
        ++tally.bad_oracle_witnesses;
      }
    }
    if (is_solvable(v) != oracle_yes) {
      ++disagreements;
      if (first.empty()) first = c.name;
    }
    // The hand-built cases also go through every concrete switch kind.
    if (c.name.rfind("random", 0) != 0)
      for (SwitchKind k : {SwitchKind::cubes, SwitchKind::laser, SwitchKind::gravity}) {
        ++kind_runs;
        const Verdict kv = checked_solve(compile_ncl_switches(c.graph, c.target, k).level,
                                         "NCL " + c.name + " " + std::string(switch_kind_name(k)));
        if (is_solvable(kv) != oracle_yes) ++kind_disagreements;
      }
  }
  const double t = elapsed(start);
  std::ostringstream d;
  d << random_count << " random + " << hand.size() << " hand-built graphs, " << yes << " yes, " << disagreements
    << " disagreements, " << kind_runs << " gadget-kind runs with " << kind_disagreements
    << " disagreements, max switch fan-out " << max_fanout << ", " << seconds(t) << " (limit " << seconds(kNclSeconds)
    << ")";
  if (!first.empty()) d << "; first: " << first;
  report("NCL equivalence",
         disagreements == 0 && kind_disagreements == 0 && bad_flips == 0 && max_fanout <= 6 && t <= kNclSeconds,
         d.str());
}

void switch_bisimulation() {
  bool pass = true;
  std::ostringstream d;
  for (SwitchKind k : {SwitchKind::cubes, SwitchKind::laser, SwitchKind::gravity}) {
    const auto r = check_switch_bisimulation(k, kSwitchSequenceLength);
    pass = pass && r.ok();
    d << switch_kind_name(k) << " " << r.sequences << " sequences/" << r.mismatches << " mismatches/"
      << r.bad_lobby_states << " of " << r.lobby_states << " outside states off-contract";
    if (!r.first_mismatch.empty()) d << " (" << r.first_mismatch << ")";
    d << "; ";
  }
  d << "length <= " << kSwitchSequenceLength;
  report("switch-gadget bisimulation", pass, d.str());
}

// Chain of k+1 rooms; switch i in room i opens door i between rooms i and
// i+1. The goal is unreachable so the whole space is explored.
Level door_family(int k) {
  LevelBuilder b;
  std::vector<RoomId> rooms;
  for (int i = 0; i <= k; ++i) rooms.push_back(b.room("r" + std::to_string(i)));
  for (int i = 0; i < k; ++i) {
    const ElementId d = b.door();
    b.guard(b.passage(rooms[i], rooms[i + 1]), d);
    b.add(Switch{rooms[i], 0, {FlatSet<ElementId>{}, FlatSet<ElementId>{d}}});
  }
  b.set_goal(b.room("unreachable"));
  return std::move(b).build();
}

void state_bound_family() {
  std::ostringstream d;
  bool pass = tally.bound_violations == 0;
  d << tally.solves << " corpus levels, " << tally.bound_violations << " over the bound; k-door ratios";
  double worst = 0;
  std::uint64_t prev_explored = 0;
  BigInt prev_bound = 0;
  bool growth_ok = true;
  for (int k = 1; k <= kDoorFamilyMax; ++k) {
    const Level level = door_family(k);
    const Verdict v = solve(level);
    if (!std::holds_alternative<Unsolvable>(v)) {
      pass = false;
      d << " k=" << k << " not exhausted";
      continue;
    }
    const std::uint64_t explored = std::get<Unsolvable>(v).states_explored;
    const BigInt bound = state_bound(level);
    const double ratio = static_cast<double>(explored) / static_cast<double>(bound);
    worst = std::max(worst, ratio);
    // explored(k)/explored(k-1) <= bound(k)/bound(k-1)
    if (k > 1 && BigInt(explored) * prev_bound > bound * BigInt(prev_explored)) growth_ok = false;
    char buf[48];
    std::snprintf(buf, sizeof buf, " %d:%llu/%s", k, static_cast<unsigned long long>(explored), bound.str().c_str());
    d << buf;
    prev_explored = explored;
    prev_bound = bound;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "; worst ratio %.4f (limit %.1f), growth %s", worst, kBoundRatioLimit,
                growth_ok ? "within bound growth" : "faster than bound");
  d << buf;
  report("state-count bound", pass && worst <= kBoundRatioLimit && growth_ok, d.str());
}

void kinematics_exactness() {
  std::mt19937 rng(90210);
  bool identity = true;
  const Rational s(12345, 7), h(9, 4);
  Rational previous = -1;
  for (int i = 0; i < kAlphaSamples; ++i) {
    KinematicsParams p;
    p.alpha = Rational(1 + static_cast<long long>(rng() % 1000), 1 + static_cast<long long>(rng() % 1000));
    p.launch_height = h;
    const FreeFall f = free_fall(s, p);
    if (f.d_sq != 4 * s * h) identity = false;
    if (previous >= 0 && f.d_sq != previous) identity = false;
    previous = f.d_sq;
  }
  std::ostringstream d;
  d << kAlphaSamples << " random alpha: d^2 = 4sh " << (identity ? "holds exactly" : "FAILS") << "; "
    << kinematics_margin_detail;
  report("kinematics exactness", identity && kinematics_margin_ok, d.str());
}

void witness_integrity() {
  std::ostringstream d;
  d << tally.witnesses << " solver witnesses, " << tally.bad_witnesses << " failed replay; " << tally.oracle_witnesses
    << " oracle witnesses, " << tally.bad_oracle_witnesses << " failed substitution";
  if (!tally.first_problem.empty()) d << "; first: " << tally.first_problem;
  report("witness integrity",
         tally.bad_witnesses == 0 && tally.bad_oracle_witnesses == 0 && tally.witnesses > 0 && tally.oracle_witnesses > 0,
         d.str());
}

}  // namespace

int main() {
  subset_sum_equivalence();
  sat_equivalence();
  hamcycle_equivalence("hamcycle-timed", [](const GridGraph& g) { return compile_hamcycle_timed(g); });
  hamcycle_equivalence("hamcycle-hep", [](const GridGraph& g) { return compile_hamcycle_hep(g); });
  ncl_equivalence();
  switch_bisimulation();
  state_bound_family();
  kinematics_exactness();
  witness_integrity();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
