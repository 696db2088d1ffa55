// portalc: compile source instances into levels, solve them, and check the
// reductions against brute-force oracles.

#include "portal/compilers.hpp"
#include "portal/io.hpp"
#include "portal/oracles.hpp"
#include "portal/solver.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace portal;

namespace {

enum Exit : int {
  ok = 0,
  usage = 1,
  parse_failure = 2,
  validation_failure = 3,
  timing_failure = 4,
  bound_failure = 5,
  mismatch = 6,
  instance_failure = 7,
  io_failure = 8,
};

struct Options {
  std::string from;
  std::string in;
  std::string out;
  std::string level;
  std::string format = "ascii";
  std::optional<std::string> epsilon, alpha, vh, height;
  std::optional<Tick> delta, epsilon2;
  std::string switch_kind = "abstract";
  std::uint64_t max_states = SearchBounds{}.max_states;
};

Tick integer_param(const std::optional<std::string>& text, const char* name) {
  const Rational r = parse_rational(*text);
  if (denominator(r) != 1) throw TimingViolation(std::string(name) + " must be an integer for timing compilers");
  return static_cast<Tick>(numerator(r));
}

KinematicsParams kinematics_of(const Options& o) {
  KinematicsParams p;
  if (o.epsilon) p.epsilon = parse_rational(*o.epsilon);
  if (o.alpha) p.alpha = parse_rational(*o.alpha);
  if (o.vh) p.v_h = parse_rational(*o.vh);
  if (o.height) p.launch_height = parse_rational(*o.height);
  return p;
}

io::LevelDocument compile(const Options& o) {
  const std::string text = io::read_file(o.in);
  io::LevelDocument doc;
  doc.provenance.source = o.from;
  auto& params = doc.provenance.parameters;
  if (o.from == "subset-sum") {
    const auto inst = io::parse_subset_sum(text);
    const auto k = kinematics_of(o);
    auto out = compile_subset_sum(inst, k);
    doc.level = std::move(out.level);
    doc.geometry = std::move(out.geometry);
    doc.provenance.digest = io::digest(io::format_subset_sum(inst));
    params = {{"alpha", to_string(k.alpha)}, {"epsilon", to_string(k.epsilon)}, {"v_h", to_string(k.v_h)},
              {"h", to_string(k.h())}};
  } else if (o.from == "3sat") {
    const auto f = io::parse_dimacs(text);
    doc.level = compile_3sat_turrets(f);
    doc.provenance.digest = io::digest(io::format_dimacs(f));
  } else if (o.from == "hamcycle-timed") {
    const auto g = io::parse_grid(text);
    TimedParams t;
    if (o.alpha) t.alpha = integer_param(o.alpha, "alpha");
    if (o.delta) t.delta = *o.delta;
    if (o.epsilon) t.epsilon = integer_param(o.epsilon, "epsilon");
    doc.level = compile_hamcycle_timed(g, t);
    doc.provenance.digest = io::digest(io::format_grid(g));
    const Tick n = static_cast<Tick>(g.n());
    const Tick alpha = t.alpha.value_or(n * t.delta + 1), eps = t.epsilon.value_or(n);
    params = {{"alpha", std::to_string(alpha)}, {"delta", std::to_string(t.delta)}, {"epsilon", std::to_string(eps)},
              {"timer", std::to_string(timed_duration(g.n(), alpha, t.delta, eps))}};
  } else if (o.from == "hamcycle-hep") {
    const auto g = io::parse_grid(text);
    HepParams t;
    if (o.alpha) t.alpha = integer_param(o.alpha, "alpha");
    if (o.delta) t.delta = *o.delta;
    if (o.epsilon) t.epsilon1 = integer_param(o.epsilon, "epsilon");
    if (o.epsilon2) t.epsilon2 = *o.epsilon2;
    doc.level = compile_hamcycle_hep(g, t);
    doc.provenance.digest = io::digest(io::format_grid(g));
    const Tick n = static_cast<Tick>(g.n());
    const Tick alpha = t.alpha.value_or(n * t.delta + 1), e1 = t.epsilon1.value_or(n), e2 = t.epsilon2.value_or(1);
    params = {{"alpha", std::to_string(alpha)}, {"delta", std::to_string(t.delta)}, {"epsilon1", std::to_string(e1)},
              {"epsilon2", std::to_string(e2)},
              {"deadline", std::to_string(hep_deadline(g.n(), alpha, t.delta, e1, e2))}};
  } else if (o.from == "ncl") {
    const auto inst = io::parse_ncl(text);
    const auto kind = parse_switch_kind(o.switch_kind);
    if (!kind) throw io::ParseError("unknown switch kind '" + o.switch_kind + "'");
    auto out = compile_ncl_switches(inst.graph, inst.target, *kind);
    doc.level = std::move(out.level);
    doc.provenance.digest = io::digest(io::format_ncl(inst));
    params = {{"switch_kind", o.switch_kind}, {"max_fanout", std::to_string(out.max_fanout)}};
  } else {
    throw io::ParseError("unknown source '" + o.from + "'");
  }
  return doc;
}

struct OracleVerdict {
  bool yes = false;
  std::string witness;
};

OracleVerdict run_oracle(const Options& o) {
  const std::string text = io::read_file(o.in);
  OracleVerdict v;
  if (o.from == "subset-sum") {
    const auto inst = io::parse_subset_sum(text);
    const auto a = subset_sum_oracle(inst);
    v.yes = a.yes;
    if (a.yes) {
      const auto& w = std::get<SubsetWitness>(*a.witness);
      if (!check_subset(inst, w)) throw std::logic_error("oracle witness failed substitution");
      for (auto i : w.indices) v.witness += (v.witness.empty() ? "" : " ") + std::to_string(i);
      v.witness = "indices {" + v.witness + "}";
    }
  } else if (o.from == "3sat") {
    const auto f = io::parse_dimacs(text);
    const auto a = sat_oracle(f);
    v.yes = a.yes;
    if (a.yes) {
      const auto& w = std::get<Assignment>(*a.witness);
      if (!check_assignment(f, w)) throw std::logic_error("oracle witness failed substitution");
      for (std::size_t i = 0; i < w.size(); ++i)
        v.witness += (i ? " " : "") + std::string(w[i] ? "" : "-") + std::to_string(i + 1);
    }
  } else if (o.from == "hamcycle-timed" || o.from == "hamcycle-hep") {
    const auto g = io::parse_grid(text);
    const auto a = grid_hamcycle_oracle(g);
    v.yes = a.yes;
    if (a.yes) {
      const auto& w = std::get<VertexCycle>(*a.witness);
      if (!check_cycle(g, w)) throw std::logic_error("oracle witness failed substitution");
      for (auto i : w.vertices)
        v.witness += "(" + std::to_string(g.vertices[i].first) + "," + std::to_string(g.vertices[i].second) + ") ";
      v.witness.pop_back();
    }
  } else if (o.from == "ncl") {
    const auto inst = io::parse_ncl(text);
    const auto d = ncl::decide(inst.graph, inst.target, o.max_states);
    if (std::holds_alternative<ncl::BoundExceeded>(d)) throw BoundExceeded{o.max_states};
    v.yes = std::holds_alternative<ncl::Yes>(d);
    if (v.yes) {
      v.witness = "flips";
      for (auto e : std::get<ncl::Yes>(d).flips) v.witness += " " + std::to_string(e);
    }
  } else {
    throw io::ParseError("unknown source '" + o.from + "'");
  }
  return v;
}

void print_verdict(const Verdict& v) {
  std::cout << "verdict: " << verdict_name(v) << "\n";
  if (auto* s = std::get_if<Solvable>(&v)) {
    std::cout << "states_explored: " << s->states_explored << "\n"
              << "witness_ticks: " << s->witness_ticks << "\n"
              << "witness: " << s->witness.size() << " inputs\n";
    for (const auto& e : s->witness) std::cout << "  " << to_string(e) << "\n";
  } else if (auto* u = std::get_if<Unsolvable>(&v)) {
    std::cout << "states_explored: " << u->states_explored << "\n";
  } else {
    std::cout << "bound: " << std::get<BoundExceeded>(v).bound << "\n";
  }
}

// Solvable witnesses must replay to the goal.
void check_witness(const Level& level, const Verdict& v) {
  if (auto* s = std::get_if<Solvable>(&v)) {
    const auto r = replay(level, s->witness);
    if (r.failed_at || r.final_state.avatar_room != level.goal)
      throw std::logic_error("solver witness does not replay to the goal");
  }
}

int run(const std::string& cmd, const Options& o) {
  if (cmd == "compile") {
    const auto doc = compile(o);
    if (auto report = validate_level(doc.level); !report.empty()) throw InvalidLevel(report);
    const std::string text = io::emit_document(doc);
    if (o.out.empty() || o.out == "-") std::cout << text;
    else io::write_file(o.out, text);
    return ok;
  }
  if (cmd == "solve") {
    const auto doc = io::parse_document(io::read_file(o.level));
    const Verdict v = solve(doc.level, {o.max_states});
    check_witness(doc.level, v);
    print_verdict(v);
    return std::holds_alternative<BoundExceeded>(v) ? bound_failure : ok;
  }
  if (cmd == "verify") {
    const auto doc = compile(o);
    const Verdict v = solve(doc.level, {o.max_states});
    check_witness(doc.level, v);
    const OracleVerdict oracle = run_oracle(o);
    std::cout << "oracle: " << (oracle.yes ? "yes" : "no") << ", level: " << verdict_name(v) << "\n";
    if (std::holds_alternative<BoundExceeded>(v)) {
      std::cerr << "portalc: search bound of " << o.max_states << " states exceeded\n";
      return bound_failure;
    }
    if (oracle.yes != std::holds_alternative<Solvable>(v)) {
      std::cerr << "portalc: verdict mismatch between oracle and solver\n";
      return mismatch;
    }
    return ok;
  }
  if (cmd == "oracle") {
    const auto v = run_oracle(o);
    std::cout << "oracle: " << (v.yes ? "yes" : "no") << "\n";
    if (v.yes && !v.witness.empty()) std::cout << "witness: " << v.witness << "\n";
    return ok;
  }
  if (cmd == "bound") {
    const auto doc = io::parse_document(io::read_file(o.level));
    std::cout << state_bound(doc.level).str() << "\n";
    return ok;
  }
  if (cmd == "render") {
    const auto doc = io::parse_document(io::read_file(o.level));
    std::string text;
    if (o.format == "ascii") text = io::render_ascii(doc);
    else if (o.format == "svg") text = io::render_svg(doc);
    else throw io::ParseError("unknown render format '" + o.format + "'");
    if (o.out.empty() || o.out == "-") std::cout << text;
    else io::write_file(o.out, text);
    return ok;
  }
  return usage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"portalc: compile puzzle reductions into levels and check them"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> sources{"subset-sum", "3sat", "hamcycle-timed", "hamcycle-hep", "ncl"};

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--from", o.from, "source problem")->required()->check(CLI::IsMember(sources));
    sub->add_option("--in", o.in, "instance file")->required();
  };
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--epsilon", o.epsilon, "expansion factor (subset-sum) or exit slack (hamcycle)");
    sub->add_option("--alpha", o.alpha, "gravity (subset-sum) or hallway cost (hamcycle)");
    sub->add_option("--vh", o.vh, "horizontal drift speed (subset-sum)");
    sub->add_option("--height", o.height, "launch height (subset-sum, default epsilon)");
    sub->add_option("--delta", o.delta, "button press cost (hamcycle)");
    sub->add_option("--epsilon2", o.epsilon2, "verifier slack (hamcycle-hep)");
    sub->add_option("--switch-kind", o.switch_kind, "switch realization (ncl)")
        ->check(CLI::IsMember({"abstract", "cubes", "laser", "gravity"}));
  };

  auto* compile_cmd = app.add_subcommand("compile", "compile an instance into a level document");
  add_source(compile_cmd);
  add_params(compile_cmd);
  compile_cmd->add_option("--out", o.out, "output file (default stdout)");

  auto* solve_cmd = app.add_subcommand("solve", "search a level for a winning input sequence");
  solve_cmd->add_option("--level", o.level, "level document")->required();
  solve_cmd->add_option("--max-states", o.max_states, "search state cap");

  auto* verify_cmd = app.add_subcommand("verify", "compile, solve and compare against the oracle");
  add_source(verify_cmd);
  add_params(verify_cmd);
  verify_cmd->add_option("--max-states", o.max_states, "search state cap");

  auto* oracle_cmd = app.add_subcommand("oracle", "decide an instance directly");
  add_source(oracle_cmd);

  auto* bound_cmd = app.add_subcommand("bound", "print the state-count bound of a level");
  bound_cmd->add_option("--level", o.level, "level document")->required();

  auto* render_cmd = app.add_subcommand("render", "draw a level");
  render_cmd->add_option("--level", o.level, "level document")->required();
  render_cmd->add_option("--format", o.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, o);
  } catch (const io::ParseError& e) {
    std::cerr << "portalc: parse error: " << e.what() << "\n";
    return parse_failure;
  } catch (const InvalidLevel& e) {
    std::cerr << "portalc: invalid level: " << e.what() << "\n";
    return validation_failure;
  } catch (const TimingViolation& e) {
    std::cerr << "portalc: timing violation: " << e.what() << "\n";
    return timing_failure;
  } catch (const BoundExceeded& e) {
    std::cerr << "portalc: search bound of " << e.bound << " states exceeded\n";
    return bound_failure;
  } catch (const std::logic_error& e) {
    std::cerr << "portalc: invalid instance: " << e.what() << "\n";
    return instance_failure;
  } catch (const std::exception& e) {
    std::cerr << "portalc: error: " << e.what() << "\n";
    return io_failure;
  }
}
