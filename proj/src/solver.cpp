#include "portal/solver.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <unordered_map>

namespace portal {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& key) const {
    return boost::hash_range(key.begin(), key.end());
  }
};

struct Node {
  GameState state;
  std::int64_t parent;  // -1 for the root
  InputEvent via;
  std::uint32_t depth;
};

std::string describe(const ValidationReport& report) {
  std::string out = "level failed validation";
  if (!report.empty()) out += ": " + report.front().locator + ": " + report.front().message;
  if (report.size() > 1) out += " (+" + std::to_string(report.size() - 1) + " more)";
  return out;
}

}  // namespace

InvalidLevel::InvalidLevel(ValidationReport report)
    : std::runtime_error(describe(report)), report_(std::move(report)) {}

std::string_view verdict_name(const Verdict& v) {
  static constexpr std::string_view names[] = {"Solvable", "Unsolvable", "BoundExceeded"};
  return names[v.index()];
}

std::vector<std::uint32_t> canonical_key(const GameState& s) {
  std::vector<std::uint32_t> key;
  key.reserve(8 + 2 * s.timers.size() + s.switch_states.size() + s.turrets_alive.size() +
              2 * s.cube_locations.size());
  key.push_back(s.avatar_room);
  key.push_back(static_cast<std::uint32_t>(s.timers.size()));
  for (const auto& [id, remaining] : s.timers) {
    key.push_back(id);
    key.push_back(static_cast<std::uint32_t>(remaining));
  }
  for (const auto& [id, st] : s.switch_states) key.push_back(st);
  key.push_back(static_cast<std::uint32_t>(s.turrets_alive.size()));
  for (ElementId t : s.turrets_alive) key.push_back(t);
  for (const auto& [id, where] : s.cube_locations) {
    key.push_back(static_cast<std::uint32_t>(where.index()));
    key.push_back(where.index() == 0 ? std::get<RoomId>(where) : 0);
  }
  if (s.portal_pair) {
    key.push_back(1);
    key.push_back(s.portal_pair->first);
    key.push_back(s.portal_pair->second);
  } else {
    key.push_back(0);
  }
  key.push_back(static_cast<std::uint32_t>(s.hep_fired.size()));
  for (ElementId h : s.hep_fired) key.push_back(h);
  return key;
}

Verdict solve(const Level& level, const SearchBounds& bounds) {
  if (auto report = validate_level(level); !report.empty()) throw InvalidLevel(std::move(report));

  const Rules rules(level);
  const auto heps = level.ids_of<HepPair>();
  const auto buttons = level.ids_of<TimedButton>();

  // Everything but the timers. The clock only matters while a catcher has
  // yet to fire.
  auto base_of = [&](const GameState& s) {
    GameState stripped = s;
    stripped.timers.clear();
    auto key = canonical_key(stripped);
    if (!heps.empty() && s.hep_fired.size() < heps.size()) {
      key.push_back(static_cast<std::uint32_t>(s.clock >> 32));
      key.push_back(static_cast<std::uint32_t>(s.clock));
    }
    return key;
  };
  auto timers_of = [&](const GameState& s) {
    std::vector<Tick> out(buttons.size(), 0);
    for (std::size_t i = 0; i < buttons.size(); ++i)
      if (auto it = s.timers.find(buttons[i]); it != s.timers.end()) out[i] = it->second;
    return out;
  };
  auto covers = [](const std::vector<Tick>& a, const std::vector<Tick>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] < b[i]) return false;
    return true;
  };

  // Timers only ever open doors and doors only ever block passages, so a
  // state whose timers are all at least another's, otherwise equal, can do
  // everything the other can. Each base key keeps an antichain.
  struct Entry {
    std::vector<Tick> timers;
    std::size_t node;
  };
  std::vector<Node> nodes;
  std::vector<bool> dead;
  std::unordered_map<std::vector<std::uint32_t>, std::vector<Entry>, KeyHash> seen;
  std::uint64_t stored = 0;

  auto witness_of = [&](std::size_t index) {
    Solvable result;
    result.witness_ticks = nodes[index].state.clock;
    for (std::int64_t i = static_cast<std::int64_t>(index); nodes[i].parent >= 0; i = nodes[i].parent)
      result.witness.push_back(nodes[i].via);
    std::reverse(result.witness.begin(), result.witness.end());
    result.states_explored = stored;
    return result;
  };

  nodes.push_back({rules.initial_state(), -1, input::Wait{1}, 0});
  dead.push_back(false);
  seen[base_of(nodes[0].state)].push_back({timers_of(nodes[0].state), 0});
  stored = 1;
  if (nodes[0].state.avatar_room == level.goal) return witness_of(0);

  std::vector<std::size_t> layer{0};
  bool clock_cut = false;
  std::uint32_t depth = 0;
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t index : layer) {
      if (dead[index]) continue;
      // Copy: nodes may reallocate while we push successors.
      const GameState current = nodes[index].state;
      for (auto& [event, succ] : rules.successors(current)) {
        if (succ.clock > bounds.max_clock) {
          clock_cut = true;
          continue;
        }
        auto timers = timers_of(succ);
        auto& chain = seen[base_of(succ)];
        bool dominated = false;
        for (Entry& e : chain) {
          if (!covers(e.timers, timers)) continue;
          dominated = true;
          Node& known = nodes[e.node];
          if (e.timers == timers && known.depth == depth + 1 && succ.clock < known.state.clock) {
            known.state = succ;
            known.parent = static_cast<std::int64_t>(index);
            known.via = event;
          }
          break;
        }
        if (dominated) continue;
        if (stored >= bounds.max_states) return BoundExceeded{bounds.max_states};
        // Drop entries the newcomer covers, unless they were reached sooner.
        std::erase_if(chain, [&](const Entry& e) {
          if (nodes[e.node].depth < depth + 1 || !covers(timers, e.timers)) return false;
          dead[e.node] = true;
          return true;
        });
        chain.push_back({std::move(timers), nodes.size()});
        ++stored;
        next.push_back(nodes.size());
        nodes.push_back({std::move(succ), static_cast<std::int64_t>(index), event, depth + 1});
        dead.push_back(false);
      }
    }
    ++depth;
    std::optional<std::size_t> best;
    for (std::size_t i : next)
      if (!dead[i] && nodes[i].state.avatar_room == level.goal &&
          (!best || nodes[i].state.clock < nodes[*best].state.clock))
        best = i;
    if (best) return witness_of(*best);
    layer = std::move(next);
  }
  if (clock_cut) return BoundExceeded{static_cast<std::uint64_t>(bounds.max_clock)};
  return Unsolvable{stored};
}

BigInt state_bound(const Level& level) {
  BigInt bound = static_cast<unsigned>(level.rooms.size());
  const BigInt two = 2;
  std::size_t surfaces = 0;
  for (const Element& e : level.elements) {
    std::visit(
        [&](const auto& el) {
          using T = std::decay_t<decltype(el)>;
          if constexpr (std::is_same_v<T, Door> || std::is_same_v<T, Switch> ||
                        std::is_same_v<T, Turret> || std::is_same_v<T, HepPair>)
            bound *= two;
          else if constexpr (std::is_same_v<T, TimedButton>)
            bound *= BigInt(el.duration_ticks + 1);
          else if constexpr (std::is_same_v<T, Cube>)
            bound *= BigInt(level.rooms.size() + 1);
          else if constexpr (std::is_same_v<T, PortalSurface>)
            ++surfaces;
        },
        e);
  }
  const BigInt pairs = BigInt(surfaces) * BigInt(surfaces == 0 ? 0 : surfaces - 1) / 2;
  return bound * (pairs + 1);
}

}  // namespace portal
