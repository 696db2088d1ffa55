#include "portal/compilers.hpp"

#include "portal/game.hpp"

#include <deque>
#include <functional>
#include <set>
#include <string>
#include <tuple>

namespace portal {

std::string_view switch_kind_name(SwitchKind k) {
  switch (k) {
    case SwitchKind::abstract: return "abstract";
    case SwitchKind::cubes: return "cubes";
    case SwitchKind::laser: return "laser";
    case SwitchKind::gravity: return "gravity";
  }
  return "?";
}

std::optional<SwitchKind> parse_switch_kind(std::string_view name) {
  for (SwitchKind k : {SwitchKind::abstract, SwitchKind::cubes, SwitchKind::laser, SwitchKind::gravity})
    if (switch_kind_name(k) == name) return k;
  return std::nullopt;
}

EmbeddedSwitch embed_switch(LevelBuilder& b, SwitchKind kind, RoomId lobby,
                            const std::array<FlatSet<ElementId>, 2>& open_in_state,
                            std::uint8_t initial_state, const std::string& prefix) {
  EmbeddedSwitch out;
  out.kind = kind;
  out.lobby = lobby;
  out.initial_state = initial_state;
  switch (kind) {
    case SwitchKind::abstract:
      out.switch_element = b.add(Switch{lobby, initial_state, open_in_state});
      break;
    case SwitchKind::cubes: {
      // One cube, two weighted buttons. The only entrance stays shut unless
      // a button is held, so the cube can never leave and the avatar cannot
      // walk out mid-swap.
      const RoomId chamber = b.room(prefix + "chamber");
      out.pads = {b.room(prefix + "pad0"), b.room(prefix + "pad1")};
      out.inner_rooms = {chamber, out.pads[0], out.pads[1]};
      const ElementId entrance_door = b.door();
      out.entrance = b.passage(lobby, chamber);
      b.guard(*out.entrance, entrance_door);
      for (int s = 0; s < 2; ++s) {
        b.passage(chamber, out.pads[s]);
        FlatSet<ElementId> opens = open_in_state[s];
        opens.insert(entrance_door);
        b.add(WeightedButton{out.pads[s], std::move(opens), {}});
      }
      out.cube = b.add(Cube{out.pads[initial_state]});
      break;
    }
    case SwitchKind::laser:
    case SwitchKind::gravity: {
      // Memory latch: relay/beam self-holds until the blocker is placed.
      // Only its two stable states are observable, so it is carried as a
      // two-state element in a side room.
      const RoomId latch = b.room(prefix + (kind == SwitchKind::laser ? "relay" : "beam"));
      out.inner_rooms = {latch};
      out.entrance = b.passage(lobby, latch);
      out.switch_element = b.add(Switch{latch, initial_state, open_in_state});
      break;
    }
  }
  return out;
}

SwitchGadget instantiate_switch_gadget(SwitchKind kind) {
  LevelBuilder b;
  const RoomId lobby = b.room("lobby");
  SwitchGadget g;
  g.doors = {b.door(), b.door()};
  g.ports = embed_switch(b, kind, lobby, {FlatSet<ElementId>{g.doors[0]}, FlatSet<ElementId>{g.doors[1]}}, 0,
                         "switch_");
  b.set_start(lobby);
  b.set_goal(lobby);
  g.level = std::move(b).build();
  return g;
}

namespace {

enum class Abstract { enter, leave, toggle, noop };

struct AbstractSwitch {
  bool inside = false;
  std::uint8_t state = 0;

  bool apply(Abstract a) {
    switch (a) {
      case Abstract::enter: if (inside) return false; inside = true; return true;
      case Abstract::leave: if (!inside) return false; inside = false; return true;
      case Abstract::toggle: if (!inside) return false; state ^= 1; return true;
      case Abstract::noop: return true;
    }
    return false;
  }
};

// Concrete input macro for one abstract input; empty optional when the
// macro cannot start from this state.
std::optional<std::vector<InputEvent>> macro(const SwitchGadget& g, const GameState& s, Abstract a,
                                             std::uint8_t believed_state) {
  const EmbeddedSwitch& p = g.ports;
  const RoomId home = p.inner_rooms.empty() ? p.lobby : p.inner_rooms.front();
  switch (a) {
    case Abstract::noop:
      return std::vector<InputEvent>{};
    case Abstract::enter:
      if (s.avatar_room != p.lobby) return std::nullopt;
      if (!p.entrance) return std::vector<InputEvent>{};
      return std::vector<InputEvent>{input::Move{*p.entrance}};
    case Abstract::leave:
      if (s.avatar_room != home || !p.entrance) return std::nullopt;
      return std::vector<InputEvent>{input::Move{*p.entrance}};
    case Abstract::toggle:
      if (p.kind != SwitchKind::cubes) return std::vector<InputEvent>{input::ToggleSwitch{*p.switch_element}};
      {
        // Carry the cube from the held pad to the other one.
        const Level& level = g.level;
        auto passage_between = [&](RoomId x, RoomId y) -> PassageIndex {
          for (PassageIndex i = 0; i < level.passages.size(); ++i) {
            const Passage& q = level.passages[i];
            if ((q.from == x && q.to == y) || (q.from == y && q.to == x)) return i;
          }
          throw std::logic_error("gadget passage missing");
        };
        const RoomId from = p.pads[believed_state], to = p.pads[believed_state ^ 1];
        return std::vector<InputEvent>{input::Move{passage_between(home, from)}, input::PickUpCube{*p.cube},
                                       input::Move{passage_between(from, home)}, input::Move{passage_between(home, to)},
                                       input::DropCube{}, input::Move{passage_between(to, home)}};
      }
  }
  return std::nullopt;
}

const char* abstract_name(Abstract a) {
  static const char* names[] = {"enter", "leave", "toggle", "noop"};
  return names[static_cast<int>(a)];
}

}  // namespace

BisimulationReport check_switch_bisimulation(SwitchKind kind, std::size_t max_length) {
  const SwitchGadget g = instantiate_switch_gadget(kind);
  const Rules rules(g.level);
  BisimulationReport report;

  auto external = [&](const GameState& s) {
    return std::pair{s.doors_open.contains(g.doors[0]), s.doors_open.contains(g.doors[1])};
  };
  auto expected = [](std::uint8_t state) { return std::pair{state == 0, state == 1}; };

  // Depth-first over all abstract sequences, carrying both machines along.
  std::vector<Abstract> seq;
  auto describe = [&] {
    std::string out;
    for (Abstract a : seq) out += std::string(out.empty() ? "" : " ") + abstract_name(a);
    return out;
  };
  auto mismatch = [&](const std::string& what) {
    if (report.mismatches++ == 0) report.first_mismatch = describe() + ": " + what;
  };
  std::function<void(const AbstractSwitch&, const GameState&)> walk = [&](const AbstractSwitch& abs,
                                                                          const GameState& con) {
    ++report.sequences;
    if (seq.size() == max_length) return;
    for (Abstract a : {Abstract::enter, Abstract::leave, Abstract::toggle, Abstract::noop}) {
      seq.push_back(a);
      AbstractSwitch next_abs = abs;
      const bool abs_ok = next_abs.apply(a);
      GameState next_con = con;
      bool con_ok = false;
      if (auto m = macro(g, con, a, abs.state)) {
        con_ok = true;
        for (const InputEvent& e : *m) {
          StepResult r = rules.step(next_con, e);
          if (!r.ok()) {
            con_ok = false;
            break;
          }
          next_con = std::move(r.state);
        }
      }
      if (abs_ok != con_ok) {
        mismatch(std::string("legality differs (abstract ") + (abs_ok ? "legal" : "illegal") + ")");
      } else if (abs_ok) {
        if (external(next_con) != expected(next_abs.state)) mismatch("external doors differ");
        else if ((next_con.avatar_room != g.ports.lobby) != next_abs.inside && g.ports.entrance)
          mismatch("avatar position differs");
        walk(next_abs, next_con);
      } else {
        walk(abs, con);
      }
      seq.pop_back();
    }
  };
  walk(AbstractSwitch{false, g.ports.initial_state}, rules.initial_state());

  // Every reachable configuration seen from outside must be one of the two
  // abstract states.
  std::set<GameState, bool (*)(const GameState&, const GameState&)> seen(
      [](const GameState& a, const GameState& b) {
        return std::tie(a.avatar_room, a.switch_states, a.cube_locations, a.doors_open) <
               std::tie(b.avatar_room, b.switch_states, b.cube_locations, b.doors_open);
      });
  std::deque<GameState> queue{rules.initial_state()};
  seen.insert(queue.front());
  while (!queue.empty()) {
    GameState s = std::move(queue.front());
    queue.pop_front();
    if (s.avatar_room == g.ports.lobby && g.ports.entrance) {
      ++report.lobby_states;
      const auto ext = external(s);
      if (ext != expected(0) && ext != expected(1)) ++report.bad_lobby_states;
    }
    for (auto& [event, next] : rules.successors(s))
      if (seen.insert(next).second) queue.push_back(std::move(next));
  }
  return report;
}

}  // namespace portal
