#include "portal/game.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace portal {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

StepResult reject(const GameState& state, IllegalReason reason, std::string detail) {
  return {state, IllegalInput{reason, std::move(detail)}};
}

}  // namespace

std::optional<ElementId> GameState::carried_cube() const {
  for (const auto& [cube, where] : cube_locations)
    if (std::holds_alternative<Carried>(where)) return cube;
  return std::nullopt;
}

std::string_view reason_name(IllegalReason r) {
  switch (r) {
    case IllegalReason::not_adjacent: return "not-adjacent";
    case IllegalReason::one_way: return "one-way";
    case IllegalReason::door_closed: return "door-closed";
    case IllegalReason::turret_field: return "turret-field";
    case IllegalReason::wrong_room: return "wrong-room";
    case IllegalReason::unknown_element: return "unknown-element";
    case IllegalReason::cube_unavailable: return "cube-unavailable";
    case IllegalReason::not_carrying: return "not-carrying";
    case IllegalReason::not_visible: return "not-visible";
    case IllegalReason::no_portals: return "no-portals";
    case IllegalReason::already_disabled: return "already-disabled";
    case IllegalReason::bad_wait: return "bad-wait";
  }
  return "?";
}

std::string to_string(const InputEvent& event) {
  return std::visit(
      overloaded{
          [](const input::Move& e) { return "move " + std::to_string(e.passage); },
          [](const input::Press& e) { return "press " + std::to_string(e.button); },
          [](const input::ToggleSwitch& e) { return "toggle " + std::to_string(e.sw); },
          [](const input::PickUpCube& e) { return "pickup " + std::to_string(e.cube); },
          [](const input::DropCube&) { return std::string("drop"); },
          [](const input::ShootPortalPair& e) {
            return "shoot " + std::to_string(e.first) + " " + std::to_string(e.second);
          },
          [](const input::PortalJump&) { return std::string("jump"); },
          [](const input::DisableTurret& e) { return "disable " + std::to_string(e.turret); },
          [](const input::Wait& e) { return "wait " + std::to_string(e.ticks); },
      },
      event);
}

InputEvent parse_input(const std::string& text) {
  std::istringstream in(text);
  std::string verb;
  in >> verb;
  auto number = [&]() -> std::int64_t {
    std::int64_t v = 0;
    if (!(in >> v) || v < 0) throw std::invalid_argument("bad input event: '" + text + "'");
    return v;
  };
  auto id = [&] { return static_cast<std::uint32_t>(number()); };
  InputEvent event;
  if (verb == "move") event = input::Move{id()};
  else if (verb == "press") event = input::Press{id()};
  else if (verb == "toggle") event = input::ToggleSwitch{id()};
  else if (verb == "pickup") event = input::PickUpCube{id()};
  else if (verb == "drop") event = input::DropCube{};
  else if (verb == "shoot") {
    const auto a = id();
    event = input::ShootPortalPair{a, id()};
  } else if (verb == "jump") event = input::PortalJump{};
  else if (verb == "disable") event = input::DisableTurret{id()};
  else if (verb == "wait") event = input::Wait{number()};
  else throw std::invalid_argument("bad input event: '" + text + "'");
  std::string rest;
  if (in >> rest) throw std::invalid_argument("trailing text in input event: '" + text + "'");
  return event;
}

Rules::Rules(const Level& level)
    : level_(level),
      control_(level.elements.size()),
      incident_(level.rooms.size()),
      buttons_in_(level.rooms.size()),
      switches_in_(level.rooms.size()),
      turrets_from_(level.rooms.size()),
      visible_surfaces_(level.rooms.size()) {
  for (PassageIndex p = 0; p < level.passages.size(); ++p) {
    const Passage& passage = level.passages[p];
    incident_.at(passage.from).push_back(p);
    if (passage.to != passage.from) incident_.at(passage.to).push_back(p);
  }
  for (ElementId id = 0; id < level.elements.size(); ++id) {
    std::visit(overloaded{
                   [](const Door&) {},
                   [&](const TimedButton& b) {
                     buttons_in_.at(b.room).push_back(id);
                     for (ElementId d : b.opens) control_.at(d).timed_openers.push_back(id);
                   },
                   [&](const WeightedButton& b) {
                     for (ElementId d : b.while_pressed_opens)
                       control_.at(d).weighted_openers.push_back(id);
                     for (ElementId d : b.while_pressed_closes)
                       control_.at(d).weighted_closers.push_back(id);
                   },
                   [&](const Cube&) { cubes_.push_back(id); },
                   [&](const Turret& t) { turrets_from_.at(t.disable_room).push_back(id); },
                   [&](const PortalSurface& s) {
                     FlatSet<RoomId> viewers = s.visible_from;
                     viewers.insert(s.room);
                     for (RoomId r : viewers) visible_surfaces_.at(r).push_back(id);
                   },
                   [&](const HepPair& h) {
                     heps_.push_back(id);
                     for (ElementId d : h.on_fire_opens) control_.at(d).hep_openers.push_back(id);
                     for (ElementId d : h.on_fire_closes) control_.at(d).hep_closers.push_back(id);
                   },
                   [&](const Switch& s) {
                     switches_in_.at(s.room).push_back(id);
                     for (std::uint8_t st = 0; st < 2; ++st)
                       for (ElementId d : s.open_in_state[st])
                         control_.at(d).switch_openers.push_back({id, st});
                   },
               },
               level.elements[id]);
  }
}

bool Rules::button_pressed(const GameState& state, const WeightedButton& button) const {
  if (state.avatar_room == button.room) return true;
  for (const auto& [cube, where] : state.cube_locations)
    if (const RoomId* r = std::get_if<RoomId>(&where); r && *r == button.room) return true;
  return false;
}

FlatSet<ElementId> Rules::open_doors(const GameState& state) const {
  FlatSet<ElementId> open;
  for (ElementId id = 0; id < level_.elements.size(); ++id) {
    const Door* door = level_.get<Door>(id);
    if (!door) continue;
    const DoorControl& c = control_[id];
    bool is_open = door->initially_open;
    for (ElementId b : c.timed_openers) is_open = is_open || state.timers.contains(b);
    for (ElementId b : c.weighted_openers)
      is_open = is_open || button_pressed(state, std::get<WeightedButton>(level_.elements[b]));
    for (const auto& [sw, st] : c.switch_openers) {
      auto it = state.switch_states.find(sw);
      is_open = is_open || (it != state.switch_states.end() && it->second == st);
    }
    for (ElementId h : c.hep_openers) is_open = is_open || state.hep_fired.contains(h);
    bool closed = false;
    for (ElementId b : c.weighted_closers)
      closed = closed || button_pressed(state, std::get<WeightedButton>(level_.elements[b]));
    for (ElementId h : c.hep_closers) closed = closed || state.hep_fired.contains(h);
    if (is_open && !closed) open.insert(open.end(), id);
  }
  return open;
}

void Rules::advance(GameState& state, Tick ticks) const {
  state.clock += ticks;
  for (auto it = state.timers.begin(); it != state.timers.end();) {
    it->second -= ticks;
    if (it->second <= 0) it = state.timers.erase(it);
    else ++it;
  }
  for (ElementId h : heps_)
    if (!state.hep_fired.contains(h) &&
        state.clock >= std::get<HepPair>(level_.elements[h]).catcher_fire_tick)
      state.hep_fired.insert(h);
}

std::optional<Tick> Rules::next_event_delay(const GameState& state) const {
  std::optional<Tick> best;
  auto consider = [&](Tick d) {
    if (d >= 1 && (!best || d < *best)) best = d;
  };
  for (const auto& [button, remaining] : state.timers) consider(remaining);
  for (ElementId h : heps_)
    if (!state.hep_fired.contains(h))
      consider(std::get<HepPair>(level_.elements[h]).catcher_fire_tick - state.clock);
  return best;
}

GameState Rules::initial_state() const {
  GameState s;
  s.avatar_room = level_.start;
  for (ElementId id = 0; id < level_.elements.size(); ++id) {
    const Element& e = level_.elements[id];
    if (const Switch* sw = std::get_if<Switch>(&e)) s.switch_states[id] = sw->initial_state;
    if (std::holds_alternative<Turret>(e)) s.turrets_alive.insert(id);
    if (const Cube* c = std::get_if<Cube>(&e)) s.cube_locations[id] = c->initial_room;
    if (const HepPair* h = std::get_if<HepPair>(&e); h && h->catcher_fire_tick <= 0)
      s.hep_fired.insert(id);
  }
  s.doors_open = open_doors(s);
  return s;
}

StepResult Rules::step(const GameState& state, const InputEvent& event) const {
  GameState next = state;
  const RoomId here = state.avatar_room;
  auto unknown = [&](ElementId id, std::string_view kind) {
    return reject(state, IllegalReason::unknown_element,
                  std::to_string(id) + " is not a " + std::string(kind));
  };

  std::optional<StepResult> failure = std::visit(
      overloaded{
          [&](const input::Move& e) -> std::optional<StepResult> {
            if (e.passage >= level_.passages.size())
              return reject(state, IllegalReason::unknown_element, "no such passage");
            const Passage& p = level_.passages[e.passage];
            RoomId dest;
            if (p.from == here) dest = p.to;
            else if (p.to == here) {
              if (p.one_way)
                return reject(state, IllegalReason::one_way, "cannot climb back up a long fall");
              dest = p.from;
            } else {
              return reject(state, IllegalReason::not_adjacent, "passage does not touch this room");
            }
            if (p.guarded_by && !state.doors_open.contains(*p.guarded_by))
              return reject(state, IllegalReason::door_closed,
                            "door " + std::to_string(*p.guarded_by) + " is closed");
            for (ElementId t : p.turret_fields)
              if (state.turrets_alive.contains(t))
                return reject(state, IllegalReason::turret_field,
                              "turret " + std::to_string(t) + " covers the passage");
            next.avatar_room = dest;
            if (p.grill) {
              next.portal_pair.reset();
              if (auto cube = next.carried_cube()) next.cube_locations[*cube] = Destroyed{};
            }
            advance(next, p.traverse_ticks);
            return std::nullopt;
          },
          [&](const input::Press& e) -> std::optional<StepResult> {
            const TimedButton* b = level_.get<TimedButton>(e.button);
            if (!b) return unknown(e.button, "timed button");
            if (b->room != here) return reject(state, IllegalReason::wrong_room, "button is elsewhere");
            advance(next, 1);
            next.timers[e.button] = b->duration_ticks;
            return std::nullopt;
          },
          [&](const input::ToggleSwitch& e) -> std::optional<StepResult> {
            const Switch* sw = level_.get<Switch>(e.sw);
            if (!sw) return unknown(e.sw, "switch");
            if (sw->room != here) return reject(state, IllegalReason::wrong_room, "switch is elsewhere");
            next.switch_states[e.sw] ^= 1;
            advance(next, 1);
            return std::nullopt;
          },
          [&](const input::PickUpCube& e) -> std::optional<StepResult> {
            if (!level_.get<Cube>(e.cube)) return unknown(e.cube, "cube");
            const CubeLocation& where = state.cube_locations.at(e.cube);
            const RoomId* r = std::get_if<RoomId>(&where);
            if (!r || *r != here)
              return reject(state, IllegalReason::cube_unavailable, "cube is not in this room");
            if (state.carried_cube())
              return reject(state, IllegalReason::cube_unavailable, "already carrying a cube");
            next.cube_locations[e.cube] = Carried{};
            advance(next, 1);
            return std::nullopt;
          },
          [&](const input::DropCube&) -> std::optional<StepResult> {
            auto cube = state.carried_cube();
            if (!cube) return reject(state, IllegalReason::not_carrying, "no cube carried");
            next.cube_locations[*cube] = here;
            advance(next, 1);
            return std::nullopt;
          },
          [&](const input::ShootPortalPair& e) -> std::optional<StepResult> {
            const ElementId lo = std::min(e.first, e.second);
            const ElementId hi = std::max(e.first, e.second);
            if (lo == hi)
              return reject(state, IllegalReason::not_visible, "portals need two distinct surfaces");
            for (ElementId s : {lo, hi}) {
              const PortalSurface* surface = level_.get<PortalSurface>(s);
              if (!surface) return unknown(s, "portal surface");
              if (surface->room != here && !surface->visible_from.contains(here))
                return reject(state, IllegalReason::not_visible,
                              "surface " + std::to_string(s) + " is not in sight");
            }
            next.portal_pair = std::pair{lo, hi};
            advance(next, 1);
            return std::nullopt;
          },
          [&](const input::PortalJump&) -> std::optional<StepResult> {
            if (!state.portal_pair) return reject(state, IllegalReason::no_portals, "no portals placed");
            const RoomId a = std::get<PortalSurface>(level_.elements[state.portal_pair->first]).room;
            const RoomId b = std::get<PortalSurface>(level_.elements[state.portal_pair->second]).room;
            if (here == a) next.avatar_room = b;
            else if (here == b) next.avatar_room = a;
            else return reject(state, IllegalReason::wrong_room, "no portal in this room");
            advance(next, 1);
            return std::nullopt;
          },
          [&](const input::DisableTurret& e) -> std::optional<StepResult> {
            const Turret* t = level_.get<Turret>(e.turret);
            if (!t) return unknown(e.turret, "turret");
            if (!state.turrets_alive.contains(e.turret))
              return reject(state, IllegalReason::already_disabled, "turret already disabled");
            if (t->disable_room != here)
              return reject(state, IllegalReason::wrong_room, "turret cannot be reached from here");
            next.turrets_alive.erase(e.turret);
            advance(next, 1);
            return std::nullopt;
          },
          [&](const input::Wait& e) -> std::optional<StepResult> {
            if (e.ticks < 1) return reject(state, IllegalReason::bad_wait, "wait needs at least one tick");
            advance(next, e.ticks);
            return std::nullopt;
          },
      },
      event);

  if (failure) return std::move(*failure);
  next.doors_open = open_doors(next);
  return {std::move(next), std::nullopt};
}

std::vector<std::pair<InputEvent, GameState>> Rules::successors(const GameState& state) const {
  std::vector<std::pair<InputEvent, GameState>> out;
  auto attempt = [&](InputEvent event) {
    StepResult r = step(state, event);
    if (r.ok()) out.emplace_back(std::move(event), std::move(r.state));
  };
  const RoomId here = state.avatar_room;
  for (PassageIndex p : incident_[here]) attempt(input::Move{p});
  for (ElementId b : buttons_in_[here]) attempt(input::Press{b});
  for (ElementId s : switches_in_[here]) attempt(input::ToggleSwitch{s});
  if (!state.carried_cube())
    for (ElementId c : cubes_) attempt(input::PickUpCube{c});
  else
    attempt(input::DropCube{});
  const auto& surfaces = visible_surfaces_[here];
  for (std::size_t i = 0; i < surfaces.size(); ++i)
    for (std::size_t j = i + 1; j < surfaces.size(); ++j)
      attempt(input::ShootPortalPair{surfaces[i], surfaces[j]});
  if (state.portal_pair) attempt(input::PortalJump{});
  for (ElementId t : turrets_from_[here]) attempt(input::DisableTurret{t});
  if (auto delay = next_event_delay(state)) attempt(input::Wait{*delay});
  return out;
}

GameState initial_state(const Level& level) { return Rules(level).initial_state(); }

StepResult step(const Level& level, const GameState& state, const InputEvent& event) {
  return Rules(level).step(state, event);
}

std::vector<std::pair<InputEvent, GameState>> successors(const Level& level,
                                                         const GameState& state) {
  return Rules(level).successors(state);
}

ReplayResult replay(const Level& level, const std::vector<InputEvent>& inputs) {
  const Rules rules(level);
  ReplayResult result{rules.initial_state(), std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    StepResult r = rules.step(result.final_state, inputs[i]);
    if (!r.ok()) {
      result.failed_at = i;
      result.error = std::move(r.error);
      return result;
    }
    result.final_state = std::move(r.state);
  }
  return result;
}

}  // namespace portal
