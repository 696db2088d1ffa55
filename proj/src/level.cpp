#include "portal/level.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace portal {

namespace {

constexpr std::array<std::pair<Mechanic, std::string_view>, 10> kMechanicNames{{
    {Mechanic::doors, "doors"},
    {Mechanic::timed_buttons, "timed-buttons"},
    {Mechanic::weighted_buttons, "weighted-buttons"},
    {Mechanic::cubes, "cubes"},
    {Mechanic::turrets, "turrets"},
    {Mechanic::portals, "portals"},
    {Mechanic::emancipation_grills, "emancipation-grills"},
    {Mechanic::hep, "hep"},
    {Mechanic::switches, "switches"},
    {Mechanic::long_fall, "long-fall"},
}};

std::string element_locator(ElementId id) { return "element[" + std::to_string(id) + "]"; }
std::string passage_locator(PassageIndex p) { return "passage[" + std::to_string(p) + "]"; }

class Validator {
 public:
  explicit Validator(const Level& level) : level_(level) {}

  ValidationReport run() {
    check_endpoints();
    check_passages();
    for (ElementId id = 0; id < level_.elements.size(); ++id) check_element(id);
    check_turret_relation();
    check_switch_control();
    return std::move(report_);
  }

 private:
  void fail(std::string locator, std::string message) {
    report_.push_back({std::move(locator), std::move(message)});
  }

  bool room_ok(RoomId r) const { return r < level_.rooms.size(); }

  template <class T>
  bool is(ElementId id) const {
    return level_.get<T>(id) != nullptr;
  }

  void need_mechanic(Mechanic m, const std::string& locator) {
    if (!level_.allowed_mechanics.contains(m))
      fail(locator, "uses mechanic '" + std::string(mechanic_name(m)) + "' not in allowed_mechanics");
  }

  void check_room(RoomId r, const std::string& locator, std::string_view what) {
    if (!room_ok(r))
      fail(locator, std::string(what) + " references unknown room " + std::to_string(r));
  }

  template <class T>
  void check_refs(const FlatSet<ElementId>& ids, const std::string& locator, std::string_view what,
                  std::string_view kind) {
    for (ElementId d : ids)
      if (!is<T>(d))
        fail(locator, std::string(what) + " references " + std::to_string(d) +
                          ", which is not a declared " + std::string(kind));
  }

  void check_endpoints() {
    if (!room_ok(level_.start)) fail("level", "start room is not a member of rooms");
    if (!room_ok(level_.goal)) fail("level", "goal room is not a member of rooms");
  }

  void check_passages() {
    std::set<std::pair<RoomId, RoomId>> one_ways;
    for (PassageIndex p = 0; p < level_.passages.size(); ++p) {
      const Passage& passage = level_.passages[p];
      const std::string loc = passage_locator(p);
      check_room(passage.from, loc, "from");
      check_room(passage.to, loc, "to");
      if (passage.traverse_ticks < 1) fail(loc, "traverse_ticks must be at least 1");
      if (passage.guarded_by && !is<Door>(*passage.guarded_by))
        fail(loc, "guard " + std::to_string(*passage.guarded_by) + " is not a declared door");
      if (passage.guarded_by) need_mechanic(Mechanic::doors, loc);
      for (ElementId t : passage.turret_fields)
        if (!is<Turret>(t)) fail(loc, "turret field " + std::to_string(t) + " is not a declared turret");
      if (passage.one_way) {
        need_mechanic(Mechanic::long_fall, loc);
        one_ways.insert({passage.from, passage.to});
      }
      if (passage.grill) need_mechanic(Mechanic::emancipation_grills, loc);
    }
    for (PassageIndex p = 0; p < level_.passages.size(); ++p) {
      const Passage& passage = level_.passages[p];
      if (passage.one_way && passage.from < passage.to &&
          one_ways.contains({passage.to, passage.from}))
        fail(passage_locator(p), "one-way drop has a one-way passage in the reverse direction");
    }
  }

  void check_element(ElementId id) {
    const std::string loc = element_locator(id);
    const Element& element = level_.elements[id];
    need_mechanic(mechanic_of(element), loc);
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, TimedButton>) {
            check_room(e.room, loc, "timed button");
            if (e.duration_ticks < 1) fail(loc, "duration_ticks must be at least 1");
            check_refs<Door>(e.opens, loc, "timed button", "door");
          } else if constexpr (std::is_same_v<T, WeightedButton>) {
            check_room(e.room, loc, "weighted button");
            check_refs<Door>(e.while_pressed_opens, loc, "weighted button", "door");
            check_refs<Door>(e.while_pressed_closes, loc, "weighted button", "door");
          } else if constexpr (std::is_same_v<T, Cube>) {
            check_room(e.initial_room, loc, "cube");
          } else if constexpr (std::is_same_v<T, Turret>) {
            check_room(e.disable_room, loc, "turret disable room");
            for (PassageIndex p : e.blocks)
              if (p >= level_.passages.size())
                fail(loc, "turret blocks unknown passage " + std::to_string(p));
          } else if constexpr (std::is_same_v<T, PortalSurface>) {
            check_room(e.room, loc, "portal surface");
            for (RoomId r : e.visible_from) check_room(r, loc, "portal sightline");
          } else if constexpr (std::is_same_v<T, HepPair>) {
            if (e.catcher_fire_tick < 0) fail(loc, "catcher_fire_tick must be nonnegative");
            check_refs<Door>(e.on_fire_opens, loc, "HEP catcher", "door");
            check_refs<Door>(e.on_fire_closes, loc, "HEP catcher", "door");
          } else if constexpr (std::is_same_v<T, Switch>) {
            check_room(e.room, loc, "switch");
            if (e.initial_state > 1) fail(loc, "switch initial_state must be 0 or 1");
            check_refs<Door>(e.open_in_state[0], loc, "switch state 0", "door");
            check_refs<Door>(e.open_in_state[1], loc, "switch state 1", "door");
          }
        },
        element);
  }

  // Passage.turret_fields and Turret.blocks describe the same relation; a
  // turret may not cover any way into its own disable room.
  void check_turret_relation() {
    for (ElementId id = 0; id < level_.elements.size(); ++id) {
      const Turret* turret = level_.get<Turret>(id);
      if (!turret) continue;
      for (PassageIndex p : turret->blocks) {
        if (p >= level_.passages.size()) continue;
        const Passage& passage = level_.passages[p];
        if (!passage.turret_fields.contains(id))
          fail(element_locator(id), "blocks " + passage_locator(p) +
                                        " but the passage does not list it in turret_fields");
        const bool enters = passage.to == turret->disable_room ||
                            (!passage.one_way && passage.from == turret->disable_room);
        if (enters)
          fail(element_locator(id), "covers " + passage_locator(p) +
                                        ", an approach to its own disable room");
      }
    }
    for (PassageIndex p = 0; p < level_.passages.size(); ++p)
      for (ElementId t : level_.passages[p].turret_fields) {
        const Turret* turret = level_.get<Turret>(t);
        if (turret && !turret->blocks.contains(p))
          fail(passage_locator(p), "lists turret " + std::to_string(t) +
                                       " whose blocks set omits this passage");
      }
  }

  // A door driven by a switch must be driven by that switch alone.
  void check_switch_control() {
    std::map<ElementId, std::set<ElementId>> switch_owners;
    for (ElementId id = 0; id < level_.elements.size(); ++id)
      if (const Switch* sw = level_.get<Switch>(id))
        for (const auto& doors : sw->open_in_state)
          for (ElementId d : doors) switch_owners[d].insert(id);

    std::set<ElementId> other_controlled;
    for (const Element& element : level_.elements) {
      std::visit(
          [&](const auto& e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, TimedButton>) {
              other_controlled.insert(e.opens.begin(), e.opens.end());
            } else if constexpr (std::is_same_v<T, WeightedButton>) {
              other_controlled.insert(e.while_pressed_opens.begin(), e.while_pressed_opens.end());
              other_controlled.insert(e.while_pressed_closes.begin(), e.while_pressed_closes.end());
            } else if constexpr (std::is_same_v<T, HepPair>) {
              other_controlled.insert(e.on_fire_opens.begin(), e.on_fire_opens.end());
              other_controlled.insert(e.on_fire_closes.begin(), e.on_fire_closes.end());
            }
          },
          element);
    }

    for (const auto& [door, owners] : switch_owners) {
      const std::string loc = element_locator(door);
      if (owners.size() > 1) {
        std::string list;
        for (ElementId s : owners) list += (list.empty() ? "" : ", ") + std::to_string(s);
        fail(loc, "door is controlled by more than one switch (" + list + ")");
      }
      if (other_controlled.contains(door))
        fail(loc, "switch-controlled door is also driven by a non-switch element");
      if (const Door* d = level_.get<Door>(door); d && d->initially_open)
        fail(loc, "switch-controlled door must not be initially open");
    }
  }

  const Level& level_;
  ValidationReport report_;
};

}  // namespace

std::string_view mechanic_name(Mechanic m) {
  for (const auto& [mech, name] : kMechanicNames)
    if (mech == m) return name;
  return "?";
}

std::optional<Mechanic> parse_mechanic(std::string_view name) {
  for (const auto& [mech, n] : kMechanicNames)
    if (n == name) return mech;
  return std::nullopt;
}

Mechanic mechanic_of(const Element& element) {
  struct {
    Mechanic operator()(const Door&) const { return Mechanic::doors; }
    Mechanic operator()(const TimedButton&) const { return Mechanic::timed_buttons; }
    Mechanic operator()(const WeightedButton&) const { return Mechanic::weighted_buttons; }
    Mechanic operator()(const Cube&) const { return Mechanic::cubes; }
    Mechanic operator()(const Turret&) const { return Mechanic::turrets; }
    Mechanic operator()(const PortalSurface&) const { return Mechanic::portals; }
    Mechanic operator()(const HepPair&) const { return Mechanic::hep; }
    Mechanic operator()(const Switch&) const { return Mechanic::switches; }
  } visitor;
  return std::visit(visitor, element);
}

std::string_view element_kind_name(const Element& element) {
  static constexpr std::array<std::string_view, 8> names{
      "door", "timed_button", "weighted_button", "cube", "turret", "portal_surface", "hep_pair",
      "switch"};
  return names[element.index()];
}

RoomId LevelBuilder::room(std::string name) {
  level_.rooms.push_back(std::move(name));
  return static_cast<RoomId>(level_.rooms.size() - 1);
}

PassageIndex LevelBuilder::passage(RoomId from, RoomId to, Tick ticks) {
  Passage p;
  p.from = from;
  p.to = to;
  p.traverse_ticks = ticks;
  level_.passages.push_back(std::move(p));
  return static_cast<PassageIndex>(level_.passages.size() - 1);
}

PassageIndex LevelBuilder::one_way(RoomId from, RoomId to, Tick ticks) {
  const PassageIndex p = passage(from, to, ticks);
  level_.passages[p].one_way = true;
  return p;
}

ElementId LevelBuilder::add(Element element) {
  level_.elements.push_back(std::move(element));
  return static_cast<ElementId>(level_.elements.size() - 1);
}

void LevelBuilder::guard(PassageIndex p, ElementId door) { level_.passages.at(p).guarded_by = door; }

void LevelBuilder::cover(PassageIndex p, ElementId turret) {
  level_.passages.at(p).turret_fields.insert(turret);
  element_at<Turret>(turret).blocks.insert(p);
}

Level LevelBuilder::build() && {
  for (const Element& e : level_.elements) level_.allowed_mechanics.insert(mechanic_of(e));
  for (const Passage& p : level_.passages) {
    if (p.one_way) level_.allowed_mechanics.insert(Mechanic::long_fall);
    if (p.grill) level_.allowed_mechanics.insert(Mechanic::emancipation_grills);
    if (p.guarded_by) level_.allowed_mechanics.insert(Mechanic::doors);
  }
  return std::move(level_);
}

ValidationReport validate_level(const Level& level) { return Validator(level).run(); }

}  // namespace portal
