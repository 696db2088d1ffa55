#pragma once

// Abstract chamber model: a level is a graph of rooms joined by passages, plus
// gameplay elements wired to doors. Geometry is quotiented away; every
// passage carries an integer tick cost instead.

#include <boost/container/flat_map.hpp>
#include <boost/container/flat_set.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace portal {

using RoomId = std::uint32_t;
using ElementId = std::uint32_t;
using PassageIndex = std::uint32_t;
using Tick = std::int64_t;

template <class T>
using FlatSet = boost::container::flat_set<T>;
template <class K, class V>
using FlatMap = boost::container::flat_map<K, V>;

enum class Mechanic : std::uint8_t {
  doors,
  timed_buttons,
  weighted_buttons,
  cubes,
  turrets,
  portals,
  emancipation_grills,
  hep,
  switches,
  long_fall,
};

std::string_view mechanic_name(Mechanic m);
std::optional<Mechanic> parse_mechanic(std::string_view name);

struct Passage {
  RoomId from = 0;
  RoomId to = 0;
  Tick traverse_ticks = 1;
  bool one_way = false;  // long fall: from -> to only
  std::optional<ElementId> guarded_by;
  FlatSet<ElementId> turret_fields;
  bool grill = false;

  bool operator==(const Passage&) const = default;
};

struct Door {
  bool initially_open = false;
  bool operator==(const Door&) const = default;
};

struct TimedButton {
  RoomId room = 0;
  Tick duration_ticks = 1;
  FlatSet<ElementId> opens;
  bool operator==(const TimedButton&) const = default;
};

// Pressed while a cube rests in its room or the avatar stands there.
struct WeightedButton {
  RoomId room = 0;
  FlatSet<ElementId> while_pressed_opens;
  FlatSet<ElementId> while_pressed_closes;
  bool operator==(const WeightedButton&) const = default;
};

struct Cube {
  RoomId initial_room = 0;
  bool operator==(const Cube&) const = default;
};

struct Turret {
  FlatSet<PassageIndex> blocks;
  RoomId disable_room = 0;
  bool operator==(const Turret&) const = default;
};

struct PortalSurface {
  RoomId room = 0;
  // Rooms (besides `room` itself) with a sightline to this surface.
  FlatSet<RoomId> visible_from;
  bool operator==(const PortalSurface&) const = default;
};

// A launcher/catcher pair whose pellet reaches the catcher at a fixed tick.
struct HepPair {
  Tick catcher_fire_tick = 0;
  FlatSet<ElementId> on_fire_opens;
  FlatSet<ElementId> on_fire_closes;
  bool operator==(const HepPair&) const = default;
};

struct Switch {
  RoomId room = 0;
  std::uint8_t initial_state = 0;
  std::array<FlatSet<ElementId>, 2> open_in_state;
  bool operator==(const Switch&) const = default;
};

using Element = std::variant<Door, TimedButton, WeightedButton, Cube, Turret, PortalSurface,
                             HepPair, Switch>;

Mechanic mechanic_of(const Element& element);
std::string_view element_kind_name(const Element& element);

struct Level {
  std::vector<std::string> rooms;  // index is the room id
  std::vector<Passage> passages;
  std::vector<Element> elements;   // index is the element id
  RoomId start = 0;
  RoomId goal = 0;
  FlatSet<Mechanic> allowed_mechanics;

  bool operator==(const Level&) const = default;

  template <class T>
  const T* get(ElementId id) const {
    if (id >= elements.size()) return nullptr;
    return std::get_if<T>(&elements[id]);
  }

  template <class T>
  std::vector<ElementId> ids_of() const {
    std::vector<ElementId> out;
    for (ElementId i = 0; i < elements.size(); ++i)
      if (std::holds_alternative<T>(elements[i])) out.push_back(i);
    return out;
  }
};

// Incremental construction helper used by the compilers and tests.
class LevelBuilder {
 public:
  RoomId room(std::string name);
  PassageIndex passage(RoomId from, RoomId to, Tick ticks = 1);
  PassageIndex one_way(RoomId from, RoomId to, Tick ticks = 1);
  ElementId add(Element element);
  ElementId door(bool initially_open = false) { return add(Door{initially_open}); }

  Passage& passage_at(PassageIndex p) { return level_.passages.at(p); }
  template <class T>
  T& element_at(ElementId id) {
    return std::get<T>(level_.elements.at(id));
  }

  void guard(PassageIndex p, ElementId door);
  // Records the turret on both sides of the passage/turret relation.
  void cover(PassageIndex p, ElementId turret);
  void allow(Mechanic m) { level_.allowed_mechanics.insert(m); }
  void set_start(RoomId r) { level_.start = r; }
  void set_goal(RoomId r) { level_.goal = r; }

  const Level& peek() const { return level_; }
  Level build() &&;

 private:
  Level level_;
};

struct Violation {
  std::string locator;  // e.g. "passage[3]", "element[7]", "level"
  std::string message;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validate_level(const Level& level);

}  // namespace portal
