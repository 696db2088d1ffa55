#include "portal/io.hpp"

#include "portal/solver.hpp"

#include <json.hpp>

#include <cstdio>

namespace portal::io {

using nlohmann::json;

namespace {

template <class T>
json ids(const FlatSet<T>& s) {
  return json(std::vector<T>(s.begin(), s.end()));
}

template <class T>
FlatSet<T> id_set(const json& j) {
  auto v = j.get<std::vector<T>>();
  return FlatSet<T>(v.begin(), v.end());
}

json element_json(const Element& element) {
  json j = std::visit(
      [](const auto& el) -> json {
        using T = std::decay_t<decltype(el)>;
        if constexpr (std::is_same_v<T, Door>) return {{"initially_open", el.initially_open}};
        else if constexpr (std::is_same_v<T, TimedButton>)
          return {{"room", el.room}, {"duration_ticks", el.duration_ticks}, {"opens", ids(el.opens)}};
        else if constexpr (std::is_same_v<T, WeightedButton>)
          return {{"room", el.room},
                  {"while_pressed_opens", ids(el.while_pressed_opens)},
                  {"while_pressed_closes", ids(el.while_pressed_closes)}};
        else if constexpr (std::is_same_v<T, Cube>) return {{"initial_room", el.initial_room}};
        else if constexpr (std::is_same_v<T, Turret>)
          return {{"blocks", ids(el.blocks)}, {"disable_room", el.disable_room}};
        else if constexpr (std::is_same_v<T, PortalSurface>)
          return {{"room", el.room}, {"visible_from", ids(el.visible_from)}};
        else if constexpr (std::is_same_v<T, HepPair>)
          return {{"catcher_fire_tick", el.catcher_fire_tick},
                  {"on_fire_opens", ids(el.on_fire_opens)},
                  {"on_fire_closes", ids(el.on_fire_closes)}};
        else
          return {{"room", el.room},
                  {"initial_state", el.initial_state},
                  {"open_in_state", json::array({ids(el.open_in_state[0]), ids(el.open_in_state[1])})}};
      },
      element);
  j["kind"] = std::string(element_kind_name(element));
  return j;
}

Element parse_element(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "door") return Door{j.at("initially_open").get<bool>()};
  if (kind == "timed_button")
    return TimedButton{j.at("room").get<RoomId>(), j.at("duration_ticks").get<Tick>(), id_set<ElementId>(j.at("opens"))};
  if (kind == "weighted_button")
    return WeightedButton{j.at("room").get<RoomId>(), id_set<ElementId>(j.at("while_pressed_opens")),
                          id_set<ElementId>(j.at("while_pressed_closes"))};
  if (kind == "cube") return Cube{j.at("initial_room").get<RoomId>()};
  if (kind == "turret") return Turret{id_set<PassageIndex>(j.at("blocks")), j.at("disable_room").get<RoomId>()};
  if (kind == "portal_surface") return PortalSurface{j.at("room").get<RoomId>(), id_set<RoomId>(j.at("visible_from"))};
  if (kind == "hep_pair")
    return HepPair{j.at("catcher_fire_tick").get<Tick>(), id_set<ElementId>(j.at("on_fire_opens")),
                   id_set<ElementId>(j.at("on_fire_closes"))};
  if (kind == "switch") {
    const json& sets = j.at("open_in_state");
    if (!sets.is_array() || sets.size() != 2) throw ParseError("switch open_in_state needs two sets");
    const auto state = j.at("initial_state").get<int>();
    if (state != 0 && state != 1) throw ParseError("switch initial_state must be 0 or 1");
    return Switch{j.at("room").get<RoomId>(), static_cast<std::uint8_t>(state),
                  {id_set<ElementId>(sets[0]), id_set<ElementId>(sets[1])}};
  }
  throw ParseError("unknown element kind '" + kind + "'");
}

json level_json(const Level& level) {
  json passages = json::array();
  for (const Passage& p : level.passages)
    passages.push_back({{"from", p.from},
                        {"to", p.to},
                        {"traverse_ticks", p.traverse_ticks},
                        {"one_way", p.one_way},
                        {"guarded_by", p.guarded_by ? json(*p.guarded_by) : json(nullptr)},
                        {"turret_fields", ids(p.turret_fields)},
                        {"grill", p.grill}});
  json elements = json::array();
  for (const Element& e : level.elements) elements.push_back(element_json(e));
  std::vector<std::string> mechanics;
  for (Mechanic m : level.allowed_mechanics) mechanics.emplace_back(mechanic_name(m));
  return {{"rooms", level.rooms},     {"passages", passages}, {"elements", elements},
          {"start", level.start},     {"goal", level.goal},   {"allowed_mechanics", mechanics}};
}

Level parse_level(const json& j) {
  Level level;
  level.rooms = j.at("rooms").get<std::vector<std::string>>();
  for (const json& p : j.at("passages")) {
    Passage passage;
    passage.from = p.at("from").get<RoomId>();
    passage.to = p.at("to").get<RoomId>();
    passage.traverse_ticks = p.at("traverse_ticks").get<Tick>();
    passage.one_way = p.at("one_way").get<bool>();
    if (!p.at("guarded_by").is_null()) passage.guarded_by = p.at("guarded_by").get<ElementId>();
    passage.turret_fields = id_set<ElementId>(p.at("turret_fields"));
    passage.grill = p.at("grill").get<bool>();
    level.passages.push_back(std::move(passage));
  }
  for (const json& e : j.at("elements")) level.elements.push_back(parse_element(e));
  level.start = j.at("start").get<RoomId>();
  level.goal = j.at("goal").get<RoomId>();
  for (const auto& name : j.at("allowed_mechanics").get<std::vector<std::string>>()) {
    auto m = parse_mechanic(name);
    if (!m) throw ParseError("unknown mechanic '" + name + "'");
    level.allowed_mechanics.insert(*m);
  }
  return level;
}

json geometry_json(const Geometry& g) {
  json wells = json::array();
  for (const Well& w : g.wells)
    wells.push_back({{"index", w.index},
                     {"depth", to_string(w.depth)},
                     {"floor_x", to_string(w.floor_x)},
                     {"ceiling_x", to_string(w.ceiling_x)},
                     {"ceiling_y", to_string(w.ceiling_y)}});
  return {{"wells", wells},
          {"delta", to_string(g.delta)},
          {"step_drop", to_string(g.step_drop)},
          {"h", to_string(g.h)},
          {"d_target_sq", to_string(g.d_target_sq)},
          {"d_nominal", to_string(g.d_nominal)},
          {"half_width", to_string(g.half_width)},
          {"separation", to_string(g.separation)},
          {"depth_unit", to_string(g.depth_unit)}};
}

Rational rational_at(const json& j, const char* key) { return parse_rational(j.at(key).get<std::string>()); }

Geometry parse_geometry(const json& j) {
  Geometry g;
  for (const json& w : j.at("wells"))
    g.wells.push_back({w.at("index").get<std::size_t>(), rational_at(w, "depth"), rational_at(w, "floor_x"),
                       rational_at(w, "ceiling_x"), rational_at(w, "ceiling_y")});
  g.delta = rational_at(j, "delta");
  g.step_drop = rational_at(j, "step_drop");
  g.h = rational_at(j, "h");
  g.d_target_sq = rational_at(j, "d_target_sq");
  g.d_nominal = rational_at(j, "d_nominal");
  g.half_width = rational_at(j, "half_width");
  g.separation = rational_at(j, "separation");
  g.depth_unit = rational_at(j, "depth_unit");
  return g;
}

}  // namespace

std::string digest(std::string_view text) {
  // FNV-1a, 64 bit
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string emit_document(const LevelDocument& doc) {
  json j = {{"format_version", doc.format_version},
            {"level", level_json(doc.level)},
            {"provenance",
             {{"source", doc.provenance.source},
              {"digest", doc.provenance.digest},
              {"parameters", doc.provenance.parameters}}}};
  if (doc.geometry) j["geometry"] = geometry_json(*doc.geometry);
  return j.dump(2) + "\n";
}

LevelDocument parse_document(std::string_view text) {
  LevelDocument doc;
  try {
    const json j = json::parse(text);
    doc.format_version = j.at("format_version").get<int>();
    if (doc.format_version != kFormatVersion)
      throw ParseError("unsupported format_version " + std::to_string(doc.format_version));
    doc.level = parse_level(j.at("level"));
    const json& prov = j.at("provenance");
    doc.provenance.source = prov.at("source").get<std::string>();
    doc.provenance.digest = prov.at("digest").get<std::string>();
    doc.provenance.parameters = prov.at("parameters").get<std::map<std::string, std::string>>();
    if (j.contains("geometry")) doc.geometry = parse_geometry(j.at("geometry"));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed level document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed level document: ") + e.what());
  }
  if (doc.geometry.has_value() != (doc.provenance.source == "subset-sum"))
    throw ParseError("geometry must be present exactly for subset-sum levels");
  if (auto report = validate_level(doc.level); !report.empty()) throw InvalidLevel(std::move(report));
  return doc;
}

}  // namespace portal::io
