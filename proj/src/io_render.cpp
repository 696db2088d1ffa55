#include "portal/io.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace portal::io {

namespace {

std::string id_list(const FlatSet<ElementId>& s, const char* prefix) {
  std::string out;
  for (ElementId id : s) out += std::string(out.empty() ? "" : ",") + prefix + std::to_string(id);
  return out;
}

std::string describe(ElementId id, const Element& element) {
  std::ostringstream out;
  out << "#" << id << " " << element_kind_name(element);
  std::visit(
      [&](const auto& el) {
        using T = std::decay_t<decltype(el)>;
        if constexpr (std::is_same_v<T, Door>) {
          if (el.initially_open) out << " (open)";
        } else if constexpr (std::is_same_v<T, TimedButton>) {
          out << " " << el.duration_ticks << "t opens " << id_list(el.opens, "#");
        } else if constexpr (std::is_same_v<T, WeightedButton>) {
          out << " opens " << id_list(el.while_pressed_opens, "#");
          if (!el.while_pressed_closes.empty()) out << " closes " << id_list(el.while_pressed_closes, "#");
        } else if constexpr (std::is_same_v<T, HepPair>) {
          out << " fires at " << el.catcher_fire_tick;
          if (!el.on_fire_opens.empty()) out << " opens " << id_list(el.on_fire_opens, "#");
          if (!el.on_fire_closes.empty()) out << " closes " << id_list(el.on_fire_closes, "#");
        } else if constexpr (std::is_same_v<T, Switch>) {
          out << " state " << int(el.initial_state) << " [" << id_list(el.open_in_state[0], "#") << " | "
              << id_list(el.open_in_state[1], "#") << "]";
        } else if constexpr (std::is_same_v<T, PortalSurface>) {
          if (!el.visible_from.empty()) out << " seen from " << id_list(el.visible_from, "r");
        }
      },
      element);
  return out.str();
}

// Room an element is drawn in, if it has one.
std::optional<RoomId> home_room(const Element& element) {
  return std::visit(
      [](const auto& el) -> std::optional<RoomId> {
        using T = std::decay_t<decltype(el)>;
        if constexpr (std::is_same_v<T, Cube>) return el.initial_room;
        else if constexpr (std::is_same_v<T, Turret>) return el.disable_room;
        else if constexpr (requires { el.room; }) return el.room;
        else return std::nullopt;
      },
      element);
}

double approx(const Rational& r) { return static_cast<double>(r); }

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_ascii(const LevelDocument& doc) {
  const Level& level = doc.level;
  std::ostringstream out;
  out << "level from " << doc.provenance.source << ": " << level.rooms.size() << " rooms, " << level.passages.size()
      << " passages, " << level.elements.size() << " elements\n";
  std::vector<std::vector<ElementId>> in_room(level.rooms.size());
  std::vector<ElementId> floating;
  for (ElementId id = 0; id < level.elements.size(); ++id) {
    if (auto r = home_room(level.elements[id]); r && *r < level.rooms.size()) in_room[*r].push_back(id);
    else floating.push_back(id);
  }
  for (RoomId r = 0; r < level.rooms.size(); ++r) {
    out << "[r" << r << "] " << level.rooms[r];
    if (r == level.start) out << "  <start>";
    if (r == level.goal) out << "  <goal>";
    out << "\n";
    for (ElementId id : in_room[r]) out << "    " << describe(id, level.elements[id]) << "\n";
    for (PassageIndex p = 0; p < level.passages.size(); ++p) {
      const Passage& q = level.passages[p];
      if (q.from != r && (q.one_way || q.to != r)) continue;
      const RoomId other = q.from == r ? q.to : q.from;
      out << "    " << (q.one_way ? "==>" : "<->") << " r" << other << " " << level.rooms[other] << "  (p" << p << ", "
          << q.traverse_ticks << "t";
      if (q.guarded_by) out << ", door #" << *q.guarded_by;
      if (!q.turret_fields.empty()) out << ", turrets " << id_list(q.turret_fields, "#");
      if (q.grill) out << ", grill";
      out << ")\n";
    }
  }
  if (!floating.empty()) {
    out << "unplaced elements\n";
    for (ElementId id : floating) out << "    " << describe(id, level.elements[id]) << "\n";
  }
  if (doc.geometry) {
    const Geometry& g = *doc.geometry;
    out << "side view (each row is a tenth of the deepest well)\n";
    Rational deepest = 0;
    for (const Well& w : g.wells) deepest = std::max(deepest, w.depth);
    const int rows = 10;
    for (int row = 0; row <= rows; ++row) {
      out << "    ";
      for (const Well& w : g.wells) {
        const bool filled = deepest > 0 && w.depth * rows >= deepest * row;
        out << (row == 0 ? "_  _" : filled ? "|  |" : "    ") << "  ";
      }
      if (row == 0) out << "   platform at d^2 = " << to_string(g.d_target_sq) << " +/- " << to_string(g.half_width);
      out << "\n";
    }
    for (const Well& w : g.wells) out << "    well " << w.index << ": depth " << to_string(w.depth) << "\n";
  }
  return out.str();
}

std::string render_svg(const LevelDocument& doc) {
  const Level& level = doc.level;
  const std::size_t n = level.rooms.size();
  const double radius = std::max(150.0, 30.0 * static_cast<double>(n) / std::numbers::pi);
  const double cx = radius + 120, cy = radius + 80;
  const double width = 2 * cx;
  double height = 2 * cy;
  std::vector<std::pair<double, double>> pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n, 1));
    pos[i] = {cx + radius * std::cos(a), cy + radius * std::sin(a)};
  }
  const double side_top = height;
  if (doc.geometry) height += 320;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\">\n"
      << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
         "orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (PassageIndex p = 0; p < level.passages.size(); ++p) {
    const Passage& q = level.passages[p];
    const auto [x1, y1] = pos[q.from];
    const auto [x2, y2] = pos[q.to];
    const char* colour = q.grill ? "#1f77b4" : !q.turret_fields.empty() ? "#d62728" : q.guarded_by ? "#ff7f0e" : "#555";
    out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\"" << colour
        << "\"" << (q.one_way ? " marker-end=\"url(#arrow)\"" : "") << "><title>p" << p << " " << q.traverse_ticks
        << "t</title></line>\n";
  }
  std::vector<int> count(n, 0);
  for (const Element& e : level.elements)
    if (auto r = home_room(e); r && *r < n) ++count[*r];
  for (RoomId r = 0; r < n; ++r) {
    const auto [x, y] = pos[r];
    const char* fill = r == level.start ? "#9f9" : r == level.goal ? "#f99" : "#eee";
    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"10\" fill=\"" << fill << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << x + 12 << "\" y=\"" << y - 4 << "\" font-size=\"10\">" << xml_escape(level.rooms[r])
        << (count[r] ? " (" + std::to_string(count[r]) + ")" : "") << "</text>\n";
  }
  if (doc.geometry && !doc.geometry->wells.empty()) {
    // Side view, to scale: wells hang below the top floor, the platform sits
    // at the landing distance from the launch portal.
    const Geometry& g = *doc.geometry;
    double deepest = 0, right = 0;
    for (const Well& w : g.wells) {
      deepest = std::max(deepest, approx(w.depth));
      right = std::max(right, approx(w.floor_x + g.separation));
    }
    const double d_target = std::sqrt(approx(g.d_target_sq));
    const double launch_x = right;
    right += d_target + approx(g.half_width);
    const double scale = std::min((width - 40) / std::max(right, 1.0), 260 / std::max(deepest, 1.0));
    const double x0 = 20, y0 = side_top + 30;
    out << "<g id=\"side-view\">\n";
    for (const Well& w : g.wells) {
      const double x = x0 + scale * approx(w.floor_x);
      out << "<rect x=\"" << x << "\" y=\"" << y0 << "\" width=\"" << std::max(2.0, scale * approx(g.separation) / 2)
          << "\" height=\"" << scale * approx(w.depth) << "\" fill=\"none\" stroke=\"black\"><title>well " << w.index
          << " depth " << to_string(w.depth) << "</title></rect>\n";
      out << "<line x1=\"" << x << "\" y1=\"" << y0 - scale * approx(w.ceiling_y) / 10 << "\" x2=\""
          << x + scale * approx(g.separation) / 2 << "\" y2=\"" << y0 - scale * approx(w.ceiling_y) / 10
          << "\" stroke=\"#1f77b4\"/>\n";
    }
    const double px = x0 + scale * (launch_x + d_target);
    out << "<rect x=\"" << px - scale * approx(g.half_width) << "\" y=\"" << y0 + scale * approx(g.h)
        << "\" width=\"" << std::max(2.0, 2 * scale * approx(g.half_width))
        << "\" height=\"4\" fill=\"#2ca02c\"><title>platform</title></rect>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace portal::io
