#include "portal/compilers.hpp"

#include <map>
#include <string>

namespace portal {

NclLevel compile_ncl_switches(const ncl::ConstraintGraph& g, ncl::EdgeIndex target, SwitchKind kind) {
  ncl::check_structure(g);
  if (target >= g.edges.size()) throw ncl::UnknownEdge("target edge is not in the graph");
  std::vector<ncl::Gate> gates;
  for (ncl::VertexId v = 0; v < g.vertex_count(); ++v) {
    auto gate = ncl::classify(g, v);
    if (!gate) throw NotAndOr("vertex " + std::to_string(v) + " is neither AND, OR nor free");
    gates.push_back(*gate);
  }

  LevelBuilder b;
  const RoomId hub = b.room("hub");
  b.set_start(hub);
  const std::size_t m = g.edges.size();

  // open_in_state[f][s]: doors that switch f holds open in state s. State 0
  // is the initial orientation.
  std::vector<std::array<FlatSet<ElementId>, 2>> open_in_state(m);
  std::vector<std::size_t> fanout(m, 0);
  // A fresh door, owned by edge f's switch, open while f points at v.
  auto points_at = [&](ncl::EdgeIndex f, ncl::VertexId v) {
    const ElementId d = b.door();
    const bool initially = g.edges[f].head() == v;
    open_in_state[f][initially ? 0 : 1].insert(d);
    ++fanout[f];
    return d;
  };

  std::vector<RoomId> gadget(m);
  for (ncl::EdgeIndex e = 0; e < m; ++e) {
    const std::string name = "edge" + std::to_string(e);
    gadget[e] = b.room(name);
    b.one_way(hub, gadget[e]);

    // Back to the hub only through the consistency checks of both ends.
    RoomId at = gadget[e];
    int stage = 0;
    for (ncl::VertexId v : {g.edges[e].lo, g.edges[e].hi}) {
      if (gates[v] == ncl::Gate::free_vertex) continue;
      const RoomId next = b.room(name + "_check" + std::to_string(++stage));
      const auto incident = g.incident(v);
      if (gates[v] == ncl::Gate::or_gate) {
        for (ncl::EdgeIndex f : incident) b.guard(b.one_way(at, next), points_at(f, v));
      } else {
        // The heavy edge alone in one hallway, the two light ones in series.
        std::vector<ncl::EdgeIndex> light;
        for (ncl::EdgeIndex f : incident) {
          if (g.edges[f].weight == 2) b.guard(b.one_way(at, next), points_at(f, v));
          else light.push_back(f);
        }
        const RoomId mid = b.room(name + "_check" + std::to_string(stage) + "_mid");
        b.guard(b.one_way(at, mid), points_at(light[0], v));
        b.guard(b.one_way(mid, next), points_at(light[1], v));
      }
      at = next;
    }
    const RoomId back = b.room(name + "_return");
    b.one_way(at, back);
    b.one_way(back, hub);
  }

  const ElementId exit_door = b.door();
  open_in_state[target][1].insert(exit_door);
  const RoomId goal = b.room("goal");
  b.guard(b.one_way(hub, goal), exit_door);
  b.set_goal(goal);

  NclLevel out;
  for (ncl::EdgeIndex e = 0; e < m; ++e) {
    EmbeddedSwitch sw = embed_switch(b, kind, gadget[e], open_in_state[e], 0, "edge" + std::to_string(e) + "_");
    if (kind == SwitchKind::abstract) out.edge_switch.push_back(*sw.switch_element);
    out.max_fanout = std::max(out.max_fanout, fanout[e]);
  }
  out.level = std::move(b).build();
  return out;
}

}  // namespace portal
