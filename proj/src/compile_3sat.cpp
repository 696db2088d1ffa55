#include "portal/compilers.hpp"

#include <cstdlib>
#include <string>

namespace portal {

Level compile_3sat_turrets(const CnfFormula& f) {
  f.validate();
  LevelBuilder b;

  // Occurrences in clause order; each gets an unlock room and three turrets.
  struct Occurrence {
    std::size_t clause;
    int literal;
    RoomId unlock = 0;
    std::array<ElementId, 3> turrets{};
  };
  std::vector<Occurrence> occ;
  for (std::size_t k = 0; k < f.clauses.size(); ++k)
    for (int lit : f.clauses[k]) occ.push_back({k, lit});

  const auto vars = static_cast<std::size_t>(f.variables);
  std::vector<RoomId> var_room;
  for (std::size_t i = 0; i < vars; ++i) var_room.push_back(b.room("var" + std::to_string(i + 1)));
  std::vector<RoomId> clause_room;
  clause_room.push_back(b.room(f.clauses.empty() ? "goal" : "clause1"));
  for (std::size_t k = 1; k <= f.clauses.size(); ++k)
    clause_room.push_back(b.room(k == f.clauses.size() ? "goal" : "clause" + std::to_string(k + 1)));
  var_room.push_back(clause_room.front());

  for (std::size_t o = 0; o < occ.size(); ++o) {
    occ[o].unlock = b.room("unlock" + std::to_string(o) + "_" + (occ[o].literal > 0 ? "x" : "~x") +
                           std::to_string(std::abs(occ[o].literal)));
    for (auto& t : occ[o].turrets) t = b.add(Turret{{}, occ[o].unlock});
  }
  auto cover_all = [&](PassageIndex p, const Occurrence& o) {
    for (ElementId t : o.turrets) b.cover(p, t);
  };

  // Variable phase: each variable splits into a true and a false branch,
  // both entered and left by long falls.
  for (std::size_t i = 0; i < vars; ++i) {
    const int v = static_cast<int>(i + 1);
    for (int sign : {+1, -1}) {
      RoomId at = var_room[i];
      const Occurrence* held = nullptr;
      for (const Occurrence& o : occ) {
        if (o.literal != sign * v) continue;
        const PassageIndex p = b.one_way(at, o.unlock);
        if (held) cover_all(p, *held);
        at = o.unlock;
        held = &o;
      }
      const PassageIndex p = b.one_way(at, var_room[i + 1]);
      if (held) cover_all(p, *held);
    }
  }

  // Clause phase: three hallways in parallel, each guarded by one
  // literal's turrets; clauses in series.
  for (const Occurrence& o : occ) cover_all(b.one_way(clause_room[o.clause], clause_room[o.clause + 1]), o);

  b.set_start(var_room.front());
  b.set_goal(clause_room.back());
  return std::move(b).build();
}

}  // namespace portal
