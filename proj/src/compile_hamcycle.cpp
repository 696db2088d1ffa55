#include "portal/compilers.hpp"

#include <string>

namespace portal {

namespace {

std::string vertex_name(const Point& p) {
  return "v" + std::to_string(p.first) + "_" + std::to_string(p.second);
}

// Rooms and hallways shared by both compilers. Returns the vertex rooms.
std::vector<RoomId> lay_out_grid(LevelBuilder& b, const GridGraph& g, Tick alpha) {
  std::vector<RoomId> rooms;
  for (const Point& p : g.vertices) rooms.push_back(b.room(vertex_name(p)));
  for (auto [u, v] : g.edges()) b.passage(rooms[u], rooms[v], alpha);
  return rooms;
}

// One-way corridor through every door in order; returns its far end.
RoomId lay_out_corridor(LevelBuilder& b, RoomId from, const std::vector<ElementId>& doors,
                        const std::string& prefix) {
  RoomId at = from;
  for (std::size_t k = 0; k < doors.size(); ++k) {
    const RoomId next = b.room(prefix + std::to_string(k + 1));
    b.guard(b.one_way(at, next), doors[k]);
    at = next;
  }
  return at;
}

void check_alpha(std::size_t n, Tick alpha, Tick delta) {
  if (delta < 1) throw TimingViolation("delta must be at least 1");
  if (alpha <= static_cast<Tick>(n) * delta)
    throw TimingViolation("hallway cost " + std::to_string(alpha) + " must exceed n*delta = " +
                          std::to_string(static_cast<Tick>(n) * delta));
}

}  // namespace

Tick timed_duration(std::size_t n, Tick alpha, Tick delta, Tick epsilon) {
  return (alpha + delta) * static_cast<Tick>(n) + epsilon;
}

Tick hep_deadline(std::size_t n, Tick alpha, Tick delta, Tick epsilon1, Tick epsilon2) {
  return (alpha + delta) * static_cast<Tick>(n) + epsilon1 + epsilon2;
}

Level compile_hamcycle_timed(const GridGraph& g, const TimedParams& timing) {
  g.validate();
  const std::size_t n = g.n();
  const Tick nn = static_cast<Tick>(n);
  const Tick delta = timing.delta;
  const Tick alpha = timing.alpha.value_or(nn * delta + 1);
  const Tick eps = timing.epsilon.value_or(nn);
  check_alpha(n, alpha, delta);
  if (eps < 1) throw TimingViolation("exit slack must be at least 1");
  // A Hamiltonian tour back to the start needs n*alpha + n ticks of timer;
  // any other covering walk needs at least (n+1)*alpha + n + 1.
  if (nn * delta + eps > alpha + nn)
    throw TimingViolation("timer " + std::to_string(timed_duration(n, alpha, delta, eps)) +
                          " admits a walk with an extra hallway; need n*delta + epsilon <= alpha + n");
  const Tick duration = timed_duration(n, alpha, delta, eps);

  LevelBuilder b;
  const RoomId ante = b.room("antechamber");
  const std::vector<RoomId> rooms = lay_out_grid(b, g, alpha);
  b.one_way(ante, rooms[g.start]);
  b.set_start(ante);

  std::vector<ElementId> doors(n);
  for (std::size_t v = 0; v < n; ++v) {
    doors[v] = b.door();
    // The start vertex's button sits before the one-way drop, so its timer
    // begins before the tour.
    b.add(TimedButton{v == g.start ? ante : rooms[v], duration, {doors[v]}});
  }
  std::vector<ElementId> order{doors[g.start]};
  for (std::size_t v = 0; v < n; ++v)
    if (v != g.start) order.push_back(doors[v]);
  // Fewer than three vertices never form a cycle.
  if (n < 3) order.push_back(b.door());
  b.set_goal(lay_out_corridor(b, rooms[g.start], order, "exit"));
  return std::move(b).build();
}

Level compile_hamcycle_hep(const GridGraph& g, const HepParams& timing) {
  g.validate();
  const std::size_t n = g.n();
  const Tick nn = static_cast<Tick>(n);
  const Tick delta = timing.delta;
  const Tick alpha = timing.alpha.value_or(nn * delta + 1);
  const Tick eps1 = timing.epsilon1.value_or(nn);
  const Tick eps2 = timing.epsilon2.value_or(1);
  check_alpha(n, alpha, delta);
  if (eps1 < 0 || eps2 < 0) throw TimingViolation("epsilon1 and epsilon2 must be nonnegative");
  const Tick slack = nn * delta + eps1 + eps2;
  // Tour plus corridor reaches the verifier at n*alpha + 2n; one extra
  // hallway must miss the deadline.
  if (slack <= 2 * nn)
    throw TimingViolation("deadline " + std::to_string(hep_deadline(n, alpha, delta, eps1, eps2)) +
                          " is too tight for a Hamiltonian tour; need n*delta + eps1 + eps2 > 2n");
  if (slack > alpha + 2 * nn)
    throw TimingViolation("deadline " + std::to_string(hep_deadline(n, alpha, delta, eps1, eps2)) +
                          " admits a walk with an extra hallway; need n*delta + eps1 + eps2 <= alpha + 2n");
  const Tick deadline = hep_deadline(n, alpha, delta, eps1, eps2);

  LevelBuilder b;
  const std::vector<RoomId> rooms = lay_out_grid(b, g, alpha);
  b.set_start(rooms[g.start]);

  // Visit obligations: a press in each room opens that room's door until the
  // deadline has certainly passed.
  std::vector<ElementId> order;
  std::vector<ElementId> doors(n);
  for (std::size_t v = 0; v < n; ++v) {
    doors[v] = b.door();
    b.add(TimedButton{rooms[v], deadline, {doors[v]}});
  }
  order.push_back(doors[g.start]);
  for (std::size_t v = 0; v < n; ++v)
    if (v != g.start) order.push_back(doors[v]);
  if (n < 3) order.push_back(b.door());
  const RoomId lobby = lay_out_corridor(b, rooms[g.start], order, "exit");

  const ElementId verifier = b.door(true);
  const RoomId goal = b.room("goal");
  b.guard(b.one_way(lobby, goal), verifier);
  b.add(HepPair{deadline, {}, {verifier}});
  b.set_goal(goal);
  return std::move(b).build();
}

}  // namespace portal
