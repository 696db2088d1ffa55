#include "portal/ncl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace portal::ncl {

std::optional<EdgeIndex> ConstraintGraph::find_edge(VertexId a, VertexId b) const {
  const VertexId lo = std::min(a, b), hi = std::max(a, b);
  for (EdgeIndex i = 0; i < edges.size(); ++i)
    if (edges[i].lo == lo && edges[i].hi == hi) return i;
  return std::nullopt;
}

std::vector<EdgeIndex> ConstraintGraph::incident(VertexId v) const {
  std::vector<EdgeIndex> out;
  for (EdgeIndex i = 0; i < edges.size(); ++i)
    if (edges[i].lo == v || edges[i].hi == v) out.push_back(i);
  return out;
}

int ConstraintGraph::inflow(VertexId v) const {
  int total = 0;
  for (const Edge& e : edges)
    if (e.head() == v) total += e.weight;
  return total;
}

std::uint64_t ConstraintGraph::orientation_bits() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].orientation < 0) bits |= std::uint64_t{1} << i;
  return bits;
}

ConstraintGraph ConstraintGraph::with_orientation_bits(std::uint64_t bits) const {
  ConstraintGraph g = *this;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    g.edges[i].orientation = (bits >> i) & 1 ? -1 : +1;
  return g;
}

void check_structure(const ConstraintGraph& g) {
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : g.edges) {
    if (e.lo >= e.hi) throw MalformedGraph("edge endpoints must be distinct and ordered lo < hi");
    if (e.hi >= g.vertex_count()) throw MalformedGraph("edge references an undeclared vertex");
    if (e.weight < 0) throw MalformedGraph("edge weights must be nonnegative");
    if (e.orientation != 1 && e.orientation != -1) throw MalformedGraph("orientation must be +1 or -1");
    if (!pairs.insert({e.lo, e.hi}).second) throw MalformedGraph("parallel edges are not allowed");
  }
}

bool is_valid(const ConstraintGraph& g) {
  std::vector<int> in(g.vertex_count(), 0);
  for (const Edge& e : g.edges) in[e.head()] += e.weight;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (in[v] < g.constraints[v]) return false;
  return true;
}

std::variant<ConstraintGraph, InvalidFlip> flip(const ConstraintGraph& g, EdgeIndex e) {
  if (e >= g.edges.size()) throw UnknownEdge("edge " + std::to_string(e) + " is not in the graph");
  ConstraintGraph out = g;
  out.edges[e].orientation = -out.edges[e].orientation;
  if (!is_valid(out)) return InvalidFlip{e};
  return out;
}

ConstraintGraph build_and_or_graph(const std::vector<Gate>& gates, const std::vector<EdgeDecl>& decls) {
  ConstraintGraph g;
  g.constraints.resize(gates.size(), 0);
  for (const EdgeDecl& d : decls) {
    if (d.from >= gates.size() || d.to >= gates.size())
      throw MalformedGraph("edge references an undeclared vertex");
    Edge e;
    e.lo = std::min(d.from, d.to);
    e.hi = std::max(d.from, d.to);
    e.weight = d.weight;
    e.orientation = d.from < d.to ? +1 : -1;
    g.edges.push_back(e);
  }
  check_structure(g);

  for (VertexId v = 0; v < gates.size(); ++v) {
    if (gates[v] == Gate::free_vertex) continue;
    g.constraints[v] = 2;
    std::vector<int> weights;
    for (EdgeIndex i : g.incident(v)) weights.push_back(g.edges[i].weight);
    if (weights.size() != 3)
      throw DegreeMismatch("vertex " + std::to_string(v) + " has degree " +
                           std::to_string(weights.size()) + ", gates need degree 3");
    std::sort(weights.begin(), weights.end());
    const std::vector<int> expected =
        gates[v] == Gate::and_gate ? std::vector<int>{1, 1, 2} : std::vector<int>{2, 2, 2};
    if (weights != expected)
      throw WeightMismatch("vertex " + std::to_string(v) + " has incident weights inconsistent with its gate");
  }
  if (!is_valid(g)) throw InvalidInitialOrientation("initial orientation violates a vertex constraint");
  return g;
}

std::optional<Gate> classify(const ConstraintGraph& g, VertexId v) {
  const int c = g.constraints.at(v);
  if (c <= 0) return Gate::free_vertex;
  if (c != 2) return std::nullopt;
  std::vector<int> weights;
  for (EdgeIndex i : g.incident(v)) weights.push_back(g.edges[i].weight);
  std::sort(weights.begin(), weights.end());
  if (weights == std::vector<int>{1, 1, 2}) return Gate::and_gate;
  if (weights == std::vector<int>{2, 2, 2}) return Gate::or_gate;
  return std::nullopt;
}

Decision decide(const ConstraintGraph& g, EdgeIndex target, std::uint64_t max_states) {
  if (target >= g.edges.size()) throw UnknownEdge("target edge is not in the graph");
  if (g.edges.size() > 63) throw MalformedGraph("orientation search supports at most 63 edges");

  const std::uint64_t start = g.orientation_bits();
  const std::uint64_t target_bit = std::uint64_t{1} << target;
  // parent orientation and flipped edge, keyed by orientation bits
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, EdgeIndex>> parent;
  parent.emplace(start, std::pair{start, EdgeIndex{0}});
  std::deque<std::uint64_t> queue{start};

  std::vector<int> in(g.vertex_count());
  while (!queue.empty()) {
    const std::uint64_t bits = queue.front();
    queue.pop_front();
    std::fill(in.begin(), in.end(), 0);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      const Edge& e = g.edges[i];
      in[(bits >> i) & 1 ? e.lo : e.hi] += e.weight;
    }
    for (EdgeIndex i = 0; i < g.edges.size(); ++i) {
      const Edge& e = g.edges[i];
      const VertexId head = (bits >> i) & 1 ? e.lo : e.hi;
      // Reversal moves the edge's weight from head to tail; only the old
      // head can become unsatisfied.
      if (in[head] - e.weight < g.constraints[head]) continue;
      const std::uint64_t succ = bits ^ (std::uint64_t{1} << i);
      if (parent.contains(succ)) continue;
      if (parent.size() >= max_states) return BoundExceeded{max_states};
      parent.emplace(succ, std::pair{bits, i});
      if ((succ ^ start) & target_bit) {
        Yes yes;
        for (std::uint64_t cur = succ; cur != start; cur = parent.at(cur).first)
          yes.flips.push_back(parent.at(cur).second);
        std::reverse(yes.flips.begin(), yes.flips.end());
        return yes;
      }
      queue.push_back(succ);
    }
  }
  return No{parent.size()};
}

}  // namespace portal::ncl
