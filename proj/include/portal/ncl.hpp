#pragma once

// Nondeterministic Constraint Logic: weighted constraint graphs whose edges
// are reoriented one at a time, keeping every vertex's inflow at or above its
// constraint.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace portal::ncl {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint32_t;

struct Edge {
  VertexId lo = 0;  // lo < hi
  VertexId hi = 0;
  int weight = 0;
  int orientation = +1;  // +1: lo -> hi, -1: hi -> lo

  VertexId head() const { return orientation > 0 ? hi : lo; }
  VertexId tail() const { return orientation > 0 ? lo : hi; }
  bool operator==(const Edge&) const = default;
};

struct ConstraintGraph {
  std::vector<int> constraints;  // indexed by vertex id
  std::vector<Edge> edges;

  std::size_t vertex_count() const { return constraints.size(); }
  std::optional<EdgeIndex> find_edge(VertexId a, VertexId b) const;
  std::vector<EdgeIndex> incident(VertexId v) const;
  int inflow(VertexId v) const;
  // Orientations packed one bit per edge (bit set: orientation -1).
  std::uint64_t orientation_bits() const;
  ConstraintGraph with_orientation_bits(std::uint64_t bits) const;

  bool operator==(const ConstraintGraph&) const = default;
};

class NclError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
struct UnknownEdge : NclError {
  using NclError::NclError;
};
struct DegreeMismatch : NclError {
  using NclError::NclError;
};
struct WeightMismatch : NclError {
  using NclError::NclError;
};
struct InvalidInitialOrientation : NclError {
  using NclError::NclError;
};
struct MalformedGraph : NclError {
  using NclError::NclError;
};

// Throws MalformedGraph on loops, parallel edges, negative weights or
// out-of-range endpoints.
void check_structure(const ConstraintGraph& g);

bool is_valid(const ConstraintGraph& g);

struct InvalidFlip {
  EdgeIndex edge;
};

// Never mutates g. Throws UnknownEdge if e is out of range.
std::variant<ConstraintGraph, InvalidFlip> flip(const ConstraintGraph& g, EdgeIndex e);

enum class Gate { free_vertex, and_gate, or_gate };

struct EdgeDecl {
  VertexId from;  // initial orientation points from -> to
  VertexId to;
  int weight;
};

// AND: c=2, incident weights {1,1,2}; OR: c=2, incident weights {2,2,2};
// free: c=0, any degree.
ConstraintGraph build_and_or_graph(const std::vector<Gate>& gates, const std::vector<EdgeDecl>& edges);

// Classifies a vertex by constraint and incident weights; nullopt when the
// vertex is neither AND, OR nor free.
std::optional<Gate> classify(const ConstraintGraph& g, VertexId v);

struct Yes {
  std::vector<EdgeIndex> flips;
};
struct No {
  std::uint64_t states_explored = 0;
};
struct BoundExceeded {
  std::uint64_t bound = 0;
};
using Decision = std::variant<Yes, No, BoundExceeded>;

// Breadth-first over orientations; Yes carries a shortest flip sequence that
// reverses the target edge.
Decision decide(const ConstraintGraph& g, EdgeIndex target, std::uint64_t max_states = 1u << 22);

}  // namespace portal::ncl
