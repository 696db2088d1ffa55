#pragma once

// Source-problem instances consumed by the compilers and oracles.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace portal {

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SubsetSumInstance {
  std::vector<std::int64_t> values;  // a_i >= 1
  std::int64_t target = 0;

  std::size_t n() const { return values.size(); }
  std::int64_t total() const;
  void validate() const;
};

// Literals are nonzero, DIMACS style: +v is x_v, -v is its negation (1-based).
struct CnfFormula {
  int variables = 0;
  std::vector<std::vector<int>> clauses;

  std::size_t occurrences() const;
  // Throws InvalidInstance on empty clauses, clauses wider than 3 or
  // out-of-range literals.
  void validate() const;
  bool satisfied_by(const std::vector<bool>& assignment) const;  // assignment[v-1]
};

using Point = std::pair<int, int>;

struct GridGraph {
  std::vector<Point> vertices;  // distinct lattice points, order defines vertex ids
  std::size_t start = 0;        // index into vertices

  std::size_t n() const { return vertices.size(); }
  bool adjacent(std::size_t a, std::size_t b) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // a < b
  bool connected() const;
  void validate() const;
};

}  // namespace portal
