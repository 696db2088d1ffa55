#include "portal/instances.hpp"

#include <cstdlib>
#include <set>
#include <string>

namespace portal {

std::int64_t SubsetSumInstance::total() const {
  std::int64_t sum = 0;
  for (auto a : values) sum += a;
  return sum;
}

void SubsetSumInstance::validate() const {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] < 1)
      throw InvalidInstance("value " + std::to_string(i) + " is " + std::to_string(values[i]) +
                            ", values must be positive");
  if (target < 0) throw InvalidInstance("target must be nonnegative");
}

std::size_t CnfFormula::occurrences() const {
  std::size_t k = 0;
  for (const auto& c : clauses) k += c.size();
  return k;
}

void CnfFormula::validate() const {
  if (variables < 0) throw InvalidInstance("negative variable count");
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto& c = clauses[i];
    if (c.empty()) throw InvalidInstance("clause " + std::to_string(i) + " is empty");
    if (c.size() > 3) throw InvalidInstance("clause " + std::to_string(i) + " has more than 3 literals");
    for (int lit : c)
      if (lit == 0 || std::abs(lit) > variables)
        throw InvalidInstance("clause " + std::to_string(i) + " has literal " + std::to_string(lit) +
                              " outside 1.." + std::to_string(variables));
  }
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
  for (const auto& c : clauses) {
    bool any = false;
    for (int lit : c)
      if (assignment.at(std::abs(lit) - 1) == (lit > 0)) any = true;
    if (!any) return false;
  }
  return true;
}

bool GridGraph::adjacent(std::size_t a, std::size_t b) const {
  const auto [ax, ay] = vertices.at(a);
  const auto [bx, by] = vertices.at(b);
  return std::abs(ax - bx) + std::abs(ay - by) == 1;
}

std::vector<std::pair<std::size_t, std::size_t>> GridGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n(); ++a)
    for (std::size_t b = a + 1; b < n(); ++b)
      if (adjacent(a, b)) out.emplace_back(a, b);
  return out;
}

bool GridGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<bool> seen(n(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u = 0; u < n(); ++u)
      if (!seen[u] && adjacent(u, v)) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n();
}

void GridGraph::validate() const {
  if (vertices.empty()) throw InvalidInstance("grid graph has no vertices");
  std::set<Point> distinct(vertices.begin(), vertices.end());
  if (distinct.size() != vertices.size()) throw InvalidInstance("duplicate lattice point");
  if (start >= vertices.size()) throw InvalidInstance("start vertex is not in the graph");
}

}  // namespace portal
