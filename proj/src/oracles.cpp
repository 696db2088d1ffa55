#include "portal/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

namespace portal {

OracleAnswer subset_sum_oracle(const SubsetSumInstance& inst) {
  inst.validate();
  const std::size_t n = inst.n();
  const auto t = static_cast<std::size_t>(inst.target);
  // reach[i][s]: some subset of the first i values sums to s.
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(t + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<std::size_t>(inst.values[i]);
    for (std::size_t s = 0; s <= t; ++s)
      reach[i + 1][s] = reach[i][s] || (s >= a && reach[i][s - a]);
  }
  OracleAnswer out;
  if (!reach[n][t]) return out;
  out.yes = true;
  SubsetWitness w;
  std::size_t s = t;
  for (std::size_t i = n; i-- > 0;) {
    if (reach[i][s]) continue;
    w.indices.push_back(i);
    s -= static_cast<std::size_t>(inst.values[i]);
  }
  std::reverse(w.indices.begin(), w.indices.end());
  out.witness = w;
  return out;
}

OracleAnswer sat_oracle(const CnfFormula& f) {
  f.validate();
  if (f.variables > kSatVariableCap)
    throw TooLarge(std::to_string(f.variables) + " variables exceeds the cap of " + std::to_string(kSatVariableCap));
  // Lexicographic with false < true and x1 most significant.
  const int n = f.variables;
  Assignment a(static_cast<std::size_t>(n), false);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    for (int v = 0; v < n; ++v) a[v] = (code >> (n - 1 - v)) & 1;
    if (f.satisfied_by(a)) return {true, a};
  }
  return {};
}

bool sat_by_clause_masks(const CnfFormula& f) {
  f.validate();
  if (f.variables > kSatVariableCap) throw TooLarge("too many variables");
  // Each clause becomes (positive mask, negative mask); an assignment bitset
  // satisfies it when it meets the first or misses part of the second.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
  for (const auto& c : f.clauses) {
    std::uint32_t pos = 0, neg = 0;
    for (int lit : c) (lit > 0 ? pos : neg) |= 1u << (std::abs(lit) - 1);
    masks.emplace_back(pos, neg);
  }
  for (std::uint32_t bits = 0; bits < (1u << f.variables); ++bits) {
    bool all = true;
    for (auto [pos, neg] : masks)
      if (!(bits & pos) && (bits & neg) == neg) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

namespace {

void check_grid_size(const GridGraph& g) {
  g.validate();
  if (g.n() > kHamcycleVertexCap)
    throw TooLarge(std::to_string(g.n()) + " vertices exceeds the cap of " + std::to_string(kHamcycleVertexCap));
}

}  // namespace

OracleAnswer grid_hamcycle_oracle(const GridGraph& g) {
  check_grid_size(g);
  const std::size_t n = g.n();
  if (n < 3) return {};
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : g.edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::size_t> path{g.start};
  std::vector<bool> used(n, false);
  used[g.start] = true;
  auto extend = [&](auto&& self) -> bool {
    const std::size_t last = path.back();
    if (path.size() == n) return g.adjacent(last, g.start);
    for (std::size_t next : adj[last]) {
      if (used[next]) continue;
      used[next] = true;
      path.push_back(next);
      if (self(self)) return true;
      path.pop_back();
      used[next] = false;
    }
    return false;
  };
  if (!extend(extend)) return {};
  return {true, VertexCycle{path}};
}

bool hamcycle_by_permutations(const GridGraph& g) {
  check_grid_size(g);
  const std::size_t n = g.n();
  if (n < 3) return false;
  if (n > 10) throw TooLarge("permutation check is limited to 10 vertices");
  // Fix vertex 0 first and permute the rest.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = g.adjacent(order[i], order[(i + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

bool check_subset(const SubsetSumInstance& inst, const SubsetWitness& w) {
  std::vector<bool> used(inst.n(), false);
  std::int64_t sum = 0;
  for (std::size_t i : w.indices) {
    if (i >= inst.n() || used[i]) return false;
    used[i] = true;
    sum += inst.values[i];
  }
  return sum == inst.target;
}

bool check_assignment(const CnfFormula& f, const Assignment& a) {
  return a.size() == static_cast<std::size_t>(f.variables) && f.satisfied_by(a);
}

bool check_cycle(const GridGraph& g, const VertexCycle& cycle) {
  const auto& c = cycle.vertices;
  const std::size_t n = g.n();
  if (n < 3 || c.size() != n || c.front() != g.start) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t v : c) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!g.adjacent(c[i], c[(i + 1) % n])) return false;
  return true;
}

}  // namespace portal
