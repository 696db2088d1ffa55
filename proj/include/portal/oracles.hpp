#pragma once

// Brute-force deciders for the source problems.

#include "portal/instances.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace portal {

class TooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SubsetWitness {
  std::vector<std::size_t> indices;  // ascending
};
using Assignment = std::vector<bool>;            // assignment[v-1]
struct VertexCycle {
  std::vector<std::size_t> vertices;  // starts at g.start, closing edge implied
};

struct OracleAnswer {
  bool yes = false;
  std::optional<std::variant<SubsetWitness, Assignment, VertexCycle>> witness;
};

inline constexpr int kSatVariableCap = 22;
inline constexpr std::size_t kHamcycleVertexCap = 20;

OracleAnswer subset_sum_oracle(const SubsetSumInstance& inst);
OracleAnswer sat_oracle(const CnfFormula& f);
OracleAnswer grid_hamcycle_oracle(const GridGraph& g);

// Second, independently coded deciders used as self-checks.
bool sat_by_clause_masks(const CnfFormula& f);
bool hamcycle_by_permutations(const GridGraph& g);

// Substitution checks for witnesses.
bool check_subset(const SubsetSumInstance& inst, const SubsetWitness& w);
bool check_assignment(const CnfFormula& f, const Assignment& a);
bool check_cycle(const GridGraph& g, const VertexCycle& c);

}  // namespace portal
