#pragma once

// Exhaustive reachability over the level's state graph.

#include "portal/game.hpp"
#include "portal/level.hpp"
#include "portal/rational.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace portal {

struct Solvable {
  std::vector<InputEvent> witness;
  std::uint64_t states_explored = 0;
  Tick witness_ticks = 0;
};

struct Unsolvable {
  std::uint64_t states_explored = 0;
};

struct BoundExceeded {
  std::uint64_t bound = 0;
};

using Verdict = std::variant<Solvable, Unsolvable, BoundExceeded>;

std::string_view verdict_name(const Verdict& v);

struct SearchBounds {
  std::uint64_t max_states = 5'000'000;
  // States past this clock are not expanded; if any were cut the search
  // reports BoundExceeded instead of Unsolvable.
  Tick max_clock = std::numeric_limits<Tick>::max();
};

class InvalidLevel : public std::runtime_error {
 public:
  explicit InvalidLevel(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Identifies states that have the same future: drops the absolute clock unless
// some HEP catcher is still pending, and drops doors_open (derived).
std::vector<std::uint32_t> canonical_key(const GameState& state);

// Breadth-first search. The witness is shortest in input count and, among
// those, earliest in clock; ties go to the first one enumerated. A state is
// skipped when one reached no later has the same key apart from timers that
// are all at least as large.
Verdict solve(const Level& level, const SearchBounds& bounds = {});

// |rooms| * 2^doors * prod(duration+1) * 2^switches * 2^turrets
//   * (rooms+1)^cubes * (surface pairs + 1) * 2^hep
BigInt state_bound(const Level& level);

}  // namespace portal
