#pragma once

// Reductions from source problems to levels. Each compiled level is solvable
// exactly when the source instance is a yes-instance.

#include "portal/instances.hpp"
#include "portal/kinematics.hpp"
#include "portal/level.hpp"
#include "portal/ncl.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace portal {

class TimingViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAndOr : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---- subset sum -----------------------------------------------------------

struct SubsetSumLevel {
  Level level;
  Geometry geometry;
};

SubsetSumLevel compile_subset_sum(const SubsetSumInstance& inst, const KinematicsParams& params);

// ---- 3-SAT ----------------------------------------------------------------

Level compile_3sat_turrets(const CnfFormula& f);

// ---- Hamiltonian cycle in grid graphs --------------------------------------

struct TimedParams {
  std::optional<Tick> alpha;     // hallway cost; default n*delta + 1
  Tick delta = 1;                // cost of a button press
  std::optional<Tick> epsilon;   // exit slack; default n
};

struct HepParams {
  std::optional<Tick> alpha;     // default n*delta + 1
  Tick delta = 1;
  std::optional<Tick> epsilon1;  // default n
  std::optional<Tick> epsilon2;  // default 1
};

// Timer duration (alpha + delta) * n + epsilon.
Tick timed_duration(std::size_t n, Tick alpha, Tick delta, Tick epsilon);
// Deadline (alpha + delta) * n + epsilon1 + epsilon2.
Tick hep_deadline(std::size_t n, Tick alpha, Tick delta, Tick epsilon1, Tick epsilon2);

// Both throw TimingViolation when the parameters leave no gap between a
// Hamiltonian tour and the next-cheapest covering walk.
Level compile_hamcycle_timed(const GridGraph& g, const TimedParams& timing = {});
Level compile_hamcycle_hep(const GridGraph& g, const HepParams& timing = {});

// ---- switches -------------------------------------------------------------

enum class SwitchKind { abstract, cubes, laser, gravity };

std::string_view switch_kind_name(SwitchKind k);
std::optional<SwitchKind> parse_switch_kind(std::string_view name);

// What an embedded switch looks like from outside: the avatar enters and
// leaves through `entrance` (from `lobby`) and toggles while inside.
struct EmbeddedSwitch {
  SwitchKind kind = SwitchKind::abstract;
  RoomId lobby = 0;
  std::optional<PassageIndex> entrance;  // none for the abstract kind
  std::vector<RoomId> inner_rooms;
  std::optional<ElementId> switch_element;
  std::optional<ElementId> cube;
  std::array<RoomId, 2> pads{};          // cubes kind only
  std::uint8_t initial_state = 0;
};

// Wires a switch whose state s holds open_in_state[s] open. The abstract
// kind places a Switch element directly in `lobby`.
EmbeddedSwitch embed_switch(LevelBuilder& b, SwitchKind kind, RoomId lobby,
                            const std::array<FlatSet<ElementId>, 2>& open_in_state,
                            std::uint8_t initial_state, const std::string& prefix);

struct SwitchGadget {
  Level level;
  EmbeddedSwitch ports;
  std::array<ElementId, 2> doors{};  // doors[s] is open in state s
};

SwitchGadget instantiate_switch_gadget(SwitchKind kind);

struct BisimulationReport {
  std::uint64_t sequences = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t lobby_states = 0;     // reachable concrete states with the avatar outside
  std::uint64_t bad_lobby_states = 0;  // of those, door sets matching neither state
  std::string first_mismatch;
  bool ok() const { return mismatches == 0 && bad_lobby_states == 0; }
};

// Compares the gadget against the abstract switch on every sequence of
// Enter/Leave/Toggle/Noop up to max_length.
BisimulationReport check_switch_bisimulation(SwitchKind kind, std::size_t max_length = 6);

// ---- NCL ------------------------------------------------------------------

struct NclLevel {
  Level level;
  std::vector<ElementId> edge_switch;  // abstract kind only, else empty
  std::size_t max_fanout = 0;          // check doors driven by one switch
};

NclLevel compile_ncl_switches(const ncl::ConstraintGraph& g, ncl::EdgeIndex target,
                              SwitchKind kind = SwitchKind::abstract);

}  // namespace portal
