#pragma once

// Plain-text instance formats, the versioned level document, and renderers.

#include "portal/compilers.hpp"
#include "portal/instances.hpp"
#include "portal/kinematics.hpp"
#include "portal/level.hpp"
#include "portal/ncl.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace portal::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One value per line, plus "target N" (or "t N"). '#' starts a comment.
SubsetSumInstance parse_subset_sum(std::string_view text);
// DIMACS: "p cnf V C" header, clauses terminated by 0, 'c' comment lines.
CnfFormula parse_dimacs(std::string_view text);
// "x y" per line; optional "start x y" (default: first vertex listed).
GridGraph parse_grid(std::string_view text);

struct NclInstance {
  ncl::ConstraintGraph graph;
  ncl::EdgeIndex target = 0;
};
// "u v w": edge of weight w initially pointing u -> v; "v c": constraint c on
// vertex v; "target u v": the edge to reverse.
NclInstance parse_ncl(std::string_view text);

std::string format_subset_sum(const SubsetSumInstance& inst);
std::string format_dimacs(const CnfFormula& f);
std::string format_grid(const GridGraph& g);
std::string format_ncl(const NclInstance& inst);

inline constexpr int kFormatVersion = 1;

struct Provenance {
  std::string source;  // subset-sum, 3sat, hamcycle-timed, hamcycle-hep, ncl, or manual
  std::string digest;  // of the normalized instance text
  std::map<std::string, std::string> parameters;
};

struct LevelDocument {
  int format_version = kFormatVersion;
  Level level;
  std::optional<Geometry> geometry;
  Provenance provenance;
};

std::string digest(std::string_view text);  // 16 hex digits

std::string emit_document(const LevelDocument& doc);
// Throws ParseError on malformed text, unknown versions or geometry
// present/absent contrary to the source; InvalidLevel if the level fails
// validation.
LevelDocument parse_document(std::string_view text);

std::string render_ascii(const LevelDocument& doc);
std::string render_svg(const LevelDocument& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace portal::io
