#include <doctest.h>

#include "portal/compilers.hpp"
#include "portal/io.hpp"
#include "portal/solver.hpp"

using namespace portal;

TEST_CASE("instance parsers") {
  auto ss = io::parse_subset_sum("# values\n1\n2 3\ntarget 3\n");
  CHECK(ss.values == std::vector<std::int64_t>{1, 2, 3});
  CHECK(ss.target == 3);
  CHECK_THROWS_AS(io::parse_subset_sum("1\n"), io::ParseError);
  CHECK_THROWS_AS(io::parse_subset_sum("0\nt 1\n"), io::ParseError);

  auto f = io::parse_dimacs("c hi\np cnf 2 2\n1 -2 0\n2\n0\n");
  CHECK(f.variables == 2);
  CHECK(f.clauses == std::vector<std::vector<int>>{{1, -2}, {2}});
  CHECK_THROWS_AS(io::parse_dimacs("1 0\n"), io::ParseError);
  CHECK_THROWS_AS(io::parse_dimacs("p cnf 1 1\n2 0\n"), io::ParseError);
  CHECK(io::parse_dimacs(io::format_dimacs(f)).clauses == f.clauses);

  auto g = io::parse_grid("0 0\n1 0\nstart 1 0\n");
  CHECK(g.start == 1);
  CHECK_THROWS_AS(io::parse_grid("0 0\n0 0\n"), io::ParseError);

  auto n = io::parse_ncl("0 2\n1 0 1\n2 0 1\n0 3 2\ntarget 0 3\n");
  CHECK(n.graph.vertex_count() == 4);
  CHECK(n.graph.edges[n.target].head() == 3);
  CHECK(ncl::classify(n.graph, 0) == ncl::Gate::and_gate);
  auto again = io::parse_ncl(io::format_ncl(n));
  CHECK(again.graph == n.graph);
  CHECK(again.target == n.target);
  CHECK_THROWS_AS(io::parse_ncl("0 1 1\n"), io::ParseError);
  CHECK_THROWS_AS(io::parse_ncl("0 2\n0 1 1\ntarget 0 1\n"), io::ParseError);
}

TEST_CASE("document round trip") {
  KinematicsParams p;
  p.epsilon = 8;
  io::LevelDocument doc;
  auto out = compile_subset_sum({{1, 2, 3}, 3}, p);
  doc.level = out.level;
  doc.geometry = out.geometry;
  doc.provenance = {"subset-sum", io::digest("1\n2\n3\ntarget 3\n"), {{"epsilon", "8/1"}}};
  const std::string text = io::emit_document(doc);
  const auto parsed = io::parse_document(text);
  CHECK(parsed.level == doc.level);
  CHECK(io::emit_document(parsed) == text);
  REQUIRE(parsed.geometry);
  CHECK(parsed.geometry->wells[2].depth == 2592);

  io::LevelDocument ncl_doc;
  auto g = io::parse_ncl("0 2\n1 0 1\n2 0 1\n0 3 2\ntarget 1 0\n");
  ncl_doc.level = compile_ncl_switches(g.graph, g.target, SwitchKind::cubes).level;
  ncl_doc.provenance.source = "ncl";
  const std::string t2 = io::emit_document(ncl_doc);
  CHECK(io::emit_document(io::parse_document(t2)) == t2);

  CHECK_THROWS_AS(io::parse_document("{"), io::ParseError);
  std::string bumped = text;
  bumped.replace(bumped.find("\"format_version\": 1"), 19, "\"format_version\": 9");
  CHECK_THROWS_AS(io::parse_document(bumped), io::ParseError);
  ncl_doc.geometry = out.geometry;
  CHECK_THROWS_AS(io::parse_document(io::emit_document(ncl_doc)), io::ParseError);

  io::LevelDocument broken;
  broken.provenance.source = "manual";
  broken.level.rooms = {"a"};
  broken.level.start = 3;
  CHECK_THROWS_AS(io::parse_document(io::emit_document(broken)), InvalidLevel);
}

TEST_CASE("renderers") {
  KinematicsParams p;
  io::LevelDocument doc;
  auto out = compile_subset_sum({{1, 2}, 2}, p);
  doc.level = out.level;
  doc.geometry = out.geometry;
  doc.provenance.source = "subset-sum";
  const std::string ascii = io::render_ascii(doc);
  CHECK(ascii.find("<start>") != std::string::npos);
  CHECK(ascii.find("well 1: depth") != std::string::npos);
  const std::string svg = io::render_svg(doc);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("side-view") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}
