#include "portal/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace portal::io {

namespace {

// Non-empty lines with comments stripped, split on whitespace.
std::vector<std::vector<std::string>> tokenize(std::string_view text, char comment) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find(comment); pos != std::string::npos) line.erase(pos);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (!tokens.empty()) out.push_back(std::move(tokens));
  }
  return out;
}

std::int64_t to_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ParseError(std::string("expected an integer ") + what + ", got '" + s + "'");
  return v;
}

}  // namespace

SubsetSumInstance parse_subset_sum(std::string_view text) {
  SubsetSumInstance inst;
  bool have_target = false;
  for (const auto& line : tokenize(text, '#')) {
    if (line[0] == "target" || line[0] == "t") {
      if (line.size() != 2) throw ParseError("target line needs exactly one number");
      if (have_target) throw ParseError("target given twice");
      inst.target = to_int(line[1], "for the target");
      have_target = true;
    } else {
      for (const auto& tok : line) inst.values.push_back(to_int(tok, "for a value"));
    }
  }
  if (!have_target) throw ParseError("missing 'target N' line");
  try {
    inst.validate();
  } catch (const InvalidInstance& e) {
    throw ParseError(e.what());
  }
  return inst;
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> clause;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string first;
    if (!(words >> first) || first == "c" || first[0] == '%') continue;
    if (first == "p") {
      std::string kind, v, c;
      if (!(words >> kind >> v >> c) || kind != "cnf") throw ParseError("malformed DIMACS header");
      if (header) throw ParseError("duplicate DIMACS header");
      f.variables = static_cast<int>(to_int(v, "in the header"));
      declared = static_cast<std::size_t>(to_int(c, "in the header"));
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before the 'p cnf' header");
    for (std::string tok = first;; ) {
      const int lit = static_cast<int>(to_int(tok, "as a literal"));
      if (lit == 0) {
        if (clause.empty()) throw ParseError("empty clause");
        f.clauses.push_back(std::move(clause));
        clause.clear();
      } else {
        clause.push_back(lit);
      }
      if (!(words >> tok)) break;
    }
  }
  if (!header) throw ParseError("missing 'p cnf' header");
  if (!clause.empty()) f.clauses.push_back(std::move(clause));
  if (f.clauses.size() != declared)
    throw ParseError("header declares " + std::to_string(declared) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  try {
    f.validate();
  } catch (const InvalidInstance& e) {
    throw ParseError(e.what());
  }
  return f;
}

GridGraph parse_grid(std::string_view text) {
  GridGraph g;
  std::optional<Point> start;
  for (const auto& line : tokenize(text, '#')) {
    if (line[0] == "start") {
      if (line.size() != 3) throw ParseError("start line needs 'start x y'");
      start = Point{static_cast<int>(to_int(line[1], "for x")), static_cast<int>(to_int(line[2], "for y"))};
      continue;
    }
    if (line.size() != 2) throw ParseError("grid lines are 'x y'");
    g.vertices.emplace_back(static_cast<int>(to_int(line[0], "for x")), static_cast<int>(to_int(line[1], "for y")));
  }
  if (start) {
    auto it = std::find(g.vertices.begin(), g.vertices.end(), *start);
    if (it == g.vertices.end()) throw ParseError("start vertex is not one of the listed points");
    g.start = static_cast<std::size_t>(it - g.vertices.begin());
  }
  try {
    g.validate();
  } catch (const InvalidInstance& e) {
    throw ParseError(e.what());
  }
  return g;
}

NclInstance parse_ncl(std::string_view text) {
  struct RawEdge {
    ncl::VertexId from, to;
    int weight;
  };
  std::vector<RawEdge> raw;
  std::vector<std::pair<ncl::VertexId, int>> constraints;
  std::optional<std::pair<ncl::VertexId, ncl::VertexId>> target;
  ncl::VertexId max_vertex = 0;
  bool any = false;
  auto vertex = [&](const std::string& s) {
    const auto v = to_int(s, "for a vertex");
    if (v < 0) throw ParseError("vertex ids are nonnegative");
    max_vertex = std::max(max_vertex, static_cast<ncl::VertexId>(v));
    any = true;
    return static_cast<ncl::VertexId>(v);
  };
  for (const auto& line : tokenize(text, '#')) {
    if (line[0] == "target") {
      if (line.size() != 3) throw ParseError("target line needs 'target u v'");
      target = std::pair{vertex(line[1]), vertex(line[2])};
    } else if (line.size() == 3) {
      raw.push_back({vertex(line[0]), vertex(line[1]), static_cast<int>(to_int(line[2], "for a weight"))});
    } else if (line.size() == 2) {
      constraints.emplace_back(vertex(line[0]), static_cast<int>(to_int(line[1], "for a constraint")));
    } else {
      throw ParseError("NCL lines are 'u v w', 'v c' or 'target u v'");
    }
  }
  if (!target) throw ParseError("missing 'target u v' line");
  NclInstance inst;
  inst.graph.constraints.assign(any ? max_vertex + 1 : 0, 0);
  for (auto [v, c] : constraints) inst.graph.constraints[v] = c;
  for (const RawEdge& e : raw) {
    if (e.from == e.to) throw ParseError("self-loop on vertex " + std::to_string(e.from));
    inst.graph.edges.push_back({std::min(e.from, e.to), std::max(e.from, e.to), e.weight, e.from < e.to ? 1 : -1});
  }
  try {
    ncl::check_structure(inst.graph);
  } catch (const ncl::NclError& e) {
    throw ParseError(e.what());
  }
  auto t = inst.graph.find_edge(target->first, target->second);
  if (!t) throw ParseError("target edge is not in the graph");
  inst.target = *t;
  if (!ncl::is_valid(inst.graph)) throw ParseError("initial orientation violates a vertex constraint");
  return inst;
}

std::string format_subset_sum(const SubsetSumInstance& inst) {
  std::string out;
  for (auto a : inst.values) out += std::to_string(a) + "\n";
  return out + "target " + std::to_string(inst.target) + "\n";
}

std::string format_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.variables) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& c : f.clauses) {
    for (int lit : c) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

std::string format_grid(const GridGraph& g) {
  std::string out;
  for (auto [x, y] : g.vertices) out += std::to_string(x) + " " + std::to_string(y) + "\n";
  if (!g.vertices.empty())
    out += "start " + std::to_string(g.vertices[g.start].first) + " " + std::to_string(g.vertices[g.start].second) + "\n";
  return out;
}

std::string format_ncl(const NclInstance& inst) {
  std::string out;
  for (ncl::VertexId v = 0; v < inst.graph.vertex_count(); ++v)
    out += std::to_string(v) + " " + std::to_string(inst.graph.constraints[v]) + "\n";
  for (const auto& e : inst.graph.edges)
    out += std::to_string(e.tail()) + " " + std::to_string(e.head()) + " " + std::to_string(e.weight) + "\n";
  const auto& t = inst.graph.edges.at(inst.target);
  return out + "target " + std::to_string(t.tail()) + " " + std::to_string(t.head()) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace portal::io
