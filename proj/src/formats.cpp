#include "confpoly/formats.hpp"

#include <algorithm>
#include <sstream>

namespace confpoly {

namespace {

// Lines stripped of comments and split into tokens, with 1-based line numbers.
std::vector<std::pair<int, std::vector<std::string>>> tokenize(const std::string& text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::istringstream stream(text);
  std::string line;
  int number = 0;
  while (std::getline(stream, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) out.emplace_back(number, std::move(tokens));
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

int ParsedGraph::vertex_index(const std::string& name) const {
  auto it = std::find(vertex_names.begin(), vertex_names.end(), name);
  if (it == vertex_names.end()) throw ParseError("unknown vertex name: " + name);
  return static_cast<int>(it - vertex_names.begin());
}

ParsedGraph parse_graph(const std::string& text) {
  std::vector<std::string> vertex_names, edge_names;
  std::vector<std::pair<std::string, std::string>> edge_ends;
  for (const auto& [line, tokens] : tokenize(text)) {
    if (tokens[0] == "v") {
      if (tokens.size() != 2) fail(line, "expected: v <name>");
      if (std::find(vertex_names.begin(), vertex_names.end(), tokens[1]) != vertex_names.end()) {
        fail(line, "duplicate vertex name: " + tokens[1]);
      }
      vertex_names.push_back(tokens[1]);
    } else if (tokens[0] == "e") {
      if (tokens.size() != 4) fail(line, "expected: e <name> <tail> <head>");
      if (std::find(edge_names.begin(), edge_names.end(), tokens[1]) != edge_names.end()) {
        fail(line, "duplicate edge name: " + tokens[1]);
      }
      edge_names.push_back(tokens[1]);
      edge_ends.emplace_back(tokens[2], tokens[3]);
    } else {
      fail(line, "unknown declaration: " + tokens[0]);
    }
  }
  if (vertex_names.empty()) throw ParseError("graph file declares no vertices");
  ParsedGraph pg;
  pg.vertex_names = std::move(vertex_names);
  pg.edge_names = std::move(edge_names);
  std::vector<Multigraph::Edge> edges;
  for (const auto& [tail, head] : edge_ends) {
    edges.push_back({pg.vertex_index(tail), pg.vertex_index(head)});
  }
  pg.graph = Multigraph(static_cast<int>(pg.vertex_names.size()), std::move(edges));
  return pg;
}

std::string emit_graph(const ParsedGraph& pg) {
  std::string out;
  for (const auto& name : pg.vertex_names) out += "v " + name + "\n";
  for (int i = 0; i < pg.graph.edge_count(); ++i) {
    const auto& e = pg.graph.edge(i);
    out += "e " + pg.edge_names[i] + " " + pg.vertex_names[e.tail] + " " +
           pg.vertex_names[e.head] + "\n";
  }
  return out;
}

Momentum parse_momentum(const std::string& text, const ParsedGraph& pg) {
  Momentum p(pg.graph.vertex_count());
  std::vector<char> seen(pg.graph.vertex_count(), 0);
  for (const auto& [line, tokens] : tokenize(text)) {
    if (tokens[0] != "p" || tokens.size() != 3) fail(line, "expected: p <vertex> <rational>");
    int v;
    try {
      v = pg.vertex_index(tokens[1]);
    } catch (const ParseError&) {
      fail(line, "unknown vertex name: " + tokens[1]);
    }
    if (seen[v]) fail(line, "duplicate momentum for vertex: " + tokens[1]);
    seen[v] = 1;
    auto r = Rational::parse(tokens[2]);
    if (!r) fail(line, "malformed rational: " + tokens[2]);
    p[v] = *r;
  }
  return p;
}

std::string emit_momentum(const ParsedGraph& pg, const Momentum& p) {
  if (static_cast<int>(p.size()) != pg.graph.vertex_count()) {
    throw MomentumError("momentum length must equal the vertex count");
  }
  std::string out;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (!p[v].is_zero()) out += "p " + pg.vertex_names[v] + " " + p[v].str() + "\n";
  }
  return out;
}

Configuration parse_configuration(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("configuration file is empty");
  const auto& [first_line, header] = lines.front();
  if (header.size() != 2 || header[0] != "n") fail(first_line, "expected header: n <coords>");
  int n = 0;
  try {
    n = std::stoi(header[1]);
  } catch (...) {
    fail(first_line, "malformed coordinate count: " + header[1]);
  }
  if (n < 1 || n > 64) fail(first_line, "coordinate count must lie in 1..64");
  RatMatrix basis(static_cast<int>(lines.size()) - 1, n);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& [line, tokens] = lines[r];
    if (static_cast<int>(tokens.size()) != n) {
      fail(line, "basis row needs exactly " + std::to_string(n) + " entries");
    }
    for (int c = 0; c < n; ++c) {
      auto v = Rational::parse(tokens[c]);
      if (!v) fail(line, "malformed rational: " + tokens[c]);
      basis.at(static_cast<int>(r) - 1, c) = *v;
    }
  }
  return Configuration(std::move(basis));
}

std::string emit_configuration(const Configuration& w) {
  std::string out = "n " + std::to_string(w.n()) + "\n";
  for (int r = 0; r < w.dim(); ++r) {
    for (int c = 0; c < w.n(); ++c) {
      if (c) out += " ";
      out += w.basis().at(r, c).str();
    }
    out += "\n";
  }
  return out;
}

std::vector<Rational> parse_point(const std::string& csv) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream stream(csv);
  while (std::getline(stream, item, ',')) {
    // trim surrounding whitespace
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry in point list");
    auto r = Rational::parse(item.substr(b, e - b + 1));
    if (!r) throw ParseError("malformed rational in point list: " + item);
    out.push_back(*r);
  }
  if (out.empty()) throw ParseError("empty point list");
  return out;
}

bool looks_like_configuration(const std::string& text) {
  auto lines = tokenize(text);
  return !lines.empty() && lines.front().second.front() == "n";
}

}  // namespace confpoly
