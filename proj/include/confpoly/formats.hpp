#ifndef CONFPOLY_FORMATS_HPP
#define CONFPOLY_FORMATS_HPP

#include <string>
#include <vector>

#include "confpoly/configuration.hpp"
#include "confpoly/graph_poly.hpp"
#include "confpoly/multigraph.hpp"

namespace confpoly {

/// Graph text format, one declaration per line, '#' starts a comment:
///   v <name>
///   e <name> <tail-vertex> <head-vertex>
/// Declaration order fixes vertex and edge indices, and thereby variables.
struct ParsedGraph {
  Multigraph graph{1, {}};
  std::vector<std::string> vertex_names;
  std::vector<std::string> edge_names;

  int vertex_index(const std::string& name) const;
};

ParsedGraph parse_graph(const std::string& text);
std::string emit_graph(const ParsedGraph& pg);

/// Momentum format against a parsed graph:
///   p <vertex-name> <rational>
/// Unmentioned vertices carry zero momentum.
Momentum parse_momentum(const std::string& text, const ParsedGraph& pg);
std::string emit_momentum(const ParsedGraph& pg, const Momentum& p);

/// Configuration format: "n <coords>" then one basis row of <coords>
/// rationals per line.
Configuration parse_configuration(const std::string& text);
std::string emit_configuration(const Configuration& w);

/// Comma-separated rationals, e.g. "1,0,-2/3".
std::vector<Rational> parse_point(const std::string& csv);

/// Cheap dispatch between the two input formats: true when the first
/// meaningful line opens with "n".
bool looks_like_configuration(const std::string& text);

}  // namespace confpoly

#endif
