#ifndef CONFPOLY_VERIFY_HPP
#define CONFPOLY_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "confpoly/configuration.hpp"
#include "confpoly/singular.hpp"

namespace confpoly {

// ---- named example instances -------------------------------------------

/// Two-dimensional configuration in three coordinates spanned by (1,1,0) and
/// (0,-1,2); small enough to follow every computation by hand.
Configuration sample_config_2x3();

/// Cycle space of the banana graph with four parallel edges, in the basis
/// e1+e2, e2+e3, e3+e4.
Configuration banana4_configuration();

/// Two vertices joined by `edges` parallel edges, all oriented the same way.
Multigraph banana_graph(int edges);

/// Path with `edges` edges, oriented along the path.
Multigraph path_graph(int edges);

Multigraph triangle_graph();

// ---- randomized instance generators ------------------------------------

struct GraphOptions {
  int max_edges = 10;
  bool need_cycle = false;    // at least one independent cycle
  bool need_nonloop = false;  // at least one non-loop edge
};

Multigraph random_multigraph(std::mt19937_64& rng, const GraphOptions& opt);

/// Conserved by construction (a boundary of a random chain), nonzero.
/// The graph must have a non-loop edge.
Momentum random_conserved_momentum(std::mt19937_64& rng, const Multigraph& g);

struct ConfigOptions {
  int min_dim = 1;
  int max_dim = 4;
  int max_coords = 10;
};

Configuration random_configuration(std::mt19937_64& rng, const ConfigOptions& opt);

// ---- individual checks (append human-readable failures) -----------------

void check_psi_routes(const Configuration& w, const std::string& tag,
                      std::vector<std::string>* failures);
void check_matrix_tree(const Multigraph& g, const std::string& tag,
                       std::vector<std::string>* failures);
void check_circuit_determinants(const Multigraph& g, const std::string& tag,
                                std::vector<std::string>* failures);
void check_second_poly(const Multigraph& g, const Momentum& p, EdgeSubset flip,
                       const std::string& tag, std::vector<std::string>* failures);
void check_qsf_momentum_forms(const Multigraph& g, const Momentum& p, const std::string& tag,
                              std::vector<std::string>* failures);
void check_restriction_classification(const Configuration& w, bool expect_unit_constants,
                                      const std::string& tag,
                                      std::vector<std::string>* failures);
void check_theorem_at(const Configuration& w, const Point& a, const std::string& tag,
                      std::vector<std::string>* failures);
void check_radical_chain(const Configuration& w, const Point& a, const std::string& tag,
                         std::vector<std::string>* failures);
void check_rank_criterion(const Configuration& w, const Point& a, const std::string& tag,
                          std::vector<std::string>* failures);
void check_cone_at(const Configuration& w, const Point& a, const std::string& tag,
                   std::vector<std::string>* failures);
void check_generic_pullback(const Configuration& w, std::mt19937_64& rng,
                            const std::string& tag, std::vector<std::string>* failures);

// ---- suites -------------------------------------------------------------

struct SuiteOptions {
  std::uint64_t seed = 7;
  int trials = 50;
  int max_edges = 10;
};

struct SuiteResult {
  std::string name;
  int instances = 0;
  long long checks = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

extern const std::vector<std::string> kSuiteNames;

/// Runs one of: matrixtree, secondpoly, restriction, theorem, cones, generic.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace confpoly

#endif
