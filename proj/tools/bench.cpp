// Benchmark of the thread-parallel subset kernels against their serial
// reference implementations.  Results must match exactly; timings are
// wall-clock.  Thread count follows OpenMP (OMP_NUM_THREADS or
// CONFPOLY_THREADS).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "confpoly/configuration.hpp"
#include "confpoly/graph_poly.hpp"
#include "confpoly/verify.hpp"

using namespace confpoly;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

Configuration dense_config(std::mt19937_64& rng, int dim, int n) {
  for (;;) {
    RatMatrix b(dim, n);
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < n; ++c) {
        b.at(r, c) = static_cast<int>(rng() % 7) - 3;
      }
    }
    if (rank(b) == dim) return Configuration(std::move(b));
  }
}

Multigraph dense_graph(std::mt19937_64& rng, int vertices, int edges) {
  std::vector<Multigraph::Edge> es;
  for (int i = 0; i < edges; ++i) {
    int a = static_cast<int>(rng() % vertices);
    int b = static_cast<int>(rng() % vertices);
    es.push_back({a, b});
  }
  return Multigraph(vertices, std::move(es));
}

void bench_minor_sweep(std::mt19937_64& rng, int dim, int n) {
  Configuration w = dense_config(rng, dim, n);
  auto t0 = std::chrono::steady_clock::now();
  Polynomial serial = psi_plucker_serial(w);
  double t_serial = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  Polynomial parallel = psi_plucker(w);
  double t_parallel = ms_since(t0);
  std::cout << "minor sweep    dim=" << dim << " n=" << n << "  serial " << t_serial
            << " ms  parallel " << t_parallel << " ms  speedup "
            << (t_parallel > 0 ? t_serial / t_parallel : 0) << "  equal "
            << (serial == parallel ? "yes" : "NO") << "\n";
}

void bench_forests(std::mt19937_64& rng, int vertices, int edges) {
  Multigraph g = dense_graph(rng, vertices, edges);
  auto t0 = std::chrono::steady_clock::now();
  auto serial = spanning_forests_serial(g);
  double t_serial = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto parallel = spanning_forests(g);
  double t_parallel = ms_since(t0);
  std::cout << "forest filter  |V|=" << vertices << " |E|=" << edges << "  serial " << t_serial
            << " ms  parallel " << t_parallel << " ms  speedup "
            << (t_parallel > 0 ? t_serial / t_parallel : 0) << "  equal "
            << (serial == parallel ? "yes" : "NO") << "  forests " << serial.size() << "\n";
}

}  // namespace

int main() {
  if (const char* threads = std::getenv("CONFPOLY_THREADS")) {
#ifdef _OPENMP
    int t = std::atoi(threads);
    if (t >= 1) omp_set_num_threads(t);
#endif
  }
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  std::mt19937_64 rng(2024);
  bench_minor_sweep(rng, 5, 16);
  bench_minor_sweep(rng, 6, 18);
  bench_minor_sweep(rng, 7, 20);
  bench_forests(rng, 8, 18);
  bench_forests(rng, 10, 20);
  return 0;
}
