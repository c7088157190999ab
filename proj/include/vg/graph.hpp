#ifndef VG_GRAPH_HPP
#define VG_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vg {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(size_t n) : adj_(n) {}

  size_t num_vertices() const { return adj_.size(); }
  size_t num_edges() const;
  void add_edge(size_t u, size_t v);
  bool has_edge(size_t u, size_t v) const;
  const std::vector<size_t>& neighbors(size_t v) const { return adj_[v]; }
  size_t degree(size_t v) const { return adj_[v].size(); }

  /// Sorted degree sequence.
  std::vector<size_t> degree_profile() const;

  /// BFS distances from src; unreachable = SIZE_MAX.
  std::vector<size_t> bfs_distances(size_t src) const;
  std::vector<std::vector<size_t>> all_distances() const;
  bool connected() const;

  /// Canonical edge list (sorted pairs, sorted lexicographically).
  std::vector<std::pair<size_t, size_t>> edges() const;

  std::string to_dot(const std::vector<std::string>* labels = nullptr) const;

 private:
  std::vector<std::vector<size_t>> adj_;
};

/// Exact isomorphism test via iterative-refinement coloring plus
/// backtracking. Returns a vertex bijection g1 -> g2 when one exists.
std::optional<std::vector<size_t>> graph_isomorphic(const Graph& g1,
                                                    const Graph& g2);

/// Order of the automorphism group (exact count by backtracking).
uint64_t graph_automorphism_order(const Graph& g);

/// All automorphisms as permutations. Intended for small graphs.
std::vector<std::vector<size_t>> graph_automorphisms(const Graph& g);

/// Result of a partial-cube recognition: one Theta class per hypercube
/// coordinate, with every vertex given binary coordinates realizing all
/// graph distances as Hamming distances.
struct PartialCubeEmbedding {
  size_t num_classes = 0;
  std::vector<size_t> edge_class;              // parallel class per edge
  std::vector<std::vector<uint8_t>> coords;    // vertex -> 0/1 coordinates
};

/// Djokovic-Winkler relation on an attempted isometric embedding. Returns
/// the embedding when the graph is a partial cube, nullopt otherwise.
std::optional<PartialCubeEmbedding> partial_cube_check(const Graph& g);

/// Battery of necessary conditions for a graph to be the tope graph of an
/// oriented matroid with n elements and the given rank. Verdict "pass"
/// means no necessary condition failed; it is not a recognition procedure.
struct TopeGraphCheck {
  bool pass = false;
  std::vector<std::string> failures;   // each failed condition, by name
  size_t theta_classes = 0;
};

TopeGraphCheck tope_graph_necessary_check(const Graph& g, size_t n,
                                          size_t rank);

}  // namespace vg

#endif
