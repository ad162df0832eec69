#pragma once

#include "idem/matrix.hpp"

#include <cstddef>
#include <vector>

namespace idem {

struct Edge {
  std::size_t src;
  std::size_t dst;
  double weight;
};

/// Directed multigraph on nodes 0..n−1. Parallel edges and self-loops are
/// allowed.
class WeightedDigraph {
 public:
  /// Throws InvariantViolation for n = 0 or an endpoint ≥ n.
  WeightedDigraph(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  WeightedDigraph with_edge(Edge e) const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

struct PathWitness {
  std::vector<std::size_t> nodes;
  Element value;
};

/// Graph problems handled by one closure call each.
enum class PathProblem { Shortest, Widest, Reliable, Reach };

Semiring semiring_for(PathProblem p);

/// n×n matrix, parallel edges ⊕-combined, 𝟘 where there is no edge.
/// Boolean maps every edge to true. WeightOutOfCarrier for a weight the
/// signature cannot hold (max-times needs [0, 1]).
DenseMatrix to_matrix(const WeightedDigraph& g, const Semiring& s);

/// min-plus closure; errors on negative cycles.
DenseMatrix shortest_paths(const WeightedDigraph& g);
/// max-min closure (bottleneck capacity).
DenseMatrix widest_paths(const WeightedDigraph& g);
/// max-times closure; weights are probabilities.
DenseMatrix most_reliable_paths(const WeightedDigraph& g);
/// boolean closure.
DenseMatrix reachability(const WeightedDigraph& g);

DenseMatrix solve_paths(const WeightedDigraph& g, PathProblem p);

/// Optimal src→dst path under `s`, rebuilt from the pivots recorded during
/// elimination (earliest pivot wins ties). NoPath when the entry is 𝟘.
/// `value` is the ⊙-product of the edge weights folded left to right.
PathWitness extract_path(const WeightedDigraph& g, const Semiring& s, std::size_t src, std::size_t dst);

/// ⊙-fold of the ⊕-combined edge weights along `nodes` (𝟙 for a single node).
Element path_value(const WeightedDigraph& g, const Semiring& s, const std::vector<std::size_t>& nodes);

}  // namespace idem
