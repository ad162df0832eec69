#include "idem/graphs.hpp"

#include "idem/error.hpp"
#include "idem/solvers.hpp"

#include <cmath>

namespace idem {

WeightedDigraph::WeightedDigraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) fail(ErrorKind::InvariantViolation, "graph needs at least one node");
  for (const Edge& e : edges_)
    if (e.src >= n_ || e.dst >= n_)
      fail(ErrorKind::InvariantViolation,
           "edge " + std::to_string(e.src) + "->" + std::to_string(e.dst) + " leaves the node range");
}

WeightedDigraph WeightedDigraph::with_edge(Edge e) const {
  std::vector<Edge> edges = edges_;
  edges.push_back(e);
  return WeightedDigraph(n_, std::move(edges));
}

Semiring semiring_for(PathProblem p) {
  switch (p) {
    case PathProblem::Shortest: return Semiring::min_plus();
    case PathProblem::Widest: return Semiring::max_min();
    case PathProblem::Reliable: return Semiring::max_times();
    case PathProblem::Reach: return Semiring::boolean();
  }
  return Semiring::min_plus();
}

namespace {

Scalar weight_scalar(SemiringKind kind, double w) {
  if (kind == SemiringKind::Boolean) return true;
  if (!std::isfinite(w)) fail(ErrorKind::WeightOutOfCarrier, "edge weights must be finite");
  if (kind == SemiringKind::MaxTimes && !(w >= 0.0 && w <= 1.0))
    fail(ErrorKind::WeightOutOfCarrier, "max-times edge weight " + render(Element(w)) + " is outside [0, 1]");
  return w;
}

Element weight_element(const Semiring& s, double w) {
  if (!s.idempotent()) fail(ErrorKind::NotIdempotent, "graph problems need an idempotent semiring, got " + s.name());
  if (s.kind() == SemiringKind::IntervalOver) {
    const Scalar x = weight_scalar(s.inner().kind(), w);
    return Interval{x, x};
  }
  return to_element(weight_scalar(s.kind(), w));
}

}  // namespace

DenseMatrix to_matrix(const WeightedDigraph& g, const Semiring& s) {
  const std::size_t n = g.size();
  std::vector<Element> data(n * n, s.zero());
  for (const Edge& e : g.edges()) {
    Element& slot = data[e.src * n + e.dst];
    slot = s.add(slot, weight_element(s, e.weight));
  }
  return DenseMatrix(s, n, n, std::move(data));
}

DenseMatrix solve_paths(const WeightedDigraph& g, PathProblem p) {
  return closure_gauss_jordan(to_matrix(g, semiring_for(p))).solution;
}

DenseMatrix shortest_paths(const WeightedDigraph& g) { return solve_paths(g, PathProblem::Shortest); }
DenseMatrix widest_paths(const WeightedDigraph& g) { return solve_paths(g, PathProblem::Widest); }
DenseMatrix most_reliable_paths(const WeightedDigraph& g) { return solve_paths(g, PathProblem::Reliable); }
DenseMatrix reachability(const WeightedDigraph& g) { return solve_paths(g, PathProblem::Reach); }

Element path_value(const WeightedDigraph& g, const Semiring& s, const std::vector<std::size_t>& nodes) {
  const DenseMatrix a = to_matrix(g, s);
  Element v = s.one();
  for (std::size_t t = nodes.size(); t-- > 1;) v = s.mul(a(nodes[t - 1], nodes[t]), v);
  return v;
}

PathWitness extract_path(const WeightedDigraph& g, const Semiring& s, std::size_t src, std::size_t dst) {
  const std::size_t n = g.size();
  if (src >= n || dst >= n) fail(ErrorKind::InvariantViolation, "witness endpoint outside the graph");
  const DenseMatrix a = to_matrix(g, s);

  // Single-destination relaxation X_i = ⊕_k a_ik ⊙ X_k ⊕ δ_{i,dst}, in
  // place, recording the successor whenever X_i strictly moves up.
  std::vector<Element> x(n, s.zero());
  x[dst] = s.one();
  std::vector<std::optional<std::size_t>> next(n);
  const std::size_t bound = 2 * n + 1;
  bool settled = false;
  for (std::size_t sweep = 0; sweep < bound && !settled; ++sweep) {
    settled = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        Element joined = s.add(x[i], s.mul(a(i, k), x[k]));
        if (joined != x[i]) {
          x[i] = std::move(joined);
          next[i] = k;
          settled = false;
        }
      }
    }
  }
  if (!settled) fail(ErrorKind::NonStabilizing, "path relaxation did not settle (improving cycle)");
  if (x[src] == s.zero())
    fail(ErrorKind::NoPath, "no path from " + std::to_string(src) + " to " + std::to_string(dst));

  std::vector<std::size_t> nodes{src};
  for (std::size_t u = src; u != dst;) {
    if (!next[u] || nodes.size() > n) fail(ErrorKind::NoPath, "successor chain broken");
    u = *next[u];
    nodes.push_back(u);
  }
  Element value = path_value(g, s, nodes);
  return {std::move(nodes), std::move(value)};
}

}  // namespace idem
