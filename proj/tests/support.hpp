#pragma once

// Test-only generators and oracles. Nothing here calls into the solver or
// graph code it is used to check.

#include "idem/error.hpp"
#include "idem/graphs.hpp"
#include "idem/matrix.hpp"
#include "idem/semiring.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace idem::test {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}
inline bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Kind of the idem::Error thrown by `f`, or nothing if it returns normally.
inline std::optional<ErrorKind> error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

// Values are dyadic with few bits so that ⊕, ⊙ on the floating-point
// carriers are exact and the axiom checks can demand equality.
inline Element random_scalar(const Semiring& s, Rng& rng) {
  const double dy = uniform_int(rng, -80, 80) / 4.0;
  switch (s.kind()) {
    case SemiringKind::MaxPlus:
      return chance(rng, 0.1) ? Element(neg_inf) : Element(dy);
    case SemiringKind::MinPlus:
      return chance(rng, 0.1) ? Element(pos_inf) : Element(dy);
    case SemiringKind::MaxMin:
      if (chance(rng, 0.1)) return neg_inf;
      if (chance(rng, 0.1)) return pos_inf;
      return dy;
    case SemiringKind::Boolean: return chance(rng, 0.5);
    case SemiringKind::MaxTimes:
      return chance(rng, 0.1) ? 0.0 : uniform_int(rng, 0, 32) / 8.0;
    case SemiringKind::RealField: return uniform_int(rng, -64, 64) / 8.0;
    case SemiringKind::RationalField: return Rational(uniform_int(rng, -20, 20), uniform_int(rng, 1, 12));
    case SemiringKind::Deformed:
      return chance(rng, 0.1) ? Element(neg_inf) : Element(uniform_real(rng, -10.0, 10.0));
    case SemiringKind::IntervalOver: break;
  }
  return s.zero();
}

inline Element random_element(const Semiring& s, Rng& rng) {
  if (s.kind() != SemiringKind::IntervalOver) return random_scalar(s, rng);
  const Semiring in = s.inner();
  Element lo = random_scalar(in, rng);
  Element hi = random_scalar(in, rng);
  if (!in.leq(lo, hi)) std::swap(lo, hi);
  return Interval{to_scalar(lo), to_scalar(hi)};
}

inline DenseMatrix random_matrix(const Semiring& s, std::size_t rows, std::size_t cols, Rng& rng) {
  std::vector<Element> data;
  for (std::size_t i = 0; i < rows * cols; ++i) data.push_back(random_element(s, rng));
  return DenseMatrix(s, rows, cols, std::move(data));
}

inline DenseVector random_vector(const Semiring& s, std::size_t n, Rng& rng) {
  std::vector<Element> data;
  for (std::size_t i = 0; i < n; ++i) data.push_back(random_element(s, rng));
  return DenseVector(s, std::move(data));
}

/// Counts of failed instances per law.
struct AxiomTally {
  std::size_t trials = 0;
  std::size_t add_assoc = 0;
  std::size_t mul_assoc = 0;
  std::size_t add_comm = 0;
  std::size_t left_distrib = 0;
  std::size_t right_distrib = 0;
  std::size_t add_identity = 0;
  std::size_t mul_identity = 0;
  std::size_t absorption = 0;
  std::size_t idempotency = 0;

  std::size_t failures() const {
    return add_assoc + mul_assoc + add_comm + left_distrib + right_distrib + add_identity + mul_identity +
           absorption + idempotency;
  }
  std::string summary() const {
    return "add_assoc=" + std::to_string(add_assoc) + " mul_assoc=" + std::to_string(mul_assoc) +
           " add_comm=" + std::to_string(add_comm) + " ldist=" + std::to_string(left_distrib) +
           " rdist=" + std::to_string(right_distrib) + " add_id=" + std::to_string(add_identity) +
           " mul_id=" + std::to_string(mul_identity) + " absorb=" + std::to_string(absorption) +
           " idem=" + std::to_string(idempotency);
  }
};

/// Semiring laws on triples drawn by `next` (or supplied exhaustively).
template <class T>
struct Algebra {
  std::function<T(const T&, const T&)> add;
  std::function<T(const T&, const T&)> mul;
  T zero;
  T one;
  std::function<bool(const T&, const T&)> eq;
  bool idempotent;
};

template <class T>
void check_triple(const Algebra<T>& alg, const T& x, const T& y, const T& z, AxiomTally& t) {
  ++t.trials;
  if (!alg.eq(alg.add(x, alg.add(y, z)), alg.add(alg.add(x, y), z))) ++t.add_assoc;
  if (!alg.eq(alg.mul(x, alg.mul(y, z)), alg.mul(alg.mul(x, y), z))) ++t.mul_assoc;
  if (!alg.eq(alg.add(x, y), alg.add(y, x))) ++t.add_comm;
  if (!alg.eq(alg.mul(x, alg.add(y, z)), alg.add(alg.mul(x, y), alg.mul(x, z)))) ++t.left_distrib;
  if (!alg.eq(alg.mul(alg.add(y, z), x), alg.add(alg.mul(y, x), alg.mul(z, x)))) ++t.right_distrib;
  if (!alg.eq(alg.add(alg.zero, x), x) || !alg.eq(alg.add(x, alg.zero), x)) ++t.add_identity;
  if (!alg.eq(alg.mul(alg.one, x), x) || !alg.eq(alg.mul(x, alg.one), x)) ++t.mul_identity;
  if (!alg.eq(alg.mul(alg.zero, x), alg.zero) || !alg.eq(alg.mul(x, alg.zero), alg.zero)) ++t.absorption;
  if (alg.idempotent && !alg.eq(alg.add(x, x), x)) ++t.idempotency;
}

inline Algebra<Element> scalar_algebra(const Semiring& s) {
  return {[s](const Element& a, const Element& b) { return s.add(a, b); },
          [s](const Element& a, const Element& b) { return s.mul(a, b); },
          s.zero(),
          s.one(),
          [s](const Element& a, const Element& b) { return s.equivalent(a, b); },
          s.idempotent()};
}

/// 1000 random triples, or all 8 triples for boolean.
inline AxiomTally check_semiring_axioms(const Semiring& s, Rng& rng, std::size_t trials = 1000) {
  AxiomTally t;
  const auto alg = scalar_algebra(s);
  if (s.kind() == SemiringKind::Boolean) {
    for (bool x : {false, true})
      for (bool y : {false, true})
        for (bool z : {false, true}) check_triple<Element>(alg, x, y, z, t);
    return t;
  }
  for (std::size_t i = 0; i < trials; ++i) {
    const Element x = random_element(s, rng);
    const Element y = random_element(s, rng);
    const Element z = random_element(s, rng);
    check_triple(alg, x, y, z, t);
  }
  return t;
}

inline std::vector<Semiring> builtin_semirings() {
  return {Semiring::max_plus(), Semiring::min_plus(),    Semiring::max_min(),
          Semiring::boolean(),  Semiring::max_times(),   Semiring::real(),
          Semiring::rational(), Semiring::deformed(1.0), Semiring::deformed(0.1)};
}

inline std::vector<Semiring> interval_lifts() {
  return {Semiring::interval_over(Semiring::max_plus()), Semiring::interval_over(Semiring::min_plus()),
          Semiring::interval_over(Semiring::max_min())};
}

// ---------------------------------------------------------------------------
// Path oracles: plain arithmetic over every simple path.

enum class Problem { Shortest, Widest, Reliable, Reach };

struct OracleCell {
  bool reachable = false;  // some path exists (the empty one for i == j)
  double value = 0.0;      // meaningless for Reach
};

inline double combine(Problem p, double acc, double v) {
  switch (p) {
    case Problem::Shortest: return std::min(acc, v);
    default: return std::max(acc, v);
  }
}

inline double extend(Problem p, double path, double w) {
  switch (p) {
    case Problem::Shortest: return path + w;
    case Problem::Widest: return std::min(path, w);
    case Problem::Reliable: return path * w;
    case Problem::Reach: return 1.0;
  }
  return 0.0;
}

inline double empty_path_value(Problem p) {
  switch (p) {
    case Problem::Shortest: return 0.0;
    case Problem::Widest: return std::numeric_limits<double>::infinity();
    default: return 1.0;
  }
}

/// Optimal value over all simple paths i → j (the empty path for i = j).
/// Parallel edges are all tried. Exponential; meant for n ≤ 6.
inline std::vector<OracleCell> enumerate_simple_paths(const WeightedDigraph& g, Problem p) {
  const std::size_t n = g.size();
  std::vector<OracleCell> best(n * n);
  std::vector<bool> on_path(n, false);
  std::function<void(std::size_t, std::size_t, double)> walk = [&](std::size_t src, std::size_t u, double value) {
    OracleCell& cell = best[src * n + u];
    cell.value = cell.reachable ? combine(p, cell.value, value) : value;
    cell.reachable = true;
    on_path[u] = true;
    for (const Edge& e : g.edges()) {
      if (e.src != u || on_path[e.dst]) continue;
      walk(src, e.dst, extend(p, value, e.weight));
    }
    on_path[u] = false;
  };
  for (std::size_t s = 0; s < n; ++s) walk(s, s, empty_path_value(p));
  return best;
}

inline WeightedDigraph random_graph(Rng& rng, std::size_t n, double density, int wmin, int wmax) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (chance(rng, density)) edges.push_back({i, j, static_cast<double>(uniform_int(rng, wmin, wmax))});
  if (n > 1 && chance(rng, 0.3)) {
    const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
    const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
    edges.push_back({i, j, static_cast<double>(uniform_int(rng, wmin, wmax))});  // parallel edge
  }
  return WeightedDigraph(n, std::move(edges));
}

/// Integer weights w become reliabilities 2^−w, exact under ×.
inline WeightedDigraph as_reliability_graph(const WeightedDigraph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.weight = std::ldexp(1.0, -static_cast<int>(e.weight));
  return WeightedDigraph(g.size(), std::move(edges));
}

/// Compare a closure matrix with the oracle. `tol` applies to max-times.
inline bool matches_oracle(const DenseMatrix& closure, const std::vector<OracleCell>& oracle, Problem p,
                           double tol = 0.0) {
  const std::size_t n = closure.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element& got = closure(i, j);
      const OracleCell& want = oracle[i * n + j];
      switch (p) {
        case Problem::Reach:
          if (got != Element(want.reachable)) return false;
          break;
        case Problem::Shortest:
          if (!want.reachable ? got != Element(pos_inf) : got != Element(want.value)) return false;
          break;
        case Problem::Widest:
          if (!want.reachable) {
            if (got != Element(neg_inf)) return false;
          } else if (std::isinf(want.value)) {
            if (got != Element(pos_inf)) return false;
          } else if (got != Element(want.value)) {
            return false;
          }
          break;
        case Problem::Reliable: {
          const double w = want.reachable ? want.value : 0.0;
          const double* d = std::get_if<double>(&got);
          if (d == nullptr || std::abs(*d - w) > tol * std::max(1.0, std::abs(w))) return false;
          break;
        }
      }
    }
  }
  return true;
}

}  // namespace idem::test
