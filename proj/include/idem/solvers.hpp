#pragma once

#include "idem/matrix.hpp"

#include <cstddef>
#include <optional>

namespace idem {

enum class SolveMethod { GaussJordan, Series, Jacobi, GaussSeidel };

struct SolveReport {
  DenseMatrix solution;
  SolveMethod method;
  /// Pivots for Gauss–Jordan, index of the stable partial sum for Series,
  /// update steps (including the confirming one) for Jacobi and Gauss–Seidel.
  std::size_t iterations;
  bool stabilized;
  /// The solution was re-checked against its defining equation.
  bool residual_ok;
};

/// A* = 𝟙 ⊕ A ⊕ A² ⊕ … by algebraic-path Gauss–Jordan elimination.
///
/// Pivots are taken in ascending order. At step k every entry is updated
/// with a_ij ⊕ a_ik ⊙ a_kk* ⊙ a_kj (old row and column k), which leaves
/// A⁺ = A ⊕ A² ⊕ …; the diagonal is then joined with 𝟙. Over a field the
/// same steps produce (I − A)⁻¹.
///
/// Throws StarDiverges when a pivot star diverges (a negative cycle in
/// min-plus, a pivot with |a| ≥ 1 over a field under StarPolicy::Series).
SolveReport closure_gauss_jordan(const DenseMatrix& a, StarPolicy policy = StarPolicy::Series);

/// Partial sums P_k = 𝟙 ⊕ A ⊕ … ⊕ A^k until P_k = P_{k−1}.
/// `max_terms` defaults to 2n + 1. NotIdempotent over non-idempotent
/// signatures, NonStabilizing if the bound is hit.
SolveReport closure_series(const DenseMatrix& a, std::optional<std::size_t> max_terms = {});

/// X_{k+1} = A X_k ⊕ B from X_0 = B. `max_iter` defaults to 2n + 1.
SolveReport bellman_jacobi(const DenseMatrix& a, const DenseMatrix& b,
                           std::optional<std::size_t> max_iter = {});

/// As bellman_jacobi, but row i of a sweep already sees rows 0..i−1 of
/// the same sweep.
SolveReport bellman_gauss_seidel(const DenseMatrix& a, const DenseMatrix& b,
                                 std::optional<std::size_t> max_iter = {});

/// (A X) ⊕ B = X, exactly on exact carriers and to 1e-9 relative on
/// rounded ones (real, max-times, deformed).
bool verify_bellman(const DenseMatrix& a, const DenseMatrix& b, const DenseMatrix& x);

std::string_view to_string(SolveMethod m);

}  // namespace idem
