#include "idem/solvers.hpp"

#include "idem/error.hpp"

#include <algorithm>
#include <cmath>

namespace idem {

std::string_view to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::GaussJordan: return "gauss-jordan";
    case SolveMethod::Series: return "series";
    case SolveMethod::Jacobi: return "jacobi";
    case SolveMethod::GaussSeidel: return "gauss-seidel";
  }
  return "?";
}

namespace {

void require_square(const DenseMatrix& a) {
  if (!a.square()) fail(ErrorKind::ShapeMismatch, "closure needs a square matrix");
}

void require_idempotent(const Semiring& s, const char* what) {
  if (!s.idempotent()) fail(ErrorKind::NotIdempotent, std::string(what) + " needs an idempotent semiring, got " + s.name());
}

void require_bellman_shapes(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_semiring(a.semiring(), b.semiring());
  if (!a.square() || b.rows() != a.rows())
    fail(ErrorKind::ShapeMismatch, "X = AX + B needs A n×n and B n×m");
}

std::size_t default_bound(const DenseMatrix& a, std::optional<std::size_t> given) {
  return given.value_or(2 * a.rows() + 1);
}

bool close_enough(const Semiring& s, const Element& x, const Element& y) {
  if (x == y) return true;
  if (s.exact()) return false;
  const double* p = std::get_if<double>(&x);
  const double* q = std::get_if<double>(&y);
  if (p == nullptr || q == nullptr) return false;
  return std::abs(*p - *q) <= 1e-9 * std::max({1.0, std::abs(*p), std::abs(*q)});
}

std::vector<Element> eliminate(const DenseMatrix& m, StarPolicy policy) {
  require_square(m);
  const Semiring& s = m.semiring();
  const std::size_t n = m.rows();
  std::vector<Element> a = m.data();
  std::vector<Element> col(n, s.zero());
  std::vector<Element> row(n, s.zero());
  for (std::size_t k = 0; k < n; ++k) {
    const Element pivot_star = s.star(a[k * n + k], policy);
    for (std::size_t t = 0; t < n; ++t) {
      col[t] = s.mul(a[t * n + k], pivot_star);
      row[t] = a[k * n + t];
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] = s.add(a[i * n + j], s.mul(col[i], row[j]));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = s.add(s.one(), a[i * n + i]);
  return a;
}

}  // namespace

SolveReport closure_gauss_jordan(const DenseMatrix& a, StarPolicy policy) {
  DenseMatrix x(a.semiring(), a.rows(), a.cols(), eliminate(a, policy));
  const bool ok = verify_bellman(a, DenseMatrix::identity(a.semiring(), a.rows()), x);
  return {std::move(x), SolveMethod::GaussJordan, a.rows(), ok, ok};
}

SolveReport closure_series(const DenseMatrix& a, std::optional<std::size_t> max_terms) {
  require_square(a);
  require_idempotent(a.semiring(), "closure_series");
  const std::size_t bound = default_bound(a, max_terms);
  DenseMatrix partial = DenseMatrix::identity(a.semiring(), a.rows());
  DenseMatrix power = partial;
  for (std::size_t k = 1; k <= bound; ++k) {
    power = mat_mul(power, a);
    DenseMatrix next = mat_add(partial, power);
    if (next == partial) {
      const bool ok = verify_bellman(a, DenseMatrix::identity(a.semiring(), a.rows()), partial);
      return {std::move(partial), SolveMethod::Series, k - 1, true, ok};
    }
    partial = std::move(next);
  }
  fail(ErrorKind::NonStabilizing, "closure series did not settle within " + std::to_string(bound) + " terms");
}

SolveReport bellman_jacobi(const DenseMatrix& a, const DenseMatrix& b, std::optional<std::size_t> max_iter) {
  require_bellman_shapes(a, b);
  require_idempotent(a.semiring(), "bellman_jacobi");
  const std::size_t bound = default_bound(a, max_iter);
  DenseMatrix x = b;
  for (std::size_t it = 1; it <= bound; ++it) {
    DenseMatrix next = mat_add(mat_mul(a, x), b);
    if (next == x) {
      const bool ok = verify_bellman(a, b, x);
      return {std::move(x), SolveMethod::Jacobi, it, true, ok};
    }
    x = std::move(next);
  }
  fail(ErrorKind::NonStabilizing, "Jacobi iteration did not settle within " + std::to_string(bound) + " steps");
}

SolveReport bellman_gauss_seidel(const DenseMatrix& a, const DenseMatrix& b,
                                 std::optional<std::size_t> max_iter) {
  require_bellman_shapes(a, b);
  require_idempotent(a.semiring(), "bellman_gauss_seidel");
  const Semiring& s = a.semiring();
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  const std::size_t bound = default_bound(a, max_iter);
  std::vector<Element> x = b.data();
  for (std::size_t sweep = 1; sweep <= bound; ++sweep) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < m; ++c) {
        Element acc = s.zero();
        for (std::size_t k = 0; k < n; ++k) acc = s.add(acc, s.mul(a(i, k), x[k * m + c]));
        acc = s.add(acc, b(i, c));
        if (acc != x[i * m + c]) {
          changed = true;
          x[i * m + c] = std::move(acc);
        }
      }
    }
    if (!changed) {
      DenseMatrix sol(s, n, m, std::move(x));
      const bool ok = verify_bellman(a, b, sol);
      return {std::move(sol), SolveMethod::GaussSeidel, sweep, true, ok};
    }
  }
  fail(ErrorKind::NonStabilizing, "Gauss-Seidel did not settle within " + std::to_string(bound) + " sweeps");
}

bool verify_bellman(const DenseMatrix& a, const DenseMatrix& b, const DenseMatrix& x) {
  require_bellman_shapes(a, b);
  if (x.rows() != b.rows() || x.cols() != b.cols())
    fail(ErrorKind::ShapeMismatch, "X must have the shape of B");
  const DenseMatrix lhs = mat_add(mat_mul(a, x), b);
  const Semiring& s = a.semiring();
  for (std::size_t i = 0; i < lhs.data().size(); ++i)
    if (!close_enough(s, lhs.data()[i], x.data()[i])) return false;
  return true;
}

}  // namespace idem
