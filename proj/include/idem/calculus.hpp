#pragma once

#include "idem/semiring.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace idem {

/// A function X → S known on a strictly increasing grid.
class SampledFunction {
 public:
  /// InvariantViolation for an empty or non-increasing grid or a
  /// length mismatch; CarrierMismatch for a foreign value.
  SampledFunction(Semiring s, std::vector<double> xs, std::vector<Element> vals);

  const Semiring& semiring() const { return semiring_; }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<Element>& vals() const { return vals_; }
  std::size_t size() const { return xs_.size(); }

  friend bool operator==(const SampledFunction&, const SampledFunction&) = default;

 private:
  Semiring semiring_;
  std::vector<double> xs_;
  std::vector<Element> vals_;
};

/// K(x, y) on grids xs × ys, row-major in x.
class SampledKernel {
 public:
  SampledKernel(Semiring s, std::vector<double> xs, std::vector<double> ys, std::vector<Element> vals);

  const Semiring& semiring() const { return semiring_; }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }
  const Element& operator()(std::size_t i, std::size_t j) const { return vals_[i * ys_.size() + j]; }

 private:
  Semiring semiring_;
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<Element> vals_;
};

/// ⊕ of all samples: the sup-integral in max-plus.
Element idempotent_integral(const SampledFunction& f);

/// max_{i≥1} (φ(x_i) + Δ_i), Δ_i = x_i − x_{i−1}; the i = 0 sample is
/// not used. Max-plus only (NotMaxPlus); needs two grid points (EmptyDomain).
Element riemann_sum(const SampledFunction& f);

/// m_φ(B) = ⊕_{i∈B} φ(x_i). EmptySubset for an empty B; indices must be
/// inside the grid.
Element idempotent_measure(const SampledFunction& f, std::span<const std::size_t> subset);

/// ⟨f, g⟩ = ⊕_i f_i ⊙ g_i on a shared grid (GridMismatch otherwise).
Element scalar_product(const SampledFunction& f, const SampledFunction& g);

/// (K f)(x) = ⊕_y K(x, y) ⊙ f(y); needs K.ys == f.xs.
SampledFunction apply_operator(const SampledKernel& k, const SampledFunction& f);

enum class LegendreConvention {
  /// sup_x (ξx + f(x)) for f over max-plus; −∞ samples are skipped.
  SupPlus,
  /// Fenchel conjugate sup_x (ξx − f(x)) for f over min-plus; +∞
  /// samples (outside the effective domain) are skipped.
  Fenchel,
};

/// Transform evaluated at every ξ in `xis` by brute-force sup over the
/// sample grid. The result lives in f's semiring. EmptyDomain when `xis`
/// is empty or (Fenchel) f is +∞ everywhere.
SampledFunction legendre_transform(const SampledFunction& f, std::vector<double> xis,
                                   LegendreConvention convention = LegendreConvention::SupPlus);

/// lo, hi split into `steps` equal intervals (steps + 1 points, hi exact); {lo} for steps = 0.
std::vector<double> uniform_grid(double lo, double hi, std::size_t steps);

}  // namespace idem
