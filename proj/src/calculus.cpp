#include "idem/calculus.hpp"

#include "idem/error.hpp"

#include <cmath>

namespace idem {

namespace {

void require_grid(const std::vector<double>& xs) {
  if (xs.empty()) fail(ErrorKind::InvariantViolation, "grid must be nonempty");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i])) fail(ErrorKind::InvariantViolation, "grid points must be finite");
    if (i > 0 && !(xs[i - 1] < xs[i])) fail(ErrorKind::InvariantViolation, "grid must be strictly increasing");
  }
}

void require_same_grid(const std::vector<double>& a, const std::vector<double>& b) {
  if (a != b) fail(ErrorKind::GridMismatch, "sample grids differ");
}

}  // namespace

SampledFunction::SampledFunction(Semiring s, std::vector<double> xs, std::vector<Element> vals)
    : semiring_(std::move(s)), xs_(std::move(xs)), vals_(std::move(vals)) {
  require_grid(xs_);
  if (xs_.size() != vals_.size()) fail(ErrorKind::InvariantViolation, "one value per grid point");
  for (const Element& v : vals_) semiring_.require(v);
}

SampledKernel::SampledKernel(Semiring s, std::vector<double> xs, std::vector<double> ys, std::vector<Element> vals)
    : semiring_(std::move(s)), xs_(std::move(xs)), ys_(std::move(ys)), vals_(std::move(vals)) {
  require_grid(xs_);
  require_grid(ys_);
  if (vals_.size() != xs_.size() * ys_.size())
    fail(ErrorKind::InvariantViolation, "kernel needs |xs|*|ys| values");
  for (const Element& v : vals_) semiring_.require(v);
}

Element idempotent_integral(const SampledFunction& f) {
  const Semiring& s = f.semiring();
  Element acc = s.zero();
  for (const Element& v : f.vals()) acc = s.add(acc, v);
  return acc;
}

Element riemann_sum(const SampledFunction& f) {
  if (f.semiring().kind() != SemiringKind::MaxPlus)
    fail(ErrorKind::NotMaxPlus, "riemann_sum is defined over max-plus, got " + f.semiring().name());
  if (f.size() < 2) fail(ErrorKind::EmptyDomain, "riemann_sum needs at least two grid points");
  const Semiring& s = f.semiring();
  Element acc = s.zero();
  for (std::size_t i = 1; i < f.size(); ++i)
    acc = s.add(acc, s.mul(f.vals()[i], Element(f.xs()[i] - f.xs()[i - 1])));
  return acc;
}

Element idempotent_measure(const SampledFunction& f, std::span<const std::size_t> subset) {
  if (subset.empty()) fail(ErrorKind::EmptySubset, "measure of the empty set is not taken");
  const Semiring& s = f.semiring();
  Element acc = s.zero();
  for (std::size_t i : subset) {
    if (i >= f.size()) fail(ErrorKind::InvariantViolation, "subset index outside the grid");
    acc = s.add(acc, f.vals()[i]);
  }
  return acc;
}

Element scalar_product(const SampledFunction& f, const SampledFunction& g) {
  if (!(f.semiring() == g.semiring())) fail(ErrorKind::SemiringMismatch, "scalar product across semirings");
  require_same_grid(f.xs(), g.xs());
  const Semiring& s = f.semiring();
  Element acc = s.zero();
  for (std::size_t i = 0; i < f.size(); ++i) acc = s.add(acc, s.mul(f.vals()[i], g.vals()[i]));
  return acc;
}

SampledFunction apply_operator(const SampledKernel& k, const SampledFunction& f) {
  if (!(k.semiring() == f.semiring())) fail(ErrorKind::SemiringMismatch, "kernel and function semirings differ");
  require_same_grid(k.ys(), f.xs());
  const Semiring& s = f.semiring();
  std::vector<Element> out;
  out.reserve(k.xs().size());
  for (std::size_t i = 0; i < k.xs().size(); ++i) {
    Element acc = s.zero();
    for (std::size_t j = 0; j < f.size(); ++j) acc = s.add(acc, s.mul(k(i, j), f.vals()[j]));
    out.push_back(std::move(acc));
  }
  return SampledFunction(s, k.xs(), std::move(out));
}

SampledFunction legendre_transform(const SampledFunction& f, std::vector<double> xis, LegendreConvention convention) {
  if (xis.empty()) fail(ErrorKind::EmptyDomain, "no xi points");
  const bool sup_plus = convention == LegendreConvention::SupPlus;
  if (sup_plus && f.semiring().kind() != SemiringKind::MaxPlus)
    fail(ErrorKind::NotMaxPlus, "legendre transform takes a max-plus function, got " + f.semiring().name());
  if (!sup_plus && f.semiring().kind() != SemiringKind::MinPlus)
    fail(ErrorKind::SemiringMismatch, "Fenchel conjugate takes a min-plus function, got " + f.semiring().name());

  const double sign = sup_plus ? 1.0 : -1.0;
  std::vector<Element> out;
  out.reserve(xis.size());
  for (double xi : xis) {
    bool any = false;
    double best = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double* v = std::get_if<double>(&f.vals()[i]);
      if (v == nullptr) continue;
      const double term = xi * f.xs()[i] + sign * *v;
      if (!any || term > best) best = term;
      any = true;
    }
    if (any) {
      out.emplace_back(best);
    } else if (sup_plus) {
      out.emplace_back(neg_inf);
    } else {
      fail(ErrorKind::EmptyDomain, "function is +inf on the whole grid");
    }
  }
  return SampledFunction(f.semiring(), std::move(xis), std::move(out));
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t steps) {
  if (steps == 0) return {lo};
  if (!(lo < hi)) fail(ErrorKind::InvariantViolation, "grid needs lo < hi");
  std::vector<double> xs(steps + 1);
  const double step = (hi - lo) / static_cast<double>(steps);
  for (std::size_t i = 0; i <= steps; ++i) xs[i] = lo + step * static_cast<double>(i);
  xs.back() = hi;
  return xs;
}

}  // namespace idem
