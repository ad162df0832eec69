#include "idem/interval.hpp"

#include "idem/error.hpp"

#include <algorithm>

namespace idem {

namespace {

Semiring lift(const Semiring& inner) { return Semiring::interval_over(inner); }

const Interval& checked_interval(const Semiring& inner, const Element& packed) {
  lift(inner).require(packed);
  return std::get<Interval>(packed);
}

}  // namespace

IntervalElement::IntervalElement(const Semiring& inner, Element lo, Element hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  inner.require(lo_);
  inner.require(hi_);
  if (!inner.leq(lo_, hi_))
    fail(ErrorKind::InvariantViolation, "[" + render(lo_) + "," + render(hi_) + "] has lo above hi in " + inner.name());
}

IntervalElement::IntervalElement(const Semiring& inner, const Element& packed)
    : IntervalElement(inner, to_element(checked_interval(inner, packed).lo),
                      to_element(checked_interval(inner, packed).hi)) {}

Element IntervalElement::packed() const { return Interval{to_scalar(lo_), to_scalar(hi_)}; }

bool IntervalElement::contains(const Semiring& inner, const Element& x) const {
  return inner.leq(lo_, x) && inner.leq(x, hi_);
}

IntervalElement interval_add(const Semiring& inner, const IntervalElement& a, const IntervalElement& b) {
  return IntervalElement(inner, lift(inner).add(a.packed(), b.packed()));
}

IntervalElement interval_mul(const Semiring& inner, const IntervalElement& a, const IntervalElement& b) {
  return IntervalElement(inner, lift(inner).mul(a.packed(), b.packed()));
}

DistributivityReport distributivity_witness(const Semiring& inner, const IntervalElement& a,
                                            const IntervalElement& b, const IntervalElement& c) {
  const Semiring s = lift(inner);
  Element left = s.mul(a.packed(), s.add(b.packed(), c.packed()));
  Element right = s.add(s.mul(a.packed(), b.packed()), s.mul(a.packed(), c.packed()));
  const bool eq = left == right;
  return {std::move(left), std::move(right), eq};
}

ClassicalInterval classical_add(ClassicalInterval a, ClassicalInterval b) { return {a.lo + b.lo, a.hi + b.hi}; }

ClassicalInterval classical_mul(ClassicalInterval a, ClassicalInterval b) {
  const double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  // + 0.0 folds −0 into +0.
  return {*std::min_element(std::begin(p), std::end(p)) + 0.0, *std::max_element(std::begin(p), std::end(p)) + 0.0};
}

ClassicalDistributivityReport classical_distributivity_witness(ClassicalInterval a, ClassicalInterval b,
                                                               ClassicalInterval c) {
  const ClassicalInterval left = classical_mul(a, classical_add(b, c));
  const ClassicalInterval right = classical_add(classical_mul(a, b), classical_mul(a, c));
  return {left, right, left == right, right.lo <= left.lo && left.hi <= right.hi};
}

}  // namespace idem
