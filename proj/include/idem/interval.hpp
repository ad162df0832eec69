#pragma once

#include "idem/semiring.hpp"

namespace idem {

/// [lo, hi] over an idempotent inner semiring. Construction checks
/// lo ⪯ hi (InvariantViolation) and carrier membership.
class IntervalElement {
 public:
  IntervalElement(const Semiring& inner, Element lo, Element hi);
  /// Unwraps an Element of interval_over(inner).
  IntervalElement(const Semiring& inner, const Element& packed);

  const Element& lo() const { return lo_; }
  const Element& hi() const { return hi_; }
  Element packed() const;

  /// lo ⪯ x ⪯ hi.
  bool contains(const Semiring& inner, const Element& x) const;

  friend bool operator==(const IntervalElement&, const IntervalElement&) = default;

 private:
  Element lo_;
  Element hi_;
};

/// [a.lo ⊕ b.lo, a.hi ⊕ b.hi].
IntervalElement interval_add(const Semiring& inner, const IntervalElement& a, const IntervalElement& b);
/// [a.lo ⊙ b.lo, a.hi ⊙ b.hi]; ⊙ is monotone on every idempotent built-in.
IntervalElement interval_mul(const Semiring& inner, const IntervalElement& a, const IntervalElement& b);

/// Ordinary real interval, used only as a contrast for distributivity.
struct ClassicalInterval {
  double lo;
  double hi;

  friend bool operator==(const ClassicalInterval&, const ClassicalInterval&) = default;
};

ClassicalInterval classical_add(ClassicalInterval a, ClassicalInterval b);
ClassicalInterval classical_mul(ClassicalInterval a, ClassicalInterval b);

struct DistributivityReport {
  Element left;   // a ⊙ (b ⊕ c), packed interval
  Element right;  // (a ⊙ b) ⊕ (a ⊙ c)
  bool equal;
};

DistributivityReport distributivity_witness(const Semiring& inner, const IntervalElement& a,
                                            const IntervalElement& b, const IntervalElement& c);

struct ClassicalDistributivityReport {
  ClassicalInterval left;
  ClassicalInterval right;
  bool equal;
  /// The left side is always contained in the right (subdistributivity).
  bool left_within_right;
};

ClassicalDistributivityReport classical_distributivity_witness(ClassicalInterval a, ClassicalInterval b,
                                                               ClassicalInterval c);

}  // namespace idem
