#pragma once

#include "idem/element.hpp"

#include <string>
#include <string_view>

namespace idem {

enum class SemiringKind {
  MaxPlus,
  MinPlus,
  MaxMin,
  Boolean,
  MaxTimes,
  RealField,
  RationalField,
  Deformed,
  IntervalOver,
};

/// How `star` treats field elements whose geometric series diverges.
enum class StarPolicy {
  /// Only |a| < 1 succeeds; the series 1 + a + a² + … must converge.
  Series,
  /// Use the closed form 1/(1 − a) for any a ≠ 1.
  Analytic,
};

/// A named arithmetic (S, ⊕, ⊙, 𝟘, 𝟙) chosen at runtime.
///
/// All built-ins are value types; two signatures compare equal when they
/// denote the same arithmetic (same kind, same h, same inner kind).
///
/// Carriers:
///   max-plus     ℝ ∪ {−∞}, ⊕ = max, ⊙ = +, 𝟘 = −∞, 𝟙 = 0
///   min-plus     ℝ ∪ {+∞}, ⊕ = min, ⊙ = +, 𝟘 = +∞, 𝟙 = 0
///   max-min      ℝ ∪ {±∞}, ⊕ = max, ⊙ = min, 𝟘 = −∞, 𝟙 = +∞
///   boolean      {false, true}, ⊕ = or, ⊙ = and
///   max-times    [0, ∞), ⊕ = max, ⊙ = ×, 𝟘 = 0, 𝟙 = 1
///   real         ℝ with + and ×
///   rational     ℚ with + and ×, exact
///   deformed:h   ℝ ∪ {−∞}, a ⊕ b = h ln(e^{a/h} + e^{b/h}), ⊙ = +
///   interval:S   endpointwise lift of an idempotent S
class Semiring {
 public:
  static Semiring max_plus() { return Semiring(SemiringKind::MaxPlus); }
  static Semiring min_plus() { return Semiring(SemiringKind::MinPlus); }
  static Semiring max_min() { return Semiring(SemiringKind::MaxMin); }
  static Semiring boolean() { return Semiring(SemiringKind::Boolean); }
  static Semiring max_times() { return Semiring(SemiringKind::MaxTimes); }
  static Semiring real() { return Semiring(SemiringKind::RealField); }
  static Semiring rational() { return Semiring(SemiringKind::RationalField); }
  /// Throws InvariantViolation unless h > 0.
  static Semiring deformed(double h);
  /// Throws InvariantViolation unless `inner` is idempotent and not itself an interval lift.
  static Semiring interval_over(const Semiring& inner);

  /// Accepts the names produced by `name()`; throws ParseError otherwise.
  static Semiring parse(std::string_view name);

  SemiringKind kind() const { return kind_; }
  /// Deformation parameter; only meaningful for Deformed.
  double h() const { return h_; }
  /// Inner signature of an interval lift.
  Semiring inner() const;

  std::string name() const;

  Element zero() const;
  Element one() const;

  bool idempotent() const;
  bool semifield() const;
  /// Exact carriers: every operation result is exact (no rounding).
  bool exact() const;

  bool contains(const Element& e) const;
  /// Throws CarrierMismatch unless contains(e).
  void require(const Element& e) const;

  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;

  /// Standard order a ⪯ b ⇔ a ⊕ b = b. NotIdempotent for non-idempotent signatures.
  bool leq(const Element& a, const Element& b) const;

  /// ZeroDivision for 𝟘, NotSemifield for max-min, boolean and interval lifts.
  Element inverse(const Element& a) const;

  /// Least solution of x = 𝟙 ⊕ a ⊙ x; StarDiverges when the series does not settle.
  Element star(const Element& a, StarPolicy policy = StarPolicy::Series) const;

  /// Equality used for stabilization and identity checks: exact on every
  /// carrier except Deformed, which allows 1e-12 relative error.
  bool equivalent(const Element& a, const Element& b) const;

  friend bool operator==(const Semiring& x, const Semiring& y) {
    return x.kind_ == y.kind_ && x.h_ == y.h_ && x.inner_ == y.inner_;
  }

 private:
  explicit Semiring(SemiringKind kind, double h = 0.0, SemiringKind inner = SemiringKind::MaxPlus)
      : kind_(kind), h_(h), inner_(inner) {}

  Scalar scalar_add(const Scalar& a, const Scalar& b) const;
  Scalar scalar_mul(const Scalar& a, const Scalar& b) const;

  SemiringKind kind_;
  double h_;
  SemiringKind inner_;
};

/// Dequantization parameter h > 0.
class DeformationParams {
 public:
  /// Throws InvariantViolation unless h > 0 and finite.
  explicit DeformationParams(double h);
  double h() const { return h_; }

 private:
  double h_;
};

/// D_h(u) = h ln u, with D_h(0) = −∞. NegativeInput for u < 0.
Element dequantize(DeformationParams p, double u);

struct HomomorphismReport {
  double additive_residual;
  double multiplicative_residual;
};

/// Residuals of D_h(u1 + u2) = D_h(u1) ⊕_h D_h(u2) and
/// D_h(u1 · u2) = D_h(u1) ⊙_h D_h(u2).
HomomorphismReport homomorphism_check(DeformationParams p, double u1, double u2);

}  // namespace idem
