#include "idem/semiring.hpp"

#include "idem/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace idem {

namespace {

// Position in the extended real line −∞ < finite < +∞.
int rank(const Scalar& s) {
  if (std::holds_alternative<NegInf>(s)) return 0;
  if (std::holds_alternative<PosInf>(s)) return 2;
  return 1;
}

// Total order on the extended reals; both arguments are NegInf, PosInf or double.
bool ext_less(const Scalar& a, const Scalar& b) {
  const int ra = rank(a);
  const int rb = rank(b);
  if (ra != rb) return ra < rb;
  if (ra != 1) return false;
  return std::get<double>(a) < std::get<double>(b);
}

const Scalar& ext_max(const Scalar& a, const Scalar& b) { return ext_less(a, b) ? b : a; }
const Scalar& ext_min(const Scalar& a, const Scalar& b) { return ext_less(b, a) ? b : a; }

double checked(double v) {
  if (!std::isfinite(v)) fail(ErrorKind::CarrierMismatch, "real overflow");
  return v;
}

std::string shortest_real(double v) {
  char buf[40];
  for (int prec = 6; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace

Semiring Semiring::deformed(double h) {
  if (!(h > 0.0) || !std::isfinite(h))
    fail(ErrorKind::InvariantViolation, "deformation parameter h must be a positive real");
  return Semiring(SemiringKind::Deformed, h);
}

Semiring Semiring::interval_over(const Semiring& inner) {
  if (inner.kind() == SemiringKind::IntervalOver)
    fail(ErrorKind::InvariantViolation, "nested interval lifts are not supported");
  if (!inner.idempotent())
    fail(ErrorKind::InvariantViolation, "interval lift needs an idempotent inner semiring, got " + inner.name());
  return Semiring(SemiringKind::IntervalOver, 0.0, inner.kind());
}

Semiring Semiring::parse(std::string_view name) {
  if (name == "max-plus") return max_plus();
  if (name == "min-plus") return min_plus();
  if (name == "max-min") return max_min();
  if (name == "boolean") return boolean();
  if (name == "max-times") return max_times();
  if (name == "real") return real();
  if (name == "rational") return rational();
  if (name.starts_with("deformed:")) {
    const std::string arg(name.substr(9));
    char* end = nullptr;
    const double h = std::strtod(arg.c_str(), &end);
    if (arg.empty() || end != arg.c_str() + arg.size())
      fail(ErrorKind::ParseError, "bad deformation parameter '" + arg + "'");
    return deformed(h);
  }
  if (name.starts_with("interval:")) return interval_over(parse(name.substr(9)));
  fail(ErrorKind::ParseError, "unknown semiring '" + std::string(name) + "'");
}

Semiring Semiring::inner() const {
  if (kind_ != SemiringKind::IntervalOver)
    fail(ErrorKind::SemiringMismatch, name() + " is not an interval lift");
  return Semiring(inner_);
}

std::string Semiring::name() const {
  switch (kind_) {
    case SemiringKind::MaxPlus: return "max-plus";
    case SemiringKind::MinPlus: return "min-plus";
    case SemiringKind::MaxMin: return "max-min";
    case SemiringKind::Boolean: return "boolean";
    case SemiringKind::MaxTimes: return "max-times";
    case SemiringKind::RealField: return "real";
    case SemiringKind::RationalField: return "rational";
    case SemiringKind::Deformed: return "deformed:" + shortest_real(h_);
    case SemiringKind::IntervalOver: return "interval:" + inner().name();
  }
  return "?";
}

Element Semiring::zero() const {
  switch (kind_) {
    case SemiringKind::MaxPlus:
    case SemiringKind::MaxMin:
    case SemiringKind::Deformed: return neg_inf;
    case SemiringKind::MinPlus: return pos_inf;
    case SemiringKind::Boolean: return false;
    case SemiringKind::MaxTimes:
    case SemiringKind::RealField: return 0.0;
    case SemiringKind::RationalField: return Rational(0);
    case SemiringKind::IntervalOver: {
      const Scalar z = to_scalar(inner().zero());
      return Interval{z, z};
    }
  }
  return neg_inf;
}

Element Semiring::one() const {
  switch (kind_) {
    case SemiringKind::MaxPlus:
    case SemiringKind::MinPlus:
    case SemiringKind::Deformed: return 0.0;
    case SemiringKind::MaxMin: return pos_inf;
    case SemiringKind::Boolean: return true;
    case SemiringKind::MaxTimes:
    case SemiringKind::RealField: return 1.0;
    case SemiringKind::RationalField: return Rational(1);
    case SemiringKind::IntervalOver: {
      const Scalar u = to_scalar(inner().one());
      return Interval{u, u};
    }
  }
  return 0.0;
}

bool Semiring::idempotent() const {
  switch (kind_) {
    case SemiringKind::RealField:
    case SemiringKind::RationalField:
    case SemiringKind::Deformed: return false;
    default: return true;
  }
}

bool Semiring::semifield() const {
  switch (kind_) {
    case SemiringKind::MaxMin:
    case SemiringKind::Boolean:
    case SemiringKind::IntervalOver: return false;
    default: return true;
  }
}

bool Semiring::exact() const {
  return kind_ != SemiringKind::RealField && kind_ != SemiringKind::Deformed &&
         kind_ != SemiringKind::MaxTimes;
}

bool Semiring::contains(const Element& e) const {
  const double* d = std::get_if<double>(&e);
  if (d != nullptr && !std::isfinite(*d)) return false;
  switch (kind_) {
    case SemiringKind::MaxPlus:
    case SemiringKind::Deformed: return d != nullptr || is_neg_inf(e);
    case SemiringKind::MinPlus: return d != nullptr || is_pos_inf(e);
    case SemiringKind::MaxMin: return d != nullptr || is_neg_inf(e) || is_pos_inf(e);
    case SemiringKind::Boolean: return std::holds_alternative<bool>(e);
    case SemiringKind::MaxTimes: return d != nullptr && *d >= 0.0;
    case SemiringKind::RealField: return d != nullptr;
    case SemiringKind::RationalField: return std::holds_alternative<Rational>(e);
    case SemiringKind::IntervalOver: {
      const Interval* iv = std::get_if<Interval>(&e);
      if (iv == nullptr) return false;
      const Semiring in = inner();
      const Element lo = to_element(iv->lo);
      const Element hi = to_element(iv->hi);
      return in.contains(lo) && in.contains(hi) && in.leq(lo, hi);
    }
  }
  return false;
}

void Semiring::require(const Element& e) const {
  if (!contains(e)) fail(ErrorKind::CarrierMismatch, render(e) + " is not an element of " + name());
}

Scalar Semiring::scalar_add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case SemiringKind::MaxPlus:
    case SemiringKind::MaxMin:
    case SemiringKind::MaxTimes: return ext_max(a, b);
    case SemiringKind::MinPlus: return ext_min(a, b);
    case SemiringKind::Boolean: return std::get<bool>(a) || std::get<bool>(b);
    case SemiringKind::RealField: return checked(std::get<double>(a) + std::get<double>(b));
    case SemiringKind::RationalField: return Rational(std::get<Rational>(a) + std::get<Rational>(b));
    case SemiringKind::Deformed: {
      if (std::holds_alternative<NegInf>(a)) return b;
      if (std::holds_alternative<NegInf>(b)) return a;
      const double x = std::get<double>(a);
      const double y = std::get<double>(b);
      // max + h ln(1 + e^{−|x−y|/h}) never overflows e^{w/h}.
      return std::max(x, y) + h_ * std::log1p(std::exp(-std::abs(x - y) / h_));
    }
    case SemiringKind::IntervalOver: break;
  }
  fail(ErrorKind::CarrierMismatch, "scalar operation on " + name());
}

Scalar Semiring::scalar_mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case SemiringKind::MaxPlus:
    case SemiringKind::Deformed:
      if (std::holds_alternative<NegInf>(a) || std::holds_alternative<NegInf>(b)) return neg_inf;
      return checked(std::get<double>(a) + std::get<double>(b));
    case SemiringKind::MinPlus:
      if (std::holds_alternative<PosInf>(a) || std::holds_alternative<PosInf>(b)) return pos_inf;
      return checked(std::get<double>(a) + std::get<double>(b));
    case SemiringKind::MaxMin: return ext_min(a, b);
    case SemiringKind::Boolean: return std::get<bool>(a) && std::get<bool>(b);
    case SemiringKind::MaxTimes:
    case SemiringKind::RealField: return checked(std::get<double>(a) * std::get<double>(b));
    case SemiringKind::RationalField: return Rational(std::get<Rational>(a) * std::get<Rational>(b));
    case SemiringKind::IntervalOver: break;
  }
  fail(ErrorKind::CarrierMismatch, "scalar operation on " + name());
}

Element Semiring::add(const Element& a, const Element& b) const {
  require(a);
  require(b);
  if (kind_ == SemiringKind::IntervalOver) {
    const auto& x = std::get<Interval>(a);
    const auto& y = std::get<Interval>(b);
    const Semiring in = inner();
    return Interval{in.scalar_add(x.lo, y.lo), in.scalar_add(x.hi, y.hi)};
  }
  return to_element(scalar_add(to_scalar(a), to_scalar(b)));
}

Element Semiring::mul(const Element& a, const Element& b) const {
  require(a);
  require(b);
  if (kind_ == SemiringKind::IntervalOver) {
    const auto& x = std::get<Interval>(a);
    const auto& y = std::get<Interval>(b);
    const Semiring in = inner();
    return Interval{in.scalar_mul(x.lo, y.lo), in.scalar_mul(x.hi, y.hi)};
  }
  return to_element(scalar_mul(to_scalar(a), to_scalar(b)));
}

bool Semiring::leq(const Element& a, const Element& b) const {
  if (!idempotent()) fail(ErrorKind::NotIdempotent, "no standard order on " + name());
  return add(a, b) == b;
}

Element Semiring::inverse(const Element& a) const {
  require(a);
  if (!semifield()) fail(ErrorKind::NotSemifield, name() + " is not a semifield");
  if (a == zero()) fail(ErrorKind::ZeroDivision, "inverse of zero in " + name());
  switch (kind_) {
    case SemiringKind::MaxPlus:
    case SemiringKind::MinPlus:
    case SemiringKind::Deformed: return -std::get<double>(a);
    case SemiringKind::MaxTimes:
    case SemiringKind::RealField: return checked(1.0 / std::get<double>(a));
    case SemiringKind::RationalField: return Rational(1 / std::get<Rational>(a));
    default: break;
  }
  fail(ErrorKind::NotSemifield, name() + " is not a semifield");
}

Element Semiring::star(const Element& a, StarPolicy policy) const {
  require(a);
  const auto diverges = [&]() -> Element {
    fail(ErrorKind::StarDiverges, "star(" + render(a) + ") diverges in " + name());
  };
  switch (kind_) {
    case SemiringKind::IntervalOver: {
      const auto& iv = std::get<Interval>(a);
      const Semiring in = inner();
      return Interval{to_scalar(in.star(to_element(iv.lo))), to_scalar(in.star(to_element(iv.hi)))};
    }
    case SemiringKind::RealField: {
      const double x = std::get<double>(a);
      if (policy == StarPolicy::Analytic && x == 1.0) fail(ErrorKind::ZeroDivision, "analytic star(1) is 1/0");
      if (!(std::abs(x) < 1.0 || policy == StarPolicy::Analytic)) return diverges();
      return checked(1.0 / (1.0 - x));
    }
    case SemiringKind::RationalField: {
      const Rational& x = std::get<Rational>(a);
      if (policy == StarPolicy::Analytic && x == 1) fail(ErrorKind::ZeroDivision, "analytic star(1) is 1/0");
      if (!(abs(x) < 1 || policy == StarPolicy::Analytic)) return diverges();
      return Rational(1 / (1 - x));
    }
    case SemiringKind::Deformed: {
      // Image of 1/(1 − u) under u = e^{w/h}; converges for u < 1.
      if (is_neg_inf(a)) return 0.0;
      const double w = std::get<double>(a);
      if (w >= 0.0) return diverges();
      return -h_ * std::log1p(-std::exp(w / h_));
    }
    default:
      if (!leq(a, one())) return diverges();
      return one();
  }
}

bool Semiring::equivalent(const Element& a, const Element& b) const {
  if (kind_ != SemiringKind::Deformed) return a == b;
  const double* x = std::get_if<double>(&a);
  const double* y = std::get_if<double>(&b);
  if (x == nullptr || y == nullptr) return a == b;
  return std::abs(*x - *y) <= 1e-12 * std::max({1.0, std::abs(*x), std::abs(*y)});
}

DeformationParams::DeformationParams(double h) : h_(h) {
  if (!(h > 0.0) || !std::isfinite(h))
    fail(ErrorKind::InvariantViolation, "deformation parameter h must be a positive real");
}

Element dequantize(DeformationParams p, double u) {
  if (!(u >= 0.0)) fail(ErrorKind::NegativeInput, "dequantize needs u >= 0");
  if (u == 0.0) return neg_inf;
  return p.h() * std::log(u);
}

namespace {

double residual(const Element& x, const Element& y) {
  if (x == y) return 0.0;
  if (!is_real(x) || !is_real(y)) return HUGE_VAL;
  return std::abs(std::get<double>(x) - std::get<double>(y));
}

}  // namespace

HomomorphismReport homomorphism_check(DeformationParams p, double u1, double u2) {
  const Semiring s = Semiring::deformed(p.h());
  const Element w1 = dequantize(p, u1);
  const Element w2 = dequantize(p, u2);
  return {residual(dequantize(p, u1 + u2), s.add(w1, w2)),
          residual(dequantize(p, u1 * u2), s.mul(w1, w2))};
}

}  // namespace idem
