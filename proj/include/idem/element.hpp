#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <variant>

namespace idem {

/// Arbitrary-precision rational, always held in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct NegInf {
  friend bool operator==(NegInf, NegInf) = default;
};
struct PosInf {
  friend bool operator==(PosInf, PosInf) = default;
};

inline constexpr NegInf neg_inf{};
inline constexpr PosInf pos_inf{};

/// A value of one non-interval carrier. Infinities are explicit
/// alternatives; a `double` alternative is always finite.
using Scalar = std::variant<NegInf, PosInf, double, Rational, bool>;

/// Closed interval [lo, hi] over an idempotent carrier, lo ⪯ hi.
struct Interval {
  Scalar lo;
  Scalar hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

using Element = std::variant<NegInf, PosInf, double, Rational, bool, Interval>;

Element to_element(const Scalar& s);

/// Throws CarrierMismatch for an Interval.
Scalar to_scalar(const Element& e);

inline bool is_neg_inf(const Element& e) { return std::holds_alternative<NegInf>(e); }
inline bool is_pos_inf(const Element& e) { return std::holds_alternative<PosInf>(e); }
inline bool is_real(const Element& e) { return std::holds_alternative<double>(e); }

/// The finite real payload; throws CarrierMismatch otherwise.
double real_of(const Element& e);

/// Render with the text-format token syntax: reals at 9 significant
/// digits, rationals reduced, specials as `inf`/`-inf`/`true`/`false`.
std::string render(const Element& e);
std::string render(const Scalar& s);

}  // namespace idem
