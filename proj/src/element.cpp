#include "idem/element.hpp"

#include "idem/error.hpp"

#include <cstdio>

namespace idem {

Element to_element(const Scalar& s) {
  return std::visit([](const auto& v) -> Element { return v; }, s);
}

Scalar to_scalar(const Element& e) {
  return std::visit(
      [](const auto& v) -> Scalar {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Interval>) {
          fail(ErrorKind::CarrierMismatch, "interval where a scalar was expected");
        } else {
          return v;
        }
      },
      e);
}

double real_of(const Element& e) {
  if (const double* d = std::get_if<double>(&e)) return *d;
  fail(ErrorKind::CarrierMismatch, "expected a finite real, got " + render(e));
}

namespace {

std::string render_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

struct Renderer {
  std::string operator()(NegInf) const { return "-inf"; }
  std::string operator()(PosInf) const { return "inf"; }
  std::string operator()(double v) const { return render_real(v); }
  std::string operator()(const Rational& q) const {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
  }
  std::string operator()(bool b) const { return b ? "true" : "false"; }
  std::string operator()(const Interval& iv) const {
    return "[" + render(iv.lo) + "," + render(iv.hi) + "]";
  }
};

}  // namespace

std::string render(const Element& e) { return std::visit(Renderer{}, e); }
std::string render(const Scalar& s) { return std::visit(Renderer{}, s); }

}  // namespace idem
