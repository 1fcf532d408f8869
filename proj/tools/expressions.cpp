#include "expressions.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "pcz/signals.hpp"

namespace pcz::tools {

namespace {

double parse_number(const std::string& s, const std::string& context) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse number '" + s + "' in " + context);
  }
}

}  // namespace

ScalarExpr parse_scalar_expr(const std::string& text) {
  ScalarExpr e;
  e.repr = text;
  if (text == "psi") {
    e.fn = [](double t) { return psi(t); };
    return e;
  }
  if (text == "psi-step") {
    e.fn = [](double t) { return psi_step(t); };
    e.piecewise = true;
    return e;
  }
  if (text.rfind("sin:", 0) == 0) {
    const double omega = parse_number(text.substr(4), "sin:<omega>");
    e.fn = [omega](double t) { return std::sin(omega * t); };
    return e;
  }
  const double c = parse_number(text, "coefficient expression");
  e.fn = [c](double) { return c; };
  return e;
}

Window parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ConfigError("window must be lo:hi, got '" + text + "'");
  const double lo = parse_number(text.substr(0, colon), "window");
  const double hi = parse_number(text.substr(colon + 1), "window");
  const int ilo = static_cast<int>(lo);
  const int ihi = static_cast<int>(hi);
  if (lo != ilo || hi != ihi) throw ConfigError("window endpoints must be integers");
  if (ilo >= ihi) throw ConfigError("window must satisfy lo < hi");
  return Window{ilo, ihi};
}

}  // namespace pcz::tools
