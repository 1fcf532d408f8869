#ifndef PCZ_TOOLS_EXPRESSIONS_HPP
#define PCZ_TOOLS_EXPRESSIONS_HPP

#include <functional>
#include <string>

#include "pcz/types.hpp"

namespace pcz::tools {

/// Builtin scalar coefficient expressions: a numeric constant, `psi`
/// (the classical almost automorphic signal), `psi-step` (its piecewise
/// constant form psi([t])) or `sin:w`.
struct ScalarExpr {
  std::function<double(double)> fn;
  bool piecewise = false;  // jumps at the integers
  std::string repr;
};

ScalarExpr parse_scalar_expr(const std::string& text);

/// "lo:hi" with integer endpoints, lo < hi.
Window parse_window(const std::string& text);

}  // namespace pcz::tools

#endif
