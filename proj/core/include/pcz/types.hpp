#ifndef PCZ_TYPES_HPP
#define PCZ_TYPES_HPP

#include <stdexcept>
#include <string>

namespace pcz {

/// Integer window [lo, hi]. Grid functions use it as a piece range
/// (pieces [n, n+1) for lo <= n < hi, left limits at lo < n <= hi);
/// sequences use it inclusively at both ends.
struct Window {
  int lo = 0;
  int hi = 0;

  int pieces() const { return hi - lo; }
  int count() const { return hi - lo + 1; }
  bool contains_piece(int n) const { return n >= lo && n < hi; }
  bool operator==(const Window&) const = default;
};

inline Window intersect(Window a, Window b) {
  return Window{a.lo > b.lo ? a.lo : b.lo, a.hi < b.hi ? a.hi : b.hi};
}

/// Argument outside the represented domain.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Operands with mismatched window / sampling density / dimension.
class ShapeError : public std::invalid_argument {
public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Invalid configuration (bad parity, nonpositive tolerances, ...).
class ConfigError : public std::invalid_argument {
public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical contract could not be met (refused dichotomy, ill-posed
/// reduction, divergent iteration). CLI maps these to exit code 3.
class NumericalContractError : public std::runtime_error {
public:
  explicit NumericalContractError(const std::string& what) : std::runtime_error(what) {}
};

class IllPosedError : public NumericalContractError {
public:
  explicit IllPosedError(const std::string& what) : NumericalContractError(what) {}
};

class DichotomyError : public NumericalContractError {
public:
  explicit DichotomyError(const std::string& what) : NumericalContractError(what) {}
};

class ConvergenceError : public NumericalContractError {
public:
  explicit ConvergenceError(const std::string& what) : NumericalContractError(what) {}
};

}  // namespace pcz

#endif
