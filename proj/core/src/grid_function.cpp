#include "pcz/grid_function.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace pcz {

namespace {

constexpr double kLatticeSnap = 1e-9;  // |t - lattice point| treated as exact

double euclidean_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

void require_same_shape(const GridFunction& f, const GridFunction& g, const char* op) {
  if (!f.same_shape(g))
    throw ShapeError(std::string(op) + ": operands differ in window, sampling density or dim");
}

}  // namespace

GridFunction::GridFunction(Window window, int samples_per_unit, int dim)
    : window_(window), samples_per_unit_(samples_per_unit), dim_(dim) {
  if (window.pieces() < 1) throw ConfigError("GridFunction: window must contain at least one piece");
  if (samples_per_unit < 1) throw ConfigError("GridFunction: samples_per_unit must be positive");
  if (dim < 1) throw ConfigError("GridFunction: dim must be >= 1");
  interior_.assign(static_cast<std::size_t>(window.pieces()) * samples_per_unit * dim, 0.0);
  left_limits_.assign(static_cast<std::size_t>(window.pieces()) * dim, 0.0);
}

GridFunction GridFunction::from_continuous(
    Window window, int samples_per_unit, int dim,
    const std::function<void(double, std::span<double>)>& fn) {
  GridFunction g(window, samples_per_unit, dim);
  for (int n = window.lo; n < window.hi; ++n)
    for (int j = 0; j < samples_per_unit; ++j) fn(g.time_at(n, j), g.value(n, j));
  for (int n = window.lo + 1; n <= window.hi; ++n) fn(static_cast<double>(n), g.left_limit(n));
  return g;
}

GridFunction GridFunction::from_continuous_scalar(Window window, int samples_per_unit,
                                                  const std::function<double(double)>& fn) {
  return from_continuous(window, samples_per_unit, 1,
                         [&fn](double t, std::span<double> out) { out[0] = fn(t); });
}

GridFunction GridFunction::constant(Window window, int samples_per_unit,
                                    std::span<const double> value) {
  GridFunction g(window, samples_per_unit, static_cast<int>(value.size()));
  for (std::size_t i = 0; i < g.interior_.size(); ++i) g.interior_[i] = value[i % value.size()];
  for (std::size_t i = 0; i < g.left_limits_.size(); ++i)
    g.left_limits_[i] = value[i % value.size()];
  return g;
}

GridFunction GridFunction::constant_scalar(Window window, int samples_per_unit, double value) {
  return constant(window, samples_per_unit, std::span<const double>(&value, 1));
}

std::span<const double> GridFunction::value(int piece, int j) const {
  const std::size_t off =
      ((static_cast<std::size_t>(piece - window_.lo) * samples_per_unit_) + j) * dim_;
  return {interior_.data() + off, static_cast<std::size_t>(dim_)};
}

std::span<double> GridFunction::value(int piece, int j) {
  const std::size_t off =
      ((static_cast<std::size_t>(piece - window_.lo) * samples_per_unit_) + j) * dim_;
  return {interior_.data() + off, static_cast<std::size_t>(dim_)};
}

std::span<const double> GridFunction::left_limit(int n) const {
  if (n <= window_.lo || n > window_.hi)
    throw DomainError("left_limit: integer " + std::to_string(n) + " outside (" +
                      std::to_string(window_.lo) + ", " + std::to_string(window_.hi) + "]");
  const std::size_t off = static_cast<std::size_t>(n - window_.lo - 1) * dim_;
  return {left_limits_.data() + off, static_cast<std::size_t>(dim_)};
}

std::span<double> GridFunction::left_limit(int n) {
  if (n <= window_.lo || n > window_.hi)
    throw DomainError("left_limit: integer " + std::to_string(n) + " outside (" +
                      std::to_string(window_.lo) + ", " + std::to_string(window_.hi) + "]");
  const std::size_t off = static_cast<std::size_t>(n - window_.lo - 1) * dim_;
  return {left_limits_.data() + off, static_cast<std::size_t>(dim_)};
}

std::vector<double> GridFunction::eval(double t, Interpolation interp) const {
  if (!(t >= window_.lo && t < window_.hi))
    throw DomainError("eval: t=" + std::to_string(t) + " outside [" + std::to_string(window_.lo) +
                      ", " + std::to_string(window_.hi) + ")");
  const double pos = (t - window_.lo) * samples_per_unit_;
  const long long idx = std::llround(pos);
  const long long total = static_cast<long long>(pieces()) * samples_per_unit_;
  if (std::abs(pos - static_cast<double>(idx)) <= kLatticeSnap * samples_per_unit_ && idx < total) {
    const int piece = window_.lo + static_cast<int>(idx / samples_per_unit_);
    const int j = static_cast<int>(idx % samples_per_unit_);
    auto v = value(piece, j);
    return {v.begin(), v.end()};
  }
  if (interp == Interpolation::lattice_only)
    throw DomainError("eval: t=" + std::to_string(t) +
                      " is not a lattice point (pass Interpolation::linear to interpolate)");
  int piece = static_cast<int>(std::floor(t));
  if (piece < window_.lo) piece = window_.lo;
  if (piece >= window_.hi) piece = window_.hi - 1;
  double u = (t - piece) * samples_per_unit_;
  int j0 = static_cast<int>(std::floor(u));
  if (j0 >= samples_per_unit_) j0 = samples_per_unit_ - 1;
  const double frac = u - j0;
  auto lft = value(piece, j0);
  std::span<const double> rgt =
      (j0 + 1 < samples_per_unit_) ? value(piece, j0 + 1) : left_limit(piece + 1);
  std::vector<double> out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = (1.0 - frac) * lft[i] + frac * rgt[i];
  return out;
}

double GridFunction::eval_scalar(double t, Interpolation interp) const {
  return eval(t, interp)[0];
}

std::vector<double> GridFunction::eval_closed(int piece, double t, Interpolation interp) const {
  if (!window_.contains_piece(piece))
    throw DomainError("eval_closed: piece " + std::to_string(piece) + " outside window");
  if (!(t >= piece - kLatticeSnap && t <= piece + 1 + kLatticeSnap))
    throw DomainError("eval_closed: t outside closed piece");
  const double u = (t - piece) * samples_per_unit_;
  const long long idx = std::llround(u);
  if (std::abs(u - static_cast<double>(idx)) <= kLatticeSnap * samples_per_unit_) {
    if (idx >= samples_per_unit_) {
      auto v = left_limit(piece + 1);
      return {v.begin(), v.end()};
    }
    auto v = value(piece, static_cast<int>(idx));
    return {v.begin(), v.end()};
  }
  if (interp == Interpolation::lattice_only)
    throw DomainError("eval_closed: t is not a lattice point");
  int j0 = static_cast<int>(std::floor(u));
  if (j0 >= samples_per_unit_) j0 = samples_per_unit_ - 1;
  if (j0 < 0) j0 = 0;
  const double frac = u - j0;
  auto lft = value(piece, j0);
  std::span<const double> rgt =
      (j0 + 1 < samples_per_unit_) ? value(piece, j0 + 1) : left_limit(piece + 1);
  std::vector<double> out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = (1.0 - frac) * lft[i] + frac * rgt[i];
  return out;
}

bool GridFunction::all_finite() const {
  for (double x : interior_)
    if (!std::isfinite(x)) return false;
  for (double x : left_limits_)
    if (!std::isfinite(x)) return false;
  return true;
}

void GridFunction::validate() const {
  if (!all_finite()) throw ShapeError("GridFunction: non-finite value in samples or left limits");
}

GridFunction closure_completion(const GridFunction& f) {
  f.validate();
  return f;
}

namespace {

template <typename Op>
GridFunction zip(const GridFunction& f, const GridFunction& g, Op op, const char* name) {
  require_same_shape(f, g, name);
  GridFunction out(f.window(), f.samples_per_unit(), f.dim());
  const auto& a = f.interior_data();
  const auto& b = g.interior_data();
  auto& o = out.interior_data();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = op(a[i], b[i]);
  const auto& al = f.left_limit_data();
  const auto& bl = g.left_limit_data();
  auto& ol = out.left_limit_data();
  for (std::size_t i = 0; i < ol.size(); ++i) ol[i] = op(al[i], bl[i]);
  return out;
}

}  // namespace

GridFunction add(const GridFunction& f, const GridFunction& g) {
  return zip(f, g, [](double x, double y) { return x + y; }, "add");
}

GridFunction subtract(const GridFunction& f, const GridFunction& g) {
  return zip(f, g, [](double x, double y) { return x - y; }, "subtract");
}

GridFunction multiply(const GridFunction& f, const GridFunction& g) {
  return zip(f, g, [](double x, double y) { return x * y; }, "multiply");
}

GridFunction scale(const GridFunction& f, double a) {
  GridFunction out(f.window(), f.samples_per_unit(), f.dim());
  const auto& src = f.interior_data();
  auto& o = out.interior_data();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = a * src[i];
  const auto& sl = f.left_limit_data();
  auto& ol = out.left_limit_data();
  for (std::size_t i = 0; i < ol.size(); ++i) ol[i] = a * sl[i];
  return out;
}

GridFunction poly_apply(const std::vector<PolyTerm>& poly, const std::vector<GridFunction>& fs) {
  if (fs.empty()) throw ShapeError("poly_apply: needs at least one grid function");
  for (const auto& term : poly)
    if (term.exponents.size() != fs.size())
      throw ShapeError("poly_apply: term arity " + std::to_string(term.exponents.size()) +
                       " does not match " + std::to_string(fs.size()) + " functions");
  for (std::size_t i = 1; i < fs.size(); ++i) require_same_shape(fs[0], fs[i], "poly_apply");

  const Window w = fs[0].window();
  const int m = fs[0].samples_per_unit();
  const int p = fs[0].dim();
  GridFunction result(w, m, p);  // zero
  const std::vector<double> one(static_cast<std::size_t>(p), 1.0);
  for (const auto& term : poly) {
    GridFunction acc = GridFunction::constant(w, m, one);
    for (std::size_t v = 0; v < fs.size(); ++v)
      for (int e = 0; e < term.exponents[v]; ++e) acc = multiply(acc, fs[v]);
    result = add(result, scale(acc, term.coefficient));
  }
  return result;
}

NormReport norm_report(const GridFunction& f) {
  NormReport r;
  r.sup_norm = -1.0;
  for (int n = f.window().lo; n < f.window().hi; ++n)
    for (int j = 0; j < f.samples_per_unit(); ++j) {
      const double nv = euclidean_norm(f.value(n, j));
      if (nv > r.sup_norm) {
        r.sup_norm = nv;
        r.attained_at = f.time_at(n, j);
      }
    }
  for (int n = f.window().lo + 1; n <= f.window().hi; ++n) {
    const double nv = euclidean_norm(f.left_limit(n));
    if (nv > r.sup_norm) {
      r.sup_norm = nv;
      r.attained_at = static_cast<double>(n);
    }
  }
  r.jump_bound = 0.0;
  for (int n = f.window().lo + 1; n < f.window().hi; ++n) {
    const double d = euclidean_distance(f.value(n, 0), f.left_limit(n));
    if (d > r.jump_bound) r.jump_bound = d;
  }
  return r;
}

GridFunction restrict_window(const GridFunction& f, Window sub) {
  if (sub.lo < f.window().lo || sub.hi > f.window().hi)
    throw DomainError("restrict_window: sub-window exceeds function window");
  if (sub.pieces() < 1) throw DomainError("restrict_window: empty sub-window");
  GridFunction out(sub, f.samples_per_unit(), f.dim());
  for (int n = sub.lo; n < sub.hi; ++n)
    for (int j = 0; j < f.samples_per_unit(); ++j) {
      auto src = f.value(n, j);
      auto dst = out.value(n, j);
      for (int i = 0; i < f.dim(); ++i) dst[i] = src[i];
    }
  for (int n = sub.lo + 1; n <= sub.hi; ++n) {
    auto src = f.left_limit(n);
    auto dst = out.left_limit(n);
    for (int i = 0; i < f.dim(); ++i) dst[i] = src[i];
  }
  return out;
}

}  // namespace pcz
