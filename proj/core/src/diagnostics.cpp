#include "pcz/diagnostics.hpp"

#include <cmath>
#include <string>

namespace pcz {

namespace {

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

ShiftDefect recurrence_defect(const GridFunction& f, int shift, Window test_window) {
  if (shift < 1) throw ConfigError("recurrence_defect: shift must be >= 1");
  if (test_window.pieces() < 1) throw DomainError("recurrence_defect: empty test window");
  if (test_window.lo - shift < f.window().lo || test_window.hi + shift > f.window().hi)
    throw DomainError("recurrence_defect: test window [" + std::to_string(test_window.lo) + ", " +
                      std::to_string(test_window.hi) + "] shifted by " + std::to_string(shift) +
                      " leaves the function window");
  ShiftDefect d;
  for (int n = test_window.lo; n < test_window.hi; ++n)
    for (int j = 0; j < f.samples_per_unit(); ++j) {
      const auto here = f.value(n, j);
      const double fwd = distance(f.value(n + shift, j), here);
      const double bwd = distance(f.value(n - shift, j), here);
      if (fwd > d.forward) d.forward = fwd;
      if (bwd > d.backward) d.backward = bwd;
    }
  for (int n = test_window.lo + 1; n <= test_window.hi; ++n) {
    const auto here = f.left_limit(n);
    const double fwd = distance(f.left_limit(n + shift), here);
    const double bwd = distance(f.left_limit(n - shift), here);
    if (fwd > d.forward) d.forward = fwd;
    if (bwd > d.backward) d.backward = bwd;
  }
  return d;
}

RecurrenceReport zaa_scan(const GridFunction& f, int max_shift,
                          std::optional<Window> test_window) {
  if (max_shift < 1) throw ConfigError("zaa_scan: max_shift must be >= 1");
  const Window tw = test_window.value_or(
      Window{f.window().lo + max_shift, f.window().hi - max_shift});
  if (tw.pieces() < 1)
    throw DomainError("zaa_scan: window too small for max_shift " + std::to_string(max_shift));

  RecurrenceReport rep;
  rep.test_window = tw;
  double best = -1.0;
  ShiftDefect best_defect;
  for (int s = 1; s <= max_shift; ++s) {
    const ShiftDefect d = recurrence_defect(f, s, tw);
    rep.shifts_tested.push_back(s);
    rep.defect_profile.emplace_back(s, d.combined());
    if (best < 0.0 || d.combined() < best) {
      best = d.combined();
      best_defect = d;
      rep.best_shift = s;
    }
  }
  rep.forward_defect = best_defect.forward;
  rep.backward_defect = best_defect.backward;
  return rep;
}

bool UCReport::is_uc_at(double eps) const {
  for (const auto& [delta, omega] : modulus_table)
    if (omega <= eps) return true;
  return false;
}

UCReport uc_modulus(const GridFunction& f, const std::vector<double>& deltas) {
  for (double d : deltas)
    if (!(d > 0.0 && d <= 1.0)) throw ConfigError("uc_modulus: deltas must lie in (0, 1]");

  // Lattice points in time order; a left limit sits at t = n just before the
  // interior sample at n, so jump pairs have distance zero.
  struct Point {
    double t;
    std::span<const double> v;
  };
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(f.pieces()) * (f.samples_per_unit() + 1));
  for (int n = f.window().lo; n < f.window().hi; ++n) {
    if (n > f.window().lo) pts.push_back({static_cast<double>(n), f.left_limit(n)});
    for (int j = 0; j < f.samples_per_unit(); ++j) pts.push_back({f.time_at(n, j), f.value(n, j)});
  }
  pts.push_back({static_cast<double>(f.window().hi), f.left_limit(f.window().hi)});

  UCReport rep;
  for (double delta : deltas) {
    double omega = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size() && pts[j].t - pts[i].t <= delta; ++j) {
        const double d = distance(pts[i].v, pts[j].v);
        if (d > omega) omega = d;
      }
    rep.modulus_table.emplace_back(delta, omega);
  }
  return rep;
}

std::vector<double> default_deltas(int samples_per_unit) {
  std::vector<double> out;
  double d = 0.5 / samples_per_unit;
  while (d < 1.0) {
    out.push_back(d);
    d *= 2.0;
  }
  out.push_back(1.0);
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::consistent_with_kaa: return "consistent-with-KAA";
    case Verdict::fails_uc: return "fails-UC";
    case Verdict::fails_recurrence: return "fails-recurrence";
  }
  return "unknown";
}

ClassifyResult classify_kaa(const GridFunction& f, double eps, int max_shift,
                            std::optional<std::vector<double>> deltas) {
  if (!(eps > 0.0)) throw ConfigError("classify_kaa: eps must be positive");
  ClassifyResult res;
  res.eps = eps;
  res.uc = uc_modulus(f, deltas ? *deltas : default_deltas(f.samples_per_unit()));
  res.scan = zaa_scan(f, max_shift);
  if (!res.uc.is_uc_at(eps))
    res.verdict = Verdict::fails_uc;
  else if (res.scan.min_defect() > eps)
    res.verdict = Verdict::fails_recurrence;
  else
    res.verdict = Verdict::consistent_with_kaa;
  return res;
}

DecompositionReport decomposition_check(const GridFunction& g, const GridFunction& h) {
  if (h.window().lo < 0)
    throw DomainError("decomposition_check: h must live on the nonnegative axis");
  if (g.dim() != h.dim() || g.samples_per_unit() != h.samples_per_unit())
    throw ShapeError("decomposition_check: g and h must share dim and sampling density");
  const Window overlap = intersect(g.window(), h.window());
  if (overlap.pieces() < 1) throw DomainError("decomposition_check: empty overlap");
  const GridFunction f = add(restrict_window(g, overlap), restrict_window(h, overlap));
  DecompositionReport rep;
  rep.g_norm = norm_report(g).sup_norm;
  rep.h_norm = norm_report(h).sup_norm;
  rep.f_norm = norm_report(f).sup_norm;
  rep.bound_satisfied = rep.g_norm + rep.h_norm <= 3.0 * rep.f_norm;
  return rep;
}

}  // namespace pcz
