#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "pcz/diagnostics.hpp"
#include "pcz/extension.hpp"
#include "pcz/signals.hpp"

using namespace pcz;

namespace {

// Exactly 1-periodic on the lattice: the same per-piece pattern in every
// piece, left limits included.
GridFunction periodic_pattern(Window w, const std::vector<double>& pattern) {
  GridFunction g(w, static_cast<int>(pattern.size()), 1);
  for (int n = w.lo; n < w.hi; ++n) {
    for (int j = 0; j < g.samples_per_unit(); ++j)
      g.value(n, j)[0] = pattern[static_cast<std::size_t>(j)];
    g.left_limit(n + 1)[0] = pattern.back();
  }
  return g;
}

GridFunction two_tone(Window w, int m) {
  return GridFunction::from_continuous_scalar(w, m, [](double t) {
    return std::sin(2.0 * std::numbers::pi * t) +
           std::sin(2.0 * std::numbers::pi * std::numbers::sqrt2 * t);
  });
}

}  // namespace

TEST_CASE("recurrence defect vanishes exactly for lattice-periodic functions") {
  const GridFunction g = periodic_pattern({-8, 8}, {0.25, -1.5, 3.0, 0.0});
  for (int s : {1, 2, 5}) {
    const ShiftDefect d = recurrence_defect(g, s, {-2, 2});
    CHECK(d.forward == 0.0);
    CHECK(d.backward == 0.0);
  }
  const GridFunction c = GridFunction::constant_scalar({-8, 8}, 4, 3.25);
  const ShiftDefect d = recurrence_defect(c, 7, {-1, 1});
  CHECK(d.combined() == 0.0);
}

TEST_CASE("recurrence defect window preconditions") {
  const GridFunction g = psi_step_grid({-8, 8}, 4);
  CHECK_THROWS_AS((void)recurrence_defect(g, 5, {-6, 6}), DomainError);
  CHECK_THROWS_AS((void)recurrence_defect(g, 0, {-2, 2}), ConfigError);
  CHECK_NOTHROW((void)recurrence_defect(g, 5, {-3, 3}));
}

TEST_CASE("recurrence defect matches the brute-force oracle") {
  const GridFunction g = psi_step_grid({-32, 32}, 8);
  for (int s : {1, 3, 7, 16}) {
    const ShiftDefect d = recurrence_defect(g, s, {-16, 16});
    const auto o = oracles::brute_force_defect(g, s, {-16, 16});
    CHECK(d.forward == doctest::Approx(o.forward).epsilon(1e-14));
    CHECK(d.backward == doctest::Approx(o.backward).epsilon(1e-14));
  }
}

TEST_CASE("zaa_scan finds the periodic shift") {
  const GridFunction g = periodic_pattern({-12, 12}, {1.0, 2.0});
  const RecurrenceReport rep = zaa_scan(g, 4);
  CHECK(rep.best_shift == 1);
  CHECK(rep.min_defect() == 0.0);
  CHECK(rep.shifts_tested == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("zaa_scan on the two-tone signal beats shift 1") {
  const GridFunction g = two_tone({-32, 32}, 64);
  const RecurrenceReport rep = zaa_scan(g, 16);
  const double at_one = rep.defect_profile.front().second;
  CHECK(rep.defect_profile.front().first == 1);
  CHECK(rep.min_defect() < at_one);
  CHECK(rep.best_shift > 1);
}

TEST_CASE("zaa_scan minimum is antitone in max_shift") {
  const GridFunction g = two_tone({-32, 32}, 32);
  double prev = std::numeric_limits<double>::infinity();
  for (int ms : {2, 4, 8, 16}) {
    const double d = zaa_scan(g, ms).min_defect();
    CHECK(d <= prev);
    prev = d;
  }
}

TEST_CASE("zaa_scan golden regression: psi step on [-32,32], max_shift 16") {
  // Pinned from the first run; independently reproduced by a plain
  // |psi(k+s)-psi(k)| sweep. The minimum defect is O(1): integer translates
  // of psi do not return uniformly at desk scale.
  const GridFunction g = psi_step_grid({-32, 32}, 64);
  const RecurrenceReport rep = zaa_scan(g, 16);
  CHECK(rep.best_shift == 16);
  CHECK(rep.min_defect() == doctest::Approx(1.1864771603453659).epsilon(1e-12));
}

TEST_CASE("zaa_scan window too small") {
  const GridFunction g = psi_step_grid({-4, 4}, 4);
  CHECK_THROWS_AS((void)zaa_scan(g, 4), DomainError);
}

TEST_CASE("uc_modulus basics") {
  const GridFunction c = GridFunction::constant_scalar({-4, 4}, 16, 7.5);
  for (const auto& [delta, omega] : uc_modulus(c, {1.0 / 32, 0.25, 1.0}).modulus_table)
    CHECK(omega == 0.0);

  // a jump is seen at every delta through the left-limit pair
  const GridFunction stp = psi_step_grid({-8, 8}, 16);
  const double jump = norm_report(stp).jump_bound;
  for (const auto& [delta, omega] : uc_modulus(stp, {1.0 / 512, 1.0 / 16, 1.0}).modulus_table)
    CHECK(omega >= jump);

  CHECK_THROWS_AS((void)uc_modulus(c, {0.0}), ConfigError);
  CHECK_THROWS_AS((void)uc_modulus(c, {1.5}), ConfigError);
}

TEST_CASE("uc_modulus is nondecreasing with omega(0+) limited by continuity") {
  const GridFunction g = two_tone({-8, 8}, 32);
  const auto rep = uc_modulus(g, default_deltas(32));
  double prev = -1.0;
  for (const auto& [delta, omega] : rep.modulus_table) {
    CHECK(omega >= prev);
    prev = omega;
  }
  // continuous fixture: omega below the lattice resolution is zero
  CHECK(rep.modulus_table.front().second == 0.0);
}

TEST_CASE("classify_kaa: periodic AA fixture is consistent") {
  // Exactly 8-periodic sequence extended linearly: recurrence defect 0 at
  // shift 8, uniformly continuous, hence consistent-with-KAA.
  std::array<double, 8> table{};
  for (int k = 0; k < 8; ++k)
    table[static_cast<std::size_t>(k)] = std::sin(2.0 * std::numbers::pi * 3.0 * k / 8.0);
  const AASequence s = AASequence::from_rule_scalar(
      {-34, 34}, [&table](int k) { return table[static_cast<std::size_t>(((k % 8) + 8) % 8)]; });
  const GridFunction lin = linear_extension(s, 16, {-24, 24});
  const ClassifyResult res = classify_kaa(lin, 1e-2, 10);
  CHECK(res.verdict == Verdict::consistent_with_kaa);
  CHECK(res.scan.min_defect() == 0.0);
  CHECK(res.scan.best_shift == 8);
}

TEST_CASE("classify_kaa: step extensions fail UC") {
  const GridFunction stp = step_extension(psi_sequence({-34, 34}), 64, {-32, 32});
  CHECK(classify_kaa(stp, 1e-2, 16).verdict == Verdict::fails_uc);
}

TEST_CASE("classify_kaa: seeded noise fails recurrence, not UC") {
  const AASequence noise = noise_sequence({-34, 34}, kDefaultSeed);
  const GridFunction lin = linear_extension(noise, 64, {-32, 32});
  const ClassifyResult res = classify_kaa(lin, 1e-2, 16);
  CHECK(res.verdict == Verdict::fails_recurrence);
  CHECK(res.uc.is_uc_at(1e-2));
  CHECK(res.scan.min_defect() > 1e-2);
}

TEST_CASE("classify_kaa: linear psi extension, measured behaviour") {
  // The UC half holds at eps = 1e-2; the recurrence half does not: the
  // smallest translate defect reachable inside [-32,32] is O(1) (golden
  // 1.18648 at shift 16), so the verdict is fails-recurrence. Consistency
  // for psi would need translate returns that only occur at shifts far
  // beyond any window derivable from this data.
  const GridFunction lin = linear_extension(psi_sequence({-34, 34}), 64, {-32, 32});
  const ClassifyResult res = classify_kaa(lin, 1e-2, 16);
  CHECK(res.uc.is_uc_at(1e-2));
  CHECK(res.verdict == Verdict::fails_recurrence);
  CHECK(res.scan.min_defect() == doctest::Approx(1.1864771603453659).epsilon(1e-12));
}

TEST_CASE("recurrent fixtures do not decay at infinity") {
  // contrapositive fixture check: a nonzero recurrent signal keeps its mass
  // in the far tail of the window (a decaying one could not)
  const GridFunction stp = psi_step_grid({-32, 32}, 8);
  const double tail = norm_report(restrict_window(stp, {24, 32})).sup_norm;
  const double global = norm_report(stp).sup_norm;
  CHECK(tail >= 0.5 * global);

  const GridFunction decaying = GridFunction::from_continuous_scalar(
      {0, 32}, 8, [](double t) { return std::exp(-t); });
  CHECK(norm_report(restrict_window(decaying, {24, 32})).sup_norm <
        1e-9 * norm_report(decaying).sup_norm);
}

TEST_CASE("decomposition_check") {
  const GridFunction g = psi_step_grid({-32, 32}, 16);
  const GridFunction h = GridFunction::from_continuous_scalar(
      {0, 32}, 16, [](double t) { return std::exp(-t); });
  const DecompositionReport rep = decomposition_check(g, h);
  CHECK(rep.bound_satisfied);
  CHECK(rep.h_norm == 1.0);
  CHECK(rep.g_norm + rep.h_norm <= 3.0 * rep.f_norm);

  // h = 0 and g = 0 are trivially within the bound
  CHECK(decomposition_check(g, GridFunction({0, 32}, 16, 1)).bound_satisfied);
  CHECK(decomposition_check(GridFunction({-32, 32}, 16, 1), h).bound_satisfied);

  // empty overlap and negative-axis h are rejected
  const GridFunction far = psi_step_grid({-32, -16}, 16);
  CHECK_THROWS_AS((void)decomposition_check(far, h), DomainError);
  const GridFunction neg = GridFunction::constant_scalar({-4, 4}, 16, 1.0);
  CHECK_THROWS_AS((void)decomposition_check(g, neg), DomainError);
}
