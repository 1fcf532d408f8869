#include <doctest.h>

#include <cmath>

#include "pcz/extension.hpp"
#include "pcz/grid_function.hpp"
#include "pcz/signals.hpp"

using namespace pcz;

namespace {

AASequence seq_of(std::initializer_list<double> values, int lo) {
  AASequence s({lo, lo + static_cast<int>(values.size()) - 1}, 1);
  int k = lo;
  for (double v : values) s.value(k++)[0] = v;
  return s;
}

}  // namespace

TEST_CASE("eval returns stored lattice samples") {
  const GridFunction c = GridFunction::constant_scalar({-2, 3}, 4, 2.5);
  CHECK(c.eval_scalar(-2.0) == 2.5);
  CHECK(c.eval_scalar(0.75) == 2.5);
  CHECK(c.eval_scalar(2.75) == 2.5);

  const GridFunction stp = step_extension(seq_of({1.0, 2.0}, 0), 4, {0, 2});
  CHECK(stp.eval_scalar(0.75) == 1.0);
  CHECK(stp.eval_scalar(1.0) == 2.0);
  CHECK(stp.left_limit(1)[0] == 1.0);
}

TEST_CASE("eval interpolates linearly inside a piece only") {
  const GridFunction lin = linear_extension(seq_of({0.0, 1.0, 0.0}, 0), 4, {0, 2});
  CHECK(lin.eval_scalar(0.5) == 0.5);  // lattice point
  CHECK(lin.eval_scalar(0.3, Interpolation::linear) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK_THROWS_AS((void)lin.eval_scalar(0.3), DomainError);
  CHECK_THROWS_AS((void)lin.eval_scalar(2.0), DomainError);
  CHECK_THROWS_AS((void)lin.eval_scalar(-0.1, Interpolation::linear), DomainError);

  // last sub-interval anchors at the left limit, never the next piece
  const GridFunction stp = step_extension(seq_of({1.0, 5.0}, 0), 4, {0, 2});
  CHECK(stp.eval_scalar(0.9, Interpolation::linear) == 1.0);
}

TEST_CASE("left limits at integers") {
  const GridFunction lin = linear_extension(seq_of({0.0, 1.0}, 0), 8, {0, 1});
  CHECK(lin.left_limit(1)[0] == 1.0);  // continuity forces f(1^-) = f(1)

  const GridFunction stp = step_extension(seq_of({3.0}, 0), 8, {0, 1});
  CHECK(stp.left_limit(1)[0] == 3.0);

  const GridFunction g = psi_step_grid({0, 2}, 8);
  CHECK(g.left_limit(1)[0] == doctest::Approx(0.24740395925452294).epsilon(1e-15));
  CHECK(g.left_limit(1)[0] == std::sin(0.25));
  CHECK_THROWS_AS((void)g.left_limit(0), DomainError);
  CHECK_THROWS_AS((void)g.left_limit(3), DomainError);
}

TEST_CASE("closure completion is the canonical closed representation") {
  const GridFunction lin = linear_extension(seq_of({0.0, 1.0, -1.0}, 0), 8, {0, 2});
  const GridFunction closed = closure_completion(lin);
  CHECK(closed.interior_data() == lin.interior_data());
  CHECK(closed.left_limit_data() == lin.left_limit_data());

  // step example: the closed piece [0,1] ends at 1 (not 5)
  const GridFunction stp = step_extension(seq_of({1.0, 5.0}, 0), 4, {0, 2});
  const GridFunction fstp = closure_completion(stp);
  CHECK(fstp.eval_closed(0, 1.0)[0] == 1.0);
  CHECK(fstp.eval_closed(1, 1.0)[0] == 5.0);

  // idempotent, exactly
  const GridFunction twice = closure_completion(fstp);
  CHECK(twice.interior_data() == fstp.interior_data());
  CHECK(twice.left_limit_data() == fstp.left_limit_data());

  // psi([t]): closed right endpoint of [n, n+1] is psi(n)
  const GridFunction g = psi_step_grid({-3, 3}, 8);
  for (int n = -3; n < 3; ++n)
    CHECK(closure_completion(g).eval_closed(n, n + 1.0)[0] == psi(n));
}

TEST_CASE("algebra: identities are bitwise") {
  const GridFunction f = psi_step_grid({-8, 8}, 16);
  const GridFunction zero(f.window(), 16, 1);
  const GridFunction ones = GridFunction::constant_scalar(f.window(), 16, 1.0);

  const GridFunction fz = add(f, zero);
  CHECK(fz.interior_data() == f.interior_data());
  CHECK(fz.left_limit_data() == f.left_limit_data());

  const GridFunction fu = multiply(f, ones);
  CHECK(fu.interior_data() == f.interior_data());
  CHECK(fu.left_limit_data() == f.left_limit_data());
}

TEST_CASE("algebra: submultiplicativity on the lattice, exact") {
  const GridFunction f = psi_step_grid({-8, 8}, 16);
  const double nf = norm_report(f).sup_norm;
  const double nff = norm_report(multiply(f, f)).sup_norm;
  CHECK(nff <= nf * nf);

  // direct grid oracle for both sides
  double worst = 0.0, worst_sq = 0.0;
  for (int n = -8; n < 8; ++n) {
    worst = std::max(worst, std::abs(psi(n)));
    worst_sq = std::max(worst_sq, std::abs(psi(n) * psi(n)));
  }
  CHECK(nf == worst);
  CHECK(nff == worst_sq);
}

TEST_CASE("algebra: seeded triangle and submultiplicativity, p = 2") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = seeded_uniform(kDefaultSeed + trial, 2 * (4 * 8 + 4) * 2);
    GridFunction f({0, 4}, 8, 2), g({0, 4}, 8, 2);
    std::size_t k = 0;
    for (auto& x : f.interior_data()) x = u[k++];
    for (auto& x : f.left_limit_data()) x = u[k++];
    for (auto& x : g.interior_data()) x = u[k++];
    for (auto& x : g.left_limit_data()) x = u[k++];
    const double nf = norm_report(f).sup_norm;
    const double ng = norm_report(g).sup_norm;
    CHECK(norm_report(add(f, g)).sup_norm <= nf + ng);
    CHECK(norm_report(multiply(f, g)).sup_norm <= nf * ng);
  }
}

TEST_CASE("algebra: shape mismatch is rejected") {
  const GridFunction a = GridFunction::constant_scalar({0, 2}, 4, 1.0);
  const GridFunction b = GridFunction::constant_scalar({0, 2}, 8, 1.0);
  const GridFunction c = GridFunction::constant_scalar({0, 3}, 4, 1.0);
  CHECK_THROWS_AS((void)add(a, b), ShapeError);
  CHECK_THROWS_AS((void)multiply(a, c), ShapeError);
}

TEST_CASE("poly_apply") {
  const GridFunction f = psi_step_grid({-4, 4}, 8);
  const GridFunction g = GridFunction::from_continuous_scalar({-4, 4}, 8,
                                                              [](double t) { return std::cos(t); });

  // P(x) = x is the identity
  const GridFunction id = poly_apply({{1.0, {1}}}, {f});
  CHECK(id.interior_data() == f.interior_data());
  CHECK(id.left_limit_data() == f.left_limit_data());

  // P(x, y) = xy - yx vanishes (commutative entrywise product)
  const GridFunction comm = poly_apply({{1.0, {1, 1}}, {-1.0, {1, 1}}}, {f, g});
  for (double x : comm.interior_data()) CHECK(x == 0.0);
  for (double x : comm.left_limit_data()) CHECK(x == 0.0);

  // P(x) = x^2 squares every sample
  const GridFunction sq = poly_apply({{1.0, {2}}}, {f});
  for (int n = -4; n < 4; ++n) {
    const double v = psi(n);
    CHECK(sq.value(n, 3)[0] == v * v);
  }

  // constant term: all-zero exponents
  const GridFunction affine = poly_apply({{3.0, {0}}, {2.0, {1}}}, {f});
  for (int n = -4; n < 4; ++n) CHECK(affine.value(n, 0)[0] == 3.0 + 2.0 * psi(n));

  CHECK_THROWS_AS((void)poly_apply({{1.0, {1}}}, {f, g}), ShapeError);
}

TEST_CASE("norm_report") {
  const GridFunction c = GridFunction::constant_scalar({-4, 4}, 8, -2.0);
  const NormReport rc = norm_report(c);
  CHECK(rc.sup_norm == 2.0);
  CHECK(rc.jump_bound == 0.0);

  const AASequence s = psi_sequence({-18, 18});
  const GridFunction lin = linear_extension(s, 8, {-16, 16});
  CHECK(norm_report(lin).jump_bound == 0.0);

  const GridFunction stp = psi_step_grid({-16, 16}, 8);
  double expect = 0.0;
  for (int n = -15; n < 16; ++n) expect = std::max(expect, std::abs(psi(n) - psi(n - 1)));
  CHECK(norm_report(stp).jump_bound == expect);

  // jump bound <= 2 sup norm
  for (const GridFunction* f : {&c, &lin, &stp}) {
    const NormReport r = norm_report(*f);
    CHECK(r.jump_bound <= 2.0 * r.sup_norm);
  }
}

TEST_CASE("restrict_window") {
  const GridFunction f = psi_step_grid({-8, 8}, 4);
  const GridFunction sub = restrict_window(f, {-2, 3});
  CHECK(sub.window() == Window{-2, 3});
  for (int n = -2; n < 3; ++n)
    for (int j = 0; j < 4; ++j) CHECK(sub.value(n, j)[0] == f.value(n, j)[0]);
  for (int n = -1; n <= 3; ++n) CHECK(sub.left_limit(n)[0] == f.left_limit(n)[0]);
  CHECK_THROWS_AS((void)restrict_window(f, {-9, 0}), DomainError);
}

TEST_CASE("non-finite values are rejected by validate") {
  GridFunction f = GridFunction::constant_scalar({0, 1}, 4, 1.0);
  f.interior_data()[2] = std::nan("");
  CHECK_THROWS_AS(f.validate(), ShapeError);
}
