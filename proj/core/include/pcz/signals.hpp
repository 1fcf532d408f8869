#ifndef PCZ_SIGNALS_HPP
#define PCZ_SIGNALS_HPP

#include <cstdint>
#include <vector>

#include "pcz/grid_function.hpp"
#include "pcz/sequence.hpp"

namespace pcz {

/// The classical almost automorphic, non almost periodic signal
/// sin(1 / (2 + cos t + cos(sqrt(2) t))).
double psi(double t);

/// psi([t]) — piecewise constant on [n, n+1).
double psi_step(double t);

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Deterministic uniform values in [-1, 1]; raw mt19937_64 output mapped by
/// ldexp so results are identical across standard libraries.
std::vector<double> seeded_uniform(std::uint64_t seed, std::size_t count);

/// Sequence of seeded uniform values in [-1, 1] on the window (scalar).
AASequence noise_sequence(Window window, std::uint64_t seed = kDefaultSeed);

/// Sequence S(n) = psi(n).
AASequence psi_sequence(Window window);

/// Grid samples of psi_step (the step extension of psi restricted to Z).
GridFunction psi_step_grid(Window window, int samples_per_unit);

}  // namespace pcz

#endif
