#ifndef PCZ_EXTENSION_HPP
#define PCZ_EXTENSION_HPP

#include <functional>
#include <optional>
#include <span>

#include "pcz/grid_function.hpp"
#include "pcz/sequence.hpp"

namespace pcz {

enum class ExtensionKind { step, linear, two_segment };

/// Caller-supplied midpoint values m(n) for the two-segment construction.
using MidpointRule = std::function<void(int, std::span<double>)>;

/// f(t) = S([t]): pieces constant S(n) on [n, n+1), left limit at n+1 is S(n).
/// Requires window contained in S.window.
GridFunction step_extension(const AASequence& s, int samples_per_unit, Window window);

/// f(t) = S(k) + (t-k)(S(k+1) - S(k)), k = [t]. Interpolates S at integers
/// exactly and is continuous (left limit at n+1 equals S(n+1) verbatim).
/// Requires window.hi + ... S(k+1), i.e. window shifted by one inside S.window.
GridFunction linear_extension(const AASequence& s, int samples_per_unit, Window window);

/// Piecewise linear on half-intervals: f(n) = S(n), f(n+1/2) = m(n),
/// f continuous. samples_per_unit must be even so n+1/2 is a lattice point.
GridFunction two_segment_extension(const AASequence& s, const MidpointRule& midpoint,
                                   int samples_per_unit, Window window);

/// Dispatcher used by the CLI; midpoint is required for two_segment.
GridFunction extend(const AASequence& s, ExtensionKind kind, int samples_per_unit, Window window,
                    const std::optional<MidpointRule>& midpoint = std::nullopt);

/// The collinear midpoint rule (S(n) + S(n+1))/2 for which two_segment
/// reduces to the linear extension.
MidpointRule collinear_midpoints(const AASequence& s);

}  // namespace pcz

#endif
