#ifndef PCZ_JSON_IO_HPP
#define PCZ_JSON_IO_HPP

#include <string>

#include "pcz/depca.hpp"
#include "pcz/diagnostics.hpp"

namespace pcz {

// Stable-field-name JSON renderings of the report types. Numbers use the
// shortest round-trip representation, so output bytes are deterministic.

std::string to_json(const RecurrenceReport& rep, int indent = 2);
std::string to_json(const UCReport& rep, int indent = 2);
std::string to_json(const DecompositionReport& rep, int indent = 2);

/// Flattened classification report: verdict, eps, the scan fields
/// (shifts_tested, best_shift, forward_defect, backward_defect,
/// defect_profile, test_window) and modulus_table, plus norm statistics of
/// the classified function.
std::string to_json(const ClassifyResult& res, const NormReport& norms, int indent = 2);

std::string to_json(const depca::ResidualReport& rep, int indent = 2);

}  // namespace pcz

#endif
