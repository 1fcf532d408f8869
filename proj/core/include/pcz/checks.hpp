#ifndef PCZ_CHECKS_HPP
#define PCZ_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pcz::checks {

/// One self-check row: a numbered property of the library verified against
/// closed-form oracles and structural identities.
struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = -1.0;  // wall time when a criterion carries a runtime budget
};

inline constexpr int kCheckCount = 10;

CheckResult run_check(int id, const std::string& work_dir);

/// Runs every check in order. work_dir is scratch space for checks that
/// write files.
std::vector<CheckResult> run_all_checks(const std::string& work_dir);

/// Writes the full deterministic artifact set (sequence and grid CSVs,
/// diagnostic and solver JSON reports) under dir. Byte-identical across runs
/// with the same build and seed; the determinism check compares two
/// generations. The seed drives the noise fixture.
void generate_artifacts(const std::string& dir, std::uint64_t seed = 0x5EED);

std::string summary_table(const std::vector<CheckResult>& results);

/// Recursive byte-for-byte comparison of two directory trees; on mismatch
/// `why` names the first difference.
bool directories_identical(const std::string& a, const std::string& b, std::string& why);

}  // namespace pcz::checks

#endif
