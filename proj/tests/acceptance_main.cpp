// Acceptance suite: runs the numbered self-checks (closed-form oracles and
// structural identities) and prints one pass/fail line per criterion.
// With no argument every criterion runs; with an integer argument only that
// one does. Exit code 0 iff every executed criterion passed.
//
// Criterion 10 additionally drives the installed CLI twice when PCZ_CLI_BIN
// is set, comparing the two artifact trees byte for byte.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "pcz/checks.hpp"

namespace fs = std::filesystem;

namespace {

bool cli_determinism(const std::string& cli, const std::string& scratch, std::string& detail) {
  const fs::path a = fs::path(scratch) / "cli_demo_a";
  const fs::path b = fs::path(scratch) / "cli_demo_b";
  fs::remove_all(a);
  fs::remove_all(b);
  fs::create_directories(a);
  fs::create_directories(b);
  const std::string quiet = " > /dev/null 2>&1";
  if (std::system((cli + " demo --out-dir " + a.string() + quiet).c_str()) != 0 ||
      std::system((cli + " demo --out-dir " + b.string() + quiet).c_str()) != 0) {
    detail = "CLI demo run failed";
    return false;
  }
  std::string why;
  const bool same = pcz::checks::directories_identical(a.string(), b.string(), why);
  detail = same ? "two CLI demo runs byte-identical" : ("CLI demo runs differ: " + why);
  return same;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path scratch = fs::temp_directory_path() / "pcz_acceptance_scratch";
  fs::create_directories(scratch);

  std::vector<int> ids;
  if (argc > 1) {
    const int id = std::atoi(argv[1]);
    if (id < 1 || id > pcz::checks::kCheckCount) {
      std::cerr << "usage: " << argv[0] << " [criterion 1.." << pcz::checks::kCheckCount << "]\n";
      return 2;
    }
    ids.push_back(id);
  } else {
    for (int id = 1; id <= pcz::checks::kCheckCount; ++id) ids.push_back(id);
  }

  bool all_pass = true;
  for (int id : ids) {
    pcz::checks::CheckResult r = pcz::checks::run_check(id, scratch.string());
    if (id == 10) {
      if (const char* cli = std::getenv("PCZ_CLI_BIN"); cli && *cli) {
        std::string detail;
        const bool ok = cli_determinism(cli, scratch.string(), detail);
        r.pass = r.pass && ok;
        r.detail += "; " + detail;
      } else {
        r.detail += "; CLI double-run skipped (PCZ_CLI_BIN not set)";
      }
    }
    all_pass = all_pass && r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << "  " << r.name << "  --  "
              << r.detail;
    if (r.seconds >= 0.0) std::cout << "  [" << r.seconds << " s]";
    std::cout << '\n';
  }
  return all_pass ? 0 : 1;
}
