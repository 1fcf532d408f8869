#ifndef PCZ_TOOLS_COMMANDS_HPP
#define PCZ_TOOLS_COMMANDS_HPP

#include <CLI11.hpp>
#include <cstdint>
#include <string>

namespace pcz::tools {

struct GlobalConfig {
  std::string out_dir = ".";
  int precision = 17;
  std::uint64_t seed = 0x5EED;
};

void register_extend(CLI::App& app, GlobalConfig& cfg);
void register_diagnose(CLI::App& app, GlobalConfig& cfg);
void register_conv(CLI::App& app, GlobalConfig& cfg);
void register_heat(CLI::App& app, GlobalConfig& cfg);
void register_depca(CLI::App& app, GlobalConfig& cfg);
void register_demo(CLI::App& app, GlobalConfig& cfg);

}  // namespace pcz::tools

#endif
