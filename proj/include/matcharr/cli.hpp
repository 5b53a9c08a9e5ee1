#pragma once

#include "matcharr/limits.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace matcharr::cli {

enum class Command { arrangement, charpoly, regions, matching, probe, verify };
enum class Format { text, json };

struct CliConfig {
    Command command = Command::charpoly;
    std::string input_path;
    std::optional<std::vector<std::size_t>> numbering;
    std::optional<std::vector<long>> weights;
    std::size_t samples = 200;
    std::uint64_t seed = 7;
    Format format = Format::text;
    Limits limits;
    bool limits_raised = false;
    std::optional<std::string> theorem;
};

// Exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_input_error = 2;

// Parses argv into a config. On --help or a parse error returns nullopt and
// sets exit_code (0 for help, 2 for errors) after printing to out/err.
std::optional<CliConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code);

// "name=value,name=value" over the Limits field names.
Limits parse_limits(const std::string& text, Limits base = {});

int run(const CliConfig& config, std::ostream& out, std::ostream& err);

} // namespace matcharr::cli
