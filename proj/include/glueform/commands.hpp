#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace glueform::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainFailure = 1;
inline constexpr int kExitInputError = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string report;
};

inline constexpr std::size_t kCheckSamples = 100;
inline constexpr std::uint64_t kCheckSeed = 1;

CommandResult cmd_check(std::string_view presentation_text);

// Empty `degrees` / unset `bound` fall back to the file's [compute] section.
CommandResult cmd_cohomology(std::string_view presentation_text, std::optional<std::uint32_t> bound,
                             const std::vector<std::size_t>& degrees);

CommandResult cmd_delta(std::string_view presentation_text, std::string_view mu_text,
                        std::string_view nu_text);

CommandResult cmd_sample(std::string_view presentation_text, std::size_t samples,
                         std::uint64_t seed);

}  // namespace glueform::cli
