#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "ectk/closedform.hpp"
#include "ectk/verify.hpp"

namespace ectk::cli {

// Exit-code contract: 0 success, 2 parse error, 3 domain error,
// 4 resource cap exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitCap = 4;

struct RunConfig {
    std::uint64_t enum_cap = kDefaultEnumCap;
    int det_cap = kDefaultDetCap;
    std::uint64_t seed = 0;
    int workers = 1;
    std::string format = "json";  // json | text
    std::string output;           // empty = stdout
};

// Each command builds its JSON body; errors surface as exceptions which the
// entry point maps onto the exit-code contract.
nlohmann::json cmd_card(const Shape&, const std::optional<int>& N,
                        const std::optional<CycleType>& lambda);
nlohmann::json cmd_poly(const Shape&, const std::optional<int>& N,
                        const std::optional<CycleType>& lambda);
nlohmann::json cmd_prob(std::optional<long> n, std::optional<long> k, std::optional<int> N,
                        std::optional<long> limit_c);
nlohmann::json cmd_census(const Shape&, const RunConfig&,
                          const std::optional<bool>& with_weights = std::nullopt);
nlohmann::json cmd_sample(const Shape&, std::uint64_t trials, std::uint64_t seed);
nlohmann::json cmd_forest_det(const Shape&, const NChoiceSet&, const RunConfig&);
nlohmann::json cmd_verify(const Shape&, const std::string& suite, const RunConfig&);

// Plain-text rendering of a command body (the "text" output format).
std::string render_text(const nlohmann::json& body);

// Full driver used by the binary: parses argv, runs the command, writes the
// output, returns the process exit code.
int run(int argc, const char* const* argv);

}  // namespace ectk::cli
