#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace entrobound::verify {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    [[nodiscard]] bool passed() const;
};

struct SuiteOptions {
    std::uint64_t rng_seed = 0;
    int n_seeds = 200;
};

inline constexpr std::string_view kSuites[] = {"norms",       "entropy-identities", "ordering-chain",
                                               "interpolation", "qubit",             "tightness"};

/// Runs one named invariant suite with fixed seeds. Returns std::nullopt for
/// an unknown suite name.
std::optional<SuiteResult> run_suite(std::string_view name, const SuiteOptions& options = {});

nlohmann::json to_json(const SuiteResult& r);

} // namespace entrobound::verify
