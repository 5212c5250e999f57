#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace entrobound::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInputError = 1,
    kNonConvergence = 2,
    kVerificationFailure = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` or to --out FILE; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Provenance written next to every --out file (and to --manifest FILE).
/// `args` is the fully resolved command line, so replaying it reproduces the
/// output bytes.
struct RunManifest {
    std::string command;
    std::vector<std::string> args;
    nlohmann::json parameters;
    std::string input_sha256;  // empty unless a matrix file was read
    std::string tool_version;
    std::string timestamp;
};

nlohmann::json to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);

std::string sha256_file(const std::string& path);

} // namespace entrobound::cli
