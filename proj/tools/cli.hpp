#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace nncalc::cli {

// Effective configuration of one CLI run. Every subcommand handler consumes
// only this struct, so a run restored from --config behaves exactly like the
// flag spelling that produced it.
struct RunConfig {
    std::string subcommand;
    std::string format = "csv";  // csv | json
    std::string output;          // empty = stdout
    std::uint64_t seed = 1;
    std::map<std::string, std::string> strings;
    std::map<std::string, double> numbers;

    // Canonical single-line JSON: fixed top-level keys, alphabetically
    // ordered maps. from_json_text(canonical_json()) is the identity.
    std::string canonical_json() const;
    static RunConfig from_json_text(const std::string& text);
};

// Parses args (no program name) and runs the selected subcommand.
// Exit codes: 0 success, 1 usage error, 2 numeric/domain failure.
// The environment variable NNCALC_SEED overrides any configured seed.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nncalc::cli
