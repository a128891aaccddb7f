#ifndef ORBICURVE_CLI_HPP
#define ORBICURVE_CLI_HPP

#include <string>
#include <vector>

#include "orbicurve/json_io.hpp"

namespace orbicurve {

struct CliResult {
    int exit_code;      // 0 success, 1 verification failure, 2 usage error
    Json document;      // manifest + result (empty on usage error)
    std::string error;  // message for nonzero exits
};

/// Parses and dispatches one invocation; pure function of (argv, seed).
CliResult run_cli(const std::vector<std::string>& args);

/// Writes canonical JSON (sorted keys, exact fractions as strings) to path.
/// Byte-identical output for identical documents.
void emit_report(const Json& doc, const std::string& path);

}  // namespace orbicurve

#endif
