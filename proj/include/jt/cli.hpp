#pragma once

#include <string>

#include "jt/suites.hpp"

namespace jt {

enum ExitCode { exit_ok = 0, exit_failed = 1, exit_domain = 2, exit_parse = 3 };

struct Response {
    json body;
    int exit_code = exit_ok;
};

struct RunOptions {
    bool timing = false;  // adds report.timing_ms, which makes output run-dependent
};

// {"cmd": ..., "payload": {...}, "seed": optional}
Response run_request(const json& request, const RunOptions& opts = {});
Response run_request_text(const std::string& text, const RunOptions& opts = {});

// Summary of a suite run as emitted by the CLI.
Response run_suite_request(const std::string& name, std::uint64_t seed, std::size_t count,
                           const RunOptions& opts = {});

// Parsing helpers; errors carry a JSON-pointer style location.
QiScalar scalar_from_json(const json& j, const std::string& path);
Mat matrix_from_json(const json& j, const std::string& path, Index rows = -1, Index cols = -1);
AnalyticSymbol symbol_from_json(const json& j, const std::string& path);
TrigPoly trig_from_json(const json& j, const std::string& path);

}  // namespace jt
