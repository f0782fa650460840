#include <CLI11.hpp>
#include <iostream>
#include <iterator>

#include "jt/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact joint torsion and determinant invariant calculator. Reads one JSON request on stdin."};
    std::uint64_t seed = 7;
    std::size_t count = 100;
    std::string suite;
    bool timing = false;
    app.add_option("--seed", seed, "Seed for --suite or for a verify request without one");
    app.add_option("--count", count, "Instance count for --suite");
    app.add_option("--suite", suite, "Run a verification suite instead of reading stdin");
    app.add_flag("--timing", timing, "Add report.timing_ms (output is then run-dependent)");
    CLI11_PARSE(app, argc, argv);

    jt::RunOptions opts;
    opts.timing = timing;
    jt::Response r;
    if (!suite.empty()) {
        r = jt::run_suite_request(suite, seed, count, opts);
    } else {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        jt::json request;
        try {
            request = jt::json::parse(text);
            if (request.is_object() && !request.contains("seed") && app.count("--seed")) request["seed"] = seed;
            if (request.is_object() && request.value("cmd", "") == "verify" && request.contains("payload") &&
                request["payload"].is_object() && !request["payload"].contains("count") && app.count("--count"))
                request["payload"]["count"] = count;
            r = jt::run_request(request, opts);
        } catch (const jt::json::parse_error&) {
            r = jt::run_request_text(text, opts);
        }
    }
    std::cout << r.body.dump(2) << "\n";
    return r.exit_code;
}
