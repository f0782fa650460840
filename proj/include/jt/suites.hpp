#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "jt/random.hpp"

namespace jt {

using json = nlohmann::json;

struct InstanceOutcome {
    bool pass = true;
    std::string message;
    json reproducer;  // a request that reruns exactly this instance
    json detail;      // suite-specific data kept in the summary (may be null)
};

struct SuiteFailure {
    std::size_t index = 0;
    std::uint64_t instance_seed = 0;
    std::string message;
    json reproducer;
};

struct SuiteResult {
    std::string name;
    std::uint64_t seed = 0;
    std::size_t total = 0;
    std::size_t passed = 0;
    std::vector<SuiteFailure> failures;
    json details = json::array();

    bool ok() const { return passed == total; }
    json to_json() const;
};

const std::vector<std::string>& suite_names();

// Instances run concurrently; instance i uses derive_seed(seed, i). Unknown names throw DomainError.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t count);

InstanceOutcome run_suite_instance(const std::string& name, std::uint64_t instance_seed, std::size_t index);

// Fixed corpus of the numeric layer: (z, 1/z), (z + 1/z, z - 1/z) and an analytic pair.
std::vector<std::pair<TrigPoly, TrigPoly>> numeric_corpus();

json matrix_to_json(const Mat& m);
json symbol_to_json(const AnalyticSymbol& s);
json trig_to_json(const TrigPoly& p);

}  // namespace jt
