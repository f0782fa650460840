// Runs every acceptance criterion once and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "jt/cli.hpp"

using namespace jt;

namespace {

constexpr std::uint64_t kSeed = 7;

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, const char* title, bool ok, const std::string& info) {
    std::printf("%s criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", id, title, info.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string tally(const SuiteResult& r) { return std::to_string(r.passed) + "/" + std::to_string(r.total); }

std::string first_failure(const SuiteResult& r) {
    if (r.failures.empty()) return "";
    const SuiteFailure& f = r.failures.front();
    return "; first failure #" + std::to_string(f.index) + ": " + f.message + " reproducer " + f.reproducer.dump();
}

void suite_criterion(int id, const char* title, const char* suite, std::size_t count, double limit_s = 0) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult r;
    try {
        r = run_suite(suite, kSeed, count);
    } catch (const std::exception& e) {
        report(id, title, false, std::string("exception: ") + e.what());
        return;
    }
    const double t = seconds_since(t0);
    bool ok = r.ok() && r.total == count;
    std::string info = tally(r);
    if (limit_s > 0) {
        ok = ok && t < limit_s;
        char buf[64];
        std::snprintf(buf, sizeof buf, " in %.2f s (limit %.0f s)", t, limit_s);
        info += buf;
    }
    report(id, title, ok, info + first_failure(r));
}

void factorization_criterion() {
    const std::size_t count = 50;
    const SuiteResult r = run_suite("factorization", kSeed, count);
    bool ok = r.ok() && r.details.size() == count;
    std::string info = tally(r) + " instances;";
    for (const auto& [name, id] : factorization_identity_names()) {
        (void)id;
        std::size_t good = 0;
        for (const json& d : r.details)
            if (d.is_object() && d.value(name, false)) ++good;
        ok = ok && good == count;
        info += " " + name + " " + std::to_string(good) + "/" + std::to_string(count);
    }
    report(5, "factorization identities", ok, info + first_failure(r));
}

void numeric_criterion() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto corpus = numeric_corpus();
    const cplx expected[] = {cplx(std::exp(-1.0), 0.0), cplx(std::exp(2.0), 0.0), cplx(1.0, 0.0)};
    bool ok = corpus.size() == 3;
    std::string info;
    for (std::size_t i = 0; i < corpus.size() && i < 3; ++i) {
        const auto& [f, g] = corpus[i];
        const cplx target = closed_form_di(f, g);
        ok = ok && std::abs(target - expected[i]) < 1e-12;
        double errs[3];
        const int sizes[3] = {32, 64, 128};
        try {
            for (int k = 0; k < 3; ++k) errs[k] = std::abs(numeric_det_invariant(f, g, sizes[k]) - target);
        } catch (const std::exception& e) {
            report(8, "numeric convergence", false, std::string("exception: ") + e.what());
            return;
        }
        ok = ok && errs[2] <= 1e-4 && errs[1] <= errs[0] + 1e-10 && errs[2] <= errs[1] + 1e-10;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%spair %zu errors %.3g %.3g %.3g", i ? "; " : "", i, errs[0], errs[1], errs[2]);
        info += buf;
    }
    const double t = seconds_since(t0);
    ok = ok && t < 60.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, " in %.2f s (limit 60 s)", t);
    report(8, "numeric convergence", ok, info + buf);
}

void pseudoinverse_criterion() {
    const SuiteResult pairs = run_suite("pseudoinverse", kSeed, 50);
    // The tame-oracle suite checks the pseudoinverse formula on each Toeplitz instance.
    const SuiteResult toeplitz = run_suite("tame-oracle", kSeed, 100);
    const bool ok = pairs.ok() && pairs.total == 50 && toeplitz.ok() && toeplitz.total == 100;
    report(9, "pseudoinverse formula", ok,
           "pairs " + tally(pairs) + ", toeplitz corpus " + tally(toeplitz) + first_failure(pairs) + first_failure(toeplitz));
}

}  // namespace

int main() {
    suite_criterion(1, "finite-dimensional triviality", "finite-triviality", 200, 120.0);
    suite_criterion(2, "torsion equals determinant", "torsion-determinant", 100);
    suite_criterion(3, "direct-sum multiplicativity", "direct-sum", 50);
    suite_criterion(4, "basis independence", "basis-independence", 50);
    factorization_criterion();
    suite_criterion(6, "toeplitz oracle agreement", "tame-oracle", 100);
    suite_criterion(7, "steinberg relations", "steinberg", 100);
    numeric_criterion();
    pseudoinverse_criterion();
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
