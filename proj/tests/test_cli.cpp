#include <doctest.h>

#include "jt/cli.hpp"

using namespace jt;

namespace {

Response run(const char* text) { return run_request_text(text); }

}  // namespace

TEST_CASE("quadruple and pair requests") {
    const Response r = run(R"({"cmd":"joint_torsion_quad","payload":{"A":[["0"]],"B":[["0"]],"C":[["0"]],"D":[["0"]]}})");
    CHECK(r.exit_code == exit_ok);
    CHECK(r.body["value"] == "1");
    CHECK(r.body["report"]["lambda"] == 4);
    CHECK(r.body["report"]["homology_dims"]["H1"] == 2);

    const Response p = run(R"({"cmd":"joint_torsion_pair","payload":{"A":[["0",0],[0,"2"]],"B":[[3,0],[0,0]]}})");
    CHECK(p.exit_code == exit_ok);
    CHECK(p.body["value"] == "1");
    CHECK(p.body["report"]["pseudoinverse_formula"] == "1");
}

TEST_CASE("torsion request") {
    const Response r = run(R"({"cmd":"torsion","payload":{"spaces":[1,2,1],"maps":[[["1"],["1"]],[["1","-1"]]]}})");
    CHECK(r.exit_code == exit_ok);
    CHECK(r.body["value"] == "-1");
    CHECK(r.body["report"]["exponents"] == json::array({-1, 1, -1}));
    const Response b =
        run(R"({"cmd":"torsion","payload":{"spaces":[2,2],"maps":[[["2",0],[0,"3"]]],"bases":[[[1,0],[0,1]],[[1,0],[0,2]]]}})");
    CHECK(b.body["value"] == "3");
}

TEST_CASE("toeplitz requests") {
    const Response e = run(
        R"({"cmd":"toeplitz_exact","payload":{"f":{"leading":"1","roots":["1/2"]},"g":{"leading":"1","roots":["1/3"]}}})");
    CHECK(e.exit_code == exit_ok);
    CHECK(e.body["value"] == "-1");
    CHECK(e.body["report"]["tame_symbol"] == "-1");
    CHECK(e.body["report"]["lefschetz_ratio"] == "-1");

    const Response n = run(
        R"({"cmd":"toeplitz_numeric","payload":{"f":{"coeffs":{"1":[1.0,0.0]}},"g":{"coeffs":{"-1":[1.0,0.0]}},"N":[32,64]}})");
    CHECK(n.exit_code == exit_ok);
    CHECK(n.body["report"]["table"].size() == 2);
    CHECK(std::abs(n.body["value"][0].get<double>() - 0.367879441171442) < 1e-6);
}

TEST_CASE("error exit codes") {
    CHECK(run("{not json").exit_code == exit_parse);
    CHECK(run(R"({"cmd":"frobnicate"})").exit_code == exit_parse);
    const Response bad = run(R"({"cmd":"joint_torsion_quad","payload":{"A":[["0"]],"B":[["x"]],"C":[["0"]],"D":[["0"]]}})");
    CHECK(bad.exit_code == exit_parse);
    CHECK(bad.body["error"]["message"].get<std::string>().rfind("/payload/B/0/0", 0) == 0);
    CHECK(run(R"({"cmd":"joint_torsion_quad","payload":{"A":[["1"]],"B":[["1"]],"C":[["1"]],"D":[["2"]]}})").exit_code ==
          exit_domain);
    CHECK(run(R"({"cmd":"toeplitz_exact","payload":{"f":{"leading":"1","roots":["i"]},"g":{"leading":"1","roots":[]}}})")
              .exit_code == exit_domain);
    CHECK(run(R"({"cmd":"verify","payload":{"suite":"no-such-suite"}})").exit_code == exit_domain);
}

TEST_CASE("suites are deterministic") {
    const Response a = run_suite_request("finite-triviality", 7, 12);
    const Response b = run_suite_request("finite-triviality", 7, 12);
    CHECK(a.exit_code == exit_ok);
    CHECK(a.body.dump() == b.body.dump());
    CHECK(a.body["value"] == "12/12");
    const Response v = run(R"({"cmd":"verify","payload":{"suite":"tame-oracle","count":5},"seed":3})");
    CHECK(v.exit_code == exit_ok);
    CHECK(v.body["value"] == "5/5");
}

TEST_CASE("single instance reruns") {
    const Response r = run(R"({"cmd":"verify","payload":{"suite":"finite-triviality","instance_seed":12345,"index":0}})");
    CHECK(r.exit_code == exit_ok);
    CHECK(r.body["report"]["pass"] == true);
}

TEST_CASE("every suite runs") {
    for (const std::string& name : suite_names()) {
        CAPTURE(name);
        const SuiteResult s = run_suite(name, 5, 3);
        CHECK(s.ok());
    }
}
