#include "jt/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

namespace jt {

namespace {

const json& field(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) throw ParseError(path + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path + "/" + key + ": missing field");
    return *it;
}

long integer_from_json(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
    return j.get<long>();
}

double round15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

json complex_json(cplx z) { return json::array({round15(z.real()), round15(z.imag())}); }

json report_json(const JointTorsionReport& r) {
    return json{{"tau_AD", to_string(r.tau_AD.value)},
                {"tau_BC", to_string(r.tau_BC.value)},
                {"sigma_AD", to_string(r.sigma_AD)},
                {"sigma_BC", to_string(r.sigma_BC)},
                {"lambda", r.lambda},
                {"nu", r.nu},
                {"kappa", {{"A", r.kappa_A}, {"B", r.kappa_B}, {"C", r.kappa_C}, {"D", r.kappa_D}}},
                {"mu", {{"A", r.mu_A}, {"B", r.mu_B}, {"C", r.mu_C}, {"D", r.mu_D}}},
                {"homology_dims", {{"H2", r.h2}, {"H1", r.h1}, {"H0", r.h0}}},
                {"dims_AD", r.dims_AD},
                {"dims_BC", r.dims_BC}};
}

Quadruple quad_from(const json& p, const std::string& path) {
    Mat A = matrix_from_json(field(p, "A", path), path + "/A");
    Mat B = matrix_from_json(field(p, "B", path), path + "/B");
    Mat C = matrix_from_json(field(p, "C", path), path + "/C");
    Mat D = matrix_from_json(field(p, "D", path), path + "/D");
    return make_quadruple(std::move(A), std::move(B), std::move(C), std::move(D));
}

json cmd_torsion(const json& p) {
    const std::string path = "/payload";
    const json& spaces = field(p, "spaces", path);
    if (!spaces.is_array() || spaces.empty()) throw ParseError(path + "/spaces: expected a nonempty array");
    std::vector<Index> dims;
    for (size_t i = 0; i < spaces.size(); ++i) {
        const long d = integer_from_json(spaces[i], path + "/spaces/" + std::to_string(i));
        if (d < 0) throw ParseError(path + "/spaces/" + std::to_string(i) + ": negative dimension");
        dims.push_back(d);
    }
    const json& maps = field(p, "maps", path);
    if (!maps.is_array() || maps.size() + 1 != dims.size())
        throw ParseError(path + "/maps: expected " + std::to_string(dims.size() - 1) + " matrices");
    std::vector<Mat> diffs;
    for (size_t i = 0; i < maps.size(); ++i)
        diffs.push_back(matrix_from_json(maps[i], path + "/maps/" + std::to_string(i), dims[i + 1], dims[i]));
    std::vector<Mat> bases;
    if (p.contains("bases")) {
        const json& b = p["bases"];
        if (!b.is_array() || b.size() != dims.size())
            throw ParseError(path + "/bases: expected " + std::to_string(dims.size()) + " matrices");
        for (size_t i = 0; i < b.size(); ++i)
            bases.push_back(matrix_from_json(b[i], path + "/bases/" + std::to_string(i), dims[i], dims[i]));
    }
    const BasedExactSequence s = make_exact_sequence(make_complex(dims, std::move(diffs)), std::move(bases));
    const TorsionScalar t = torsion_scalar(s);
    const int n = s.complex.top();
    json exps = json::array();
    for (int k = n; k >= 0; --k) exps.push_back(torsion_exponent(n, k));
    char fp[32];
    std::snprintf(fp, sizeof fp, "%016llx", static_cast<unsigned long long>(t.basis_fingerprint));
    return json{{"value", to_string(t.value)}, {"report", {{"n", n}, {"exponents", exps}, {"basis_fingerprint", fp}}}};
}

json cmd_quad(const json& p) {
    const JointTorsionReport r = joint_torsion_quad(quad_from(p, "/payload"));
    return json{{"value", to_string(r.value)}, {"report", report_json(r)}};
}

json cmd_pair(const json& p) {
    const Mat A = matrix_from_json(field(p, "A", "/payload"), "/payload/A");
    const Mat B = matrix_from_json(field(p, "B", "/payload"), "/payload/B");
    require_commuting(A, B);
    const JointTorsionReport r = joint_torsion_quad(Quadruple{A, B, B, A});
    json rep = report_json(r);
    rep["pseudoinverse_formula"] = to_string(pseudoinv_formula_pair(A, B));
    return json{{"value", to_string(r.value)}, {"report", rep}};
}

json cmd_toeplitz_exact(const json& p) {
    const AnalyticSymbol f = symbol_from_json(field(p, "f", "/payload"), "/payload/f");
    const AnalyticSymbol g = symbol_from_json(field(p, "g", "/payload"), "/payload/g");
    const QiScalar v = toeplitz_joint_torsion(f, g);
    const EpsSequences eps = toeplitz_eps_sequences(f, g);
    return json{{"value", to_string(v)},
                {"report",
                 {{"tame_symbol", to_string(tame_symbol(f, g))},
                  {"lefschetz_ratio", to_string(lefschetz_ratio(toeplitz_restriction_data(f, g)))},
                  {"pseudoinverse_formula", to_string(pseudoinv_formula(eps.ad, eps.bc, 0, 0))},
                  {"winding_f", f.winding},
                  {"winding_g", g.winding}}}};
}

json cmd_toeplitz_numeric(const json& p) {
    const TrigPoly f = trig_from_json(field(p, "f", "/payload"), "/payload/f");
    const TrigPoly g = trig_from_json(field(p, "g", "/payload"), "/payload/g");
    std::vector<int> sizes{32, 64, 128};
    if (p.contains("N")) {
        sizes.clear();
        const json& n = p["N"];
        if (n.is_array()) {
            for (size_t i = 0; i < n.size(); ++i)
                sizes.push_back(static_cast<int>(integer_from_json(n[i], "/payload/N/" + std::to_string(i))));
        } else {
            sizes.push_back(static_cast<int>(integer_from_json(n, "/payload/N")));
        }
        if (sizes.empty()) throw ParseError("/payload/N: expected at least one size");
    }
    int buffer = -1;
    if (p.contains("B")) buffer = static_cast<int>(integer_from_json(p["B"], "/payload/B"));
    const cplx target = closed_form_di(f, g);
    json table = json::array();
    cplx last;
    for (int N : sizes) {
        last = numeric_det_invariant(f, g, N, buffer);
        table.push_back({{"N", N}, {"value", complex_json(last)}, {"error", round15(std::abs(last - target))}});
    }
    return json{{"value", complex_json(last)},
                {"report",
                 {{"closed_form", complex_json(target)},
                  {"buffer", buffer < 0 ? default_buffer(f, g) : buffer},
                  {"table", table}}}};
}

Response cmd_verify(const json& p, const json& request) {
    const std::string name = [&] {
        const json& s = field(p, "suite", "/payload");
        if (!s.is_string()) throw ParseError("/payload/suite: expected a string");
        return s.get<std::string>();
    }();
    if (p.contains("instance_seed")) {
        const json& s = p["instance_seed"];
        if (!s.is_number_unsigned() && !s.is_number_integer()) throw ParseError("/payload/instance_seed: expected an integer");
        std::size_t index = 0;
        if (p.contains("index")) index = static_cast<std::size_t>(integer_from_json(p["index"], "/payload/index"));
        const InstanceOutcome o = run_suite_instance(name, s.get<std::uint64_t>(), index);
        json rep{{"suite", name}, {"pass", o.pass}};
        if (!o.pass) rep["message"] = o.message;
        if (!o.detail.is_null()) rep["detail"] = o.detail;
        return Response{json{{"value", o.pass ? "pass" : "fail"}, {"report", rep}}, o.pass ? exit_ok : exit_failed};
    }
    std::uint64_t seed = 7;
    if (p.contains("seed"))
        seed = p["seed"].get<std::uint64_t>();
    else if (request.contains("seed"))
        seed = request["seed"].get<std::uint64_t>();
    std::size_t count = 100;
    if (p.contains("count")) count = static_cast<std::size_t>(integer_from_json(p["count"], "/payload/count"));
    return run_suite_request(name, seed, count);
}

Response dispatch(const json& request) {
    if (!request.is_object()) throw ParseError(": request must be an object");
    const json& cmd = field(request, "cmd", "");
    if (!cmd.is_string()) throw ParseError("/cmd: expected a string");
    const json empty = json::object();
    const json& payload = request.contains("payload") ? request["payload"] : empty;
    if (!payload.is_object()) throw ParseError("/payload: expected an object");
    if (request.contains("seed") && !request["seed"].is_number_integer()) throw ParseError("/seed: expected an integer");
    const std::string c = cmd.get<std::string>();
    if (c == "torsion") return {cmd_torsion(payload)};
    if (c == "joint_torsion_pair") return {cmd_pair(payload)};
    if (c == "joint_torsion_quad") return {cmd_quad(payload)};
    if (c == "toeplitz_exact") return {cmd_toeplitz_exact(payload)};
    if (c == "toeplitz_numeric") return {cmd_toeplitz_numeric(payload)};
    if (c == "verify") return cmd_verify(payload, request);
    throw ParseError("/cmd: unknown command \"" + c + "\"");
}

Response error_response(const char* kind, const std::string& message, int code) {
    return Response{json{{"error", {{"kind", kind}, {"message", message}}}}, code};
}

template <typename F>
Response guarded(F&& f, const RunOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    Response r;
    try {
        r = f();
    } catch (const ParseError& e) {
        return error_response("parse", e.what(), exit_parse);
    } catch (const json::exception& e) {
        return error_response("parse", e.what(), exit_parse);
    } catch (const DomainError& e) {
        return error_response("domain", e.what(), exit_domain);
    } catch (const InternalError& e) {
        return error_response("internal", e.what(), exit_failed);
    }
    if (opts.timing && r.body.contains("report")) {
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        r.body["report"]["timing_ms"] = round15(ms);
    }
    return r;
}

}  // namespace

QiScalar scalar_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) return QiScalar(j.get<long>());
    if (!j.is_string()) throw ParseError(path + ": expected a scalar string");
    try {
        return parse_qi(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Mat matrix_from_json(const json& j, const std::string& path, Index rows, Index cols) {
    if (!j.is_array()) throw ParseError(path + ": expected an array of rows");
    const Index r = static_cast<Index>(j.size());
    if (rows >= 0 && r != rows) throw ParseError(path + ": expected " + std::to_string(rows) + " rows");
    Index c = cols;
    if (c < 0) c = r == 0 ? 0 : static_cast<Index>(j[0].is_array() ? j[0].size() : 0);
    if (r == 0) return Mat(0, c < 0 ? 0 : c);
    Mat m(r, c);
    for (Index i = 0; i < r; ++i) {
        const std::string rp = path + "/" + std::to_string(i);
        const json& row = j[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != c)
            throw ParseError(rp + ": expected a row of " + std::to_string(c) + " entries");
        for (Index k = 0; k < c; ++k) m(i, k) = scalar_from_json(row[static_cast<size_t>(k)], rp + "/" + std::to_string(k));
    }
    return m;
}

AnalyticSymbol symbol_from_json(const json& j, const std::string& path) {
    const QiScalar leading = scalar_from_json(field(j, "leading", path), path + "/leading");
    const json& roots = field(j, "roots", path);
    if (!roots.is_array()) throw ParseError(path + "/roots: expected an array");
    std::vector<QiScalar> rs;
    for (size_t i = 0; i < roots.size(); ++i) rs.push_back(scalar_from_json(roots[i], path + "/roots/" + std::to_string(i)));
    return make_symbol(leading, std::move(rs));
}

TrigPoly trig_from_json(const json& j, const std::string& path) {
    const json& coeffs = field(j, "coeffs", path);
    if (!coeffs.is_object()) throw ParseError(path + "/coeffs: expected an object");
    TrigPoly p;
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
        const std::string kp = path + "/coeffs/" + it.key();
        int k = 0;
        try {
            size_t used = 0;
            k = std::stoi(it.key(), &used);
            if (used != it.key().size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError(kp + ": degree must be an integer");
        }
        const json& v = it.value();
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw ParseError(kp + ": expected [re, im]");
        p.coeffs[k] = cplx(v[0].get<double>(), v[1].get<double>());
    }
    return p;
}

Response run_request(const json& request, const RunOptions& opts) {
    return guarded([&] { return dispatch(request); }, opts);
}

Response run_request_text(const std::string& text, const RunOptions& opts) {
    json request;
    try {
        request = json::parse(text);
    } catch (const json::parse_error& e) {
        return error_response("parse", e.what(), exit_parse);
    }
    return run_request(request, opts);
}

Response run_suite_request(const std::string& name, std::uint64_t seed, std::size_t count, const RunOptions& opts) {
    return guarded(
        [&] {
            const SuiteResult r = run_suite(name, seed, count);
            return Response{json{{"value", std::to_string(r.passed) + "/" + std::to_string(r.total)}, {"report", r.to_json()}},
                            r.ok() ? exit_ok : exit_failed};
        },
        opts);
}

}  // namespace jt
