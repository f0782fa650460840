#include "jt/suites.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

namespace jt {

json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json symbol_to_json(const AnalyticSymbol& s) {
    json roots = json::array();
    for (const QiScalar& r : s.roots) roots.push_back(to_string(r));
    return json{{"leading", to_string(s.leading)}, {"roots", roots}};
}

namespace {

double round15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

json complex_to_json(cplx z) { return json::array({round15(z.real()), round15(z.imag())}); }

}  // namespace

json trig_to_json(const TrigPoly& p) {
    json c = json::object();
    for (const auto& [k, v] : p.coeffs) c[std::to_string(k)] = complex_to_json(v);
    return json{{"coeffs", c}};
}

json SuiteResult::to_json() const {
    json fails = json::array();
    for (const SuiteFailure& f : failures)
        fails.push_back({{"index", f.index},
                         {"instance_seed", f.instance_seed},
                         {"message", f.message},
                         {"reproducer", f.reproducer}});
    json out{{"suite", name}, {"seed", seed}, {"total", total}, {"passed", passed}, {"failures", fails}};
    bool any = false;
    for (const json& d : details) any |= !d.is_null();
    if (any) out["details"] = details;
    return out;
}

std::vector<std::pair<TrigPoly, TrigPoly>> numeric_corpus() {
    TrigPoly z, zinv, s, d, a1, a2;
    z.coeffs[1] = 1.0;
    zinv.coeffs[-1] = 1.0;
    s.coeffs[1] = 1.0;
    s.coeffs[-1] = 1.0;
    d.coeffs[1] = 1.0;
    d.coeffs[-1] = -1.0;
    a1.coeffs[0] = 0.25;
    a1.coeffs[1] = 0.5;
    a1.coeffs[2] = cplx(0.0, 0.25);
    a2.coeffs[1] = -0.3;
    a2.coeffs[2] = 0.2;
    return {{z, zinv}, {s, d}, {a1, a2}};
}

namespace {

using InstanceFn = std::function<InstanceOutcome(std::uint64_t, std::size_t)>;

json verify_request(const std::string& suite, std::uint64_t instance_seed, std::size_t index) {
    return json{{"cmd", "verify"},
                {"payload", {{"suite", suite}, {"instance_seed", instance_seed}, {"index", index}}}};
}

json quad_request(const Quadruple& q) {
    return json{{"cmd", "joint_torsion_quad"},
                {"payload",
                 {{"A", matrix_to_json(q.A)},
                  {"B", matrix_to_json(q.B)},
                  {"C", matrix_to_json(q.C)},
                  {"D", matrix_to_json(q.D)}}}};
}

InstanceOutcome expect(bool ok, std::string message, json reproducer) {
    InstanceOutcome o;
    o.pass = ok;
    if (!ok) {
        o.message = std::move(message);
        o.reproducer = std::move(reproducer);
    }
    return o;
}

InstanceOutcome finite_triviality(std::uint64_t s, std::size_t) {
    Rng rng(s);
    const Quadruple q = random_quadruple(rng, 6);
    const QiScalar v = joint_torsion_quad(q).value;
    return expect(v == QiScalar(1), "joint torsion " + to_string(v), quad_request(q));
}

InstanceOutcome torsion_determinant(std::uint64_t s, std::size_t i) {
    Rng rng(s);
    const Index h = rng.uniform(1, 8);
    const Mat phi = random_invertible(rng, h);
    const QiScalar t = torsion_scalar(make_exact_sequence(make_complex({h, h}, {phi}))).value;
    const QiScalar d = determinant(phi);
    return expect(t == d, "torsion " + to_string(t) + " vs det " + to_string(d), verify_request("torsion-determinant", s, i));
}

InstanceOutcome direct_sum(std::uint64_t s, std::size_t i) {
    Rng rng(s);
    const Quadruple a = random_quadruple(rng, 3), b = random_quadruple(rng, 3);
    const Quadruple ab = quadruple_direct_sum(a, b);
    const QiScalar va = joint_torsion_quad(a).value, vb = joint_torsion_quad(b).value;
    const QiScalar vab = joint_torsion_quad(ab).value;
    const json rep = verify_request("direct-sum", s, i);
    if (vab != va * vb) return expect(false, "joint torsion not multiplicative", rep);
    if (perturbation_sigma(ab.A, ab.D) != perturbation_sigma(a.A, a.D) * perturbation_sigma(b.A, b.D))
        return expect(false, "sigma_AD not multiplicative", rep);
    if (perturbation_sigma(ab.B, ab.C) != perturbation_sigma(a.B, a.C) * perturbation_sigma(b.B, b.C))
        return expect(false, "sigma_BC not multiplicative", rep);
    const Mat x1 = random_invertible(rng, a.h()), y1 = random_invertible(rng, a.h());
    const Mat x2 = random_invertible(rng, b.h()), y2 = random_invertible(rng, b.h());
    const QiScalar d12 = det_commutator(block_diag(x1, x2), block_diag(y1, y2));
    return expect(d12 == det_commutator(x1, y1) * det_commutator(x2, y2), "determinant invariant not multiplicative", rep);
}

InstanceOutcome basis_independence(std::uint64_t s, std::size_t i) {
    Rng rng(s);
    const Quadruple q = random_quadruple(rng, 6);
    const JointTorsionReport base = joint_torsion_quad(q);
    QuadSpaces spaces = quad_spaces(q);
    spaces.for_each([&](const char*, Subquotient& sq) {
        const Mat g = random_invertible(rng, sq.dim());
        const Mat shift = random_matrix(rng, sq.boundary_basis.cols(), sq.dim());
        sq = rebase(sq, g, shift);
    });
    const JointTorsionReport moved = joint_torsion_quad(q, spaces);
    return expect(moved.value == base.value, "rebased value " + to_string(moved.value), verify_request("basis-independence", s, i));
}

InstanceOutcome factorization(std::uint64_t s, std::size_t i) {
    Rng rng(s);
    const Quadruple q = random_quadruple(rng, 5);
    const Mat U = random_invertible(rng, q.h());
    InstanceOutcome out;
    out.detail = json::object();
    for (const auto& [name, which] : factorization_identity_names()) {
        const IdentitySides sides = factorization_identities(q, U, which);
        const bool ok = sides.lhs == sides.rhs;
        out.detail[name] = ok;
        if (!ok && out.pass) {
            out.pass = false;
            out.message = name + ": " + to_string(sides.lhs) + " vs " + to_string(sides.rhs);
            out.reproducer = verify_request("factorization", s, i);
        }
    }
    return out;
}

InstanceOutcome tame_oracle(std::uint64_t s, std::size_t i) {
    Rng rng(s);
    const auto [f, g] = random_symbol_pair(rng, 3);
    const QiScalar machinery = toeplitz_joint_torsion(f, g);
    const QiScalar closed = tame_symbol(f, g);
    const json rep{{"cmd", "toeplitz_exact"}, {"payload", {{"f", symbol_to_json(f)}, {"g", symbol_to_json(g)}}}};
    if (machinery != closed)
        return expect(false, "machinery " + to_string(machinery) + " vs tame " + to_string(closed), rep);
    const EpsSequences eps = toeplitz_eps_sequences(f, g);
    const QiScalar pinv = pseudoinv_formula(eps.ad, eps.bc, 0, 0);
    if (pinv != closed) return expect(false, "pseudoinverse formula " + to_string(pinv), rep);
    const QiScalar lef = lefschetz_ratio(toeplitz_restriction_data(f, g));
    (void)i;
    return expect(lef == closed, "lefschetz ratio " + to_string(lef), rep);
}

AnalyticSymbol symbol_acyclic_with(Rng& rng, const std::vector<const AnalyticSymbol*>& others) {
    for (;;) {
        AnalyticSymbol f = random_symbol(rng, 2);
        try {
            for (const AnalyticSymbol* o : others) require_acyclic(f, *o);
            return f;
        } catch (const DomainError&) {
        }
    }
}

InstanceOutcome steinberg(std::uint64_t s, std::size_t i) {
    Rng rng(s);
    const json rep = verify_request("steinberg", s, i);
    const AnalyticSymbol g = random_symbol(rng, 3);
    const AnalyticSymbol f1 = symbol_acyclic_with(rng, {&g});
    const AnalyticSymbol f2 = symbol_acyclic_with(rng, {&g});
    const AnalyticSymbol f12 = symbol_product(f1, f2);
    if (tame_symbol(f12, g) != tame_symbol(f1, g) * tame_symbol(f2, g))
        return expect(false, "not multiplicative in the first argument", rep);
    if (tame_symbol(g, f12) != tame_symbol(g, f1) * tame_symbol(g, f2))
        return expect(false, "not multiplicative in the second argument", rep);
    if (toeplitz_joint_torsion(f12, g) != toeplitz_joint_torsion(f1, g) * toeplitz_joint_torsion(f2, g))
        return expect(false, "joint torsion not multiplicative", rep);
    if (tame_symbol(f1, g) * tame_symbol(g, f1) != QiScalar(1)) return expect(false, "skew symmetry fails", rep);
    if (toeplitz_joint_torsion(f1, g) * toeplitz_joint_torsion(g, f1) != QiScalar(1))
        return expect(false, "joint torsion skew symmetry fails", rep);

    // a = c z and 1 - a = -c (z - 1/c)
    QiScalar c;
    do {
        c = random_nonzero_entry(rng, 0.3);
    } while (modulus_cmp_one(c) == UnitCmp::equal);
    const AnalyticSymbol a = make_symbol(c, {QiScalar(0)});
    const AnalyticSymbol one_minus_a = make_symbol(-c, {c.inverse()});
    if (tame_symbol(a, one_minus_a) != QiScalar(1)) return expect(false, "{a, 1-a} != 1 for c = " + to_string(c), rep);
    return expect(toeplitz_joint_torsion(a, one_minus_a) == QiScalar(1), "joint torsion of (a, 1-a) != 1", rep);
}

std::pair<TrigPoly, TrigPoly> numeric_instance(std::uint64_t s, std::size_t i) {
    const auto corpus = numeric_corpus();
    if (i < corpus.size()) return corpus[i];
    Rng rng(s);
    TrigPoly f, g;
    for (TrigPoly* p : {&f, &g}) {
        for (int k = -2; k <= 2; ++k) {
            if (k == 0 || rng.chance(0.4)) continue;
            p->coeffs[k] = cplx(rng.uniform(-4, 4) / 8.0, rng.uniform(-4, 4) / 8.0);
        }
    }
    return {f, g};
}

InstanceOutcome numeric_convergence(std::uint64_t s, std::size_t i) {
    const auto [f, g] = numeric_instance(s, i);
    const cplx target = closed_form_di(f, g);
    json errors = json::array();
    std::vector<double> errs;
    for (int N : {32, 64, 128}) {
        const double e = std::abs(numeric_det_invariant(f, g, N) - target);
        errs.push_back(e);
        errors.push_back(round15(e));
    }
    InstanceOutcome out;
    out.detail = json{{"f", trig_to_json(f)},
                      {"g", trig_to_json(g)},
                      {"closed_form", complex_to_json(target)},
                      {"N", {32, 64, 128}},
                      {"errors", errors}};
    const bool decreasing = errs[1] <= errs[0] + 1e-10 && errs[2] <= errs[1] + 1e-10;
    const bool close = errs[2] <= 1e-4;
    if (!decreasing || !close) {
        out.pass = false;
        out.message = !close ? "error at N = 128 exceeds 1e-4" : "error increased with N";
        out.reproducer = json{{"cmd", "toeplitz_numeric"},
                              {"payload", {{"f", trig_to_json(f)}, {"g", trig_to_json(g)}, {"N", {32, 64, 128}}}}};
    }
    return out;
}

InstanceOutcome pseudoinverse_agreement(std::uint64_t s, std::size_t i) {
    Rng rng(s);
    const auto [A, B] = random_commuting_pair(rng, 5);
    const QiScalar formula = pseudoinv_formula_pair(A, B);
    const QiScalar pipeline = joint_torsion_pair(A, B);
    return expect(formula == pipeline, "formula " + to_string(formula) + " vs pipeline " + to_string(pipeline),
                  json{{"cmd", "joint_torsion_pair"}, {"payload", {{"A", matrix_to_json(A)}, {"B", matrix_to_json(B)}}}});
    (void)i;
}

InstanceOutcome skew_symmetry(std::uint64_t s, std::size_t i) {
    Rng rng(s);
    const auto [A, B] = random_commuting_pair(rng, 5);
    const QiScalar p = joint_torsion_pair(A, B) * joint_torsion_pair(B, A);
    return expect(p == QiScalar(1), "product " + to_string(p), verify_request("skew-symmetry", s, i));
}

InstanceOutcome pivot_invariance(std::uint64_t s, std::size_t i) {
    Rng rng(s);
    const BasedExactSequence seq = random_exact_sequence(rng, static_cast<int>(rng.uniform(1, 6)), 3);
    const QiScalar base = torsion_scalar(seq).value;
    const int n = seq.complex.top();
    PivotSelection sel(n + 1);
    const std::vector<Mat> d = based_differentials(seq);
    for (int k = 1; k <= n; ++k) {
        const Mat dk = d[n - k];
        std::vector<Index> order(dk.cols());
        for (Index j = 0; j < dk.cols(); ++j) order[j] = j;
        for (Index j = dk.cols() - 1; j > 0; --j) std::swap(order[j], order[rng.uniform(0, j)]);
        Mat chosen(dk.rows(), 0);
        for (Index j : order) {
            Mat trial = hcat(chosen, dk.col(j));
            if (rank(trial) > chosen.cols()) {
                chosen = trial;
                sel[k].push_back(j);
            }
        }
    }
    const QiScalar other = torsion_scalar(seq, &sel).value;
    return expect(other == base, "selection changed torsion", verify_request("torsion-pivots", s, i));
}

InstanceOutcome rebase_law(std::uint64_t s, std::size_t i) {
    Rng rng(s);
    const BasedExactSequence seq = random_exact_sequence(rng, static_cast<int>(rng.uniform(1, 6)), 2);
    std::vector<Mat> g;
    for (Index d : seq.complex.dims) g.push_back(random_invertible(rng, d));
    const QiScalar before = torsion_scalar(seq).value;
    const QiScalar after = torsion_scalar(rebase(seq, g)).value;
    return expect(after == before * rebase_factor(seq, g), "transformation law fails", verify_request("rebase-law", s, i));
}

InstanceOutcome torsion_direct_sum(std::uint64_t s, std::size_t i) {
    Rng rng(s);
    const int n = static_cast<int>(rng.uniform(1, 6));
    const BasedExactSequence a = random_exact_sequence(rng, n, 2), b = random_exact_sequence(rng, n, 2);
    const QiScalar lhs = torsion_scalar(direct_sum(a, b)).value;
    const QiScalar rhs =
        sign_power(direct_sum_sign_exponent(a, b)) * torsion_scalar(a).value * torsion_scalar(b).value;
    return expect(lhs == rhs, "signed direct-sum law fails", verify_request("torsion-direct-sum", s, i));
}

const std::map<std::string, InstanceFn>& registry() {
    static const std::map<std::string, InstanceFn> r = {
        {"finite-triviality", finite_triviality},
        {"torsion-determinant", torsion_determinant},
        {"direct-sum", direct_sum},
        {"basis-independence", basis_independence},
        {"factorization", factorization},
        {"tame-oracle", tame_oracle},
        {"steinberg", steinberg},
        {"numeric-convergence", numeric_convergence},
        {"pseudoinverse", pseudoinverse_agreement},
        {"skew-symmetry", skew_symmetry},
        {"torsion-pivots", pivot_invariance},
        {"rebase-law", rebase_law},
        {"torsion-direct-sum", torsion_direct_sum},
    };
    return r;
}

const InstanceFn& lookup(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw DomainError("unknown suite \"" + name + "\"");
    return it->second;
}

InstanceOutcome guarded(const InstanceFn& fn, const std::string& name, std::uint64_t s, std::size_t i) {
    try {
        return fn(s, i);
    } catch (const std::exception& e) {
        return expect(false, std::string("exception: ") + e.what(), verify_request(name, s, i));
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, fn] : registry()) v.push_back(k);
        return v;
    }();
    return names;
}

InstanceOutcome run_suite_instance(const std::string& name, std::uint64_t instance_seed, std::size_t index) {
    return guarded(lookup(name), name, instance_seed, index);
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t count) {
    const InstanceFn& fn = lookup(name);
    std::vector<InstanceOutcome> outcomes(count);
    std::atomic<std::size_t> next{0};
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency())));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) outcomes[i] = guarded(fn, name, derive_seed(seed, i), i);
        });
    }
    for (std::thread& t : pool) t.join();

    SuiteResult r;
    r.name = name;
    r.seed = seed;
    r.total = count;
    for (std::size_t i = 0; i < count; ++i) {
        InstanceOutcome& o = outcomes[i];
        if (o.pass)
            ++r.passed;
        else
            r.failures.push_back({i, derive_seed(seed, i), o.message, o.reproducer});
        r.details.push_back(std::move(o.detail));
    }
    return r;
}

}  // namespace jt
