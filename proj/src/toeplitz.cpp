#include "jt/toeplitz.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace jt {

AnalyticSymbol make_symbol(QiScalar leading, std::vector<QiScalar> roots) {
    if (leading.is_zero()) throw DomainError("zero leading coefficient");
    AnalyticSymbol s;
    s.leading = std::move(leading);
    for (const QiScalar& r : roots) {
        const UnitCmp c = modulus_cmp_one(r);
        if (c == UnitCmp::equal) throw DomainError("not Fredholm");
        s.inside.push_back(c == UnitCmp::less);
        if (c == UnitCmp::less) ++s.winding;
    }
    s.roots = std::move(roots);
    return s;
}

QiScalar evaluate(const AnalyticSymbol& f, const QiScalar& z) {
    QiScalar v = f.leading;
    for (const QiScalar& r : f.roots) v *= z - r;
    return v;
}

namespace {

// (z - r) * p, ascending coefficients
std::vector<QiScalar> times_linear(const std::vector<QiScalar>& p, const QiScalar& r) {
    std::vector<QiScalar> out(p.size() + 1, QiScalar(0));
    for (size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] -= r * p[i];
    }
    return out;
}

}  // namespace

std::vector<QiScalar> coefficients(const AnalyticSymbol& f) {
    std::vector<QiScalar> p{f.leading};
    for (const QiScalar& r : f.roots) p = times_linear(p, r);
    return p;
}

std::vector<QiScalar> inside_polynomial(const AnalyticSymbol& f) {
    std::vector<QiScalar> p{QiScalar(1)};
    for (size_t i = 0; i < f.roots.size(); ++i)
        if (f.inside[i]) p = times_linear(p, f.roots[i]);
    return p;
}

AnalyticSymbol symbol_product(const AnalyticSymbol& f, const AnalyticSymbol& g) {
    std::vector<QiScalar> roots = f.roots;
    roots.insert(roots.end(), g.roots.begin(), g.roots.end());
    return make_symbol(f.leading * g.leading, std::move(roots));
}

Mat coker_action(const AnalyticSymbol& f, const AnalyticSymbol& g) {
    const std::vector<QiScalar> fin = inside_polynomial(f);
    const std::vector<QiScalar> gc = coefficients(g);
    const Index d = static_cast<Index>(fin.size()) - 1;
    Mat m = Mat::Zero(d, d);
    for (Index j = 0; j < d; ++j) {
        std::vector<QiScalar> p(static_cast<size_t>(j) + gc.size(), QiScalar(0));
        for (size_t i = 0; i < gc.size(); ++i) p[static_cast<size_t>(j) + i] = gc[i];
        for (Index deg = static_cast<Index>(p.size()) - 1; deg >= d; --deg) {
            const QiScalar c = p[deg];
            if (c.is_zero()) continue;
            p[deg] = QiScalar(0);
            for (Index i = 0; i < d; ++i) p[deg - d + i] -= c * fin[i];
        }
        for (Index i = 0; i < d && i < static_cast<Index>(p.size()); ++i) m(i, j) = p[i];
    }
    return m;
}

void require_acyclic(const AnalyticSymbol& f, const AnalyticSymbol& g) {
    for (size_t i = 0; i < f.roots.size(); ++i) {
        if (!f.inside[i]) continue;
        for (size_t j = 0; j < g.roots.size(); ++j)
            if (g.inside[j] && f.roots[i] == g.roots[j])
                throw DomainError("Koszul complex not acyclic - out of scope");
    }
}

namespace {

BasedExactSequence middle_only(const Mat& action) {
    const Index w = action.rows();
    std::vector<Index> dims{0, 0, 0, 0, w, w, 0};
    std::vector<Mat> maps;
    for (size_t p = 0; p + 1 < dims.size(); ++p) maps.push_back(Mat::Zero(dims[p + 1], dims[p]));
    maps[4] = action;
    return make_exact_sequence(make_complex(std::move(dims), std::move(maps)));
}

}  // namespace

EpsSequences toeplitz_eps_sequences(const AnalyticSymbol& f, const AnalyticSymbol& g) {
    require_acyclic(f, g);
    return {middle_only(coker_action(g, f)), middle_only(coker_action(f, g))};
}

RestrictionData toeplitz_restriction_data(const AnalyticSymbol& f, const AnalyticSymbol& g) {
    require_acyclic(f, g);
    return RestrictionData{Mat(0, 0), coker_action(f, g), coker_action(g, f), Mat(0, 0)};
}

QiScalar toeplitz_joint_torsion(const AnalyticSymbol& f, const AnalyticSymbol& g) {
    const EpsSequences eps = toeplitz_eps_sequences(f, g);
    // Both Koszul homology groups at the ends vanish, so the sign exponent is 0.
    return torsion_scalar(eps.ad).value / torsion_scalar(eps.bc).value;
}

QiScalar tame_symbol(const AnalyticSymbol& f, const AnalyticSymbol& g) {
    require_acyclic(f, g);
    QiScalar num(1), den(1);
    for (size_t j = 0; j < g.roots.size(); ++j)
        if (g.inside[j]) num *= evaluate(f, g.roots[j]);
    for (size_t i = 0; i < f.roots.size(); ++i)
        if (f.inside[i]) den *= evaluate(g, f.roots[i]);
    return num / den;
}

int TrigPoly::reach() const {
    int r = 0;
    for (const auto& [k, v] : coeffs)
        if (v != cplx(0.0, 0.0)) r = std::max(r, std::abs(k));
    return r;
}

namespace {

// Taylor coefficients h_0..h_len-1 of exp(sum_{k>=1} p_k w^k) from n h_n = sum k p_k h_{n-k}.
std::vector<cplx> one_sided_exp(const std::vector<cplx>& p, int len) {
    std::vector<cplx> h(len, cplx(0.0, 0.0));
    if (len == 0) return h;
    h[0] = 1.0;
    const int K = static_cast<int>(p.size()) - 1;
    for (int n = 1; n < len; ++n) {
        cplx acc(0.0, 0.0);
        for (int k = 1; k <= std::min(n, K); ++k) acc += static_cast<double>(k) * p[k] * h[n - k];
        h[n] = acc / static_cast<double>(n);
    }
    return h;
}

}  // namespace

std::vector<cplx> exp_symbol_coeffs(const TrigPoly& f, int N) {
    const int K = f.reach();
    std::vector<cplx> plus(K + 1, cplx(0.0, 0.0)), minus(K + 1, cplx(0.0, 0.0));
    for (int k = 1; k <= K; ++k) {
        plus[k] = f[k];
        minus[k] = f[-k];
    }
    // One-sided series are carried past N so the convolution is accurate up to |degree| = N.
    const int len = 2 * N + K + 1;
    const std::vector<cplx> hp = one_sided_exp(plus, len);
    const std::vector<cplx> hm = one_sided_exp(minus, len);
    const cplx scale = std::exp(f[0]);
    std::vector<cplx> out(2 * N + 1, cplx(0.0, 0.0));
    for (int m = -N; m <= N; ++m) {
        cplx acc(0.0, 0.0);
        for (int j = std::max(0, -m); j < len && m + j < len; ++j) acc += hp[m + j] * hm[j];
        out[m + N] = scale * acc;
    }
    return out;
}

cplx closed_form_di(const TrigPoly& f, const TrigPoly& g) {
    cplx s(0.0, 0.0);
    const int K = std::max(f.reach(), g.reach());
    for (int k = -K; k <= K; ++k) s += static_cast<double>(k) * f[-k] * g[k];
    return std::exp(s);
}

int default_buffer(const TrigPoly& f, const TrigPoly& g) {
    const int K = std::max(1, std::max(f.reach(), g.reach()));
    return 4 * K * static_cast<int>(std::ceil(std::log(1e14) / std::log(2.0)));
}

namespace {

using CMat = Eigen::MatrixXcd;

CMat toeplitz_section(const TrigPoly& symbol, int size) {
    const std::vector<cplx> c = exp_symbol_coeffs(symbol, size - 1);
    CMat t(size, size);
    for (int j = 0; j < size; ++j)
        for (int k = 0; k < size; ++k) t(j, k) = c[j - k + size - 1];
    return t;
}

TrigPoly part(const TrigPoly& f, bool analytic_with_constant, double sign) {
    TrigPoly out;
    for (const auto& [k, v] : f.coeffs)
        if ((k >= 0) == analytic_with_constant) out.coeffs[k] = sign * v;
    return out;
}

}  // namespace

cplx numeric_det_invariant(const TrigPoly& f, const TrigPoly& g, int N, int buffer) {
    if (N < 16) throw DomainError("N must be at least 16");
    if (buffer < 0) buffer = default_buffer(f, g);
    const int size = N + buffer;
    const CMat a = toeplitz_section(f, size);
    const CMat b = toeplitz_section(g, size);
    const CMat a_inv = toeplitz_section(part(f, true, -1.0), size) * toeplitz_section(part(f, false, -1.0), size);
    const CMat b_inv = toeplitz_section(part(g, true, -1.0), size) * toeplitz_section(part(g, false, -1.0), size);
    const CMat prod = a * b * a_inv * b_inv;
    const CMat lead = prod.topLeftCorner(N, N);
    const char* unstable = "truncation unstable, increase N or shrink symbol";
    if (!lead.allFinite()) throw DomainError(unstable);
    const double scale = std::max(1.0, lead.cwiseAbs().maxCoeff());
    Eigen::PartialPivLU<CMat> lu(lead);
    const CMat& u = lu.matrixLU();
    for (int i = 0; i < N; ++i)
        if (std::abs(u(i, i)) < 1e-12 * scale) throw DomainError(unstable);
    const cplx det = lu.determinant();
    if (!std::isfinite(det.real()) || !std::isfinite(det.imag())) throw DomainError(unstable);
    return det;
}

}  // namespace jt
