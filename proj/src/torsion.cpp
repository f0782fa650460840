#include "jt/torsion.hpp"

#include <string>

namespace jt {

Mat ChainComplex::d(int k) const {
    if (k >= 1 && k <= top()) return diffs[top() - k];
    return Mat::Zero(dim(k - 1), dim(k));
}

ChainComplex make_complex(std::vector<Index> dims, std::vector<Mat> diffs) {
    if (dims.empty()) throw DomainError("complex needs at least one space");
    if (diffs.size() + 1 != dims.size()) throw DomainError("complex needs one map between consecutive spaces");
    for (size_t p = 0; p < diffs.size(); ++p) {
        if (diffs[p].cols() != dims[p] || diffs[p].rows() != dims[p + 1])
            throw DomainError("differential " + std::to_string(p) + " has wrong shape");
    }
    for (size_t p = 0; p + 1 < diffs.size(); ++p) {
        if (!is_zero(diffs[p + 1] * diffs[p])) throw DomainError("not a complex");
    }
    return ChainComplex{std::move(dims), std::move(diffs)};
}

Subquotient homology(const ChainComplex& c, int k) {
    if (k < 0 || k > c.top()) throw DomainError("degree out of range");
    return build_subquotient(c.dim(k), kernel_basis(c.d(k)), image_basis(c.d(k + 1)));
}

namespace {

std::vector<Index> ranks_by_degree(const ChainComplex& c) {
    // r[k] = rank d_k for k = 0..n+1
    std::vector<Index> r(c.top() + 2, 0);
    for (int k = 1; k <= c.top(); ++k) r[k] = rank(c.d(k));
    return r;
}

std::uint64_t fingerprint(const std::vector<Mat>& bases) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    for (const Mat& b : bases) {
        mix(std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
        for (Index j = 0; j < b.cols(); ++j)
            for (Index i = 0; i < b.rows(); ++i) mix(to_string(b(i, j)));
    }
    return h;
}

}  // namespace

BasedExactSequence make_exact_sequence(ChainComplex c, std::vector<Mat> bases) {
    if (bases.empty()) {
        for (Index d : c.dims) bases.push_back(Mat::Identity(d, d));
    }
    if (bases.size() != c.dims.size()) throw DomainError("one basis per space required");
    for (size_t p = 0; p < bases.size(); ++p) {
        if (bases[p].rows() != c.dims[p] || bases[p].cols() != c.dims[p] || rank(bases[p]) != c.dims[p])
            throw DomainError("basis " + std::to_string(p) + " is not a basis");
    }
    auto r = ranks_by_degree(c);
    for (int k = 0; k <= c.top(); ++k) {
        if (r[k] + r[k + 1] != c.dim(k)) throw DomainError("sequence not exact");
    }
    return BasedExactSequence{std::move(c), std::move(bases)};
}

std::vector<Mat> based_differentials(const BasedExactSequence& s) {
    std::vector<Mat> out;
    const auto& c = s.complex;
    for (size_t p = 0; p < c.diffs.size(); ++p) out.push_back(inverse(s.bases[p + 1]) * c.diffs[p] * s.bases[p]);
    return out;
}

TorsionScalar torsion_scalar(const BasedExactSequence& s, const PivotSelection* pivots) {
    const ChainComplex& c = s.complex;
    const int n = c.top();
    const ChainComplex based{c.dims, based_differentials(s)};

    PivotSelection t(n + 1);
    for (int k = 1; k <= n; ++k) {
        const Mat dk = based.d(k);
        const Index rk = rank(dk);
        if (pivots) {
            if (static_cast<int>(pivots->size()) != n + 1) throw DomainError("pivot selection needs n+1 entries");
            t[k] = (*pivots)[k];
            Mat cols(dk.rows(), static_cast<Index>(t[k].size()));
            for (size_t j = 0; j < t[k].size(); ++j) {
                if (t[k][j] < 0 || t[k][j] >= dk.cols()) throw DomainError("pivot selection out of range");
                cols.col(j) = dk.col(t[k][j]);
            }
            if (cols.cols() != rk || rank(cols) != rk) throw DomainError("invalid pivot selection");
        } else {
            t[k] = rref_decompose(dk, false).pivots;
        }
    }
    if (pivots && !(*pivots)[0].empty()) throw DomainError("invalid pivot selection");

    QiScalar value(1);
    for (int k = n - 1; k >= 0; --k) {
        const Index dim = c.dim(k);
        if (dim == 0) continue;
        const Mat up = based.d(k + 1);
        Mat m(dim, static_cast<Index>(t[k + 1].size() + t[k].size()));
        Index col = 0;
        for (Index j : t[k + 1]) m.col(col++) = up.col(j);
        for (Index j : t[k]) m.col(col++) = Mat::Identity(dim, dim).col(j);
        if (col != dim) throw DomainError("sequence not exact");
        const QiScalar ck = determinant(m);
        if (ck.is_zero()) throw DomainError("sequence not exact");
        value = torsion_exponent(n, k) > 0 ? value * ck : value / ck;
    }
    if (static_cast<Index>(t[n].size()) != c.dim(n)) throw DomainError("sequence not exact");
    return TorsionScalar{value, fingerprint(s.bases)};
}

BasedExactSequence rebase(const BasedExactSequence& s, const std::vector<Mat>& g) {
    if (g.size() != s.bases.size()) throw DomainError("one change of basis per space required");
    std::vector<Mat> nb;
    for (size_t p = 0; p < g.size(); ++p) {
        if (g[p].rows() != s.bases[p].cols() || g[p].cols() != s.bases[p].cols() || rank(g[p]) != g[p].rows())
            throw DomainError("singular change of basis");
        nb.push_back(s.bases[p] * g[p]);
    }
    return BasedExactSequence{s.complex, std::move(nb)};
}

QiScalar rebase_factor(const BasedExactSequence& s, const std::vector<Mat>& g) {
    const int n = s.complex.top();
    QiScalar f(1);
    for (int k = 0; k <= n; ++k) {
        const QiScalar dg = determinant(g[n - k]);
        f = torsion_exponent(n, k) > 0 ? f / dg : f * dg;
    }
    return f;
}

BasedExactSequence direct_sum(const BasedExactSequence& a, const BasedExactSequence& b) {
    if (a.complex.dims.size() != b.complex.dims.size()) throw DomainError("direct sum needs equal lengths");
    std::vector<Index> dims;
    std::vector<Mat> diffs, bases;
    for (size_t p = 0; p < a.complex.dims.size(); ++p) {
        dims.push_back(a.complex.dims[p] + b.complex.dims[p]);
        bases.push_back(block_diag(a.bases[p], b.bases[p]));
    }
    for (size_t p = 0; p < a.complex.diffs.size(); ++p)
        diffs.push_back(block_diag(a.complex.diffs[p], b.complex.diffs[p]));
    return make_exact_sequence(make_complex(std::move(dims), std::move(diffs)), std::move(bases));
}

long direct_sum_sign_exponent(const BasedExactSequence& a, const BasedExactSequence& b) {
    auto ra = ranks_by_degree(a.complex);
    auto rb = ranks_by_degree(b.complex);
    long e = 0;
    for (int k = 0; k <= a.complex.top(); ++k) e += static_cast<long>(ra[k] * rb[k + 1]);
    return e;
}

}  // namespace jt
