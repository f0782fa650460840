#include "jt/random.hpp"

namespace jt {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    const std::uint64_t base = splitmix64(s);
    std::uint64_t t = base ^ (index * 0xd1b54a32d192ed03ull);
    return splitmix64(t);
}

namespace {

mpq_class small_rational(Rng& rng) { return mpq_class(rng.uniform(-4, 4), rng.uniform(1, 4)); }

mpq_class small_nonzero_rational(Rng& rng) {
    long p = rng.uniform(1, 4) * (rng.chance(0.5) ? 1 : -1);
    return mpq_class(p, rng.uniform(1, 4));
}

}  // namespace

QiScalar random_entry(Rng& rng, double complex_p) {
    mpq_class re = small_rational(rng);
    mpq_class im = rng.chance(complex_p) ? small_rational(rng) : mpq_class(0);
    return QiScalar(re, im);
}

QiScalar random_nonzero_entry(Rng& rng, double complex_p) {
    mpq_class re = small_nonzero_rational(rng);
    mpq_class im = rng.chance(complex_p) ? small_rational(rng) : mpq_class(0);
    return QiScalar(re, im);
}

Mat random_matrix(Rng& rng, Index rows, Index cols, double zero_p, double complex_p) {
    Mat m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = rng.chance(zero_p) ? QiScalar(0) : random_entry(rng, complex_p);
    return m;
}

Mat random_low_rank(Rng& rng, Index h) {
    const Index r = rng.uniform(0, h);
    if (r == 0) return Mat::Zero(h, h);
    return random_matrix(rng, h, r, 0.1) * random_matrix(rng, r, h, 0.1);
}

Mat random_invertible(Rng& rng, Index h) {
    for (;;) {
        Mat m = random_matrix(rng, h, h, 0.2);
        if (!determinant(m).is_zero()) return m;
    }
}

Quadruple quadruple_direct_sum(const Quadruple& a, const Quadruple& b) {
    return Quadruple{block_diag(a.A, b.A), block_diag(a.B, b.B), block_diag(a.C, b.C), block_diag(a.D, b.D)};
}

namespace {

Mat poly_in(Rng& rng, const Mat& x) {
    const Index h = x.rows();
    Mat out = Mat::Zero(h, h);
    Mat power = Mat::Identity(h, h);
    const long deg = rng.uniform(0, 2);
    for (long d = 0; d <= deg; ++d) {
        if (rng.chance(0.7)) out += random_entry(rng, 0.1) * power;
        power = power * x;
    }
    return out;
}

std::pair<Mat, Mat> commuting_of_size(Rng& rng, Index h, int depth);

Quadruple quadruple_of_size(Rng& rng, Index h, int depth) {
    const long family = rng.uniform(0, depth > 0 ? 3 : 4);
    switch (family) {
        case 0: {
            Mat A = random_low_rank(rng, h), B = random_low_rank(rng, h), D = random_invertible(rng, h);
            Mat C = A * B * inverse(D);
            return Quadruple{A, B, C, D};
        }
        case 1: {
            auto [A, B] = commuting_of_size(rng, h, depth + 1);
            return Quadruple{A, B, B, A};
        }
        case 2: {
            Mat A = random_low_rank(rng, h), B = random_low_rank(rng, h), C = random_invertible(rng, h);
            Mat D = inverse(C) * A * B;
            return Quadruple{A, B, C, D};
        }
        case 3: {
            if (h < 2) return quadruple_of_size(rng, h, depth + 1);
            Quadruple small = quadruple_of_size(rng, h - 1, depth + 1);
            Mat z = Mat::Zero(1, 1);
            return quadruple_direct_sum(small, Quadruple{z, z, z, z});
        }
        default: {
            if (h < 2) return quadruple_of_size(rng, h, depth + 1);
            const Index h1 = rng.uniform(1, h - 1);
            return quadruple_direct_sum(quadruple_of_size(rng, h1, depth + 1), quadruple_of_size(rng, h - h1, depth + 1));
        }
    }
}

}  // namespace

Quadruple random_quadruple(Rng& rng, Index max_h) { return quadruple_of_size(rng, rng.uniform(1, max_h), 0); }

namespace {

std::pair<Mat, Mat> commuting_of_size(Rng& rng, Index h, int depth) {
    const long family = rng.uniform(0, depth > 0 ? 2 : 3);
    switch (family) {
        case 0: {
            Mat x = rng.chance(0.5) ? random_low_rank(rng, h) : random_matrix(rng, h, h, 0.4);
            return {poly_in(rng, x), poly_in(rng, x)};
        }
        case 1: {
            Mat n = Mat::Zero(h, h);
            for (Index i = 0; i + 1 < h; ++i) n(i, i + 1) = QiScalar(1);
            return {poly_in(rng, n), poly_in(rng, n)};
        }
        case 2: {
            Mat p = random_invertible(rng, h), pi = inverse(p);
            Mat d1 = Mat::Zero(h, h), d2 = Mat::Zero(h, h);
            for (Index i = 0; i < h; ++i) {
                if (rng.chance(0.6)) d1(i, i) = random_entry(rng, 0.1);
                if (rng.chance(0.6)) d2(i, i) = random_entry(rng, 0.1);
            }
            return {p * d1 * pi, p * d2 * pi};
        }
        default: {
            if (h < 2) return commuting_of_size(rng, h, depth + 1);
            const Index h1 = rng.uniform(1, h - 1);
            auto [a1, b1] = commuting_of_size(rng, h1, depth + 1);
            auto [a2, b2] = commuting_of_size(rng, h - h1, depth + 1);
            return {block_diag(a1, a2), block_diag(b1, b2)};
        }
    }
}

}  // namespace

std::pair<Mat, Mat> random_commuting_pair(Rng& rng, Index max_h) {
    return commuting_of_size(rng, rng.uniform(1, max_h), 0);
}

BasedExactSequence random_exact_sequence(Rng& rng, int n, long max_rank) {
    // r[k] = rank d_k for k = 0..n+1, with r[0] = r[n+1] = 0; dim V_k = r[k] + r[k+1].
    std::vector<Index> r(n + 2, 0);
    for (int k = 1; k <= n; ++k) r[k] = rng.uniform(0, max_rank);
    std::vector<Index> dim(n + 1);
    for (int k = 0; k <= n; ++k) dim[k] = r[k] + r[k + 1];
    std::vector<Mat> g(n + 1);
    for (int k = 0; k <= n; ++k) g[k] = random_invertible(rng, dim[k]);

    std::vector<Index> dims;
    std::vector<Mat> diffs;
    for (int k = n; k >= 0; --k) dims.push_back(dim[k]);
    for (int k = n; k >= 1; --k) {
        // In adapted coordinates V_k = (image of d_{k+1}) + (complement mapped onto the image of d_k).
        Mat s = Mat::Zero(dim[k - 1], dim[k]);
        for (Index i = 0; i < r[k]; ++i) s(i, r[k + 1] + i) = QiScalar(1);
        diffs.push_back(g[k - 1] * s * inverse(g[k]));
    }
    return make_exact_sequence(make_complex(std::move(dims), std::move(diffs)));
}

AnalyticSymbol random_symbol(Rng& rng, int max_roots) {
    const long count = rng.uniform(0, max_roots);
    std::vector<QiScalar> roots;
    while (static_cast<long>(roots.size()) < count) {
        QiScalar z = random_entry(rng, 0.25);
        if (modulus_cmp_one(z) != UnitCmp::equal) roots.push_back(z);
    }
    return make_symbol(random_nonzero_entry(rng, 0.2), std::move(roots));
}

std::pair<AnalyticSymbol, AnalyticSymbol> random_symbol_pair(Rng& rng, int max_roots) {
    AnalyticSymbol f = random_symbol(rng, max_roots);
    for (;;) {
        AnalyticSymbol g = random_symbol(rng, max_roots);
        try {
            require_acyclic(f, g);
            return {std::move(f), std::move(g)};
        } catch (const DomainError&) {
        }
    }
}

}  // namespace jt
