#include "jt/koszul.hpp"

#include <algorithm>

namespace jt {

namespace {

void require_square_family(const std::vector<const Mat*>& ms) {
    const Index h = ms.front()->rows();
    for (const Mat* m : ms)
        if (m->rows() != h || m->cols() != h) throw DomainError("operators must be square of one size");
}

// Subsets of {0..n-1} of the given size in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int x = start; x < n; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Mat inc(Index h, int slot) {
    Mat m = Mat::Zero(2 * h, h);
    m.block(slot * h, 0, h, h) = Mat::Identity(h, h);
    return m;
}

Mat proj(Index h, int slot) {
    Mat m = Mat::Zero(h, 2 * h);
    m.block(0, slot * h, h, h) = Mat::Identity(h, h);
    return m;
}

BasedExactSequence sequence_from(const std::vector<const Subquotient*>& spaces, std::vector<Mat> maps) {
    std::vector<Index> dims;
    for (const Subquotient* s : spaces) dims.push_back(s->dim());
    try {
        return make_exact_sequence(make_complex(std::move(dims), std::move(maps)));
    } catch (const DomainError& e) {
        throw InternalError(std::string("long exact sequence failed: ") + e.what());
    }
}

QiScalar det_between(const Mat& m, const Subquotient& src, const Subquotient& dst) {
    return determinant(induced_map(m, src, dst));
}

}  // namespace

ChainComplex build_koszul(const std::vector<Mat>& ops) {
    if (ops.empty()) throw DomainError("Koszul complex needs at least one operator");
    std::vector<const Mat*> ptrs;
    for (const Mat& m : ops) ptrs.push_back(&m);
    require_square_family(ptrs);
    for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = i + 1; j < ops.size(); ++j) require_commuting(ops[i], ops[j]);

    const int n = static_cast<int>(ops.size());
    const Index h = ops.front().rows();
    std::vector<std::vector<std::vector<int>>> basis(n + 1);
    for (int i = 0; i <= n; ++i) basis[i] = subsets(n, i);

    std::vector<Index> dims;
    std::vector<Mat> diffs;
    for (int i = n; i >= 0; --i) dims.push_back(h * static_cast<Index>(basis[i].size()));
    for (int i = n; i >= 1; --i) {
        const auto& src = basis[i];
        const auto& dst = basis[i - 1];
        Mat d = Mat::Zero(h * static_cast<Index>(dst.size()), h * static_cast<Index>(src.size()));
        for (size_t c = 0; c < src.size(); ++c) {
            for (size_t j = 0; j < src[c].size(); ++j) {
                std::vector<int> t = src[c];
                t.erase(t.begin() + static_cast<long>(j));
                const auto r = static_cast<Index>(std::find(dst.begin(), dst.end(), t) - dst.begin());
                const Mat& a = ops[src[c][j]];
                if (j % 2 == 0)
                    d.block(r * h, static_cast<Index>(c) * h, h, h) += a;
                else
                    d.block(r * h, static_cast<Index>(c) * h, h, h) -= a;
            }
        }
        diffs.push_back(std::move(d));
    }
    return make_complex(std::move(dims), std::move(diffs));
}

Quadruple make_quadruple(Mat A, Mat B, Mat C, Mat D) {
    require_square_family({&A, &B, &C, &D});
    if (A * B != C * D) throw DomainError("AB != CD");
    return Quadruple{std::move(A), std::move(B), std::move(C), std::move(D)};
}

ChainComplex build_quad_complex(const Quadruple& q) {
    const Index h = q.h();
    if (q.A * q.B != q.C * q.D) throw DomainError("AB != CD");
    Mat d2 = vcat(-q.B, q.D);
    Mat d1 = hcat(q.A, q.C);
    return make_complex({h, 2 * h, h}, {std::move(d2), std::move(d1)});
}

QuadSpaces quad_spaces(const Quadruple& q) {
    const ChainComplex c = build_quad_complex(q);
    return QuadSpaces{homology(c, 2),         homology(c, 1),         homology(c, 0),
                      kernel_space(q.A),      kernel_space(q.B),      kernel_space(q.C),
                      kernel_space(q.D),      cokernel_space(q.A),    cokernel_space(q.B),
                      cokernel_space(q.C),    cokernel_space(q.D)};
}

EpsSequences build_eps_sequences(const Quadruple& q) { return build_eps_sequences(q, quad_spaces(q)); }

EpsSequences build_eps_sequences(const Quadruple& q, const QuadSpaces& s) {
    const Index h = q.h();
    const Mat I = Mat::Identity(h, h);
    BasedExactSequence ad = sequence_from(
        {&s.H2, &s.kerB, &s.kerC, &s.H1, &s.cokB, &s.cokC, &s.H0},
        {induced_map(I, s.H2, s.kerB), induced_map(q.D, s.kerB, s.kerC), induced_map(inc(h, 1), s.kerC, s.H1),
         induced_map(proj(h, 0), s.H1, s.cokB), induced_map(q.A, s.cokB, s.cokC), induced_map(I, s.cokC, s.H0)});
    BasedExactSequence bc = sequence_from(
        {&s.H2, &s.kerD, &s.kerA, &s.H1, &s.cokD, &s.cokA, &s.H0},
        {induced_map(-I, s.H2, s.kerD), induced_map(q.B, s.kerD, s.kerA), induced_map(inc(h, 0), s.kerA, s.H1),
         induced_map(proj(h, 1), s.H1, s.cokD), induced_map(q.C, s.cokD, s.cokA), induced_map(I, s.cokA, s.H0)});
    return {std::move(ad), std::move(bc)};
}

BasedExactSequence four_term_sequence(const Mat& A, const Subquotient& ker, const Subquotient& coker) {
    const Index h = A.rows();
    if (A.cols() != h || ker.ambient_dim != h || coker.ambient_dim != h)
        throw DomainError("four-term sequence shape mismatch");
    try {
        return make_exact_sequence(
            make_complex({ker.dim(), h, h, coker.dim()}, {ker.lift_map(), A, coker.project_map}));
    } catch (const DomainError& e) {
        throw InternalError(std::string("four-term sequence failed: ") + e.what());
    }
}

QiScalar perturbation_sigma(const Mat& A, const Mat& D) {
    return perturbation_sigma(A, D, kernel_space(A), cokernel_space(A), kernel_space(D), cokernel_space(D));
}

QiScalar perturbation_sigma(const Mat& A, const Mat& D, const Subquotient& kerA, const Subquotient& cokA,
                            const Subquotient& kerD, const Subquotient& cokD) {
    require_square_family({&A, &D});
    const Index h = A.rows();
    const QiScalar ta = torsion_scalar(four_term_sequence(A, kerA, cokA)).value;
    const QiScalar td = torsion_scalar(four_term_sequence(D, kerD, cokD)).value;
    return sign_power(kappa(kerA.dim(), h) + kappa(kerD.dim(), h)) * ta / td;
}

JointTorsionReport joint_torsion_quad(const Quadruple& q) { return joint_torsion_quad(q, quad_spaces(q)); }

JointTorsionReport joint_torsion_quad(const Quadruple& q, const QuadSpaces& s) {
    const Index h = q.h();
    const EpsSequences eps = build_eps_sequences(q, s);
    JointTorsionReport r;
    r.tau_AD = torsion_scalar(eps.ad);
    r.tau_BC = torsion_scalar(eps.bc);
    r.sigma_AD = perturbation_sigma(q.A, q.D, s.kerA, s.cokA, s.kerD, s.cokD);
    r.sigma_BC = perturbation_sigma(q.B, q.C, s.kerB, s.cokB, s.kerC, s.cokC);

    const long kA = s.kerA.dim(), kB = s.kerB.dim(), kC = s.kerC.dim(), kD = s.kerD.dim();
    const long cA = s.cokA.dim(), cC = s.cokC.dim();
    r.h2 = s.H2.dim();
    r.h1 = s.H1.dim();
    r.h0 = s.H0.dim();
    r.lambda = static_cast<long>(r.h2) * (kD + kB) + static_cast<long>(r.h0) * (cA + cC);
    r.nu = kB * (kB + kC) + kD * (kD + kA);
    r.kappa_A = kappa(kA, h);
    r.kappa_B = kappa(kB, h);
    r.kappa_C = kappa(kC, h);
    r.kappa_D = kappa(kD, h);
    r.mu_A = kA * cA;
    r.mu_B = kB * static_cast<long>(s.cokB.dim());
    r.mu_C = kC * cC;
    r.mu_D = kD * static_cast<long>(s.cokD.dim());
    r.dims_AD = eps.ad.complex.dims;
    r.dims_BC = eps.bc.complex.dims;
    r.value = sign_power(r.lambda + r.nu) * r.tau_AD.value / r.tau_BC.value * r.sigma_AD * r.sigma_BC;
    if (r.value.is_zero()) throw InternalError("zero joint torsion");
    return r;
}

void require_commuting(const Mat& A, const Mat& B) {
    require_square_family({&A, &B});
    if (A * B != B * A) throw DomainError("operators do not commute");
}

QiScalar joint_torsion_pair(const Mat& A, const Mat& B) {
    require_commuting(A, B);
    return joint_torsion_quad(Quadruple{A, B, B, A}).value;
}

RestrictionData restriction_data(const Mat& A, const Mat& B) {
    require_commuting(A, B);
    const Subquotient kA = kernel_space(A), cA = cokernel_space(A);
    const Subquotient kB = kernel_space(B), cB = cokernel_space(B);
    return RestrictionData{induced_map(B, kA, kA), induced_map(B, cA, cA), induced_map(A, cB, cB),
                           induced_map(A, kB, kB)};
}

QiScalar lefschetz_ratio(const RestrictionData& r) {
    QiScalar out(1);
    int slot = 0;
    for (const Mat* m : {&r.B_on_kerA, &r.B_on_cokA, &r.A_on_cokB, &r.A_on_kerB}) {
        if (m->rows() != m->cols()) throw DomainError("pair not acyclic");
        const QiScalar d = determinant(*m);
        if (d.is_zero()) throw DomainError("pair not acyclic");
        out = (slot == 0 || slot == 2) ? out * d : out / d;
        ++slot;
    }
    return out;
}

Mat graded_combined_map(const BasedExactSequence& s) {
    const auto& dims = s.complex.dims;
    const std::vector<Mat> d = based_differentials(s);
    const int len = static_cast<int>(dims.size());

    std::vector<int> plus, minus;
    for (int p = 0; p < len; p += 2) plus.push_back(p);
    for (int p = (len - 1) - ((len - 1) % 2 == 0 ? 1 : 0); p >= 1; p -= 2) minus.push_back(p);

    std::vector<Index> offset(len, 0);
    Index np = 0, nm = 0;
    for (int p : plus) offset[p] = np, np += dims[p];
    for (int p : minus) offset[p] = nm, nm += dims[p];
    if (np != nm) throw InternalError("graded halves differ in dimension");

    Mat dplus = Mat::Zero(nm, np);
    Mat dminus = Mat::Zero(np, nm);
    for (int p = 0; p + 1 < len; ++p) {
        if (p % 2 == 0)
            dplus.block(offset[p + 1], offset[p], dims[p + 1], dims[p]) = d[p];
        else
            dminus.block(offset[p + 1], offset[p], dims[p + 1], dims[p]) = d[p];
    }
    return dplus + pseudoinverse(dminus);
}

QiScalar pseudoinv_formula(const BasedExactSequence& eps_A, const BasedExactSequence& eps_B, long mu_A, long mu_B) {
    const QiScalar da = determinant(graded_combined_map(eps_A));
    const QiScalar db = determinant(graded_combined_map(eps_B));
    if (da.is_zero() || db.is_zero()) throw InternalError("singular combined map");
    return sign_power(mu_A + mu_B) * da / db;
}

QiScalar pseudoinv_formula_pair(const Mat& A, const Mat& B) {
    require_commuting(A, B);
    const Quadruple q{A, B, B, A};
    const QuadSpaces s = quad_spaces(q);
    const EpsSequences eps = build_eps_sequences(q, s);
    return pseudoinv_formula(eps.ad, eps.bc, static_cast<long>(s.kerA.dim() * s.cokA.dim()),
                             static_cast<long>(s.kerB.dim() * s.cokB.dim()));
}

QiScalar det_commutator(const Mat& A, const Mat& B) {
    require_square_family({&A, &B});
    const QiScalar da = determinant(A), db = determinant(B);
    if (da.is_zero() || db.is_zero()) throw DomainError("singular input");
    return determinant(Mat(A * B * inverse(A) * inverse(B)));
}

const std::vector<std::pair<std::string, FactorizationIdentity>>& factorization_identity_names() {
    static const std::vector<std::pair<std::string, FactorizationIdentity>> names = {
        {"perturbation", FactorizationIdentity::perturbation},
        {"perturbation2_right", FactorizationIdentity::perturbation2_right},
        {"perturbation2_left", FactorizationIdentity::perturbation2_left},
        {"det_class_right", FactorizationIdentity::det_class_right},
        {"det_class_left", FactorizationIdentity::det_class_left},
        {"invertible_right", FactorizationIdentity::invertible_right},
        {"invertible_left", FactorizationIdentity::invertible_left},
        {"invertible2", FactorizationIdentity::invertible2},
    };
    return names;
}

IdentitySides factorization_identities(const Quadruple& q, const Mat& U, FactorizationIdentity which) {
    const Index h = q.h();
    if (U.rows() != h || U.cols() != h) throw DomainError("U has wrong shape");
    if (determinant(U).is_zero()) throw DomainError("U not invertible");
    if (q.A * q.B != q.C * q.D) throw DomainError("AB != CD");
    const Mat Ui = inverse(U);
    const Mat& A = q.A;
    const Mat& D = q.D;
    const QiScalar base = perturbation_sigma(A, D);

    switch (which) {
        case FactorizationIdentity::perturbation: {
            const Mat D2 = Ui * D * U;
            const QiScalar k = det_between(Ui, kernel_space(D), kernel_space(D2));
            const QiScalar c = det_between(Ui, cokernel_space(D), cokernel_space(D2));
            return {perturbation_sigma(A, D2), base * k / c};
        }
        case FactorizationIdentity::perturbation2_right: {
            const Mat AU = A * U, DU = D * U;
            const QiScalar ka = det_between(Ui, kernel_space(A), kernel_space(AU));
            const QiScalar kd = det_between(Ui, kernel_space(D), kernel_space(DU));
            return {perturbation_sigma(AU, DU), base / ka * kd};
        }
        case FactorizationIdentity::perturbation2_left: {
            const Mat UA = U * A, UD = U * D;
            const QiScalar ca = det_between(U, cokernel_space(A), cokernel_space(UA));
            const QiScalar cd = det_between(U, cokernel_space(D), cokernel_space(UD));
            return {perturbation_sigma(UA, UD), base * ca / cd};
        }
        case FactorizationIdentity::det_class_right: {
            const Mat DU = D * U;
            const QiScalar kd = det_between(Ui, kernel_space(D), kernel_space(DU));
            return {perturbation_sigma(A, DU), base * kd * determinant(U)};
        }
        case FactorizationIdentity::det_class_left: {
            const Mat UD = U * D;
            const QiScalar cd = det_between(U, cokernel_space(D), cokernel_space(UD));
            return {perturbation_sigma(A, UD), base / cd * determinant(U)};
        }
        case FactorizationIdentity::invertible_right: {
            const Quadruple m{A, q.B * U, q.C * U, Ui * D * U};
            return {joint_torsion_quad(m).value, joint_torsion_quad(q).value};
        }
        case FactorizationIdentity::invertible_left: {
            const Quadruple m{U * A, q.B, U * q.C * Ui, U * D};
            return {joint_torsion_quad(m).value, joint_torsion_quad(q).value};
        }
        case FactorizationIdentity::invertible2: {
            const Quadruple m{A, q.B, q.C * U, Ui * D};
            return {joint_torsion_quad(m).value, joint_torsion_quad(q).value};
        }
    }
    throw DomainError("unknown identity");
}

}  // namespace jt
