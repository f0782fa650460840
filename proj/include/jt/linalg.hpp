#pragma once

#include <Eigen/Core>
#include <vector>

#include "jt/errors.hpp"
#include "jt/qi.hpp"

namespace jt {

using Index = Eigen::Index;

template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatX<QiScalar>;
using Vec = VecX<QiScalar>;

template <typename Scalar>
inline bool is_zero_scalar(const Scalar& x) {
    return x == Scalar(0);
}
template <>
inline bool is_zero_scalar(const QiScalar& x) {
    return x.is_zero();
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (!is_zero_scalar(m(i, j))) return false;
    return true;
}

template <typename Scalar>
struct RrefResult {
    MatX<Scalar> rref;
    std::vector<Index> pivots;
    Index rank = 0;
    MatX<Scalar> transform;  // transform * m == rref
};

// Reduced row echelon form. Pivots are found by scanning columns left to right and
// taking the first nonzero entry at or below the current row.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref_decompose(const Eigen::MatrixBase<Derived>& m,
                                                    bool with_transform = true) {
    using Scalar = typename Derived::Scalar;
    RrefResult<Scalar> out;
    MatX<Scalar>& a = out.rref;
    a = m;
    const Index rows = a.rows(), cols = a.cols();
    MatX<Scalar>& t = out.transform;
    if (with_transform) t = MatX<Scalar>::Identity(rows, rows);

    Index row = 0;
    for (Index c = 0; c < cols && row < rows; ++c) {
        Index p = row;
        while (p < rows && is_zero_scalar(a(p, c))) ++p;
        if (p == rows) continue;
        if (p != row) {
            a.row(p).swap(a.row(row));
            if (with_transform) t.row(p).swap(t.row(row));
        }
        const Scalar inv = Scalar(1) / a(row, c);
        for (Index j = c; j < cols; ++j) a(row, j) *= inv;
        if (with_transform)
            for (Index j = 0; j < rows; ++j) t(row, j) *= inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == row || is_zero_scalar(a(i, c))) continue;
            const Scalar f = a(i, c);
            for (Index j = c; j < cols; ++j)
                if (!is_zero_scalar(a(row, j))) a(i, j) -= f * a(row, j);
            if (with_transform)
                for (Index j = 0; j < rows; ++j)
                    if (!is_zero_scalar(t(row, j))) t(i, j) -= f * t(row, j);
        }
        out.pivots.push_back(c);
        ++row;
    }
    out.rank = static_cast<Index>(out.pivots.size());
    return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return rref_decompose(m, false).rank;
}

template <typename Scalar>
struct SubspaceBases {
    MatX<Scalar> kernel;  // columns
    MatX<Scalar> image;   // columns
};

template <typename Derived>
MatX<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    const Index cols = m.cols();
    auto r = rref_decompose(m, false);
    std::vector<bool> is_pivot(cols, false);
    for (Index p : r.pivots) is_pivot[p] = true;
    MatX<Scalar> k = MatX<Scalar>::Zero(cols, cols - r.rank);
    Index out = 0;
    for (Index f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        k(f, out) = Scalar(1);
        for (Index i = 0; i < r.rank; ++i) k(r.pivots[i], out) = -r.rref(i, f);
        ++out;
    }
    return k;
}

template <typename Derived>
MatX<typename Derived::Scalar> image_basis(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    auto r = rref_decompose(m, false);
    MatX<Scalar> im(m.rows(), r.rank);
    for (Index j = 0; j < r.rank; ++j) im.col(j) = m.col(r.pivots[j]);
    return im;
}

template <typename Derived>
SubspaceBases<typename Derived::Scalar> subspace_bases(const Eigen::MatrixBase<Derived>& m) {
    return {kernel_basis(m), image_basis(m)};
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
    MatX<Scalar> a = m;
    const Index n = a.rows();
    Scalar d(1);
    for (Index c = 0; c < n; ++c) {
        Index p = c;
        while (p < n && is_zero_scalar(a(p, c))) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            a.row(p).swap(a.row(c));
            d = -d;
        }
        d *= a(c, c);
        const Scalar inv = Scalar(1) / a(c, c);
        for (Index i = c + 1; i < n; ++i) {
            if (is_zero_scalar(a(i, c))) continue;
            const Scalar f = a(i, c) * inv;
            for (Index j = c + 1; j < n; ++j)
                if (!is_zero_scalar(a(c, j))) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

// Inverse via rref; throws DomainError on singular input.
template <typename Derived>
MatX<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
    auto r = rref_decompose(m);
    if (r.rank != m.rows()) throw DomainError("singular matrix");
    return r.transform;
}

// Algebraic pseudoinverse from the rank factorization m = F G, where F holds the pivot
// columns of m and G the nonzero rows of its rref. Returns G^R F^L with G^R the
// coordinate section at the pivots and F^L the leading rows of the rref transform of F.
template <typename Derived>
MatX<typename Derived::Scalar> pseudoinverse(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    const Index rows = m.rows(), cols = m.cols();
    MatX<Scalar> out = MatX<Scalar>::Zero(cols, rows);
    if (rows == 0 || cols == 0) return out;
    auto r = rref_decompose(m, false);
    if (r.rank == 0) return out;
    MatX<Scalar> f(rows, r.rank);
    for (Index j = 0; j < r.rank; ++j) f.col(j) = m.col(r.pivots[j]);
    auto rf = rref_decompose(f);
    for (Index i = 0; i < r.rank; ++i) out.row(r.pivots[i]) = rf.transform.row(i);
    return out;
}

template <typename Derived>
bool in_span(const Mat& independent, const Eigen::MatrixBase<Derived>& vs) {
    if (vs.cols() == 0) return true;
    Mat joined(independent.rows(), independent.cols() + vs.cols());
    joined << independent, vs;
    return rank(joined) == independent.cols();
}

inline Mat hcat(const Mat& a, const Mat& b) {
    Mat out(a.rows(), a.cols() + b.cols());
    if (a.cols()) out.leftCols(a.cols()) = a;
    if (b.cols()) out.rightCols(b.cols()) = b;
    return out;
}

inline Mat vcat(const Mat& a, const Mat& b) {
    Mat out(a.rows() + b.rows(), a.cols());
    if (a.rows()) out.topRows(a.rows()) = a;
    if (b.rows()) out.bottomRows(b.rows()) = b;
    return out;
}

inline Mat block_diag(const Mat& a, const Mat& b) {
    Mat out = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

// Based subquotient Z/B of an ambient coordinate space.
struct Subquotient {
    Index ambient_dim = 0;
    Mat cycle_basis;     // spanning set of Z, as given
    Mat boundary_basis;  // independent basis of B (pivot columns of the given boundaries)
    Mat rep_basis;       // classes form a basis of Z/B; this is the lift map
    Mat project_map;     // rows; project_map * rep_basis = I, project_map * boundary_basis = 0

    Index dim() const { return rep_basis.cols(); }
    const Mat& lift_map() const { return rep_basis; }
    // Columns of the independent basis [boundary_basis | rep_basis] of Z.
    Mat cycle_frame() const { return hcat(boundary_basis, rep_basis); }
    bool contains_cycles(const Mat& vs) const;
    bool contains_boundaries(const Mat& vs) const;
    // Quotient coordinates of vectors lying in Z; throws DomainError otherwise.
    Mat project(const Mat& vs) const;
};

Subquotient build_subquotient(Index ambient_dim, const Mat& cycles, const Mat& boundaries);

inline Subquotient kernel_space(const Mat& m) {
    return build_subquotient(m.cols(), kernel_basis(m), Mat(m.cols(), 0));
}
inline Subquotient cokernel_space(const Mat& m) {
    return build_subquotient(m.rows(), Mat::Identity(m.rows(), m.rows()), image_basis(m));
}

// Replaces rep_basis by rep_basis * g + boundary_basis * shift (shift may be empty).
Subquotient rebase(const Subquotient& s, const Mat& g, const Mat& shift = Mat());

Mat induced_map(const Mat& m, const Subquotient& src, const Subquotient& dst);

}  // namespace jt
