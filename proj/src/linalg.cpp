#include "jt/linalg.hpp"

namespace jt {

bool Subquotient::contains_cycles(const Mat& vs) const { return in_span(cycle_frame(), vs); }

bool Subquotient::contains_boundaries(const Mat& vs) const { return in_span(boundary_basis, vs); }

Mat Subquotient::project(const Mat& vs) const {
    if (!contains_cycles(vs)) throw DomainError("vector not in cycle space");
    return project_map * vs;
}

Subquotient build_subquotient(Index ambient_dim, const Mat& cycles, const Mat& boundaries) {
    if (cycles.rows() != ambient_dim || boundaries.rows() != ambient_dim)
        throw DomainError("subquotient vectors have wrong length");
    Subquotient s;
    s.ambient_dim = ambient_dim;
    s.cycle_basis = cycles;
    s.boundary_basis = image_basis(boundaries);

    // Canonical basis of span(cycles): the nonzero rows of rref(cycles^T).
    Mat canon(ambient_dim, 0);
    if (cycles.cols() > 0) {
        auto r = rref_decompose(cycles.transpose(), false);
        canon = r.rref.topRows(r.rank).transpose();
    }
    if (!in_span(canon, s.boundary_basis)) throw DomainError("not a subquotient");

    Mat frame = s.boundary_basis;
    std::vector<Index> picked;
    for (Index j = 0; j < canon.cols(); ++j) {
        Mat trial = hcat(frame, canon.col(j));
        if (rank(trial) > frame.cols()) {
            frame = std::move(trial);
            picked.push_back(j);
        }
    }
    s.rep_basis.resize(ambient_dim, static_cast<Index>(picked.size()));
    for (size_t j = 0; j < picked.size(); ++j) s.rep_basis.col(j) = canon.col(picked[j]);

    Mat full = frame;
    for (Index i = 0; i < ambient_dim && full.cols() < ambient_dim; ++i) {
        Mat trial = hcat(full, Mat::Identity(ambient_dim, ambient_dim).col(i));
        if (rank(trial) > full.cols()) full = std::move(trial);
    }
    const Mat inv = inverse(full);
    s.project_map = inv.middleRows(s.boundary_basis.cols(), s.rep_basis.cols());
    return s;
}

Subquotient rebase(const Subquotient& s, const Mat& g, const Mat& shift) {
    if (g.rows() != s.dim() || g.cols() != s.dim()) throw DomainError("rebase matrix has wrong shape");
    Mat ginv;
    try {
        ginv = inverse(g);
    } catch (const DomainError&) {
        throw DomainError("singular change of basis");
    }
    Subquotient out = s;
    out.rep_basis = s.rep_basis * g;
    if (shift.size() > 0) {
        if (shift.rows() != s.boundary_basis.cols() || shift.cols() != s.dim())
            throw DomainError("rebase shift has wrong shape");
        out.rep_basis += s.boundary_basis * shift;
    }
    out.project_map = ginv * s.project_map;
    return out;
}

Mat induced_map(const Mat& m, const Subquotient& src, const Subquotient& dst) {
    if (m.cols() != src.ambient_dim || m.rows() != dst.ambient_dim)
        throw DomainError("induced map has wrong shape");
    const Mat on_reps = m * src.rep_basis;
    if (!dst.contains_cycles(on_reps) || !dst.contains_boundaries(m * src.boundary_basis))
        throw DomainError("map does not descend");
    return dst.project_map * on_reps;
}

}  // namespace jt
