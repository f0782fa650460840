#pragma once

#include <complex>
#include <map>
#include <vector>

#include "jt/koszul.hpp"

namespace jt {

// leading * prod (z - root), with each root classified against the unit circle.
struct AnalyticSymbol {
    QiScalar leading;
    std::vector<QiScalar> roots;
    std::vector<bool> inside;
    Index winding = 0;
};

// Throws DomainError "not Fredholm" for a root on the unit circle.
AnalyticSymbol make_symbol(QiScalar leading, std::vector<QiScalar> roots);

QiScalar evaluate(const AnalyticSymbol& f, const QiScalar& z);

// Coefficients in ascending degree.
std::vector<QiScalar> coefficients(const AnalyticSymbol& f);

// Monic product over the inside roots, ascending degree.
std::vector<QiScalar> inside_polynomial(const AnalyticSymbol& f);

AnalyticSymbol symbol_product(const AnalyticSymbol& f, const AnalyticSymbol& g);

// Multiplication by g on C[z]/(f_in) in the basis 1, z, ..., z^(d-1).
Mat coker_action(const AnalyticSymbol& f, const AnalyticSymbol& g);

// Throws DomainError when f and g share an inside root.
void require_acyclic(const AnalyticSymbol& f, const AnalyticSymbol& g);

// The two long exact sequences of (T_f, T_g). Only coker T_g (for T_f) and coker T_f
// (for T_g) survive, in degrees 2 and 1.
EpsSequences toeplitz_eps_sequences(const AnalyticSymbol& f, const AnalyticSymbol& g);

RestrictionData toeplitz_restriction_data(const AnalyticSymbol& f, const AnalyticSymbol& g);

// Joint torsion of (T_f, T_g) through the torsion pipeline.
QiScalar toeplitz_joint_torsion(const AnalyticSymbol& f, const AnalyticSymbol& g);

// prod f(b) over inside roots b of g divided by prod g(a) over inside roots a of f.
QiScalar tame_symbol(const AnalyticSymbol& f, const AnalyticSymbol& g);

using cplx = std::complex<double>;

struct TrigPoly {
    std::map<int, cplx> coeffs;

    cplx operator[](int k) const {
        auto it = coeffs.find(k);
        return it == coeffs.end() ? cplx(0.0, 0.0) : it->second;
    }
    // Largest |k| in the support (0 for the empty polynomial).
    int reach() const;
};

// Coefficients of e^f on degrees -N..N; entry k + N holds degree k.
std::vector<cplx> exp_symbol_coeffs(const TrigPoly& f, int N);

// exp(sum_k k f_{-k} g_k)
cplx closed_form_di(const TrigPoly& f, const TrigPoly& g);

int default_buffer(const TrigPoly& f, const TrigPoly& g);

// Determinant of the leading N x N block of T_{e^f} T_{e^g} T_{e^f}^-1 T_{e^g}^-1 built
// at size N + buffer. A negative buffer selects default_buffer.
cplx numeric_det_invariant(const TrigPoly& f, const TrigPoly& g, int N, int buffer = -1);

}  // namespace jt
