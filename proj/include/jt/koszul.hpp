#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jt/torsion.hpp"

namespace jt {

// Koszul complex of commuting operators on C^h, d = sum_k A_k (x) e_k^*, with the
// lexicographic basis of the exterior powers. Spaces are listed from K_n down to K_0.
ChainComplex build_koszul(const std::vector<Mat>& ops);

struct Quadruple {
    Mat A, B, C, D;
    Index h() const { return A.rows(); }
};

// Checks squareness, common size and AB = CD.
Quadruple make_quadruple(Mat A, Mat B, Mat C, Mat D);

// H -> H^2 -> H with d2 = (-B; D), d1 = (A C).
ChainComplex build_quad_complex(const Quadruple& q);

// Every based space the joint torsion depends on.
struct QuadSpaces {
    Subquotient H2, H1, H0;
    Subquotient kerA, kerB, kerC, kerD;
    Subquotient cokA, cokB, cokC, cokD;

    template <typename F>
    void for_each(F&& f) {
        f("H2", H2), f("H1", H1), f("H0", H0);
        f("kerA", kerA), f("kerB", kerB), f("kerC", kerC), f("kerD", kerD);
        f("cokA", cokA), f("cokB", cokB), f("cokC", cokC), f("cokD", cokD);
    }
};

QuadSpaces quad_spaces(const Quadruple& q);

struct EpsSequences {
    BasedExactSequence ad;  // H2 -> ker B -> ker C -> H1 -> coker B -> coker C -> H0
    BasedExactSequence bc;  // H2 -> ker D -> ker A -> H1 -> coker D -> coker A -> H0
};

EpsSequences build_eps_sequences(const Quadruple& q);
EpsSequences build_eps_sequences(const Quadruple& q, const QuadSpaces& s);

// 0 -> ker A -> H -> H -> coker A -> 0 with maps (lift, A, projection).
BasedExactSequence four_term_sequence(const Mat& A, const Subquotient& ker, const Subquotient& coker);

inline long kappa(Index nullity, Index h) { return static_cast<long>(nullity * (h - nullity)); }

QiScalar perturbation_sigma(const Mat& A, const Mat& D);
QiScalar perturbation_sigma(const Mat& A, const Mat& D, const Subquotient& kerA, const Subquotient& cokA,
                            const Subquotient& kerD, const Subquotient& cokD);

struct JointTorsionReport {
    TorsionScalar tau_AD, tau_BC;
    QiScalar sigma_AD, sigma_BC;
    long lambda = 0;
    long nu = 0;
    long kappa_A = 0, kappa_B = 0, kappa_C = 0, kappa_D = 0;
    long mu_A = 0, mu_B = 0, mu_C = 0, mu_D = 0;
    std::vector<Index> dims_AD, dims_BC;
    Index h2 = 0, h1 = 0, h0 = 0;
    QiScalar value;
};

// value = (-1)^(lambda + nu) tau_AD / tau_BC * sigma_AD * sigma_BC, where
// lambda = h2 (kD + kB) + h0 (cA + cC) and nu = kB (kB + kC) + kD (kD + kA).
// nu is even whenever C = B and D = A.
JointTorsionReport joint_torsion_quad(const Quadruple& q);
JointTorsionReport joint_torsion_quad(const Quadruple& q, const QuadSpaces& s);

void require_commuting(const Mat& A, const Mat& B);

QiScalar joint_torsion_pair(const Mat& A, const Mat& B);

struct RestrictionData {
    Mat B_on_kerA, B_on_cokA, A_on_cokB, A_on_kerB;
};

RestrictionData restriction_data(const Mat& A, const Mat& B);

// det(B|ker A) det(B|coker A)^-1 det(A|coker B) det(A|ker B)^-1
QiScalar lefschetz_ratio(const RestrictionData& r);

// D_+ + D_-^dagger : E_+ -> E_- for an exact sequence. E_+ collects the even positions
// (V_n, V_{n-2}, ...) in sequence order, E_- the odd positions in reverse order.
Mat graded_combined_map(const BasedExactSequence& s);

// (-1)^(mu_A + mu_B) det(graded map of eps_A) / det(graded map of eps_B)
QiScalar pseudoinv_formula(const BasedExactSequence& eps_A, const BasedExactSequence& eps_B, long mu_A, long mu_B);

// The formula above on the sequences of the commuting pair (A, B).
QiScalar pseudoinv_formula_pair(const Mat& A, const Mat& B);

QiScalar det_commutator(const Mat& A, const Mat& B);

enum class FactorizationIdentity {
    perturbation,         // sigma(A, U^-1 D U)
    perturbation2_right,  // sigma(AU, DU)
    perturbation2_left,   // sigma(UA, UD)
    det_class_right,      // sigma(A, DU)
    det_class_left,       // sigma(A, UD)
    invertible_right,     // tau(A, BU, CU, U^-1 D U)
    invertible_left,      // tau(UA, B, U C U^-1, UD)
    invertible2           // tau(A, B, CU, U^-1 D)
};

const std::vector<std::pair<std::string, FactorizationIdentity>>& factorization_identity_names();

struct IdentitySides {
    QiScalar lhs, rhs;
};

// Both sides of the selected identity. Every determinant-invariant factor d(., .) is 1 in
// finite dimension and enters the right-hand side as 1.
IdentitySides factorization_identities(const Quadruple& q, const Mat& U, FactorizationIdentity which);

}  // namespace jt
