#pragma once

#include <cstdint>
#include <vector>

#include "jt/linalg.hpp"

namespace jt {

// Complex V_n -> ... -> V_0. dims[p] is dim V_{n-p}; diffs[p] is d_{n-p} : V_{n-p} -> V_{n-p-1}.
struct ChainComplex {
    std::vector<Index> dims;
    std::vector<Mat> diffs;

    int top() const { return static_cast<int>(dims.size()) - 1; }
    Index dim(int k) const { return (k < 0 || k > top()) ? 0 : dims[top() - k]; }
    // d_k for 1 <= k <= n; zero maps at the ends.
    Mat d(int k) const;
};

// Validates shapes and d_k d_{k+1} = 0; throws DomainError "not a complex".
ChainComplex make_complex(std::vector<Index> dims, std::vector<Mat> diffs);

// Cycles ker d_k, boundaries im d_{k+1}.
Subquotient homology(const ChainComplex& c, int k);

struct BasedExactSequence {
    ChainComplex complex;
    std::vector<Mat> bases;  // bases[p] for V_{n-p}, columns in standard coordinates
};

// Standard bases unless given; throws DomainError "sequence not exact".
BasedExactSequence make_exact_sequence(ChainComplex c, std::vector<Mat> bases = {});

struct TorsionScalar {
    QiScalar value;
    std::uint64_t basis_fingerprint = 0;
};

// Exponent s_k: +1 for k of parity different from n, -1 otherwise.
inline int torsion_exponent(int n, int k) { return ((n - k) % 2 != 0) ? 1 : -1; }

// pivots[k] lists the basis indices of V_k forming T_k (k = 0..n). Empty pointer selects
// the pivot columns of d_k.
using PivotSelection = std::vector<std::vector<Index>>;

TorsionScalar torsion_scalar(const BasedExactSequence& s, const PivotSelection* pivots = nullptr);

// Differentials expressed in the coordinates of the chosen bases.
std::vector<Mat> based_differentials(const BasedExactSequence& s);

// New basis of V_{n-p} is bases[p] * g[p].
BasedExactSequence rebase(const BasedExactSequence& s, const std::vector<Mat>& g);

// Predicted ratio torsion(rebase(s, g)) / torsion(s) = prod det(g_k)^{-s_k}.
QiScalar rebase_factor(const BasedExactSequence& s, const std::vector<Mat>& g);

// Degree-aligned direct sum with concatenated bases; both sequences need equal length.
BasedExactSequence direct_sum(const BasedExactSequence& a, const BasedExactSequence& b);

// With r_k = rank d_k: torsion(a + b) = (-1)^e torsion(a) torsion(b), e = sum_k r_k(a) r_{k+1}(b).
long direct_sum_sign_exponent(const BasedExactSequence& a, const BasedExactSequence& b);

}  // namespace jt
