#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "jt/toeplitz.hpp"

namespace jt {

std::uint64_t splitmix64(std::uint64_t& state);

// Independent per-instance seed for instance `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    // Uniform on [lo, hi].
    long uniform(long lo, long hi) { return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool chance(double p) { return static_cast<double>(eng_() >> 11) * 0x1.0p-53 < p; }

private:
    std::mt19937_64 eng_;
};

// p/q with |p| <= 4 and 1 <= q <= 4, sometimes with an imaginary part of the same shape.
QiScalar random_entry(Rng& rng, double complex_p = 0.15);
QiScalar random_nonzero_entry(Rng& rng, double complex_p = 0.15);

Mat random_matrix(Rng& rng, Index rows, Index cols, double zero_p = 0.3, double complex_p = 0.15);
Mat random_low_rank(Rng& rng, Index h);
Mat random_invertible(Rng& rng, Index h);

// Several families: D invertible with C = A B D^-1; commuting pairs (A, B, B, A);
// C invertible with D = C^-1 A B; direct sums; zero padding. Ambient size 1..max_h.
Quadruple random_quadruple(Rng& rng, Index max_h = 6);
Quadruple quadruple_direct_sum(const Quadruple& a, const Quadruple& b);

// Polynomials in one matrix, nilpotent shifts, simultaneously diagonalizable pairs, direct sums.
std::pair<Mat, Mat> random_commuting_pair(Rng& rng, Index max_h = 5);

// Exact sequence of length n + 1 with random ranks in [0, max_rank], written in random coordinates.
BasedExactSequence random_exact_sequence(Rng& rng, int n, long max_rank = 2);

// Up to max_roots roots off the unit circle; nonzero leading coefficient.
AnalyticSymbol random_symbol(Rng& rng, int max_roots = 3);

// Pair with no common inside root.
std::pair<AnalyticSymbol, AnalyticSymbol> random_symbol_pair(Rng& rng, int max_roots = 3);

}  // namespace jt
