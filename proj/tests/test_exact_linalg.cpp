#include <doctest.h>

#include "helpers.hpp"
#include "jt/random.hpp"

using namespace jt;
using jt::test::diag;
using jt::test::eye;
using jt::test::mat;
using jt::test::q;

TEST_CASE("rref rank and pivots") {
    auto r = rref_decompose(mat({{"1", "2"}, {"2", "4"}}));
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<Index>{0});
    CHECK(rref_decompose(eye(3)).pivots == std::vector<Index>{0, 1, 2});
    auto n = rref_decompose(mat({{"0", "1"}, {"0", "0"}}));
    CHECK(n.rank == 1);
    CHECK(n.pivots == std::vector<Index>{1});
}

TEST_CASE("kernel and image") {
    const Mat m = mat({{"1", "2"}, {"2", "4"}});
    CHECK(kernel_basis(m) == mat({{"-2"}, {"1"}}));
    CHECK(image_basis(m) == mat({{"1"}, {"2"}}));
    CHECK(kernel_basis(eye(2)).cols() == 0);
    CHECK(image_basis(eye(2)) == eye(2));
    const Mat z = Mat::Zero(2, 2);
    CHECK(kernel_basis(z) == eye(2));
    CHECK(image_basis(z).cols() == 0);
}

TEST_CASE("determinant and inverse") {
    CHECK(determinant(mat({{"1", "2"}, {"3", "4"}})) == QiScalar(-2));
    CHECK(determinant(mat({{"i"}})) == QiScalar::i());
    CHECK(determinant(mat({{"1", "2"}, {"2", "4"}})) == QiScalar(0));
    CHECK(determinant(Mat(0, 0)) == QiScalar(1));
    CHECK_THROWS_AS(determinant(Mat::Zero(2, 3)), DomainError);
    CHECK_THROWS_WITH(inverse(mat({{"1", "2"}, {"2", "4"}})), "singular matrix");
    CHECK(inverse(mat({{"2"}})) == mat({{"1/2"}}));
}

TEST_CASE("pseudoinverse") {
    CHECK(pseudoinverse(mat({{"2"}})) == mat({{"1/2"}}));
    const Mat z = pseudoinverse(Mat::Zero(2, 3));
    CHECK(z.rows() == 3);
    CHECK(z.cols() == 2);
    CHECK(is_zero(z));
    CHECK(pseudoinverse(diag({"1", "0"})) == diag({"1", "0"}));
}

TEST_CASE("subquotients") {
    const Subquotient cok = cokernel_space(diag({"0", "1"}));
    CHECK(cok.dim() == 1);
    CHECK(cok.rep_basis == mat({{"1"}, {"0"}}));
    const Subquotient zero = build_subquotient(2, eye(2), eye(2));
    CHECK(zero.dim() == 0);
    CHECK_THROWS_WITH(build_subquotient(2, mat({{"1"}, {"0"}}), mat({{"0"}, {"1"}})), "not a subquotient");
}

TEST_CASE("induced maps") {
    const Mat A = diag({"0", "2"}), B = diag({"3", "0"});
    const Subquotient kA = kernel_space(A), cB = cokernel_space(B);
    CHECK(induced_map(B, kA, kA) == mat({{"3"}}));
    CHECK(induced_map(A, cB, cB) == mat({{"2"}}));
    const Subquotient kB = kernel_space(B);
    CHECK_THROWS_WITH(induced_map(eye(2), kA, kB), "map does not descend");
}

TEST_CASE("linear algebra properties on seeded matrices") {
    for (std::uint64_t t = 0; t < 60; ++t) {
        Rng rng(derive_seed(23, t));
        const Index r = rng.uniform(1, 6), c = rng.uniform(1, 6);
        const Mat m = random_matrix(rng, r, c);
        const Mat k = kernel_basis(m), im = image_basis(m);
        CHECK(is_zero(Mat(m * k)));
        CHECK(k.cols() + im.cols() == c);
        CHECK(rank(im) == im.cols());
        const Mat p = pseudoinverse(m);
        CHECK(Mat(m * p * m) == m);
        CHECK(Mat(p * m * p) == p);
        const Mat g = random_invertible(rng, r);
        CHECK(Mat(g * inverse(g)) == eye(r));
        const Mat h = random_invertible(rng, r);
        CHECK(determinant(Mat(g * h)) == determinant(g) * determinant(h));

        const Subquotient s = cokernel_space(m);
        CHECK(s.dim() == r - im.cols());
        CHECK(Mat(s.project_map * s.rep_basis) == eye(s.dim()));
        CHECK(is_zero(Mat(s.project_map * s.boundary_basis)));
        const Mat gs = random_invertible(rng, s.dim());
        const Subquotient s2 = rebase(s, gs, random_matrix(rng, s.boundary_basis.cols(), s.dim()));
        CHECK(Mat(s2.project(s.rep_basis)) == inverse(gs));
    }
}
