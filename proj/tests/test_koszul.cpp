#include <doctest.h>

#include "helpers.hpp"
#include "jt/koszul.hpp"
#include "jt/random.hpp"

using namespace jt;
using jt::test::diag;
using jt::test::eye;
using jt::test::mat;
using jt::test::q;

namespace {

std::vector<Index> homology_dims(const ChainComplex& c) {
    std::vector<Index> out;
    for (int k = c.top(); k >= 0; --k) out.push_back(homology(c, k).dim());
    return out;
}

const Mat zero1 = Mat::Zero(1, 1);

}  // namespace

TEST_CASE("koszul complexes") {
    const Mat A = mat({{"1", "2"}, {"0", "3"}});
    const ChainComplex k1 = build_koszul({A});
    CHECK(k1.top() == 1);
    CHECK(k1.d(1) == A);
    CHECK(homology_dims(build_koszul({zero1, zero1})) == std::vector<Index>{1, 2, 1});
    CHECK(homology_dims(build_koszul({eye(1), eye(1)})) == std::vector<Index>{0, 0, 0});
    CHECK_THROWS_WITH(build_koszul({mat({{"0", "1"}, {"0", "0"}}), diag({"1", "2"})}), "operators do not commute");
}

TEST_CASE("quadruple complexes") {
    CHECK(homology_dims(build_quad_complex(make_quadruple(zero1, zero1, zero1, zero1))) == std::vector<Index>{1, 2, 1});
    CHECK(homology_dims(build_quad_complex(make_quadruple(eye(1), eye(1), eye(1), eye(1)))) ==
          std::vector<Index>{0, 0, 0});
    CHECK_THROWS_WITH(make_quadruple(eye(1), eye(1), eye(1), mat({{"2"}})), "AB != CD");
    for (std::uint64_t t = 0; t < 20; ++t) {
        Rng rng(derive_seed(41, t));
        const auto [A, B] = random_commuting_pair(rng);
        CHECK(homology_dims(build_quad_complex(make_quadruple(A, B, B, A))) == homology_dims(build_koszul({A, B})));
    }
}

TEST_CASE("epsilon sequences") {
    const EpsSequences z = build_eps_sequences(make_quadruple(zero1, zero1, zero1, zero1));
    CHECK(z.ad.complex.dims == std::vector<Index>{1, 1, 1, 2, 1, 1, 1});
    CHECK(z.bc.complex.dims == std::vector<Index>{1, 1, 1, 2, 1, 1, 1});
    const EpsSequences i = build_eps_sequences(make_quadruple(eye(2), eye(2), eye(2), eye(2)));
    for (Index d : i.ad.complex.dims) CHECK(d == 0);
    const Mat A = diag({"0", "2"}), B = diag({"3", "0"});
    const EpsSequences p = build_eps_sequences(make_quadruple(A, B, B, A));
    CHECK(p.ad.complex.dims == std::vector<Index>{0, 1, 1, 0, 1, 1, 0});
}

TEST_CASE("perturbation sigma") {
    CHECK(perturbation_sigma(diag({"1", "0"}), diag({"1", "0"})) == QiScalar(1));
    CHECK(perturbation_sigma(mat({{"2"}}), mat({{"3"}})) == q("3/2"));
    CHECK(perturbation_sigma(zero1, zero1) == QiScalar(1));
    CHECK_THROWS_AS(perturbation_sigma(eye(1), eye(2)), DomainError);
}

TEST_CASE("joint torsion of small quadruples") {
    const JointTorsionReport r = joint_torsion_quad(make_quadruple(zero1, zero1, zero1, zero1));
    CHECK(r.value == QiScalar(1));
    CHECK(r.lambda == 4);
    CHECK(joint_torsion_pair(diag({"1", "2", "0"}), eye(3)) == QiScalar(1));
    CHECK(joint_torsion_pair(eye(3), diag({"1", "2", "0"})) == QiScalar(1));
    CHECK(joint_torsion_pair(diag({"0", "2"}), diag({"3", "0"})) == QiScalar(1));
    CHECK(joint_torsion_pair(zero1, zero1) == QiScalar(1));
}

TEST_CASE("restriction data and the lefschetz ratio") {
    CHECK(lefschetz_ratio(RestrictionData{eye(1), eye(2), eye(1), eye(3)}) == QiScalar(1));
    CHECK(lefschetz_ratio(RestrictionData{Mat(0, 0), mat({{"1/6"}}), mat({{"-1/6"}}), Mat(0, 0)}) == QiScalar(-1));
    CHECK(lefschetz_ratio(RestrictionData{Mat(0, 0), mat({{"-3/2"}}), Mat(0, 0), Mat(0, 0)}) == q("-2/3"));
    CHECK_THROWS_WITH(lefschetz_ratio(RestrictionData{zero1, eye(1), eye(1), eye(1)}), "pair not acyclic");
    const RestrictionData d = restriction_data(diag({"0", "2"}), diag({"3", "0"}));
    CHECK(d.B_on_kerA == mat({{"3"}}));
    CHECK(d.A_on_cokB == mat({{"2"}}));
}

TEST_CASE("pseudoinverse formula") {
    CHECK(pseudoinv_formula_pair(diag({"0", "2"}), diag({"3", "0"})) == QiScalar(1));
    const BasedExactSequence a = make_exact_sequence(make_complex({2, 2}, {diag({"2", "3"})}));
    const BasedExactSequence b = make_exact_sequence(make_complex({2, 2}, {diag({"5", "1"})}));
    CHECK(pseudoinv_formula(a, b, 0, 0) == q("6/5"));
    CHECK(pseudoinv_formula(a, b, 1, 0) == q("-6/5"));
    for (std::uint64_t t = 0; t < 30; ++t) {
        Rng rng(derive_seed(43, t));
        const auto [A, B] = random_commuting_pair(rng);
        CHECK(pseudoinv_formula_pair(A, B) == joint_torsion_pair(A, B));
    }
}

TEST_CASE("determinant commutator") {
    CHECK(det_commutator(mat({{"1", "1"}, {"0", "1"}}), diag({"1", "2"})) == QiScalar(1));
    CHECK_THROWS_WITH(det_commutator(zero1, eye(1)), "singular input");
    Rng rng(derive_seed(47, 0));
    CHECK(det_commutator(random_invertible(rng, 4), random_invertible(rng, 4)) == QiScalar(1));
}

TEST_CASE("factorization identities") {
    const Quadruple z = make_quadruple(zero1, zero1, zero1, zero1);
    for (const auto& [name, id] : factorization_identity_names()) {
        CAPTURE(name);
        const IdentitySides u = factorization_identities(z, eye(1), id);
        CHECK(u.lhs == u.rhs);
        const IdentitySides two = factorization_identities(z, mat({{"2"}}), id);
        CHECK(two.lhs == two.rhs);
    }
    CHECK_THROWS_WITH(factorization_identities(z, zero1, FactorizationIdentity::perturbation), "U not invertible");
    CHECK_THROWS_WITH(factorization_identities(z, eye(2), FactorizationIdentity::perturbation), "U has wrong shape");
}

TEST_CASE("quadruple properties on seeded instances") {
    for (std::uint64_t t = 0; t < 40; ++t) {
        Rng rng(derive_seed(53, t));
        const Quadruple a = random_quadruple(rng, 4), b = random_quadruple(rng, 3);
        CHECK(joint_torsion_quad(a).value == QiScalar(1));
        CHECK(joint_torsion_quad(quadruple_direct_sum(a, b)).value == QiScalar(1));
        const Mat U = random_invertible(rng, a.h());
        for (const auto& [name, id] : factorization_identity_names()) {
            CAPTURE(name);
            const IdentitySides s = factorization_identities(a, U, id);
            CHECK(s.lhs == s.rhs);
        }
    }
}
