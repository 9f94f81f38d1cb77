#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tri/exterior.hpp"

using namespace tri;
using testutil::q;
using testutil::qmat;
using testutil::qvec;

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(10, 5) == 252);
}

TEST_CASE("subset indexer is lexicographic with a consistent rank") {
    SubsetIndexer idx(4, 2);
    REQUIRE(idx.count() == 6);
    CHECK(idx.subset(0) == std::vector<int>{1, 2});
    CHECK(idx.subset(1) == std::vector<int>{1, 3});
    CHECK(idx.subset(5) == std::vector<int>{3, 4});
    for (int i = 0; i < idx.count(); ++i) CHECK(idx.rank(idx.subset(i)) == i);
}

TEST_CASE("leibniz action on a diagonal matrix") {
    const FieldDescriptor d = FieldDescriptor::rational();
    Matrix a = Matrix::diagonal(d, qvec({1, 2, 3}));
    Matrix a2 = leibniz_action(a, 2);
    // eigenvalues are the 2-subset sums 1+2, 1+3, 2+3 in lex order
    Matrix expected = Matrix::diagonal(d, qvec({3, 4, 5}));
    CHECK(a2 == expected);
}

TEST_CASE("graded action fixtures n=2 k=2") {
    Matrix a = qmat({{1, 2}, {3, 4}});
    Matrix a2 = graded_action(a, 2, 1);
    REQUIRE(a2.rows() == 1);
    CHECK(a2.at(0, 0) == q(5));  // trace
    Matrix a22 = graded_action(a, 2, 2);
    REQUIRE(a22.rows() == 1);
    CHECK(a22.at(0, 0) == q(-2));  // determinant
    CHECK(leibniz_action(a, 2) == a2);
    CHECK(compound(a, 2) == a22);
}

TEST_CASE("graded action expands (I+xA)^k coefficientwise") {
    // check via scalar specialization: compound(I + xA) at sample x equals
    // sum_i x^i A_k^(i)
    const FieldDescriptor d = FieldDescriptor::rational();
    std::mt19937_64 rng(17);
    Matrix a = testutil::random_qmat(rng, 4);
    const int k = 2;
    for (long x0 : {1L, 2L, -3L}) {
        FieldValue x = q(x0);
        Matrix lhs = compound(Matrix::identity(d, 4) + a.scale(x), k);
        Matrix rhs(d, binomial(4, k), binomial(4, k));
        for (int i = 0; i <= k; ++i) rhs = rhs + graded_action(a, k, i).scale(x.pow(i));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("compound is multiplicative and satisfies Sylvester-Franke") {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 5; ++it) {
        Matrix p = testutil::random_qmat(rng, 4);
        Matrix r = testutil::random_qmat(rng, 4);
        CHECK(compound(p * r, 2) == compound(p, 2) * compound(r, 2));
        CHECK(determinant(compound(p, 2)) == determinant(p).pow(binomial(3, 1)));
        CHECK(determinant(compound(p, 3)) == determinant(p).pow(binomial(3, 2)));
    }
}

TEST_CASE("plucker coordinates") {
    const FieldDescriptor d = FieldDescriptor::rational();
    // span{e1+e2, e3} in 3-space: coordinates over {1,2},{1,3},{2,3}
    Vector v1 = qvec({1, 1, 0});
    Vector v2 = qvec({0, 0, 1});
    PluckerVector pv = plucker({v1, v2}, 3);
    REQUIRE(pv.coords.size() == 3);
    CHECK(pv.coords[0] == q(0));
    CHECK(pv.coords[1] == q(1));
    CHECK(pv.coords[2] == q(1));
    CHECK_THROWS_AS(plucker({v1, v1}, 3), FieldError);
    (void)d;
}

TEST_CASE("pairing degeneracy") {
    Vector e1 = qvec({1, 0, 0});
    Vector e2 = qvec({0, 1, 0});
    Vector e3 = qvec({0, 0, 1});
    Vector e12 = qvec({1, 1, 0});
    // span{e1,e2} vs span{e2,e3}: the Gram matrix [[0,0],[1,0]] is singular
    CHECK(pairing_degenerate({e1, e2}, {e2, e3}));
    CHECK_FALSE(pairing_degenerate({e1, e2}, {e1, e2}));
    CHECK_FALSE(pairing_degenerate({e1, e12}, {e1, e2}));
}

TEST_CASE("invariant subspace detection and restricted coefficients") {
    Matrix a = qmat({{2, 1, 0}, {0, 2, 0}, {0, 0, 5}});
    // span{e1, e2} is invariant, restriction [[2,1],[0,2]]
    InvariantSubspaceReport rep =
        is_invariant_subspace(a, {qvec({1, 0, 0}), qvec({0, 1, 0})});
    CHECK(rep.invariant);
    REQUIRE(rep.e_values.size() == 2);
    CHECK(rep.e_values[0] == q(4));  // trace
    CHECK(rep.e_values[1] == q(4));  // determinant
    // span{e1 + e3, e2} is not invariant
    InvariantSubspaceReport bad =
        is_invariant_subspace(a, {qvec({1, 0, 1}), qvec({0, 1, 0})});
    CHECK_FALSE(bad.invariant);
}
