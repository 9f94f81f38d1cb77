#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tri/triangulant_k.hpp"

using namespace tri;
using testutil::q;
using testutil::qmat;
using testutil::qvec;

namespace {

Matrix conjugate_diag(std::mt19937_64& rng, const std::vector<FieldValue>& eigs) {
    const FieldDescriptor d = FieldDescriptor::rational();
    const int n = static_cast<int>(eigs.size());
    Matrix p(d, n, n);
    do {
        p = testutil::random_qmat(rng, n);
    } while (determinant(p).is_zero());
    return inverse(p) * Matrix::diagonal(d, eigs) * p;
}

}  // namespace

TEST_CASE("boundary cases are 1") {
    Matrix a = qmat({{1, 2}, {3, 4}});
    Matrix b = qmat({{0, 1}, {1, 1}});
    for (int k : {0, 2}) {
        TriangulantKReport rep = triangulant_k(a, b, k);
        CHECK(rep.value == q(1));
        CHECK(rep.method == TkMethod::trivial_boundary);
    }
    CHECK_THROWS_AS(triangulant_k(a, b, 3), FieldError);
    CHECK_THROWS_AS(triangulant_k(a, b, -1), FieldError);
}

TEST_CASE("k=1 reduces to the plain triangulant") {
    std::mt19937_64 rng(23);
    for (int n = 2; n <= 3; ++n)
        for (int it = 0; it < 5; ++it) {
            Matrix a = testutil::random_qmat(rng, n);
            Matrix b = testutil::random_qmat(rng, n);
            CHECK(triangulant_k(a, b, 1).value == triangulant(a, b).value);
        }
}

TEST_CASE("derogatory argument forces zero") {
    const FieldDescriptor d = FieldDescriptor::rational();
    std::mt19937_64 rng(29);
    Matrix b = Matrix::diagonal(d, qvec({1, 1, 2}));
    for (int it = 0; it < 5; ++it) {
        Matrix a = testutil::random_qmat(rng, 3);
        for (int k : {1, 2}) {
            TriangulantKReport rep = triangulant_k(a, b, k);
            CHECK(rep.value.is_zero());
            CHECK(rep.method == TkMethod::geometric_multiplicity_zero);
        }
    }
}

TEST_CASE("direct division matches the diagdiag product formula") {
    std::mt19937_64 rng(31);
    const FieldDescriptor d = FieldDescriptor::rational();
    std::vector<FieldValue> as = qvec({0, 1, 2, 4});
    std::vector<FieldValue> bs = qvec({1, 3, 7, 10});
    for (int it = 0; it < 3; ++it) {
        Matrix p(d, 4, 4);
        do {
            p = testutil::random_qmat(rng, 4, -3, 3);
        } while (determinant(p).is_zero());
        Matrix a = inverse(p) * Matrix::diagonal(d, as) * p;
        Matrix b = Matrix::diagonal(d, bs);
        for (int k = 1; k <= 3; ++k) {
            TriangulantKReport rep = triangulant_k(a, b, k);
            CHECK(rep.value == triangulant_k_diagdiag(as, p, bs, k));
            if (k == 2) CHECK(rep.method == TkMethod::direct_division);
        }
    }
}

TEST_CASE("T_k(A,B) = T_{n-k}(B,A) and conjugation invariance") {
    std::mt19937_64 rng(37);
    std::vector<FieldValue> as = qvec({0, 1, 3, 8});
    std::vector<FieldValue> bs = qvec({2, 5, 6, 11});
    Matrix a = conjugate_diag(rng, as);
    Matrix b = conjugate_diag(rng, bs);
    for (int k = 1; k <= 3; ++k)
        CHECK(triangulant_k(a, b, k).value == triangulant_k(b, a, 4 - k).value);
    const FieldDescriptor d = FieldDescriptor::rational();
    Matrix p(d, 4, 4);
    do {
        p = testutil::random_qmat(rng, 4);
    } while (determinant(p).is_zero());
    Matrix pinv = inverse(p);
    CHECK(triangulant_k(pinv * a * p, pinv * b * p, 2).value == triangulant_k(a, b, 2).value);
}

TEST_CASE("bihomogeneity of T_k") {
    std::mt19937_64 rng(41);
    Matrix a = conjugate_diag(rng, qvec({0, 1, 2, 4}));
    Matrix b = conjugate_diag(rng, qvec({1, 5, 6, 7}));
    const int n = 4, k = 2;
    long deg = binomial(n, 2) * binomial(n, k) * binomial(n - 2, k - 1);
    FieldValue s = q(2);
    FieldValue base = triangulant_k(a, b, k).value;
    CHECK(triangulant_k(a.scale(s), b, k).value == s.pow(deg) * base);
    CHECK(triangulant_k(a, b.scale(s), k).value == s.pow(deg) * base);
}

TEST_CASE("size cap") {
    const FieldDescriptor d = FieldDescriptor::rational();
    Matrix big = Matrix::identity(d, 6);
    CHECK_THROWS_WITH_AS(triangulant_k(big, big, 3), doctest::Contains("size cap"), FieldError);
}

TEST_CASE("non-split spectrum without supplied eigenvalues is rejected") {
    Matrix rot = qmat({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 1, 0}});
    CHECK_THROWS_AS(triangulant_k(rot, qmat({{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 4}}),
                                  2, TkOptions{}),
                    FieldError);
}

TEST_CASE("forced interpolation agrees with direct division") {
    std::mt19937_64 rng(43);
    Matrix a = conjugate_diag(rng, qvec({0, 1, 2}));
    Matrix b = conjugate_diag(rng, qvec({1, 3, 7}));
    TkOptions forced;
    forced.force_interpolation = true;
    for (int k = 1; k <= 2; ++k) {
        TriangulantKReport ri = triangulant_k(a, b, k, forced);
        CHECK(ri.method == TkMethod::line_interpolation);
        CHECK(ri.value == triangulant_k(a, b, k).value);
    }
}

TEST_CASE("interpolation handles degenerate diagonal spectra") {
    // B = diag(0,1,2,3) has D_2 = 0, so direct division is unavailable
    const FieldDescriptor d = FieldDescriptor::rational();
    Matrix a(d, 4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) a.at(i, j) = q(2 * i + j + 1);
    Matrix b = Matrix::diagonal(d, qvec({0, 1, 2, 3}));
    TkOptions opts;
    TriangulantKReport rep = triangulant_k(a, b, 2, opts);
    CHECK(rep.method == TkMethod::line_interpolation);
    TkOptions other;
    other.seed = 99991;
    CHECK(triangulant_k(a, b, 2, other).value == rep.value);
}

TEST_CASE("oracle equivalence on simple split pairs") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 6; ++it) {
        Matrix a = conjugate_diag(rng, qvec({0, 1, 3}));
        Matrix b = conjugate_diag(rng, qvec({2, 5, 11}));
        for (int k = 1; k <= 2; ++k) {
            OracleReport oracle = theorem_k_oracle(a, b, k);
            CHECK(oracle.degenerate_pair_exists == triangulant_k(a, b, k).value.is_zero());
            if (oracle.degenerate_pair_exists) CHECK(oracle.witness.has_value());
        }
    }
}

TEST_CASE("intersecting pairs vanish and the oracle finds a witness") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        auto [a, b] = make_intersecting_pair(3, 1, seed);
        CHECK(triangulant_k(a, b, 1).value.is_zero());
        CHECK(triangulant(a, b).value.is_zero());
    }
    // n=4 with split simple spectra: upper-triangular pair sharing the
    // invariant plane span{e1,e2}, conjugated by a common P
    const FieldDescriptor d = FieldDescriptor::rational();
    std::mt19937_64 rng(59);
    Matrix a0(d, 4, 4), b0(d, 4, 4);
    std::vector<FieldValue> da = qvec({0, 1, 2, 4});
    std::vector<FieldValue> db = qvec({1, 3, 7, 10});
    std::uniform_int_distribution<long> dist(-3, 3);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            a0.at(i, j) = (i == j) ? da[static_cast<size_t>(i)] : q(dist(rng));
            b0.at(i, j) = (i == j) ? db[static_cast<size_t>(i)] : q(dist(rng));
        }
    Matrix p(d, 4, 4);
    do {
        p = testutil::random_qmat(rng, 4);
    } while (determinant(p).is_zero());
    Matrix pinv = inverse(p);
    TriangulantKReport rep = triangulant_k(p * a0 * pinv, p * b0 * pinv, 2);
    CHECK(rep.method == TkMethod::direct_division);
    CHECK(rep.value.is_zero());
}

TEST_CASE("krylov check") {
    // A nilpotent shift, B diagonal; v = e1 spans a 1-dim A-Krylov space
    Matrix a = qmat({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    Matrix b = Matrix::diagonal(FieldDescriptor::rational(), qvec({1, 2, 3}));
    Vector e1 = qvec({1, 0, 0});
    // dim K[A]e1 = 3 > n - k for k=1, and dim K[B]e1 = 1 <= 1
    CHECK_FALSE(theorem_k_krylov_check(a, b, 1, e1));
    Vector e3 = qvec({0, 0, 1});
    // dim K[A]e3 = 1 <= 2, dim K[B]e3 = 1 <= 1
    CHECK(theorem_k_krylov_check(a, b, 1, e3));
}
