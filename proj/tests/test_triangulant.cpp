#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tri/triangulant.hpp"

using namespace tri;
using testutil::q;
using testutil::qmat;
using testutil::qvec;

TEST_CASE("block matrix layout") {
    Matrix a = qmat({{1, 1}, {0, 1}});
    Matrix b = qmat({{1, 0}, {1, 1}});
    Matrix m = block_matrix_M(a, b);
    REQUIRE(m.rows() == 4);
    // (1,1) block is I, (1,2) block is A, (2,1) block is B, (2,2) block is AB
    CHECK(m.at(0, 0) == q(1));
    CHECK(m.at(0, 2) == a.at(0, 0));
    CHECK(m.at(0, 3) == a.at(0, 1));
    CHECK(m.at(2, 0) == b.at(0, 0));
    Matrix ab = a * b;
    CHECK(m.at(2, 2) == ab.at(0, 0));
    CHECK(m.at(3, 3) == ab.at(1, 1));
}

TEST_CASE("unipotent pair fixture") {
    Matrix a = qmat({{1, 1}, {0, 1}});
    Matrix b = qmat({{1, 0}, {1, 1}});
    CHECK(triangulant(a, b).value == q(-1));
    CHECK(triangulant(b, a).value == q(-1));
}

TEST_CASE("n=1 convention") {
    TriangulantReport rep = triangulant(qmat({{7}}), qmat({{5}}));
    CHECK(rep.value == q(1));
    CHECK(rep.n == 1);
}

TEST_CASE("delta columns fixture") {
    Matrix a = qmat({{1, 2}, {3, 4}});
    CHECK(delta_t(a, 1) == q(3));
    CHECK(delta_t(a, 2) == q(-2));
    CHECK(delta_product(a) == q(-6));
}

TEST_CASE("diagonal formula fixture and property") {
    Matrix a = qmat({{1, 2}, {3, 4}});
    std::vector<FieldValue> bs = qvec({3, 5});
    // (-1)^1 * (-6) * (5-3)^2 = 24
    CHECK(triangulant_diag_formula(a, bs) == q(24));
    CHECK(triangulant(a, Matrix::diagonal(a.descriptor(), bs)).value == q(24));

    std::mt19937_64 rng(3);
    for (int n = 2; n <= 4; ++n)
        for (int it = 0; it < 5; ++it) {
            Matrix m = testutil::random_qmat(rng, n, -3, 3);
            std::vector<FieldValue> diag;
            for (int i = 0; i < n; ++i) diag.push_back(q(5 * i + (it % 3)));
            CHECK(triangulant_diag_formula(m, diag) ==
                  triangulant(m, Matrix::diagonal(m.descriptor(), diag)).value);
        }
}

TEST_CASE("2x2 identities") {
    Matrix a = qmat({{1, 2}, {3, 4}});
    Matrix b = qmat({{0, 1}, {1, 1}});
    Identity2x2Report rep = triangulant_2x2_identities(a, b);
    CHECK(rep.t == rep.det_comm);
    CHECK(rep.t == rep.trace_form);
    CHECK(rep.t == triangulant(a, b).value);
    // commuting pair: everything vanishes and [A,B]^2 = 0
    Identity2x2Report comm = triangulant_2x2_identities(a, a * a);
    CHECK(comm.t.is_zero());
    CHECK(comm.comm_square_zero);
}

TEST_CASE("pauli pair over complex floats") {
    const FieldDescriptor d = FieldDescriptor::complex_float();
    Matrix x = testutil::mat(d, {{0, 1}, {1, 0}});
    Matrix z = testutil::mat(d, {{1, 0}, {0, -1}});
    CHECK(doctest::Approx(triangulant(x, z).value.abs()) == 4.0);
}

TEST_CASE("kernel bound for repeated eigenvalues") {
    // B = I_2: every eigenvalue has geometric multiplicity 2, bound = 2
    const FieldDescriptor d = FieldDescriptor::rational();
    std::mt19937_64 rng(5);
    Matrix a = testutil::random_qmat(rng, 2);
    Matrix b = Matrix::identity(d, 2);
    KernelBoundReport rep = kernel_bound_check(a, b, spectrum(b));
    CHECK(rep.lower_bound == 2);
    CHECK(rep.kernel_dim == 2);
    CHECK(rep.holds);

    // B = diag(1,1,2): bound = 3 * (2-1) = 3
    Matrix b3 = Matrix::diagonal(d, qvec({1, 1, 2}));
    for (int it = 0; it < 5; ++it) {
        Matrix a3 = testutil::random_qmat(rng, 3);
        KernelBoundReport r3 = kernel_bound_check(a3, b3, spectrum(b3));
        CHECK(r3.lower_bound == 3);
        CHECK(r3.holds);
        CHECK(triangulant(a3, b3).value.is_zero());
    }
}

TEST_CASE("diagonalizable product formula") {
    const FieldDescriptor d = FieldDescriptor::rational();
    std::mt19937_64 rng(9);
    for (int it = 0; it < 5; ++it) {
        Matrix p = testutil::random_qmat(rng, 3);
        if (determinant(p).is_zero()) continue;
        std::vector<FieldValue> as = qvec({1, 2, 4});
        std::vector<FieldValue> bs = qvec({0, 3, 7});
        Matrix a = inverse(p) * Matrix::diagonal(d, as) * p;
        CHECK(diagonalizable_product_formula(as, p, bs) ==
              triangulant(a, Matrix::diagonal(d, bs)).value);
    }
}

TEST_CASE("transpose and scaling symmetries") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 10; ++it) {
        Matrix a = testutil::random_qmat(rng, 3);
        Matrix b = testutil::random_qmat(rng, 3);
        CHECK(triangulant(a.transpose(), b.transpose()).value == triangulant(b, a).value);
        FieldValue s = q(2);
        long deg = 3 * 3;  // n * binomial(n,2) for n = 3
        CHECK(triangulant(a.scale(s), b).value == s.pow(deg) * triangulant(a, b).value);
        CHECK(triangulant(a, b.scale(s)).value == s.pow(deg) * triangulant(a, b).value);
    }
}

TEST_CASE("diagnostics report kernel dimension") {
    Matrix a = qmat({{1, 1}, {0, 1}});
    TriangulantReport rep = triangulant(a, Matrix::identity(a.descriptor(), 2), true);
    CHECK(rep.value.is_zero());
    REQUIRE(rep.kernel_dim.has_value());
    CHECK(*rep.kernel_dim == 2);
}
