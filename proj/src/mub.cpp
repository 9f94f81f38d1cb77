#include "tri/mub.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tri {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> inner(const Matrix& m, int col_u, const Matrix& w, int col_v) {
    std::complex<double> s = 0;
    for (int i = 0; i < m.rows(); ++i)
        s += std::conj(m.at(i, col_u).complex_value()) * w.at(i, col_v).complex_value();
    return s;
}

void require_orthonormal(const Matrix& cols, double tol) {
    const int n = cols.rows();
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            std::complex<double> ip = inner(cols, s, cols, t);
            double target = (s == t) ? 1.0 : 0.0;
            if (std::abs(ip - target) > tol)
                throw FieldError("basis is not orthonormal within tolerance");
        }
}

void require_unitary(const Matrix& m, double tol) {
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> s = 0;
            for (int k = 0; k < n; ++k)
                s += std::conj(m.at(k, i).complex_value()) * m.at(k, j).complex_value();
            double target = (i == j) ? 1.0 : 0.0;
            if (std::abs(s - target) > tol) throw FieldError("matrix is not unitary within tolerance");
        }
}

}  // namespace

OrthonormalBasis make_basis(const Matrix& columns, double tol) {
    if (!columns.is_square()) throw FieldError("basis matrix must be square");
    if (columns.descriptor().kind != FieldKind::complex_float)
        throw FieldError("bases are handled over complex_float");
    require_orthonormal(columns, tol);
    return {columns.rows(), columns};
}

MubCertificate check_unbiased(const OrthonormalBasis& b1, const OrthonormalBasis& b2, double tol) {
    if (b1.n != b2.n) throw FieldError("basis dimension mismatch");
    const int n = b1.n;
    MubCertificate cert;
    cert.pair_deviations.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            double p = std::norm(inner(b1.columns, s, b2.columns, t));
            double dev = std::abs(p - 1.0 / n);
            cert.pair_deviations[static_cast<size_t>(s)][static_cast<size_t>(t)] = dev;
            cert.max_deviation = std::max(cert.max_deviation, dev);
        }
    cert.verdict = cert.max_deviation <= tol;
    BoundCheckReport bc = triangulant_bound_check(basis_to_unitary(b1), basis_to_unitary(b2));
    cert.triangulant_magnitude = bc.magnitude;
    cert.bound = bc.bound;
    cert.saturated = bc.saturated;
    return cert;
}

Matrix basis_to_unitary(const OrthonormalBasis& b) {
    const int n = b.n;
    const FieldDescriptor& d = b.columns.descriptor();
    Matrix u = b.columns;
    Matrix diag(d, n, n);
    for (int j = 0; j < n; ++j)
        diag.at(j, j) = FieldValue(d, std::polar(1.0, kTwoPi * j / n));
    Matrix ustar(d, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ustar.at(i, j) = u.at(j, i).conj();
    return u * diag * ustar;
}

BoundCheckReport triangulant_bound_check(const Matrix& a, const Matrix& b, double tol,
                                         double tol_rel) {
    if (!a.is_square() || a.rows() != b.rows()) throw FieldError("shape mismatch");
    require_unitary(a, tol);
    require_unitary(b, tol);
    const int n = a.rows();
    BoundCheckReport rep;
    rep.magnitude = triangulant(a, b).value.abs();
    rep.bound = std::pow(static_cast<double>(n), n * n / 2.0);
    rep.saturated = std::abs(rep.magnitude - rep.bound) <= tol_rel * rep.bound;
    return rep;
}

std::vector<OrthonormalBasis> weyl_heisenberg_bases(int p) {
    if (p < 2 || p > 13 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw FieldError("weyl_heisenberg_bases requires a prime p <= 13");
    const FieldDescriptor d = FieldDescriptor::complex_float();
    const int n = p;
    Matrix clock(d, n, n), shift(d, n, n);
    for (int j = 0; j < n; ++j) {
        clock.at(j, j) = FieldValue(d, std::polar(1.0, kTwoPi * j / n));
        shift.at((j + 1) % n, j) = FieldValue::one(d);
    }
    std::vector<OrthonormalBasis> bases;
    // eigenbasis of Z: the standard basis
    bases.push_back(make_basis(Matrix::identity(d, n)));
    // eigenbases of X, XZ, ..., XZ^{p-1}
    for (int m = 0; m < p; ++m) {
        Matrix u = shift * clock.pow(m);
        Eigen::MatrixXcd em(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) em(i, j) = u.at(i, j).complex_value();
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(em, true);
        if (solver.info() != Eigen::Success) throw FieldError("eigensolver failed");
        Matrix cols(d, n, n);
        for (int j = 0; j < n; ++j) {
            Eigen::VectorXcd v = solver.eigenvectors().col(j);
            v.normalize();
            for (int i = 0; i < n; ++i) cols.at(i, j) = FieldValue(d, v(i));
        }
        bases.push_back(make_basis(cols));
    }
    return bases;
}

}  // namespace tri
