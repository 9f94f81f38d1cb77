#ifndef TRI_MUB_HPP
#define TRI_MUB_HPP

#include <vector>

#include "tri/triangulant.hpp"

namespace tri {

// Columns of `columns` are the basis vectors, over complex_float.
struct OrthonormalBasis {
    int n = 0;
    Matrix columns;
};

struct MubCertificate {
    std::vector<std::vector<double>> pair_deviations;  // | |<u_s,v_t>|^2 - 1/n |
    double max_deviation = 0;
    double triangulant_magnitude = 0;
    double bound = 0;  // n^{n^2/2}
    bool saturated = false;
    bool verdict = false;
};

OrthonormalBasis make_basis(const Matrix& columns, double tol = 1e-8);

MubCertificate check_unbiased(const OrthonormalBasis& b1, const OrthonormalBasis& b2,
                              double tol = 1e-8);

// U diag(1, eps, ..., eps^{n-1}) U^* with eps = exp(2 pi i / n).
Matrix basis_to_unitary(const OrthonormalBasis& b);

struct BoundCheckReport {
    double magnitude = 0;
    double bound = 0;
    bool saturated = false;
};

BoundCheckReport triangulant_bound_check(const Matrix& a, const Matrix& b, double tol = 1e-8,
                                         double tol_rel = 1e-6);

// Eigenbases of Z, X, XZ, ..., XZ^{p-1} (clock and shift), p prime <= 13.
std::vector<OrthonormalBasis> weyl_heisenberg_bases(int p);

}  // namespace tri

#endif
