#ifndef TRI_TRIANGULANT_HPP
#define TRI_TRIANGULANT_HPP

#include <optional>

#include "tri/linalg.hpp"
#include "tri/spectra.hpp"

namespace tri {

enum class TriangulantMethod { direct_determinant, diagonal_formula };

struct TriangulantReport {
    FieldValue value;
    int n = 0;
    std::optional<int> kernel_dim;
    TriangulantMethod method = TriangulantMethod::direct_determinant;
};

// n^2 x n^2 matrix with block (i,j) = A^{j-1} B^{i-1}, 1-based block indices.
Matrix block_matrix_M(const Matrix& a, const Matrix& b);

TriangulantReport triangulant(const Matrix& a, const Matrix& b, bool diagnostics = false);

// Column j (1-based) is the t-th column of A^{j-1}.
FieldValue delta_t(const Matrix& a, int t);
FieldValue delta_product(const Matrix& a);

// Closed form (-1)^{floor(n/2)} Delta(A) delta(b)^n for B = diag(bs).
FieldValue triangulant_diag_formula(const Matrix& a, const std::vector<FieldValue>& bs);

struct Identity2x2Report {
    FieldValue t;
    FieldValue det_comm;
    FieldValue trace_form;
    bool comm_square_zero = false;
};

Identity2x2Report triangulant_2x2_identities(const Matrix& a, const Matrix& b);

struct KernelBoundReport {
    int kernel_dim = 0;
    int lower_bound = 0;
    bool holds = false;
};

KernelBoundReport kernel_bound_check(const Matrix& a, const Matrix& b,
                                     const SpectrumReport& spectrum_b);

// Closed-form product for A = P^{-1} diag(eigs_a) P, B = diag(bs).
FieldValue diagonalizable_product_formula(const std::vector<FieldValue>& eigs_a, const Matrix& p,
                                          const std::vector<FieldValue>& bs);

}  // namespace tri

#endif
