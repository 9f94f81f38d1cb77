#ifndef TRI_LINALG_HPP
#define TRI_LINALG_HPP

#include <vector>

#include "tri/matrix.hpp"

namespace tri {

struct UniPoly {
    FieldDescriptor desc;
    std::vector<FieldValue> coeffs;  // constant term first; empty = zero polynomial

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    FieldValue coeff(int i) const;
    FieldValue eval(const FieldValue& x) const;
    UniPoly derivative() const;
    void normalize();  // strip leading zeros
    std::string str(const std::string& var = "x") const;
};

// Exact determinant. Rationals go through integer Bareiss after clearing
// denominators; other exact kinds use exact Gaussian elimination; complex
// uses partially pivoted elimination.
FieldValue determinant(const Matrix& a);

// Straight Gaussian elimination over the field, any kind. Kept as an
// independent route for cross-checks against the Bareiss path.
FieldValue determinant_field_gauss(const Matrix& a);

int rank(const Matrix& a);
std::vector<Vector> kernel_basis(const Matrix& a);

Matrix inverse(const Matrix& m);  // throws FieldError on singular input

// Characteristic polynomial det(xI - A), division-free (Berkowitz), monic.
UniPoly charpoly(const Matrix& a);

// rank of [v, Av, ..., A^{n-1}v]
int krylov_dim(const Matrix& a, const Vector& v);

// det of the submatrix with rows S and columns T, 1-based increasing index sets.
FieldValue submatrix_minor(const Matrix& p, const std::vector<int>& rowset,
                           const std::vector<int>& colset);

Matrix submatrix(const Matrix& p, const std::vector<int>& rowset, const std::vector<int>& colset);

}  // namespace tri

#endif
