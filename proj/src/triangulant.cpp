#include "tri/triangulant.hpp"

namespace tri {

Matrix block_matrix_M(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw FieldError("block_matrix_M requires equal square shapes");
    if (a.descriptor() != b.descriptor()) throw FieldError("matrix descriptor mismatch");
    const int n = a.rows();
    const FieldDescriptor& d = a.descriptor();
    std::vector<Matrix> apow, bpow;
    apow.reserve(static_cast<size_t>(n));
    bpow.reserve(static_cast<size_t>(n));
    apow.push_back(Matrix::identity(d, n));
    bpow.push_back(Matrix::identity(d, n));
    for (int i = 1; i < n; ++i) {
        apow.push_back(apow.back() * a);
        bpow.push_back(bpow.back() * b);
    }
    Matrix m(d, n * n, n * n);
    for (int bi = 0; bi < n; ++bi)
        for (int bj = 0; bj < n; ++bj) {
            Matrix block = apow[static_cast<size_t>(bj)] * bpow[static_cast<size_t>(bi)];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(bi * n + i, bj * n + j) = block.at(i, j);
        }
    return m;
}

TriangulantReport triangulant(const Matrix& a, const Matrix& b, bool diagnostics) {
    Matrix m = block_matrix_M(a, b);
    TriangulantReport rep;
    rep.n = a.rows();
    rep.method = TriangulantMethod::direct_determinant;
    rep.value = determinant(m);
    if (diagnostics) rep.kernel_dim = m.cols() - rank(m);
    return rep;
}

FieldValue delta_t(const Matrix& a, int t) {
    if (!a.is_square()) throw FieldError("delta_t requires square matrix");
    const int n = a.rows();
    if (t < 1 || t > n) throw FieldError("delta_t: t out of range");
    const FieldDescriptor& d = a.descriptor();
    Matrix m(d, n, n);
    Matrix p = Matrix::identity(d, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m.at(i, j) = p.at(i, t - 1);
        if (j + 1 < n) p = p * a;
    }
    return determinant(m);
}

FieldValue delta_product(const Matrix& a) {
    FieldValue r = FieldValue::one(a.descriptor());
    for (int t = 1; t <= a.rows(); ++t) r = r * delta_t(a, t);
    return r;
}

FieldValue triangulant_diag_formula(const Matrix& a, const std::vector<FieldValue>& bs) {
    const int n = a.rows();
    if (static_cast<int>(bs.size()) != n) throw FieldError("diag formula: |bs| != n");
    FieldValue v = delta_product(a) * vandermonde_det(bs).pow(n);
    if ((n / 2) % 2) v = v.neg();
    return v;
}

Identity2x2Report triangulant_2x2_identities(const Matrix& a, const Matrix& b) {
    if (a.rows() != 2 || !a.is_square() || b.rows() != 2 || !b.is_square())
        throw FieldError("2x2 identities require n = 2");
    Identity2x2Report rep;
    rep.t = triangulant(a, b).value;
    Matrix c = commutator(a, b);
    rep.det_comm = determinant(c);
    Matrix prod = a * c * b;
    rep.trace_form = prod.at(0, 0) + prod.at(1, 1);
    Matrix c2 = c * c;
    rep.comm_square_zero = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!c2.at(i, j).is_zero()) rep.comm_square_zero = false;
    return rep;
}

KernelBoundReport kernel_bound_check(const Matrix& a, const Matrix& b,
                                     const SpectrumReport& spectrum_b) {
    if (!spectrum_b.split) throw FieldError("kernel_bound_check requires a split spectrum");
    const int n = a.rows();
    KernelBoundReport rep;
    for (const auto& e : spectrum_b.eigenvalues) rep.lower_bound += n * (e.geometric - 1);
    Matrix m = block_matrix_M(a, b);
    rep.kernel_dim = m.cols() - rank(m);
    rep.holds = rep.kernel_dim >= rep.lower_bound;
    return rep;
}

FieldValue diagonalizable_product_formula(const std::vector<FieldValue>& eigs_a, const Matrix& p,
                                          const std::vector<FieldValue>& bs) {
    const int n = p.rows();
    if (static_cast<int>(eigs_a.size()) != n || static_cast<int>(bs.size()) != n)
        throw FieldError("product formula size mismatch");
    FieldValue det_p = determinant(p);
    if (det_p.is_zero()) throw FieldError("singular conjugator P");
    FieldValue v = vandermonde_det(eigs_a).pow(n) * vandermonde_det(bs).pow(n) * det_p.pow(-n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) v = v * p.at(s, t);
    if ((n / 2) % 2) v = v.neg();
    return v;
}

}  // namespace tri
