#include "tri/matrix.hpp"

namespace tri {

namespace {
void check_shapes_equal(const Matrix& a, const Matrix& b) {
    if (a.descriptor() != b.descriptor()) throw FieldError("matrix descriptor mismatch");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw FieldError("matrix shape mismatch");
}
}  // namespace

Matrix Matrix::identity(const FieldDescriptor& d, int n) {
    Matrix m(d, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldValue::one(d);
    return m;
}

Matrix Matrix::diagonal(const FieldDescriptor& d, const std::vector<FieldValue>& diag) {
    int n = static_cast<int>(diag.size());
    Matrix m(d, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = diag[static_cast<size_t>(i)];
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_shapes_equal(*this, o);
    Matrix r(desc_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_shapes_equal(*this, o);
    Matrix r(desc_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (desc_ != o.desc_) throw FieldError("matrix descriptor mismatch");
    if (cols_ != o.rows_) throw FieldError("matmul shape mismatch");
    Matrix r(desc_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldValue& aik = at(i, k);
            if (desc_.exact() && aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
        }
    return r;
}

Matrix Matrix::scale(const FieldValue& s) const {
    Matrix r(desc_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(desc_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::pow(int e) const {
    if (!is_square()) throw FieldError("pow requires square matrix");
    if (e < 0) throw FieldError("negative matrix power");
    Matrix r = identity(desc_, rows_);
    Matrix b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (desc_ != o.desc_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (a.descriptor() != b.descriptor()) throw FieldError("matrix descriptor mismatch");
    Matrix r(a.descriptor(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    r.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw FieldError("commutator requires equal square shapes");
    return a * b - b * a;
}

Vector matvec(const Matrix& a, const Vector& v) {
    if (static_cast<int>(v.size()) != a.cols()) throw FieldError("matvec shape mismatch");
    Vector r(static_cast<size_t>(a.rows()), FieldValue::zero(a.descriptor()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r[static_cast<size_t>(i)] = r[static_cast<size_t>(i)] + a.at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

}  // namespace tri
