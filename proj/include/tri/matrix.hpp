#ifndef TRI_MATRIX_HPP
#define TRI_MATRIX_HPP

#include <vector>

#include "tri/field.hpp"

namespace tri {

class Matrix {
public:
    Matrix() : desc_(FieldDescriptor::rational()), rows_(0), cols_(0) {}
    Matrix(FieldDescriptor d, int rows, int cols)
        : desc_(d), rows_(rows), cols_(cols),
          e_(static_cast<size_t>(rows) * cols, FieldValue::zero(d)) {
        if (rows < 0 || cols < 0) throw FieldError("negative matrix dimension");
    }

    static Matrix identity(const FieldDescriptor& d, int n);
    static Matrix diagonal(const FieldDescriptor& d, const std::vector<FieldValue>& diag);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldDescriptor& descriptor() const { return desc_; }

    FieldValue& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const FieldValue& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scale(const FieldValue& s) const;
    Matrix transpose() const;
    Matrix pow(int e) const;  // e >= 0, square only

    bool operator==(const Matrix& o) const;
    bool is_square() const { return rows_ == cols_; }

private:
    FieldDescriptor desc_;
    int rows_, cols_;
    std::vector<FieldValue> e_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);

using Vector = std::vector<FieldValue>;

Vector matvec(const Matrix& a, const Vector& v);

}  // namespace tri

#endif
