#include "tri/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace tri {

FieldValue UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return FieldValue::zero(desc);
    return coeffs[static_cast<size_t>(i)];
}

FieldValue UniPoly::eval(const FieldValue& x) const {
    FieldValue r = FieldValue::zero(desc);
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        r = r * x + coeffs[static_cast<size_t>(i)];
    return r;
}

UniPoly UniPoly::derivative() const {
    UniPoly d{desc, {}};
    for (size_t i = 1; i < coeffs.size(); ++i)
        d.coeffs.push_back(coeffs[i] * FieldValue::from_int(static_cast<long>(i), desc));
    d.normalize();
    return d;
}

void UniPoly::normalize() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

std::string UniPoly::str(const std::string& var) const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const FieldValue& c = coeffs[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
        if (neg) cs = cs.substr(1);
        if (cs.find_first_of("+-,") != std::string::npos) cs = "(" + cs + ")";
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (i == 0 || cs != "1") s += cs;
        if (i > 0) {
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

namespace {

// Integer fraction-free Bareiss on a dense mpz matrix; destroys z.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>>& z) {
    const int n = static_cast<int>(z.size());
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (z[k][k] == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (z[i][k] != 0) { r = i; break; }
            if (r < 0) return 0;
            std::swap(z[k], z[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = z[i][j] * z[k][k] - z[i][k] * z[k][j];
                mpz_divexact(z[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][k] = 0;
        }
        prev = z[k][k];
    }
    mpz_class d = z[n - 1][n - 1];
    if (sign < 0) d = -d;
    return d;
}

FieldValue determinant_rational_bareiss(const Matrix& a) {
    const int n = a.rows();
    std::vector<std::vector<mpz_class>> z(static_cast<size_t>(n),
                                          std::vector<mpz_class>(static_cast<size_t>(n)));
    mpz_class scale = 1;
    for (int i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < n; ++j) {
            mpz_class den = a.at(i, j).rational().get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        for (int j = 0; j < n; ++j) {
            mpq_class q = a.at(i, j).rational() * mpq_class(l);
            z[static_cast<size_t>(i)][static_cast<size_t>(j)] = q.get_num();
        }
        scale *= l;
    }
    mpz_class det = bareiss_det(z);
    mpq_class r(det, scale);
    r.canonicalize();
    return FieldValue(a.descriptor(), r);
}

}  // namespace

FieldValue determinant_field_gauss(const Matrix& a) {
    if (!a.is_square()) throw FieldError("determinant requires square matrix");
    const int n = a.rows();
    const FieldDescriptor& d = a.descriptor();
    Matrix m = a;
    FieldValue det = FieldValue::one(d);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        if (d.exact()) {
            for (int i = k; i < n; ++i)
                if (!m.at(i, k).is_zero()) { piv = i; break; }
        } else {
            double best = 0;
            for (int i = k; i < n; ++i) {
                double v = m.at(i, k).abs();
                if (v > best) { best = v; piv = i; }
            }
            if (piv >= 0 && m.at(piv, k).is_zero()) piv = -1;
        }
        if (piv < 0) return FieldValue::zero(d);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            det = det.neg();
        }
        det = det * m.at(k, k);
        FieldValue inv = m.at(k, k).inv();
        for (int i = k + 1; i < n; ++i) {
            if (d.exact() && m.at(i, k).is_zero()) continue;
            FieldValue f = m.at(i, k) * inv;
            for (int j = k; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
        }
    }
    return det;
}

FieldValue determinant(const Matrix& a) {
    if (!a.is_square()) throw FieldError("determinant requires square matrix");
    if (a.descriptor().kind == FieldKind::rational) return determinant_rational_bareiss(a);
    return determinant_field_gauss(a);
}

namespace {

struct Rref {
    Matrix m;
    std::vector<int> pivot_cols;
};

Rref rref(const Matrix& a) {
    Matrix m = a;
    const FieldDescriptor& d = a.descriptor();
    const int rows = m.rows(), cols = m.cols();
    double thresh = 0;
    if (!d.exact()) {
        double maxnorm = 0;
        for (int i = 0; i < rows; ++i) {
            double s = 0;
            for (int j = 0; j < cols; ++j) {
                double v = m.at(i, j).abs();
                s += v * v;
            }
            maxnorm = std::max(maxnorm, std::sqrt(s));
        }
        thresh = d.tolerance * std::max(1.0, maxnorm);
    }
    auto negligible = [&](const FieldValue& v) {
        return d.exact() ? v.is_zero() : v.abs() <= thresh;
    };
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        if (d.exact()) {
            for (int i = r; i < rows; ++i)
                if (!negligible(m.at(i, c))) { piv = i; break; }
        } else {
            double best = thresh;
            for (int i = r; i < rows; ++i) {
                double v = m.at(i, c).abs();
                if (v > best) { best = v; piv = i; }
            }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
        FieldValue inv = m.at(r, c).inv();
        for (int j = c; j < cols; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || negligible(m.at(i, c))) continue;
            FieldValue f = m.at(i, c);
            for (int j = c; j < cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

int rank(const Matrix& a) { return static_cast<int>(rref(a).pivot_cols.size()); }

std::vector<Vector> kernel_basis(const Matrix& a) {
    Rref rr = rref(a);
    const FieldDescriptor& d = a.descriptor();
    const int cols = a.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<Vector> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        Vector v(static_cast<size_t>(cols), FieldValue::zero(d));
        v[static_cast<size_t>(f)] = FieldValue::one(d);
        for (size_t r = 0; r < rr.pivot_cols.size(); ++r)
            v[static_cast<size_t>(rr.pivot_cols[r])] = rr.m.at(static_cast<int>(r), f).neg();
        basis.push_back(std::move(v));
    }
    return basis;
}

// Gauss-Jordan on [m | I].
Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw FieldError("inverse requires square matrix");
    const int n = m.rows();
    const FieldDescriptor& d = m.descriptor();
    Matrix aug(d, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = FieldValue::one(d);
    }
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!aug.at(i, k).is_zero()) { piv = i; break; }
        if (piv < 0) throw FieldError("singular matrix");
        if (piv != k)
            for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(k, j), aug.at(piv, j));
        FieldValue inv = aug.at(k, k).inv();
        for (int j = 0; j < 2 * n; ++j) aug.at(k, j) = aug.at(k, j) * inv;
        for (int i = 0; i < n; ++i) {
            if (i == k || aug.at(i, k).is_zero()) continue;
            FieldValue f = aug.at(i, k);
            for (int j = 0; j < 2 * n; ++j) aug.at(i, j) = aug.at(i, j) - f * aug.at(k, j);
        }
    }
    Matrix r(d, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

UniPoly charpoly(const Matrix& a) {
    if (!a.is_square()) throw FieldError("charpoly requires square matrix");
    const int n = a.rows();
    const FieldDescriptor& d = a.descriptor();
    if (n == 0) return UniPoly{d, {FieldValue::one(d)}};
    // Berkowitz: p holds descending coefficients for the leading principal
    // r x r submatrix, length r+1.
    std::vector<FieldValue> p = {FieldValue::one(d), a.at(0, 0).neg()};
    for (int r = 2; r <= n; ++r) {
        const int m = r - 1;
        std::vector<FieldValue> t(static_cast<size_t>(r) + 1, FieldValue::zero(d));
        t[0] = FieldValue::one(d);
        t[1] = a.at(r - 1, r - 1).neg();
        Vector w(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) w[static_cast<size_t>(i)] = a.at(i, r - 1);
        for (int idx = 2; idx <= r; ++idx) {
            FieldValue acc = FieldValue::zero(d);
            for (int i = 0; i < m; ++i)
                acc = acc + a.at(r - 1, i) * w[static_cast<size_t>(i)];
            t[static_cast<size_t>(idx)] = acc.neg();
            if (idx < r) {
                Vector nw(static_cast<size_t>(m), FieldValue::zero(d));
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j)
                        nw[static_cast<size_t>(i)] =
                            nw[static_cast<size_t>(i)] + a.at(i, j) * w[static_cast<size_t>(j)];
                w = std::move(nw);
            }
        }
        std::vector<FieldValue> np(static_cast<size_t>(r) + 1, FieldValue::zero(d));
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j < r && j <= i; ++j)
                np[static_cast<size_t>(i)] =
                    np[static_cast<size_t>(i)] + t[static_cast<size_t>(i - j)] * p[static_cast<size_t>(j)];
        p = std::move(np);
    }
    UniPoly cp{d, {}};
    cp.coeffs.assign(p.rbegin(), p.rend());
    return cp;
}

int krylov_dim(const Matrix& a, const Vector& v) {
    if (!a.is_square() || static_cast<int>(v.size()) != a.rows())
        throw FieldError("krylov_dim shape mismatch");
    bool all_zero = true;
    for (const auto& x : v)
        if (!x.is_zero()) { all_zero = false; break; }
    if (all_zero) throw FieldError("krylov_dim requires a nonzero vector");
    const int n = a.rows();
    Matrix k(a.descriptor(), n, n);
    Vector w = v;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) k.at(i, j) = w[static_cast<size_t>(i)];
        if (j + 1 < n) w = matvec(a, w);
    }
    return rank(k);
}

Matrix submatrix(const Matrix& p, const std::vector<int>& rowset, const std::vector<int>& colset) {
    Matrix s(p.descriptor(), static_cast<int>(rowset.size()), static_cast<int>(colset.size()));
    for (size_t i = 0; i < rowset.size(); ++i)
        for (size_t j = 0; j < colset.size(); ++j) {
            int r = rowset[i], c = colset[j];
            if (r < 1 || r > p.rows() || c < 1 || c > p.cols())
                throw FieldError("submatrix index out of range");
            s.at(static_cast<int>(i), static_cast<int>(j)) = p.at(r - 1, c - 1);
        }
    return s;
}

FieldValue submatrix_minor(const Matrix& p, const std::vector<int>& rowset,
                           const std::vector<int>& colset) {
    if (rowset.size() != colset.size()) throw FieldError("minor requires |S| = |T|");
    return determinant(submatrix(p, rowset, colset));
}

}  // namespace tri
