#include "tri/triangulant_k.hpp"

#include <random>

namespace tri {

std::string to_string(TkMethod m) {
    switch (m) {
        case TkMethod::trivial_boundary: return "trivial_boundary";
        case TkMethod::geometric_multiplicity_zero: return "geometric_multiplicity_zero";
        case TkMethod::direct_division: return "direct_division";
        case TkMethod::line_interpolation: return "line_interpolation";
    }
    return "?";
}

namespace {

bool is_upper_triangular(const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

bool is_lower_triangular(const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

// Direction matrix for line interpolation. Triangular bases get a matching
// triangular direction so that sampled spectra stay readable off the diagonal.
Matrix direction_matrix(const Matrix& base, std::mt19937_64& rng) {
    const int n = base.rows();
    const FieldDescriptor& d = base.descriptor();
    std::uniform_int_distribution<int> dist(1, 7);
    bool upper = is_upper_triangular(base);
    bool lower = !upper && is_lower_triangular(base);
    Matrix e(d, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (upper && j < i) continue;
            if (lower && j > i) continue;
            e.at(i, j) = FieldValue::from_int(dist(rng), d);
        }
    return e;
}

struct SampleResult {
    FieldValue value;
    bool ok = false;
};

// One direct-division evaluation of T_k at a sample pair; fails (ok=false)
// when a required spectrum does not split or a correction factor vanishes.
SampleResult sample_direct(const Matrix& xa, const Matrix& xb, int k, bool g_trivial) {
    const FieldDescriptor& d = xa.descriptor();
    const int n = xa.rows();
    FieldValue gk = FieldValue::one(d);
    if (!g_trivial) {
        try {
            SpectrumReport sa = spectrum(xa), sb = spectrum(xb);
            if (!sa.split || !sb.split) return {};
            FieldValue gka = g_factor(sa.flat(), n, k);
            FieldValue gkb = g_factor(sb.flat(), n, k);
            if (gka.is_zero() || gkb.is_zero()) return {};
            gk = gka * gkb;
        } catch (const FieldError&) {
            return {};
        }
    }
    FieldValue up = triangulant(leibniz_action(xa, k), leibniz_action(xb, k)).value;
    return {up / gk, true};
}

}  // namespace

TriangulantKReport triangulant_k(const Matrix& a, const Matrix& b, int k, TkOptions opts) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw FieldError("triangulant_k requires equal square shapes");
    if (a.descriptor() != b.descriptor()) throw FieldError("matrix descriptor mismatch");
    const int n = a.rows();
    const FieldDescriptor& d = a.descriptor();
    if (k < 0 || k > n) throw FieldError("triangulant_k: k out of range");

    TriangulantKReport rep;
    rep.k = k;
    if (k == 0 || k == n) {
        rep.method = TkMethod::trivial_boundary;
        rep.value = FieldValue::one(d);
        return rep;
    }
    if (binomial(n, k) > 10)
        throw FieldError("triangulant_k size cap exceeded: binomial(n,k) > 10");

    SpectrumReport sa = spectrum(a, opts.eigs_a);
    SpectrumReport sb = spectrum(b, opts.eigs_b);
    if (!opts.force_interpolation &&
        (sa.has_derogatory_eigenvalue() || sb.has_derogatory_eigenvalue())) {
        // repeated geometric multiplicity on either side forces T_k = 0
        rep.method = TkMethod::geometric_multiplicity_zero;
        rep.value = FieldValue::zero(d);
        return rep;
    }

    const bool g_trivial = g_factor_trivially_one(n, k);
    if (!opts.force_interpolation) {
        FieldValue gka = FieldValue::one(d), gkb = FieldValue::one(d);
        bool have_g = g_trivial;
        if (!g_trivial) {
            if (!sa.split || !sb.split)
                throw FieldError(
                    "triangulant_k: spectrum does not split and no eigenvalues were supplied");
            gka = g_factor(sa.flat(), n, k);
            gkb = g_factor(sb.flat(), n, k);
            have_g = true;
        }
        if (have_g && !gka.is_zero() && !gkb.is_zero()) {
            FieldValue up = triangulant(leibniz_action(a, k), leibniz_action(b, k)).value;
            rep.method = TkMethod::direct_division;
            rep.gk_a = gka;
            rep.gk_b = gkb;
            rep.t_upstairs = up;
            rep.value = up / (gka * gkb);
            return rep;
        }
    }

    // Line interpolation: p(t) = T_k(a+tE, b+tF) has degree at most D in t.
    const long D = 2 * binomial(n, 2) * binomial(n, k) * binomial(n - 2, k - 1);
    std::mt19937_64 rng(opts.seed);
    for (int attempt = 0; attempt < 3; ++attempt) {
        Matrix e = direction_matrix(a, rng);
        Matrix f = direction_matrix(b, rng);
        std::vector<FieldValue> ts, ys;
        for (long j = 1; j <= 2 * D + 4 && static_cast<long>(ts.size()) <= D; ++j) {
            for (long sgn : {1L, -1L}) {
                if (static_cast<long>(ts.size()) > D) break;
                FieldValue t = FieldValue::from_int(sgn * j, d);
                Matrix xa = a + e.scale(t);
                Matrix xb = b + f.scale(t);
                SampleResult s = sample_direct(xa, xb, k, g_trivial);
                if (!s.ok) continue;
                ts.push_back(t);
                ys.push_back(s.value);
            }
        }
        if (static_cast<long>(ts.size()) <= D) continue;
        // Lagrange evaluation at t = 0
        FieldValue result = FieldValue::zero(d);
        for (size_t j = 0; j < ts.size(); ++j) {
            FieldValue w = ys[j];
            for (size_t m = 0; m < ts.size(); ++m) {
                if (m == j) continue;
                w = w * ts[m].neg() / (ts[j] - ts[m]);
            }
            result = result + w;
        }
        rep.method = TkMethod::line_interpolation;
        rep.samples_used = static_cast<int>(ts.size());
        rep.value = result;
        return rep;
    }
    throw FieldError("triangulant_k: interpolation failed to find enough nondegenerate samples");
}

FieldValue triangulant_k_diagdiag(const std::vector<FieldValue>& eigs_a, const Matrix& p,
                                  const std::vector<FieldValue>& bs, int k) {
    const int n = p.rows();
    if (static_cast<int>(eigs_a.size()) != n || static_cast<int>(bs.size()) != n)
        throw FieldError("triangulant_k_diagdiag size mismatch");
    FieldValue det_p = determinant(p);
    if (det_p.is_zero()) throw FieldError("singular conjugator P");
    const long nk = binomial(n, k);
    FieldValue v = (vandermonde_det(eigs_a) * vandermonde_det(bs))
                       .pow(nk * binomial(n - 2, k - 1));
    SubsetIndexer idx(n, k);
    for (int si = 0; si < idx.count(); ++si)
        for (int ti = 0; ti < idx.count(); ++ti)
            v = v * submatrix_minor(p, idx.subset(si), idx.subset(ti));
    v = v / det_p.pow(nk * binomial(n - 1, k - 1));
    if ((nk / 2) % 2) v = v.neg();
    return v;
}

OracleReport theorem_k_oracle(const Matrix& a, const Matrix& b, int k) {
    const int n = a.rows();
    if (k <= 0 || k >= n) throw FieldError("theorem_k_oracle requires 0 < k < n");
    const FieldDescriptor& d = a.descriptor();
    SpectrumReport sa = spectrum(a), sb = spectrum(b);
    if (!sa.split || !sb.split)
        throw FieldError("theorem_k_oracle: spectrum does not split");
    auto eigvecs = [&](const Matrix& m, const SpectrumReport& s, bool left) {
        std::vector<Vector> vecs;
        for (const auto& e : s.eigenvalues) {
            if (e.algebraic != 1)
                throw FieldError("theorem_k_oracle: spectrum is not simple");
            Matrix shifted = m - Matrix::identity(d, n).scale(e.value);
            if (left) shifted = shifted.transpose();
            std::vector<Vector> kb = kernel_basis(shifted);
            if (kb.empty()) throw FieldError("theorem_k_oracle: missing eigenvector");
            vecs.push_back(kb[0]);
        }
        return vecs;
    };
    std::vector<Vector> lefts = eigvecs(a, sa, true);
    std::vector<Vector> rights = eigvecs(b, sb, false);
    SubsetIndexer idx(n, k);
    for (int si = 0; si < idx.count(); ++si) {
        std::vector<Vector> u;
        for (int s : idx.subset(si)) u.push_back(lefts[static_cast<size_t>(s - 1)]);
        for (int ti = 0; ti < idx.count(); ++ti) {
            std::vector<Vector> v;
            for (int t : idx.subset(ti)) v.push_back(rights[static_cast<size_t>(t - 1)]);
            if (pairing_degenerate(u, v))
                return {true, std::make_pair(idx.subset(si), idx.subset(ti))};
        }
    }
    return {false, std::nullopt};
}

bool theorem_k_krylov_check(const Matrix& a, const Matrix& b, int k, const Vector& v) {
    return krylov_dim(a, v) <= a.rows() - k && krylov_dim(b, v) <= k;
}

std::pair<Matrix, Matrix> make_intersecting_pair(int n, int k, std::uint64_t seed) {
    if (k <= 0 || k >= n) throw FieldError("make_intersecting_pair requires 0 < k < n");
    const FieldDescriptor d = FieldDescriptor::rational();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-4, 4);
    auto random_matrix = [&]() {
        Matrix m(d, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = FieldValue::from_int(dist(rng), d);
        return m;
    };
    // A0 preserves span{e_1..e_{n-k}} (codimension k); B0 preserves
    // span{e_1..e_k}; the two subspaces always intersect nontrivially.
    Matrix a0 = random_matrix(), b0 = random_matrix();
    for (int i = n - k; i < n; ++i)
        for (int j = 0; j < n - k; ++j) a0.at(i, j) = FieldValue::zero(d);
    for (int i = k; i < n; ++i)
        for (int j = 0; j < k; ++j) b0.at(i, j) = FieldValue::zero(d);
    Matrix p(d, n, n);
    do {
        p = random_matrix();
    } while (determinant(p).is_zero());
    Matrix pinv = inverse(p);
    return {p * a0 * pinv, p * b0 * pinv};
}

}  // namespace tri
