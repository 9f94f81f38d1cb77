#include "tri/exterior.hpp"

#include <algorithm>

namespace tri {

long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

SubsetIndexer::SubsetIndexer(int n, int k) : n_(n), k_(k) {
    if (k < 0 || k > n) throw FieldError("subset size out of range");
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i + 1;
    if (k == 0) {
        subsets_.push_back({});
        return;
    }
    while (true) {
        subsets_.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
}

int SubsetIndexer::rank(const std::vector<int>& s) const {
    // lexicographic rank of an increasing k-subset of [n]
    long r = 0;
    int prev = 0;
    for (int i = 0; i < k_; ++i) {
        for (int v = prev + 1; v < s[static_cast<size_t>(i)]; ++v)
            r += binomial(n_ - v, k_ - 1 - i);
        prev = s[static_cast<size_t>(i)];
    }
    return static_cast<int>(r);
}

namespace {

int inversion_parity(const std::vector<int>& seq) {
    int inv = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv & 1;
}

bool has_duplicate(std::vector<int> seq) {
    std::sort(seq.begin(), seq.end());
    return std::adjacent_find(seq.begin(), seq.end()) != seq.end();
}

}  // namespace

Matrix leibniz_action(const Matrix& a, int k) {
    if (!a.is_square()) throw FieldError("leibniz_action requires square matrix");
    const int n = a.rows();
    SubsetIndexer idx(n, k);
    const int N = idx.count();
    Matrix r(a.descriptor(), N, N);
    for (int col = 0; col < N; ++col) {
        const std::vector<int>& t = idx.subset(col);
        for (int pos = 0; pos < k; ++pos) {
            int tj = t[static_cast<size_t>(pos)];
            for (int s = 1; s <= n; ++s) {
                const FieldValue& c = a.at(s - 1, tj - 1);
                if (c.is_zero()) continue;
                if (s == tj) {
                    r.at(col, col) = r.at(col, col) + c;
                    continue;
                }
                if (std::find(t.begin(), t.end(), s) != t.end()) continue;
                std::vector<int> nt = t;
                nt[static_cast<size_t>(pos)] = s;
                int par = inversion_parity(nt);
                std::sort(nt.begin(), nt.end());
                int row = idx.rank(nt);
                FieldValue term = par ? c.neg() : c;
                r.at(row, col) = r.at(row, col) + term;
            }
        }
    }
    return r;
}

Matrix graded_action(const Matrix& a, int k, int i) {
    if (!a.is_square()) throw FieldError("graded_action requires square matrix");
    if (i < 0 || i > k) throw FieldError("graded_action requires 0 <= i <= k");
    if (i == 0) return Matrix::identity(a.descriptor(), static_cast<int>(binomial(a.rows(), k)));
    const int n = a.rows();
    SubsetIndexer idx(n, k);
    SubsetIndexer pos_idx(k, i);
    const int N = idx.count();
    const FieldDescriptor& d = a.descriptor();
    Matrix r(d, N, N);
    for (int col = 0; col < N; ++col) {
        const std::vector<int>& t = idx.subset(col);
        for (const std::vector<int>& positions : pos_idx.subsets()) {
            // apply a at exactly these positions; enumerate replacements
            std::vector<int> repl(static_cast<size_t>(i), 1);
            while (true) {
                std::vector<int> seq = t;
                FieldValue coeff = FieldValue::one(d);
                bool zero = false;
                for (int j = 0; j < i; ++j) {
                    int p = positions[static_cast<size_t>(j)] - 1;  // 0-based position in t
                    int s = repl[static_cast<size_t>(j)];
                    const FieldValue& c = a.at(s - 1, t[static_cast<size_t>(p)] - 1);
                    if (c.is_zero()) { zero = true; break; }
                    coeff = coeff * c;
                    seq[static_cast<size_t>(p)] = s;
                }
                if (!zero && !has_duplicate(seq)) {
                    int par = inversion_parity(seq);
                    std::vector<int> sorted = seq;
                    std::sort(sorted.begin(), sorted.end());
                    int row = idx.rank(sorted);
                    r.at(row, col) = r.at(row, col) + (par ? coeff.neg() : coeff);
                }
                // next replacement tuple
                int j = i - 1;
                while (j >= 0 && repl[static_cast<size_t>(j)] == n) {
                    repl[static_cast<size_t>(j)] = 1;
                    --j;
                }
                if (j < 0) break;
                ++repl[static_cast<size_t>(j)];
            }
        }
    }
    return r;
}

Matrix compound(const Matrix& p, int k) {
    if (!p.is_square()) throw FieldError("compound requires square matrix");
    SubsetIndexer idx(p.rows(), k);
    const int N = idx.count();
    Matrix r(p.descriptor(), N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            r.at(i, j) = submatrix_minor(p, idx.subset(i), idx.subset(j));
    return r;
}

PluckerVector plucker(const std::vector<Vector>& v_basis, int n) {
    const int k = static_cast<int>(v_basis.size());
    if (k == 0 || k > n) throw FieldError("plucker basis size out of range");
    const FieldDescriptor& d = v_basis[0][0].descriptor();
    Matrix m(d, n, k);
    for (int j = 0; j < k; ++j) {
        if (static_cast<int>(v_basis[static_cast<size_t>(j)].size()) != n)
            throw FieldError("plucker vector length mismatch");
        for (int i = 0; i < n; ++i) m.at(i, j) = v_basis[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
    SubsetIndexer idx(n, k);
    PluckerVector pv{n, k, {}};
    std::vector<int> all_cols(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) all_cols[static_cast<size_t>(j)] = j + 1;
    bool any = false;
    for (int s = 0; s < idx.count(); ++s) {
        FieldValue c = submatrix_minor(m, idx.subset(s), all_cols);
        if (!c.is_zero()) any = true;
        pv.coords.push_back(c);
    }
    if (!any) throw FieldError("plucker: dependent basis");
    return pv;
}

bool pairing_degenerate(const std::vector<Vector>& u_basis, const std::vector<Vector>& v_basis) {
    if (u_basis.size() != v_basis.size() || u_basis.empty())
        throw FieldError("pairing_degenerate basis size mismatch");
    const int k = static_cast<int>(u_basis.size());
    const int n = static_cast<int>(u_basis[0].size());
    const FieldDescriptor& d = u_basis[0][0].descriptor();
    Matrix gram(d, k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            FieldValue s = FieldValue::zero(d);
            for (int t = 0; t < n; ++t)
                s = s + u_basis[static_cast<size_t>(i)][static_cast<size_t>(t)] *
                            v_basis[static_cast<size_t>(j)][static_cast<size_t>(t)];
            gram.at(i, j) = s;
        }
    bool by_gram = determinant(gram).is_zero();
    // Cauchy-Binet route
    PluckerVector pu = plucker(u_basis, n);
    PluckerVector pv = plucker(v_basis, n);
    FieldValue dot = FieldValue::zero(d);
    for (size_t s = 0; s < pu.coords.size(); ++s) dot = dot + pu.coords[s] * pv.coords[s];
    bool by_plucker = dot.is_zero();
    if (d.exact() && by_gram != by_plucker)
        throw FieldError("pairing_degenerate: Gram and Plücker routes disagree");
    return by_gram;
}

InvariantSubspaceReport is_invariant_subspace(const Matrix& a, const std::vector<Vector>& v_basis) {
    const int n = a.rows();
    const int k = static_cast<int>(v_basis.size());
    const FieldDescriptor& d = a.descriptor();
    Matrix v(d, n, k), both(d, n, 2 * k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) v.at(i, j) = v_basis[static_cast<size_t>(j)][static_cast<size_t>(i)];
    if (rank(v) != k) throw FieldError("is_invariant_subspace: dependent basis");
    Matrix av = a * v;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) {
            both.at(i, j) = v.at(i, j);
            both.at(i, k + j) = av.at(i, j);
        }
    InvariantSubspaceReport rep;
    rep.invariant = (rank(both) == k);
    if (!rep.invariant) return rep;
    // A restricted to V: pick k independent rows of v and solve v[R] C = (av)[R]
    std::vector<int> rows;
    Matrix probe(d, 0, 0);
    for (int i = 0; i < n && static_cast<int>(rows.size()) < k; ++i) {
        std::vector<int> cand = rows;
        cand.push_back(i + 1);
        std::vector<int> cols(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) cols[static_cast<size_t>(j)] = j + 1;
        Matrix sub = submatrix(v, cand, cols);
        if (rank(sub) == static_cast<int>(cand.size())) rows = cand;
    }
    std::vector<int> cols(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) cols[static_cast<size_t>(j)] = j + 1;
    Matrix restricted = inverse(submatrix(v, rows, cols)) * submatrix(av, rows, cols);
    UniPoly cp = charpoly(restricted);
    for (int i = 1; i <= k; ++i) {
        FieldValue e = cp.coeff(k - i);
        if (i & 1) e = e.neg();
        rep.e_values.push_back(e);
    }
    return rep;
}

}  // namespace tri
