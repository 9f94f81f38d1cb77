#ifndef TRI_EXTERIOR_HPP
#define TRI_EXTERIOR_HPP

#include <optional>
#include <vector>

#include "tri/linalg.hpp"
#include "tri/matrix.hpp"

namespace tri {

long binomial(int n, int k);

// k-subsets of {1..n} in lexicographic order, with rank/unrank.
class SubsetIndexer {
public:
    SubsetIndexer(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    int count() const { return static_cast<int>(subsets_.size()); }
    const std::vector<int>& subset(int index) const { return subsets_[static_cast<size_t>(index)]; }
    const std::vector<std::vector<int>>& subsets() const { return subsets_; }
    int rank(const std::vector<int>& s) const;  // s increasing, 1-based

private:
    int n_, k_;
    std::vector<std::vector<int>> subsets_;
};

// Additive (Leibniz-rule) action of a on wedge^k, binomial(n,k)-square.
Matrix leibniz_action(const Matrix& a, int k);

// Coefficient of x^i in (I+xA)^{tensor k}, acting on wedge^k.
// i=0 is the identity, i=1 recovers leibniz_action, i=k the compound.
Matrix graded_action(const Matrix& a, int k, int i);

// Multiplicative k-th compound: entry (S,T) = det p[S|T].
Matrix compound(const Matrix& p, int k);

struct PluckerVector {
    int n, k;
    std::vector<FieldValue> coords;  // lex subset order
};

// v_basis: k independent n-vectors (columns of the spanned subspace).
PluckerVector plucker(const std::vector<Vector>& v_basis, int n);

// True iff the row-column pairing between span(u_basis) and span(v_basis)
// is degenerate; checked both as det of the Gram matrix and as the Plücker
// dot product (Cauchy-Binet).
bool pairing_degenerate(const std::vector<Vector>& u_basis, const std::vector<Vector>& v_basis);

struct InvariantSubspaceReport {
    bool invariant = false;
    std::vector<FieldValue> e_values;  // e_{1,V}(A), ..., e_{k,V}(A) when invariant
};

InvariantSubspaceReport is_invariant_subspace(const Matrix& a, const std::vector<Vector>& v_basis);

}  // namespace tri

#endif
