#ifndef TRI_SPECTRA_HPP
#define TRI_SPECTRA_HPP

#include <optional>
#include <vector>

#include "tri/linalg.hpp"

namespace tri {

enum class SpectrumBackend { exact_roots, user_supplied, numeric };

struct EigenEntry {
    FieldValue value;
    int algebraic = 1;
    int geometric = 1;
};

struct SpectrumReport {
    std::vector<EigenEntry> eigenvalues;  // distinct values
    bool split = false;
    SpectrumBackend backend = SpectrumBackend::exact_roots;

    bool has_derogatory_eigenvalue() const;
    // flattened list with algebraic multiplicities, throws if !split
    std::vector<FieldValue> flat() const;
};

SpectrumReport spectrum(const Matrix& a,
                        const std::optional<std::vector<FieldValue>>& supplied = std::nullopt);

// Vandermonde determinant: prod_{s<t} (x_t - x_s); empty/singleton -> 1.
FieldValue vandermonde_det(const std::vector<FieldValue>& xs);

// prod (lambda_T - lambda_S) over disjoint r-subset pairs with min S < min T;
// 1 when no such pair exists.
FieldValue delta_r(const std::vector<FieldValue>& eigs, int r);

FieldValue discriminant_D(const std::vector<FieldValue>& eigs);
FieldValue discriminant_Dr(const std::vector<FieldValue>& eigs, int r);

// G_k = prod_{2<=r<=k} D_r ^ (C(n,k) C(n-2r,k-r))
FieldValue g_factor(const std::vector<FieldValue>& eigs, int n, int k);

// True when every exponent in G_k is zero, i.e. G_k = 1 identically.
bool g_factor_trivially_one(int n, int k);

bool kdelta_identity_check(const std::vector<FieldValue>& eigs, int k);

}  // namespace tri

#endif
