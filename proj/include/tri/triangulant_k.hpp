#ifndef TRI_TRIANGULANT_K_HPP
#define TRI_TRIANGULANT_K_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "tri/exterior.hpp"
#include "tri/spectra.hpp"
#include "tri/triangulant.hpp"

namespace tri {

enum class TkMethod {
    trivial_boundary,
    geometric_multiplicity_zero,
    direct_division,
    line_interpolation,
};

std::string to_string(TkMethod m);

struct TriangulantKReport {
    FieldValue value;
    int k = 0;
    TkMethod method = TkMethod::trivial_boundary;
    std::optional<FieldValue> gk_a, gk_b;
    std::optional<FieldValue> t_upstairs;
    std::optional<int> samples_used;
};

struct TkOptions {
    std::optional<std::vector<FieldValue>> eigs_a, eigs_b;  // supplied spectra
    std::uint64_t seed = 20240915;
    bool force_interpolation = false;
};

// Layered evaluation of T_k: boundary, geometric-multiplicity shortcut,
// direct division T(A_k,B_k)/(G_k(A)G_k(B)), then univariate line
// interpolation through nondegenerate sample points.
TriangulantKReport triangulant_k(const Matrix& a, const Matrix& b, int k, TkOptions opts = {});

// Closed-form product for A = P^{-1} diag(eigs_a) P, B = diag(bs).
FieldValue triangulant_k_diagdiag(const std::vector<FieldValue>& eigs_a, const Matrix& p,
                                  const std::vector<FieldValue>& bs, int k);

struct OracleReport {
    bool degenerate_pair_exists = false;
    // 1-based eigenvalue index subsets (S into left eigenvectors of a,
    // T into right eigenvectors of b), present when a degenerate pair exists
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
};

// Brute force over all C(n,k)^2 spans of eigenvector subsets; requires
// simple split spectra on both sides.
OracleReport theorem_k_oracle(const Matrix& a, const Matrix& b, int k);

bool theorem_k_krylov_check(const Matrix& a, const Matrix& b, int k, const Vector& v);

// Seeded fixture: conjugated block-triangular pair guaranteed to have a
// k-dimensional B-invariant subspace meeting a k-codimensional A-invariant
// subspace, so T_k vanishes.
std::pair<Matrix, Matrix> make_intersecting_pair(int n, int k, std::uint64_t seed);

}  // namespace tri

#endif
