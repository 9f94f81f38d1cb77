#include "tri/spectra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>

#include "tri/exterior.hpp"

namespace tri {

bool SpectrumReport::has_derogatory_eigenvalue() const {
    for (const auto& e : eigenvalues)
        if (e.geometric > 1) return true;
    return false;
}

std::vector<FieldValue> SpectrumReport::flat() const {
    if (!split) throw FieldError("spectrum does not split over the field");
    std::vector<FieldValue> out;
    for (const auto& e : eigenvalues)
        for (int i = 0; i < e.algebraic; ++i) out.push_back(e.value);
    return out;
}

namespace {

int geometric_mult(const Matrix& a, const FieldValue& lambda) {
    Matrix shifted = a - Matrix::identity(a.descriptor(), a.rows()).scale(lambda);
    return a.rows() - rank(shifted);
}

void factorize(mpz_class n, std::map<mpz_class, int>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
        out[n]++;
        return;
    }
    for (unsigned long p = 2; p < 100000 && n > 1; p = (p == 2 ? 3 : p + 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[mpz_class(p)]++;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
        if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
            out[n]++;
            return;
        }
    }
    if (n > 1) {
        // Pollard rho on the remaining composite cofactor
        mpz_class d = n;
        gmp_randstate_t st;
        gmp_randinit_default(st);
        while (mpz_probab_prime_p(d.get_mpz_t(), 32) == 0 && d > 1) {
            mpz_class x = 2, y = 2, g = 1, c;
            mpz_urandomm(c.get_mpz_t(), st, d.get_mpz_t());
            c += 1;
            while (g == 1) {
                x = (x * x + c) % d;
                y = (y * y + c) % d;
                y = (y * y + c) % d;
                mpz_class diff = x - y;
                if (diff < 0) diff = -diff;
                if (diff == 0) break;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), d.get_mpz_t());
            }
            if (g > 1 && g < d) {
                factorize(g, out);
                mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
            }
        }
        gmp_randclear(st);
        if (d > 1) factorize(d, out);
    }
}

std::vector<mpz_class> divisors(const mpz_class& n, size_t cap = 200000) {
    std::map<mpz_class, int> f;
    factorize(n, f);
    std::vector<mpz_class> ds = {1};
    for (const auto& [p, e] : f) {
        size_t old = ds.size();
        mpz_class pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= p;
            for (size_t j = 0; j < old; ++j) {
                ds.push_back(ds[j] * pw);
                if (ds.size() > cap)
                    throw FieldError("too many divisor candidates in rational root search");
            }
        }
    }
    return ds;
}

// Synthetic division of f by (x - r); f monic-ish rational coeffs ascending.
// Returns remainder via eval; caller checks zero before calling.
std::vector<mpq_class> deflate(const std::vector<mpq_class>& f, const mpq_class& r) {
    const int deg = static_cast<int>(f.size()) - 1;
    std::vector<mpq_class> q(static_cast<size_t>(deg));
    mpq_class carry = f[static_cast<size_t>(deg)];
    for (int i = deg - 1; i >= 0; --i) {
        q[static_cast<size_t>(i)] = carry;
        carry = f[static_cast<size_t>(i)] + carry * r;
    }
    return q;
}

mpq_class eval_q(const std::vector<mpq_class>& f, const mpq_class& x) {
    mpq_class r = 0;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) r = r * x + f[static_cast<size_t>(i)];
    return r;
}

// Rational roots of a monic polynomial over Q, with multiplicity, plus the
// degree of the rootless cofactor (0 when fully split).
struct RationalRoots {
    std::vector<std::pair<mpq_class, int>> roots;
    int residual_degree = 0;
};

RationalRoots rational_roots(std::vector<mpq_class> f) {
    RationalRoots out;
    // strip roots at zero
    int zmult = 0;
    while (f.size() > 1 && f[0] == 0) {
        f.erase(f.begin());
        ++zmult;
    }
    if (zmult) out.roots.push_back({mpq_class(0), zmult});
    if (f.size() <= 1) return out;
    // clear denominators -> integer poly for candidate generation
    mpz_class l = 1;
    for (const auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class g0 = mpq_class(f[0] * l).get_num();
    mpz_class glead = mpq_class(f.back() * l).get_num();
    std::vector<mpz_class> nums = divisors(g0);
    std::vector<mpz_class> dens = divisors(glead);
    for (const mpz_class& u : nums) {
        for (const mpz_class& w : dens) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t());
            if (g != 1) continue;
            for (int sign = 0; sign < 2; ++sign) {
                mpq_class cand(sign ? -u : u, w);
                cand.canonicalize();
                int mult = 0;
                while (f.size() > 1 && eval_q(f, cand) == 0) {
                    f = deflate(f, cand);
                    ++mult;
                }
                if (mult) out.roots.push_back({cand, mult});
                if (f.size() <= 1) {
                    out.residual_degree = 0;
                    return out;
                }
            }
        }
    }
    out.residual_degree = static_cast<int>(f.size()) - 1;
    return out;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den(), rn, rd;
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        mpq_class r(rn, rd);
        r.canonicalize();
        return r;
    }
    return std::nullopt;
}

// Square root in Q(i), when one exists.
std::optional<GaussQ> gauss_sqrt(const GaussQ& z) {
    if (z.im == 0) {
        if (auto r = rational_sqrt(z.re)) return GaussQ{*r, mpq_class(0)};
        if (auto r = rational_sqrt(mpq_class(-z.re))) return GaussQ{mpq_class(0), *r};
        return std::nullopt;
    }
    auto m = rational_sqrt(z.re * z.re + z.im * z.im);
    if (!m) return std::nullopt;
    auto u2 = mpq_class((z.re + *m) / 2);
    auto u = rational_sqrt(u2);
    if (!u || *u == 0) return std::nullopt;
    mpq_class v = z.im / (2 * (*u));
    return GaussQ{*u, v};
}

SpectrumReport spectrum_exact_rational(const Matrix& a) {
    UniPoly cp = charpoly(a);
    std::vector<mpq_class> f;
    for (const auto& c : cp.coeffs) f.push_back(c.rational());
    RationalRoots rr = rational_roots(std::move(f));
    SpectrumReport rep;
    rep.backend = SpectrumBackend::exact_roots;
    rep.split = (rr.residual_degree == 0);
    for (const auto& [root, mult] : rr.roots) {
        FieldValue lam(a.descriptor(), root);
        rep.eigenvalues.push_back({lam, mult, geometric_mult(a, lam)});
    }
    return rep;
}

SpectrumReport spectrum_exact_gaussian(const Matrix& a) {
    const FieldDescriptor& d = a.descriptor();
    UniPoly cp = charpoly(a);
    bool real_coeffs = true;
    for (const auto& c : cp.coeffs)
        if (c.gauss().im != 0) real_coeffs = false;
    SpectrumReport rep;
    rep.backend = SpectrumBackend::exact_roots;
    std::vector<FieldValue> remaining_factor;  // gaussian coeffs of the undeflated part
    if (real_coeffs) {
        std::vector<mpq_class> f;
        for (const auto& c : cp.coeffs) f.push_back(c.gauss().re);
        RationalRoots rr = rational_roots(f);
        for (const auto& [root, mult] : rr.roots) {
            FieldValue lam(d, GaussQ{root, mpq_class(0)});
            rep.eigenvalues.push_back({lam, mult, geometric_mult(a, lam)});
        }
        if (rr.residual_degree == 0) {
            rep.split = true;
            return rep;
        }
        // deflate the found roots to expose the residual factor
        std::vector<mpq_class> g = f;
        for (const auto& [root, mult] : rr.roots)
            for (int i = 0; i < mult; ++i) g = deflate(g, root);
        if (g.size() == 3) {
            // quadratic over Q, may split in Q(i)
            GaussQ b{g[1] / g[2], mpq_class(0)}, c{g[0] / g[2], mpq_class(0)};
            GaussQ disc{b.re * b.re - 4 * c.re, mpq_class(0)};
            if (auto s = gauss_sqrt(disc)) {
                GaussQ r1{(-b.re + s->re) / 2, s->im / 2};
                GaussQ r2{(-b.re - s->re) / 2, -s->im / 2};
                for (const GaussQ& r : {r1, r2}) {
                    FieldValue lam(d, r);
                    bool merged = false;
                    for (auto& e : rep.eigenvalues)
                        if (e.value == lam) { e.algebraic++; merged = true; }
                    if (!merged) rep.eigenvalues.push_back({lam, 1, geometric_mult(a, lam)});
                }
                rep.split = true;
                return rep;
            }
        }
        rep.split = false;
        return rep;
    }
    // Nonreal coefficients: handle degree <= 2 closed form, otherwise unsupported.
    if (cp.degree() == 1) {
        FieldValue lam = cp.coeff(0).neg();
        rep.eigenvalues.push_back({lam, 1, 1});
        rep.split = true;
        return rep;
    }
    if (cp.degree() == 2) {
        const GaussQ b = cp.coeff(1).gauss(), c = cp.coeff(0).gauss();
        GaussQ disc{b.re * b.re - b.im * b.im - 4 * c.re, 2 * b.re * b.im - 4 * c.im};
        if (auto s = gauss_sqrt(disc)) {
            GaussQ r1{(-b.re + s->re) / 2, (-b.im + s->im) / 2};
            GaussQ r2{(-b.re - s->re) / 2, (-b.im - s->im) / 2};
            for (const GaussQ& r : {r1, r2}) {
                FieldValue lam(d, r);
                bool merged = false;
                for (auto& e : rep.eigenvalues)
                    if (e.value == lam) { e.algebraic++; merged = true; }
                if (!merged) rep.eigenvalues.push_back({lam, 1, geometric_mult(a, lam)});
            }
            rep.split = true;
            return rep;
        }
    }
    rep.split = false;
    return rep;
}

SpectrumReport spectrum_prime_field(const Matrix& a) {
    const FieldDescriptor& d = a.descriptor();
    if (d.modulus > 100000)
        throw FieldError("prime field root search limited to p <= 100000");
    UniPoly cp = charpoly(a);
    std::vector<FieldValue> f = cp.coeffs;
    SpectrumReport rep;
    rep.backend = SpectrumBackend::exact_roots;
    for (std::uint64_t r = 0; r < d.modulus && f.size() > 1; ++r) {
        FieldValue cand(d, r);
        int mult = 0;
        while (f.size() > 1) {
            // evaluate and synthetically divide
            FieldValue val = FieldValue::zero(d);
            for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
                val = val * cand + f[static_cast<size_t>(i)];
            if (!val.is_zero()) break;
            std::vector<FieldValue> q(f.size() - 1, FieldValue::zero(d));
            FieldValue carry = f.back();
            for (int i = static_cast<int>(f.size()) - 2; i >= 0; --i) {
                q[static_cast<size_t>(i)] = carry;
                carry = f[static_cast<size_t>(i)] + carry * cand;
            }
            f = std::move(q);
            ++mult;
        }
        if (mult) rep.eigenvalues.push_back({cand, mult, geometric_mult(a, cand)});
    }
    rep.split = (f.size() <= 1);
    return rep;
}

SpectrumReport spectrum_numeric(const Matrix& a) {
    const int n = a.rows();
    const FieldDescriptor& d = a.descriptor();
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a.at(i, j).complex_value();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    if (solver.info() != Eigen::Success) throw FieldError("numeric eigensolver failed");
    std::vector<std::complex<double>> vals(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<size_t>(i)] = solver.eigenvalues()(i);
    std::sort(vals.begin(), vals.end(), [](auto x, auto y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    SpectrumReport rep;
    rep.backend = SpectrumBackend::numeric;
    rep.split = true;
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (used[static_cast<size_t>(i)]) continue;
        std::complex<double> rep_val = vals[static_cast<size_t>(i)];
        // relative clustering rule: tolerance * max(1, |lambda|)
        double tol = d.tolerance * std::max(1.0, std::abs(rep_val));
        std::vector<int> cluster = {i};
        for (int j = i + 1; j < n; ++j)
            if (!used[static_cast<size_t>(j)] &&
                std::abs(vals[static_cast<size_t>(j)] - rep_val) <= tol)
                cluster.push_back(j);
        std::complex<double> mean = 0;
        for (int j : cluster) {
            mean += vals[static_cast<size_t>(j)];
            used[static_cast<size_t>(j)] = true;
        }
        mean /= static_cast<double>(cluster.size());
        FieldValue lam(d, mean);
        rep.eigenvalues.push_back({lam, static_cast<int>(cluster.size()), geometric_mult(a, lam)});
    }
    return rep;
}

}  // namespace

SpectrumReport spectrum(const Matrix& a, const std::optional<std::vector<FieldValue>>& supplied) {
    if (!a.is_square()) throw FieldError("spectrum requires square matrix");
    const FieldDescriptor& d = a.descriptor();
    if (supplied) {
        if (static_cast<int>(supplied->size()) != a.rows())
            throw FieldError("supplied eigenvalue list has wrong length");
        SpectrumReport rep;
        rep.backend = SpectrumBackend::user_supplied;
        rep.split = true;
        for (const FieldValue& lam : *supplied) {
            if (lam.descriptor() != d) throw FieldError("supplied eigenvalue in wrong field");
            Matrix shifted = a - Matrix::identity(d, a.rows()).scale(lam);
            if (!determinant(shifted).is_zero())
                throw FieldError("supplied value is not an eigenvalue: " + lam.str());
            bool merged = false;
            for (auto& e : rep.eigenvalues)
                if (e.value == lam) { e.algebraic++; merged = true; }
            if (!merged) rep.eigenvalues.push_back({lam, 1, geometric_mult(a, lam)});
        }
        return rep;
    }
    switch (d.kind) {
        case FieldKind::rational: return spectrum_exact_rational(a);
        case FieldKind::gaussian_rational: return spectrum_exact_gaussian(a);
        case FieldKind::prime_field: return spectrum_prime_field(a);
        case FieldKind::complex_float: return spectrum_numeric(a);
    }
    throw FieldError("bad kind");
}

FieldValue vandermonde_det(const std::vector<FieldValue>& xs) {
    if (xs.empty()) return FieldValue(FieldDescriptor::rational(), mpq_class(1));
    const FieldDescriptor& d = xs[0].descriptor();
    FieldValue r = FieldValue::one(d);
    for (size_t s = 0; s < xs.size(); ++s)
        for (size_t t = s + 1; t < xs.size(); ++t) r = r * (xs[t] - xs[s]);
    return r;
}

FieldValue delta_r(const std::vector<FieldValue>& eigs, int r) {
    if (r < 1) throw FieldError("delta_r requires r >= 1");
    const int n = static_cast<int>(eigs.size());
    const FieldDescriptor& d = eigs.empty() ? FieldDescriptor::rational() : eigs[0].descriptor();
    FieldValue result = FieldValue::one(d);
    if (2 * r > n) return result;
    SubsetIndexer idx(n, r);
    auto subset_sum = [&](const std::vector<int>& s) {
        FieldValue acc = FieldValue::zero(d);
        for (int e : s) acc = acc + eigs[static_cast<size_t>(e - 1)];
        return acc;
    };
    for (int si = 0; si < idx.count(); ++si) {
        const auto& s = idx.subset(si);
        for (int ti = 0; ti < idx.count(); ++ti) {
            const auto& t = idx.subset(ti);
            if (s[0] >= t[0]) continue;  // min S < min T
            bool disjoint = true;
            for (int e : s)
                if (std::find(t.begin(), t.end(), e) != t.end()) { disjoint = false; break; }
            if (!disjoint) continue;
            result = result * (subset_sum(t) - subset_sum(s));
        }
    }
    return result;
}

FieldValue discriminant_D(const std::vector<FieldValue>& eigs) {
    FieldValue v = vandermonde_det(eigs);
    return v * v;
}

FieldValue discriminant_Dr(const std::vector<FieldValue>& eigs, int r) {
    if (r >= 2) return delta_r(eigs, r);
    if (r != 1) throw FieldError("discriminant_Dr requires r >= 1");
    const FieldDescriptor& d = eigs.empty() ? FieldDescriptor::rational() : eigs[0].descriptor();
    if (d.kind == FieldKind::prime_field && d.modulus == 2) return vandermonde_det(eigs);
    return discriminant_D(eigs);
}

FieldValue g_factor(const std::vector<FieldValue>& eigs, int n, int k) {
    if (static_cast<int>(eigs.size()) != n) throw FieldError("g_factor eigenvalue count mismatch");
    const FieldDescriptor& d = eigs.empty() ? FieldDescriptor::rational() : eigs[0].descriptor();
    FieldValue g = FieldValue::one(d);
    for (int r = 2; r <= k; ++r) {
        long e = binomial(n, k) * binomial(n - 2 * r, k - r);
        if (e == 0) continue;
        g = g * delta_r(eigs, r).pow(e);
    }
    return g;
}

bool g_factor_trivially_one(int n, int k) {
    for (int r = 2; r <= k && 2 * r <= n; ++r)
        if (binomial(n, k) * binomial(n - 2 * r, k - r) != 0) return false;
    return true;
}

bool kdelta_identity_check(const std::vector<FieldValue>& eigs, int k) {
    const int n = static_cast<int>(eigs.size());
    const FieldDescriptor& d = eigs.empty() ? FieldDescriptor::rational() : eigs[0].descriptor();
    SubsetIndexer idx(n, k);
    std::vector<FieldValue> sums;
    for (int i = 0; i < idx.count(); ++i) {
        FieldValue acc = FieldValue::zero(d);
        for (int e : idx.subset(i)) acc = acc + eigs[static_cast<size_t>(e - 1)];
        sums.push_back(acc);
    }
    FieldValue lhs = vandermonde_det(sums).pow(binomial(n, k));
    FieldValue rhs = vandermonde_det(eigs).pow(binomial(n, k) * binomial(n - 2, k - 1)) *
                     g_factor(eigs, n, k);
    return lhs == rhs;
}

}  // namespace tri
