#include "tri/field.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace tri {

std::string to_string(FieldKind k) {
    switch (k) {
        case FieldKind::rational: return "rational";
        case FieldKind::gaussian_rational: return "gaussian_rational";
        case FieldKind::prime_field: return "prime_field";
        case FieldKind::complex_float: return "complex_float";
    }
    return "?";
}

FieldKind field_kind_from_string(std::string_view s) {
    if (s == "rational") return FieldKind::rational;
    if (s == "gaussian_rational") return FieldKind::gaussian_rational;
    if (s == "prime_field") return FieldKind::prime_field;
    if (s == "complex_float") return FieldKind::complex_float;
    throw FieldError("unknown field kind: " + std::string(s));
}

bool FieldDescriptor::operator==(const FieldDescriptor& o) const {
    if (kind != o.kind) return false;
    if (kind == FieldKind::prime_field) return modulus == o.modulus;
    if (kind == FieldKind::complex_float) return tolerance == o.tolerance;
    return true;
}

FieldDescriptor FieldDescriptor::rational() { return {FieldKind::rational, 0, 0.0}; }
FieldDescriptor FieldDescriptor::gaussian_rational() { return {FieldKind::gaussian_rational, 0, 0.0}; }

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) throw FieldError("modulus is not prime: " + std::to_string(p));
    return {FieldKind::prime_field, p, 0.0};
}

FieldDescriptor FieldDescriptor::complex_float(double tol) {
    if (tol < 0) throw FieldError("tolerance must be nonnegative");
    return {FieldKind::complex_float, 0, tol};
}

bool is_prime_u64(std::uint64_t n) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

mpq_class canon(mpq_class q) {
    q.canonicalize();
    return q;
}

std::string format_q(const mpq_class& q) { return q.get_str(); }

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

bool is_decimal_char(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == 'E' ||
           c == '+' || c == '-';
}

}  // namespace

FieldValue::FieldValue(FieldDescriptor d, mpq_class q) : desc_(d), v_(canon(std::move(q))) {
    if (d.kind != FieldKind::rational) throw FieldError("payload/kind mismatch");
}

FieldValue::FieldValue(FieldDescriptor d, GaussQ g) : desc_(d) {
    if (d.kind != FieldKind::gaussian_rational) throw FieldError("payload/kind mismatch");
    g.re.canonicalize();
    g.im.canonicalize();
    v_ = std::move(g);
}

FieldValue::FieldValue(FieldDescriptor d, std::uint64_t residue) : desc_(d) {
    if (d.kind != FieldKind::prime_field) throw FieldError("payload/kind mismatch");
    v_ = residue % d.modulus;
}

FieldValue::FieldValue(FieldDescriptor d, std::complex<double> z) : desc_(d), v_(z) {
    if (d.kind != FieldKind::complex_float) throw FieldError("payload/kind mismatch");
}

FieldValue FieldValue::zero(const FieldDescriptor& d) { return from_int(0, d); }
FieldValue FieldValue::one(const FieldDescriptor& d) { return from_int(1, d); }

FieldValue FieldValue::from_int(long v, const FieldDescriptor& d) {
    switch (d.kind) {
        case FieldKind::rational: return FieldValue(d, mpq_class(v));
        case FieldKind::gaussian_rational: return FieldValue(d, GaussQ{mpq_class(v), mpq_class(0)});
        case FieldKind::prime_field: {
            long long m = static_cast<long long>(d.modulus);
            long long r = static_cast<long long>(v) % m;
            if (r < 0) r += m;
            return FieldValue(d, static_cast<std::uint64_t>(r));
        }
        case FieldKind::complex_float:
            return FieldValue(d, std::complex<double>(static_cast<double>(v), 0.0));
    }
    throw FieldError("bad kind");
}

void FieldValue::check_same(const FieldValue& o) const {
    if (desc_ != o.desc_) throw FieldError("field descriptor mismatch");
}

FieldValue FieldValue::operator+(const FieldValue& o) const {
    check_same(o);
    switch (desc_.kind) {
        case FieldKind::rational:
            return FieldValue(desc_, rational() + o.rational());
        case FieldKind::gaussian_rational:
            return FieldValue(desc_, GaussQ{gauss().re + o.gauss().re, gauss().im + o.gauss().im});
        case FieldKind::prime_field: {
            std::uint64_t s = residue() + o.residue();
            if (s >= desc_.modulus) s -= desc_.modulus;
            return FieldValue(desc_, s);
        }
        case FieldKind::complex_float:
            return FieldValue(desc_, complex_value() + o.complex_value());
    }
    throw FieldError("bad kind");
}

FieldValue FieldValue::operator-(const FieldValue& o) const { return *this + o.neg(); }

FieldValue FieldValue::operator*(const FieldValue& o) const {
    check_same(o);
    switch (desc_.kind) {
        case FieldKind::rational:
            return FieldValue(desc_, rational() * o.rational());
        case FieldKind::gaussian_rational: {
            const GaussQ &a = gauss(), &b = o.gauss();
            return FieldValue(desc_, GaussQ{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re});
        }
        case FieldKind::prime_field:
            return FieldValue(desc_, mulmod(residue(), o.residue(), desc_.modulus));
        case FieldKind::complex_float:
            return FieldValue(desc_, complex_value() * o.complex_value());
    }
    throw FieldError("bad kind");
}

FieldValue FieldValue::operator/(const FieldValue& o) const { return *this * o.inv(); }

FieldValue FieldValue::neg() const {
    switch (desc_.kind) {
        case FieldKind::rational: return FieldValue(desc_, mpq_class(-rational()));
        case FieldKind::gaussian_rational:
            return FieldValue(desc_, GaussQ{-gauss().re, -gauss().im});
        case FieldKind::prime_field: {
            std::uint64_t r = residue();
            return FieldValue(desc_, r == 0 ? 0 : desc_.modulus - r);
        }
        case FieldKind::complex_float: return FieldValue(desc_, -complex_value());
    }
    throw FieldError("bad kind");
}

FieldValue FieldValue::inv() const {
    if (is_zero()) throw FieldError("division by zero");
    switch (desc_.kind) {
        case FieldKind::rational: return FieldValue(desc_, mpq_class(1 / rational()));
        case FieldKind::gaussian_rational: {
            const GaussQ& g = gauss();
            mpq_class n = g.re * g.re + g.im * g.im;
            return FieldValue(desc_, GaussQ{g.re / n, -g.im / n});
        }
        case FieldKind::prime_field:
            return FieldValue(desc_, powmod(residue(), desc_.modulus - 2, desc_.modulus));
        case FieldKind::complex_float:
            return FieldValue(desc_, 1.0 / complex_value());
    }
    throw FieldError("bad kind");
}

FieldValue FieldValue::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    FieldValue r = one(desc_);
    FieldValue b = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

FieldValue FieldValue::conj() const {
    switch (desc_.kind) {
        case FieldKind::gaussian_rational:
            return FieldValue(desc_, GaussQ{gauss().re, -gauss().im});
        case FieldKind::complex_float:
            return FieldValue(desc_, std::conj(complex_value()));
        default:
            return *this;
    }
}

bool FieldValue::is_zero() const {
    switch (desc_.kind) {
        case FieldKind::rational: return rational() == 0;
        case FieldKind::gaussian_rational: return gauss().re == 0 && gauss().im == 0;
        case FieldKind::prime_field: return residue() == 0;
        case FieldKind::complex_float: return std::abs(complex_value()) <= desc_.tolerance;
    }
    throw FieldError("bad kind");
}

bool FieldValue::is_one() const { return *this == one(desc_); }

bool FieldValue::operator==(const FieldValue& o) const {
    if (desc_ != o.desc_) return false;
    if (desc_.kind == FieldKind::complex_float) return (*this - o).is_zero();
    if (desc_.kind == FieldKind::gaussian_rational)
        return gauss().re == o.gauss().re && gauss().im == o.gauss().im;
    if (desc_.kind == FieldKind::prime_field) return residue() == o.residue();
    return rational() == o.rational();
}

const mpq_class& FieldValue::rational() const {
    if (auto* p = std::get_if<mpq_class>(&v_)) return *p;
    throw FieldError("not a rational value");
}

const GaussQ& FieldValue::gauss() const {
    if (auto* p = std::get_if<GaussQ>(&v_)) return *p;
    throw FieldError("not a gaussian rational value");
}

std::uint64_t FieldValue::residue() const {
    if (auto* p = std::get_if<std::uint64_t>(&v_)) return *p;
    throw FieldError("not a prime field value");
}

std::complex<double> FieldValue::complex_value() const {
    switch (desc_.kind) {
        case FieldKind::complex_float: return std::get<std::complex<double>>(v_);
        case FieldKind::rational: return {rational().get_d(), 0.0};
        case FieldKind::gaussian_rational: return {gauss().re.get_d(), gauss().im.get_d()};
        case FieldKind::prime_field: throw FieldError("prime field has no complex embedding");
    }
    throw FieldError("bad kind");
}

double FieldValue::abs() const { return std::abs(complex_value()); }

std::string FieldValue::str() const {
    switch (desc_.kind) {
        case FieldKind::rational: return format_q(rational());
        case FieldKind::gaussian_rational: {
            const GaussQ& g = gauss();
            if (g.im == 0) return format_q(g.re);
            if (g.re == 0) return format_q(g.im) + "i";
            std::string s = format_q(g.re);
            if (g.im > 0) s += "+";
            return s + format_q(g.im) + "i";
        }
        case FieldKind::prime_field: return std::to_string(residue());
        case FieldKind::complex_float: {
            std::complex<double> z = complex_value();
            return format_double(z.real()) + "," + format_double(z.imag());
        }
    }
    throw FieldError("bad kind");
}

namespace {

mpq_class parse_rational_text(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);  // gmp rejects a leading plus
    if (s.empty()) throw FieldError("empty scalar");
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            mpz_class n(std::string(s), 10);
            return mpq_class(n);
        }
        mpz_class num(std::string(s.substr(0, slash)), 10);
        mpz_class den(std::string(s.substr(slash + 1)), 10);
        if (den == 0) throw FieldError("denominator zero");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw FieldError("malformed rational: " + std::string(s));
    }
}

// Splits "a", "bi", "a+bi", "a-bi" into real/imag rational parts.
GaussQ parse_gaussian_text(std::string_view s) {
    if (s.empty()) throw FieldError("empty scalar");
    size_t split = std::string_view::npos;
    for (size_t i = 1; i < s.size(); ++i) {
        if (s[i] == '+' || s[i] == '-') split = i;  // signs never occur mid-rational
    }
    if (split != std::string_view::npos) {
        std::string_view rest = s.substr(split);
        if (rest.back() != 'i') throw FieldError("malformed gaussian rational: " + std::string(s));
        mpq_class re = parse_rational_text(s.substr(0, split));
        std::string_view imtxt = rest.substr(0, rest.size() - 1);
        mpq_class im = (imtxt == "+" || imtxt == "-")
                           ? mpq_class(imtxt == "-" ? -1 : 1)
                           : parse_rational_text(imtxt);
        return {re, im};
    }
    if (s.back() == 'i') {
        std::string_view imtxt = s.substr(0, s.size() - 1);
        mpq_class im = (imtxt.empty() || imtxt == "+") ? mpq_class(1)
                       : imtxt == "-"                  ? mpq_class(-1)
                                                       : parse_rational_text(imtxt);
        return {mpq_class(0), im};
    }
    return {parse_rational_text(s), mpq_class(0)};
}

double parse_double_text(std::string_view s) {
    std::string t(s);
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || t.empty()) throw FieldError("malformed number: " + t);
    return v;
}

// Accepts "re,im", "a+bi", "bi", or a plain decimal.
std::complex<double> parse_complex_text(std::string_view s) {
    auto comma = s.find(',');
    if (comma != std::string_view::npos)
        return {parse_double_text(s.substr(0, comma)), parse_double_text(s.substr(comma + 1))};
    if (s.empty()) throw FieldError("empty scalar");
    if (s.back() == 'i') {
        size_t split = std::string_view::npos;
        for (size_t i = 1; i + 1 < s.size(); ++i) {
            if ((s[i] == '+' || s[i] == '-') && is_decimal_char(s[i - 1]) &&
                s[i - 1] != 'e' && s[i - 1] != 'E')
                split = i;
        }
        if (split == std::string_view::npos) {
            std::string_view imtxt = s.substr(0, s.size() - 1);
            double im = imtxt.empty() ? 1.0 : imtxt == "-" ? -1.0 : parse_double_text(imtxt);
            return {0.0, im};
        }
        std::string_view imtxt = s.substr(split, s.size() - split - 1);
        double im = (imtxt == "+") ? 1.0 : (imtxt == "-") ? -1.0 : parse_double_text(imtxt);
        return {parse_double_text(s.substr(0, split)), im};
    }
    return {parse_double_text(s), 0.0};
}

}  // namespace

FieldValue parse_scalar(std::string_view text, const FieldDescriptor& d) {
    switch (d.kind) {
        case FieldKind::rational: return FieldValue(d, parse_rational_text(text));
        case FieldKind::gaussian_rational: return FieldValue(d, parse_gaussian_text(text));
        case FieldKind::prime_field: {
            mpq_class q = parse_rational_text(text);
            if (q.get_den() != 1) {
                // a/b means a * b^{-1} mod p, provided b is invertible
                mpz_class den = q.get_den();
                if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(d.modulus)))
                    throw FieldError("residue not reducible mod p");
            }
            mpz_class p(std::to_string(d.modulus));
            mpz_class num = q.get_num() % p;
            if (num < 0) num += p;
            FieldValue v(d, static_cast<std::uint64_t>(num.get_ui()));
            if (q.get_den() != 1) {
                mpz_class den = q.get_den() % p;
                FieldValue dv(d, static_cast<std::uint64_t>(den.get_ui()));
                v = v / dv;
            }
            return v;
        }
        case FieldKind::complex_float: return FieldValue(d, parse_complex_text(text));
    }
    throw FieldError("bad kind");
}

}  // namespace tri
