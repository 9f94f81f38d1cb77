#ifndef TRI_FIELD_HPP
#define TRI_FIELD_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace tri {

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FieldKind { rational, gaussian_rational, prime_field, complex_float };

std::string to_string(FieldKind k);
FieldKind field_kind_from_string(std::string_view s);

struct FieldDescriptor {
    FieldKind kind = FieldKind::rational;
    std::uint64_t modulus = 0;   // prime_field only
    double tolerance = 1e-10;    // complex_float only

    bool exact() const { return kind != FieldKind::complex_float; }
    bool operator==(const FieldDescriptor& o) const;
    bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

    static FieldDescriptor rational();
    static FieldDescriptor gaussian_rational();
    static FieldDescriptor prime_field(std::uint64_t p);
    static FieldDescriptor complex_float(double tol = 1e-10);
};

bool is_prime_u64(std::uint64_t n);

// Gaussian rational: two independent lowest-terms rationals.
struct GaussQ {
    mpq_class re, im;
};

class FieldValue {
public:
    FieldValue() : desc_(FieldDescriptor::rational()), v_(mpq_class(0)) {}
    FieldValue(FieldDescriptor d, mpq_class q);
    FieldValue(FieldDescriptor d, GaussQ g);
    FieldValue(FieldDescriptor d, std::uint64_t residue);
    FieldValue(FieldDescriptor d, std::complex<double> z);

    static FieldValue zero(const FieldDescriptor& d);
    static FieldValue one(const FieldDescriptor& d);
    static FieldValue from_int(long v, const FieldDescriptor& d);

    const FieldDescriptor& descriptor() const { return desc_; }

    FieldValue operator+(const FieldValue& o) const;
    FieldValue operator-(const FieldValue& o) const;
    FieldValue operator*(const FieldValue& o) const;
    FieldValue operator/(const FieldValue& o) const;
    FieldValue neg() const;
    FieldValue inv() const;
    FieldValue pow(long e) const;  // e may be negative for nonzero values
    FieldValue conj() const;       // complex conjugate; identity on real kinds

    bool is_zero() const;  // magnitude <= tolerance for complex_float
    bool is_one() const;
    bool operator==(const FieldValue& o) const;
    bool operator!=(const FieldValue& o) const { return !(*this == o); }

    // Accessors; throw FieldError on kind mismatch.
    const mpq_class& rational() const;
    const GaussQ& gauss() const;
    std::uint64_t residue() const;
    std::complex<double> complex_value() const;  // also lifts exact kinds other than prime_field

    double abs() const;  // magnitude (rational/gaussian/complex); prime_field unsupported

    std::string str() const;

private:
    void check_same(const FieldValue& o) const;

    FieldDescriptor desc_;
    std::variant<mpq_class, GaussQ, std::uint64_t, std::complex<double>> v_;
};

FieldValue parse_scalar(std::string_view text, const FieldDescriptor& d);
inline std::string format_scalar(const FieldValue& v) { return v.str(); }

}  // namespace tri

#endif
