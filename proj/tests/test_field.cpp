#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tri/field.hpp"

using namespace tri;

TEST_CASE("rational parse and arithmetic") {
    const FieldDescriptor d = FieldDescriptor::rational();
    FieldValue x = parse_scalar("-3/4", d);
    FieldValue y = parse_scalar("5", d);
    CHECK(x.str() == "-3/4");
    CHECK((x + y).str() == "17/4");
    CHECK((x * y).str() == "-15/4");
    CHECK((y / x).str() == "-20/3");
    CHECK(x.pow(-2).str() == "16/9");
    CHECK_THROWS_AS(FieldValue::zero(d).inv(), FieldError);
    CHECK_THROWS_AS(parse_scalar("1/0", d), FieldError);
    CHECK_THROWS_AS(parse_scalar("abc", d), FieldError);
}

TEST_CASE("prime field reduction and inverse") {
    const FieldDescriptor d = FieldDescriptor::prime_field(3);
    CHECK(parse_scalar("5", d).residue() == 2);
    const FieldDescriptor d5 = FieldDescriptor::prime_field(5);
    FieldValue two = FieldValue::from_int(2, d5);
    CHECK(two.inv().residue() == 3);
    CHECK(parse_scalar("-1", d5).residue() == 4);
    CHECK(parse_scalar("7/3", d5).residue() == 4);  // 2 * inv(3) = 2*2 = 4
    CHECK_THROWS_AS(FieldDescriptor::prime_field(4), FieldError);
    CHECK_THROWS_AS(FieldDescriptor::prime_field(1), FieldError);
}

TEST_CASE("gaussian rational") {
    const FieldDescriptor d = FieldDescriptor::gaussian_rational();
    FieldValue z = parse_scalar("1/2+3i", d);
    CHECK(z.gauss().re == mpq_class(1, 2));
    CHECK(z.gauss().im == mpq_class(3));
    FieldValue w = parse_scalar("i", d);
    CHECK((w * w).str() == "-1");
    CHECK(z.conj().gauss().im == mpq_class(-3));
    // |z|^2 = z * conj(z)
    FieldValue norm = z * z.conj();
    CHECK(norm.gauss().im == 0);
    CHECK(norm.gauss().re == mpq_class(1, 4) + 9);
    CHECK((z * z.inv()).is_one());
    CHECK(parse_scalar(z.str(), d) == z);
}

TEST_CASE("complex float parse and tolerance") {
    const FieldDescriptor d = FieldDescriptor::complex_float(1e-10);
    FieldValue z = parse_scalar("1.5,-2", d);
    CHECK(z.complex_value() == std::complex<double>(1.5, -2));
    CHECK(parse_scalar(z.str(), d) == z);
    FieldValue tiny(d, std::complex<double>(1e-12, 0));
    CHECK(tiny.is_zero());
    CHECK(doctest::Approx(z.abs()) == 2.5);
}

TEST_CASE("mixed field operations are rejected") {
    FieldValue a = FieldValue::one(FieldDescriptor::rational());
    FieldValue b = FieldValue::one(FieldDescriptor::prime_field(7));
    CHECK_THROWS_AS(a + b, FieldError);
}

TEST_CASE("field kind names round trip") {
    for (FieldKind k : {FieldKind::rational, FieldKind::gaussian_rational,
                        FieldKind::prime_field, FieldKind::complex_float})
        CHECK(field_kind_from_string(to_string(k)) == k);
}
