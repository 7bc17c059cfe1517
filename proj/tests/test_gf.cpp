// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ag/error.hpp"
#include "ag/gf.hpp"

using ag::gf::Elem;
using ag::gf::Field;

namespace {

Field gf8() { return Field(2, 3, {1, 1, 0, 1}); }
Field gf9() { return Field(3, 2, {1, 0, 1}); }
Field gf16() { return Field(2, 4, {1, 1, 0, 0, 1}); }

Elem e(int v) { return Elem{static_cast<std::uint8_t>(v)}; }

// Exhaustive check of the field axioms against the table-free product.
void check_axioms(const Field& F) {
    const int q = F.size();
    for (int a = 0; a < q; ++a) {
        CHECK(F.add(e(a), ag::gf::kZero) == e(a));
        CHECK(F.mul(e(a), ag::gf::kOne) == e(a));
        CHECK(F.add(e(a), F.neg(e(a))) == ag::gf::kZero);
        if (a) CHECK(F.mul(e(a), F.inv(e(a))) == ag::gf::kOne);
        for (int b = 0; b < q; ++b) {
            REQUIRE(F.mul(e(a), e(b)) == F.mul_reference(e(a), e(b)));
            CHECK(F.add(e(a), e(b)) == F.add(e(b), e(a)));
            CHECK(F.mul(e(a), e(b)) == F.mul(e(b), e(a)));
            CHECK(F.sub(F.add(e(a), e(b)), e(b)) == e(a));
            for (int c = 0; c < q; c += 3) {
                CHECK(F.mul(e(a), F.add(e(b), e(c))) == F.add(F.mul(e(a), e(b)), F.mul(e(a), e(c))));
                CHECK(F.mul(F.mul(e(a), e(b)), e(c)) == F.mul(e(a), F.mul(e(b), e(c))));
            }
        }
    }
}

}  // namespace

TEST_CASE("small products and inverses") {
    const Field F8 = gf8();
    CHECK(F8.mul(e(2), e(4)) == e(3));
    CHECK(F8.inv(e(2)) == e(5));
    CHECK(F8.add(e(3), e(5)) == e(6));

    const Field F9 = gf9();
    CHECK(F9.add(e(1), e(2)) == e(0));
    CHECK(F9.mul(e(3), e(3)) == e(2));
    CHECK(F9.inv(e(2)) == e(2));
    CHECK(F9.neg(e(4)) == e(8));
}

TEST_CASE("field axioms") {
    check_axioms(gf8());
    check_axioms(gf9());
    check_axioms(gf16());
}

TEST_CASE("Frobenius is additive and the multiplicative group has order q - 1") {
    for (const Field& F : {gf8(), gf9(), gf16()}) {
        const int p = F.characteristic(), q = F.size();
        for (int a = 0; a < q; ++a) {
            CHECK(F.pow(e(a), q) == e(a));
            if (a) CHECK(F.pow(e(a), q - 1) == ag::gf::kOne);
            for (int b = 0; b < q; ++b)
                CHECK(F.pow(F.add(e(a), e(b)), p) == F.add(F.pow(e(a), p), F.pow(e(b), p)));
        }
    }
}

TEST_CASE("invalid input") {
    CHECK_THROWS_AS(Field(4, 2, {1, 1, 1}), ag::Error);
    CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), ag::Error);  // x^2 + 1 = (x + 1)^2
    CHECK_THROWS_AS(Field(2, 9, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}), ag::Error);
    const Field F = gf8();
    CHECK_THROWS_AS(F.from_int(8), ag::Error);
    try {
        F.inv(ag::gf::kZero);
        FAIL("inverse of zero");
    } catch (const ag::Error& err) {
        CHECK(err.kind() == ag::ErrorKind::ZeroInversion);
    }
}
