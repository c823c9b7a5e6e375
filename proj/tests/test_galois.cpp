#include <doctest.h>

#include <set>

#include "qkd/galois.hpp"

using namespace qkd;

namespace {

// Independent oracle: schoolbook polynomial multiplication modulo the
// field modulus, coefficient vectors lowest degree first.
std::vector<int> naivePolyMulMod(const std::vector<int>& a,
                                 const std::vector<int>& b,
                                 const std::vector<int>& modulus, int p) {
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    int r = static_cast<int>(modulus.size()) - 1;
    for (int i = static_cast<int>(c.size()) - 1; i >= r; --i) {
        int q = c[i];
        for (int j = 0; j <= r; ++j)
            c[i - r + j] = ((c[i - r + j] - q * modulus[j]) % p + p) % p;
    }
    c.resize(r);
    return c;
}

int indexOf(const std::vector<int>& coeffs, int p) {
    int idx = 0, w = 1;
    for (int c : coeffs) {
        idx += c * w;
        w *= p;
    }
    return idx;
}

}  // namespace

TEST_CASE("addition examples") {
    const FieldSpec& f4 = FieldSpec::of(4);
    CHECK(f4.add(2, 2) == 0);  // w + w = 0 in characteristic 2
    const FieldSpec& f3 = FieldSpec::of(3);
    CHECK(f3.add(2, 2) == 1);
    const FieldSpec& f8 = FieldSpec::of(8);
    CHECK(f8.add(2, 3) == 1);  // x + (x+1) = 1
}

TEST_CASE("multiplication examples against the polynomial oracle") {
    const FieldSpec& f4 = FieldSpec::of(4);
    // w * w under x^2+x+1, via the independent schoolbook route.
    auto prod = naivePolyMulMod({0, 1}, {0, 1}, {1, 1, 1}, 2);
    CHECK(indexOf(prod, 2) == 3);  // w^2 = w + 1
    CHECK(f4.mul(2, 2) == 3);

    const FieldSpec& f5 = FieldSpec::of(5);
    CHECK(f5.mul(3, 4) == 2);

    for (int d : {2, 3, 4, 5, 7, 8, 9}) {
        const FieldSpec& f = FieldSpec::of(d);
        for (int a = 0; a < d; ++a) CHECK(f.mul(a, 1) == a);
    }
}

TEST_CASE("full multiplication table matches the polynomial oracle") {
    for (int d : {4, 8, 9}) {
        const FieldSpec& f = FieldSpec::of(d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                auto prod = naivePolyMulMod(f.coeffs(a), f.coeffs(b), f.modulus(),
                                            f.p());
                CHECK(f.mul(a, b) == indexOf(prod, f.p()));
            }
    }
}

TEST_CASE("inverses") {
    CHECK(FieldSpec::of(3).inv(2) == 2);
    CHECK(FieldSpec::of(7).inv(3) == 5);
    // GF(4): exhaust the multiplication table for the inverse of w.
    const FieldSpec& f4 = FieldSpec::of(4);
    int found = -1;
    for (int b = 1; b < 4; ++b)
        if (f4.mul(2, b) == 1) found = b;
    CHECK(found == 3);  // w^2 = w + 1
    CHECK(f4.inv(2) == found);
    CHECK_THROWS_AS(f4.inv(0), std::domain_error);
    CHECK_THROWS_AS(FieldElement(f4, 0).inverse(), std::domain_error);
}

TEST_CASE("absolute trace") {
    CHECK(FieldSpec::of(3).trace(2) == 2);  // r=1: trace is the identity
    CHECK(FieldSpec::of(4).trace(2) == 1);  // w + w^2 = 1
    CHECK(FieldSpec::of(4).trace(1) == 0);  // 1 + 1 = 0

    // GF(p)-linearity: tr(c a + b) = c tr(a) + tr(b) mod p, exhaustively.
    for (int d : {2, 3, 4, 5, 7, 8, 9}) {
        const FieldSpec& f = FieldSpec::of(d);
        for (int c = 0; c < f.p(); ++c)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    int lhs = f.trace(f.add(f.mul(c, a), b));
                    int rhs = (c * f.trace(a) + f.trace(b)) % f.p();
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("trace form is nondegenerate") {
    for (int d : {2, 3, 4, 5, 7, 8, 9}) {
        const FieldSpec& f = FieldSpec::of(d);
        std::set<std::vector<int>> rows;
        for (int a = 0; a < d; ++a) {
            std::vector<int> row(d);
            for (int b = 0; b < d; ++b) row[b] = f.trace(f.mul(a, b));
            rows.insert(row);
        }
        CHECK(static_cast<int>(rows.size()) == d);
    }
}

TEST_CASE("field axioms hold exhaustively") {
    for (int d : {2, 3, 4, 5, 7, 8, 9}) {
        const FieldSpec& f = FieldSpec::of(d);
        for (int a = 0; a < d; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < d; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < d; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("nonzero elements form a cyclic group of order d-1") {
    for (int d : {4, 8, 9}) {
        const FieldSpec& f = FieldSpec::of(d);
        bool foundGenerator = false;
        for (int g = 1; g < d && !foundGenerator; ++g) {
            std::set<int> powers;
            int x = 1;
            for (int i = 0; i < d - 1; ++i) {
                x = f.mul(x, g);
                powers.insert(x);
            }
            foundGenerator = static_cast<int>(powers.size()) == d - 1;
        }
        CHECK(foundGenerator);
    }
}

TEST_CASE("element enumeration") {
    auto e2 = elements(FieldSpec::of(2));
    REQUIRE(e2.size() == 2);
    CHECK(e2[0].isZero());
    CHECK(e2[1].index() == 1);

    auto e4 = elements(FieldSpec::of(4));
    REQUIRE(e4.size() == 4);
    CHECK(e4[2].coeffs() == std::vector<int>{0, 1});  // w
    CHECK(e4[3].coeffs() == std::vector<int>{1, 1});  // w + 1

    auto e9 = elements(FieldSpec::of(9));
    REQUIRE(e9.size() == 9);
    for (int i = 0; i < 9; ++i) CHECK(e9[i].index() == i);
}

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(FieldSpec::of(6), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(4, 1, {0, 1}), std::invalid_argument);  // p not prime
    // x^2 + 1 is reducible over GF(2): (x+1)^2.
    CHECK_THROWS_AS(FieldSpec(2, 2, {1, 0, 1}), std::invalid_argument);
    // Caller-supplied irreducible modulus beyond the shipped table: GF(16).
    FieldSpec f16(2, 4, {1, 1, 0, 0, 1});
    CHECK(f16.d() == 16);
    CHECK(f16.mul(2, f16.inv(2)) == 1);

    CHECK(isPrimePower(9));
    CHECK(isPrimePower(8));
    CHECK_FALSE(isPrimePower(6));
    CHECK_FALSE(isPrimePower(1));
    CHECK_FALSE(isPrimePower(1000));
}

TEST_CASE("mismatched field specs are rejected") {
    const FieldSpec& f4 = FieldSpec::of(4);
    const FieldSpec& f3 = FieldSpec::of(3);
    FieldElement a(f4, 2), b(f3, 2);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK(a + FieldElement(f4, 2) == FieldElement(f4, 0));
}
