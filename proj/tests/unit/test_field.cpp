#include <doctest.h>

#include <cstdint>
#include <vector>

#include "lenfact/field.hpp"

using namespace lenfact;

namespace {

// Independent root-existence check; a monic quadratic or cubic over F_p is
// irreducible iff it has no root.
bool has_root(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
    for (std::uint32_t r = 0; r < p; ++r) {
        std::uint64_t v = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = (v * r + *it) % p;
        if (v == 0) return true;
    }
    return false;
}

// First rootless monic polynomial of degree e over F_p in ascending
// constant-first tuple order.
std::vector<std::uint32_t> first_rootless(std::uint32_t p, std::uint32_t e) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint32_t> f(e + 1, 0);
        std::uint64_t rest = idx;
        for (std::uint32_t i = e; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        f[e] = 1;
        if (!has_root(f, p)) return f;
    }
    return {};
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("primality check") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(46337));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("canonical modulus for F_4 is y^2 + y + 1") {
    const auto m = find_field_modulus(2, 2);
    CHECK(m == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(m == first_rootless(2, 2));
}

TEST_CASE("canonical modulus for F_9 is y^2 + 1") {
    const auto m = find_field_modulus(3, 2);
    CHECK(m == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(m == first_rootless(3, 2));
}

TEST_CASE("modulus construction rejects bad parameters") {
    CHECK_THROWS_AS(find_field_modulus(5, 1), DomainError);
    CHECK_THROWS_AS(find_field_modulus(4, 2), DomainError);
    CHECK_THROWS_AS(Field::prime(6), DomainError);
    CHECK_THROWS_AS(Field::extension(2, 2, {0, 1, 1}), DomainError);  // y^2 + y is reducible
}

TEST_CASE("F_4 multiplication") {
    const Field f4 = Field::extension(2, 2);
    const FElem w = 2;  // digits (0, 1), the adjoined root
    CHECK(f4.mul(w, w) == 3);  // w^2 = w + 1
    CHECK(f4.mul(w, 3) == 1);  // w * (w + 1) = 1
    CHECK(f4.inv(w) == 3);
    CHECK(f4.add(w, w) == 0);  // characteristic 2
}

TEST_CASE("F_9 arithmetic with modulus y^2 + 1") {
    const Field f9 = Field::extension(3, 2);
    const FElem y = 3;  // digits (0, 1)
    CHECK(f9.mul(y, y) == 2);  // y^2 = -1
    CHECK(f9.size() == 9);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (const Field& f : {Field::prime(2), Field::prime(3), Field::prime(5),
                           Field::extension(2, 2), Field::extension(3, 2)}) {
        const std::uint32_t q = f.size();
        for (FElem a = 0; a < q; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.mul(a, f.one()) == a);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (FElem b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (FElem c = 0; c < q; ++c) {
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                }
            }
        }
        // Characteristic p: the p-fold sum of one vanishes.
        FElem s = 0;
        for (std::uint32_t i = 0; i < f.p(); ++i) s = f.add(s, f.one());
        CHECK(s == 0);
        CHECK_THROWS_AS(f.inv(0), DomainError);
    }
}

TEST_CASE("integer images land in the prime subfield") {
    const Field f4 = Field::extension(2, 2);
    CHECK(f4.from_int(0) == 0);
    CHECK(f4.from_int(3) == 1);
    CHECK(f4.from_int(-1) == 1);
    const Field f3 = Field::prime(3);
    CHECK(f3.from_int(-1) == 2);
    CHECK(f3.from_int(7) == 1);
}

TEST_CASE("digit round-trip") {
    const Field f9 = Field::extension(3, 2);
    for (FElem a = 0; a < 9; ++a) CHECK(f9.from_digits(f9.digits(a)) == a);
}

}  // TEST_SUITE
