#include <doctest.h>

#include <cstdint>
#include <random>

#include "helpers.hpp"

using namespace lenfact;
using testutil::random_monic;
using testutil::random_poly;
using testutil::t_monic_polys;

namespace {

// Integer-convolution oracle for ZP2 products: expand over Z, reduce mod p^2.
Poly zp2_mul_oracle(const RingHandle& ring, const std::vector<std::int64_t>& a,
                    const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    std::vector<Elem> reduced;
    reduced.reserve(c.size());
    for (auto v : c) reduced.push_back(ring->from_int(v));
    return Poly(ring, std::move(reduced));
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("products collapsing to powers of x") {
    const auto z9 = LocalRing::make_zp2(3);
    const Poly a = Poly::from_ints(z9, {3, 0, 1});   // x^2 + 3
    const Poly b = Poly::from_ints(z9, {6, 0, 1});   // x^2 - 3
    CHECK(a * b == Poly::x_pow(z9, 4));
    const Poly c = Poly::from_ints(z9, {3, 0, 0, 1});  // x^3 + 3
    const Poly d = Poly::from_ints(z9, {6, 0, 0, 1});  // x^3 - 3
    CHECK(c * d == Poly::x_pow(z9, 6));

    const auto z4 = LocalRing::make_zp2(2);
    const Poly e = Poly::from_ints(z4, {2, 2, 1});  // x^2 + 2x + 2
    CHECK(e * e == Poly::x_pow(z4, 4));
    CHECK(e * e == zp2_mul_oracle(z4, {2, 2, 1}, {2, 2, 1}));
}

TEST_CASE("multiplication agrees with the integer-convolution oracle") {
    std::mt19937 rng(20240811);
    for (const auto& ring : {LocalRing::make_zp2(2), LocalRing::make_zp2(3), LocalRing::make_zp2(5)}) {
        for (int trial = 0; trial < 200; ++trial) {
            std::uniform_int_distribution<int> deg(0, 5);
            std::vector<std::int64_t> a(static_cast<std::size_t>(deg(rng)) + 1);
            std::vector<std::int64_t> b(static_cast<std::size_t>(deg(rng)) + 1);
            std::uniform_int_distribution<std::int64_t> coef(0, static_cast<std::int64_t>(ring->card()) - 1);
            for (auto& v : a) v = coef(rng);
            for (auto& v : b) v = coef(rng);
            std::vector<Elem> ca, cb;
            for (auto v : a) ca.push_back(ring->from_int(v));
            for (auto v : b) cb.push_back(ring->from_int(v));
            CHECK(Poly(ring, ca) * Poly(ring, cb) == zp2_mul_oracle(ring, a, b));
        }
    }
}

TEST_CASE("operations across different rings are rejected") {
    const Poly a = Poly::x_pow(LocalRing::make_zp2(3), 1);
    const Poly b = Poly::x_pow(LocalRing::make_zp2(2), 1);
    CHECK_THROWS_AS(a + b, DomainError);
    CHECK_THROWS_AS(a * b, DomainError);
    CHECK(a != b);
}

TEST_CASE("degree and order") {
    const auto z9 = LocalRing::make_zp2(3);
    CHECK(order(Poly::x_pow(z9, 6)) == 6);
    CHECK(order(Poly::from_ints(z9, {0, 6, 3})) == 1);  // 3x^2 + 6x
    const Poly prod = Poly::from_ints(z9, {3, 0, 1}) * Poly::from_ints(z9, {3, 1});
    CHECK(order(prod) == 1);  // (x^2+3)(x+3) = (x^2+3x+3) * x
    CHECK(prod.degree() == 3);
    CHECK(Poly::zero(z9).degree() == -1);
    CHECK_THROWS_AS(order(Poly::zero(z9)), DomainError);
}

TEST_CASE("classification") {
    const auto z9 = LocalRing::make_zp2(3);
    const PolyClass unit = classify(Poly::from_ints(z9, {1, 3}));  // 1 + 3x
    CHECK(unit.is_unit);
    CHECK(unit.is_regular);
    CHECK_FALSE(unit.is_monic);

    const PolyClass zd = classify(Poly::from_ints(z9, {6, 0, 3}));  // 3x^2 + 6
    CHECK(zd.is_zero_divisor);
    CHECK_FALSE(zd.is_regular);
    CHECK_FALSE(zd.is_unit);

    const PolyClass ge = classify(Poly::from_ints(z9, {3, 0, 1}));  // x^2 + 3
    CHECK(ge.is_regular);
    CHECK(ge.is_monic);
    CHECK(ge.is_ge);

    const PolyClass zero = classify(Poly::zero(z9));
    CHECK(zero.is_zero_divisor);
    CHECK_FALSE(zero.is_unit);
    CHECK_FALSE(zero.is_monic);
    CHECK_FALSE(zero.is_ge);

    CHECK_FALSE(classify(Poly::one(z9)).is_ge);  // constants are never GE
    CHECK(is_ge(Poly::x_pow(z9, 1)));
}

TEST_CASE("reduction modulo m") {
    const auto z9 = LocalRing::make_zp2(3);
    CHECK(reduce_mod_m(Poly::from_ints(z9, {5, 3, 1})).coeffs == std::vector<FElem>{2, 0, 1});
    CHECK(reduce_mod_m(Poly::from_ints(z9, {3, 0, 1})).coeffs == std::vector<FElem>{0, 0, 1});
    CHECK(reduce_mod_m(Poly::from_ints(z9, {1, 3})).coeffs == std::vector<FElem>{1});
    CHECK(reduce_mod_m(Poly::from_ints(z9, {3})).is_zero());
}

TEST_CASE("division by monic polynomials") {
    const auto z9 = LocalRing::make_zp2(3);
    const Poly g = Poly::from_ints(z9, {3, 0, 1});  // x^2 + 3

    auto [q1, r1] = divide_by_monic(Poly::x_pow(z9, 4), g);
    CHECK(q1 == Poly::from_ints(z9, {6, 0, 1}));
    CHECK(r1.is_zero());
    CHECK(q1 * g == Poly::x_pow(z9, 4));

    auto [q2, r2] = divide_by_monic(Poly::x_pow(z9, 2), g);
    CHECK(q2 == Poly::one(z9));
    CHECK(r2 == Poly::from_ints(z9, {6}));
    CHECK(q2 * g + r2 == Poly::x_pow(z9, 2));

    const Poly f = Poly::from_ints(z9, {1, 2, 3, 4});
    auto [q3, r3] = divide_by_monic(f, Poly::one(z9));
    CHECK(q3 == f);
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(divide_by_monic(f, Poly::from_ints(z9, {1, 2})), DomainError);
    CHECK_THROWS_AS(divide_by_monic(f, Poly::zero(z9)), DomainError);
}

TEST_CASE("division round-trip on random inputs") {
    std::mt19937 rng(7151);
    for (const auto& ring : testutil::standard_rings()) {
        for (int trial = 0; trial < 200; ++trial) {
            const Poly f = random_poly(rng, ring, 6);
            const Poly g = random_monic(rng, ring, 1 + trial % 4);
            auto [q, r] = divide_by_monic(f, g);
            CHECK(q * g + r == f);
            CHECK((r.is_zero() || r.degree() < g.degree()));
        }
    }
}

TEST_CASE("monic associate examples") {
    const auto z9 = LocalRing::make_zp2(3);

    const Poly monic = Poly::from_ints(z9, {5, 2, 1});
    auto [u0, f0] = monic_associate(monic);
    CHECK(u0 == Poly::one(z9));
    CHECK(f0 == monic);

    auto [u1, f1] = monic_associate(Poly::from_ints(z9, {1, 2}));  // 2x + 1
    CHECK(u1 == Poly::from_ints(z9, {2}));
    CHECK(f1 == Poly::from_ints(z9, {5, 1}));  // x + 5
    CHECK(u1 * f1 == Poly::from_ints(z9, {1, 2}));

    auto [u2, f2] = monic_associate(Poly::from_ints(z9, {0, 1, 3}));  // 3x^2 + x
    CHECK(u2 == Poly::from_ints(z9, {1, 3}));  // 3x + 1
    CHECK(f2 == Poly::x_pow(z9, 1));
    CHECK(u2 * f2 == Poly::from_ints(z9, {0, 1, 3}));

    CHECK_THROWS_AS(monic_associate(Poly::from_ints(z9, {6, 0, 3})), DomainError);
    CHECK_THROWS_AS(monic_associate(Poly::zero(z9)), DomainError);
}

TEST_CASE("monic associate round-trip, exhaustive on the four-element rings") {
    for (const auto& ring : {LocalRing::make_zp2(2), LocalRing::make_split(2, 1, 1)}) {
        const auto all = ring->elements(Subset::all);
        // Every polynomial of degree <= 3, via all coefficient vectors.
        for (std::uint64_t code = 0; code < 256; ++code) {
            std::vector<Elem> coeffs(4);
            std::uint64_t rest = code;
            for (auto& c : coeffs) {
                c = all[rest % 4];
                rest /= 4;
            }
            const Poly f(ring, std::move(coeffs));
            if (f.is_zero() || !classify(f).is_regular) continue;
            auto [u, fstar] = monic_associate(f);
            CHECK(u * fstar == f);
            CHECK(classify(u).is_unit);
            CHECK(is_monic(fstar));
            CHECK(fstar.degree() == reduce_mod_m(f).degree());
        }
    }
}

TEST_CASE("monic associate round-trip, randomized on larger rings") {
    std::mt19937 rng(424243);
    for (const auto& ring :
         {LocalRing::make_zp2(3), LocalRing::make_zp2(5), LocalRing::make_split(2, 2, 1)}) {
        int done = 0;
        while (done < 1000) {
            const Poly f = random_poly(rng, ring, 6);
            if (f.is_zero() || !classify(f).is_regular) continue;
            ++done;
            auto [u, fstar] = monic_associate(f);
            CHECK(u * fstar == f);
            CHECK(classify(u).is_unit);
            CHECK(is_monic(fstar));
            CHECK(fstar.degree() == reduce_mod_m(f).degree());
        }
    }
}

TEST_CASE("units are exactly the invertible polynomials (degree <= 3, exhaustive)") {
    for (const auto& ring : {LocalRing::make_zp2(2), LocalRing::make_split(2, 1, 1)}) {
        const auto all = ring->elements(Subset::all);
        std::vector<Poly> polys;
        for (std::uint64_t code = 0; code < 256; ++code) {
            std::vector<Elem> coeffs(4);
            std::uint64_t rest = code;
            for (auto& c : coeffs) {
                c = all[rest % 4];
                rest /= 4;
            }
            polys.emplace_back(ring, std::move(coeffs));
        }
        const Poly one = Poly::one(ring);
        for (const Poly& f : polys) {
            if (f.is_zero()) continue;
            bool invertible = false;
            for (const Poly& g : polys)
                if (f * g == one) {
                    invertible = true;
                    break;
                }
            CHECK(classify(f).is_unit == invertible);
        }
    }
}

TEST_CASE("products of monic polynomials are GE iff both factors are") {
    for (const auto& ring : {LocalRing::make_zp2(2), LocalRing::make_zp2(3)}) {
        std::vector<Poly> monics;
        for (int d = 1; d <= 2; ++d)
            for (const Poly& f : t_monic_polys(ring, d, Subset::all)) monics.push_back(f);
        for (const Poly& f : monics)
            for (const Poly& g : monics) CHECK(is_ge(f * g) == (is_ge(f) && is_ge(g)));
    }
}

TEST_CASE("factors of a regular product are regular") {
    std::mt19937 rng(99);
    const auto z9 = LocalRing::make_zp2(3);
    for (int trial = 0; trial < 500; ++trial) {
        const Poly f = random_poly(rng, z9, 4);
        const Poly g = random_poly(rng, z9, 4);
        if (classify(f * g).is_regular) {
            CHECK(classify(f).is_regular);
            CHECK(classify(g).is_regular);
        }
    }
}

TEST_CASE("canonical rendering") {
    const auto z9 = LocalRing::make_zp2(3);
    CHECK(render(Poly::from_ints(z9, {3, 0, 1})) == "x^2 + 3");
    CHECK(render(Poly::from_ints(z9, {1, 6, 0, 2})) == "2*x^3 + 6*x + 1");
    CHECK(render(Poly::x_pow(z9, 1)) == "x");
    CHECK(render(Poly::zero(z9)) == "0");
    CHECK(render(Poly::one(z9)) == "1");

    const auto r = LocalRing::make_split(2, 1, 1);
    CHECK(render(Poly(r, {1, 0, r->one()})) == "x^2 + [0;1]");
    CHECK(render(Poly::one(r)) == "[1;0]");
}

TEST_CASE("canonical polynomial order") {
    const auto z9 = LocalRing::make_zp2(3);
    const Poly x = Poly::x_pow(z9, 1);
    const Poly x_plus_3 = Poly::from_ints(z9, {3, 1});
    const Poly x2 = Poly::x_pow(z9, 2);
    CHECK(poly_less(x, x_plus_3));
    CHECK(poly_less(x_plus_3, x2));
    CHECK(compare(x, x) == 0);
    // Higher-degree coefficients dominate the tie-break.
    CHECK(poly_less(Poly::from_ints(z9, {6, 0, 0, 1}),     // x^3 + 6
                    Poly::from_ints(z9, {3, 6, 0, 1})));   // x^3 + 6x + 3
}

}  // TEST_SUITE
