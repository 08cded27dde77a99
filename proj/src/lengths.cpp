#include "lenfact/lengths.hpp"

#include <algorithm>

namespace lenfact {

LengthSet length_set_formula(const RingHandle& ring, int n) {
    if (n < 1) throw DomainError(Errc::bad_parameter, "n must be >= 1");
    switch (n) {
        case 1: return {1};
        case 2: return {2};
        case 3: return {3};
        case 4: return {2, 4};
        case 5: return {3, 5};
        default: break;
    }
    LengthSet out;
    if (n % 2 == 0) out.push_back(2);
    for (int k = 3; k <= n - 2; ++k)
        if (!(ring->card() == 4 && k == n - 3)) out.push_back(k);
    out.push_back(n);
    return out;
}

std::array<Elem, 3> card4_triple(const LocalRing& ring) {
    if (ring.card() == 4)
        throw DomainError(Errc::cardinality4, "no zero-sum triple of nonzero ideal elements exists");
    if (ring.p() != 2) {
        const Elem a = ring.min_nonzero_m();
        return {a, a, ring.neg(ring.add(a, a))};
    }
    // Residue characteristic 2: |m| > 2 here, so two distinct nonzero
    // elements of m exist and their sum is nonzero.
    const auto m = ring.elements(Subset::max_ideal);
    return {m[1], m[2], ring.add(m[1], m[2])};
}

WitnessRecipe witness_recipe(const RingHandle& ring, int n, int k) {
    const LengthSet valid = length_set_formula(ring, n);
    if (!std::binary_search(valid.begin(), valid.end(), k))
        throw DomainError(Errc::not_a_length,
                          "k=" + std::to_string(k) + " is not a length of x^" + std::to_string(n) +
                              " over " + ring->describe());

    WitnessRecipe r;
    r.n = n;
    r.k = k;
    r.m_elem = ring->min_nonzero_m();
    if (k == n) {
        r.kind = WitnessKind::all_linear;
        r.padding = n;
    } else if ((n - k) % 2 == 0) {
        // k < n of the same parity, so k <= n-2 and the pair degree is >= 2;
        // both pair factors then have a nonzero constant term.
        r.kind = WitnessKind::conjugate_pair;
        r.padding = k - 2;
        r.low = (n - k + 2) / 2;
    } else if (k <= n - 4) {
        // The padded triple multiplies out to x^(n-k+3), with the offset
        // chosen so the lowest degree stays a positive integer.
        const int np = n - k + 3;
        r.kind = WitnessKind::offset_triple;
        r.padding = k - 3;
        switch (np % 3) {
            case 2: r.low = (np - 2) / 3, r.offset = 1; break;
            case 1: r.low = (np - 4) / 3, r.offset = 2; break;
            default: r.low = (np - 6) / 3, r.offset = 3; break;
        }
    } else {  // k == n-3, in the length set only when |R| > 4
        r.kind = WitnessKind::zero_sum_triple;
        r.padding = n - 6;
    }
    return r;
}

namespace {

// x^d + c
Poly x_pow_plus(const RingHandle& ring, int d, Elem c) {
    std::vector<Elem> coeffs(static_cast<std::size_t>(d) + 1, 0);
    coeffs[0] = c;
    coeffs[static_cast<std::size_t>(d)] = ring->one();
    return Poly(ring, std::move(coeffs));
}

// x^d + c_mid * x^mid + c
Poly x_pow_plus_mid(const RingHandle& ring, int d, int mid, Elem c_mid, Elem c) {
    std::vector<Elem> coeffs(static_cast<std::size_t>(d) + 1, 0);
    coeffs[0] = c;
    coeffs[static_cast<std::size_t>(mid)] = c_mid;
    coeffs[static_cast<std::size_t>(d)] = ring->one();
    return Poly(ring, std::move(coeffs));
}

}  // namespace

std::vector<Poly> realize_recipe(const RingHandle& ring, const WitnessRecipe& r) {
    std::vector<Poly> factors(static_cast<std::size_t>(r.padding), Poly::x_pow(ring, 1));
    switch (r.kind) {
        case WitnessKind::all_linear:
            break;
        case WitnessKind::conjugate_pair:
            factors.push_back(x_pow_plus(ring, r.low, r.m_elem));
            factors.push_back(x_pow_plus(ring, r.low, ring->neg(r.m_elem)));
            break;
        case WitnessKind::offset_triple: {
            const Elem neg_m = ring->neg(r.m_elem);
            factors.push_back(x_pow_plus(ring, r.low, r.m_elem));
            factors.push_back(x_pow_plus(ring, r.low + r.offset, neg_m));
            factors.push_back(x_pow_plus_mid(ring, r.low + r.offset, r.offset, neg_m, r.m_elem));
            break;
        }
        case WitnessKind::zero_sum_triple: {
            const auto [a, b, c] = card4_triple(*ring);
            factors.push_back(x_pow_plus(ring, 2, a));
            factors.push_back(x_pow_plus(ring, 2, b));
            factors.push_back(x_pow_plus(ring, 2, c));
            break;
        }
    }
    std::sort(factors.begin(), factors.end(), poly_less);
    return factors;
}

Factorization witness(const RingHandle& ring, int n, int k) {
    const WitnessRecipe recipe = witness_recipe(ring, n, k);
    Factorization result{Poly::x_pow(ring, n), realize_recipe(ring, recipe)};
    if (static_cast<int>(result.factors.size()) != k || !verify_factorization(result))
        throw DomainError(Errc::verification_failure, "constructed witness failed its check");
    return result;
}

}  // namespace lenfact
