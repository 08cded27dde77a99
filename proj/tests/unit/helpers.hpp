#pragma once

#include <random>
#include <vector>

#include "lenfact/factor.hpp"
#include "lenfact/lengths.hpp"

// Test-side oracles, independent of the library's divisor search: they use
// only polynomial multiplication and equality.

namespace testutil {

using namespace lenfact;

inline std::vector<RingHandle> standard_rings() {
    return {LocalRing::make_zp2(2), LocalRing::make_split(2, 1, 1), LocalRing::make_zp2(3),
            LocalRing::make_split(3, 1, 1), LocalRing::make_split(2, 2, 1)};
}

/// Every monic polynomial of exactly the given degree whose non-leading
/// coefficients range over the chosen subset.
inline std::vector<Poly> t_monic_polys(const RingHandle& ring, int degree, Subset subset) {
    const auto pool = ring->elements(subset);
    std::vector<Poly> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(degree), 0);
    for (;;) {
        std::vector<Elem> coeffs(static_cast<std::size_t>(degree) + 1, 0);
        for (std::size_t i = 0; i < idx.size(); ++i) coeffs[i] = pool[idx[i]];
        coeffs.back() = ring->one();
        out.emplace_back(ring, std::move(coeffs));
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == pool.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return out;
}

/// True iff some monic h with g*h == f exists, found by multiplying out
/// every candidate (no division involved).
inline bool t_divides(const Poly& f, const Poly& g) {
    if (g == f) return true;
    const int dh = f.degree() - g.degree();
    if (dh < 0) return false;
    for (const Poly& h : t_monic_polys(f.ring(), dh, Subset::all))
        if (g * h == f) return true;
    return false;
}

/// Pair-search irreducibility for monic non-constant f: reducible iff some
/// product of two monic non-constant polynomials equals f.
inline bool t_irreducible(const Poly& f) {
    for (int d = 1; 2 * d <= f.degree(); ++d)
        for (const Poly& g : t_monic_polys(f.ring(), d, Subset::all))
            for (const Poly& h : t_monic_polys(f.ring(), f.degree() - d, Subset::all))
                if (g * h == f) return false;
    return true;
}

/// All monic irreducible divisors of f by the multiply-out oracle.
inline std::vector<Poly> t_irreducible_divisors(const Poly& f) {
    std::vector<Poly> out;
    for (int d = 1; d <= f.degree(); ++d)
        for (const Poly& g : t_monic_polys(f.ring(), d, Subset::all))
            if (t_divides(f, g) && t_irreducible(g)) out.push_back(g);
    return out;
}

/// Every non-decreasing tuple of monic irreducibles (by the pair-search
/// oracle) whose product is f.  Only divisors of f can appear in a tuple,
/// so candidates are prefiltered by the cheap multiply-out check.
inline std::vector<std::vector<Poly>> t_all_factorizations(const Poly& f) {
    std::vector<Poly> candidates;
    for (int d = 1; d <= f.degree(); ++d)
        for (const Poly& g : t_monic_polys(f.ring(), d, Subset::all))
            if (t_divides(f, g) && t_irreducible(g)) candidates.push_back(g);

    std::vector<std::vector<Poly>> out;
    std::vector<Poly> chain;
    auto rec = [&](auto&& self, const Poly& partial, int remaining_degree, std::size_t start) -> void {
        if (remaining_degree == 0) {
            if (partial == f) out.push_back(chain);
            return;
        }
        for (std::size_t i = start; i < candidates.size(); ++i) {
            const Poly& g = candidates[i];
            if (g.degree() > remaining_degree) break;  // candidates are degree-sorted
            chain.push_back(g);
            self(self, partial * g, remaining_degree - g.degree(), i);
            chain.pop_back();
        }
    };
    rec(rec, Poly::one(f.ring()), f.degree(), 0);
    return out;
}

inline Elem random_elem(std::mt19937& rng, const RingHandle& ring, Subset subset) {
    const auto pool = ring->elements(subset);
    return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

inline Poly random_poly(std::mt19937& rng, const RingHandle& ring, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int d = deg(rng);
    std::vector<Elem> coeffs(static_cast<std::size_t>(d) + 1);
    for (auto& c : coeffs) c = random_elem(rng, ring, Subset::all);
    return Poly(ring, std::move(coeffs));
}

inline Poly random_monic(std::mt19937& rng, const RingHandle& ring, int degree) {
    std::vector<Elem> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs) c = random_elem(rng, ring, Subset::all);
    coeffs.back() = ring->one();
    return Poly(ring, std::move(coeffs));
}

inline Poly random_ge(std::mt19937& rng, const RingHandle& ring, int degree) {
    std::vector<Elem> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs) c = random_elem(rng, ring, Subset::max_ideal);
    coeffs.back() = ring->one();
    return Poly(ring, std::move(coeffs));
}

}  // namespace testutil
