#pragma once

#include <array>

#include "lenfact/factor.hpp"

namespace lenfact {

/// Closed-form set of lengths of x^n over the ring, O(n):
///   n = 1..5   ->  {1}, {2}, {3}, {2,4}, {3,5}
///   n >= 6     ->  {2 if n even} u {3..n-2} u {n}, minus {n-3} when |R| = 4.
/// Throws BadParameter for n < 1.
LengthSet length_set_formula(const RingHandle& ring, int n);

/// Three nonzero elements a, b, c of m with a + b + c = 0, chosen
/// deterministically: over residue characteristic != 2, a = b = the least
/// nonzero element of m and c = -2a; over characteristic 2, a and b are the
/// first two distinct nonzero elements of m and c = a + b.  Throws
/// Cardinality4 when |R| = 4 (no such triple exists there).
std::array<Elem, 3> card4_triple(const LocalRing& ring);

/// The construction route behind a witness factorization of x^n:
///   all_linear       n copies of x                                (k = n)
///   conjugate_pair   x^pad * (x^l + m)(x^l - m), l = (n-k+2)/2    (k = n mod 2)
///   offset_triple    x^pad * (x^l + m)(x^(l+off) - m)(x^(l+off) - m*x^off + m)
///   zero_sum_triple  x^pad * (x^2+a)(x^2+b)(x^2+c) with a+b+c = 0 (k = n-3)
enum class WitnessKind { all_linear, conjugate_pair, offset_triple, zero_sum_triple };

/// Deterministic plan for a k-factor factorization of x^n; realizing the
/// same recipe always reproduces the same factor list.
struct WitnessRecipe {
    WitnessKind kind = WitnessKind::all_linear;
    int n = 0;
    int k = 0;
    int padding = 0;   // exponent of the power-of-x prefix
    int low = 0;       // degree l of the lowest non-linear factor
    int offset = 0;    // degree gap inside the offset triple
    Elem m_elem = 0;   // designated nonzero ideal element, where used
};

/// Dispatch: all_linear for k = n; the conjugate pair when k and n share a
/// parity; the offset triple for k <= n-4; the zero-sum triple for k = n-3.
/// Throws NotALength for k outside length_set_formula(ring, n).
WitnessRecipe witness_recipe(const RingHandle& ring, int n, int k);

/// The factor multiset a recipe describes, canonically sorted.
std::vector<Poly> realize_recipe(const RingHandle& ring, const WitnessRecipe& recipe);

/// A verified factorization of x^n into exactly k monic irreducibles: the
/// recipe is realized, then the product and per-factor irreducibility are
/// re-checked before returning.
Factorization witness(const RingHandle& ring, int n, int k);

}  // namespace lenfact
