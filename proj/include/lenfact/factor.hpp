#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lenfact/poly.hpp"

namespace lenfact {

/// Sorted ascending sequence of distinct positive integers.
using LengthSet = std::vector<int>;

/// A factorization of a monic target into monic irreducible factors, kept
/// as a canonically sorted multiset (duplicates adjacent).
struct Factorization {
    Poly target;
    std::vector<Poly> factors;
};

/// Recomputes the type invariants: factors sorted, each monic irreducible,
/// product equal to the target.
bool verify_factorization(const Factorization& f);

/// Candidate space for the divisor search.  `automatic` restricts to
/// polynomials with all non-leading coefficients in m whenever the input
/// has that shape itself (every monic divisor of such a polynomial has it
/// too); `all_monic` forces the unrestricted search and exists so the two
/// routes can be cross-checked.
enum class DivisorSearch { automatic, ge_only, all_monic };

/// Irreducibility over R[x] for monic non-constant polynomials.  When f has
/// all non-leading coefficients in m this reduces to a constant-term test;
/// otherwise every candidate monic divisor of degree <= deg f / 2 is tried.
/// Throws NotMonic / Constant.
bool is_irreducible(const Poly& f);

/// All monic irreducible g dividing f, in canonical order (ascending
/// degree, then ascending coefficient encoding).
std::vector<Poly> monic_irreducible_divisors(const Poly& f,
                                             DivisorSearch space = DivisorSearch::automatic);

/// Default degree guard for the brute-force length-set recursion; the
/// candidate space grows as |m|^degree.
int default_brute_guard(const LocalRing& ring);

/// Degree guard for exhaustive factorization enumeration.
inline constexpr int kFactorizationsGuard = 12;

/// Exact set of lengths of f, by memoized recursion over the monic
/// irreducible divisors.  degree_guard <= 0 selects the per-ring default.
/// Throws NotMonic / Constant / LimitExceeded.
LengthSet length_set_bruteforce(const Poly& f, int degree_guard = 0);

/// Every multiset of monic irreducibles with product f, each exactly once,
/// in deterministic order.  degree_guard <= 0 selects kFactorizationsGuard.
std::vector<Factorization> all_factorizations(const Poly& f, int degree_guard = 0);

/// Collapses a product of polynomials f_1 ... f_k (each monic with all
/// non-leading coefficients in m, degrees non-increasing, k >= 2) into
/// h * x^(d_2 + ... + d_k) with deg h = d_1, constructively and without
/// division.  The identity is re-verified by multiplication before
/// returning.  Throws NotGE / BadOrdering / BadParameter.
std::pair<Poly, int> megaprop_collapse(const std::vector<Poly>& fs);

/// Number of irreducible monic degree-2 polynomials with both lower
/// coefficients in m, counted by exhaustive enumeration.  Always equals
/// |m| * (|m| - 1).
std::uint64_t count_irreducible_ge2(const RingHandle& ring);

}  // namespace lenfact
