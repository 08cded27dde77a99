#include "lenfact/factor.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace lenfact {

namespace {

bool divides(const Poly& f, const Poly& g) { return divide_by_monic(f, g).second.is_zero(); }

void require_monic_nonconstant(const Poly& f) {
    if (!is_monic(f)) throw DomainError(Errc::not_monic, "expected a monic polynomial");
    if (f.degree() < 1) throw DomainError(Errc::constant_polynomial, "expected a non-constant polynomial");
}

// Calls fn for every monic polynomial of the given degree whose non-leading
// coefficients range over pool, in canonical order (constant coefficient
// cycling fastest).
template <typename Fn>
void for_each_monic(const RingHandle& ring, int degree, const std::vector<Elem>& pool, Fn&& fn) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(degree), 0);
    std::vector<Elem> coeffs(static_cast<std::size_t>(degree) + 1, 0);
    coeffs.back() = ring->one();
    for (;;) {
        for (std::size_t i = 0; i < idx.size(); ++i) coeffs[i] = pool[idx[i]];
        fn(Poly(ring, coeffs));
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == pool.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
}

struct CoeffsHash {
    std::size_t operator()(const std::vector<Elem>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Elem c : v) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

bool is_irreducible(const Poly& f) {
    require_monic_nonconstant(f);
    if (is_ge(f)) return f.degree() == 1 || f.coeff(0) != 0;
    if (f.degree() == 1) return true;
    // A monic divisor of a monic polynomial has a monic cofactor, so a
    // proper factorization exists iff some monic g of degree <= deg f / 2
    // divides f.
    const auto pool = f.ring()->elements(Subset::all);
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        bool found = false;
        for_each_monic(f.ring(), d, pool, [&](const Poly& g) {
            if (!found && divides(f, g)) found = true;
        });
        if (found) return false;
    }
    return true;
}

std::vector<Poly> monic_irreducible_divisors(const Poly& f, DivisorSearch space) {
    require_monic_nonconstant(f);
    const bool ge_mode = space == DivisorSearch::automatic ? is_ge(f) : space == DivisorSearch::ge_only;
    const auto pool = f.ring()->elements(ge_mode ? Subset::max_ideal : Subset::all);
    std::vector<Poly> out;
    for (int d = 1; d <= f.degree(); ++d) {
        for_each_monic(f.ring(), d, pool, [&](const Poly& g) {
            if (ge_mode) {
                // GE candidates are irreducible iff linear or with a
                // nonzero constant term; test that before dividing.
                if (d >= 2 && g.coeff(0) == 0) return;
                if (divides(f, g)) out.push_back(g);
            } else {
                if (divides(f, g) && is_irreducible(g)) out.push_back(g);
            }
        });
    }
    return out;
}

int default_brute_guard(const LocalRing& ring) { return ring.card_m() <= 3 ? 12 : 10; }

namespace {

class BruteForcer {
  public:
    const LengthSet& lengths(const Poly& f) {
        auto it = memo_.find(f.coeffs());
        if (it != memo_.end()) return it->second;
        std::set<int> acc;
        for (const Poly& g : monic_irreducible_divisors(f)) {
            if (g == f) {
                acc.insert(1);
                continue;
            }
            const Poly cofactor = divide_by_monic(f, g).first;
            for (int t : lengths(cofactor)) acc.insert(1 + t);
        }
        return memo_.emplace(f.coeffs(), LengthSet(acc.begin(), acc.end())).first->second;
    }

  private:
    std::unordered_map<std::vector<Elem>, LengthSet, CoeffsHash> memo_;
};

}  // namespace

LengthSet length_set_bruteforce(const Poly& f, int degree_guard) {
    require_monic_nonconstant(f);
    const int guard = degree_guard > 0 ? degree_guard : default_brute_guard(*f.ring());
    if (f.degree() > guard)
        throw DomainError(Errc::limit_exceeded, "degree " + std::to_string(f.degree()) +
                                                    " exceeds brute-force guard " + std::to_string(guard));
    BruteForcer brute;
    return brute.lengths(f);
}

namespace {

class FactorizationEnumerator {
  public:
    explicit FactorizationEnumerator(Poly target) : target_(std::move(target)) {}

    std::vector<Factorization> run() {
        std::vector<Factorization> out;
        std::vector<Poly> chain;
        extend(target_, chain, out);
        return out;
    }

  private:
    // Extends the non-decreasing factor chain; each sorted multiset is
    // produced exactly once.
    void extend(const Poly& remaining, std::vector<Poly>& chain, std::vector<Factorization>& out) {
        for (const Poly& g : divisors(remaining)) {
            if (!chain.empty() && poly_less(g, chain.back())) continue;
            if (g == remaining) {
                std::vector<Poly> factors(chain);
                factors.push_back(g);
                out.push_back(Factorization{target_, std::move(factors)});
                continue;
            }
            chain.push_back(g);
            extend(divide_by_monic(remaining, g).first, chain, out);
            chain.pop_back();
        }
    }

    const std::vector<Poly>& divisors(const Poly& f) {
        auto it = divisor_cache_.find(f.coeffs());
        if (it != divisor_cache_.end()) return it->second;
        return divisor_cache_.emplace(f.coeffs(), monic_irreducible_divisors(f)).first->second;
    }

    Poly target_;
    std::unordered_map<std::vector<Elem>, std::vector<Poly>, CoeffsHash> divisor_cache_;
};

}  // namespace

std::vector<Factorization> all_factorizations(const Poly& f, int degree_guard) {
    require_monic_nonconstant(f);
    const int guard = degree_guard > 0 ? degree_guard : kFactorizationsGuard;
    if (f.degree() > guard)
        throw DomainError(Errc::limit_exceeded, "degree " + std::to_string(f.degree()) +
                                                    " exceeds enumeration guard " + std::to_string(guard));
    return FactorizationEnumerator(f).run();
}

bool verify_factorization(const Factorization& f) {
    if (f.factors.empty()) return false;
    Poly product = Poly::one(f.target.ring());
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        const Poly& g = f.factors[i];
        if (!is_monic(g) || g.degree() < 1 || !is_irreducible(g)) return false;
        if (i > 0 && poly_less(g, f.factors[i - 1])) return false;
        product = product * g;
    }
    return product == f.target;
}

std::pair<Poly, int> megaprop_collapse(const std::vector<Poly>& fs) {
    if (fs.size() < 2) throw DomainError(Errc::bad_parameter, "need at least two factors");
    for (const Poly& f : fs)
        if (!is_ge(f))
            throw DomainError(Errc::not_ge, "all non-leading coefficients must lie in m");
    for (std::size_t i = 1; i < fs.size(); ++i)
        if (fs[i].degree() > fs[i - 1].degree())
            throw DomainError(Errc::bad_ordering, "degrees must be non-increasing");

    const RingHandle& ring = fs[0].ring();
    // tilde(f) strips the leading term; its coefficients all lie in m, so
    // products of tildes vanish and h = x^d1 + x^(d1-d2)*tilde(f2) +
    // tilde(f1) collapses each product step.
    Poly h = fs[0];
    int exponent = 0;
    for (std::size_t i = 1; i < fs.size(); ++i) {
        const int d1 = h.degree(), d2 = fs[i].degree();
        std::vector<Elem> c(static_cast<std::size_t>(d1) + 1, 0);
        c[static_cast<std::size_t>(d1)] = ring->one();
        for (int j = 0; j < d1; ++j) c[static_cast<std::size_t>(j)] = h.coeff(static_cast<std::size_t>(j));
        for (int j = 0; j < d2; ++j) {
            auto& slot = c[static_cast<std::size_t>(d1 - d2 + j)];
            slot = ring->add(slot, fs[i].coeff(static_cast<std::size_t>(j)));
        }
        h = Poly(ring, std::move(c));
        exponent += d2;
    }

    Poly product = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) product = product * fs[i];
    if (h * Poly::x_pow(ring, exponent) != product)
        throw DomainError(Errc::verification_failure, "collapse identity failed");
    return {h, exponent};
}

std::uint64_t count_irreducible_ge2(const RingHandle& ring) {
    const auto m = ring->elements(Subset::max_ideal);
    std::uint64_t count = 0;
    for (Elem c1 : m)
        for (Elem c0 : m)
            if (is_irreducible(Poly(ring, {c0, c1, ring->one()}))) ++count;
    return count;
}

}  // namespace lenfact
