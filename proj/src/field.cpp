#include "lenfact/field.hpp"

#include <algorithm>

namespace lenfact {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::not_prime: return "NotPrime";
        case Errc::bad_parameter: return "BadParameter";
        case Errc::not_a_unit: return "NotAUnit";
        case Errc::ring_mismatch: return "RingMismatch";
        case Errc::zero_polynomial: return "ZeroPolynomial";
        case Errc::not_monic: return "NotMonic";
        case Errc::not_regular: return "NotRegular";
        case Errc::constant_polynomial: return "Constant";
        case Errc::limit_exceeded: return "LimitExceeded";
        case Errc::not_a_length: return "NotALength";
        case Errc::not_ge: return "NotGE";
        case Errc::bad_ordering: return "BadOrdering";
        case Errc::cardinality4: return "Cardinality4";
        case Errc::parse_error: return "ParseError";
        case Errc::verification_failure: return "VerificationFailure";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Polynomial helpers over F_p used only for modulus construction and
// validation.  Coefficient vectors are c_0..c_d, not necessarily normalized.
using FpPoly = std::vector<std::uint32_t>;

int fp_degree(const FpPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

// Remainder of f modulo a monic divisor g, over F_p.
FpPoly fp_rem(FpPoly f, const FpPoly& g, std::uint32_t p) {
    const int dg = fp_degree(g);
    for (int i = fp_degree(f); i >= dg && dg >= 0; i = fp_degree(f)) {
        const std::uint64_t lead = f[static_cast<std::size_t>(i)];
        for (int j = 0; j <= dg; ++j) {
            auto& c = f[static_cast<std::size_t>(i - dg + j)];
            const std::uint64_t sub = lead * g[static_cast<std::size_t>(j)] % p;
            c = static_cast<std::uint32_t>((c + p - sub) % p);
        }
    }
    return f;
}

bool fp_is_irreducible(const FpPoly& f, std::uint32_t p) {
    const int d = fp_degree(f);
    if (d < 1) return false;
    if (f[0] == 0) return d == 1;  // divisible by y
    // Trial division by every monic polynomial of degree 1..d/2.
    for (int dd = 1; 2 * dd <= d; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            FpPoly g(static_cast<std::size_t>(dd) + 1, 0);
            std::uint64_t rest = idx;
            for (int i = 0; i < dd; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            g[static_cast<std::size_t>(dd)] = 1;
            if (fp_degree(fp_rem(f, g, p)) < 0) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::uint32_t> find_field_modulus(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) throw DomainError(Errc::not_prime, std::to_string(p) + " is not prime");
    if (e < 2) throw DomainError(Errc::bad_parameter, "extension degree must be >= 2");
    // Ascending constant-first tuple order: c_0 is the most significant key.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        FpPoly f(e + 1, 0);
        std::uint64_t rest = idx;
        for (std::uint32_t i = e; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        f[e] = 1;
        if (fp_is_irreducible(f, p)) return f;
    }
    throw DomainError(Errc::verification_failure, "no irreducible modulus found");  // unreachable
}

Field Field::prime(std::uint32_t p) { return Field(p, 1, {}); }

Field Field::extension(std::uint32_t p, std::uint32_t e) {
    if (e == 1) return prime(p);
    return Field(p, e, find_field_modulus(p, e));
}

Field Field::extension(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
    return Field(p, e, std::move(modulus));
}

Field::Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw DomainError(Errc::not_prime, std::to_string(p_) + " is not prime");
    if (e_ < 1) throw DomainError(Errc::bad_parameter, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        q *= p_;
        if (q > (1ull << 20))
            throw DomainError(Errc::bad_parameter, "field too large for this implementation");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (e_ == 1) {
        if (!modulus_.empty())
            throw DomainError(Errc::bad_parameter, "prime field takes no modulus");
        return;
    }
    if (modulus_.size() != e_ + 1 || modulus_[e_] != 1)
        throw DomainError(Errc::bad_parameter, "modulus must be monic of degree e");
    for (auto c : modulus_)
        if (c >= p_) throw DomainError(Errc::bad_parameter, "modulus coefficient out of range");
    if (!fp_is_irreducible(modulus_, p_))
        throw DomainError(Errc::bad_parameter, "modulus is reducible over F_p");
}

std::vector<std::uint32_t> Field::digits(FElem a) const {
    std::vector<std::uint32_t> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

FElem Field::from_digits(const std::vector<std::uint32_t>& d) const {
    FElem a = 0;
    for (std::uint32_t i = e_; i-- > 0;) a = a * p_ + (i < d.size() ? d[i] % p_ : 0);
    return a;
}

FElem Field::add(FElem a, FElem b) const {
    if (e_ == 1) return (a + b) % p_;
    FElem r = 0, base = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += (a % p_ + b % p_) % p_ * base;
        a /= p_;
        b /= p_;
        base *= p_;
    }
    return r;
}

FElem Field::neg(FElem a) const {
    if (e_ == 1) return (p_ - a) % p_;
    FElem r = 0, base = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += (p_ - a % p_) % p_ * base;
        a /= p_;
        base *= p_;
    }
    return r;
}

FElem Field::sub(FElem a, FElem b) const { return add(a, neg(b)); }

FElem Field::mul(FElem a, FElem b) const {
    if (e_ == 1) return static_cast<FElem>(static_cast<std::uint64_t>(a) * b % p_);
    // Convolution of the digit vectors, then reduction by the monic modulus.
    std::vector<std::uint32_t> da = digits(a), db = digits(b);
    std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    for (std::uint32_t i = 2 * e_ - 1; i-- > e_;) {
        const std::uint64_t lead = prod[i];
        if (lead == 0) continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < e_; ++j) {
            auto& c = prod[i - e_ + j];
            c = static_cast<std::uint32_t>((c + p_ - lead * modulus_[j] % p_) % p_);
        }
    }
    prod.resize(e_);
    return from_digits(prod);
}

FElem Field::pow(FElem a, std::uint64_t n) const {
    FElem r = one(), base = a;
    while (n > 0) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

FElem Field::inv(FElem a) const {
    if (a == 0) throw DomainError(Errc::not_a_unit, "zero has no inverse");
    return pow(a, q_ - 2);
}

FElem Field::from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<FElem>(r);
}

}  // namespace lenfact
