#include "lenfact/ring.hpp"

#include <numeric>

namespace lenfact {

LocalRing::LocalRing(RingFamily family, std::uint32_t p, Field field, std::uint32_t k)
    : family_(family), p_(p), field_(std::move(field)), k_(k) {
    if (family_ == RingFamily::zp2) {
        card_ = static_cast<std::uint64_t>(p_) * p_;
        card_m_ = p_;
    } else {
        const std::uint64_t q = field_.size();
        std::uint64_t c = q;
        for (std::uint32_t i = 0; i < k_; ++i) {
            c *= q;
            if (c > (1ull << 31))
                throw DomainError(Errc::bad_parameter, "ring too large for this implementation");
        }
        card_ = c;
        card_m_ = c / q;
    }
    // |m| = 2 forces |R| = 4; both families satisfy it by construction.
    if (card_m_ == 2 && card_ != 4)
        throw DomainError(Errc::verification_failure, "|m| = 2 ring must have four elements");
}

RingHandle LocalRing::make_zp2(std::uint32_t p) {
    if (!is_prime(p)) throw DomainError(Errc::not_prime, std::to_string(p) + " is not prime");
    if (p > 46340) throw DomainError(Errc::bad_parameter, "p^2 exceeds the element code range");
    return RingHandle(new LocalRing(RingFamily::zp2, p, Field::prime(p), 1));
}

RingHandle LocalRing::make_split(std::uint32_t p, std::uint32_t e, std::uint32_t k) {
    if (!is_prime(p)) throw DomainError(Errc::not_prime, std::to_string(p) + " is not prime");
    if (e < 1) throw DomainError(Errc::bad_parameter, "e must be >= 1");
    if (k < 1) throw DomainError(Errc::bad_parameter, "k must be >= 1");
    return RingHandle(new LocalRing(RingFamily::split, p, Field::extension(p, e), k));
}

RingHandle make_ring(RingFamily family, std::uint32_t p, std::uint32_t e, std::uint32_t k) {
    return family == RingFamily::zp2 ? LocalRing::make_zp2(p) : LocalRing::make_split(p, e, k);
}

Elem LocalRing::one() const noexcept {
    return family_ == RingFamily::zp2 ? 1 : static_cast<Elem>(card_m_);
}

Elem LocalRing::add(Elem x, Elem y) const {
    if (family_ == RingFamily::zp2)
        return static_cast<Elem>((static_cast<std::uint64_t>(x) + y) % card_);
    const std::uint64_t q = field_.size();
    std::uint64_t r = 0, base = 1;
    for (std::uint32_t i = 0; i <= k_; ++i) {
        r += static_cast<std::uint64_t>(field_.add(static_cast<FElem>(x % q),
                                                   static_cast<FElem>(y % q))) * base;
        x = static_cast<Elem>(x / q);
        y = static_cast<Elem>(y / q);
        base *= q;
    }
    return static_cast<Elem>(r);
}

Elem LocalRing::neg(Elem x) const {
    if (family_ == RingFamily::zp2) return static_cast<Elem>((card_ - x) % card_);
    const std::uint64_t q = field_.size();
    std::uint64_t r = 0, base = 1;
    for (std::uint32_t i = 0; i <= k_; ++i) {
        r += static_cast<std::uint64_t>(field_.neg(static_cast<FElem>(x % q))) * base;
        x = static_cast<Elem>(x / q);
        base *= q;
    }
    return static_cast<Elem>(r);
}

Elem LocalRing::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem LocalRing::mul(Elem x, Elem y) const {
    if (family_ == RingFamily::zp2)
        return static_cast<Elem>(static_cast<std::uint64_t>(x) * y % card_);
    // (a, v)(b, w) = (ab, a*w + b*v); the v*w contribution is zero since
    // m^2 = 0.
    const FElem a = unit_part(x), b = unit_part(y);
    const std::uint64_t q = field_.size();
    std::uint64_t r = static_cast<std::uint64_t>(field_.mul(a, b)) * card_m_;
    std::uint64_t base = 1;
    Elem xv = x, yv = y;
    for (std::uint32_t j = 0; j < k_; ++j) {
        const FElem vj = static_cast<FElem>(xv % q), wj = static_cast<FElem>(yv % q);
        r += static_cast<std::uint64_t>(field_.add(field_.mul(a, wj), field_.mul(b, vj))) * base;
        xv = static_cast<Elem>(xv / q);
        yv = static_cast<Elem>(yv / q);
        base *= q;
    }
    return static_cast<Elem>(r);
}

bool LocalRing::in_max_ideal(Elem x) const {
    return family_ == RingFamily::zp2 ? x % p_ == 0 : x < card_m_;
}

bool LocalRing::is_unit(Elem x) const { return !in_max_ideal(x); }

Elem LocalRing::inverse(Elem x) const {
    if (!is_unit(x)) throw DomainError(Errc::not_a_unit, render_elem(x) + " lies in the maximal ideal");
    if (family_ == RingFamily::zp2) {
        // x^(phi(p^2)) = 1, so x^(p(p-1)-1) is the inverse.
        std::uint64_t n = static_cast<std::uint64_t>(p_) * (p_ - 1) - 1;
        std::uint64_t r = 1, base = x;
        while (n > 0) {
            if (n & 1) r = r * base % card_;
            base = base * base % card_;
            n >>= 1;
        }
        return static_cast<Elem>(r);
    }
    // (a, v)^-1 = (a^-1, -a^-2 * v) since m^2 = 0.
    const FElem ai = field_.inv(unit_part(x));
    const FElem s = field_.neg(field_.mul(ai, ai));
    std::vector<FElem> v = ideal_part(x);
    for (auto& vj : v) vj = field_.mul(s, vj);
    return make_split_elem(ai, v);
}

FElem LocalRing::residue(Elem x) const {
    return family_ == RingFamily::zp2 ? static_cast<FElem>(x % p_) : unit_part(x);
}

Elem LocalRing::from_int(std::int64_t n) const {
    if (family_ == RingFamily::zp2) {
        std::int64_t r = n % static_cast<std::int64_t>(card_);
        if (r < 0) r += static_cast<std::int64_t>(card_);
        return static_cast<Elem>(r);
    }
    return static_cast<Elem>(static_cast<std::uint64_t>(field_.from_int(n)) * card_m_);
}

FElem LocalRing::unit_part(Elem x) const {
    if (family_ != RingFamily::split)
        throw DomainError(Errc::bad_parameter, "unit_part is defined for SPLIT rings only");
    return static_cast<FElem>(x / card_m_);
}

std::vector<FElem> LocalRing::ideal_part(Elem x) const {
    if (family_ != RingFamily::split)
        throw DomainError(Errc::bad_parameter, "ideal_part is defined for SPLIT rings only");
    const std::uint64_t q = field_.size();
    std::vector<FElem> v(k_);
    std::uint64_t rest = x % card_m_;
    for (std::uint32_t j = 0; j < k_; ++j) {
        v[j] = static_cast<FElem>(rest % q);
        rest /= q;
    }
    return v;
}

Elem LocalRing::make_split_elem(FElem unit, const std::vector<FElem>& ideal) const {
    if (family_ != RingFamily::split)
        throw DomainError(Errc::bad_parameter, "make_split_elem is defined for SPLIT rings only");
    if (unit >= field_.size() || ideal.size() != k_)
        throw DomainError(Errc::bad_parameter, "split element components out of range");
    const std::uint64_t q = field_.size();
    std::uint64_t code = unit;
    for (std::uint32_t j = k_; j-- > 0;) {
        if (ideal[j] >= q)
            throw DomainError(Errc::bad_parameter, "split element components out of range");
        code = code * q + ideal[j];
    }
    return static_cast<Elem>(code);
}

std::vector<Elem> LocalRing::elements(Subset subset) const {
    std::vector<Elem> out;
    switch (subset) {
        case Subset::all:
            out.reserve(card_);
            for (std::uint64_t x = 0; x < card_; ++x) out.push_back(static_cast<Elem>(x));
            break;
        case Subset::max_ideal:
            out.reserve(card_m_);
            if (family_ == RingFamily::zp2)
                for (std::uint64_t x = 0; x < card_; x += p_) out.push_back(static_cast<Elem>(x));
            else
                for (std::uint64_t x = 0; x < card_m_; ++x) out.push_back(static_cast<Elem>(x));
            break;
        case Subset::units:
            out.reserve(card_ - card_m_);
            for (std::uint64_t x = 0; x < card_; ++x)
                if (is_unit(static_cast<Elem>(x))) out.push_back(static_cast<Elem>(x));
            break;
    }
    return out;
}

Elem LocalRing::min_nonzero_m() const {
    return family_ == RingFamily::zp2 ? p_ : 1;
}

std::string LocalRing::render_elem(Elem x) const {
    if (family_ == RingFamily::zp2) return std::to_string(x);
    std::string s = "[" + std::to_string(unit_part(x)) + ";";
    const auto v = ideal_part(x);
    for (std::uint32_t j = 0; j < k_; ++j) {
        if (j > 0) s += ",";
        s += std::to_string(v[j]);
    }
    return s + "]";
}

std::string LocalRing::describe() const {
    if (family_ == RingFamily::zp2) return "Z/" + std::to_string(card_);
    const std::string q = std::to_string(field_.size());
    if (k_ == 1) return "F" + q + "[t]/(t^2)";
    return "F" + q + "[t1..t" + std::to_string(k_) + "]/(ti*tj)";
}

bool LocalRing::same_ring(const LocalRing& other) const noexcept {
    if (family_ != other.family_) return false;
    if (family_ == RingFamily::zp2) return p_ == other.p_;
    return p_ == other.p_ && field_.e() == other.field_.e() && k_ == other.k_;
}

}  // namespace lenfact
