#include "lenfact/poly.hpp"

#include <algorithm>

namespace lenfact {

namespace {

void normalize(std::vector<Elem>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

void require_same_ring(const Poly& a, const Poly& b) {
    if (!a.ring()->same_ring(*b.ring()))
        throw DomainError(Errc::ring_mismatch, a.ring()->describe() + " vs " + b.ring()->describe());
}

}  // namespace

Poly::Poly(RingHandle ring, std::vector<Elem> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    normalize(coeffs_);
}

Poly Poly::one(RingHandle ring) {
    const Elem e = ring->one();
    return Poly(std::move(ring), {e});
}

Poly Poly::x_pow(RingHandle ring, int d) {
    if (d < 0) throw DomainError(Errc::bad_parameter, "negative exponent");
    std::vector<Elem> c(static_cast<std::size_t>(d) + 1, 0);
    c.back() = ring->one();
    return Poly(std::move(ring), std::move(c));
}

Poly Poly::from_ints(RingHandle ring, std::initializer_list<std::int64_t> coeffs) {
    std::vector<Elem> c;
    c.reserve(coeffs.size());
    for (auto n : coeffs) c.push_back(ring->from_int(n));
    return Poly(std::move(ring), std::move(c));
}

Elem Poly::leading() const {
    if (is_zero()) throw DomainError(Errc::zero_polynomial, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& other) const {
    require_same_ring(*this, other);
    std::vector<Elem> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring_->add(coeff(i), other.coeff(i));
    return Poly(ring_, std::move(c));
}

Poly Poly::operator-(const Poly& other) const {
    require_same_ring(*this, other);
    std::vector<Elem> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring_->sub(coeff(i), other.coeff(i));
    return Poly(ring_, std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Elem> c(coeffs_);
    for (auto& x : c) x = ring_->neg(x);
    return Poly(ring_, std::move(c));
}

Poly Poly::operator*(const Poly& other) const {
    require_same_ring(*this, other);
    if (is_zero() || other.is_zero()) return zero(ring_);
    std::vector<Elem> c(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            c[i + j] = ring_->add(c[i + j], ring_->mul(coeffs_[i], other.coeffs_[j]));
    }
    return Poly(ring_, std::move(c));
}

Poly Poly::scaled(Elem c) const {
    std::vector<Elem> out(coeffs_);
    for (auto& x : out) x = ring_->mul(c, x);
    return Poly(ring_, std::move(out));
}

bool Poly::operator==(const Poly& other) const {
    return ring_->same_ring(*other.ring_) && coeffs_ == other.coeffs_;
}

PolyClass classify(const Poly& f) {
    const auto& ring = *f.ring();
    PolyClass c;
    if (f.is_zero()) {
        c.is_zero_divisor = true;
        return c;
    }
    bool all_in_m = true;
    bool tail_in_m = true;  // coefficients above the constant term
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const bool in_m = ring.in_max_ideal(f.coeffs()[i]);
        all_in_m = all_in_m && in_m;
        if (i > 0) tail_in_m = tail_in_m && in_m;
    }
    c.is_zero_divisor = all_in_m;
    c.is_regular = !all_in_m;
    c.is_unit = ring.is_unit(f.coeff(0)) && tail_in_m;
    c.is_monic = f.leading() == ring.one();
    if (c.is_monic && f.degree() >= 1) {
        bool lower_in_m = true;
        for (int i = 0; i < f.degree(); ++i)
            lower_in_m = lower_in_m && ring.in_max_ideal(f.coeff(static_cast<std::size_t>(i)));
        c.is_ge = lower_in_m;
    }
    return c;
}

bool is_monic(const Poly& f) { return !f.is_zero() && f.leading() == f.ring()->one(); }

bool is_ge(const Poly& f) {
    if (!is_monic(f) || f.degree() < 1) return false;
    for (int i = 0; i < f.degree(); ++i)
        if (!f.ring()->in_max_ideal(f.coeff(static_cast<std::size_t>(i)))) return false;
    return true;
}

int order(const Poly& f) {
    if (f.is_zero()) throw DomainError(Errc::zero_polynomial, "order of the zero polynomial is undefined");
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (f.coeffs()[i] != 0) return static_cast<int>(i);
    return 0;  // unreachable on normalized input
}

ResiduePoly reduce_mod_m(const Poly& f) {
    ResiduePoly r{f.ring(), {}};
    r.coeffs.reserve(f.coeffs().size());
    for (auto c : f.coeffs()) r.coeffs.push_back(f.ring()->residue(c));
    while (!r.coeffs.empty() && r.coeffs.back() == 0) r.coeffs.pop_back();
    return r;
}

std::pair<Poly, Poly> divide_by_monic(const Poly& f, const Poly& g) {
    require_same_ring(f, g);
    if (!is_monic(g)) throw DomainError(Errc::not_monic, "divisor must be monic");
    const auto& ring = f.ring();
    const int dg = g.degree();
    std::vector<Elem> rem(f.coeffs());
    std::vector<Elem> quo;
    if (f.degree() >= dg) quo.assign(static_cast<std::size_t>(f.degree() - dg) + 1, 0);
    for (int i = f.degree(); i >= dg; --i) {
        const Elem lead = rem[static_cast<std::size_t>(i)];
        if (lead == 0) continue;
        quo[static_cast<std::size_t>(i - dg)] = lead;
        for (int j = 0; j <= dg; ++j) {
            auto& c = rem[static_cast<std::size_t>(i - dg + j)];
            c = ring->sub(c, ring->mul(lead, g.coeff(static_cast<std::size_t>(j))));
        }
    }
    return {Poly(ring, std::move(quo)), Poly(ring, std::move(rem))};
}

std::pair<Poly, Poly> monic_associate(const Poly& f) {
    if (!classify(f).is_regular)
        throw DomainError(Errc::not_regular, "monic associate requires a regular polynomial");
    const auto& ring = f.ring();
    const ResiduePoly fbar = reduce_mod_m(f);
    const int d = fbar.degree();
    const Elem c = f.coeff(static_cast<std::size_t>(d));  // unit: nonzero image in R/m
    const Elem ci = ring->inverse(c);
    const Poly f1 = f.scaled(ci);

    // Split f1 = g + h at index d: g is monic of degree d, h has all
    // coefficients in m (their residues vanish above d).
    std::vector<Elem> glow(f1.coeffs().begin(), f1.coeffs().begin() + d + 1);
    Poly g(ring, std::move(glow));
    std::vector<Elem> hhigh(f1.coeffs());
    std::fill(hhigh.begin(), hhigh.begin() + d + 1, 0);
    Poly h(ring, std::move(hhigh));

    // h = q*g + s with q, s in m[x]; long division stays inside m[x]
    // because g is monic.
    auto [q, s] = divide_by_monic(h, g);
    const Poly fstar = g + s;
    const Poly u = (Poly::one(ring) + q).scaled(c);
    return {u, fstar};
}

int compare(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        const Elem ca = a.coeff(static_cast<std::size_t>(i)), cb = b.coeff(static_cast<std::size_t>(i));
        if (ca != cb) return ca < cb ? -1 : 1;
    }
    return 0;
}

bool poly_less(const Poly& a, const Poly& b) { return compare(a, b) < 0; }

std::string render(const Poly& f) {
    if (f.is_zero()) return "0";
    const auto& ring = *f.ring();
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const Elem c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += ring.render_elem(c);
            continue;
        }
        if (c != ring.one()) out += ring.render_elem(c) + "*";
        out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

}  // namespace lenfact
