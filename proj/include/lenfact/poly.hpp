#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "lenfact/ring.hpp"

namespace lenfact {

/// A polynomial over a LocalRing, stored as the normalized coefficient
/// sequence a_0, a_1, ... (index i is the coefficient of x^i; the last
/// entry is nonzero unless the sequence is empty, which encodes zero).
class Poly {
  public:
    Poly(RingHandle ring, std::vector<Elem> coeffs);

    static Poly zero(RingHandle ring) { return Poly(std::move(ring), {}); }
    static Poly one(RingHandle ring);
    static Poly constant(RingHandle ring, Elem c) { return Poly(std::move(ring), {c}); }
    static Poly x_pow(RingHandle ring, int d);

    /// Coefficients given as integers, mapped through LocalRing::from_int.
    static Poly from_ints(RingHandle ring, std::initializer_list<std::int64_t> coeffs);

    const RingHandle& ring() const noexcept { return ring_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree of the polynomial; -1 is the marker for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^i (zero beyond the degree).
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    /// Leading coefficient; requires a nonzero polynomial.
    Elem leading() const;

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly operator-() const;

    /// Scalar multiple c * f.
    Poly scaled(Elem c) const;

    bool operator==(const Poly& other) const;
    bool operator!=(const Poly& other) const { return !(*this == other); }

  private:
    RingHandle ring_;
    std::vector<Elem> coeffs_;
};

/// Classification per the standing definitions: f is a unit iff a_0 is a
/// unit and every higher coefficient lies in m; a zero divisor iff every
/// coefficient lies in m; regular iff not a zero divisor; GE iff monic,
/// non-constant and every non-leading coefficient lies in m.
struct PolyClass {
    bool is_unit = false;
    bool is_zero_divisor = false;
    bool is_regular = false;
    bool is_monic = false;
    bool is_ge = false;
};

PolyClass classify(const Poly& f);
bool is_monic(const Poly& f);
bool is_ge(const Poly& f);

/// Least index with a nonzero coefficient; throws ZeroPolynomial on zero.
int order(const Poly& f);

/// Coefficientwise image of f in (R/m)[x], normalized.
struct ResiduePoly {
    RingHandle ring;
    std::vector<FElem> coeffs;

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const noexcept { return coeffs.empty(); }
};

ResiduePoly reduce_mod_m(const Poly& f);

/// Exact long division by a monic divisor: f = q*g + r with r = 0 or
/// deg r < deg g.  Throws NotMonic.
std::pair<Poly, Poly> divide_by_monic(const Poly& f, const Poly& g);

/// Decomposition f = u * fstar of a regular polynomial into a unit
/// polynomial u and a monic fstar with deg fstar = deg of the residue image
/// of f.  Deterministic.  Throws NotRegular.
std::pair<Poly, Poly> monic_associate(const Poly& f);

/// Canonical total order: ascending degree, then ascending coefficient
/// encoding (constant coefficient least significant).
int compare(const Poly& a, const Poly& b);
bool poly_less(const Poly& a, const Poly& b);

/// Canonical rendering: descending powers, '^' exponents, '*' between a
/// coefficient literal and x.  This exact format is the golden-file format
/// and round-trips through the parser.
std::string render(const Poly& f);

}  // namespace lenfact
