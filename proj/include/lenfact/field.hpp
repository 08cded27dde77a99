#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lenfact/error.hpp"

namespace lenfact {

/// Canonical index of a field element, in [0, p^e).  Index i encodes the
/// digit vector (d_0, ..., d_{e-1}) with i = sum d_j * p^j; digit j is the
/// y^j coordinate in F_p[y]/(modulus).
using FElem = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

/// The canonically least monic irreducible polynomial of degree e over F_p,
/// ordered by ascending constant-first coefficient tuple.  Returned as
/// coefficients c_0..c_e with c_e = 1.  Requires e >= 2.
std::vector<std::uint32_t> find_field_modulus(std::uint32_t p, std::uint32_t e);

/// A finite field F_{p^e}.  For e = 1 the prime field is used directly and
/// no modulus is stored.  Immutable after construction; all operations are
/// pure and safe for concurrent use.
class Field {
  public:
    /// F_p.  Throws NotPrime.
    static Field prime(std::uint32_t p);

    /// F_{p^e} over the canonical modulus (found by exhaustive search when
    /// none is supplied).  Throws NotPrime / BadParameter.
    static Field extension(std::uint32_t p, std::uint32_t e);
    static Field extension(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t size() const noexcept { return q_; }

    /// Modulus coefficients c_0..c_e (empty when e = 1).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    FElem zero() const noexcept { return 0; }
    FElem one() const noexcept { return 1; }

    FElem add(FElem a, FElem b) const;
    FElem sub(FElem a, FElem b) const;
    FElem neg(FElem a) const;
    FElem mul(FElem a, FElem b) const;

    /// Multiplicative inverse; throws NotAUnit on zero.
    FElem inv(FElem a) const;

    FElem pow(FElem a, std::uint64_t n) const;

    /// Image of an integer under Z -> F_{p^e} (lands in the prime subfield).
    FElem from_int(std::int64_t n) const;

    /// Digit vector (d_0, ..., d_{e-1}) of an element.
    std::vector<std::uint32_t> digits(FElem a) const;
    FElem from_digits(const std::vector<std::uint32_t>& d) const;

    bool operator==(const Field& other) const noexcept {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

  private:
    Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    std::uint32_t p_;
    std::uint32_t e_;
    std::uint32_t q_;                      // p^e
    std::vector<std::uint32_t> modulus_;   // c_0..c_e, monic; empty iff e == 1
};

}  // namespace lenfact
