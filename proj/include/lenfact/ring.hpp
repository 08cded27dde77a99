#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lenfact/field.hpp"

namespace lenfact {

/// Canonical code of a ring element, in [0, |R|).
///
/// ZP2:   the code is the residue itself, in [0, p^2).
/// SPLIT: mixed radix over (unit part, ideal part) with the unit part most
///        significant: code = u * q^k + sum_j v_j * q^j, so the maximal
///        ideal is exactly the codes below q^k.
using Elem = std::uint32_t;

enum class RingFamily { zp2, split };

enum class Subset { all, max_ideal, units };

class LocalRing;
using RingHandle = std::shared_ptr<const LocalRing>;

/// A finite Artinian local ring (R, m) with m^2 = 0.
///
/// Two families are provided:
///   ZP2        Z/p^2 with m = pZ/p^2Z and residue field F_p.
///   SPLIT      F_q (+) F_q^k with q = p^e: pairs (a, v) of a residue-field
///              scalar and a k-vector over F_q, multiplying as
///              (a, v)(b, w) = (ab, a*w + b*v).  m = {(0, v)}, so m^2 = 0 by
///              construction.
///
/// Instances are immutable; every operation is pure, so handles and element
/// codes may be shared freely across threads.
class LocalRing {
  public:
    static RingHandle make_zp2(std::uint32_t p);
    static RingHandle make_split(std::uint32_t p, std::uint32_t e, std::uint32_t k);

    RingFamily family() const noexcept { return family_; }
    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return field_.e(); }
    std::uint32_t k() const noexcept { return k_; }

    std::uint64_t card() const noexcept { return card_; }        // |R|
    std::uint64_t card_m() const noexcept { return card_m_; }    // |m|
    std::uint64_t residue_card() const noexcept { return field_.size(); }
    const Field& residue_field() const noexcept { return field_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept;

    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem mul(Elem x, Elem y) const;

    /// Multiplicative inverse of a unit; throws NotAUnit for elements of m.
    Elem inverse(Elem x) const;

    /// Exactly one of is_unit / in_max_ideal holds for every element.
    bool is_unit(Elem x) const;
    bool in_max_ideal(Elem x) const;

    /// Image in the residue field R/m.
    FElem residue(Elem x) const;

    /// Image of an integer under Z -> R.
    Elem from_int(std::int64_t n) const;

    /// SPLIT decomposition.  Throws BadParameter on a ZP2 ring.
    FElem unit_part(Elem x) const;
    std::vector<FElem> ideal_part(Elem x) const;
    Elem make_split_elem(FElem unit, const std::vector<FElem>& ideal) const;

    /// Elements of the chosen subset in ascending canonical code order.
    std::vector<Elem> elements(Subset subset) const;

    /// The designated nonzero element of m: least nonzero canonical code in
    /// m (ZP2: p; SPLIT: ideal part (1, 0, ..., 0)).
    Elem min_nonzero_m() const;

    /// Coefficient literal per the CLI grammar: decimal for ZP2,
    /// "[r;v1,...,vk]" for SPLIT.
    std::string render_elem(Elem x) const;

    /// Short human-readable name, e.g. "Z/9" or "F4[t]/(t^2)".
    std::string describe() const;

    /// Rings are interchangeable iff their construction parameters agree.
    bool same_ring(const LocalRing& other) const noexcept;

  private:
    LocalRing(RingFamily family, std::uint32_t p, Field field, std::uint32_t k);

    RingFamily family_;
    std::uint32_t p_;
    Field field_;
    std::uint32_t k_;         // dimension of m over the residue field (SPLIT)
    std::uint64_t card_;
    std::uint64_t card_m_;    // q^k for SPLIT, p for ZP2
};

/// Family dispatcher; e and k are ignored for ZP2.
RingHandle make_ring(RingFamily family, std::uint32_t p, std::uint32_t e = 1, std::uint32_t k = 1);

}  // namespace lenfact
