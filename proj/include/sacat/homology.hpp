#pragma once

#include <map>

#include "sacat/bar.hpp"
#include "sacat/finab.hpp"
#include "sacat/group.hpp"

namespace sacat {

inline constexpr uint32_t kCertifiedOrderCap = 24;
inline constexpr uint32_t kUncertifiedOrderCap = 60;

/// H1 = abelianization, with the unit projection and coordinates.
struct H1Result {
    FinAb structure;
    Group group;              // Y
    Group ab;                 // Y / [Y,Y]
    GroupMorphism projection; // Y -> ab
    AbelianStructure abs;     // structure/coords of ab

    std::vector<int64_t> coords_of(uint32_t y) const { return abs.coords[projection(y)]; }
    /// Some element of Y whose class is the t-th structure generator.
    uint32_t rep_of(uint32_t t) const;
};

H1Result h1(const Group& y);

/// H2 via the normalized bar complex. The certified path keeps explicit
/// cycle representatives and a cycle -> class map; the mod-p path only the
/// structure.
struct HomologyGroup {
    FinAb structure;
    Group group;
    bool certified = true;

    // certified path data
    std::vector<std::map<uint32_t, Int>> cycle_reps; // per structure generator
    IntMatrix vinv2;                                 // from SNF(d2)
    uint32_t rank_d2 = 0;
    uint32_t m2 = 0;
    CokerData coker; // presentation of ker d2 / im d3
    IntMatrix kernel_basis;

    /// Class coordinates of an integral 2-cycle (sparse over pair indices).
    /// Throws not_a_cycle when d2 * w != 0. Certified path only.
    std::vector<int64_t> class_of_cycle(const std::map<uint32_t, Int>& w) const;
};

/// Certified integer path; throws order_cap_exceeded above the cap.
HomologyGroup h2(const Group& y, uint32_t cap = kCertifiedOrderCap);

/// Non-certified mod-p path: elementary divisor counts per prime layer, no
/// cycle representatives. Requires v_p(|Y|) <= 2 for every prime p.
HomologyGroup h2_uncertified(const Group& y, uint32_t cap = kUncertifiedOrderCap);

AbMorphism induced_h1(const GroupMorphism& f, const H1Result& src, const H1Result& dst);
AbMorphism induced_h2(const GroupMorphism& f, const HomologyGroup& src, const HomologyGroup& dst);

/// Deterministic set-theoretic section of a surjection: least preimage,
/// identity over the identity.
std::vector<uint32_t> minimal_section(const GroupMorphism& f);

/// Connecting map H2(Y) -> K/[K,X] of the five-term homology sequence: a
/// cycle sum n_i (y_i, y_i') maps to the class of the product of
/// s(y) s(y') s(y y')^{-1}. Independent of the section choice.
AbMorphism homology_transgression(const GroupMorphism& f, const HomologyGroup& h2y,
                                  const SubquotientData& k_mod_kx,
                                  const std::vector<uint32_t>* section = nullptr);

} // namespace sacat
