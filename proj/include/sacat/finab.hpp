#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sacat/group.hpp"
#include "sacat/intmat.hpp"

namespace sacat {

/// A finite abelian group in invariant-factor form d1 | d2 | ... | dk, each
/// >= 2. The empty list is the zero group.
struct FinAb {
    std::vector<int64_t> factors;

    uint64_t order() const {
        uint64_t o = 1;
        for (auto d : factors)
            o *= static_cast<uint64_t>(d);
        return o;
    }
    bool is_zero() const { return factors.empty(); }
    uint32_t rank() const { return static_cast<uint32_t>(factors.size()); }
    std::string render() const; // "0" or "C2 x C4"

    bool operator==(const FinAb& other) const { return factors == other.factors; }

    using Elem = std::vector<int64_t>;
    Elem zero() const { return Elem(factors.size(), 0); }
    Elem reduce(Elem e) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem smul(int64_t n, const Elem& a) const;
    bool is_zero_elem(const Elem& e) const;
    /// All elements in mixed-radix order; only for small groups.
    std::vector<Elem> elements() const;
};

/// Morphism of finite abelian groups: matrix columns are the images of the
/// source generators in target coordinates; entries live mod target factors.
/// Well-definedness (source relations map into target relations) is checked.
class AbMorphism {
  public:
    AbMorphism(FinAb source, FinAb target, std::vector<std::vector<int64_t>> matrix);

    static AbMorphism zero(FinAb source, FinAb target);
    static AbMorphism identity(FinAb g);

    const FinAb& source() const { return source_; }
    const FinAb& target() const { return target_; }
    const std::vector<std::vector<int64_t>>& matrix() const { return matrix_; }

    FinAb::Elem apply(const FinAb::Elem& e) const;
    AbMorphism compose_after(const AbMorphism& first) const;
    bool is_zero() const;
    bool operator==(const AbMorphism& other) const;

  private:
    FinAb source_, target_;
    std::vector<std::vector<int64_t>> matrix_; // target.rank rows x source.rank cols
};

/// Presentation bookkeeping for Z^g / (column lattice of R): the structure in
/// invariant factors plus both change-of-basis directions.
struct CokerData {
    FinAb structure;
    uint32_t gens = 0;
    std::vector<uint32_t> positions; // SNF diagonal indices with d > 1
    IntMatrix u, uinv;

    /// Coordinates of the class of an integer vector.
    std::vector<int64_t> coords_of(const std::vector<Int>& v) const;
    /// An integer representative of structure generator t.
    std::vector<Int> rep_of(uint32_t t) const;
};

/// Throws infinite_cokernel when the quotient has a free part.
CokerData cokernel_data(const IntMatrix& relations);
FinAb cokernel_structure(const IntMatrix& m);

/// Invariant-factor normalization of an arbitrary list of cyclic orders.
CokerData normalize_cyclic_orders(const std::vector<int64_t>& orders);

struct HomGroup {
    FinAb structure;    // normalized form of ⊕ Z/gcd(d_i, e_j)
    FinAb source, target;
    struct RawGen {
        uint32_t i, j;  // source factor i -> target factor j
        int64_t order;  // gcd(d_i, e_j)
    };
    std::vector<RawGen> raw;     // fixed (i, j) lexicographic order
    CokerData normalization;     // raw coords -> structure coords

    AbMorphism morphism_of(const std::vector<int64_t>& structure_coords) const;
    std::vector<int64_t> coords_of(const AbMorphism& psi) const;
};

/// Hom(⊕ Z/d_i, ⊕ Z/e_j) = ⊕_{ij} Z/gcd(d_i, e_j) with explicit generators.
HomGroup hom_group(const FinAb& a, const FinAb& b);

struct ExtGroup {
    FinAb structure;
    FinAb source, target; // Ext(source, target)
    std::vector<HomGroup::RawGen> raw;
    CokerData normalization;
};

/// Ext(⊕ Z/d_i, ⊕ Z/e_j) = ⊕_{ij} Z/gcd(d_i, e_j).
ExtGroup ext_group(const FinAb& a, const FinAb& b);

/// Structure and coordinates of an abelian finite group given by its table.
struct AbelianStructure {
    FinAb structure;
    Group group;
    std::vector<uint32_t> gens;                 // generator element indices
    std::vector<std::vector<int64_t>> coords;   // per element, structure coords
    std::vector<uint32_t> reps;                 // per structure generator, an element
};

AbelianStructure abelian_structure(const Group& q);

/// The witnessed subquotient top/bottom of a group, with coordinates for the
/// cosets of arbitrary elements of top. Throws not_nested /
/// non_abelian_quotient / not_normal.
struct SubquotientData {
    SubquotientData(Group parent_, Subgroup top_, Subgroup bottom_, Group quotient_group_)
        : parent(std::move(parent_)), top(std::move(top_)), bottom(std::move(bottom_)),
          quotient_group(std::move(quotient_group_)) {}

    FinAb structure;
    Group parent;
    Subgroup top, bottom;
    Group quotient_group;
    std::vector<uint32_t> gen_elements;         // elements of top generating the quotient
    std::vector<uint32_t> rep_elements;         // parent element per structure generator

    std::vector<int64_t> coords_of_element(uint32_t parent_elem) const;

    // internals for the coordinate map
    std::vector<int32_t> parent_to_quotient; // -1 when the element is not in top
    std::vector<std::vector<int64_t>> quotient_coords;
};

SubquotientData subquotient_structure(const Group& g, const Subgroup& top,
                                      const Subgroup& bottom);

} // namespace sacat
