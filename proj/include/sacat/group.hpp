#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sacat/error.hpp"

namespace sacat {

class FiniteGroup;
using Group = std::shared_ptr<const FiniteGroup>;

/// A finite group as a closed multiplication table. Element 0 is always the
/// identity; builders relabel if necessary. Immutable after construction.
class FiniteGroup {
  public:
    /// Validates all group axioms. Throws not_closed / not_associative /
    /// no_identity / no_inverse naming the failing entry.
    static Group from_cayley_table(const std::vector<std::vector<uint32_t>>& table,
                                   std::string label = "");

    /// Trusted constructor for tables that are correct by construction
    /// (products, quotients, permutation closures). Axioms still checked in
    /// debug-ish paths via validate().
    static Group from_table_unchecked(std::vector<uint32_t> flat, uint32_t order,
                                      std::string label);

    uint32_t order() const { return order_; }
    const std::string& label() const { return label_; }

    uint32_t mul(uint32_t a, uint32_t b) const { return table_[a * order_ + b]; }
    uint32_t inv(uint32_t a) const { return inverse_[a]; }
    uint32_t conj(uint32_t g, uint32_t a) const { return mul(mul(g, a), inv(g)); }

    /// Order of the cyclic subgroup generated by a.
    uint32_t element_order(uint32_t a) const;

    bool is_abelian() const;

    /// Re-checks every axiom; throws on violation.
    void validate() const;

    const std::vector<uint32_t>& flat_table() const { return table_; }

  private:
    FiniteGroup() = default;
    uint32_t order_ = 0;
    std::vector<uint32_t> table_;   // row-major, table_[a*order+b] = a*b
    std::vector<uint32_t> inverse_;
    std::string label_;
};

/// A subgroup as a sorted element set plus O(1) membership.
class Subgroup {
  public:
    Subgroup(Group parent, std::vector<uint32_t> elements);

    static Subgroup trivial(Group parent);
    static Subgroup full(Group parent);
    /// Closure of the given generators inside parent.
    static Subgroup generated(Group parent, const std::vector<uint32_t>& gens);

    const Group& parent() const { return parent_; }
    const std::vector<uint32_t>& elements() const { return elements_; }
    uint32_t size() const { return static_cast<uint32_t>(elements_.size()); }
    bool contains(uint32_t a) const { return member_[a]; }

    bool contains_subgroup(const Subgroup& other) const;
    bool is_normal() const;
    bool same_parent(const Subgroup& other) const { return parent_ == other.parent_; }
    bool operator==(const Subgroup& other) const {
        return parent_ == other.parent_ && elements_ == other.elements_;
    }

    /// The subgroup as a group in its own right: elements reindexed in sorted
    /// order (so the identity keeps index 0), plus the inclusion morphism.
    struct AsGroup;
    AsGroup as_group() const;

  private:
    Group parent_;
    std::vector<uint32_t> elements_;
    std::vector<char> member_;
};

/// A homomorphism between two finite groups, stored as the full image array.
/// The homomorphism law is checked at construction.
class GroupMorphism {
  public:
    GroupMorphism(Group source, Group target, std::vector<uint32_t> map);

    static GroupMorphism identity(Group g);
    static GroupMorphism trivial(Group source, Group target);

    const Group& source() const { return source_; }
    const Group& target() const { return target_; }
    uint32_t operator()(uint32_t a) const { return map_[a]; }
    const std::vector<uint32_t>& map() const { return map_; }

    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const { return is_injective() && is_surjective(); }

    GroupMorphism compose_after(const GroupMorphism& first) const; // this ∘ first

  private:
    Group source_, target_;
    std::vector<uint32_t> map_;
};

struct Subgroup::AsGroup {
    Group group;
    GroupMorphism inclusion;                // group -> parent
    std::vector<uint32_t> to_parent;        // element index -> parent index
    std::vector<int32_t> from_parent;       // parent index -> element index or -1
};

struct QuotientResult {
    Group group;
    GroupMorphism projection;
};

/// Subgroup generated by {a^-1 b^-1 a b : a in A, b in B}. For A=B=G this is
/// the commutator subgroup, the kernel of abelianization.
Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b);

Subgroup center(const Group& g);
/// Coset group with canonical projection; cosets are ordered by their least
/// element so the identity coset gets index 0. Throws not_normal.
QuotientResult quotient(const Group& g, const Subgroup& n);
Subgroup kernel(const GroupMorphism& h);
Subgroup image(const GroupMorphism& h);

/// Direct product with element order (g,h) -> g*|H|+h.
Group direct_product(const Group& g, const Group& h);

/// Greedy generating set: repeatedly adjoin the smallest element outside the
/// generated subgroup. Deterministic; used by the morphism search.
std::vector<uint32_t> generating_set(const Group& g);

struct MorphismConstraints {
    /// Exact pins: element -> required image.
    std::vector<std::pair<uint32_t, uint32_t>> pins;
    /// Optional per-element candidate filter (e.g. fiber constraints).
    std::function<bool(uint32_t elem, uint32_t image)> allowed;
};

/// Every homomorphism source -> target satisfying the constraints, in a
/// deterministic order (lexicographic in the generator image tuples).
std::vector<GroupMorphism> enumerate_morphisms(const Group& source, const Group& target,
                                               const MorphismConstraints& constraints = {});

/// First match in the same order, or nullopt. Stops early.
std::optional<GroupMorphism> find_morphism(const Group& source, const Group& target,
                                           const MorphismConstraints& constraints,
                                           const std::function<bool(const GroupMorphism&)>& pred);

} // namespace sacat
