#include "sacat/group.hpp"

#include <algorithm>
#include <numeric>

namespace sacat {

namespace {

std::string at(uint32_t a) { return std::to_string(a); }

} // namespace

Group FiniteGroup::from_cayley_table(const std::vector<std::vector<uint32_t>>& table,
                                     std::string label) {
    const auto n = static_cast<uint32_t>(table.size());
    check(n > 0, errc::schema_error, "empty table");
    std::vector<uint32_t> flat(static_cast<size_t>(n) * n);
    for (uint32_t i = 0; i < n; ++i) {
        check(table[i].size() == n, errc::schema_error, "table is not square at row " + at(i));
        for (uint32_t j = 0; j < n; ++j) {
            check(table[i][j] < n, errc::not_closed,
                  "entry (" + at(i) + "," + at(j) + ") = " + at(table[i][j]) + " out of range");
            flat[i * n + j] = table[i][j];
        }
    }

    // Locate the two-sided identity.
    int64_t e = -1;
    for (uint32_t c = 0; c < n; ++c) {
        bool ok = true;
        for (uint32_t a = 0; a < n && ok; ++a)
            ok = flat[c * n + a] == a && flat[a * n + c] == a;
        if (ok) {
            e = c;
            break;
        }
    }
    check(e >= 0, errc::no_identity, "no two-sided identity element");

    if (e != 0) {
        // Canonical relabeling swapping 0 <-> e.
        std::vector<uint32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0u);
        std::swap(perm[0], perm[static_cast<uint32_t>(e)]);
        std::vector<uint32_t> relabeled(flat.size());
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = 0; b < n; ++b)
                relabeled[a * n + b] = perm[flat[perm[a] * n + perm[b]]];
        flat.swap(relabeled);
    }

    auto g = from_table_unchecked(std::move(flat), n, std::move(label));
    g->validate();
    return g;
}

Group FiniteGroup::from_table_unchecked(std::vector<uint32_t> flat, uint32_t order,
                                        std::string label) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = order;
    g->table_ = std::move(flat);
    g->label_ = std::move(label);
    g->inverse_.assign(order, 0);
    for (uint32_t a = 0; a < order; ++a) {
        bool found = false;
        for (uint32_t b = 0; b < order; ++b) {
            if (g->table_[a * order + b] == 0 && g->table_[b * order + a] == 0) {
                g->inverse_[a] = b;
                found = true;
                break;
            }
        }
        check(found, errc::no_inverse, "element " + at(a) + " has no inverse");
    }
    return g;
}

void FiniteGroup::validate() const {
    const uint32_t n = order_;
    for (uint32_t a = 0; a < n; ++a) {
        check(mul(0, a) == a && mul(a, 0) == a, errc::no_identity,
              "element 0 is not an identity against " + at(a));
        check(mul(a, inv(a)) == 0 && mul(inv(a), a) == 0, errc::no_inverse,
              "inverse law fails for " + at(a));
    }
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            check(mul(a, b) < n, errc::not_closed, "(" + at(a) + "," + at(b) + ")");
            for (uint32_t c = 0; c < n; ++c)
                check(mul(mul(a, b), c) == mul(a, mul(b, c)), errc::not_associative,
                      "triple (" + at(a) + "," + at(b) + "," + at(c) + ")");
        }
}

uint32_t FiniteGroup::element_order(uint32_t a) const {
    uint32_t x = a, k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (uint32_t a = 0; a < order_; ++a)
        for (uint32_t b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

Subgroup::Subgroup(Group parent, std::vector<uint32_t> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    member_.assign(parent_->order(), 0);
    for (auto e : elements_) {
        check(e < parent_->order(), errc::foreign_subgroup, "element out of range");
        member_[e] = 1;
    }
    check(!elements_.empty() && member_[0], errc::foreign_subgroup, "subgroup must contain 0");
    for (auto a : elements_) {
        check(member_[parent_->inv(a)], errc::foreign_subgroup,
              "not closed under inverse at " + std::to_string(a));
        for (auto b : elements_)
            check(member_[parent_->mul(a, b)], errc::foreign_subgroup,
                  "not closed under product at (" + std::to_string(a) + "," + std::to_string(b) +
                      ")");
    }
}

Subgroup Subgroup::trivial(Group parent) { return Subgroup(std::move(parent), {0}); }

Subgroup Subgroup::full(Group parent) {
    std::vector<uint32_t> all(parent->order());
    std::iota(all.begin(), all.end(), 0u);
    return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::generated(Group parent, const std::vector<uint32_t>& gens) {
    std::vector<char> seen(parent->order(), 0);
    std::vector<uint32_t> closure{0};
    seen[0] = 1;
    for (auto g : gens)
        if (!seen[g]) {
            seen[g] = 1;
            closure.push_back(g);
        }
    // Products of known elements with generators until stable. Inverses come
    // for free in a finite group.
    for (size_t i = 0; i < closure.size(); ++i)
        for (auto g : gens) {
            uint32_t p = parent->mul(closure[i], g);
            if (!seen[p]) {
                seen[p] = 1;
                closure.push_back(p);
            }
            p = parent->mul(g, closure[i]);
            if (!seen[p]) {
                seen[p] = 1;
                closure.push_back(p);
            }
        }
    return Subgroup(std::move(parent), std::move(closure));
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
    for (auto e : other.elements_)
        if (!member_[e])
            return false;
    return true;
}

bool Subgroup::is_normal() const {
    for (uint32_t g = 0; g < parent_->order(); ++g)
        for (auto a : elements_)
            if (!member_[parent_->conj(g, a)])
                return false;
    return true;
}

Subgroup::AsGroup Subgroup::as_group() const {
    const uint32_t m = size();
    std::vector<int32_t> from_parent(parent_->order(), -1);
    for (uint32_t i = 0; i < m; ++i)
        from_parent[elements_[i]] = static_cast<int32_t>(i);
    std::vector<uint32_t> flat(static_cast<size_t>(m) * m);
    for (uint32_t i = 0; i < m; ++i)
        for (uint32_t j = 0; j < m; ++j)
            flat[i * m + j] =
                static_cast<uint32_t>(from_parent[parent_->mul(elements_[i], elements_[j])]);
    auto grp = FiniteGroup::from_table_unchecked(std::move(flat), m,
                                                 parent_->label() + "-sub" + std::to_string(m));
    GroupMorphism incl(grp, parent_, elements_);
    return AsGroup{grp, std::move(incl), elements_, std::move(from_parent)};
}

GroupMorphism::GroupMorphism(Group source, Group target, std::vector<uint32_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    check(map_.size() == source_->order(), errc::schema_error, "morphism map size mismatch");
    check(map_[0] == 0, errc::schema_error, "morphism must preserve the identity");
    for (auto v : map_)
        check(v < target_->order(), errc::schema_error, "morphism image out of range");
    for (uint32_t a = 0; a < source_->order(); ++a)
        for (uint32_t b = 0; b < source_->order(); ++b)
            check(map_[source_->mul(a, b)] == target_->mul(map_[a], map_[b]), errc::schema_error,
                  "not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

GroupMorphism GroupMorphism::identity(Group g) {
    std::vector<uint32_t> m(g->order());
    std::iota(m.begin(), m.end(), 0u);
    auto copy = g;
    return GroupMorphism(std::move(g), std::move(copy), std::move(m));
}

GroupMorphism GroupMorphism::trivial(Group source, Group target) {
    return GroupMorphism(std::move(source), std::move(target),
                         std::vector<uint32_t>(source->order(), 0));
}

bool GroupMorphism::is_injective() const {
    std::vector<char> hit(target_->order(), 0);
    for (auto v : map_) {
        if (hit[v])
            return false;
        hit[v] = 1;
    }
    return true;
}

bool GroupMorphism::is_surjective() const {
    std::vector<char> hit(target_->order(), 0);
    uint32_t count = 0;
    for (auto v : map_)
        if (!hit[v]) {
            hit[v] = 1;
            ++count;
        }
    return count == target_->order();
}

GroupMorphism GroupMorphism::compose_after(const GroupMorphism& first) const {
    check(first.target_ == source_, errc::not_composable, "morphism composition mismatch");
    std::vector<uint32_t> m(first.source_->order());
    for (uint32_t a = 0; a < m.size(); ++a)
        m[a] = map_[first.map_[a]];
    return GroupMorphism(first.source_, target_, std::move(m));
}

Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b) {
    check(a.parent() == g && b.parent() == g, errc::foreign_subgroup,
          "commutator arguments must live in the given group");
    std::vector<uint32_t> gens;
    for (auto x : a.elements())
        for (auto y : b.elements())
            gens.push_back(g->mul(g->mul(g->inv(x), g->inv(y)), g->mul(x, y)));
    return Subgroup::generated(g, gens);
}

Subgroup center(const Group& g) {
    std::vector<uint32_t> elems;
    for (uint32_t a = 0; a < g->order(); ++a) {
        bool central = true;
        for (uint32_t x = 0; x < g->order() && central; ++x)
            central = g->mul(a, x) == g->mul(x, a);
        if (central)
            elems.push_back(a);
    }
    return Subgroup(g, std::move(elems));
}

QuotientResult quotient(const Group& g, const Subgroup& n) {
    check(n.parent() == g, errc::foreign_subgroup, "quotient by a foreign subgroup");
    check(n.is_normal(), errc::not_normal, "subgroup is not normal");
    const uint32_t ord = g->order();
    // Canonical coset representative: least element of the coset. The identity
    // coset has representative 0, so it gets index 0 after sorting.
    std::vector<uint32_t> rep(ord);
    std::vector<uint32_t> reps;
    std::vector<int32_t> coset_of(ord, -1);
    for (uint32_t a = 0; a < ord; ++a) {
        uint32_t least = a;
        for (auto h : n.elements())
            least = std::min(least, g->mul(a, h));
        rep[a] = least;
    }
    for (uint32_t a = 0; a < ord; ++a)
        if (rep[a] == a)
            reps.push_back(a);
    for (uint32_t i = 0; i < reps.size(); ++i)
        coset_of[reps[i]] = static_cast<int32_t>(i);
    const auto m = static_cast<uint32_t>(reps.size());
    std::vector<uint32_t> flat(static_cast<size_t>(m) * m);
    for (uint32_t i = 0; i < m; ++i)
        for (uint32_t j = 0; j < m; ++j)
            flat[i * m + j] = static_cast<uint32_t>(coset_of[rep[g->mul(reps[i], reps[j])]]);
    auto q = FiniteGroup::from_table_unchecked(std::move(flat), m,
                                               g->label() + "/N" + std::to_string(n.size()));
    std::vector<uint32_t> proj(ord);
    for (uint32_t a = 0; a < ord; ++a)
        proj[a] = static_cast<uint32_t>(coset_of[rep[a]]);
    return QuotientResult{q, GroupMorphism(g, q, std::move(proj))};
}

Subgroup kernel(const GroupMorphism& h) {
    std::vector<uint32_t> elems;
    for (uint32_t a = 0; a < h.source()->order(); ++a)
        if (h(a) == 0)
            elems.push_back(a);
    return Subgroup(h.source(), std::move(elems));
}

Subgroup image(const GroupMorphism& h) {
    std::vector<uint32_t> elems(h.map());
    return Subgroup(h.target(), std::move(elems));
}

Group direct_product(const Group& g, const Group& h) {
    const uint32_t ng = g->order(), nh = h->order();
    const uint32_t n = ng * nh;
    std::vector<uint32_t> flat(static_cast<size_t>(n) * n);
    for (uint32_t a = 0; a < n; ++a) {
        const uint32_t ga = a / nh, ha = a % nh;
        for (uint32_t b = 0; b < n; ++b) {
            const uint32_t gb = b / nh, hb = b % nh;
            flat[a * n + b] = g->mul(ga, gb) * nh + h->mul(ha, hb);
        }
    }
    std::string label = g->label() + "x" + h->label();
    return FiniteGroup::from_table_unchecked(std::move(flat), n, std::move(label));
}

std::vector<uint32_t> generating_set(const Group& g) {
    std::vector<uint32_t> gens;
    Subgroup have = Subgroup::trivial(g);
    while (have.size() < g->order()) {
        uint32_t next = 0;
        while (have.contains(next))
            ++next;
        gens.push_back(next);
        std::vector<uint32_t> all(gens);
        have = Subgroup::generated(g, all);
    }
    return gens;
}

namespace {

/// Derivation of every element as (previous element) * (generator), built by
/// BFS from the identity. Lets us extend generator images to the whole group.
struct Derivation {
    std::vector<uint32_t> gens;
    // step[e] = {prev, gen index}; identity has no step.
    std::vector<std::pair<uint32_t, uint32_t>> step;
    std::vector<uint32_t> bfs_order;
};

Derivation derive(const Group& g) {
    Derivation d;
    d.gens = generating_set(g);
    d.step.assign(g->order(), {0, 0});
    std::vector<char> seen(g->order(), 0);
    seen[0] = 1;
    d.bfs_order.push_back(0);
    for (size_t i = 0; i < d.bfs_order.size(); ++i) {
        const uint32_t e = d.bfs_order[i];
        for (uint32_t j = 0; j < d.gens.size(); ++j) {
            const uint32_t p = g->mul(e, d.gens[j]);
            if (!seen[p]) {
                seen[p] = 1;
                d.step[p] = {e, j};
                d.bfs_order.push_back(p);
            }
        }
    }
    return d;
}

/// Extends generator images along the derivation, then checks the
/// homomorphism law on all pairs. Returns nullopt when the law fails.
std::optional<std::vector<uint32_t>> extend_images(const Group& g, const Group& h,
                                                   const Derivation& d,
                                                   const std::vector<uint32_t>& gen_images) {
    std::vector<uint32_t> f(g->order(), 0);
    for (size_t i = 1; i < d.bfs_order.size(); ++i) {
        const uint32_t e = d.bfs_order[i];
        const auto [prev, j] = d.step[e];
        f[e] = h->mul(f[prev], gen_images[j]);
    }
    for (uint32_t a = 0; a < g->order(); ++a)
        for (uint32_t b = 0; b < g->order(); ++b)
            if (f[g->mul(a, b)] != h->mul(f[a], f[b]))
                return std::nullopt;
    return f;
}

void visit_morphisms(const Group& source, const Group& target,
                     const MorphismConstraints& constraints,
                     const std::function<bool(GroupMorphism&&)>& emit) {
    const Derivation d = derive(source);
    const auto ngen = d.gens.size();

    // Candidate images per generator, respecting pins, the allowed-filter and
    // the order constraint |image| divides |generator order|.
    std::vector<std::vector<uint32_t>> cand(ngen);
    for (size_t j = 0; j < ngen; ++j) {
        const uint32_t gen = d.gens[j];
        const uint32_t gord = source->element_order(gen);
        int64_t pinned = -1;
        for (const auto& [el, im] : constraints.pins)
            if (el == gen)
                pinned = im;
        for (uint32_t im = 0; im < target->order(); ++im) {
            if (pinned >= 0 && im != static_cast<uint32_t>(pinned))
                continue;
            if (gord % target->element_order(im) != 0)
                continue;
            if (constraints.allowed && !constraints.allowed(gen, im))
                continue;
            cand[j].push_back(im);
        }
        if (cand[j].empty())
            return;
    }

    std::vector<uint32_t> pick(ngen, 0);
    std::vector<size_t> idx(ngen, 0);
    size_t level = 0;
    while (true) {
        if (level == ngen) {
            if (auto f = extend_images(source, target, d, pick)) {
                bool ok = true;
                for (const auto& [el, im] : constraints.pins)
                    if ((*f)[el] != im) {
                        ok = false;
                        break;
                    }
                if (ok && constraints.allowed)
                    for (uint32_t a = 0; a < source->order() && ok; ++a)
                        ok = constraints.allowed(a, (*f)[a]);
                if (ok && !emit(GroupMorphism(source, target, std::move(*f))))
                    return;
            }
            // backtrack
            while (level > 0) {
                --level;
                if (++idx[level] < cand[level].size()) {
                    pick[level] = cand[level][idx[level]];
                    ++level;
                    break;
                }
            }
            if (level == 0 && idx[0] >= cand[0].size())
                return;
            if (ngen == 0)
                return;
        } else {
            idx[level] = 0;
            pick[level] = cand[level].empty() ? 0 : cand[level][0];
            ++level;
        }
    }
}

} // namespace

std::vector<GroupMorphism> enumerate_morphisms(const Group& source, const Group& target,
                                               const MorphismConstraints& constraints) {
    std::vector<GroupMorphism> out;
    if (source->order() == 1) {
        // Only the trivial morphism; the generator machinery assumes >= 1 gen.
        GroupMorphism m = GroupMorphism::trivial(source, target);
        bool ok = true;
        for (const auto& [el, im] : constraints.pins)
            ok = ok && m(el) == im;
        if (ok && constraints.allowed)
            ok = constraints.allowed(0, 0);
        if (ok)
            out.push_back(std::move(m));
        return out;
    }
    visit_morphisms(source, target, constraints, [&](GroupMorphism&& m) {
        out.push_back(std::move(m));
        return true;
    });
    return out;
}

std::optional<GroupMorphism> find_morphism(const Group& source, const Group& target,
                                           const MorphismConstraints& constraints,
                                           const std::function<bool(const GroupMorphism&)>& pred) {
    std::optional<GroupMorphism> found;
    if (source->order() == 1) {
        auto all = enumerate_morphisms(source, target, constraints);
        for (auto& m : all)
            if (!pred || pred(m)) {
                found = std::move(m);
                break;
            }
        return found;
    }
    visit_morphisms(source, target, constraints, [&](GroupMorphism&& m) {
        if (!pred || pred(m)) {
            found = std::move(m);
            return false;
        }
        return true;
    });
    return found;
}

} // namespace sacat
