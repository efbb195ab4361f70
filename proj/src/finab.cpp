#include "sacat/finab.hpp"

#include <numeric>

namespace sacat {

std::string FinAb::render() const {
    if (factors.empty())
        return "0";
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i)
            s += " x ";
        s += "C" + std::to_string(factors[i]);
    }
    return s;
}

FinAb::Elem FinAb::reduce(Elem e) const {
    for (size_t i = 0; i < factors.size(); ++i) {
        e[i] %= factors[i];
        if (e[i] < 0)
            e[i] += factors[i];
    }
    return e;
}

FinAb::Elem FinAb::add(const Elem& a, const Elem& b) const {
    Elem e(factors.size());
    for (size_t i = 0; i < factors.size(); ++i)
        e[i] = a[i] + b[i];
    return reduce(std::move(e));
}

FinAb::Elem FinAb::neg(const Elem& a) const {
    Elem e(factors.size());
    for (size_t i = 0; i < factors.size(); ++i)
        e[i] = -a[i];
    return reduce(std::move(e));
}

FinAb::Elem FinAb::smul(int64_t n, const Elem& a) const {
    Elem e(factors.size());
    for (size_t i = 0; i < factors.size(); ++i)
        e[i] = n * a[i];
    return reduce(std::move(e));
}

bool FinAb::is_zero_elem(const Elem& e) const {
    for (size_t i = 0; i < factors.size(); ++i)
        if (e[i] % factors[i] != 0)
            return false;
    return true;
}

std::vector<FinAb::Elem> FinAb::elements() const {
    std::vector<Elem> out;
    Elem cur = zero();
    out.push_back(cur);
    while (true) {
        size_t i = 0;
        while (i < factors.size() && cur[i] == factors[i] - 1)
            cur[i++] = 0;
        if (i == factors.size())
            break;
        ++cur[i];
        out.push_back(cur);
    }
    if (factors.empty())
        out.assign(1, Elem{});
    return out;
}

AbMorphism::AbMorphism(FinAb source, FinAb target, std::vector<std::vector<int64_t>> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    check(matrix_.size() == target_.rank(), errc::schema_error, "AbMorphism row count mismatch");
    for (auto& row : matrix_) {
        check(row.size() == source_.rank(), errc::schema_error, "AbMorphism col count mismatch");
    }
    // Normalize entries mod target factors.
    for (uint32_t r = 0; r < target_.rank(); ++r)
        for (uint32_t c = 0; c < source_.rank(); ++c) {
            matrix_[r][c] %= target_.factors[r];
            if (matrix_[r][c] < 0)
                matrix_[r][c] += target_.factors[r];
        }
    // Well-defined: d_c * column c must vanish in the target.
    for (uint32_t c = 0; c < source_.rank(); ++c)
        for (uint32_t r = 0; r < target_.rank(); ++r)
            check((source_.factors[c] * matrix_[r][c]) % target_.factors[r] == 0,
                  errc::schema_error, "AbMorphism is not well-defined");
}

AbMorphism AbMorphism::zero(FinAb source, FinAb target) {
    std::vector<std::vector<int64_t>> m(target.rank(), std::vector<int64_t>(source.rank(), 0));
    return AbMorphism(std::move(source), std::move(target), std::move(m));
}

AbMorphism AbMorphism::identity(FinAb g) {
    std::vector<std::vector<int64_t>> m(g.rank(), std::vector<int64_t>(g.rank(), 0));
    for (uint32_t i = 0; i < g.rank(); ++i)
        m[i][i] = 1;
    FinAb copy = g;
    return AbMorphism(std::move(copy), std::move(g), std::move(m));
}

FinAb::Elem AbMorphism::apply(const FinAb::Elem& e) const {
    check(e.size() == source_.rank(), errc::schema_error, "element rank mismatch");
    FinAb::Elem out(target_.rank(), 0);
    for (uint32_t r = 0; r < target_.rank(); ++r)
        for (uint32_t c = 0; c < source_.rank(); ++c)
            out[r] += matrix_[r][c] * e[c];
    return target_.reduce(std::move(out));
}

AbMorphism AbMorphism::compose_after(const AbMorphism& first) const {
    check(first.target_ == source_, errc::not_composable, "AbMorphism composition mismatch");
    std::vector<std::vector<int64_t>> m(target_.rank(),
                                        std::vector<int64_t>(first.source_.rank(), 0));
    for (uint32_t r = 0; r < target_.rank(); ++r)
        for (uint32_t c = 0; c < first.source_.rank(); ++c) {
            int64_t acc = 0;
            for (uint32_t k = 0; k < source_.rank(); ++k)
                acc += matrix_[r][k] * first.matrix_[k][c];
            m[r][c] = acc % target_.factors[r];
        }
    return AbMorphism(first.source_, target_, std::move(m));
}

bool AbMorphism::is_zero() const {
    for (const auto& row : matrix_)
        for (auto v : row)
            if (v != 0)
                return false;
    return true;
}

bool AbMorphism::operator==(const AbMorphism& other) const {
    return source_ == other.source_ && target_ == other.target_ && matrix_ == other.matrix_;
}

std::vector<int64_t> CokerData::coords_of(const std::vector<Int>& v) const {
    check(v.size() == gens, errc::schema_error, "coords_of: wrong length");
    std::vector<Int> w = u.apply(v);
    std::vector<int64_t> out;
    out.reserve(positions.size());
    for (size_t t = 0; t < positions.size(); ++t) {
        Int r = w[positions[t]] % structure.factors[t];
        if (r < 0)
            r += structure.factors[t];
        out.push_back(r.get_si());
    }
    return out;
}

std::vector<Int> CokerData::rep_of(uint32_t t) const {
    check(t < positions.size(), errc::schema_error, "rep_of: bad generator");
    std::vector<Int> rep(gens, 0);
    for (uint32_t r = 0; r < gens; ++r)
        rep[r] = uinv.get(r, positions[t]);
    return rep;
}

CokerData cokernel_data(const IntMatrix& relations) {
    SnfResult snf = smith_normal_form(relations);
    CokerData out;
    out.gens = relations.rows();
    out.u = snf.u;
    out.uinv = snf.uinv;
    if (snf.rank < relations.rows())
        fail(errc::infinite_cokernel, "cokernel has free rank " +
                                          std::to_string(relations.rows() - snf.rank));
    for (uint32_t i = 0; i < snf.rank; ++i)
        if (snf.diagonal[i] > 1) {
            out.positions.push_back(i);
            out.structure.factors.push_back(snf.diagonal[i].get_si());
        }
    return out;
}

FinAb cokernel_structure(const IntMatrix& m) { return cokernel_data(m).structure; }

CokerData normalize_cyclic_orders(const std::vector<int64_t>& orders) {
    std::vector<Int> diag;
    diag.reserve(orders.size());
    for (auto o : orders)
        diag.emplace_back(o);
    return cokernel_data(IntMatrix::diagonal(diag));
}

HomGroup hom_group(const FinAb& a, const FinAb& b) {
    HomGroup out;
    out.source = a;
    out.target = b;
    std::vector<int64_t> orders;
    for (uint32_t i = 0; i < a.rank(); ++i)
        for (uint32_t j = 0; j < b.rank(); ++j) {
            const int64_t g = std::gcd(a.factors[i], b.factors[j]);
            if (g > 1) {
                out.raw.push_back({i, j, g});
                orders.push_back(g);
            }
        }
    out.normalization = normalize_cyclic_orders(orders);
    out.structure = out.normalization.structure;
    return out;
}

AbMorphism HomGroup::morphism_of(const std::vector<int64_t>& structure_coords) const {
    // Lift structure coords to raw coords through uinv, then assemble.
    check(structure_coords.size() == structure.rank(), errc::schema_error,
          "hom coords rank mismatch");
    std::vector<int64_t> raw_coords(raw.size(), 0);
    for (uint32_t t = 0; t < structure.rank(); ++t) {
        if (structure_coords[t] == 0)
            continue;
        std::vector<Int> rep = normalization.rep_of(t);
        for (size_t k = 0; k < raw.size(); ++k)
            raw_coords[k] += structure_coords[t] * rep[k].get_si();
    }
    std::vector<std::vector<int64_t>> m(target.rank(), std::vector<int64_t>(source.rank(), 0));
    for (size_t k = 0; k < raw.size(); ++k) {
        const auto& [i, j, g] = raw[k];
        m[j][i] += raw_coords[k] * (target.factors[j] / g);
    }
    return AbMorphism(source, target, std::move(m));
}

std::vector<int64_t> HomGroup::coords_of(const AbMorphism& psi) const {
    check(psi.source() == source && psi.target() == target, errc::schema_error,
          "coords_of: wrong hom space");
    std::vector<Int> raw_coords(raw.size(), 0);
    for (size_t k = 0; k < raw.size(); ++k) {
        const auto& [i, j, g] = raw[k];
        const int64_t step = target.factors[j] / g;
        const int64_t entry = psi.matrix()[j][i];
        check(entry % step == 0, errc::internal, "morphism entry outside the hom lattice");
        raw_coords[k] = (entry / step) % g;
    }
    return normalization.coords_of(raw_coords);
}

ExtGroup ext_group(const FinAb& a, const FinAb& b) {
    ExtGroup out;
    out.source = a;
    out.target = b;
    std::vector<int64_t> orders;
    for (uint32_t i = 0; i < a.rank(); ++i)
        for (uint32_t j = 0; j < b.rank(); ++j) {
            const int64_t g = std::gcd(a.factors[i], b.factors[j]);
            if (g > 1) {
                out.raw.push_back({i, j, g});
                orders.push_back(g);
            }
        }
    out.normalization = normalize_cyclic_orders(orders);
    out.structure = out.normalization.structure;
    return out;
}

AbelianStructure abelian_structure(const Group& q) {
    check(q->is_abelian(), errc::non_abelian_quotient, "group is not abelian");
    AbelianStructure out;
    out.group = q;
    out.gens = generating_set(q);
    const auto m = static_cast<uint32_t>(out.gens.size());

    // BFS word coordinates; valid because q is abelian.
    const uint32_t n = q->order();
    std::vector<std::vector<int64_t>> word(n);
    std::vector<char> seen(n, 0);
    std::vector<uint32_t> order_bfs{0};
    word[0].assign(m, 0);
    seen[0] = 1;
    for (size_t i = 0; i < order_bfs.size(); ++i) {
        const uint32_t e = order_bfs[i];
        for (uint32_t j = 0; j < m; ++j) {
            const uint32_t p = q->mul(e, out.gens[j]);
            if (!seen[p]) {
                seen[p] = 1;
                word[p] = word[e];
                word[p][j] += 1;
                order_bfs.push_back(p);
            }
        }
    }

    // Schreier relations span the kernel lattice of Z^m -> q.
    std::vector<std::vector<int64_t>> rels;
    for (uint32_t e = 0; e < n; ++e)
        for (uint32_t j = 0; j < m; ++j) {
            const uint32_t p = q->mul(e, out.gens[j]);
            std::vector<int64_t> rel(m, 0);
            bool nonzero = false;
            for (uint32_t t = 0; t < m; ++t) {
                rel[t] = word[e][t] + (t == j ? 1 : 0) - word[p][t];
                nonzero = nonzero || rel[t] != 0;
            }
            if (nonzero)
                rels.push_back(std::move(rel));
        }
    IntMatrix r(m, static_cast<uint32_t>(rels.size()));
    for (uint32_t c = 0; c < rels.size(); ++c)
        for (uint32_t t = 0; t < m; ++t)
            r.set(t, c, rels[c][t]);
    CokerData ck = cokernel_data(r);
    check(ck.structure.order() == n, errc::internal, "abelian structure order mismatch");
    out.structure = ck.structure;

    out.coords.resize(n);
    for (uint32_t e = 0; e < n; ++e) {
        std::vector<Int> w(word[e].begin(), word[e].end());
        out.coords[e] = ck.coords_of(w);
    }
    for (uint32_t t = 0; t < ck.structure.rank(); ++t) {
        std::vector<Int> rep = ck.rep_of(t);
        // Evaluate the word rep in the group.
        uint32_t e = 0;
        for (uint32_t j = 0; j < m; ++j) {
            Int c = rep[j] % static_cast<long>(q->element_order(out.gens[j]));
            if (c < 0)
                c += q->element_order(out.gens[j]);
            for (Int s = 0; s < c; ++s)
                e = q->mul(e, out.gens[j]);
        }
        out.reps.push_back(e);
        check(out.coords[e] == ck.coords_of([&] {
                  std::vector<Int> w(word[e].begin(), word[e].end());
                  return w;
              }()),
              errc::internal, "generator representative mismatch");
    }
    return out;
}

std::vector<int64_t> SubquotientData::coords_of_element(uint32_t parent_elem) const {
    check(parent_elem < parent->order() && parent_to_quotient[parent_elem] >= 0,
          errc::not_nested, "element is not in the top subgroup");
    return quotient_coords[static_cast<uint32_t>(parent_to_quotient[parent_elem])];
}

SubquotientData subquotient_structure(const Group& g, const Subgroup& top,
                                      const Subgroup& bottom) {
    check(top.parent() == g && bottom.parent() == g, errc::foreign_subgroup,
          "subquotient arguments must live in the given group");
    check(top.contains_subgroup(bottom), errc::not_nested, "bottom is not contained in top");

    auto top_grp = top.as_group();
    std::vector<uint32_t> bottom_in_top;
    for (auto e : bottom.elements())
        bottom_in_top.push_back(static_cast<uint32_t>(top_grp.from_parent[e]));
    Subgroup bot(top_grp.group, std::move(bottom_in_top));
    check(bot.is_normal(), errc::not_normal, "bottom is not normal in top");
    auto [q, proj] = quotient(top_grp.group, bot);
    check(q->is_abelian(), errc::non_abelian_quotient, "top/bottom is not abelian");

    AbelianStructure abs = abelian_structure(q);

    SubquotientData out(g, top, bottom, q);
    out.structure = abs.structure;
    out.quotient_coords = abs.coords;
    out.parent_to_quotient.assign(g->order(), -1);
    for (auto e : top.elements())
        out.parent_to_quotient[e] =
            static_cast<int32_t>(proj(static_cast<uint32_t>(top_grp.from_parent[e])));
    // Parent elements realizing the quotient generators.
    for (uint32_t t = 0; t < abs.structure.rank(); ++t) {
        const uint32_t q_elem = abs.reps[t];
        uint32_t found = 0;
        for (auto e : top.elements())
            if (out.parent_to_quotient[e] == static_cast<int32_t>(q_elem)) {
                found = e;
                break;
            }
        out.rep_elements.push_back(found);
    }
    for (auto qe : abs.gens) {
        for (auto e : top.elements())
            if (out.parent_to_quotient[e] == static_cast<int32_t>(qe)) {
                out.gen_elements.push_back(e);
                break;
            }
    }
    return out;
}

} // namespace sacat
