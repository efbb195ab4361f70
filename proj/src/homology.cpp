#include "sacat/homology.hpp"

#include <algorithm>

#include "sacat/modp.hpp"

namespace sacat {

uint32_t H1Result::rep_of(uint32_t t) const {
    const uint32_t target = abs.reps[t];
    for (uint32_t y = 0; y < group->order(); ++y)
        if (projection(y) == target)
            return y;
    fail(errc::internal, "projection is not surjective");
}

H1Result h1(const Group& y) {
    auto der = commutator_subgroup(y, Subgroup::full(y), Subgroup::full(y));
    auto [ab, proj] = quotient(y, der);
    AbelianStructure abs = abelian_structure(ab);
    return H1Result{abs.structure, y, ab, std::move(proj), std::move(abs)};
}

namespace {

/// Builds the d2 matrix alone; h2 never materializes the full d3.
IntMatrix build_d2(const Group& y) {
    const uint32_t n = y->order();
    const uint32_t m1 = n - 1, m2 = m1 * m1;
    IntMatrix d2(m1, m2);
    for (uint32_t a = 1; a < n; ++a)
        for (uint32_t b = 1; b < n; ++b) {
            const uint32_t col = (a - 1) * m1 + (b - 1);
            d2_column(y, a, b, [&](uint32_t row, int c) { d2.add(row, col, c); });
        }
    return d2;
}

/// Streams the d3 columns whose first entry runs over a generating set. By
/// the coboundary identity these integrally span the full image of d3, which
/// cuts the column count from (n-1)^3 to |S| (n-1)^2.
template <typename F> void stream_generator_triples(const Group& y, F&& feed) {
    const uint32_t n = y->order();
    std::vector<std::pair<uint32_t, int32_t>> col;
    for (uint32_t s : generating_set(y))
        for (uint32_t b = 1; b < n; ++b)
            for (uint32_t c = 1; c < n; ++c) {
                col.clear();
                d3_column(y, s, b, c,
                          [&](uint32_t row, int coeff) { col.push_back({row, coeff}); });
                feed(col);
            }
}

} // namespace

HomologyGroup h2(const Group& y, uint32_t cap) {
    const uint32_t n = y->order();
    check(n <= cap, errc::order_cap_exceeded,
          "certified homology cap " + std::to_string(cap) + " exceeded by order " +
              std::to_string(n));
    HomologyGroup out;
    out.group = y;
    out.certified = true;
    if (n == 1)
        return out;

    const uint32_t m2 = (n - 1) * (n - 1);
    out.m2 = m2;

    SnfResult s2 = smith_normal_form(build_d2(y));
    out.rank_d2 = s2.rank;
    out.vinv2 = s2.vinv;
    const uint32_t z = m2 - s2.rank;

    // Kernel basis of d2: columns of V past the rank.
    out.kernel_basis = IntMatrix(m2, z);
    for (uint32_t r = 0; r < m2; ++r)
        for (const auto& [c, v] : s2.v.row(r))
            if (c >= s2.rank)
                out.kernel_basis.set(r, c - s2.rank, v);

    // Express the image of d3 in kernel coordinates: rows >= rank of vinv*d3.
    IntMatrix vinv_t = s2.vinv.transpose();
    const uint32_t gens = static_cast<uint32_t>(generating_set(y).size());
    IntMatrix x(z, gens * m2);
    uint32_t colno = 0;
    stream_generator_triples(y, [&](const std::vector<std::pair<uint32_t, int32_t>>& col) {
        std::map<uint32_t, Int> acc;
        for (const auto& [prow, coeff] : col)
            for (const auto& [i, v] : vinv_t.row(prow))
                acc[i] += coeff * v;
        for (const auto& [i, v] : acc) {
            if (v == 0)
                continue;
            check(i >= s2.rank, errc::internal, "d3 image escapes the kernel of d2");
            x.set(i - s2.rank, colno, v);
        }
        ++colno;
    });

    out.coker = cokernel_data(x); // throws infinite_cokernel on a free part
    out.structure = out.coker.structure;

    for (uint32_t t = 0; t < out.structure.rank(); ++t) {
        std::vector<Int> kc = out.coker.rep_of(t);
        std::map<uint32_t, Int> rep;
        for (uint32_t r = 0; r < m2; ++r) {
            Int acc = 0;
            for (const auto& [c, v] : out.kernel_basis.row(r))
                acc += v * kc[c];
            if (acc != 0)
                rep[r] = acc;
        }
        // Sanity: representative is a cycle.
        std::map<uint32_t, Int> dw;
        for (const auto& [pidx, v] : rep) {
            auto [px, py] = seg.pair_of(pidx);
            d2_column(y, px, py, [&, vv = v](uint32_t row, int coeff) { dw[row] += coeff * vv; });
        }
        for (const auto& [row, dv] : dw)
            check(dv == 0, errc::internal, "representative is not a cycle");
        out.cycle_reps.push_back(std::move(rep));
    }
    return out;
}

std::vector<int64_t> HomologyGroup::class_of_cycle(const std::map<uint32_t, Int>& w) const {
    check(certified, errc::internal, "cycle classes need the certified path");
    std::vector<Int> dense(m2, 0);
    for (const auto& [c, v] : w)
        dense[c] = v;
    std::vector<Int> g = vinv2.apply(dense);
    for (uint32_t i = 0; i < rank_d2; ++i)
        check(g[i] == 0, errc::not_a_cycle, "vector is not in the kernel of d2");
    std::vector<Int> kcoords(g.begin() + rank_d2, g.end());
    return coker.coords_of(kcoords);
}

HomologyGroup h2_uncertified(const Group& y, uint32_t cap) {
    const uint32_t n = y->order();
    check(n <= cap, errc::order_cap_exceeded,
          "mod-p homology cap " + std::to_string(cap) + " exceeded by order " + std::to_string(n));
    HomologyGroup out;
    out.group = y;
    out.certified = false;
    if (n == 1)
        return out;

    const uint32_t m1 = n - 1, m2 = m1 * m1;

    // Certified rank of d2 by integer SNF; gives the kernel dimension z and
    // with it the total elementary divisor count of d3.
    const uint32_t z = m2 - smith_normal_form(build_d2(y)).rank;

    std::vector<uint32_t> primes;
    {
        uint32_t m = n;
        for (uint32_t p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                primes.push_back(p);
                while (m % p == 0)
                    m /= p;
            }
        if (m > 1)
            primes.push_back(m);
    }

    std::vector<int64_t> orders;
    for (uint32_t p : primes) {
        uint32_t v = 0;
        for (uint32_t m = n; m % p == 0; m /= p)
            ++v;

        auto stream = [&](auto&& feed) { stream_generator_triples(y, feed); };

        // Layer counts n_0..n_{v-1}; the count at valuation v is inferred
        // from the certified kernel dimension, since every elementary
        // divisor of d3 divides the group order.
        std::vector<uint32_t> layers;
        if (v == 1 && p == 2) {
            EchelonF2 e(m2);
            stream([&](const std::vector<std::pair<uint32_t, int32_t>>& entries) {
                std::vector<uint32_t> ones;
                for (const auto& [c, coeff] : entries)
                    if (coeff % 2)
                        ones.push_back(c);
                e.add_sparse(ones);
            });
            layers = {e.rank()};
        } else if (v == 1) {
            EchelonModP e(m2, p);
            stream([&](const std::vector<std::pair<uint32_t, int32_t>>& entries) {
                e.add_sparse(entries);
            });
            layers = {e.rank()};
        } else if (v == 2 && p == 2) {
            LayeredMod4 e(m2);
            stream([&](const std::vector<std::pair<uint32_t, int32_t>>& entries) {
                e.add_sparse(entries);
            });
            auto [n0, n1] = e.finish();
            layers = {n0, n1};
        } else {
            LayeredModPK e(m2, p, v);
            stream([&](const std::vector<std::pair<uint32_t, int32_t>>& entries) {
                e.add_sparse(entries);
            });
            layers = e.finish();
        }

        uint32_t total = 0;
        for (uint32_t j = 0; j < layers.size(); ++j)
            total += layers[j];
        check(total <= z, errc::internal, "mod-p layer counts exceed the kernel dimension");
        for (uint32_t j = 1; j < layers.size(); ++j) {
            int64_t pj = 1;
            for (uint32_t i = 0; i < j; ++i)
                pj *= p;
            for (uint32_t i = 0; i < layers[j]; ++i)
                orders.push_back(pj);
        }
        int64_t ptop = 1;
        for (uint32_t i = 0; i < v; ++i)
            ptop *= p;
        for (uint32_t i = 0; i < z - total; ++i)
            orders.push_back(ptop);
    }
    out.structure = normalize_cyclic_orders(orders).structure;
    return out;
}

AbMorphism induced_h1(const GroupMorphism& f, const H1Result& src, const H1Result& dst) {
    check(f.source() == src.group && f.target() == dst.group, errc::not_composable,
          "induced_h1: morphism does not match the homology data");
    std::vector<std::vector<int64_t>> m(dst.structure.rank(),
                                        std::vector<int64_t>(src.structure.rank(), 0));
    for (uint32_t t = 0; t < src.structure.rank(); ++t) {
        const uint32_t yrep = src.rep_of(t);
        auto col = dst.coords_of(f(yrep));
        for (uint32_t r = 0; r < dst.structure.rank(); ++r)
            m[r][t] = col[r];
    }
    return AbMorphism(src.structure, dst.structure, std::move(m));
}

AbMorphism induced_h2(const GroupMorphism& f, const HomologyGroup& src, const HomologyGroup& dst) {
    check(f.source() == src.group && f.target() == dst.group, errc::not_composable,
          "induced_h2: morphism does not match the homology data");
    const uint32_t nh = dst.group->order();
    std::vector<std::vector<int64_t>> m(dst.structure.rank(),
                                        std::vector<int64_t>(src.structure.rank(), 0));
    for (uint32_t t = 0; t < src.structure.rank(); ++t) {
        // Chain map on pairs, dropping degenerate images.
        std::map<uint32_t, Int> img;
        for (const auto& [pidx, v] : src.cycle_reps[t]) {
            const uint32_t x = pidx / (src.group->order() - 1) + 1;
            const uint32_t yy = pidx % (src.group->order() - 1) + 1;
            const uint32_t fx = f(x), fy = f(yy);
            if (fx == 0 || fy == 0)
                continue;
            const uint32_t q = (fx - 1) * (nh - 1) + (fy - 1);
            img[q] += v;
            if (img[q] == 0)
                img.erase(q);
        }
        auto col = dst.class_of_cycle(img);
        for (uint32_t r = 0; r < dst.structure.rank(); ++r)
            m[r][t] = col[r];
    }
    return AbMorphism(src.structure, dst.structure, std::move(m));
}

std::vector<uint32_t> minimal_section(const GroupMorphism& f) {
    check(f.is_surjective(), errc::not_surjective, "section of a non-surjection");
    std::vector<uint32_t> s(f.target()->order(), UINT32_MAX);
    for (uint32_t x = 0; x < f.source()->order(); ++x)
        if (x < s[f(x)])
            s[f(x)] = x;
    return s; // s[0] = 0 because f(0) = 0 and 0 is minimal
}

AbMorphism homology_transgression(const GroupMorphism& f, const HomologyGroup& h2y,
                                  const SubquotientData& k_mod_kx,
                                  const std::vector<uint32_t>* section) {
    check(f.target() == h2y.group, errc::not_composable, "transgression: base group mismatch");
    const auto& x_grp = f.source();
    std::vector<uint32_t> s = section ? *section : minimal_section(f);
    check(s.size() == f.target()->order() && s[0] == 0, errc::schema_error, "bad section");
    for (uint32_t yv = 0; yv < s.size(); ++yv)
        check(f(s[yv]) == yv, errc::schema_error, "section does not split the projection");

    const FinAb& tgt = k_mod_kx.structure;
    const uint32_t ny = h2y.group->order();
    std::vector<std::vector<int64_t>> m(tgt.rank(), std::vector<int64_t>(h2y.structure.rank(), 0));
    for (uint32_t t = 0; t < h2y.structure.rank(); ++t) {
        FinAb::Elem acc = tgt.zero();
        for (const auto& [pidx, v] : h2y.cycle_reps[t]) {
            const uint32_t ya = pidx / (ny - 1) + 1;
            const uint32_t yb = pidx % (ny - 1) + 1;
            // s(a) s(b) s(ab)^{-1} lies in the kernel of f.
            const uint32_t tau =
                x_grp->mul(x_grp->mul(s[ya], s[yb]), x_grp->inv(s[h2y.group->mul(ya, yb)]));
            check(f(tau) == 0, errc::internal, "section defect escaped the kernel");
            auto coords = k_mod_kx.coords_of_element(tau);
            // v may be a large integer; reduce per factor.
            FinAb::Elem scaled(tgt.rank(), 0);
            for (uint32_t r = 0; r < tgt.rank(); ++r) {
                Int rv = (v % tgt.factors[r]) * coords[r];
                Int red = rv % tgt.factors[r];
                if (red < 0)
                    red += tgt.factors[r];
                scaled[r] = red.get_si();
            }
            acc = tgt.add(acc, scaled);
        }
        for (uint32_t r = 0; r < tgt.rank(); ++r)
            m[r][t] = acc[r];
    }
    return AbMorphism(h2y.structure, tgt, std::move(m));
}

} // namespace sacat
