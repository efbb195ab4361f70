#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "sacat/dsl.hpp"
#include "sacat/homology.hpp"

using namespace sacat;

namespace {

// Independent oracle for abelian Y: |H2| equals the order of the exterior
// square, prod over i<j of gcd(d_i, d_j).
uint64_t exterior_square_order(const FinAb& a) {
    uint64_t o = 1;
    for (uint32_t i = 0; i < a.rank(); ++i)
        for (uint32_t j = i + 1; j < a.rank(); ++j)
            o *= static_cast<uint64_t>(std::gcd(a.factors[i], a.factors[j]));
    return o;
}

} // namespace

TEST_CASE("h1 matches abelianization") {
    CHECK(h1(builtin("C4")).structure.factors == std::vector<int64_t>{4});
    CHECK(h1(builtin("S3")).structure.factors == std::vector<int64_t>{2});
    CHECK(h1(builtin("A5")).structure.is_zero());
    CHECK(h1(builtin("Q8")).structure.factors == std::vector<int64_t>{2, 2});
    CHECK(h1(builtin("D4")).structure.factors == std::vector<int64_t>{2, 2});
    CHECK(h1(builtin("A4")).structure.factors == std::vector<int64_t>{3});
}

TEST_CASE("h1 cross-check: cokernel of bar d2 equals the commutator quotient") {
    for (const char* s : {"C6", "S3", "D4", "Q8", "C2xC4", "A4"}) {
        auto g = builtin(s);
        BarSegment seg = bar_segment(g);
        CHECK(cokernel_structure(seg.d2) == h1(g).structure);
    }
}

TEST_CASE("h2 on small groups") {
    CHECK(h2(builtin("C2")).structure.is_zero());
    CHECK(h2(builtin("C4")).structure.is_zero());
    CHECK(h2(builtin("C2xC2")).structure.factors == std::vector<int64_t>{2});
    CHECK(h2(builtin("D4")).structure.factors == std::vector<int64_t>{2});
    CHECK(h2(builtin("Q8")).structure.is_zero());
    CHECK(h2(builtin("S3")).structure.is_zero());
    CHECK(h2(builtin("A4")).structure.factors == std::vector<int64_t>{2});
    CHECK(h2(builtin("C2xC2xC2")).structure.order() == 8);
    CHECK_THROWS_AS(h2(builtin("S4"), 16), error); // cap
}

TEST_CASE("h2 of abelian groups matches the exterior square oracle") {
    for (const char* s : {"C2", "C6", "C2xC2", "C2xC4", "C3xC3", "C4xC4", "C2xC6", "C2xC2xC2"}) {
        auto g = builtin(s);
        auto st = abelian_structure(g).structure;
        CHECK(h2(g).structure.order() == exterior_square_order(st));
    }
}

TEST_CASE("cycle representatives map to distinct generator classes") {
    auto g = builtin("C2xC2");
    auto h = h2(g);
    REQUIRE(h.structure.rank() == 1);
    auto coords = h.class_of_cycle(h.cycle_reps[0]);
    CHECK(coords == std::vector<int64_t>{1});
}

TEST_CASE("induced maps on h1") {
    auto c4 = builtin("C4"), c2 = builtin("C2");
    auto h4 = h1(c4), hc2 = h1(c2);

    // identity
    auto s3 = builtin("S3");
    auto hs3 = h1(s3);
    auto idm = induced_h1(GroupMorphism::identity(s3), hs3, hs3);
    CHECK(idm == AbMorphism::identity(hs3.structure));

    // surjection C4 ->> C2: reduce mod 2
    std::vector<uint32_t> smap = {0, 1, 0, 1};
    GroupMorphism surj(c4, c2, smap);
    auto m = induced_h1(surj, h4, hc2);
    CHECK(m.apply({1}) == FinAb::Elem{1});

    // inclusion C2 -> C4 hits the order-2 element
    std::vector<uint32_t> imap = {0, 2};
    GroupMorphism incl(c2, c4, imap);
    auto mi = induced_h1(incl, hc2, h4);
    auto img = mi.apply({1});
    CHECK(h4.structure.smul(2, img) == h4.structure.zero());
    CHECK_FALSE(h4.structure.is_zero_elem(img));
}

TEST_CASE("h2 functoriality on identity and composition") {
    auto v4 = builtin("C2xC2");
    auto h = h2(v4);
    auto idm = induced_h2(GroupMorphism::identity(v4), h, h);
    CHECK(idm == AbMorphism::identity(h.structure));

    // An automorphism of V4 swapping the generators, squared = composite.
    std::vector<uint32_t> swap_map = {0, 2, 1, 3};
    GroupMorphism a(v4, v4, swap_map);
    auto ma = induced_h2(a, h, h);
    auto maa = ma.compose_after(ma);
    CHECK(maa == induced_h2(a.compose_after(a), h, h));
}

TEST_CASE("uncertified mod-p path agrees with the certified path") {
    for (const char* s : {"C2xC2", "D4", "Q8", "S3", "C2xC4", "A4", "C3xC3", "D6"}) {
        auto g = builtin(s);
        CHECK(h2_uncertified(g).structure == h2(g).structure);
    }
}

TEST_CASE("transgression for Q8 over V4") {
    auto q8 = builtin("Q8");
    auto z = center(q8);
    auto [v4, proj] = quotient(q8, z);
    auto hv4 = h2(v4);
    REQUIRE(hv4.structure.factors == std::vector<int64_t>{2});

    // K/[K,X] with K = center: [K,X] is trivial.
    auto kx = commutator_subgroup(q8, z, Subgroup::full(q8));
    REQUIRE(kx.size() == 1);
    auto sq = subquotient_structure(q8, z, kx);
    REQUIRE(sq.structure.factors == std::vector<int64_t>{2});

    auto tg = homology_transgression(proj, hv4, sq);
    // Isomorphism C2 -> C2.
    CHECK(tg.apply({1}) == FinAb::Elem{1});

    // Independence from the section: try several deterministic variants.
    auto base = minimal_section(proj);
    for (uint32_t variant = 1; variant <= 20; ++variant) {
        auto s = base;
        uint64_t st = variant * 2654435761u;
        for (uint32_t yv = 1; yv < s.size(); ++yv) {
            // walk the fiber deterministically
            std::vector<uint32_t> fiber;
            for (uint32_t x = 0; x < q8->order(); ++x)
                if (proj(x) == yv)
                    fiber.push_back(x);
            st = st * 6364136223846793005ull + 1442695040888963407ull;
            s[yv] = fiber[(st >> 33) % fiber.size()];
        }
        auto tg2 = homology_transgression(proj, hv4, sq, &s);
        CHECK(tg2 == tg);
    }
}

TEST_CASE("transgression with zero source is zero") {
    auto c4 = builtin("C4"), c2 = builtin("C2");
    std::vector<uint32_t> smap = {0, 1, 0, 1};
    GroupMorphism proj(c4, c2, smap);
    auto hc2 = h2(c2);
    CHECK(hc2.structure.is_zero());
    auto k = kernel(proj);
    auto kx = commutator_subgroup(c4, k, Subgroup::full(c4));
    auto sq = subquotient_structure(c4, k, kx);
    auto tg = homology_transgression(proj, hc2, sq);
    CHECK(tg.is_zero());
}
