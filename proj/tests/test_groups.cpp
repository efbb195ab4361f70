#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sacat/dsl.hpp"
#include "sacat/group.hpp"

using namespace sacat;

namespace {

// Oracle: every map source -> target fixing 0, checked directly against the
// homomorphism law. Only usable when |target|^(|source|-1) is small.
uint64_t count_homs_exhaustive(const Group& g, const Group& h) {
    const uint32_t n = g->order(), m = h->order();
    std::vector<uint32_t> f(n, 0);
    uint64_t count = 0;
    while (true) {
        bool hom = true;
        for (uint32_t a = 0; a < n && hom; ++a)
            for (uint32_t b = 0; b < n && hom; ++b)
                hom = f[g->mul(a, b)] == h->mul(f[a], f[b]);
        if (hom)
            ++count;
        uint32_t i = 1;
        while (i < n && f[i] == m - 1)
            f[i++] = 0;
        if (i == n)
            break;
        ++f[i];
    }
    return count;
}

} // namespace

TEST_CASE("from_cayley_table validates and accepts") {
    CHECK(FiniteGroup::from_cayley_table({{0}})->order() == 1);
    auto c2 = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}});
    CHECK(c2->order() == 2);
    CHECK(c2->mul(1, 1) == 0);

    // S3 from the builtin generator matches a 6x6 closure of (0 1 2),(0 1).
    auto s3 = builtin("perm:(0 1 2),(0 1)");
    CHECK(s3->order() == 6);
    std::vector<std::vector<uint32_t>> tbl(6, std::vector<uint32_t>(6));
    for (uint32_t a = 0; a < 6; ++a)
        for (uint32_t b = 0; b < 6; ++b)
            tbl[a][b] = s3->mul(a, b);
    CHECK(FiniteGroup::from_cayley_table(tbl)->order() == 6);

    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}, {1, 2}}), error); // not closed
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{1, 0}, {0, 0}}), error); // no identity
    // Order-5 loop: Latin square with identity and two-sided inverses, every
    // element an involution, hence necessarily non-associative.
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1, 2, 3, 4},
                                                    {1, 0, 4, 2, 3},
                                                    {2, 3, 0, 4, 1},
                                                    {3, 4, 1, 0, 2},
                                                    {4, 2, 3, 1, 0}}),
                    error);
}

TEST_CASE("identity relocation") {
    // C2 written with identity at index 1.
    auto g = FiniteGroup::from_cayley_table({{1, 0}, {0, 1}});
    CHECK(g->mul(0, 0) == 0);
    CHECK(g->mul(1, 1) == 0);
}

TEST_CASE("builtin DSL") {
    auto c4 = builtin("C4");
    CHECK(c4->order() == 4);
    CHECK(c4->element_order(1) == 4);

    auto v4 = builtin("C2xC2");
    CHECK(v4->order() == 4);
    for (uint32_t a = 0; a < 4; ++a)
        CHECK(v4->mul(a, a) == 0); // exponent 2

    auto a5 = builtin("A5");
    CHECK(a5->order() == 60);
    CHECK(center(a5).size() == 1);

    auto a5p = builtin("perm:(0 1 2 3 4),(0 1 2)");
    CHECK(a5p->order() == 60);

    CHECK(builtin("D4")->order() == 8);
    CHECK(builtin("Q8")->order() == 8);
    CHECK(builtin("S4")->order() == 24);

    CHECK_THROWS_AS(builtin("F5"), error);
    CHECK_THROWS_AS(builtin("S7"), error);
    CHECK_THROWS_AS(builtin(""), error);
    CHECK_THROWS_AS(builtin("perm:(0 1"), error);
    CHECK_THROWS_AS(builtin("perm:(0 1 2 3 4 5 6 7 8),(0 1)"), error); // closure 362880 > cap
}

TEST_CASE("named groups validate") {
    for (const char* s : {"C1", "C7", "D3", "D8", "Q8", "S5", "A4", "A5", "C2xC3", "C4xC2"})
        builtin(s)->validate();
}

TEST_CASE("commutator subgroups") {
    auto c4 = builtin("C4");
    CHECK(commutator_subgroup(c4, Subgroup::full(c4), Subgroup::full(c4)).size() == 1);

    auto s3 = builtin("S3");
    auto der = commutator_subgroup(s3, Subgroup::full(s3), Subgroup::full(s3));
    CHECK(der.size() == 3);
    // Oracle: brute-force closure over all 36 commutators.
    std::set<uint32_t> comms;
    for (uint32_t a = 0; a < 6; ++a)
        for (uint32_t b = 0; b < 6; ++b)
            comms.insert(s3->mul(s3->mul(s3->inv(a), s3->inv(b)), s3->mul(a, b)));
    auto oracle = Subgroup::generated(s3, {comms.begin(), comms.end()});
    CHECK(der == oracle);

    auto q8 = builtin("Q8");
    CHECK(commutator_subgroup(q8, center(q8), Subgroup::full(q8)).size() == 1);
}

TEST_CASE("center and quotient") {
    auto q8 = builtin("Q8");
    auto z = center(q8);
    CHECK(z.size() == 2);
    auto [q, proj] = quotient(q8, z);
    CHECK(q->order() == 4);
    CHECK(q->is_abelian());
    for (uint32_t a = 0; a < 4; ++a)
        CHECK(q->mul(a, a) == 0); // exponent 2 => C2xC2
    CHECK(kernel(proj) == z);

    auto c6 = builtin("C6");
    CHECK(center(c6).size() == 6);

    auto s3 = builtin("S3");
    auto a3 = commutator_subgroup(s3, Subgroup::full(s3), Subgroup::full(s3));
    // quotient by a non-normal subgroup must throw
    uint32_t transposition = 0;
    for (uint32_t a = 1; a < 6; ++a)
        if (s3->element_order(a) == 2)
            transposition = a;
    CHECK_THROWS_AS(quotient(s3, Subgroup::generated(s3, {transposition})), error);
    CHECK(quotient(s3, a3).group->order() == 2);
}

TEST_CASE("derived subgroup is the least normal subgroup with abelian quotient") {
    for (const char* s : {"S3", "D4", "Q8", "A4", "D6", "C2xC4"}) {
        auto g = builtin(s);
        auto der = commutator_subgroup(g, Subgroup::full(g), Subgroup::full(g));
        CHECK(der.is_normal());
        CHECK(quotient(g, der).group->is_abelian());
        // Enumerate all normal subgroups via subsets generated by closures of
        // element pairs is costly; instead scan all subgroups generated by
        // <= 2 elements plus der itself, filter normal with abelian quotient.
        for (uint32_t a = 0; a < g->order(); ++a)
            for (uint32_t b = a; b < g->order(); ++b) {
                auto h = Subgroup::generated(g, {a, b});
                if (h.is_normal() && quotient(g, h).group->is_abelian())
                    CHECK(h.contains_subgroup(der));
            }
    }
}

TEST_CASE("enumerate_morphisms") {
    auto c2 = builtin("C2"), c4 = builtin("C4"), c3 = builtin("C3"), s3 = builtin("S3");
    CHECK(enumerate_morphisms(c2, c2).size() == 2);
    CHECK(enumerate_morphisms(c4, c2).size() == 2);
    CHECK(enumerate_morphisms(s3, c3).size() == 1);

    // Agreement with the exhaustive oracle on small pairs.
    CHECK(enumerate_morphisms(c2, c2).size() == count_homs_exhaustive(c2, c2));
    CHECK(enumerate_morphisms(c4, c4).size() == count_homs_exhaustive(c4, c4));
    CHECK(enumerate_morphisms(s3, s3).size() == count_homs_exhaustive(s3, s3));
    auto q8 = builtin("Q8");
    CHECK(enumerate_morphisms(q8, c2).size() == count_homs_exhaustive(q8, c2));
    auto v4 = builtin("C2xC2");
    CHECK(enumerate_morphisms(v4, c4).size() == count_homs_exhaustive(v4, c4));
    CHECK(enumerate_morphisms(c4, v4).size() == count_homs_exhaustive(c4, v4));

    // Constraint pinning: the only hom C4 -> C2 with 1 -> 1 is the surjection.
    MorphismConstraints pin;
    pin.pins = {{1u, 1u}};
    auto surj = enumerate_morphisms(c4, c2, pin);
    REQUIRE(surj.size() == 1);
    CHECK(surj[0](1) == 1);
    CHECK(surj[0].is_surjective());

    // Deterministic order: two runs agree.
    auto r1 = enumerate_morphisms(v4, v4);
    auto r2 = enumerate_morphisms(v4, v4);
    REQUIRE(r1.size() == r2.size());
    for (size_t i = 0; i < r1.size(); ++i)
        CHECK(r1[i].map() == r2[i].map());
}

TEST_CASE("quotient-kernel round trip") {
    for (const char* s : {"C4", "Q8", "D4", "S3", "C2xC4"}) {
        auto g = builtin(s);
        auto z = center(g);
        if (z.size() < g->order()) {
            auto [q, proj] = quotient(g, z);
            CHECK(kernel(proj) == z);
            CHECK(image(proj).size() == q->order());
        }
    }
}

TEST_CASE("direct product layout") {
    auto c2 = builtin("C2"), c3 = builtin("C3");
    auto g = direct_product(c2, c3);
    CHECK(g->order() == 6);
    // (g,h) -> g*|H|+h: element (1,2) has index 5, (1,0) has index 3.
    CHECK(g->mul(3, 2) == 5);
    CHECK(g->element_order(5) == 6);
}

TEST_CASE("generating sets are greedy and small") {
    auto v4 = builtin("C2xC2");
    auto gens = generating_set(v4);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == 1);
    auto a5 = builtin("A5");
    CHECK(generating_set(a5).size() <= 3);
}
