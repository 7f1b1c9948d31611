#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "psh/corpus.hpp"
#include "psh/laws.hpp"
#include "psh/monoidal.hpp"

using namespace psh;

TEST_CASE("tensor is the pointwise product over the product base") {
    CatPtr arrow = corpus::walking_arrow();
    auto rs = corpus::enumerate_presheaves(arrow, 2, 4);
    REQUIRE(rs.size() >= 2);
    Presheaf t = tensor(rs[0], rs[1]);
    CHECK(validate(t).empty());
    for (const auto& a : arrow->objects)
        for (const auto& b : arrow->objects)
            CHECK(t.at(pair_label(a, b)).size() == rs[0].at(a).size() * rs[1].at(b).size());

    // Boolean reading: R⊗S = {(a,b) | Ra ∧ Sb}
    CatPtr d2 = corpus::discrete2();
    for (unsigned r = 0; r < 4; ++r)
        for (unsigned s = 0; s < 4; ++s) {
            Presheaf pr = oracle::subset_presheaf(d2, r);
            Presheaf ps = oracle::subset_presheaf(d2, s);
            Presheaf pt = tensor(pr, ps);
            unsigned got = 0;
            std::size_t i = 0;
            for (const auto& o : pt.base->objects) {
                if (!pt.at(o).empty()) got |= 1u << i;
                ++i;
            }
            CHECK(got == oracle::Subsets::tensor(r, s, 2, 2));
        }
}

TEST_CASE("implication is the pointwise function space; |values| = |S|^|R|") {
    CatPtr arrow = corpus::walking_arrow();
    auto rs = corpus::enumerate_presheaves(arrow, 2, 4);
    REQUIRE(rs.size() >= 2);
    Presheaf imp = implication(rs[0], rs[1]);
    CHECK(validate(imp).empty());
    for (const auto& a : arrow->objects)
        for (const auto& b : arrow->objects) {
            std::size_t expect = 1;
            for (std::size_t k = 0; k < rs[0].at(a).size(); ++k) expect *= rs[1].at(b).size();
            if (rs[0].at(a).empty()) expect = 1;
            CHECK(imp.at(pair_label(a, b)).size() == expect);
        }

    // Boolean reading: R⊸S = {(a,b) | Ra ⇒ Sb}
    CatPtr d2 = corpus::discrete2();
    for (unsigned r = 0; r < 4; ++r)
        for (unsigned s = 0; s < 4; ++s) {
            Presheaf pi = implication(oracle::subset_presheaf(d2, r),
                                      oracle::subset_presheaf(d2, s));
            unsigned got = 0;
            std::size_t i = 0;
            for (const auto& o : pi.base->objects) {
                if (!pi.at(o).empty()) got |= 1u << i;
                ++i;
            }
            CHECK(got == oracle::Subsets::imp(r, s, 2, 2));
        }
}

TEST_CASE("the chiral decomposition of implication is strict") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr d2 = corpus::discrete2();
    auto rs = corpus::enumerate_presheaves(arrow, 2, 3);
    auto ss = corpus::enumerate_presheaves(d2, 2, 3);
    for (const auto& r : rs)
        for (const auto& s : ss) {
            Presheaf direct = implication(r, s);
            Presheaf chiral = undual_presheaf(action_owedge(dual_presheaf(s), r));
            CHECK(same_presheaf(direct, chiral));
        }
}

TEST_CASE("law (c): exists distributes over tensor") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr d2 = corpus::discrete2();
    auto ms = corpus::sample_distributors(arrow, d2, 2, 2, 51);
    auto ns = corpus::sample_distributors(d2, arrow, 2, 2, 53);
    auto rs = corpus::enumerate_presheaves(arrow, 2, 2);
    auto ss = corpus::enumerate_presheaves(d2, 2, 2);
    REQUIRE(!ms.empty());
    REQUIRE(!ns.empty());
    for (const auto& r : rs)
        for (const auto& s : ss) CHECK(law_exists_tensor(ms[0], ns[0], r, s).holds);
}

TEST_CASE("law (c) degenerates to the plain pushforward against the unit") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr d2 = corpus::discrete2();
    CatPtr one = corpus::terminal();
    auto ms = corpus::sample_distributors(arrow, d2, 2, 1, 55);
    auto rs = corpus::enumerate_presheaves(arrow, 2, 2);
    REQUIRE(!ms.empty());
    REQUIRE(!rs.empty());
    Presheaf unit = unit_presheaf();
    Distributor idone = identity_dist(one);
    IsoReport rep = law_exists_tensor(ms[0], idone, rs.back(), unit);
    CHECK(rep.holds);
    // both sides are ∃_M R with a dangling unit coordinate
    ExistsResult ex = exists_along(ms[0], rs.back());
    for (const auto& b : d2->objects)
        CHECK(rep.witness.src.at(pair_label(b, "pt")).size() == ex.psh.at(b).size());
}

TEST_CASE("implication into the terminal presheaf is terminal") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr d2 = corpus::discrete2();
    auto rs = corpus::enumerate_presheaves(arrow, 2, 3);
    Presheaf top = terminal_presheaf(d2);
    for (const auto& r : rs) {
        Presheaf imp = implication(r, top);
        for (const auto& [o, v] : imp.values) CHECK(v.size() == 1);
    }
}

TEST_CASE("law (c) in the Boolean world matches the subset identity") {
    CatPtr d2 = corpus::discrete2();
    for (unsigned m = 0; m < 16; m += 3)
        for (unsigned n = 0; n < 16; n += 5)
            for (unsigned r = 0; r < 4; ++r)
                for (unsigned s = 0; s < 4; ++s) {
                    Distributor dm = oracle::subset_dist(d2, d2, m);
                    Distributor dn = oracle::subset_dist(d2, d2, n);
                    CHECK(law_exists_tensor(dm, dn, oracle::subset_presheaf(d2, r),
                                            oracle::subset_presheaf(d2, s))
                              .holds);
                }
}

TEST_CASE("law (d) holds as an iso of joint and pointwise quotients") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr d2 = corpus::discrete2();
    auto ms = corpus::sample_distributors(d2, arrow, 2, 2, 57); // M : C ⇸ A
    auto ns = corpus::sample_distributors(arrow, d2, 2, 2, 59); // N : D ⇸ B
    auto rs = corpus::enumerate_presheaves(arrow, 2, 2, Variance::co);
    auto ss = corpus::enumerate_presheaves(d2, 2, 2, Variance::co);
    REQUIRE(!ms.empty());
    REQUIRE(!ns.empty());
    for (const auto& r : rs)
        for (const auto& s : ss) CHECK(law_d(ms[0], ns[0], r, s).holds);
}

TEST_CASE("forall-vs-multimap and its action reading") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr d2 = corpus::discrete2();
    auto ms = corpus::sample_distributors(arrow, d2, 2, 1, 61);  // M : A ⇸ C
    auto ns = corpus::sample_distributors(d2, arrow, 2, 1, 63);  // N : D ⇸ B
    auto rs = corpus::enumerate_presheaves(arrow, 2, 2);
    auto ss = corpus::enumerate_presheaves(arrow, 2, 2);
    REQUIRE(!ms.empty());
    REQUIRE(!ns.empty());
    const Presheaf& r = rs.back();
    const Presheaf& s = ss.back();
    CHECK(law_forall_multimap(ms[0], ns[0], r, s).holds);
    CHECK(law_d_action(ms[0], ns[0], r, s).holds);
}

TEST_CASE("laws (e) and (f): canonical maps exist; singleton instances are isos") {
    CatPtr one = corpus::terminal();
    // degenerate: every value a singleton makes (e) invertible
    Presheaf every = oracle::subset_presheaf(one, 1);
    Distributor all = oracle::subset_dist(one, one, 1);
    IsoReport rep = law_e(all, all, every, every);
    CHECK(rep.holds);
    IsoReport repf = law_f(all, all, oracle::subset_presheaf(one, 1, Variance::co),
                           oracle::subset_presheaf(one, 1, Variance::co));
    CHECK(repf.holds);
}

TEST_CASE("law (e) has the classic Boolean strict instance") {
    CatPtr one = corpus::terminal();
    // M = {a}, R = {}, N = {}, S = {}: lhs empty, rhs nonempty
    Distributor m = oracle::subset_dist(one, one, 1);
    Distributor n = oracle::subset_dist(one, one, 0);
    Presheaf r = oracle::subset_presheaf(one, 0);
    Presheaf s = oracle::subset_presheaf(one, 0);
    IsoReport rep = law_e(m, n, r, s);
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.failure.has_value());
    CHECK(!rep.failure->reason.empty());
}

TEST_CASE("fiber structure is the usual ccc structure") {
    for (const auto& base : {corpus::walking_arrow(), corpus::parallel_pair()}) {
        auto rs = corpus::enumerate_presheaves(base, 2, 3);
        REQUIRE(rs.size() >= 2);
        const Presheaf& r = rs[rs.size() - 2];
        const Presheaf& s = rs.back();
        CHECK(fiber_and_vs_pointwise(base, r, s).holds);
        CHECK(fiber_top_vs_pointwise(base).holds);
        CHECK(fiber_imp_vs_exponential(base, r, s).holds);
    }
}

TEST_CASE("tensor unit, symmetry, associativity") {
    CatPtr arrow = corpus::walking_arrow();
    auto rs = corpus::enumerate_presheaves(arrow, 2, 3);
    REQUIRE(rs.size() >= 3);
    CHECK(laws::tensor_unit_iso(rs[0]).holds);
    CHECK(tensor_symmetry(rs[0], rs[1]).holds);
    CHECK(laws::tensor_assoc_iso(rs[0], rs[1], rs[2]).holds);
}
