#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "psh/chirality.hpp"
#include "psh/monoidal.hpp"
#include "psh/corpus.hpp"

using namespace psh;

TEST_CASE("dualization is an involution on presheaves and distributors") {
    CatPtr arrow = corpus::walking_arrow();
    auto rs = corpus::enumerate_presheaves(arrow, 2, 6);
    for (const auto& r : rs) {
        CoPresheaf d = dual_presheaf(r);
        CHECK(d.variance == Variance::co);
        CHECK(validate(d).empty());
        CHECK(same_presheaf(undual_presheaf(d), r));
    }
    auto ms = corpus::sample_distributors(arrow, corpus::discrete2(), 2, 3, 41);
    for (const auto& m : ms) {
        Distributor d = dual_dist(m);
        CHECK(validate(d).empty());
        CHECK(same_distributor(dual_dist(d), m));
    }
}

TEST_CASE("representable presheaf dualizes to the corepresentable one") {
    CatPtr arrow = corpus::walking_arrow();
    Presheaf rep = representable(arrow, "1");
    CoPresheaf d = dual_presheaf(rep);
    // on op(arrow) the dual is hom(1,-) read over reversed arrows
    CoPresheaf corep = corepresentable(d.base, "1");
    CHECK(same_presheaf(d, corep));
}

TEST_CASE("identity distributor is self-dual across opposite") {
    CatPtr arrow = corpus::walking_arrow();
    Distributor id = identity_dist(arrow);
    Distributor dd = dual_dist(id);
    Distributor id_op = identity_dist(share(opposite(*arrow)));
    CHECK(same_distributor(dd, id_op));
}

TEST_CASE("q-side quantifiers agree with the subset oracle") {
    CatPtr a = corpus::discrete2();
    CatPtr b = corpus::discrete2();
    for (unsigned m = 0; m < 16; ++m)
        for (unsigned r = 0; r < 4; ++r) {
            Distributor dm = oracle::subset_dist(a, b, m);
            CoPresheaf pr = oracle::subset_presheaf(a, r, Variance::co);
            // q-side ∃ along M : A ⇸ B is  b ↦ ∀a. M(a,b) ⇒ Ra
            unsigned got = oracle::mask_of(exists_q(dm, pr).psh);
            unsigned expect = 0;
            for (unsigned bb = 0; bb < 2; ++bb) {
                bool all = true;
                for (unsigned aa = 0; aa < 2; ++aa)
                    if ((m >> (aa * 2 + bb)) & 1u && !((r >> aa) & 1u)) all = false;
                if (all) expect |= 1u << bb;
            }
            CHECK(got == expect);

            CoPresheaf ps = oracle::subset_presheaf(b, r, Variance::co);
            // q-side ∀ along M is  a ↦ ∃b. M(a,b) ∧ Sb
            unsigned got2 = oracle::mask_of(forall_q(dm, ps).psh);
            unsigned expect2 = 0;
            for (unsigned aa = 0; aa < 2; ++aa)
                for (unsigned bb = 0; bb < 2; ++bb)
                    if ((m >> (aa * 2 + bb)) & 1u && ((r >> bb) & 1u)) expect2 |= 1u << aa;
            CHECK(got2 == expect2);
        }
}

TEST_CASE("q-side quantifiers equal their chirality conjugates on samples") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr d2 = corpus::discrete2();
    auto ms = corpus::sample_distributors(arrow, d2, 2, 3, 43);
    auto rs_co = corpus::enumerate_presheaves(arrow, 2, 4, Variance::co);
    auto ss_co = corpus::enumerate_presheaves(d2, 2, 4, Variance::co);
    REQUIRE(!ms.empty());
    for (const auto& m : ms) {
        for (const auto& r : rs_co) {
            CoPresheaf direct = exists_q(m, r).psh;
            CoPresheaf conj = dual_presheaf(forall_along(dual_dist(m), undual_presheaf(r)).psh);
            CHECK(same_presheaf(direct, conj));
        }
        for (const auto& s : ss_co) {
            CoPresheaf direct = forall_q(m, s).psh;
            CoPresheaf conj = dual_presheaf(exists_along(dual_dist(m), undual_presheaf(s)).psh);
            CHECK(same_presheaf(direct, conj));
        }
    }
}

TEST_CASE("dualization is strictly monoidal on tensors") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr d2 = corpus::discrete2();
    auto xs = corpus::enumerate_presheaves(arrow, 2, 2, Variance::co);
    auto ys = corpus::enumerate_presheaves(d2, 2, 2, Variance::co);
    for (const auto& x : xs)
        for (const auto& y : ys) {
            Presheaf lhs = undual_presheaf(tensor(x, y));
            Presheaf rhs = tensor(undual_presheaf(x), undual_presheaf(y));
            CHECK(same_presheaf(lhs, rhs));
        }
}

TEST_CASE("laws (a) and (b) hold across the corpus sample") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr par = corpus::parallel_pair();
    for (const auto& tgt : {arrow, par}) {
        auto ms = corpus::sample_distributors(arrow, tgt, 2, 2, 47);
        auto ss = corpus::enumerate_presheaves(tgt, 2, 3);
        auto ss_co = corpus::enumerate_presheaves(tgt, 2, 3, Variance::co);
        for (const auto& m : ms) {
            for (const auto& s : ss) CHECK(law_a(m, s).holds);
            for (const auto& s : ss_co) CHECK(law_b(m, s).holds);
        }
    }
}

TEST_CASE("law (a) specializes to De Morgan on subsets") {
    CatPtr a = corpus::discrete2();
    for (unsigned m = 0; m < 16; ++m)
        for (unsigned s = 0; s < 4; ++s) {
            Distributor dm = oracle::subset_dist(a, a, m);
            Presheaf ps = oracle::subset_presheaf(a, s);
            CHECK(law_a(dm, ps).holds);
            // ∀_M S = ¬∃_{M*}¬S elementwise
            unsigned fa = oracle::mask_of(forall_along(dm, ps).psh);
            unsigned mt = 0; // transpose of m
            for (unsigned x = 0; x < 2; ++x)
                for (unsigned y = 0; y < 2; ++y)
                    if ((m >> (x * 2 + y)) & 1u) mt |= 1u << (y * 2 + x);
            unsigned rhs = 3u & ~oracle::Subsets::exists(mt, 3u & ~s, 2, 2);
            CHECK(fa == rhs);
        }
}
