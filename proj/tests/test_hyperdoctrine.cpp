#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "psh/corpus.hpp"
#include "psh/hyperdoctrine.hpp"

using namespace psh;

TEST_CASE("embeddings of the identity functor are the identity distributor") {
    CatPtr arrow = corpus::walking_arrow();
    Functor id = identity_functor(arrow);
    CHECK(same_distributor(emb_plus(id), identity_dist(arrow)));
    CHECK(same_distributor(emb_minus(id), identity_dist(arrow)));
}

TEST_CASE("embedding of the terminal functor is a row of singletons") {
    CatPtr arrow = corpus::walking_arrow();
    Functor bang = bang_functor(arrow);
    Distributor d = emb_minus(bang);
    for (const auto& a : arrow->objects) CHECK(d.at(a, "pt").size() == 1);
}

TEST_CASE("embeddings compose up to canonical iso") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr cosp = corpus::cospan();
    auto fs = corpus::enumerate_functors(arrow, cosp, 4);
    auto gs = corpus::enumerate_functors(cosp, arrow, 4);
    REQUIRE(!fs.empty());
    REQUIRE(!gs.empty());
    for (const auto& f : fs)
        for (const auto& g : gs) {
            CHECK(emb_plus_compose_iso(f, g).holds);
            CHECK(emb_minus_compose_iso(f, g).holds);
        }
}

TEST_CASE("sigma, pi and subst with the identity functor are the identity") {
    CatPtr arrow = corpus::walking_arrow();
    Functor id = identity_functor(arrow);
    auto rs = corpus::enumerate_presheaves(arrow, 2, 3);
    for (const auto& r : rs) {
        CHECK(same_presheaf(subst(id, r), r));
        SigmaResult sg = sigma(id, r);
        for (const auto& o : arrow->objects) CHECK(sg.psh.at(o).size() == r.at(o).size());
        PiResult pr = pi(id, r);
        for (const auto& o : arrow->objects) CHECK(pr.psh.at(o).size() == r.at(o).size());
    }
}

TEST_CASE("subst along an object functor is evaluation at the object") {
    CatPtr arrow = corpus::walking_arrow();
    auto rs = corpus::enumerate_presheaves(arrow, 2, 3);
    for (const auto& r : rs)
        for (const auto& o : arrow->objects) {
            Functor at = object_functor(arrow, o);
            Presheaf v = subst(at, r);
            CHECK(v.at("pt").size() == r.at(o).size());
        }
}

TEST_CASE("reconstruction: the four canonical isos") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr cosp = corpus::cospan();
    auto fs = corpus::enumerate_functors(arrow, cosp, 6);
    auto rs = corpus::enumerate_presheaves(arrow, 2, 2);
    auto ss = corpus::enumerate_presheaves(cosp, 2, 2);
    REQUIRE(!fs.empty());
    REQUIRE(!rs.empty());
    REQUIRE(!ss.empty());
    for (const auto& f : fs) {
        ReconstructionReport rep = reconstruction_check(f, rs.back(), ss.back());
        CHECK(rep.sigma_vs_exists.holds);
        CHECK(rep.subst_vs_forall.holds);
        CHECK(rep.exists_vs_subst.holds);
        CHECK(rep.pi_vs_forall.holds);
    }
}

TEST_CASE("reconstruction agrees with the subset oracle on discrete instances") {
    CatPtr d2 = corpus::discrete2();
    auto fs = corpus::enumerate_functors(d2, d2, 10);
    for (const auto& f : fs)
        for (unsigned r = 0; r < 4; ++r) {
            Presheaf pr = oracle::subset_presheaf(d2, r);
            // Σ_f R = {b | ∃a. fa=b ∧ Ra} and Π_f R = {b | ∀a. fa=b ⇒ Ra}
            unsigned mf = 0;
            std::size_t ai = 0;
            for (const auto& a : d2->objects) {
                std::size_t bi = 0;
                for (const auto& b : d2->objects) {
                    if (f.ob(a) == b) mf |= 1u << (ai * 2 + bi);
                    ++bi;
                }
                ++ai;
            }
            unsigned sg = oracle::mask_of(sigma(f, pr).psh);
            CHECK(sg == oracle::Subsets::exists(mf, r, 2, 2));
            unsigned pi_mask = oracle::mask_of(pi(f, pr).psh);
            unsigned expect = 0;
            for (unsigned b = 0; b < 2; ++b) {
                bool all = true;
                for (unsigned a = 0; a < 2; ++a)
                    if ((mf >> (a * 2 + b)) & 1u && !((r >> a) & 1u)) all = false;
                if (all) expect |= 1u << b;
            }
            CHECK(pi_mask == expect);
        }
}

TEST_CASE("comonoid laws hold for the named categories") {
    for (const auto& base :
         {corpus::terminal(), corpus::discrete2(), corpus::walking_arrow()}) {
        ComonoidLawReport rep = comonoid_laws(base);
        CHECK(rep.left_unit.holds);
        CHECK(rep.right_unit.holds);
        CHECK(rep.assoc.holds);
    }
}

TEST_CASE("push and pull along the diagonal both give the pointwise product") {
    CatPtr arrow = corpus::walking_arrow();
    auto rs = corpus::enumerate_presheaves(arrow, 2, 3);
    REQUIRE(rs.size() >= 2);
    auto [push_rep, pull_rep] = comonoid_pushpull_iso(arrow, rs[0], rs[1]);
    CHECK(push_rep.holds);
    CHECK(pull_rep.holds);
}
