#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "psh/corpus.hpp"
#include "psh/equality.hpp"

using namespace psh;

TEST_CASE("graph of a discrete relation has the raw value tables") {
    CatPtr d2 = corpus::discrete2();
    for (unsigned m = 0; m < 16; m += 7) {
        Distributor dm = oracle::subset_dist(d2, d2, m);
        GraphPredicate g = graph(dm);
        for (const auto& a : d2->objects)
            for (const auto& b : d2->objects)
                CHECK(g.as_presheaf.at(pair_label(a, b)).size() == dm.at(b, a).size());
    }
}

TEST_CASE("graph actions are the distributor actions through the recorded bijection") {
    CatPtr arrow = corpus::walking_arrow();
    auto ms = corpus::sample_distributors(arrow, arrow, 2, 2, 97);
    REQUIRE(!ms.empty());
    for (const auto& m : ms) {
        GraphPredicate g = graph(m);
        CHECK(validate(g.as_presheaf).empty());
        for (const auto& u : arrow->morphisms)
            for (const auto& v : arrow->morphisms) {
                // action of (u_op, v) : value(u.src, v.tgt) -> value(u.tgt, v.src)
                const SetMap& act = g.as_presheaf.action(pair_label(u.name, v.name));
                const SetMap& raw_from = g.raw_to_graph.at({u.src, v.tgt});
                const SetMap& raw_to = g.raw_to_graph.at({u.tgt, v.src});
                for (const auto& me : m.at(v.tgt, u.src).elements) {
                    std::string via_m = raw_to(m.right(v.src, u.name)(m.left(v.name, u.src)(me)));
                    CHECK(act(raw_from(me)) == via_m);
                }
            }
    }
}

TEST_CASE("id_rel is the hom presheaf") {
    for (const auto& base : {corpus::walking_arrow(), corpus::cospan(), corpus::parallel_pair()}) {
        CHECK(id_rel_vs_hom(base).holds);
    }
}

TEST_CASE("id_rel on the walking arrow matches the hom table") {
    CatPtr arrow = corpus::walking_arrow();
    Presheaf idr = id_rel(arrow);
    // value at (a1,a2) is hom(a2,a1)
    CHECK(idr.at(pair_label("0", "0")).size() == 1);
    CHECK(idr.at(pair_label("1", "0")).size() == 1); // hom(0,1) = {f}
    CHECK(idr.at(pair_label("0", "1")).size() == 0); // hom(1,0) = {}
    CHECK(idr.at(pair_label("1", "1")).size() == 1);
}

TEST_CASE("Lawvere identity differs from id_rel on the cospan") {
    CatPtr cosp = corpus::cospan();
    LawvereIdResult law = id_lawvere(cosp);
    CHECK(validate(law.psh).empty());
    // frozen counts: 0 and 1 can be completed to a cospan through 2
    CHECK(law.psh.at(pair_label("0", "1")).size() == 1);
    CHECK(law.psh.at(pair_label("1", "0")).size() == 1);
    CHECK(cosp->hom("0", "1").empty());
    CHECK(cosp->hom("1", "0").empty());
    Presheaf idr = id_rel(cosp);
    CHECK(idr.at(pair_label("0", "1")).empty());
    CHECK(idr.at(pair_label("1", "0")).empty());
    // so the two identity predicates genuinely differ at (0,1)
    CHECK(law.psh.at(pair_label("0", "1")).size() != idr.at(pair_label("0", "1")).size());
}

TEST_CASE("Lawvere identity coincides with id_rel on discrete categories") {
    CatPtr d2 = corpus::discrete2();
    LawvereIdResult law = id_lawvere(d2);
    Presheaf idr = id_rel(d2);
    for (const auto& a : d2->objects)
        for (const auto& b : d2->objects)
            CHECK(law.psh.at(pair_label(a, b)).size() == idr.at(pair_label(a, b)).size());
    // both are the diagonal
    CHECK(law.psh.at(pair_label("0", "0")).size() == 1);
    CHECK(law.psh.at(pair_label("0", "1")).size() == 0);
}

TEST_CASE("Lawvere identity on the terminal category is a singleton") {
    LawvereIdResult law = id_lawvere(corpus::terminal());
    CHECK(law.psh.at(pair_label("pt", "pt")).size() == 1);
}

TEST_CASE("both routes to the Lawvere identity agree") {
    for (const auto& base : {corpus::walking_arrow(), corpus::cospan(), corpus::discrete2()})
        CHECK(id_lawvere_vs_sigma_route(base).holds);
}

TEST_CASE("theorem 3 on corpus samples") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr d2 = corpus::discrete2();
    auto ms = corpus::sample_distributors(arrow, d2, 2, 2, 71);
    auto rs = corpus::enumerate_presheaves(arrow, 2, 2);
    auto ss = corpus::enumerate_presheaves(d2, 2, 2);
    REQUIRE(!ms.empty());
    for (const auto& m : ms) {
        for (const auto& r : rs) CHECK(thm3_push(m, r).holds);
        for (const auto& s : ss) CHECK(thm3_pull(m, s).holds);
    }
}

TEST_CASE("theorem 3 with the identity distributor") {
    CatPtr arrow = corpus::walking_arrow();
    Distributor id = identity_dist(arrow);
    auto rs = corpus::enumerate_presheaves(arrow, 2, 2);
    for (const auto& r : rs) {
        CHECK(thm3_push(id, r).holds);
        CHECK(thm3_pull(id, r).holds);
    }
}

TEST_CASE("theorem 3 on Boolean instances") {
    CatPtr d2 = corpus::discrete2();
    for (unsigned m = 0; m < 16; m += 3)
        for (unsigned r = 0; r < 4; ++r) {
            Distributor dm = oracle::subset_dist(d2, d2, m);
            CHECK(thm3_push(dm, oracle::subset_presheaf(d2, r)).holds);
            CHECK(thm3_pull(dm, oracle::subset_presheaf(d2, r)).holds);
        }
}

TEST_CASE("Yoneda at every object of corpus samples") {
    for (const auto& base : {corpus::walking_arrow(), corpus::cospan(), corpus::parallel_pair()}) {
        auto ss = corpus::enumerate_presheaves(base, 2, 4);
        for (const auto& s : ss)
            for (const auto& o : base->objects) CHECK(yoneda_check(s, o).holds);
        // representables in particular
        for (const auto& o : base->objects) {
            Presheaf rep = representable(base, o);
            for (const auto& o2 : base->objects) CHECK(yoneda_check(rep, o2).holds);
        }
    }
}

TEST_CASE("terminal presheaf satisfies Yoneda trivially") {
    CatPtr arrow = corpus::walking_arrow();
    Presheaf top = terminal_presheaf(arrow);
    for (const auto& o : arrow->objects) CHECK(yoneda_check(top, o).holds);
}
