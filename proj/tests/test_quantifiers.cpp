#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "psh/corpus.hpp"
#include "psh/hyperdoctrine.hpp"
#include "psh/quantifiers.hpp"

using namespace psh;

namespace {

// the running example: R(0)={p}, R(1)={q,q'}, R(f) constant p
Presheaf sample_r(CatPtr arrow) {
    Presheaf r;
    r.name = "R";
    r.base = arrow;
    r.variance = Variance::contra;
    r.values["0"] = FinSet("R0", {"p"});
    r.values["1"] = FinSet("R1", {"q", "qq"});
    r.actions["id_0"] = SetMap::identity(r.values["0"]);
    r.actions["id_1"] = SetMap::identity(r.values["1"]);
    r.actions["f"] = SetMap(r.values["1"], r.values["0"], {{"q", "p"}, {"qq", "p"}});
    return r;
}

} // namespace

TEST_CASE("coend of the identity integrand collapses to R (frozen counts)") {
    CatPtr arrow = corpus::walking_arrow();
    Presheaf r = sample_r(arrow);
    REQUIRE(validate(r).empty());
    ExistsResult ex = exists_along(identity_dist(arrow), r);
    // brute-force expectation: 3 items at 0 glued into 1 class, 2 items at 1
    CHECK(ex.psh.at("0").size() == 1);
    CHECK(ex.psh.at("1").size() == 2);

    // cross-check the quotient against the naive fixed-point oracle at object 0
    // items: (a=0,id_0,p), (a=1,f,q), (a=1,f,qq); relations glue everything
    std::vector<std::pair<std::size_t, std::size_t>> rel = {{0, 1}, {0, 2}};
    CHECK(oracle::naive_class_count(3, rel) == 1);

    IsoReport rep = check_iso(ex.psh, r, coyoneda_map(ex, r));
    CHECK(rep.holds);
}

TEST_CASE("end over the identity integrand recovers S (frozen counts)") {
    CatPtr arrow = corpus::walking_arrow();
    Presheaf s;
    s.name = "S";
    s.base = arrow;
    s.variance = Variance::contra;
    s.values["0"] = FinSet("S0", {"s"});
    s.values["1"] = FinSet("S1", {"t", "tt"});
    s.actions["id_0"] = SetMap::identity(s.values["0"]);
    s.actions["id_1"] = SetMap::identity(s.values["1"]);
    s.actions["f"] = SetMap(s.values["1"], s.values["0"], {{"t", "s"}, {"tt", "s"}});
    REQUIRE(validate(s).empty());

    ForallResult fa = forall_along(identity_dist(arrow), s);
    CHECK(fa.psh.at("0").size() == 1);
    CHECK(fa.psh.at("1").size() == 2);
    IsoReport rep = check_iso(s, fa.psh, yoneda_unit(s, fa));
    CHECK(rep.holds);
}

TEST_CASE("discrete exists: disjoint union of products") {
    // A={x,y}, B={z}, M(z,x)={m}, M(z,y)={}, R(x)={r1,r2}, R(y)={s}: |∃(z)| = 2
    CatPtr a = share(make_category("A", {"x", "y"}, {}, {}));
    CatPtr b = share(make_category("B", {"z"}, {}, {}));
    Distributor m;
    m.name = "M";
    m.src = a;
    m.tgt = b;
    m.values[{"z", "x"}] = FinSet("zx", {"m"});
    m.values[{"z", "y"}] = FinSet("zy", {});
    m.left_action[{"id_z", "x"}] = SetMap::identity(m.values[{"z", "x"}]);
    m.left_action[{"id_z", "y"}] = SetMap::identity(m.values[{"z", "y"}]);
    m.right_action[{"z", "id_x"}] = SetMap::identity(m.values[{"z", "x"}]);
    m.right_action[{"z", "id_y"}] = SetMap::identity(m.values[{"z", "y"}]);
    REQUIRE(validate(m).empty());

    Presheaf r;
    r.name = "R";
    r.base = a;
    r.variance = Variance::contra;
    r.values["x"] = FinSet("Rx", {"r1", "r2"});
    r.values["y"] = FinSet("Ry", {"s"});
    r.actions["id_x"] = SetMap::identity(r.values["x"]);
    r.actions["id_y"] = SetMap::identity(r.values["y"]);
    CHECK(exists_along(m, r).psh.at("z").size() == 2);
}

TEST_CASE("discrete forall: function-space counting") {
    // A={a1,a2}, B={b}, M(b,a1)={•}, M(b,a2)={}, S(b)={s1,s2}: |∀(a1)|=2, |∀(a2)|=1
    CatPtr a = share(make_category("A", {"a1", "a2"}, {}, {}));
    CatPtr b = share(make_category("B", {"b"}, {}, {}));
    Distributor m;
    m.name = "M";
    m.src = a;
    m.tgt = b;
    m.values[{"b", "a1"}] = FinSet("ba1", {"dot"});
    m.values[{"b", "a2"}] = FinSet("ba2", {});
    m.left_action[{"id_b", "a1"}] = SetMap::identity(m.values[{"b", "a1"}]);
    m.left_action[{"id_b", "a2"}] = SetMap::identity(m.values[{"b", "a2"}]);
    m.right_action[{"b", "id_a1"}] = SetMap::identity(m.values[{"b", "a1"}]);
    m.right_action[{"b", "id_a2"}] = SetMap::identity(m.values[{"b", "a2"}]);
    Presheaf s;
    s.name = "S";
    s.base = b;
    s.variance = Variance::contra;
    s.values["b"] = FinSet("Sb", {"s1", "s2"});
    s.actions["id_b"] = SetMap::identity(s.values["b"]);

    ForallResult fa = forall_along(m, s);
    CHECK(fa.psh.at("a1").size() == 2);
    CHECK(fa.psh.at("a2").size() == 1);
}

TEST_CASE("Boolean instances agree with the subset-model oracle") {
    CatPtr a = corpus::discrete2();
    CatPtr b = corpus::discrete2();
    unsigned na = 2, nb = 2;
    for (unsigned m = 0; m < 16; ++m)
        for (unsigned r = 0; r < 4; ++r)
            for (unsigned s = 0; s < 4; ++s) {
                Distributor dm = oracle::subset_dist(a, b, m);
                Presheaf pr = oracle::subset_presheaf(a, r);
                Presheaf ps = oracle::subset_presheaf(b, s);
                unsigned got_e = oracle::mask_of(exists_along(dm, pr).psh);
                CHECK(got_e == oracle::Subsets::exists(m, r, na, nb));
                unsigned got_f = oracle::mask_of(forall_along(dm, ps).psh);
                CHECK(got_f == oracle::Subsets::forall(m, s, na, nb));
            }
}

TEST_CASE("adjunction transposition is a bijection on corpus samples") {
    CatPtr arrow = corpus::walking_arrow();
    auto ms = corpus::sample_distributors(arrow, arrow, 2, 2, 5);
    auto rs = corpus::enumerate_presheaves(arrow, 2, 3);
    REQUIRE(!ms.empty());
    REQUIRE(rs.size() >= 2);
    AdjunctionReport rep = adjunction_check(ms[0], rs[0], rs[1]);
    CHECK(rep.holds);
    CHECK(rep.hom_up == rep.hom_down);
}

TEST_CASE("adjunction in the Boolean world is containment both ways") {
    CatPtr a = corpus::discrete2();
    for (unsigned m = 0; m < 16; ++m) {
        Distributor dm = oracle::subset_dist(a, a, m);
        for (unsigned r = 0; r < 4; ++r)
            for (unsigned s = 0; s < 4; ++s) {
                Presheaf pr = oracle::subset_presheaf(a, r);
                Presheaf ps = oracle::subset_presheaf(a, s);
                AdjunctionReport rep = adjunction_check(dm, pr, ps);
                CHECK(rep.holds);
                // ∃_M R ⊆ S iff R ⊆ ∀_M S, read off as hom-set (non)emptiness
                unsigned er = oracle::Subsets::exists(m, r, 2, 2);
                unsigned fs = oracle::Subsets::forall(m, s, 2, 2);
                bool left = (er & ~s) == 0;
                bool right = (r & ~fs) == 0;
                CHECK(left == right);
                CHECK((rep.hom_up > 0) == left);
            }
        break; // one relation suffices for the exhaustive subset sweep
    }
}

TEST_CASE("with the identity distributor, transposition reduces to the identity") {
    CatPtr arrow = corpus::walking_arrow();
    auto rs = corpus::enumerate_presheaves(arrow, 2, 3);
    REQUIRE(rs.size() >= 2);
    Distributor id = identity_dist(arrow);
    AdjunctionReport rep = adjunction_check(id, rs[0], rs[1]);
    CHECK(rep.holds);
    // hom(∃_id R, S) and hom(R, ∀_id S) both biject with hom(R, S)
    CHECK(rep.hom_up == enumerate_nattrans(rs[0], rs[1]).size());
}

TEST_CASE("quantifier composition iso on samples") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr d2 = corpus::discrete2();
    auto ms = corpus::sample_distributors(arrow, d2, 2, 2, 23);
    auto ns = corpus::sample_distributors(d2, arrow, 2, 2, 29);
    auto rs = corpus::enumerate_presheaves(arrow, 2, 2);
    REQUIRE(!ms.empty());
    REQUIRE(!ns.empty());
    REQUIRE(!rs.empty());
    CHECK(compose_quantifier_iso(ns[0], ms[0], rs.back()).holds);
}

TEST_CASE("fiber functoriality of exists: identities and composites") {
    CatPtr arrow = corpus::walking_arrow();
    auto rs = corpus::enumerate_presheaves(arrow, 2, 6);
    REQUIRE(rs.size() >= 2);
    auto ms = corpus::sample_distributors(arrow, arrow, 2, 1, 31);
    REQUIRE(!ms.empty());
    const Distributor& m = ms[0];
    std::size_t composite_checks = 0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        ExistsResult exi = exists_along(m, rs[i]);
        // identity lifts to the identity
        NatTrans idt;
        idt.src = rs[i];
        idt.tgt = rs[i];
        for (const auto& o : arrow->objects) idt.components[o] = SetMap::identity(rs[i].at(o));
        NatTrans lid = exists_fiber_map(m, idt, exi, exi);
        for (const auto& [o, c] : lid.components)
            CHECK(c.table == SetMap::identity(exi.psh.at(o)).table);

        // lifts of composites are composites of lifts
        for (std::size_t j = 0; j < rs.size(); ++j)
            for (std::size_t k = 0; k < rs.size(); ++k) {
                auto ts = enumerate_nattrans(rs[i], rs[j]);
                auto us = enumerate_nattrans(rs[j], rs[k]);
                if (ts.empty() || us.empty()) continue;
                const NatTrans& t = ts.front();
                const NatTrans& u = us.front();
                NatTrans ut;
                ut.src = rs[i];
                ut.tgt = rs[k];
                for (const auto& o : arrow->objects)
                    ut.components[o] = compose(u.components.at(o), t.components.at(o));
                ExistsResult exj = exists_along(m, rs[j]);
                ExistsResult exk = exists_along(m, rs[k]);
                NatTrans lt = exists_fiber_map(m, t, exi, exj);
                NatTrans lu = exists_fiber_map(m, u, exj, exk);
                NatTrans lut = exists_fiber_map(m, ut, exi, exk);
                for (const auto& o : arrow->objects)
                    CHECK(lut.components.at(o).table ==
                          compose(lu.components.at(o), lt.components.at(o)).table);
                ++composite_checks;
                if (composite_checks > 6) return;
            }
    }
    CHECK(composite_checks > 0);
}

TEST_CASE("quantifier outputs are themselves valid presheaves") {
    // the induced actions of ∃ and ∀ must satisfy functoriality on the nose
    for (const auto& base : {corpus::walking_arrow(), corpus::parallel_pair()}) {
        auto ms = corpus::sample_distributors(base, base, 2, 2, 83);
        auto rs = corpus::enumerate_presheaves(base, 2, 3);
        for (const auto& m : ms)
            for (const auto& r : rs) {
                Presheaf ex = exists_along(m, r).psh;
                CHECK(validate(ex).empty());
                Presheaf fa = forall_along(m, r).psh;
                CHECK(validate(fa).empty());
            }
    }
}

TEST_CASE("structural distributors validate") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr d2 = corpus::discrete2();
    CHECK(validate(eval_dist(arrow, d2)).empty());
    CHECK(validate(dni_dist(arrow, d2)).empty());
    CHECK(validate(coev_dist(arrow, d2)).empty());
    CHECK(validate(eval_dist(arrow, arrow)).empty());
    CHECK(validate(dni_dist(arrow, arrow)).empty());
    CHECK(validate(coev_dist(d2, arrow)).empty());
    auto ms = corpus::sample_distributors(arrow, d2, 2, 2, 89);
    for (const auto& m : ms) {
        CHECK(validate(curry_dist(m)).empty());
        CHECK(validate(tensor_dist(m, m)).empty());
        CHECK(validate(compose_dist(identity_dist(d2), m).dist).empty());
    }
    // curry over the first factor of the diagonal embedding
    Functor diag = diagonal_functor(arrow);
    Distributor mult = emb_minus(diag);
    CHECK(validate(curry_first(mult, arrow, arrow)).empty());
}

TEST_CASE("end family-space cap raises cap_error") {
    CatPtr d2 = corpus::discrete2();
    Presheaf big;
    big.name = "B";
    big.base = d2;
    big.variance = Variance::contra;
    big.values["0"] = FinSet("b0", {"1", "2", "3", "4", "5", "6", "7", "8"});
    big.values["1"] = FinSet("b1", {"1", "2", "3", "4", "5", "6", "7", "8"});
    big.actions["id_0"] = SetMap::identity(big.values["0"]);
    big.actions["id_1"] = SetMap::identity(big.values["1"]);
    Distributor m = oracle::subset_dist(d2, d2, 0xF);
    // grow the relation so the function space explodes past the cap
    SizeLimits caps;
    caps.family_space = 10;
    CHECK_THROWS_AS(forall_along(m, big, caps), cap_error);
}
