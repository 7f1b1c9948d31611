#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psh/corpus.hpp"
#include "psh/distributor.hpp"
#include "psh/presheaf.hpp"
#include "psh/laws.hpp"
#include "psh/quantifiers.hpp"

using namespace psh;

TEST_CASE("finset keeps canonical order and rejects duplicates") {
    FinSet s("s", {"b", "a", "c"});
    CHECK(s.elements == std::vector<std::string>{"a", "b", "c"});
    CHECK_THROWS_AS(FinSet("d", {"x", "x"}), std::invalid_argument);
}

TEST_CASE("setmap composition and bijectivity") {
    FinSet x("x", {"0", "1"});
    FinSet y("y", {"a", "b"});
    SetMap f(x, y, {{"0", "a"}, {"1", "b"}});
    CHECK(f.is_bijection());
    SetMap g(y, x, {{"a", "1"}, {"b", "1"}});
    CHECK_FALSE(g.is_bijection());
    SetMap gf = compose(g, f);
    CHECK(gf("0") == "1");
    CHECK(gf("1") == "1");
}

TEST_CASE("walking arrow validates cleanly") {
    CatPtr arrow = corpus::walking_arrow();
    CHECK(validate(*arrow).empty());
    CHECK(arrow->hom("0", "1") == std::vector<std::string>{"f"});
    CHECK(arrow->hom("1", "0").empty());
}

TEST_CASE("a wrong composite target is reported with the offending pair") {
    // g∘f should land at 2; point it at the wrong object's identity instead
    Category c = make_category("broken", {"0", "1", "2"},
                               {{"f", "0", "1"}, {"g", "1", "2"}}, {{{"g", "f"}, "id_0"}});
    auto violations = validate(c);
    REQUIRE(!violations.empty());
    bool named = false;
    for (const auto& v : violations)
        if (v.find("g") != std::string::npos && v.find("f") != std::string::npos) named = true;
    CHECK(named);
}

TEST_CASE("opposite is an involution and reverses arrows") {
    CatPtr cosp = corpus::cospan();
    Category op = opposite(*cosp);
    CHECK(op.mor("u").src == "2");
    CHECK(op.mor("u").tgt == "0");
    CHECK(equal_structure(opposite(op), *cosp));
    CHECK(validate(op).empty());

    // discrete categories are fixed points
    CatPtr d2 = corpus::discrete2();
    CHECK(equal_structure(opposite(*d2), *d2));
}

TEST_CASE("products: counts and degenerate cases") {
    CatPtr arrow = corpus::walking_arrow();
    Category square = product(*arrow, *arrow);
    CHECK(square.objects.size() == 4);
    CHECK(square.morphisms.size() == 9);
    CHECK(validate(square).empty());

    CatPtr d2 = corpus::discrete2();
    Category d4 = product(*d2, *d2);
    CHECK(d4.objects.size() == 4);
    CHECK(d4.morphisms.size() == 4); // identities only

    Category unit_prod = product(*arrow, terminal_category());
    CHECK(unit_prod.objects.size() == arrow->objects.size());
    CHECK(unit_prod.morphisms.size() == arrow->morphisms.size());
}

TEST_CASE("opposite distributes over product strictly") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr cosp = corpus::cospan();
    Category lhs = opposite(product(*arrow, *cosp));
    Category rhs = product(opposite(*arrow), opposite(*cosp));
    CHECK(equal_structure(lhs, rhs));
}

TEST_CASE("identity distributor is the hom table") {
    CatPtr arrow = corpus::walking_arrow();
    Distributor id = identity_dist(arrow);
    CHECK(validate(id).empty());
    int nonempty = 0;
    for (const auto& [k, v] : id.values)
        if (!v.empty()) ++nonempty;
    CHECK(nonempty == 3); // hom(0,0), hom(0,1), hom(1,1)
    CHECK(id.at("0", "1").elements == std::vector<std::string>{"f"});
    CHECK(id.at("1", "0").empty());
}

TEST_CASE("perturbing one constrained action entry is caught by validate") {
    // the one-object monoid with m∘m = m; its hom distributor has entries
    // whose actions are pinned by functoriality and the commuting square
    Category mon = make_category("monoid", {"o"}, {{"m", "o", "o"}}, {{{"m", "m"}, "m"}});
    REQUIRE(validate(mon).empty());
    Distributor d = identity_dist(share(std::move(mon)));
    REQUIRE(validate(d).empty());

    SetMap& lm = d.left_action.at({"m", "o"});
    REQUIRE(lm.table.at("m") == "m");
    lm.table["m"] = "id_o"; // one table entry flipped
    auto violations = validate(d);
    REQUIRE(!violations.empty());
    bool named = false;
    for (const auto& v : violations)
        if (v.find("m") != std::string::npos &&
            (v.find("square") != std::string::npos || v.find("functoriality") != std::string::npos))
            named = true;
    CHECK(named);
}

TEST_CASE("check_iso rejects a non-natural canonical map") {
    CatPtr arrow = corpus::walking_arrow();
    // R(0) = {x0,x1}, R(1) = {y}, R(f) constant x0
    Presheaf r;
    r.name = "R";
    r.base = arrow;
    r.variance = Variance::contra;
    r.values["0"] = FinSet("R0", {"x0", "x1"});
    r.values["1"] = FinSet("R1", {"y"});
    r.actions["id_0"] = SetMap::identity(r.values["0"]);
    r.actions["id_1"] = SetMap::identity(r.values["1"]);
    r.actions["f"] = SetMap(r.values["1"], r.values["0"], {{"y", "x0"}});
    REQUIRE(validate(r).empty());

    // swap-at-0 is a bijection but not natural against the identity elsewhere
    Presheaf r2 = r;
    NatTrans bad;
    bad.src = r;
    bad.tgt = r2;
    bad.components["0"] = SetMap(r.values["0"], r.values["0"], {{"x0", "x1"}, {"x1", "x0"}});
    bad.components["1"] = SetMap::identity(r.values["1"]);
    CHECK(!validate(bad).empty());
    CHECK_THROWS_AS(check_iso(r, r2, bad), engine_error);

    NatTrans good;
    good.src = r;
    good.tgt = r2;
    good.components["0"] = SetMap::identity(r.values["0"]);
    good.components["1"] = SetMap::identity(r.values["1"]);
    CHECK(check_iso(r, r2, good).holds);
}

TEST_CASE("check_iso reports the first failing object with an element witness") {
    CatPtr d2 = corpus::discrete2();
    Presheaf a;
    a.name = "A";
    a.base = d2;
    a.variance = Variance::contra;
    a.values["0"] = FinSet("a0", {"x", "y"});
    a.values["1"] = FinSet("a1", {"z"});
    a.actions["id_0"] = SetMap::identity(a.values["0"]);
    a.actions["id_1"] = SetMap::identity(a.values["1"]);
    Presheaf b = a;
    NatTrans collapse;
    collapse.src = a;
    collapse.tgt = b;
    collapse.components["0"] = SetMap(a.values["0"], a.values["0"], {{"x", "x"}, {"y", "x"}});
    collapse.components["1"] = SetMap::identity(a.values["1"]);
    IsoReport rep = check_iso(a, b, collapse);
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.failure.has_value());
    CHECK(rep.failure->object == "0");
    CHECK(rep.failure->reason.find("collide") != std::string::npos);
}

TEST_CASE("discrete composition is a disjoint union of products") {
    CatPtr d2 = corpus::discrete2();
    auto ms = corpus::sample_distributors(d2, d2, 2, 3, 11);
    auto ns = corpus::sample_distributors(d2, d2, 2, 3, 13);
    REQUIRE(!ms.empty());
    REQUIRE(!ns.empty());
    ComposedDist comp = compose_dist(ns[0], ms[0]);
    for (const auto& c : d2->objects)
        for (const auto& a : d2->objects) {
            std::size_t expect = 0;
            for (const auto& b : d2->objects)
                expect += ns[0].at(c, b).size() * ms[0].at(b, a).size();
            CHECK(comp.dist.at(c, a).size() == expect);
        }
}

TEST_CASE("subsingleton composition is relational composition") {
    CatPtr d2 = corpus::discrete2();
    auto rel = [&](unsigned mask) {
        Distributor d;
        d.name = "rel";
        d.src = d2;
        d.tgt = d2;
        std::size_t ai = 0;
        for (const auto& a : d2->objects) {
            std::size_t bi = 0;
            for (const auto& b : d2->objects) {
                std::vector<std::string> e;
                if (mask & (1u << (ai * 2 + bi))) e.push_back("*");
                d.values[{b, a}] = FinSet(b + a, std::move(e));
                ++bi;
            }
            ++ai;
        }
        for (const auto& a : d2->objects)
            for (const auto& b : d2->objects) {
                d.left_action[{d2->id_of(b), a}] = SetMap::identity(d.values[{b, a}]);
                d.right_action[{b, d2->id_of(a)}] = SetMap::identity(d.values[{b, a}]);
            }
        return d;
    };
    for (unsigned m = 0; m < 16; m += 3)
        for (unsigned n = 0; n < 16; n += 5) {
            ComposedDist comp = compose_dist(rel(n), rel(m));
            std::size_t ai = 0;
            for (const auto& a : d2->objects) {
                std::size_t ci = 0;
                for (const auto& c : d2->objects) {
                    bool expect = false;
                    for (unsigned b = 0; b < 2; ++b)
                        if (((m >> (ai * 2 + b)) & 1u) && ((n >> (b * 2 + ci)) & 1u))
                            expect = true;
                    CHECK(!comp.dist.at(c, a).empty() == expect);
                    ++ci;
                }
                ++ai;
            }
        }
}

TEST_CASE("distributor composition units and associativity up to canonical iso") {
    CatPtr arrow = corpus::walking_arrow();
    CatPtr d2 = corpus::discrete2();
    auto ms = corpus::sample_distributors(arrow, d2, 2, 2, 17);
    auto ns = corpus::sample_distributors(d2, arrow, 2, 2, 19);
    REQUIRE(!ms.empty());
    REQUIRE(!ns.empty());
    for (const auto& m : ms) {
        CHECK(laws::dist_unit_right(m).holds);
        CHECK(laws::dist_unit_left(m).holds);
    }
    CHECK(laws::dist_assoc(ms[0], ns[0], ms[0]).holds);
}

TEST_CASE("the category enumeration contains the expected members") {
    auto cats = corpus::enumerate_categories(3, 2);
    CHECK(cats.size() > 100);
    for (const auto& c : cats) CHECK(validate(*c).empty());

    auto count_matching = [&](auto&& pred) {
        std::size_t n = 0;
        for (const auto& c : cats)
            if (pred(*c)) ++n;
        return n;
    };
    // the walking isomorphism: two objects, f∘g and g∘f both identities
    std::size_t isos = count_matching([](const Category& c) {
        if (c.objects.size() != 2 || c.morphisms.size() != 4) return false;
        for (const auto& m : c.morphisms) {
            if (m.name == c.id_of(m.src)) continue;
            if (m.src == m.tgt) return false;
        }
        // both round trips must be identities
        std::vector<std::string> nonid;
        for (const auto& m : c.morphisms)
            if (m.name != c.id_of(m.src)) nonid.push_back(m.name);
        if (nonid.size() != 2) return false;
        const Mor& f = c.mor(nonid[0]);
        const Mor& g2 = c.mor(nonid[1]);
        if (f.src != g2.tgt || f.tgt != g2.src) return false;
        return c.compose(nonid[1], nonid[0]) == c.id_of(f.src) &&
               c.compose(nonid[0], nonid[1]) == c.id_of(f.tgt);
    });
    CHECK(isos >= 1);
    // the idempotent monoid and the two-element group on one object
    std::size_t idem = count_matching([](const Category& c) {
        return c.objects.size() == 1 && c.morphisms.size() == 2 &&
               c.compose("m0", "m0") == "m0";
    });
    std::size_t z2 = count_matching([](const Category& c) {
        return c.objects.size() == 1 && c.morphisms.size() == 2 &&
               c.compose("m0", "m0") == c.id_of(c.objects[0]);
    });
    CHECK(idem == 1);
    CHECK(z2 == 1);
}

TEST_CASE("validate presheaf catches functoriality breaks") {
    CatPtr par = corpus::parallel_pair();
    auto ps = corpus::enumerate_presheaves(par, 2, 50);
    REQUIRE(!ps.empty());
    for (const auto& p : ps) CHECK(validate(p).empty());
}
