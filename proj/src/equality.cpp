#include "psh/equality.hpp"

#include "psh/hyperdoctrine.hpp"

namespace psh {

GraphPredicate graph(const Distributor& m, const SizeLimits& caps) {
    GraphPredicate g;
    g.of = m;
    Distributor cur = curry_dist(m);
    ExistsResult ex = exists_along(cur, unit_presheaf(), caps);
    g.as_presheaf = ex.psh;
    g.as_presheaf.name = "⌈" + m.name + "⌉";
    for (const auto& a : m.src->objects)
        for (const auto& b : m.tgt->objects) {
            const CoendResult& co = ex.per_object.at(pair_label(a, b));
            std::map<std::string, std::string> t;
            for (const auto& me : m.at(b, a).elements) t[me] = co.cls("pt", me, "*");
            g.raw_to_graph[{a, b}] =
                SetMap(m.at(b, a), g.as_presheaf.at(pair_label(a, b)), std::move(t));
        }
    return g;
}

Presheaf hom_presheaf(CatPtr a) {
    Presheaf p;
    p.name = "hom_" + a->name;
    p.base = share(product(opposite(*a), *a));
    p.variance = Variance::contra;
    for (const auto& a1 : a->objects)
        for (const auto& a2 : a->objects) p.values[pair_label(a1, a2)] = a->hom_set(a2, a1);
    // action of (u,v), u : x'->x in A, v : y->y': h ↦ u∘h∘v
    for (const auto& u : a->morphisms)
        for (const auto& v : a->morphisms) {
            std::map<std::string, std::string> t;
            for (const auto& h : a->hom(v.tgt, u.src))
                t[h] = a->compose(u.name, a->compose(h, v.name));
            p.actions[pair_label(u.name, v.name)] =
                SetMap(p.values[pair_label(u.src, v.tgt)], p.values[pair_label(u.tgt, v.src)],
                       std::move(t));
        }
    return p;
}

Presheaf id_rel(CatPtr a, const SizeLimits& caps) {
    Presheaf p = graph(identity_dist(a), caps).as_presheaf;
    p.name = "Id_" + a->name;
    return p;
}

IsoReport id_rel_vs_hom(CatPtr a, const SizeLimits& caps) {
    GraphPredicate g = graph(identity_dist(a), caps);
    Presheaf hom = hom_presheaf(a);
    NatTrans t;
    t.src = g.as_presheaf;
    t.tgt = hom;
    for (const auto& a1 : a->objects)
        for (const auto& a2 : a->objects) {
            const SetMap& raw = g.raw_to_graph.at({a1, a2}); // hom(a2,a1) -> graph classes
            std::map<std::string, std::string> table;
            for (const auto& [h, cls] : raw.table) table[cls] = h;
            t.components[pair_label(a1, a2)] =
                SetMap(g.as_presheaf.at(pair_label(a1, a2)), hom.at(pair_label(a1, a2)),
                       std::move(table));
        }
    return check_iso(g.as_presheaf, hom, t);
}

LawvereIdResult id_lawvere(CatPtr a, const SizeLimits& caps) {
    LawvereIdResult res;
    FinSet star("1", {"*"});
    for (const auto& a1 : a->objects)
        for (const auto& a2 : a->objects) {
            std::vector<CoendPiece> pieces;
            for (const auto& x : a->objects)
                pieces.push_back({x, product_set(a->hom_set(a1, x), a->hom_set(a2, x)), star});
            std::vector<CoendRelation> rels;
            for (const auto& f : a->morphisms) {
                std::map<std::string, std::string> t;
                for (const auto& h1 : a->hom(a1, f.src))
                    for (const auto& h2 : a->hom(a2, f.src))
                        t[pair_label(h1, h2)] =
                            pair_label(a->compose(f.name, h1), a->compose(f.name, h2));
                SetMap x_map(product_set(a->hom_set(a1, f.src), a->hom_set(a2, f.src)),
                             product_set(a->hom_set(a1, f.tgt), a->hom_set(a2, f.tgt)),
                             std::move(t));
                rels.push_back({f.src, f.tgt, std::move(x_map), SetMap::identity(star)});
            }
            res.per_object[pair_label(a1, a2)] = coend(pieces, rels, caps);
        }

    Presheaf p;
    p.name = "IdLaw_" + a->name;
    p.base = share(product(*a, *a));
    p.variance = Variance::contra;
    for (const auto& a1 : a->objects)
        for (const auto& a2 : a->objects)
            p.values[pair_label(a1, a2)] = res.per_object[pair_label(a1, a2)].value;
    // contra action of (u,v) : (a1,a2) -> (a1',a2'): precompose both legs
    for (const auto& u : a->morphisms)
        for (const auto& v : a->morphisms) {
            const CoendResult& from = res.per_object.at(pair_label(u.tgt, v.tgt));
            const CoendResult& to = res.per_object.at(pair_label(u.src, v.src));
            std::map<std::string, std::string> table;
            for (const auto& members : from.classes) {
                std::string image;
                for (const auto& [x, pair_h, star_el] : members) {
                    (void)star_el;
                    // pair_h enumerates hom(u.tgt,x) × hom(v.tgt,x); rebuild it
                    for (const auto& h1 : a->hom(u.tgt, x))
                        for (const auto& h2 : a->hom(v.tgt, x)) {
                            if (pair_label(h1, h2) != pair_h) continue;
                            const std::string& img =
                                to.cls(x,
                                       pair_label(a->compose(h1, u.name), a->compose(h2, v.name)),
                                       "*");
                            if (image.empty())
                                image = img;
                            else if (image != img)
                                throw engine_error("id_lawvere: action not well-defined");
                        }
                }
                table[from.inject.at(members.front())] = image;
            }
            p.actions[pair_label(u.name, v.name)] =
                SetMap(p.values[pair_label(u.tgt, v.tgt)], p.values[pair_label(u.src, v.src)],
                       std::move(table));
        }
    res.psh = std::move(p);
    return res;
}

IsoReport id_lawvere_vs_sigma_route(CatPtr a, const SizeLimits& caps) {
    LawvereIdResult law = id_lawvere(a, caps);
    // the Σ_Δ ⊤ route lands on the same base with the same item labels
    Functor diag = diagonal_functor(a);
    ExistsResult ex = exists_along(emb_plus(diag), terminal_presheaf(a), caps);

    NatTrans t;
    t.src = ex.psh;
    t.tgt = law.psh;
    for (const auto& a1 : a->objects)
        for (const auto& a2 : a->objects) {
            std::string obj = pair_label(a1, a2);
            const CoendResult& from = ex.per_object.at(obj);
            const CoendResult& to = law.per_object.at(obj);
            std::map<std::string, std::string> table;
            for (const auto& members : from.classes) {
                std::string image;
                for (const auto& [x, h, star_el] : members) {
                    (void)star_el;
                    const std::string& img = to.cls(x, h, "*");
                    if (image.empty())
                        image = img;
                    else if (image != img)
                        throw engine_error("id_lawvere: Σ route not well-defined");
                }
                table[from.inject.at(members.front())] = image;
            }
            t.components[obj] = SetMap(ex.psh.at(obj), law.psh.at(obj), std::move(table));
        }
    return check_iso(ex.psh, law.psh, t);
}

IsoReport thm3_push(const Distributor& m, const Presheaf& r, const SizeLimits& caps) {
    CatPtr a = m.src;
    CatPtr b = m.tgt;
    GraphPredicate g = graph(m, caps);
    Presheaf rg = tensor(r, g.as_presheaf); // over A × (A^op × B)
    Distributor ev = eval_dist(a, b);
    ExistsResult lhs = exists_along(ev, rg, caps);
    ExistsResult rhs = exists_along(m, r, caps);

    NatTrans t;
    t.src = lhs.psh;
    t.tgt = rhs.psh;
    for (const auto& bp : b->objects) {
        const CoendResult& co = lhs.per_object.at(bp);
        std::map<std::string, std::string> table;
        for (const auto& x : a->objects)
            for (const auto& ao : a->objects)
                for (const auto& bo : b->objects) {
                    std::string idx = pair_label(x, pair_label(ao, bo));
                    const SetMap& raw = g.raw_to_graph.at({ao, bo});
                    for (const auto& h : a->hom(ao, x))
                        for (const auto& k : b->hom(bp, bo))
                            for (const auto& re : r.at(x).elements)
                                for (const auto& me : m.at(bo, ao).elements) {
                                    const std::string& from =
                                        co.cls(idx, pair_label(h, k), pair_label(re, raw(me)));
                                    // transport me to M(bp, x)
                                    std::string moved = m.left(k, x)(m.right(bo, h)(me));
                                    const std::string& img =
                                        rhs.per_object.at(bp).cls(x, moved, re);
                                    auto [it, fresh] = table.emplace(from, img);
                                    if (!fresh && it->second != img)
                                        throw engine_error("thm3_push: collapse not well-defined");
                                }
                }
        t.components[bp] = SetMap(lhs.psh.at(bp), rhs.psh.at(bp), std::move(table));
    }
    return check_iso(lhs.psh, rhs.psh, t);
}

IsoReport thm3_pull(const Distributor& m, const Presheaf& s, const SizeLimits& caps) {
    CatPtr a = m.src;
    CatPtr b = m.tgt;
    GraphPredicate g = graph(m, caps);
    Presheaf imp = implication(g.as_presheaf, s); // over (A × B^op) × B
    Distributor dni = dni_dist(a, b);
    ForallResult lhs = forall_along(m, s, caps);
    ForallResult rhs = forall_along(dni, imp, caps);

    // graph class -> raw element, for building the function tables
    std::map<std::pair<std::string, std::string>, std::map<std::string, std::string>> to_raw;
    for (const auto& [key, sm] : g.raw_to_graph) {
        to_raw[key]; // keep empty hom positions present
        for (const auto& [me, cls] : sm.table) to_raw[key][cls] = me;
    }

    NatTrans t;
    t.src = lhs.psh;
    t.tgt = rhs.psh;
    for (const auto& x : a->objects) {
        const EndResult& target = rhs.per_object.at(x);
        std::map<std::string, std::string> table;
        for (const auto& [label, psi] : lhs.per_object.at(x).families) {
            Family fam;
            for (const auto& ap : a->objects)
                for (const auto& bpp : b->objects)
                    for (const auto& bo : b->objects) {
                        // object ((ap,bpp),bo) of (A×B^op)×B
                        std::string idx = pair_label(pair_label(ap, bpp), bo);
                        std::map<std::string, std::string> tb;
                        for (const auto& h : a->hom(ap, x))
                            for (const auto& k : b->hom(bo, bpp)) {
                                std::map<std::string, std::string> ftab;
                                for (const auto& [cls, me] : to_raw.at({ap, bpp})) {
                                    std::string moved = m.left(k, x)(m.right(bpp, h)(me));
                                    ftab[cls] = psi.at(bo).at(moved);
                                }
                                tb[pair_label(h, k)] = fun_label(ftab);
                            }
                        fam[idx] = std::move(tb);
                    }
            std::string fl = family_label(fam);
            if (!target.families.count(fl))
                throw engine_error("thm3_pull: canonical family not natural");
            table[label] = fl;
        }
        t.components[x] = SetMap(lhs.psh.at(x), rhs.psh.at(x), std::move(table));
    }
    return check_iso(lhs.psh, rhs.psh, t);
}

IsoReport yoneda_check(const Presheaf& s, const std::string& a, const SizeLimits& caps) {
    ForallResult fa = forall_along(identity_dist(s.base), s, caps);
    NatTrans unit = yoneda_unit(s, fa);
    auto nat = validate(unit);
    if (!nat.empty()) throw engine_error("yoneda_check: unit not natural: " + nat.front());
    IsoReport rep;
    rep.witness = unit;
    const SetMap& at_a = unit.components.at(a);
    rep.holds = at_a.is_bijection();
    if (!rep.holds) rep.failure = IsoFailure{a, "Yoneda unit not bijective"};
    return rep;
}

} // namespace psh
