#include "psh/monoidal.hpp"

#include "psh/hyperdoctrine.hpp"

namespace psh {

FunSpace fun_space(const FinSet& dom, const FinSet& cod) {
    FunSpace fs;
    std::vector<std::string> labels;
    for (auto& table : all_functions(dom, cod)) {
        std::string label = fun_label(table);
        labels.push_back(label);
        fs.table[label] = std::move(table);
    }
    fs.set = FinSet("fun", std::move(labels));
    return fs;
}

Presheaf tensor(const Presheaf& r, const Presheaf& s) {
    if (r.variance != s.variance)
        throw std::invalid_argument("tensor: mixed variance");
    Presheaf p;
    p.name = r.name + "⊗" + s.name;
    p.base = share(product(*r.base, *s.base));
    p.variance = r.variance;
    for (const auto& a : r.base->objects)
        for (const auto& b : s.base->objects)
            p.values[pair_label(a, b)] = product_set(r.at(a), s.at(b));
    for (const auto& f : r.base->morphisms)
        for (const auto& g : s.base->morphisms) {
            const SetMap& rf = r.action(f.name);
            const SetMap& sg = s.action(g.name);
            std::map<std::string, std::string> t;
            for (const auto& x : rf.src.elements)
                for (const auto& y : sg.src.elements)
                    t[pair_label(x, y)] = pair_label(rf(x), sg(y));
            auto [rfrom, rto] = action_profile(r, f);
            auto [sfrom, sto] = action_profile(s, g);
            p.actions[pair_label(f.name, g.name)] =
                SetMap(p.values[pair_label(rfrom, sfrom)], p.values[pair_label(rto, sto)],
                       std::move(t));
        }
    return p;
}

Presheaf implication(const Presheaf& r, const Presheaf& s) {
    if (r.variance != Variance::contra || s.variance != Variance::contra)
        throw std::invalid_argument("implication: expects contravariant presheaves");
    Presheaf p;
    p.name = r.name + "⊸" + s.name;
    p.base = share(product(opposite(*r.base), *s.base));
    p.variance = Variance::contra;
    for (const auto& a : r.base->objects)
        for (const auto& b : s.base->objects)
            p.values[pair_label(a, b)] = fun_space(r.at(a), s.at(b)).set;
    // action of (u,v) with u : x'->x in A, v : b->b' in B maps
    // Fun(R(x'),S(b')) -> Fun(R(x),S(b)), phi -> S(v)∘phi∘R(u)
    for (const auto& u : r.base->morphisms)
        for (const auto& v : s.base->morphisms) {
            FunSpace from = fun_space(r.at(u.src), s.at(v.tgt));
            std::map<std::string, std::string> t;
            const SetMap& ru = r.action(u.name); // R(x) -> R(x')
            const SetMap& sv = s.action(v.name); // S(b') -> S(b)
            for (const auto& [label, table] : from.table) {
                std::map<std::string, std::string> moved;
                for (const auto& x : ru.src.elements) moved[x] = sv(table.at(ru(x)));
                t[label] = fun_label(moved);
            }
            p.actions[pair_label(u.name, v.name)] =
                SetMap(p.values[pair_label(u.src, v.tgt)], p.values[pair_label(u.tgt, v.src)],
                       std::move(t));
        }
    return p;
}

CoPresheaf action_owedge(const CoPresheaf& t, const Presheaf& r) {
    if (t.variance != Variance::co || r.variance != Variance::contra)
        throw std::invalid_argument("action_owedge: expects a copresheaf and a presheaf");
    CoPresheaf p;
    p.name = t.name + "⊼" + r.name;
    p.base = share(product(*r.base, *t.base));
    p.variance = Variance::co;
    for (const auto& a : r.base->objects)
        for (const auto& c : t.base->objects)
            p.values[pair_label(a, c)] = fun_space(r.at(a), t.at(c)).set;
    // covariant action of (f,g), f : a->a', g : c->c':
    // Fun(R(a),T(c)) -> Fun(R(a'),T(c')), phi -> T(g)∘phi∘R(f)
    for (const auto& f : r.base->morphisms)
        for (const auto& g : t.base->morphisms) {
            FunSpace from = fun_space(r.at(f.src), t.at(g.src));
            std::map<std::string, std::string> tab;
            const SetMap& rf = r.action(f.name); // R(a') -> R(a)
            const SetMap& tg = t.action(g.name); // T(c) -> T(c')
            for (const auto& [label, table] : from.table) {
                std::map<std::string, std::string> moved;
                for (const auto& x : rf.src.elements) moved[x] = tg(table.at(rf(x)));
                tab[label] = fun_label(moved);
            }
            p.actions[pair_label(f.name, g.name)] =
                SetMap(p.values[pair_label(f.src, g.src)], p.values[pair_label(f.tgt, g.tgt)],
                       std::move(tab));
        }
    return p;
}

IsoReport law_exists_tensor(const Distributor& m, const Distributor& n, const Presheaf& r,
                            const Presheaf& s, const SizeLimits& caps) {
    ExistsResult exM = exists_along(m, r, caps);
    ExistsResult exN = exists_along(n, s, caps);
    Distributor mn = tensor_dist(m, n);
    Presheaf rs = tensor(r, s);
    ExistsResult joint = exists_along(mn, rs, caps);
    Presheaf rhs = tensor(exM.psh, exN.psh);

    NatTrans t;
    t.src = joint.psh;
    t.tgt = rhs;
    for (const auto& c : m.tgt->objects)
        for (const auto& d : n.tgt->objects) {
            std::string cd = pair_label(c, d);
            std::map<std::string, std::string> table;
            for (const auto& a : m.src->objects)
                for (const auto& b : n.src->objects)
                    for (const auto& me : m.at(c, a).elements)
                        for (const auto& ne : n.at(d, b).elements)
                            for (const auto& re : r.at(a).elements)
                                for (const auto& se : s.at(b).elements) {
                                    const std::string& from = joint.per_object.at(cd).cls(
                                        pair_label(a, b), pair_label(me, ne), pair_label(re, se));
                                    std::string to = pair_label(exM.per_object.at(c).cls(a, me, re),
                                                                exN.per_object.at(d).cls(b, ne, se));
                                    auto [it, fresh] = table.emplace(from, to);
                                    if (!fresh && it->second != to)
                                        throw engine_error("law_exists_tensor: map not well-defined");
                                }
            t.components[cd] = SetMap(joint.psh.at(cd), rhs.at(cd), std::move(table));
        }
    return check_iso(joint.psh, rhs, t);
}

IsoReport law_d(const Distributor& m, const Distributor& n, const CoPresheaf& r,
                const CoPresheaf& s, const SizeLimits& caps) {
    // M : C⇸A, N : D⇸B, R, S covariant; both sides covariant on product(C,D)
    ForallQResult faM = forall_q(m, r, caps);
    ForallQResult faN = forall_q(n, s, caps);
    Distributor mn = tensor_dist(m, n);
    CoPresheaf rs = tensor(r, s);
    ForallQResult joint = forall_q(mn, rs, caps);
    CoPresheaf lhs = tensor(faM.psh, faN.psh);

    // the constructible direction starts from the joint quotient
    NatTrans t;
    t.src = joint.psh;
    t.tgt = lhs;
    for (const auto& c : m.src->objects)
        for (const auto& d : n.src->objects) {
            std::string cd = pair_label(c, d);
            std::map<std::string, std::string> table;
            for (const auto& a : m.tgt->objects)
                for (const auto& b : n.tgt->objects)
                    for (const auto& me : m.at(a, c).elements)
                        for (const auto& ne : n.at(b, d).elements)
                            for (const auto& re : r.at(a).elements)
                                for (const auto& se : s.at(b).elements) {
                                    const std::string& from = joint.per_object.at(cd).cls(
                                        pair_label(a, b), pair_label(me, ne), pair_label(re, se));
                                    std::string to = pair_label(faM.per_object.at(c).cls(a, me, re),
                                                                faN.per_object.at(d).cls(b, ne, se));
                                    auto [it, fresh] = table.emplace(from, to);
                                    if (!fresh && it->second != to)
                                        throw engine_error("law_d: map not well-defined");
                                }
            t.components[cd] = SetMap(joint.psh.at(cd), lhs.at(cd), std::move(table));
        }
    return check_iso(joint.psh, lhs, t);
}

IsoReport law_forall_multimap(const Distributor& m, const Distributor& n, const Presheaf& r,
                              const Presheaf& s, const SizeLimits& caps) {
    // M : A⇸C, N : D⇸B, R on A, S on B
    ExistsResult exM = exists_along(m, r, caps);
    ForallResult faN = forall_along(n, s, caps);
    Presheaf lhs = implication(exM.psh, faN.psh); // on product(op C, D)
    Distributor w = tensor_dist(dual_dist(m), n); // product(op C, D) ⇸ product(op A, B)
    Presheaf imp_rs = implication(r, s);
    ForallResult rhs = forall_along(w, imp_rs, caps);

    NatTrans t;
    t.src = lhs;
    t.tgt = rhs.psh;
    for (const auto& c : m.tgt->objects)
        for (const auto& d : n.src->objects) {
            std::string cd = pair_label(c, d);
            FunSpace lhs_fs = fun_space(exM.psh.at(c), faN.psh.at(d));
            std::map<std::string, std::string> table;
            for (const auto& [label, phi] : lhs_fs.table) {
                Family fam;
                for (const auto& a : m.src->objects)
                    for (const auto& b : n.tgt->objects) {
                        std::map<std::string, std::string> tb;
                        for (const auto& me : m.at(c, a).elements)
                            for (const auto& ne : n.at(b, d).elements) {
                                std::map<std::string, std::string> rtab;
                                for (const auto& re : r.at(a).elements) {
                                    const std::string& cls =
                                        exM.per_object.at(c).cls(a, me, re);
                                    const Family& f2 = faN.per_object.at(d).family(phi.at(cls));
                                    rtab[re] = f2.at(b).at(ne);
                                }
                                tb[pair_label(me, ne)] = fun_label(rtab);
                            }
                        fam[pair_label(a, b)] = std::move(tb);
                    }
                std::string famlabel = family_label(fam);
                if (!rhs.psh.at(cd).contains(famlabel))
                    throw engine_error("law_forall_multimap: transposed family not natural");
                table[label] = famlabel;
            }
            t.components[cd] = SetMap(lhs.at(cd), rhs.psh.at(cd), std::move(table));
        }
    return check_iso(lhs, rhs.psh, t);
}

IsoReport law_d_action(const Distributor& m, const Distributor& n, const Presheaf& r,
                       const Presheaf& s, const SizeLimits& caps) {
    // assemble both sides of forall-vs-multimap through the chiral action
    ExistsResult exM = exists_along(m, r, caps);
    ForallResult faN = forall_along(n, s, caps);
    Presheaf lhs = undual_presheaf(action_owedge(dual_presheaf(faN.psh), exM.psh));
    Presheaf lhs_pointwise = implication(exM.psh, faN.psh);
    if (!same_presheaf(lhs, lhs_pointwise))
        throw engine_error("law_d_action: chiral route differs from the pointwise implication");

    Distributor w = tensor_dist(dual_dist(m), n);
    Presheaf imp_rs = undual_presheaf(action_owedge(dual_presheaf(s), r));
    if (!same_presheaf(imp_rs, implication(r, s)))
        throw engine_error("law_d_action: chiral route differs on R⊸S");
    ForallResult rhs = forall_along(w, imp_rs, caps);

    // the canonical map is the forall-vs-multimap transpose on the same data
    IsoReport base_report = law_forall_multimap(m, n, r, s, caps);
    NatTrans t = base_report.witness;
    t.src = lhs;
    Presheaf rhs_psh = rhs.psh;
    t.tgt = rhs_psh;
    return check_iso(lhs, rhs_psh, t);
}

IsoReport law_e(const Distributor& m, const Distributor& n, const Presheaf& r, const Presheaf& s,
                const SizeLimits& caps) {
    // M : C⇸A, N : D⇸B, R on A, S on B
    ForallResult faM = forall_along(m, r, caps);
    ForallResult faN = forall_along(n, s, caps);
    Presheaf lhs = tensor(faM.psh, faN.psh);
    Distributor mn = tensor_dist(m, n);
    Presheaf rs = tensor(r, s);
    ForallResult rhs = forall_along(mn, rs, caps);

    NatTrans t;
    t.src = lhs;
    t.tgt = rhs.psh;
    for (const auto& c : m.src->objects)
        for (const auto& d : n.src->objects) {
            std::string cd = pair_label(c, d);
            std::map<std::string, std::string> table;
            for (const auto& phl : faM.psh.at(c).elements)
                for (const auto& chl : faN.psh.at(d).elements) {
                    const Family& phi = faM.per_object.at(c).family(phl);
                    const Family& chi = faN.per_object.at(d).family(chl);
                    Family joint;
                    for (const auto& a : m.tgt->objects)
                        for (const auto& b : n.tgt->objects) {
                            std::map<std::string, std::string> tb;
                            for (const auto& me : m.at(a, c).elements)
                                for (const auto& ne : n.at(b, d).elements)
                                    tb[pair_label(me, ne)] =
                                        pair_label(phi.at(a).at(me), chi.at(b).at(ne));
                            joint[pair_label(a, b)] = std::move(tb);
                        }
                    std::string jl = family_label(joint);
                    if (!rhs.psh.at(cd).contains(jl))
                        throw engine_error("law_e: product family not natural");
                    table[pair_label(phl, chl)] = jl;
                }
            t.components[cd] = SetMap(lhs.at(cd), rhs.psh.at(cd), std::move(table));
        }
    return check_iso(lhs, rhs.psh, t);
}

IsoReport law_f(const Distributor& m, const Distributor& n, const CoPresheaf& r,
                const CoPresheaf& s, const SizeLimits& caps) {
    // M : A⇸C, N : B⇸D, R, S covariant; the concrete witness is the copresheaf
    // map ∃_M R ⊽ ∃_N S -> ∃_{M⊽N}(R⊽S), which is the law's direction in the
    // reversed fibers of q
    ExistsQResult exM = exists_q(m, r, caps);
    ExistsQResult exN = exists_q(n, s, caps);
    CoPresheaf pairside = tensor(exM.psh, exN.psh);
    Distributor mn = tensor_dist(m, n);
    CoPresheaf rs = tensor(r, s);
    ExistsQResult joint = exists_q(mn, rs, caps);

    NatTrans t;
    t.src = pairside;
    t.tgt = joint.psh;
    for (const auto& c : m.tgt->objects)
        for (const auto& d : n.tgt->objects) {
            std::string cd = pair_label(c, d);
            std::map<std::string, std::string> table;
            for (const auto& phl : exM.psh.at(c).elements)
                for (const auto& chl : exN.psh.at(d).elements) {
                    const Family& phi = exM.per_object.at(c).family(phl);
                    const Family& chi = exN.per_object.at(d).family(chl);
                    Family jointfam;
                    for (const auto& a : m.src->objects)
                        for (const auto& b : n.src->objects) {
                            std::map<std::string, std::string> tb;
                            for (const auto& me : m.at(c, a).elements)
                                for (const auto& ne : n.at(d, b).elements)
                                    tb[pair_label(me, ne)] =
                                        pair_label(phi.at(a).at(me), chi.at(b).at(ne));
                            jointfam[pair_label(a, b)] = std::move(tb);
                        }
                    std::string jl = family_label(jointfam);
                    if (!joint.psh.at(cd).contains(jl))
                        throw engine_error("law_f: product family not natural");
                    table[pair_label(phl, chl)] = jl;
                }
            t.components[cd] = SetMap(pairside.at(cd), joint.psh.at(cd), std::move(table));
        }
    return check_iso(pairside, joint.psh, t);
}

// ---------------------------------------------------------------------------
// fiber structure over A

Presheaf fiber_and(CatPtr a, const Presheaf& r, const Presheaf& s, const SizeLimits& caps) {
    Distributor mult = emb_minus(diagonal_functor(a));
    return exists_along(mult, tensor(r, s), caps).psh;
}

Presheaf fiber_top(CatPtr a, const SizeLimits& caps) {
    Distributor unit = emb_minus(bang_functor(a));
    return exists_along(unit, unit_presheaf(), caps).psh;
}

Presheaf fiber_imp(CatPtr a, const Presheaf& r, const Presheaf& s, const SizeLimits& caps) {
    Distributor mult = emb_minus(diagonal_functor(a));
    Distributor cur = curry_first(mult, a, a);
    return forall_along(cur, implication(r, s), caps).psh;
}

Presheaf pointwise_product(const Presheaf& r, const Presheaf& s) {
    if (!equal_structure(*r.base, *s.base) || r.variance != s.variance)
        throw std::invalid_argument("pointwise_product: bases/variance differ");
    Presheaf p;
    p.name = r.name + "∧" + s.name;
    p.base = r.base;
    p.variance = r.variance;
    for (const auto& o : r.base->objects) p.values[o] = product_set(r.at(o), s.at(o));
    for (const auto& f : r.base->morphisms) {
        const SetMap& rf = r.action(f.name);
        const SetMap& sf = s.action(f.name);
        std::map<std::string, std::string> t;
        for (const auto& x : rf.src.elements)
            for (const auto& y : sf.src.elements) t[pair_label(x, y)] = pair_label(rf(x), sf(y));
        auto [from, to] = action_profile(p, f);
        p.actions[f.name] = SetMap(p.values[from], p.values[to], std::move(t));
    }
    return p;
}

namespace {

// the exponential S^R(a) as the set of natural families hom(-,a) × R -> S
EndResult exponential_end(const Presheaf& r, const Presheaf& s, const std::string& a,
                          const SizeLimits& caps) {
    const Category& base = *r.base;
    std::vector<EndIndex> indices;
    for (const auto& o : base.objects)
        indices.push_back({o, product_set(base.hom_set(o, a), r.at(o)), s.at(o)});
    std::vector<EndConstraint> cons;
    for (const auto& f : base.morphisms) {
        // for f : a''->a', map (h : a'->a, x) to (h∘f, R(f)(x))
        const SetMap& rf = r.action(f.name);
        std::map<std::string, std::string> t;
        for (const auto& h : base.hom(f.tgt, a))
            for (const auto& x : r.at(f.tgt).elements)
                t[pair_label(h, x)] = pair_label(base.compose(h, f.name), rf(x));
        SetMap dom_map(product_set(base.hom_set(f.tgt, a), r.at(f.tgt)),
                       product_set(base.hom_set(f.src, a), r.at(f.src)), std::move(t));
        cons.push_back({f.tgt, f.src, std::move(dom_map), s.action(f.name)});
    }
    return end_families(indices, cons, caps);
}

} // namespace

Presheaf pointwise_exponential(const Presheaf& r, const Presheaf& s, const SizeLimits& caps) {
    if (!equal_structure(*r.base, *s.base))
        throw std::invalid_argument("pointwise_exponential: bases differ");
    const Category& base = *r.base;
    Presheaf p;
    p.name = s.name + "^" + r.name;
    p.base = r.base;
    p.variance = Variance::contra;
    std::map<std::string, EndResult> ends;
    for (const auto& a : base.objects) {
        ends[a] = exponential_end(r, s, a, caps);
        p.values[a] = ends[a].value;
    }
    for (const auto& f : base.morphisms) {
        // theta·f at a' sends (h : a'->dom f, x) to theta_{a'}(f∘h, x)
        const EndResult& from = ends.at(f.tgt);
        const EndResult& to = ends.at(f.src);
        std::map<std::string, std::string> t;
        for (const auto& [label, fam] : from.families) {
            Family moved;
            for (const auto& o : base.objects) {
                std::map<std::string, std::string> tb;
                for (const auto& h : base.hom(o, f.src))
                    for (const auto& x : r.at(o).elements)
                        tb[pair_label(h, x)] = fam.at(o).at(pair_label(base.compose(f.name, h), x));
                moved[o] = std::move(tb);
            }
            std::string ml = family_label(moved);
            if (!to.families.count(ml))
                throw engine_error("pointwise_exponential: transported family not natural");
            t[label] = ml;
        }
        p.actions[f.name] = SetMap(p.values[f.tgt], p.values[f.src], std::move(t));
    }
    return p;
}

IsoReport fiber_and_vs_pointwise(CatPtr a, const Presheaf& r, const Presheaf& s,
                                 const SizeLimits& caps) {
    Distributor mult = emb_minus(diagonal_functor(a));
    Presheaf rs = tensor(r, s);
    ExistsResult ex = exists_along(mult, rs, caps);
    Presheaf rhs = pointwise_product(r, s);

    NatTrans t;
    t.src = ex.psh;
    t.tgt = rhs;
    for (const auto& o : a->objects) {
        const CoendResult& co = ex.per_object.at(o);
        std::map<std::string, std::string> table;
        // items are ((a1,a2), (h1,h2), (x,y)) with h1 : o->a1, h2 : o->a2
        for (const auto& a1 : a->objects)
            for (const auto& a2 : a->objects)
                for (const auto& h1 : a->hom(o, a1))
                    for (const auto& h2 : a->hom(o, a2))
                        for (const auto& x : r.at(a1).elements)
                            for (const auto& y : s.at(a2).elements) {
                                const std::string& from =
                                    co.cls(pair_label(a1, a2), pair_label(h1, h2), pair_label(x, y));
                                std::string to =
                                    pair_label(r.action(h1)(x), s.action(h2)(y));
                                auto [it, fresh] = table.emplace(from, to);
                                if (!fresh && it->second != to)
                                    throw engine_error("fiber_and: collapse not well-defined");
                            }
        t.components[o] = SetMap(ex.psh.at(o), rhs.at(o), std::move(table));
    }
    return check_iso(ex.psh, rhs, t);
}

IsoReport fiber_top_vs_pointwise(CatPtr a, const SizeLimits& caps) {
    Presheaf lhs = fiber_top(a, caps);
    Presheaf rhs = terminal_presheaf(a);
    NatTrans t;
    t.src = lhs;
    t.tgt = rhs;
    for (const auto& o : a->objects)
        t.components[o] = SetMap::constant(lhs.at(o), rhs.at(o), "*");
    return check_iso(lhs, rhs, t);
}

IsoReport fiber_imp_vs_exponential(CatPtr a, const Presheaf& r, const Presheaf& s,
                                   const SizeLimits& caps) {
    Distributor mult = emb_minus(diagonal_functor(a));
    Distributor cur = curry_first(mult, a, a);
    Presheaf imp_rs = implication(r, s);
    ForallResult fa = forall_along(cur, imp_rs, caps);
    Presheaf rhs = pointwise_exponential(r, s, caps);

    NatTrans t;
    t.src = fa.psh;
    t.tgt = rhs;
    for (const auto& o : a->objects) {
        std::map<std::string, std::string> table;
        for (const auto& [label, fam] : fa.per_object.at(o).families) {
            // theta_{a'}(h : a'->o, x) = fam at (a',a') applied to (id,h), then to x
            Family theta;
            for (const auto& ap : a->objects) {
                std::map<std::string, std::string> tb;
                FunSpace fs = fun_space(r.at(ap), s.at(ap));
                for (const auto& h : a->hom(ap, o)) {
                    const std::string& flabel =
                        fam.at(pair_label(ap, ap)).at(pair_label(a->id_of(ap), h));
                    const auto& ftable = fs.table.at(flabel);
                    for (const auto& x : r.at(ap).elements)
                        tb[pair_label(h, x)] = ftable.at(x);
                }
                theta[ap] = std::move(tb);
            }
            std::string tl = family_label(theta);
            if (!rhs.at(o).contains(tl))
                throw engine_error("fiber_imp: canonical family not in the exponential");
            table[label] = tl;
        }
        t.components[o] = SetMap(fa.psh.at(o), rhs.at(o), std::move(table));
    }
    return check_iso(fa.psh, rhs, t);
}

IsoReport tensor_symmetry(const Presheaf& r, const Presheaf& s) {
    Presheaf lhs = tensor(r, s);
    Presheaf rs = tensor(s, r);
    // transport S⊗R along the swap functor to live over product(base r, base s)
    Presheaf rhs;
    rhs.name = rs.name + "∘swap";
    rhs.base = lhs.base;
    rhs.variance = lhs.variance;
    for (const auto& a : r.base->objects)
        for (const auto& b : s.base->objects)
            rhs.values[pair_label(a, b)] = rs.at(pair_label(b, a));
    for (const auto& f : r.base->morphisms)
        for (const auto& g : s.base->morphisms) {
            rhs.actions[pair_label(f.name, g.name)] = rs.action(pair_label(g.name, f.name));
        }
    NatTrans t;
    t.src = lhs;
    t.tgt = rhs;
    for (const auto& a : r.base->objects)
        for (const auto& b : s.base->objects) {
            std::map<std::string, std::string> table;
            for (const auto& x : r.at(a).elements)
                for (const auto& y : s.at(b).elements)
                    table[pair_label(x, y)] = pair_label(y, x);
            t.components[pair_label(a, b)] =
                SetMap(lhs.at(pair_label(a, b)), rhs.at(pair_label(a, b)), std::move(table));
        }
    return check_iso(lhs, rhs, t);
}

} // namespace psh
