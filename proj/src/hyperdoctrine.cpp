#include "psh/hyperdoctrine.hpp"

namespace psh {

Distributor emb_plus(const Functor& f) {
    Distributor d;
    d.name = "emb+(" + f.name + ")";
    d.src = f.src;
    d.tgt = f.tgt;
    const Category& a = *f.src;
    const Category& b = *f.tgt;
    for (const auto& bo : b.objects)
        for (const auto& ao : a.objects) d.values[{bo, ao}] = b.hom_set(bo, f.ob(ao));
    for (const auto& g : b.morphisms)
        for (const auto& ao : a.objects) {
            std::map<std::string, std::string> t;
            for (const auto& h : b.hom(g.tgt, f.ob(ao))) t[h] = b.compose(h, g.name);
            d.left_action[{g.name, ao}] =
                SetMap(d.values[{g.tgt, ao}], d.values[{g.src, ao}], std::move(t));
        }
    for (const auto& bo : b.objects)
        for (const auto& u : a.morphisms) {
            std::map<std::string, std::string> t;
            for (const auto& h : b.hom(bo, f.ob(u.src))) t[h] = b.compose(f.mo(u.name), h);
            d.right_action[{bo, u.name}] =
                SetMap(d.values[{bo, u.src}], d.values[{bo, u.tgt}], std::move(t));
        }
    return d;
}

Distributor emb_minus(const Functor& f) {
    Distributor d;
    d.name = "emb-(" + f.name + ")";
    d.src = f.tgt; // B
    d.tgt = f.src; // A
    const Category& a = *f.src;
    const Category& b = *f.tgt;
    for (const auto& ao : a.objects)
        for (const auto& bo : b.objects) d.values[{ao, bo}] = b.hom_set(f.ob(ao), bo);
    for (const auto& g : a.morphisms) // g : a'->a, precompose F(g)
        for (const auto& bo : b.objects) {
            std::map<std::string, std::string> t;
            for (const auto& h : b.hom(f.ob(g.tgt), bo)) t[h] = b.compose(h, f.mo(g.name));
            d.left_action[{g.name, bo}] =
                SetMap(d.values[{g.tgt, bo}], d.values[{g.src, bo}], std::move(t));
        }
    for (const auto& ao : a.objects)
        for (const auto& u : b.morphisms) {
            std::map<std::string, std::string> t;
            for (const auto& h : b.hom(f.ob(ao), u.src)) t[h] = b.compose(u.name, h);
            d.right_action[{ao, u.name}] =
                SetMap(d.values[{ao, u.src}], d.values[{ao, u.tgt}], std::move(t));
        }
    return d;
}

Embedding embedding(const Functor& f) { return Embedding{f, emb_plus(f), emb_minus(f)}; }

DistIsoReport emb_plus_compose_iso(const Functor& f, const Functor& g, const SizeLimits& caps) {
    // emb+(G∘F) ≅ emb+G ∘ emb+F as distributors A ⇸ C
    Functor gf = compose(g, f);
    Distributor direct = emb_plus(gf);
    ComposedDist comp = compose_dist(emb_plus(g), emb_plus(f), caps);

    DistTrans t;
    t.src = comp.dist;
    t.tgt = direct;
    const Category& c = *g.tgt;
    for (const auto& co : c.objects)
        for (const auto& ao : f.src->objects) {
            std::map<std::string, std::string> table;
            for (const auto& bo : f.tgt->objects)
                for (const auto& h2 : c.hom(co, g.ob(bo)))      // element of emb+G(c,b)
                    for (const auto& h1 : f.tgt->hom(bo, f.ob(ao))) { // element of emb+F(b,a)
                        const std::string& cls = comp.inject.at({co, ao}).at({bo, h2, h1});
                        std::string img = c.compose(g.mo(h1), h2);
                        auto [it, fresh] = table.emplace(cls, img);
                        if (!fresh && it->second != img)
                            throw engine_error("emb_plus_compose_iso: collapse not well-defined");
                    }
            t.components[{co, ao}] = SetMap(comp.dist.at(co, ao), direct.at(co, ao), std::move(table));
        }
    return check_dist_iso(comp.dist, direct, t);
}

DistIsoReport emb_minus_compose_iso(const Functor& f, const Functor& g, const SizeLimits& caps) {
    // emb-(G∘F) ≅ emb-F ∘ emb-G as distributors C ⇸ A
    Functor gf = compose(g, f);
    Distributor direct = emb_minus(gf);
    ComposedDist comp = compose_dist(emb_minus(f), emb_minus(g), caps);

    DistTrans t;
    t.src = comp.dist;
    t.tgt = direct;
    const Category& c = *g.tgt;
    for (const auto& ao : f.src->objects)
        for (const auto& co : c.objects) {
            std::map<std::string, std::string> table;
            for (const auto& bo : f.tgt->objects)
                for (const auto& h1 : f.tgt->hom(f.ob(ao), bo)) // element of emb-F(a,b)
                    for (const auto& h2 : c.hom(g.ob(bo), co)) {  // element of emb-G(b,c)
                        const std::string& cls = comp.inject.at({ao, co}).at({bo, h1, h2});
                        std::string img = c.compose(h2, g.mo(h1));
                        auto [it, fresh] = table.emplace(cls, img);
                        if (!fresh && it->second != img)
                            throw engine_error("emb_minus_compose_iso: collapse not well-defined");
                    }
            t.components[{ao, co}] = SetMap(comp.dist.at(ao, co), direct.at(ao, co), std::move(table));
        }
    return check_dist_iso(comp.dist, direct, t);
}

SigmaResult sigma(const Functor& f, const Presheaf& r, const SizeLimits& caps) {
    if (!equal_structure(*r.base, *f.src))
        throw std::invalid_argument("sigma: presheaf not over the functor source");
    SigmaResult res;
    const Category& a = *f.src;
    const Category& b = *f.tgt;
    for (const auto& bo : b.objects) {
        std::vector<CoendPiece> pieces;
        for (const auto& ao : a.objects) pieces.push_back({ao, b.hom_set(bo, f.ob(ao)), r.at(ao)});
        std::vector<CoendRelation> rels;
        for (const auto& u : a.morphisms) {
            std::map<std::string, std::string> t;
            for (const auto& h : b.hom(bo, f.ob(u.src))) t[h] = b.compose(f.mo(u.name), h);
            SetMap x_map(b.hom_set(bo, f.ob(u.src)), b.hom_set(bo, f.ob(u.tgt)), std::move(t));
            rels.push_back({u.src, u.tgt, std::move(x_map), r.action(u.name)});
        }
        res.per_object[bo] = coend(pieces, rels, caps);
    }
    Presheaf p;
    p.name = "Σ_" + f.name + "(" + r.name + ")";
    p.base = f.tgt;
    p.variance = Variance::contra;
    for (const auto& bo : b.objects) p.values[bo] = res.per_object[bo].value;
    for (const auto& g : b.morphisms) {
        const CoendResult& from = res.per_object.at(g.tgt);
        const CoendResult& to = res.per_object.at(g.src);
        std::map<std::string, std::string> table;
        for (const auto& members : from.classes) {
            std::string image;
            for (const auto& [ao, h, x] : members) {
                const std::string& img = to.cls(ao, b.compose(h, g.name), x);
                if (image.empty())
                    image = img;
                else if (image != img)
                    throw engine_error("sigma: induced action not well-defined");
            }
            table[from.inject.at(members.front())] = image;
        }
        p.actions[g.name] = SetMap(p.values[g.tgt], p.values[g.src], std::move(table));
    }
    res.psh = std::move(p);
    return res;
}

PiResult pi(const Functor& f, const Presheaf& r, const SizeLimits& caps) {
    if (!equal_structure(*r.base, *f.src))
        throw std::invalid_argument("pi: presheaf not over the functor source");
    PiResult res;
    const Category& a = *f.src;
    const Category& b = *f.tgt;
    for (const auto& bo : b.objects) {
        std::vector<EndIndex> indices;
        for (const auto& ao : a.objects) indices.push_back({ao, b.hom_set(f.ob(ao), bo), r.at(ao)});
        std::vector<EndConstraint> cons;
        for (const auto& u : a.morphisms) {
            // phi_{u.src}(h∘F(u)) = R(u)(phi_{u.tgt}(h))
            std::map<std::string, std::string> t;
            for (const auto& h : b.hom(f.ob(u.tgt), bo)) t[h] = b.compose(h, f.mo(u.name));
            SetMap dom_map(b.hom_set(f.ob(u.tgt), bo), b.hom_set(f.ob(u.src), bo), std::move(t));
            cons.push_back({u.tgt, u.src, std::move(dom_map), r.action(u.name)});
        }
        res.per_object[bo] = end_families(indices, cons, caps);
    }
    Presheaf p;
    p.name = "Π_" + f.name + "(" + r.name + ")";
    p.base = f.tgt;
    p.variance = Variance::contra;
    for (const auto& bo : b.objects) p.values[bo] = res.per_object[bo].value;
    for (const auto& g : b.morphisms) {
        const EndResult& from = res.per_object.at(g.tgt);
        const EndResult& to = res.per_object.at(g.src);
        std::map<std::string, std::string> table;
        for (const auto& [label, fam] : from.families) {
            Family moved;
            for (const auto& ao : a.objects) {
                std::map<std::string, std::string> tb;
                for (const auto& h : b.hom(f.ob(ao), g.src))
                    tb[h] = fam.at(ao).at(b.compose(g.name, h));
                moved[ao] = std::move(tb);
            }
            std::string ml = family_label(moved);
            if (!to.families.count(ml)) throw engine_error("pi: transported family not natural");
            table[label] = ml;
        }
        p.actions[g.name] = SetMap(p.values[g.tgt], p.values[g.src], std::move(table));
    }
    res.psh = std::move(p);
    return res;
}

Presheaf subst(const Functor& f, const Presheaf& s) {
    if (!equal_structure(*s.base, *f.tgt))
        throw std::invalid_argument("subst: presheaf not over the functor target");
    Presheaf p;
    p.name = f.name + "*(" + s.name + ")";
    p.base = f.src;
    p.variance = Variance::contra;
    for (const auto& ao : f.src->objects) p.values[ao] = s.at(f.ob(ao));
    for (const auto& u : f.src->morphisms) p.actions[u.name] = s.action(f.mo(u.name));
    return p;
}

ReconstructionReport reconstruction_check(const Functor& f, const Presheaf& r, const Presheaf& s,
                                          const SizeLimits& caps) {
    ReconstructionReport rep;
    Distributor plus = emb_plus(f);
    Distributor minus = emb_minus(f);

    { // Σ_F R ≅ ∃_{emb+F} R : identical coends, matched class by class
        SigmaResult sg = sigma(f, r, caps);
        ExistsResult ex = exists_along(plus, r, caps);
        NatTrans t;
        t.src = sg.psh;
        t.tgt = ex.psh;
        for (const auto& bo : f.tgt->objects) {
            std::map<std::string, std::string> table;
            const CoendResult& from = sg.per_object.at(bo);
            const CoendResult& to = ex.per_object.at(bo);
            for (const auto& members : from.classes) {
                const auto& [ao, h, x] = members.front();
                table[from.inject.at(members.front())] = to.cls(ao, h, x);
            }
            t.components[bo] = SetMap(sg.psh.at(bo), ex.psh.at(bo), std::move(table));
        }
        rep.sigma_vs_exists = check_iso(sg.psh, ex.psh, t);
    }

    { // F* S ≅ ∀_{emb+F} S : s ↦ the Yoneda family h ↦ S(h)(s)
        Presheaf fs = subst(f, s);
        ForallResult fa = forall_along(plus, s, caps);
        NatTrans t;
        t.src = fs;
        t.tgt = fa.psh;
        for (const auto& ao : f.src->objects) {
            const EndResult& end = fa.per_object.at(ao);
            std::map<std::string, std::string> table;
            for (const auto& x : fs.at(ao).elements) {
                Family fam;
                for (const auto& bo : f.tgt->objects) {
                    std::map<std::string, std::string> tb;
                    for (const auto& h : f.tgt->hom(bo, f.ob(ao))) tb[h] = s.action(h)(x);
                    fam[bo] = std::move(tb);
                }
                std::string label = family_label(fam);
                if (!end.families.count(label))
                    throw engine_error("reconstruction: canonical family not in ∀_{emb+F} S");
                table[x] = label;
            }
            t.components[ao] = SetMap(fs.at(ao), fa.psh.at(ao), std::move(table));
        }
        rep.subst_vs_forall = check_iso(fs, fa.psh, t);
    }

    { // ∃_{emb−F} S ≅ F* S : collapse (b, h : Fa->b, y) ↦ S(h)(y)
        Presheaf fs = subst(f, s);
        ExistsResult ex = exists_along(minus, s, caps);
        NatTrans t;
        t.src = ex.psh;
        t.tgt = fs;
        for (const auto& ao : f.src->objects) {
            const CoendResult& co = ex.per_object.at(ao);
            std::map<std::string, std::string> table;
            for (const auto& members : co.classes) {
                std::string image;
                for (const auto& [bo, h, y] : members) {
                    const std::string& img = s.action(h)(y);
                    if (image.empty())
                        image = img;
                    else if (image != img)
                        throw engine_error("reconstruction: ∃_{emb−F} collapse not well-defined");
                }
                table[co.inject.at(members.front())] = image;
            }
            t.components[ao] = SetMap(ex.psh.at(ao), fs.at(ao), std::move(table));
        }
        rep.exists_vs_subst = check_iso(ex.psh, fs, t);
    }

    { // Π_F R ≅ ∀_{emb−F} R : identical ends, matched label by label
        PiResult pr = pi(f, r, caps);
        ForallResult fa = forall_along(minus, r, caps);
        NatTrans t;
        t.src = pr.psh;
        t.tgt = fa.psh;
        for (const auto& bo : f.tgt->objects) {
            std::map<std::string, std::string> table;
            for (const auto& label : pr.psh.at(bo).elements) {
                if (!fa.psh.at(bo).contains(label))
                    throw engine_error("reconstruction: Π family missing in ∀_{emb−F}");
                table[label] = label;
            }
            t.components[bo] = SetMap(pr.psh.at(bo), fa.psh.at(bo), std::move(table));
        }
        rep.pi_vs_forall = check_iso(pr.psh, fa.psh, t);
    }
    return rep;
}

MonoidInDist comonoid(CatPtr a) {
    MonoidInDist m;
    m.carrier = a;
    m.mult = emb_minus(diagonal_functor(a));
    m.unit = emb_minus(bang_functor(a));
    return m;
}

namespace {

Functor product_functor(const Functor& f, const Functor& g) {
    Functor p;
    p.name = pair_label(f.name, g.name);
    p.src = share(product(*f.src, *g.src));
    p.tgt = share(product(*f.tgt, *g.tgt));
    for (const auto& x : f.src->objects)
        for (const auto& y : g.src->objects)
            p.on_objects[pair_label(x, y)] = pair_label(f.ob(x), g.ob(y));
    for (const auto& u : f.src->morphisms)
        for (const auto& v : g.src->morphisms)
            p.on_morphisms[pair_label(u.name, v.name)] = pair_label(f.mo(u.name), g.mo(v.name));
    return p;
}

// relabel the source of d along an identity-on-structure functor j : X -> X'
Distributor transport_src(const Distributor& d, const Functor& j) {
    Distributor out;
    out.name = d.name + "[src:" + j.name + "]";
    out.src = j.src;
    out.tgt = d.tgt;
    for (const auto& b : d.tgt->objects)
        for (const auto& x : j.src->objects) out.values[{b, x}] = d.at(b, j.ob(x));
    for (const auto& g : d.tgt->morphisms)
        for (const auto& x : j.src->objects)
            out.left_action[{g.name, x}] = d.left(g.name, j.ob(x));
    for (const auto& b : d.tgt->objects)
        for (const auto& u : j.src->morphisms)
            out.right_action[{b, u.name}] = d.right(b, j.mo(u.name));
    return out;
}

} // namespace

ComonoidLawReport comonoid_laws(CatPtr a, const SizeLimits& caps) {
    ComonoidLawReport rep;
    Functor diag = diagonal_functor(a);
    Functor bang = bang_functor(a);
    Functor ida = identity_functor(a);
    MonoidInDist mon = comonoid(a);
    Distributor id_d = identity_dist(a);

    // emb− is strictly monoidal on these tables
    if (!same_distributor(tensor_dist(mon.unit, id_d), emb_minus(product_functor(bang, ida))))
        throw engine_error("comonoid: unit⊗id is not emb−(!×id)");
    if (!same_distributor(tensor_dist(id_d, mon.unit), emb_minus(product_functor(ida, bang))))
        throw engine_error("comonoid: id⊗unit is not emb−(id×!)");
    if (!same_distributor(tensor_dist(mon.mult, id_d), emb_minus(product_functor(diag, ida))))
        throw engine_error("comonoid: mult⊗id is not emb−(Δ×id)");
    if (!same_distributor(tensor_dist(id_d, mon.mult), emb_minus(product_functor(ida, diag))))
        throw engine_error("comonoid: id⊗mult is not emb−(id×Δ)");

    // unit laws: mult∘(unit⊗id) ≅ emb−((!×id)∘Δ) and symmetrically
    rep.left_unit = emb_minus_compose_iso(diag, product_functor(bang, ida), caps);
    rep.right_unit = emb_minus_compose_iso(diag, product_functor(ida, bang), caps);

    // associativity: both composites collapse onto emb− of the two diagonal
    // functors A -> (A×A)×A and A -> A×(A×A), which agree across the associator
    DistIsoReport left = emb_minus_compose_iso(diag, product_functor(diag, ida), caps);
    DistIsoReport right = emb_minus_compose_iso(diag, product_functor(ida, diag), caps);
    if (!left.holds || !right.holds) {
        rep.assoc = left.holds ? right : left;
        return rep;
    }
    Functor d3l = compose(product_functor(diag, ida), diag); // a ↦ ((a,a),a)
    Functor d3r = compose(product_functor(ida, diag), diag); // a ↦ (a,(a,a))
    // associator ((x,y),z) ↦ (x,(y,z)) as a relabelling functor
    Functor assoc;
    assoc.name = "α";
    assoc.src = d3l.tgt;
    assoc.tgt = d3r.tgt;
    for (const auto& x : a->objects)
        for (const auto& y : a->objects)
            for (const auto& z : a->objects)
                assoc.on_objects[pair_label(pair_label(x, y), z)] =
                    pair_label(x, pair_label(y, z));
    for (const auto& u : a->morphisms)
        for (const auto& v : a->morphisms)
            for (const auto& w : a->morphisms)
                assoc.on_morphisms[pair_label(pair_label(u.name, v.name), w.name)] =
                    pair_label(u.name, pair_label(v.name, w.name));

    Distributor lhs = emb_minus(d3l);
    Distributor rhs = transport_src(emb_minus(d3r), assoc);
    // componentwise relabelling (h1,(h2,h3)) ↦ ((h1,h2),h3)
    DistTrans t;
    t.src = rhs;
    t.tgt = lhs;
    for (const auto& o : a->objects)
        for (const auto& x : a->objects)
            for (const auto& y : a->objects)
                for (const auto& z : a->objects) {
                    std::string obj = pair_label(pair_label(x, y), z);
                    std::map<std::string, std::string> table;
                    for (const auto& h1 : a->hom(o, x))
                        for (const auto& h2 : a->hom(o, y))
                            for (const auto& h3 : a->hom(o, z))
                                table[pair_label(h1, pair_label(h2, h3))] =
                                    pair_label(pair_label(h1, h2), h3);
                    t.components[{o, obj}] = SetMap(rhs.at(o, obj), lhs.at(o, obj), std::move(table));
                }
    rep.assoc = check_dist_iso(rhs, lhs, t);
    return rep;
}

std::pair<IsoReport, IsoReport> comonoid_pushpull_iso(CatPtr a, const Presheaf& r,
                                                      const Presheaf& s, const SizeLimits& caps) {
    IsoReport push_rep = fiber_and_vs_pointwise(a, r, s, caps);

    // pull_{Δ̂+}(R⊗S) ≅ pointwise product
    Distributor plus = emb_plus(diagonal_functor(a));
    Presheaf rs = tensor(r, s);
    ForallResult fa = forall_along(plus, rs, caps);
    Presheaf pw = pointwise_product(r, s);

    NatTrans t;
    t.src = pw;
    t.tgt = fa.psh;
    for (const auto& o : a->objects) {
        const EndResult& end = fa.per_object.at(o);
        std::map<std::string, std::string> table;
        for (const auto& x : r.at(o).elements)
            for (const auto& y : s.at(o).elements) {
                Family fam;
                for (const auto& a1 : a->objects)
                    for (const auto& a2 : a->objects) {
                        std::map<std::string, std::string> tb;
                        for (const auto& h1 : a->hom(a1, o))
                            for (const auto& h2 : a->hom(a2, o))
                                tb[pair_label(h1, h2)] =
                                    pair_label(r.action(h1)(x), s.action(h2)(y));
                        fam[pair_label(a1, a2)] = std::move(tb);
                    }
                std::string label = family_label(fam);
                if (!end.families.count(label))
                    throw engine_error("comonoid_pushpull: canonical family not in the pull side");
                table[pair_label(x, y)] = label;
            }
        t.components[o] = SetMap(pw.at(o), fa.psh.at(o), std::move(table));
    }
    IsoReport pull_rep = check_iso(pw, fa.psh, t);
    return {push_rep, pull_rep};
}

} // namespace psh
