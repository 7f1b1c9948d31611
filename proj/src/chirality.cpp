#include "psh/chirality.hpp"

namespace psh {

CoPresheaf dual_presheaf(const Presheaf& r) {
    if (r.variance != Variance::contra)
        throw std::invalid_argument("dual_presheaf: expected a contravariant presheaf");
    CoPresheaf d = r;
    d.name = r.name + "*";
    d.base = share(opposite(*r.base));
    d.variance = Variance::co;
    return d;
}

Presheaf undual_presheaf(const CoPresheaf& r) {
    if (r.variance != Variance::co)
        throw std::invalid_argument("undual_presheaf: expected a covariant presheaf");
    Presheaf d = r;
    d.name = "*" + r.name;
    d.base = share(opposite(*r.base));
    d.variance = Variance::contra;
    return d;
}

Distributor dual_dist(const Distributor& m) {
    Distributor d;
    d.name = m.name + "*";
    d.src = share(opposite(*m.tgt));
    d.tgt = share(opposite(*m.src));
    for (const auto& [key, v] : m.values) d.values[{key.second, key.first}] = v;
    // left action of M* over A^op is M's right action, and vice versa
    for (const auto& [key, v] : m.right_action) d.left_action[{key.second, key.first}] = v;
    for (const auto& [key, v] : m.left_action) d.right_action[{key.second, key.first}] = v;
    return d;
}

ExistsQResult exists_q(const Distributor& m, const CoPresheaf& r, const SizeLimits& caps) {
    if (r.variance != Variance::co)
        throw std::invalid_argument("exists_q: predicate must be covariant");
    if (!equal_structure(*r.base, *m.src))
        throw std::invalid_argument("exists_q: base does not match");
    ExistsQResult res;
    const Category& a_cat = *m.src;
    const Category& b_cat = *m.tgt;

    for (const auto& b : b_cat.objects) {
        std::vector<EndIndex> indices;
        for (const auto& a : a_cat.objects) indices.push_back({a, m.at(b, a), r.at(a)});
        std::vector<EndConstraint> cons;
        // for f : a -> a': phi_{a'}(right(f)(x)) = R(f)(phi_a(x))
        for (const auto& f : a_cat.morphisms)
            cons.push_back({f.src, f.tgt, m.right(b, f.name), r.action(f.name)});
        res.per_object[b] = end_families(indices, cons, caps);
    }

    CoPresheaf p;
    p.name = "∃q_" + m.name + "(" + r.name + ")";
    p.base = m.tgt;
    p.variance = Variance::co;
    for (const auto& b : b_cat.objects) p.values[b] = res.per_object[b].value;
    for (const auto& g : b_cat.morphisms) {
        // covariant: family at dom(g) -> family at cod(g), precompose M's left action
        const EndResult& from = res.per_object.at(g.src);
        const EndResult& to = res.per_object.at(g.tgt);
        std::map<std::string, std::string> table;
        for (const auto& [label, fam] : from.families) {
            Family moved;
            for (const auto& a : a_cat.objects) {
                const SetMap& lg = m.left(g.name, a); // M(cod g, a) -> M(dom g, a)
                std::map<std::string, std::string> tb;
                for (const auto& x : lg.src.elements) tb[x] = fam.at(a).at(lg(x));
                moved[a] = std::move(tb);
            }
            std::string moved_label = family_label(moved);
            if (!to.families.count(moved_label))
                throw engine_error("exists_q: transported family not natural at '" + g.name + "'");
            table[label] = moved_label;
        }
        p.actions[g.name] = SetMap(p.values[g.src], p.values[g.tgt], std::move(table));
    }
    res.psh = std::move(p);
    return res;
}

ForallQResult forall_q(const Distributor& m, const CoPresheaf& s, const SizeLimits& caps) {
    if (s.variance != Variance::co)
        throw std::invalid_argument("forall_q: predicate must be covariant");
    if (!equal_structure(*s.base, *m.tgt))
        throw std::invalid_argument("forall_q: base does not match");
    ForallQResult res;
    const Category& a_cat = *m.src;
    const Category& b_cat = *m.tgt;

    for (const auto& a : a_cat.objects) {
        std::vector<CoendPiece> pieces;
        for (const auto& b : b_cat.objects) pieces.push_back({b, m.at(b, a), s.at(b)});
        std::vector<CoendRelation> rels;
        // for g : b' -> b: (b', left(g)(x), y) ~ (b, x, S(g)(y))
        for (const auto& g : b_cat.morphisms)
            rels.push_back({g.tgt, g.src, m.left(g.name, a), s.action(g.name)});
        res.per_object[a] = coend(pieces, rels, caps);
    }

    CoPresheaf p;
    p.name = "∀q_" + m.name + "(" + s.name + ")";
    p.base = m.src;
    p.variance = Variance::co;
    for (const auto& a : a_cat.objects) p.values[a] = res.per_object[a].value;
    for (const auto& f : a_cat.morphisms) {
        // covariant: class at dom(f) -> class at cod(f) via M's right action
        const CoendResult& from = res.per_object.at(f.src);
        const CoendResult& to = res.per_object.at(f.tgt);
        std::map<std::string, std::string> table;
        for (const auto& members : from.classes) {
            std::string image;
            for (const auto& [b, x, y] : members) {
                const std::string& img = to.cls(b, m.right(b, f.name)(x), y);
                if (image.empty())
                    image = img;
                else if (image != img)
                    throw engine_error("forall_q: induced action of '" + f.name +
                                       "' not well-defined");
            }
            table[from.inject.at(members.front())] = image;
        }
        p.actions[f.name] = SetMap(p.values[f.src], p.values[f.tgt], std::move(table));
    }
    res.psh = std::move(p);
    return res;
}

IsoReport law_a(const Distributor& m, const Presheaf& s, const SizeLimits& caps) {
    ForallResult lhs = forall_along(m, s, caps);
    ExistsQResult rhs_q = exists_q(dual_dist(m), dual_presheaf(s), caps);
    Presheaf rhs = undual_presheaf(rhs_q.psh);
    rhs.base = m.src; // same structure; keep the original pointer for the report

    // the two ends have literally the same families; the canonical map matches
    // each family with its relabelled twin
    NatTrans t;
    t.src = lhs.psh;
    t.tgt = rhs;
    for (const auto& a : m.src->objects) {
        std::map<std::string, std::string> table;
        for (const auto& [label, fam] : lhs.per_object.at(a).families) {
            std::string twin = family_label(fam);
            if (!rhs.at(a).contains(twin))
                throw engine_error("law_a: family missing on the dual side at " + a);
            table[label] = twin;
        }
        t.components[a] = SetMap(lhs.psh.at(a), rhs.at(a), std::move(table));
    }
    return check_iso(lhs.psh, rhs, t);
}

IsoReport law_b(const Distributor& m, const CoPresheaf& s, const SizeLimits& caps) {
    ForallQResult lhs = forall_q(m, s, caps);
    ExistsResult rhs_p = exists_along(dual_dist(m), undual_presheaf(s), caps);
    CoPresheaf rhs = dual_presheaf(rhs_p.psh);
    rhs.base = m.src;

    // both sides are the same quotient of the same disjoint union
    NatTrans t;
    t.src = lhs.psh;
    t.tgt = rhs;
    for (const auto& a : m.src->objects) {
        const CoendResult& lco = lhs.per_object.at(a);
        const CoendResult& rco = rhs_p.per_object.at(a);
        std::map<std::string, std::string> table;
        for (const auto& members : lco.classes) {
            const auto& [b, x, y] = members.front();
            table[lco.inject.at(members.front())] = rco.cls(b, x, y);
        }
        t.components[a] = SetMap(lhs.psh.at(a), rhs.at(a), std::move(table));
    }
    return check_iso(lhs.psh, rhs, t);
}

} // namespace psh
