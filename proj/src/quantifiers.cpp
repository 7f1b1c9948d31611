#include "psh/quantifiers.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace psh {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    void unite(std::size_t i, std::size_t j) { parent[find(i)] = find(j); }
};

} // namespace

const std::string& CoendResult::cls(const std::string& index, const std::string& x,
                                    const std::string& y) const {
    auto it = inject.find({index, x, y});
    if (it == inject.end())
        throw engine_error("coend: no class for item (" + index + "," + x + "," + y + ")");
    return it->second;
}

CoendResult coend(const std::vector<CoendPiece>& pieces,
                  const std::vector<CoendRelation>& relations, const SizeLimits& caps) {
    std::vector<std::array<std::string, 3>> items;
    std::map<std::array<std::string, 3>, std::size_t> pos;
    std::map<std::string, const CoendPiece*> by_index;
    for (const auto& p : pieces) {
        by_index[p.index] = &p;
        for (const auto& x : p.xs.elements)
            for (const auto& y : p.ys.elements) {
                pos[{p.index, x, y}] = items.size();
                items.push_back({p.index, x, y});
                if (items.size() > caps.coend_items)
                    throw cap_error("coend disjoint union exceeds size cap");
            }
    }
    UnionFind uf(items.size());
    // one generation pass: union-find closes the relation symmetrically/transitively
    for (const auto& rel : relations) {
        const CoendPiece& from = *by_index.at(rel.from);
        const CoendPiece& to = *by_index.at(rel.to);
        for (const auto& x : from.xs.elements)
            for (const auto& y : to.ys.elements)
                uf.unite(pos.at({rel.to, rel.x_map(x), y}), pos.at({rel.from, x, rel.y_map(y)}));
    }
    // classes keyed by their least member
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < items.size(); ++i) groups[uf.find(i)].push_back(i);

    CoendResult res;
    std::vector<std::string> labels;
    for (auto& [root, members] : groups) {
        std::vector<std::array<std::string, 3>> mem;
        for (auto i : members) mem.push_back(items[i]);
        std::sort(mem.begin(), mem.end());
        std::string label = triple_label(mem[0][0], mem[0][1], mem[0][2]);
        labels.push_back(label);
        for (const auto& it : mem) res.inject[it] = label;
        res.classes.push_back(std::move(mem));
    }
    std::sort(res.classes.begin(), res.classes.end());
    res.value = FinSet("coend", std::move(labels));
    return res;
}

std::string family_label(const Family& fam) {
    std::string s = "{";
    bool first = true;
    for (const auto& [idx, table] : fam) {
        if (!first) s += ";";
        first = false;
        s += idx + ":" + fun_label(table);
    }
    return s + "}";
}

const Family& EndResult::family(const std::string& label) const {
    auto it = families.find(label);
    if (it == families.end()) throw engine_error("end: unknown family '" + label + "'");
    return it->second;
}

EndResult end_families(const std::vector<EndIndex>& indices,
                       const std::vector<EndConstraint>& constraints, const SizeLimits& caps) {
    EndResult res;
    // family space size check
    double space = 1;
    std::vector<std::vector<std::map<std::string, std::string>>> options;
    for (const auto& ix : indices) {
        options.push_back(all_functions(ix.dom, ix.cod));
        space *= static_cast<double>(std::max<std::size_t>(options.back().size(), 1));
        if (space > static_cast<double>(caps.family_space))
            throw cap_error("end family space exceeds cap");
        if (options.back().empty()) { // no function dom -> cod at some index
            res.value = FinSet("end", {});
            return res;
        }
    }
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < indices.size(); ++i) pos[indices[i].index] = i;

    // each constraint fires once both its endpoints are assigned, pruning the
    // search tree early
    std::vector<std::vector<const EndConstraint*>> trigger(indices.size());
    for (const auto& c : constraints)
        trigger[std::max(pos.at(c.src), pos.at(c.dst))].push_back(&c);

    std::vector<std::string> labels;
    std::vector<const std::map<std::string, std::string>*> current(indices.size(), nullptr);
    auto consistent = [&](std::size_t level) {
        for (const EndConstraint* c : trigger[level]) {
            const auto& phi_src = *current[pos.at(c->src)];
            const auto& phi_dst = *current[pos.at(c->dst)];
            for (const auto& [x, fx] : phi_src)
                if (phi_dst.at(c->dom_map(x)) != c->cod_map(fx)) return false;
        }
        return true;
    };
    std::function<void(std::size_t)> descend = [&](std::size_t level) {
        if (level == indices.size()) {
            Family fam;
            for (std::size_t i = 0; i < indices.size(); ++i) fam[indices[i].index] = *current[i];
            std::string label = family_label(fam);
            labels.push_back(label);
            res.families[label] = std::move(fam);
            return;
        }
        for (const auto& table : options[level]) {
            current[level] = &table;
            if (consistent(level)) descend(level + 1);
        }
    };
    descend(0);
    res.value = FinSet("end", std::move(labels));
    return res;
}

// ---------------------------------------------------------------------------

namespace {

void require_contra_on(const Presheaf& p, const Category& base, const char* who) {
    if (p.variance != Variance::contra)
        throw std::invalid_argument(std::string(who) + ": presheaf must be contravariant");
    if (!equal_structure(*p.base, base))
        throw std::invalid_argument(std::string(who) + ": presheaf base does not match");
}

} // namespace

ExistsResult exists_along(const Distributor& m, const Presheaf& r, const SizeLimits& caps) {
    require_contra_on(r, *m.src, "exists_along");
    ExistsResult res;
    const Category& a_cat = *m.src;
    const Category& b_cat = *m.tgt;

    for (const auto& b : b_cat.objects) {
        std::vector<CoendPiece> pieces;
        for (const auto& a : a_cat.objects) pieces.push_back({a, m.at(b, a), r.at(a)});
        std::vector<CoendRelation> rels;
        for (const auto& f : a_cat.morphisms)
            rels.push_back({f.src, f.tgt, m.right(b, f.name), r.action(f.name)});
        res.per_object[b] = coend(pieces, rels, caps);
    }

    Presheaf p;
    p.name = "∃_" + m.name + "(" + r.name + ")";
    p.base = m.tgt;
    p.variance = Variance::contra;
    for (const auto& b : b_cat.objects) p.values[b] = res.per_object[b].value;
    for (const auto& g : b_cat.morphisms) {
        // class at cod(g) -> class at dom(g), induced by the left action on representatives
        const CoendResult& from = res.per_object.at(g.tgt);
        const CoendResult& to = res.per_object.at(g.src);
        std::map<std::string, std::string> table;
        for (const auto& members : from.classes) {
            std::string image;
            for (const auto& [a, x, y] : members) {
                const std::string& img = to.cls(a, m.left(g.name, a)(x), y);
                if (image.empty())
                    image = img;
                else if (image != img)
                    throw engine_error("exists_along: induced action of '" + g.name +
                                       "' not well-defined on class of (" + a + "," + x + "," + y +
                                       ")");
            }
            table[from.inject.at(members.front())] = image;
        }
        p.actions[g.name] = SetMap(p.values[g.tgt], p.values[g.src], std::move(table));
    }
    res.psh = std::move(p);
    return res;
}

ForallResult forall_along(const Distributor& m, const Presheaf& s, const SizeLimits& caps) {
    require_contra_on(s, *m.tgt, "forall_along");
    ForallResult res;
    const Category& a_cat = *m.src;
    const Category& b_cat = *m.tgt;

    for (const auto& a : a_cat.objects) {
        std::vector<EndIndex> indices;
        for (const auto& b : b_cat.objects) indices.push_back({b, m.at(b, a), s.at(b)});
        std::vector<EndConstraint> cons;
        for (const auto& g : b_cat.morphisms)
            cons.push_back({g.tgt, g.src, m.left(g.name, a), s.action(g.name)});
        res.per_object[a] = end_families(indices, cons, caps);
    }

    Presheaf p;
    p.name = "∀_" + m.name + "(" + s.name + ")";
    p.base = m.src;
    p.variance = Variance::contra;
    for (const auto& a : a_cat.objects) p.values[a] = res.per_object[a].value;
    for (const auto& f : a_cat.morphisms) {
        // family at cod(f) -> family at dom(f): precompose with the right action
        const EndResult& from = res.per_object.at(f.tgt);
        const EndResult& to = res.per_object.at(f.src);
        std::map<std::string, std::string> table;
        for (const auto& [label, fam] : from.families) {
            Family moved;
            for (const auto& b : b_cat.objects) {
                const SetMap& rf = m.right(b, f.name); // M(b, dom f) -> M(b, cod f)
                std::map<std::string, std::string> tb;
                for (const auto& x : rf.src.elements) tb[x] = fam.at(b).at(rf(x));
                moved[b] = std::move(tb);
            }
            std::string moved_label = family_label(moved);
            if (!to.families.count(moved_label))
                throw engine_error("forall_along: transported family not natural at '" + f.name +
                                   "'");
            table[label] = moved_label;
        }
        p.actions[f.name] = SetMap(p.values[f.tgt], p.values[f.src], std::move(table));
    }
    res.psh = std::move(p);
    return res;
}

NatTrans coyoneda_map(const ExistsResult& ex, const Presheaf& r) {
    NatTrans t;
    t.src = ex.psh;
    t.tgt = r;
    for (const auto& b : r.base->objects) {
        const CoendResult& co = ex.per_object.at(b);
        std::map<std::string, std::string> table;
        for (const auto& members : co.classes) {
            std::string image;
            for (const auto& [a, h, y] : members) {
                // h : b -> a in the base, R(h) : R(a) -> R(b)
                const std::string& img = r.action(h)(y);
                if (image.empty())
                    image = img;
                else if (image != img)
                    throw engine_error("coyoneda_map: collapse not well-defined at " + b);
            }
            table[co.inject.at(members.front())] = image;
        }
        t.components[b] = SetMap(ex.psh.at(b), r.at(b), std::move(table));
    }
    return t;
}

NatTrans yoneda_unit(const Presheaf& s, const ForallResult& fa) {
    NatTrans t;
    t.src = s;
    t.tgt = fa.psh;
    for (const auto& a : s.base->objects) {
        const EndResult& end = fa.per_object.at(a);
        std::map<std::string, std::string> table;
        for (const auto& x : s.at(a).elements) {
            Family fam;
            for (const auto& b : s.base->objects) {
                std::map<std::string, std::string> tb;
                for (const auto& h : s.base->hom(b, a)) tb[h] = s.action(h)(x);
                fam[b] = std::move(tb);
            }
            std::string label = family_label(fam);
            if (!end.families.count(label))
                throw engine_error("yoneda_unit: canonical family not in end at " + a);
            table[x] = label;
        }
        t.components[a] = SetMap(s.at(a), fa.psh.at(a), std::move(table));
    }
    return t;
}

NatTrans exists_fiber_map(const Distributor& m, const NatTrans& t, const ExistsResult& exR,
                          const ExistsResult& exR2) {
    NatTrans out;
    out.src = exR.psh;
    out.tgt = exR2.psh;
    for (const auto& b : m.tgt->objects) {
        const CoendResult& from = exR.per_object.at(b);
        const CoendResult& to = exR2.per_object.at(b);
        std::map<std::string, std::string> table;
        for (const auto& members : from.classes) {
            std::string image;
            for (const auto& [a, x, y] : members) {
                const std::string& img = to.cls(a, x, t.components.at(a)(y));
                if (image.empty())
                    image = img;
                else if (image != img)
                    throw engine_error("exists_fiber_map: not well-defined");
            }
            table[from.inject.at(members.front())] = image;
        }
        out.components[b] = SetMap(exR.psh.at(b), exR2.psh.at(b), std::move(table));
    }
    return out;
}

// alpha : ∃_M R -> S   becomes   beta : R -> ∀_M S
NatTrans transpose_down(const Distributor& m, const NatTrans& alpha, const Presheaf& r,
                        const ExistsResult& exR, const ForallResult& faS) {
    NatTrans beta;
    beta.src = r;
    beta.tgt = faS.psh;
    for (const auto& a : m.src->objects) {
        const EndResult& end = faS.per_object.at(a);
        std::map<std::string, std::string> table;
        for (const auto& x : r.at(a).elements) {
            Family fam;
            for (const auto& b : m.tgt->objects) {
                std::map<std::string, std::string> tb;
                for (const auto& mm : m.at(b, a).elements)
                    tb[mm] = alpha.components.at(b)(exR.per_object.at(b).cls(a, mm, x));
                fam[b] = std::move(tb);
            }
            std::string label = family_label(fam);
            if (!end.families.count(label))
                throw engine_error("transpose_down: transposed family not natural");
            table[x] = label;
        }
        beta.components[a] = SetMap(r.at(a), faS.psh.at(a), std::move(table));
    }
    return beta;
}

// beta : R -> ∀_M S   becomes   alpha : ∃_M R -> S
NatTrans transpose_up(const Distributor& m, const NatTrans& beta, const Presheaf& s,
                      const ExistsResult& exR, const ForallResult& faS) {
    NatTrans alpha;
    alpha.src = exR.psh;
    alpha.tgt = s;
    for (const auto& b : m.tgt->objects) {
        const CoendResult& co = exR.per_object.at(b);
        std::map<std::string, std::string> table;
        for (const auto& members : co.classes) {
            std::string image;
            for (const auto& [a, mm, x] : members) {
                const std::string& famlabel = beta.components.at(a)(x);
                const Family& fam = faS.per_object.at(a).family(famlabel);
                const std::string& img = fam.at(b).at(mm);
                if (image.empty())
                    image = img;
                else if (image != img)
                    throw engine_error("transpose_up: not well-defined on a coend class");
            }
            table[co.inject.at(members.front())] = image;
        }
        alpha.components[b] = SetMap(exR.psh.at(b), s.at(b), std::move(table));
    }
    return alpha;
}

AdjunctionReport adjunction_check(const Distributor& m, const Presheaf& r, const Presheaf& s,
                                  const SizeLimits& caps) {
    AdjunctionReport rep;
    ExistsResult exR = exists_along(m, r, caps);
    ForallResult faS = forall_along(m, s, caps);
    auto ups = enumerate_nattrans(exR.psh, s, caps);
    auto downs = enumerate_nattrans(r, faS.psh, caps);
    rep.hom_up = ups.size();
    rep.hom_down = downs.size();
    if (ups.size() != downs.size()) {
        rep.failure = "hom-set sizes differ";
        return rep;
    }

    auto key = [](const NatTrans& t) {
        std::string k;
        for (const auto& [o, c] : t.components) k += o + "=" + fun_label(c.table) + ";";
        return k;
    };
    std::map<std::string, std::size_t> down_index;
    for (std::size_t i = 0; i < downs.size(); ++i) down_index[key(downs[i])] = i;

    std::vector<bool> hit(downs.size(), false);
    for (const auto& alpha : ups) {
        NatTrans beta = transpose_down(m, alpha, r, exR, faS);
        if (!validate(beta).empty()) {
            rep.failure = "transpose of a fiber morphism is not natural";
            return rep;
        }
        auto it = down_index.find(key(beta));
        if (it == down_index.end()) {
            rep.failure = "transpose lands outside the enumerated hom-set";
            return rep;
        }
        if (hit[it->second]) {
            rep.failure = "transposition is not injective";
            return rep;
        }
        hit[it->second] = true;
        NatTrans back = transpose_up(m, beta, s, exR, faS);
        if (key(back) != key(alpha)) {
            rep.failure = "transposes are not mutually inverse";
            return rep;
        }
    }
    for (bool h : hit)
        if (!h) {
            rep.failure = "transposition is not surjective";
            return rep;
        }
    rep.holds = true;
    return rep;
}

IsoReport compose_quantifier_iso(const Distributor& n, const Distributor& m, const Presheaf& r,
                                 const SizeLimits& caps) {
    if (!equal_structure(*m.tgt, *n.src))
        throw std::invalid_argument("compose_quantifier_iso: distributors not composable");
    ExistsResult inner = exists_along(m, r, caps);
    ExistsResult outer = exists_along(n, inner.psh, caps);
    ComposedDist nm = compose_dist(n, m, caps);
    ExistsResult direct = exists_along(nm.dist, r, caps);

    NatTrans t;
    t.src = outer.psh;
    t.tgt = direct.psh;
    for (const auto& c : n.tgt->objects) {
        const CoendResult& co = outer.per_object.at(c);
        std::map<std::string, std::string> table;
        for (const auto& members : co.classes) {
            std::string image;
            for (const auto& [b, nn, inner_class] : members) {
                // expand the inner class and land in the composite coend
                bool found = false;
                for (const auto& inner_members : inner.per_object.at(b).classes) {
                    if (inner.per_object.at(b).inject.at(inner_members.front()) != inner_class)
                        continue;
                    for (const auto& [a, mm, x] : inner_members) {
                        const std::string& pair_cls = nm.inject.at({c, a}).at({b, nn, mm});
                        const std::string& img = direct.per_object.at(c).cls(a, pair_cls, x);
                        if (image.empty())
                            image = img;
                        else if (image != img)
                            throw engine_error("compose_quantifier_iso: map not well-defined");
                    }
                    found = true;
                    break;
                }
                if (!found) throw engine_error("compose_quantifier_iso: missing inner class");
            }
            table[co.inject.at(members.front())] = image;
        }
        t.components[c] = SetMap(outer.psh.at(c), direct.psh.at(c), std::move(table));
    }
    return check_iso(outer.psh, direct.psh, t);
}

// ---------------------------------------------------------------------------
// distributor composition via the same quotient construction

ComposedDist compose_dist(const Distributor& n, const Distributor& m, const SizeLimits& caps) {
    if (!equal_structure(*m.tgt, *n.src))
        throw std::invalid_argument("compose_dist: middle categories differ");
    ComposedDist res;
    const Category& a_cat = *m.src;
    const Category& b_cat = *m.tgt;
    const Category& c_cat = *n.tgt;

    std::map<std::pair<std::string, std::string>, CoendResult> coends;
    for (const auto& c : c_cat.objects)
        for (const auto& a : a_cat.objects) {
            std::vector<CoendPiece> pieces;
            for (const auto& b : b_cat.objects) pieces.push_back({b, n.at(c, b), m.at(b, a)});
            std::vector<CoendRelation> rels;
            for (const auto& g : b_cat.morphisms)
                rels.push_back({g.src, g.tgt, n.right(c, g.name), m.left(g.name, a)});
            coends[{c, a}] = coend(pieces, rels, caps);
        }

    Distributor d;
    d.name = n.name + "∘" + m.name;
    d.src = m.src;
    d.tgt = n.tgt;
    for (auto& [key, co] : coends) {
        d.values[key] = co.value;
        res.inject[key] = co.inject;
    }

    auto induced = [&](const CoendResult& from, const CoendResult& to, auto&& item_map) {
        std::map<std::string, std::string> table;
        for (const auto& members : from.classes) {
            std::string image;
            for (const auto& item : members) {
                auto [b2, x2, y2] = item_map(item);
                const std::string& img = to.cls(b2, x2, y2);
                if (image.empty())
                    image = img;
                else if (image != img)
                    throw engine_error("compose_dist: induced action not well-defined");
            }
            table[from.inject.at(members.front())] = image;
        }
        return table;
    };

    for (const auto& h : c_cat.morphisms) // left: N's left action on representatives
        for (const auto& a : a_cat.objects) {
            const CoendResult& from = coends.at({h.tgt, a});
            const CoendResult& to = coends.at({h.src, a});
            auto table = induced(from, to, [&](const std::array<std::string, 3>& it) {
                return std::array<std::string, 3>{it[0], n.left(h.name, it[0])(it[1]), it[2]};
            });
            d.left_action[{h.name, a}] = SetMap(from.value, to.value, std::move(table));
        }
    for (const auto& c : c_cat.objects) // right: M's right action on representatives
        for (const auto& f : a_cat.morphisms) {
            const CoendResult& from = coends.at({c, f.src});
            const CoendResult& to = coends.at({c, f.tgt});
            auto table = induced(from, to, [&](const std::array<std::string, 3>& it) {
                return std::array<std::string, 3>{it[0], it[1], m.right(it[0], f.name)(it[2])};
            });
            d.right_action[{c, f.name}] = SetMap(from.value, to.value, std::move(table));
        }
    res.dist = std::move(d);
    return res;
}

} // namespace psh
