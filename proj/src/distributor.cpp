#include "psh/distributor.hpp"

#include <sstream>

namespace psh {

const FinSet& Distributor::at(const std::string& b, const std::string& a) const {
    auto it = values.find({b, a});
    if (it == values.end())
        throw std::out_of_range("distributor " + name + ": no value at (" + b + "," + a + ")");
    return it->second;
}

const SetMap& Distributor::left(const std::string& g, const std::string& a) const {
    auto it = left_action.find({g, a});
    if (it == left_action.end())
        throw std::out_of_range("distributor " + name + ": no left action (" + g + "," + a + ")");
    return it->second;
}

const SetMap& Distributor::right(const std::string& b, const std::string& f) const {
    auto it = right_action.find({b, f});
    if (it == right_action.end())
        throw std::out_of_range("distributor " + name + ": no right action (" + b + "," + f + ")");
    return it->second;
}

std::vector<std::string> validate(const Distributor& m) {
    std::vector<std::string> out;
    if (!m.src || !m.tgt) return {"distributor has no src/tgt category"};
    for (const auto& b : m.tgt->objects)
        for (const auto& a : m.src->objects)
            if (!m.values.count({b, a})) out.push_back("no value at (" + b + "," + a + ")");
    for (const auto& g : m.tgt->morphisms)
        for (const auto& a : m.src->objects)
            if (!m.left_action.count({g.name, a}))
                out.push_back("no left action for (" + g.name + "," + a + ")");
    for (const auto& b : m.tgt->objects)
        for (const auto& f : m.src->morphisms)
            if (!m.right_action.count({b, f.name}))
                out.push_back("no right action for (" + b + "," + f.name + ")");
    if (!out.empty()) return out;

    for (const auto& g : m.tgt->morphisms)
        for (const auto& a : m.src->objects) {
            const SetMap& l = m.left(g.name, a);
            if (l.src != m.at(g.tgt, a) || l.tgt != m.at(g.src, a))
                out.push_back("left action (" + g.name + "," + a + ") has wrong profile");
            else
                for (const auto& v : validate(l))
                    out.push_back("left action (" + g.name + "," + a + "): " + v);
        }
    for (const auto& b : m.tgt->objects)
        for (const auto& f : m.src->morphisms) {
            const SetMap& r = m.right(b, f.name);
            if (r.src != m.at(b, f.src) || r.tgt != m.at(b, f.tgt))
                out.push_back("right action (" + b + "," + f.name + ") has wrong profile");
            else
                for (const auto& v : validate(r))
                    out.push_back("right action (" + b + "," + f.name + "): " + v);
        }
    if (!out.empty()) return out;

    for (const auto& b : m.tgt->objects)
        for (const auto& a : m.src->objects) {
            if (m.left(m.tgt->id_of(b), a).table != SetMap::identity(m.at(b, a)).table)
                out.push_back("left identity action at (" + b + "," + a + ") not identity");
            if (m.right(b, m.src->id_of(a)).table != SetMap::identity(m.at(b, a)).table)
                out.push_back("right identity action at (" + b + "," + a + ") not identity");
        }

    // left functoriality: for g2∘g1 in tgt, left(g2∘g1) = left(g1)∘left(g2)
    for (const auto& g2 : m.tgt->morphisms)
        for (const auto& g1 : m.tgt->morphisms) {
            if (g1.tgt != g2.src) continue;
            const std::string& gg = m.tgt->compose(g2.name, g1.name);
            for (const auto& a : m.src->objects)
                if (m.left(gg, a).table != compose(m.left(g1.name, a), m.left(g2.name, a)).table)
                    out.push_back("left functoriality fails on (" + g2.name + "∘" + g1.name +
                                  ") at " + a);
        }
    // right functoriality: for f2∘f1 in src, right(f2∘f1) = right(f2)∘right(f1)
    for (const auto& f2 : m.src->morphisms)
        for (const auto& f1 : m.src->morphisms) {
            if (f1.tgt != f2.src) continue;
            const std::string& ff = m.src->compose(f2.name, f1.name);
            for (const auto& b : m.tgt->objects)
                if (m.right(b, ff).table != compose(m.right(b, f2.name), m.right(b, f1.name)).table)
                    out.push_back("right functoriality fails on (" + f2.name + "∘" + f1.name +
                                  ") at " + b);
        }

    // actions commute: for g : b'->b in tgt and f : a->a' in src
    for (const auto& g : m.tgt->morphisms)
        for (const auto& f : m.src->morphisms) {
            SetMap lhs = compose(m.right(g.src, f.name), m.left(g.name, f.src));
            SetMap rhs = compose(m.left(g.name, f.tgt), m.right(g.tgt, f.name));
            if (lhs.table != rhs.table)
                out.push_back("action square fails on (" + g.name + "," + f.name + "," + g.tgt +
                              "," + f.src + ")");
        }
    return out;
}

bool same_distributor(const Distributor& a, const Distributor& b) {
    if (!equal_structure(*a.src, *b.src) || !equal_structure(*a.tgt, *b.tgt)) return false;
    if (a.values.size() != b.values.size()) return false;
    for (const auto& [k, v] : a.values) {
        auto it = b.values.find(k);
        if (it == b.values.end() || !(it->second == v)) return false;
    }
    for (const auto& [k, v] : a.left_action) {
        auto it = b.left_action.find(k);
        if (it == b.left_action.end() || it->second.table != v.table) return false;
    }
    for (const auto& [k, v] : a.right_action) {
        auto it = b.right_action.find(k);
        if (it == b.right_action.end() || it->second.table != v.table) return false;
    }
    return true;
}

Distributor identity_dist(CatPtr a) {
    Distributor d;
    d.name = "id_" + a->name;
    d.src = a;
    d.tgt = a;
    for (const auto& b : a->objects)
        for (const auto& x : a->objects) d.values[{b, x}] = a->hom_set(b, x);
    for (const auto& g : a->morphisms)
        for (const auto& x : a->objects) {
            // precomposition hom(cod g, x) -> hom(dom g, x)
            std::map<std::string, std::string> t;
            for (const auto& h : a->hom(g.tgt, x)) t[h] = a->compose(h, g.name);
            d.left_action[{g.name, x}] = SetMap(d.values[{g.tgt, x}], d.values[{g.src, x}], std::move(t));
        }
    for (const auto& b : a->objects)
        for (const auto& f : a->morphisms) {
            // postcomposition hom(b, dom f) -> hom(b, cod f)
            std::map<std::string, std::string> t;
            for (const auto& h : a->hom(b, f.src)) t[h] = a->compose(f.name, h);
            d.right_action[{b, f.name}] = SetMap(d.values[{b, f.src}], d.values[{b, f.tgt}], std::move(t));
        }
    return d;
}

Distributor tensor_dist(const Distributor& m, const Distributor& n) {
    Distributor d;
    d.name = pair_label(m.name, n.name);
    d.src = share(product(*m.src, *n.src));
    d.tgt = share(product(*m.tgt, *n.tgt));
    for (const auto& bm : m.tgt->objects)
        for (const auto& bn : n.tgt->objects)
            for (const auto& am : m.src->objects)
                for (const auto& an : n.src->objects)
                    d.values[{pair_label(bm, bn), pair_label(am, an)}] =
                        product_set(m.at(bm, am), n.at(bn, an));
    for (const auto& gm : m.tgt->morphisms)
        for (const auto& gn : n.tgt->morphisms)
            for (const auto& am : m.src->objects)
                for (const auto& an : n.src->objects) {
                    const SetMap& lm = m.left(gm.name, am);
                    const SetMap& ln = n.left(gn.name, an);
                    std::map<std::string, std::string> t;
                    for (const auto& x : lm.src.elements)
                        for (const auto& y : ln.src.elements)
                            t[pair_label(x, y)] = pair_label(lm(x), ln(y));
                    d.left_action[{pair_label(gm.name, gn.name), pair_label(am, an)}] =
                        SetMap(d.values[{pair_label(gm.tgt, gn.tgt), pair_label(am, an)}],
                               d.values[{pair_label(gm.src, gn.src), pair_label(am, an)}],
                               std::move(t));
                }
    for (const auto& bm : m.tgt->objects)
        for (const auto& bn : n.tgt->objects)
            for (const auto& fm : m.src->morphisms)
                for (const auto& fn : n.src->morphisms) {
                    const SetMap& rm = m.right(bm, fm.name);
                    const SetMap& rn = n.right(bn, fn.name);
                    std::map<std::string, std::string> t;
                    for (const auto& x : rm.src.elements)
                        for (const auto& y : rn.src.elements)
                            t[pair_label(x, y)] = pair_label(rm(x), rn(y));
                    d.right_action[{pair_label(bm, bn), pair_label(fm.name, fn.name)}] =
                        SetMap(d.values[{pair_label(bm, bn), pair_label(fm.src, fn.src)}],
                               d.values[{pair_label(bm, bn), pair_label(fm.tgt, fn.tgt)}],
                               std::move(t));
                }
    return d;
}

Distributor curry_dist(const Distributor& m) {
    Distributor d;
    d.name = "curry(" + m.name + ")";
    d.src = share(terminal_category());
    d.tgt = share(product(opposite(*m.src), *m.tgt));
    for (const auto& a : m.src->objects)
        for (const auto& b : m.tgt->objects) d.values[{pair_label(a, b), "pt"}] = m.at(b, a);
    // left action for (u,v) : (a,b) -> (a',b') in A^op×B, i.e. u : a'->a in A, v : b->b'
    for (const auto& u : m.src->morphisms)
        for (const auto& v : m.tgt->morphisms) {
            // values((a',b'),pt) = M(b',a') -> values((a,b),pt) = M(b,a)
            SetMap step1 = m.left(v.name, u.src);  // M(b',a') -> M(b,a')  (u.src = a' in A)
            SetMap step2 = m.right(v.src, u.name); // M(b,a') -> M(b,a)    (u : a'->a)
            d.left_action[{pair_label(u.name, v.name), "pt"}] = compose(step2, step1);
        }
    for (const auto& a : m.src->objects)
        for (const auto& b : m.tgt->objects)
            d.right_action[{pair_label(a, b), "id_pt"}] =
                SetMap::identity(d.values[{pair_label(a, b), "pt"}]);
    return d;
}

Distributor curry_first(const Distributor& m, CatPtr x, CatPtr y) {
    Category prod = product(*x, *y);
    if (!equal_structure(prod, *m.src))
        throw std::invalid_argument("curry_first: source is not the given product");
    Distributor d;
    d.name = "curry(" + m.name + ")";
    d.src = y;
    d.tgt = share(product(opposite(*x), *m.tgt));
    for (const auto& xo : x->objects)
        for (const auto& zo : m.tgt->objects)
            for (const auto& yo : y->objects)
                d.values[{pair_label(xo, zo), yo}] = m.at(zo, pair_label(xo, yo));
    // left action for (u,w) : (x1,z1) -> (x2,z2) in X^op×Z, i.e. u : x2->x1 in X, w : z1->z2
    for (const auto& u : x->morphisms)
        for (const auto& w : m.tgt->morphisms)
            for (const auto& yo : y->objects) {
                // M(z2,(x2,y)) -> M(z1,(x2,y)) -> M(z1,(x1,y))  via left(w) then right(u×id)
                SetMap step1 = m.left(w.name, pair_label(u.src, yo));
                SetMap step2 = m.right(w.src, pair_label(u.name, y->id_of(yo)));
                d.left_action[{pair_label(u.name, w.name), yo}] = compose(step2, step1);
            }
    for (const auto& xo : x->objects)
        for (const auto& zo : m.tgt->objects)
            for (const auto& f : y->morphisms)
                d.right_action[{pair_label(xo, zo), f.name}] =
                    m.right(zo, pair_label(x->id_of(xo), f.name));
    return d;
}

namespace {

// values given by hom_A(pick_a_src, pick_a_tgt) × hom_B(pick_b_src, pick_b_tgt); shared
// shape of eval/dni/coev tables
FinSet hom_pair(const Category& a, const std::string& a1, const std::string& a2,
                const Category& b, const std::string& b1, const std::string& b2) {
    return product_set(a.hom_set(a1, a2), b.hom_set(b1, b2));
}

} // namespace

Distributor eval_dist(CatPtr a, CatPtr b) {
    // eval : A × (A^op × B) ⇸ B, values(b',(x,(a0,b0))) = hom_A(a0,x) × hom_B(b',b0)
    Distributor d;
    d.name = "eval(" + a->name + "," + b->name + ")";
    Category inner = product(opposite(*a), *b);
    d.src = share(product(*a, inner));
    d.tgt = b;
    for (const auto& bp : b->objects)
        for (const auto& x : a->objects)
            for (const auto& a0 : a->objects)
                for (const auto& b0 : b->objects)
                    d.values[{bp, pair_label(x, pair_label(a0, b0))}] =
                        hom_pair(*a, a0, x, *b, bp, b0);
    // left action, g : b1 -> b2 in B: (h,k) with k : b2->b0 goes to (h, k∘g)
    for (const auto& g : b->morphisms)
        for (const auto& x : a->objects)
            for (const auto& a0 : a->objects)
                for (const auto& b0 : b->objects) {
                    std::map<std::string, std::string> t;
                    for (const auto& h : a->hom(a0, x))
                        for (const auto& k : b->hom(g.tgt, b0))
                            t[pair_label(h, k)] = pair_label(h, b->compose(k, g.name));
                    d.left_action[{g.name, pair_label(x, pair_label(a0, b0))}] =
                        SetMap(d.values[{g.tgt, pair_label(x, pair_label(a0, b0))}],
                               d.values[{g.src, pair_label(x, pair_label(a0, b0))}], std::move(t));
                }
    // right action for (v,(u_op,w)) : (x,(a0,b0)) -> (x',(a0',b0')), i.e. v : x->x',
    // u : a0'->a0 in A, w : b0->b0': (h : a0->x, k : b'->b0) -> (v∘h∘u, w∘k)
    for (const auto& bp : b->objects)
        for (const auto& v : a->morphisms)
            for (const auto& u : a->morphisms)
                for (const auto& w : b->morphisms) {
                    std::map<std::string, std::string> t;
                    for (const auto& h : a->hom(u.tgt, v.src))
                        for (const auto& k : b->hom(bp, w.src))
                            t[pair_label(h, k)] =
                                pair_label(a->compose(v.name, a->compose(h, u.name)),
                                           b->compose(w.name, k));
                    d.right_action[{bp, pair_label(v.name, pair_label(u.name, w.name))}] =
                        SetMap(d.values[{bp, pair_label(v.src, pair_label(u.tgt, w.src))}],
                               d.values[{bp, pair_label(v.tgt, pair_label(u.src, w.tgt))}],
                               std::move(t));
                }
    return d;
}

Distributor dni_dist(CatPtr a, CatPtr b) {
    // dni : A ⇸ (A × B^op) × B, values(((a1,b1),b2),x) = hom_A(a1,x) × hom_B(b2,b1)
    Distributor d;
    d.name = "dni(" + a->name + "," + b->name + ")";
    Category impop = product(*a, opposite(*b)); // (A^op × B)^op
    d.src = a;
    d.tgt = share(product(impop, *b));
    for (const auto& a1 : a->objects)
        for (const auto& b1 : b->objects)
            for (const auto& b2 : b->objects)
                for (const auto& x : a->objects)
                    d.values[{pair_label(pair_label(a1, b1), b2), x}] =
                        hom_pair(*a, a1, x, *b, b2, b1);
    // left action for ((f,g_op),w) : ((a1,b1),b2) -> ((a1',b1'),b2')
    // i.e. f : a1->a1', g : b1'->b1, w : b2->b2'
    // (h : a1'->x, k : b2'->b1') -> (h∘f, g∘k∘w)
    for (const auto& f : a->morphisms)
        for (const auto& g : b->morphisms)
            for (const auto& w : b->morphisms)
                for (const auto& x : a->objects) {
                    std::map<std::string, std::string> t;
                    for (const auto& h : a->hom(f.tgt, x))
                        for (const auto& k : b->hom(w.tgt, g.src))
                            t[pair_label(h, k)] =
                                pair_label(a->compose(h, f.name),
                                           b->compose(g.name, b->compose(k, w.name)));
                    std::string glabel = pair_label(pair_label(f.name, g.name), w.name);
                    d.left_action[{glabel, x}] =
                        SetMap(d.values[{pair_label(pair_label(f.tgt, g.src), w.tgt), x}],
                               d.values[{pair_label(pair_label(f.src, g.tgt), w.src), x}],
                               std::move(t));
                }
    // right action for v : x->x': (h,k) -> (v∘h, k)
    for (const auto& a1 : a->objects)
        for (const auto& b1 : b->objects)
            for (const auto& b2 : b->objects)
                for (const auto& v : a->morphisms) {
                    std::map<std::string, std::string> t;
                    for (const auto& h : a->hom(a1, v.src))
                        for (const auto& k : b->hom(b2, b1))
                            t[pair_label(h, k)] = pair_label(a->compose(v.name, h), k);
                    std::string blabel = pair_label(pair_label(a1, b1), b2);
                    d.right_action[{blabel, v.name}] =
                        SetMap(d.values[{blabel, v.src}], d.values[{blabel, v.tgt}], std::move(t));
                }
    return d;
}

Distributor coev_dist(CatPtr a, CatPtr b) {
    // coev : B ⇸ A^op × (A × B), values((a0,(x,b0)),b') = hom_A(x,a0) × hom_B(b0,b')
    Distributor d;
    d.name = "coev(" + a->name + "," + b->name + ")";
    Category inner = product(*a, *b);
    d.src = b;
    d.tgt = share(product(opposite(*a), inner));
    for (const auto& a0 : a->objects)
        for (const auto& x : a->objects)
            for (const auto& b0 : b->objects)
                for (const auto& bp : b->objects)
                    d.values[{pair_label(a0, pair_label(x, b0)), bp}] =
                        hom_pair(*a, x, a0, *b, b0, bp);
    // left action for (u_op,(v,w)) : (a0,(x,b0)) -> (a0',(x',b0'))
    // i.e. u : a0'->a0 in A, v : x->x', w : b0->b0'
    // (h : x'->a0', k : b0'->b') -> (u∘h∘v, k∘w)
    for (const auto& u : a->morphisms)
        for (const auto& v : a->morphisms)
            for (const auto& w : b->morphisms)
                for (const auto& bp : b->objects) {
                    std::map<std::string, std::string> t;
                    for (const auto& h : a->hom(v.tgt, u.src))
                        for (const auto& k : b->hom(w.tgt, bp))
                            t[pair_label(h, k)] =
                                pair_label(a->compose(u.name, a->compose(h, v.name)),
                                           b->compose(k, w.name));
                    std::string glabel = pair_label(u.name, pair_label(v.name, w.name));
                    d.left_action[{glabel, bp}] =
                        SetMap(d.values[{pair_label(u.src, pair_label(v.tgt, w.tgt)), bp}],
                               d.values[{pair_label(u.tgt, pair_label(v.src, w.src)), bp}],
                               std::move(t));
                }
    // right action for f : b'->b'': (h, k : b0->b') -> (h, f∘k)
    for (const auto& a0 : a->objects)
        for (const auto& x : a->objects)
            for (const auto& b0 : b->objects)
                for (const auto& f : b->morphisms) {
                    std::map<std::string, std::string> t;
                    for (const auto& h : a->hom(x, a0))
                        for (const auto& k : b->hom(b0, f.src))
                            t[pair_label(h, k)] = pair_label(h, b->compose(f.name, k));
                    std::string blabel = pair_label(a0, pair_label(x, b0));
                    d.right_action[{blabel, f.name}] =
                        SetMap(d.values[{blabel, f.src}], d.values[{blabel, f.tgt}], std::move(t));
                }
    return d;
}

std::vector<std::string> validate(const DistTrans& t) {
    std::vector<std::string> out;
    if (!equal_structure(*t.src.src, *t.tgt.src) || !equal_structure(*t.src.tgt, *t.tgt.tgt))
        return {"source and target distributors are not parallel"};
    for (const auto& b : t.src.tgt->objects)
        for (const auto& a : t.src.src->objects) {
            auto it = t.components.find({b, a});
            if (it == t.components.end()) {
                out.push_back("no component at (" + b + "," + a + ")");
                continue;
            }
            if (it->second.src != t.src.at(b, a) || it->second.tgt != t.tgt.at(b, a))
                out.push_back("component at (" + b + "," + a + ") has wrong profile");
        }
    if (!out.empty()) return out;
    for (const auto& g : t.src.tgt->morphisms)
        for (const auto& a : t.src.src->objects) {
            SetMap lhs = compose(t.components.at({g.src, a}), t.src.left(g.name, a));
            SetMap rhs = compose(t.tgt.left(g.name, a), t.components.at({g.tgt, a}));
            if (lhs.table != rhs.table)
                out.push_back("left naturality fails at (" + g.name + "," + a + ")");
        }
    for (const auto& b : t.src.tgt->objects)
        for (const auto& f : t.src.src->morphisms) {
            SetMap lhs = compose(t.components.at({b, f.tgt}), t.src.right(b, f.name));
            SetMap rhs = compose(t.tgt.right(b, f.name), t.components.at({b, f.src}));
            if (lhs.table != rhs.table)
                out.push_back("right naturality fails at (" + b + "," + f.name + ")");
        }
    return out;
}

DistIsoReport check_dist_iso(const Distributor& lhs, const Distributor& rhs,
                             const DistTrans& canonical) {
    if (!same_distributor(canonical.src, lhs) || !same_distributor(canonical.tgt, rhs))
        throw engine_error("check_dist_iso: canonical map does not connect the given distributors");
    auto nat = validate(canonical);
    if (!nat.empty()) throw engine_error("check_dist_iso: canonical map not natural: " + nat.front());
    DistIsoReport rep;
    for (const auto& [k, c] : canonical.components)
        if (!c.is_bijection()) {
            rep.holds = false;
            rep.failure = "component at (" + k.first + "," + k.second + ") not bijective";
            return rep;
        }
    rep.holds = true;
    return rep;
}

std::string to_string(const Distributor& m) {
    std::ostringstream os;
    os << "distributor " << m.name << " : " << m.src->name << " ⇸ " << m.tgt->name << "\n";
    for (const auto& b : m.tgt->objects)
        for (const auto& a : m.src->objects) {
            os << "  (" << b << "," << a << ") = {";
            const auto& v = m.at(b, a);
            for (std::size_t i = 0; i < v.elements.size(); ++i)
                os << (i ? "," : "") << v.elements[i];
            os << "}\n";
        }
    return os.str();
}

} // namespace psh
