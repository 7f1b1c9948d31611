#include "psh/presheaf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace psh {

const FinSet& Presheaf::at(const std::string& obj) const {
    auto it = values.find(obj);
    if (it == values.end())
        throw std::out_of_range("presheaf " + name + ": no value at object '" + obj + "'");
    return it->second;
}

const SetMap& Presheaf::action(const std::string& mor) const {
    auto it = actions.find(mor);
    if (it == actions.end())
        throw std::out_of_range("presheaf " + name + ": no action for morphism '" + mor + "'");
    return it->second;
}

std::pair<std::string, std::string> action_profile(const Presheaf& p, const Mor& m) {
    if (p.variance == Variance::contra) return {m.tgt, m.src};
    return {m.src, m.tgt};
}

std::vector<std::string> validate(const Presheaf& p) {
    std::vector<std::string> out;
    if (!p.base) return {"presheaf has no base category"};
    for (const auto& o : p.base->objects)
        if (!p.values.count(o)) out.push_back("no value at object '" + o + "'");
    for (const auto& m : p.base->morphisms)
        if (!p.actions.count(m.name)) out.push_back("no action for morphism '" + m.name + "'");
    if (!out.empty()) return out;

    for (const auto& m : p.base->morphisms) {
        auto [from, to] = action_profile(p, m);
        const SetMap& a = p.action(m.name);
        if (a.src != p.at(from) || a.tgt != p.at(to)) {
            out.push_back("action of '" + m.name + "' has wrong profile");
            continue;
        }
        for (const auto& v : validate(a)) out.push_back("action of '" + m.name + "': " + v);
    }
    if (!out.empty()) return out;

    for (const auto& o : p.base->objects)
        if (p.action(p.base->id_of(o)).table != SetMap::identity(p.at(o)).table)
            out.push_back("action of identity at '" + o + "' is not the identity");

    for (const auto& g : p.base->morphisms)
        for (const auto& f : p.base->morphisms) {
            if (f.tgt != g.src) continue;
            const std::string& gf = p.base->compose(g.name, f.name);
            SetMap expect = (p.variance == Variance::contra)
                                ? compose(p.action(f.name), p.action(g.name))
                                : compose(p.action(g.name), p.action(f.name));
            if (p.action(gf).table != expect.table)
                out.push_back("functoriality fails on (" + g.name + "∘" + f.name + ")");
        }
    return out;
}

bool same_presheaf(const Presheaf& a, const Presheaf& b) {
    if (a.variance != b.variance) return false;
    if (!equal_structure(*a.base, *b.base)) return false;
    if (a.values.size() != b.values.size() || a.actions.size() != b.actions.size()) return false;
    for (const auto& [o, v] : a.values) {
        auto it = b.values.find(o);
        if (it == b.values.end() || !(it->second == v)) return false;
    }
    for (const auto& [m, act] : a.actions) {
        auto it = b.actions.find(m);
        if (it == b.actions.end() || it->second.table != act.table) return false;
    }
    return true;
}

std::vector<std::string> validate(const NatTrans& t) {
    std::vector<std::string> out;
    if (t.src.variance != t.tgt.variance) return {"source and target variance differ"};
    if (!equal_structure(*t.src.base, *t.tgt.base)) return {"source and target base differ"};
    for (const auto& o : t.src.base->objects) {
        auto it = t.components.find(o);
        if (it == t.components.end()) {
            out.push_back("no component at object '" + o + "'");
            continue;
        }
        if (it->second.src != t.src.at(o) || it->second.tgt != t.tgt.at(o))
            out.push_back("component at '" + o + "' has wrong profile");
        for (const auto& v : validate(it->second)) out.push_back("component at '" + o + "': " + v);
    }
    if (!out.empty()) return out;

    for (const auto& m : t.src.base->morphisms) {
        auto [from, to] = action_profile(t.src, m);
        SetMap lhs = compose(t.components.at(to), t.src.action(m.name));
        SetMap rhs = compose(t.tgt.action(m.name), t.components.at(from));
        if (lhs.table != rhs.table)
            out.push_back("naturality square fails at morphism '" + m.name + "'");
    }
    return out;
}

std::string IsoReport::describe() const {
    if (holds) return via_search ? "iso (found by bounded search)" : "iso";
    if (failure) return "not iso at object '" + failure->object + "': " + failure->reason;
    return "not iso";
}

IsoReport check_iso(const Presheaf& lhs, const Presheaf& rhs, const NatTrans& canonical) {
    if (!same_presheaf(canonical.src, lhs) || !same_presheaf(canonical.tgt, rhs))
        throw engine_error("check_iso: canonical map does not connect the given presheaves");
    auto nat = validate(canonical);
    if (!nat.empty())
        throw engine_error("check_iso: canonical map is not natural: " + nat.front());

    IsoReport rep;
    rep.witness = canonical;
    for (const auto& o : lhs.base->objects) {
        const SetMap& c = canonical.components.at(o);
        if (c.is_bijection()) continue;
        rep.holds = false;
        // element-level diagnosis: a collision or a missed target element
        std::map<std::string, std::string> seen;
        for (const auto& [x, y] : c.table) {
            auto [it, fresh] = seen.emplace(y, x);
            if (!fresh) {
                rep.failure = IsoFailure{o, "elements '" + it->second + "' and '" + x +
                                                "' collide on '" + y + "'"};
                return rep;
            }
        }
        for (const auto& y : c.tgt.elements)
            if (!seen.count(y)) {
                rep.failure = IsoFailure{o, "element '" + y + "' is not hit"};
                return rep;
            }
        rep.failure = IsoFailure{o, "component not bijective"};
        return rep;
    }
    rep.holds = true;
    return rep;
}

std::vector<NatTrans> enumerate_nattrans(const Presheaf& lhs, const Presheaf& rhs,
                                         const SizeLimits& caps) {
    std::vector<NatTrans> out;
    const auto& objs = lhs.base->objects;
    std::vector<std::vector<std::map<std::string, std::string>>> per_obj;
    std::size_t space = 1;
    for (const auto& o : objs) {
        per_obj.push_back(all_functions(lhs.at(o), rhs.at(o)));
        if (per_obj.back().empty()) return out;
        space *= per_obj.back().size();
        if (space > caps.hom_enumeration)
            throw cap_error("fiber hom-set enumeration exceeds cap");
    }
    std::vector<std::size_t> odo(objs.size(), 0);
    for (;;) {
        NatTrans t;
        t.src = lhs;
        t.tgt = rhs;
        for (std::size_t i = 0; i < objs.size(); ++i)
            t.components[objs[i]] = SetMap(lhs.at(objs[i]), rhs.at(objs[i]), per_obj[i][odo[i]]);
        if (validate(t).empty()) out.push_back(std::move(t));
        std::size_t i = 0;
        while (i < odo.size()) {
            if (++odo[i] < per_obj[i].size()) break;
            odo[i] = 0;
            ++i;
        }
        if (i == odo.size()) break;
    }
    return out;
}

std::optional<NatTrans> search_natural_iso(const Presheaf& lhs, const Presheaf& rhs,
                                           const SizeLimits& caps) {
    for (auto& t : enumerate_nattrans(lhs, rhs, caps)) {
        bool iso = true;
        for (const auto& [_, c] : t.components)
            if (!c.is_bijection()) {
                iso = false;
                break;
            }
        if (iso) return t;
    }
    return std::nullopt;
}

Presheaf unit_presheaf() {
    Presheaf p;
    p.name = "1";
    p.base = share(terminal_category());
    p.variance = Variance::contra;
    p.values["pt"] = FinSet("1", {"*"});
    p.actions["id_pt"] = SetMap::identity(p.values["pt"]);
    return p;
}

Presheaf terminal_presheaf(CatPtr base, Variance v) {
    Presheaf p;
    p.name = "⊤";
    p.base = base;
    p.variance = v;
    for (const auto& o : base->objects) p.values[o] = FinSet("top(" + o + ")", {"*"});
    for (const auto& m : base->morphisms) {
        auto [from, to] = action_profile(p, m);
        p.actions[m.name] = SetMap(p.values[from], p.values[to], {{"*", "*"}});
    }
    return p;
}

Presheaf representable(CatPtr base, const std::string& obj) {
    Presheaf p;
    p.name = "hom(-," + obj + ")";
    p.base = base;
    p.variance = Variance::contra;
    for (const auto& o : base->objects) p.values[o] = base->hom_set(o, obj);
    for (const auto& m : base->morphisms) {
        // precomposition hom(tgt, obj) -> hom(src, obj)
        std::map<std::string, std::string> t;
        for (const auto& h : base->hom(m.tgt, obj)) t[h] = base->compose(h, m.name);
        p.actions[m.name] = SetMap(p.values[m.tgt], p.values[m.src], std::move(t));
    }
    return p;
}

Presheaf corepresentable(CatPtr base, const std::string& obj) {
    Presheaf p;
    p.name = "hom(" + obj + ",-)";
    p.base = base;
    p.variance = Variance::co;
    for (const auto& o : base->objects) p.values[o] = base->hom_set(obj, o);
    for (const auto& m : base->morphisms) {
        // postcomposition hom(obj, src) -> hom(obj, tgt)
        std::map<std::string, std::string> t;
        for (const auto& h : base->hom(obj, m.src)) t[h] = base->compose(m.name, h);
        p.actions[m.name] = SetMap(p.values[m.src], p.values[m.tgt], std::move(t));
    }
    return p;
}

std::string to_string(const Presheaf& p) {
    std::ostringstream os;
    os << (p.variance == Variance::contra ? "presheaf" : "copresheaf");
    if (!p.name.empty()) os << " " << p.name;
    os << " on " << p.base->name << "\n";
    for (const auto& o : p.base->objects) {
        os << "  " << o << " = {";
        const auto& v = p.at(o);
        for (std::size_t i = 0; i < v.elements.size(); ++i)
            os << (i ? "," : "") << v.elements[i];
        os << "}\n";
    }
    for (const auto& m : p.base->morphisms) {
        if (m.name == p.base->id_of(m.src)) continue;
        os << "  " << m.name << ": ";
        const auto& a = p.action(m.name);
        bool first = true;
        for (const auto& [x, y] : a.table) {
            os << (first ? "" : ", ") << x << "->" << y;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace psh
