#include "psh/category.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace psh {

bool Category::has_object(const std::string& o) const {
    return std::find(objects.begin(), objects.end(), o) != objects.end();
}

bool Category::has_morphism(const std::string& m) const {
    for (const auto& x : morphisms)
        if (x.name == m) return true;
    return false;
}

const Mor& Category::mor(const std::string& label) const {
    for (const auto& x : morphisms)
        if (x.name == label) return x;
    throw std::out_of_range("category " + name + ": no morphism '" + label + "'");
}

const std::string& Category::id_of(const std::string& obj) const {
    auto it = identities.find(obj);
    if (it == identities.end())
        throw std::out_of_range("category " + name + ": no identity for object '" + obj + "'");
    return it->second;
}

const std::string& Category::compose(const std::string& g, const std::string& f) const {
    auto it = composites.find({g, f});
    if (it == composites.end())
        throw std::out_of_range("category " + name + ": pair (" + g + "," + f + ") not composable");
    return it->second;
}

std::vector<std::string> Category::hom(const std::string& a, const std::string& b) const {
    std::vector<std::string> out;
    for (const auto& m : morphisms)
        if (m.src == a && m.tgt == b) out.push_back(m.name);
    std::sort(out.begin(), out.end());
    return out;
}

FinSet Category::hom_set(const std::string& a, const std::string& b) const {
    return FinSet("hom(" + a + "," + b + ")", hom(a, b));
}

bool equal_structure(const Category& a, const Category& b) {
    return a.objects == b.objects && a.morphisms == b.morphisms &&
           a.composites == b.composites && a.identities == b.identities;
}

std::vector<std::string> validate(const Category& c) {
    std::vector<std::string> out;
    std::set<std::string> objs(c.objects.begin(), c.objects.end());
    if (objs.size() != c.objects.size()) out.push_back("duplicate object labels");
    std::set<std::string> labels;
    for (const auto& m : c.morphisms) {
        if (!labels.insert(m.name).second) out.push_back("duplicate morphism label '" + m.name + "'");
        if (!objs.count(m.src)) out.push_back("morphism '" + m.name + "' has unknown src '" + m.src + "'");
        if (!objs.count(m.tgt)) out.push_back("morphism '" + m.name + "' has unknown tgt '" + m.tgt + "'");
    }
    if (!out.empty()) return out; // tables cannot be interpreted against broken data

    for (const auto& o : c.objects) {
        auto it = c.identities.find(o);
        if (it == c.identities.end()) {
            out.push_back("object '" + o + "' has no identity");
            continue;
        }
        if (!labels.count(it->second)) {
            out.push_back("identity of '" + o + "' is unknown morphism '" + it->second + "'");
            continue;
        }
        const Mor& id = c.mor(it->second);
        if (id.src != o || id.tgt != o)
            out.push_back("identity of '" + o + "' has wrong endpoints");
    }
    if (!out.empty()) return out;

    // composition defined exactly on composable pairs, with correct endpoints
    for (const auto& g : c.morphisms)
        for (const auto& f : c.morphisms) {
            bool composable = (f.tgt == g.src);
            auto it = c.composites.find({g.name, f.name});
            if (composable && it == c.composites.end()) {
                out.push_back("missing composite (" + g.name + "∘" + f.name + ")");
                continue;
            }
            if (!composable && it != c.composites.end()) {
                out.push_back("composite defined for non-composable pair (" + g.name + "," + f.name + ")");
                continue;
            }
            if (!composable) continue;
            if (!labels.count(it->second)) {
                out.push_back("composite (" + g.name + "∘" + f.name + ") is unknown morphism '" + it->second + "'");
                continue;
            }
            const Mor& h = c.mor(it->second);
            if (h.src != f.src || h.tgt != g.tgt)
                out.push_back("composite (" + g.name + "∘" + f.name + ")='" + h.name + "' has wrong endpoints");
        }
    if (!out.empty()) return out;

    // identity laws
    for (const auto& m : c.morphisms) {
        if (c.compose(m.name, c.id_of(m.src)) != m.name)
            out.push_back("right identity law fails for '" + m.name + "'");
        if (c.compose(c.id_of(m.tgt), m.name) != m.name)
            out.push_back("left identity law fails for '" + m.name + "'");
    }

    // associativity on all composable triples
    for (const auto& h : c.morphisms)
        for (const auto& g : c.morphisms) {
            if (g.tgt != h.src) continue;
            for (const auto& f : c.morphisms) {
                if (f.tgt != g.src) continue;
                const auto& hg = c.compose(h.name, g.name);
                const auto& gf = c.compose(g.name, f.name);
                if (c.compose(hg, f.name) != c.compose(h.name, gf))
                    out.push_back("associativity fails on (" + h.name + "," + g.name + "," + f.name + ")");
            }
        }
    return out;
}

Category opposite(const Category& c) {
    Category op;
    op.name = "op(" + c.name + ")";
    op.objects = c.objects;
    op.morphisms.reserve(c.morphisms.size());
    for (const auto& m : c.morphisms) op.morphisms.push_back({m.name, m.tgt, m.src});
    for (const auto& [gf, h] : c.composites) op.composites[{gf.second, gf.first}] = h;
    op.identities = c.identities;
    return op;
}

Category product(const Category& a, const Category& b) {
    Category p;
    p.name = pair_label(a.name, b.name);
    for (const auto& x : a.objects)
        for (const auto& y : b.objects) p.objects.push_back(pair_label(x, y));
    for (const auto& f : a.morphisms)
        for (const auto& g : b.morphisms)
            p.morphisms.push_back({pair_label(f.name, g.name), pair_label(f.src, g.src),
                                   pair_label(f.tgt, g.tgt)});
    for (const auto& f2 : a.morphisms)
        for (const auto& g2 : b.morphisms)
            for (const auto& f1 : a.morphisms) {
                if (f1.tgt != f2.src) continue;
                for (const auto& g1 : b.morphisms) {
                    if (g1.tgt != g2.src) continue;
                    p.composites[{pair_label(f2.name, g2.name), pair_label(f1.name, g1.name)}] =
                        pair_label(a.compose(f2.name, f1.name), b.compose(g2.name, g1.name));
                }
            }
    for (const auto& x : a.objects)
        for (const auto& y : b.objects)
            p.identities[pair_label(x, y)] = pair_label(a.id_of(x), b.id_of(y));
    return p;
}

Category terminal_category() {
    Category t;
    t.name = "1";
    t.objects = {"pt"};
    t.morphisms = {{"id_pt", "pt", "pt"}};
    t.composites[{"id_pt", "id_pt"}] = "id_pt";
    t.identities["pt"] = "id_pt";
    return t;
}

Category make_category(std::string name, std::vector<std::string> objects,
                       std::vector<Mor> non_identity,
                       std::map<std::pair<std::string, std::string>, std::string> composites) {
    Category c;
    c.name = std::move(name);
    c.objects = std::move(objects);
    for (const auto& o : c.objects) {
        std::string id = "id_" + o;
        c.morphisms.push_back({id, o, o});
        c.identities[o] = id;
    }
    for (auto& m : non_identity) c.morphisms.push_back(std::move(m));
    c.composites = std::move(composites);
    // complete the table with identity rows
    for (const auto& m : c.morphisms) {
        c.composites[{m.name, c.identities[m.src]}] = m.name;
        c.composites[{c.identities[m.tgt], m.name}] = m.name;
    }
    return c;
}

CatPtr share(Category c) { return std::make_shared<const Category>(std::move(c)); }

} // namespace psh
