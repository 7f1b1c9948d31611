#include "psh/functor.hpp"

#include <stdexcept>

namespace psh {

const std::string& Functor::ob(const std::string& o) const {
    auto it = on_objects.find(o);
    if (it == on_objects.end())
        throw std::out_of_range("functor " + name + ": no image for object '" + o + "'");
    return it->second;
}

const std::string& Functor::mo(const std::string& m) const {
    auto it = on_morphisms.find(m);
    if (it == on_morphisms.end())
        throw std::out_of_range("functor " + name + ": no image for morphism '" + m + "'");
    return it->second;
}

std::vector<std::string> validate(const Functor& f) {
    std::vector<std::string> out;
    for (const auto& o : f.src->objects) {
        auto it = f.on_objects.find(o);
        if (it == f.on_objects.end()) {
            out.push_back("no image for object '" + o + "'");
            continue;
        }
        if (!f.tgt->has_object(it->second))
            out.push_back("image of object '" + o + "' not in target");
    }
    for (const auto& m : f.src->morphisms) {
        auto it = f.on_morphisms.find(m.name);
        if (it == f.on_morphisms.end()) {
            out.push_back("no image for morphism '" + m.name + "'");
            continue;
        }
        if (!f.tgt->has_morphism(it->second)) {
            out.push_back("image of morphism '" + m.name + "' not in target");
            continue;
        }
        const Mor& fm = f.tgt->mor(it->second);
        if (fm.src != f.ob(m.src) || fm.tgt != f.ob(m.tgt))
            out.push_back("functor does not preserve endpoints of '" + m.name + "'");
    }
    if (!out.empty()) return out;
    for (const auto& o : f.src->objects)
        if (f.mo(f.src->id_of(o)) != f.tgt->id_of(f.ob(o)))
            out.push_back("identity of '" + o + "' not preserved");
    for (const auto& g : f.src->morphisms)
        for (const auto& h : f.src->morphisms) {
            if (h.tgt != g.src) continue;
            if (f.mo(f.src->compose(g.name, h.name)) != f.tgt->compose(f.mo(g.name), f.mo(h.name)))
                out.push_back("composite (" + g.name + "∘" + h.name + ") not preserved");
        }
    return out;
}

Functor identity_functor(CatPtr a) {
    Functor f;
    f.name = "id_" + a->name;
    f.src = a;
    f.tgt = a;
    for (const auto& o : a->objects) f.on_objects[o] = o;
    for (const auto& m : a->morphisms) f.on_morphisms[m.name] = m.name;
    return f;
}

Functor compose(const Functor& g, const Functor& f) {
    if (!equal_structure(*f.tgt, *g.src))
        throw std::invalid_argument("functor compose: middle categories differ");
    Functor h;
    h.name = g.name + "∘" + f.name;
    h.src = f.src;
    h.tgt = g.tgt;
    for (const auto& [o, fo] : f.on_objects) h.on_objects[o] = g.ob(fo);
    for (const auto& [m, fm] : f.on_morphisms) h.on_morphisms[m] = g.mo(fm);
    return h;
}

Functor diagonal_functor(CatPtr a) {
    Functor d;
    d.name = "Δ_" + a->name;
    d.src = a;
    d.tgt = share(product(*a, *a));
    for (const auto& o : a->objects) d.on_objects[o] = pair_label(o, o);
    for (const auto& m : a->morphisms) d.on_morphisms[m.name] = pair_label(m.name, m.name);
    return d;
}

Functor bang_functor(CatPtr a) {
    Functor b;
    b.name = "!_" + a->name;
    b.src = a;
    b.tgt = share(terminal_category());
    for (const auto& o : a->objects) b.on_objects[o] = "pt";
    for (const auto& m : a->morphisms) b.on_morphisms[m.name] = "id_pt";
    return b;
}

Functor object_functor(CatPtr a, const std::string& obj) {
    Functor f;
    f.name = "obj_" + obj;
    f.src = share(terminal_category());
    f.tgt = a;
    f.on_objects["pt"] = obj;
    f.on_morphisms["id_pt"] = a->id_of(obj);
    return f;
}

} // namespace psh
