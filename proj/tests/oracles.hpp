#pragma once

// Test-only oracles, deliberately independent of the engine's computation
// paths: a naive fixed-point quotient and the subset/relation model computed
// by direct comprehension.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "psh/category.hpp"
#include "psh/distributor.hpp"
#include "psh/presheaf.hpp"

namespace oracle {

// quotient of items by the symmetric-transitive closure of pairs, computed by
// naive sweeping until a fixed point (not union-find)
inline std::size_t naive_class_count(std::size_t n,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& rel) {
    std::vector<std::size_t> color(n);
    for (std::size_t i = 0; i < n; ++i) color[i] = i;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [i, j] : rel) {
            std::size_t lo = std::min(color[i], color[j]);
            if (color[i] != lo) {
                color[i] = lo;
                changed = true;
            }
            if (color[j] != lo) {
                color[j] = lo;
                changed = true;
            }
        }
    }
    std::set<std::size_t> classes(color.begin(), color.end());
    return classes.size();
}

// the subset model over finite carriers: predicates and relations as bitmasks
struct Subsets {
    // ∃_M R = { b | ∃a. M(a,b) ∧ Ra }, with M(a,b) given as mask over a*nb+b
    static unsigned exists(unsigned m, unsigned r, unsigned na, unsigned nb) {
        unsigned out = 0;
        for (unsigned b = 0; b < nb; ++b)
            for (unsigned a = 0; a < na; ++a)
                if ((m >> (a * nb + b)) & 1u && (r >> a) & 1u) out |= 1u << b;
        return out;
    }
    // ∀_M S = { a | ∀b. M(a,b) ⇒ Sb }
    static unsigned forall(unsigned m, unsigned s, unsigned na, unsigned nb) {
        unsigned out = 0;
        for (unsigned a = 0; a < na; ++a) {
            bool all = true;
            for (unsigned b = 0; b < nb; ++b)
                if ((m >> (a * nb + b)) & 1u && !((s >> b) & 1u)) all = false;
            if (all) out |= 1u << a;
        }
        return out;
    }
    static unsigned tensor(unsigned r, unsigned s, unsigned na, unsigned nb) {
        unsigned out = 0;
        for (unsigned a = 0; a < na; ++a)
            for (unsigned b = 0; b < nb; ++b)
                if (((r >> a) & 1u) && ((s >> b) & 1u)) out |= 1u << (a * nb + b);
        return out;
    }
    static unsigned imp(unsigned r, unsigned s, unsigned na, unsigned nb) {
        unsigned out = 0;
        for (unsigned a = 0; a < na; ++a)
            for (unsigned b = 0; b < nb; ++b)
                if (!((r >> a) & 1u) || ((s >> b) & 1u)) out |= 1u << (a * nb + b);
        return out;
    }
};

// subsets of a discrete category's objects as engine presheaves
inline psh::Presheaf subset_presheaf(psh::CatPtr base, unsigned mask,
                                     psh::Variance var = psh::Variance::contra) {
    psh::Presheaf p;
    p.name = "subset";
    p.base = base;
    p.variance = var;
    std::size_t i = 0;
    for (const auto& o : base->objects) {
        std::vector<std::string> elems;
        if (mask & (1u << i)) elems.push_back("*");
        p.values[o] = psh::FinSet(o, std::move(elems));
        ++i;
    }
    for (const auto& o : base->objects)
        p.actions[base->id_of(o)] = psh::SetMap::identity(p.values[o]);
    return p;
}

// a relation between two discrete categories as an engine distributor;
// bit (a*nb + b) set means M(a,b)
inline psh::Distributor subset_dist(psh::CatPtr a, psh::CatPtr b, unsigned mask) {
    psh::Distributor d;
    d.name = "rel";
    d.src = a;
    d.tgt = b;
    std::size_t ai = 0;
    for (const auto& ao : a->objects) {
        std::size_t bi = 0;
        for (const auto& bo : b->objects) {
            std::vector<std::string> elems;
            if (mask & (1u << (ai * b->objects.size() + bi))) elems.push_back("*");
            d.values[{bo, ao}] = psh::FinSet(bo + ao, std::move(elems));
            ++bi;
        }
        ++ai;
    }
    for (const auto& ao : a->objects)
        for (const auto& bo : b->objects) {
            d.left_action[{b->id_of(bo), ao}] = psh::SetMap::identity(d.values[{bo, ao}]);
            d.right_action[{bo, a->id_of(ao)}] = psh::SetMap::identity(d.values[{bo, ao}]);
        }
    return d;
}

// mask of the nonempty values of a presheaf over a discrete category
inline unsigned mask_of(const psh::Presheaf& p) {
    unsigned out = 0;
    std::size_t i = 0;
    for (const auto& o : p.base->objects) {
        if (!p.at(o).empty()) out |= 1u << i;
        ++i;
    }
    return out;
}

} // namespace oracle
