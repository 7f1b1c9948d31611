#include "psh/corpus.hpp"

#include <algorithm>

namespace psh::corpus {

CatPtr terminal() { return share(terminal_category()); }

CatPtr discrete2() { return share(make_category("disc2", {"0", "1"}, {}, {})); }

CatPtr walking_arrow() {
    return share(make_category("arrow", {"0", "1"}, {{"f", "0", "1"}}, {}));
}

CatPtr cospan() {
    return share(make_category("cospan", {"0", "1", "2"}, {{"u", "0", "2"}, {"v", "1", "2"}}, {}));
}

CatPtr parallel_pair() {
    return share(make_category("parallel", {"0", "1"}, {{"f", "0", "1"}, {"g", "0", "1"}}, {}));
}

std::vector<std::pair<std::string, CatPtr>> named_categories() {
    return {{"terminal", terminal()},
            {"disc2", discrete2()},
            {"arrow", walking_arrow()},
            {"cospan", cospan()},
            {"parallel", parallel_pair()}};
}

std::vector<CatPtr> enumerate_categories(int max_obj, int max_nonid) {
    std::vector<CatPtr> out;
    int counter = 0;
    for (int n = 1; n <= max_obj; ++n) {
        std::vector<std::string> objects;
        for (int i = 0; i < n; ++i) objects.push_back("o" + std::to_string(i));
        for (int k = 0; k <= max_nonid; ++k) {
            // endpoint assignments for the k non-identity morphisms
            std::vector<int> endp(2 * k, 0);
            for (;;) {
                std::vector<Mor> mors;
                for (int i = 0; i < k; ++i)
                    mors.push_back({"m" + std::to_string(i), objects[endp[2 * i]],
                                    objects[endp[2 * i + 1]]});
                // composable non-identity pairs needing a composite choice
                std::vector<std::pair<int, int>> slots; // (g index, f index), g∘f
                for (int g = 0; g < k; ++g)
                    for (int f = 0; f < k; ++f)
                        if (mors[f].tgt == mors[g].src) slots.push_back({g, f});
                // candidates per slot: any morphism (incl. identity) with the endpoints
                std::vector<std::vector<std::string>> candidates;
                bool dead = false;
                for (auto [g, f] : slots) {
                    std::vector<std::string> cand;
                    if (mors[f].src == mors[g].tgt) cand.push_back("id_" + mors[f].src);
                    for (int i = 0; i < k; ++i)
                        if (mors[i].src == mors[f].src && mors[i].tgt == mors[g].tgt)
                            cand.push_back(mors[i].name);
                    if (cand.empty()) {
                        dead = true;
                        break;
                    }
                    candidates.push_back(std::move(cand));
                }
                if (!dead) {
                    std::vector<std::size_t> odo(slots.size(), 0);
                    for (;;) {
                        std::map<std::pair<std::string, std::string>, std::string> comp;
                        for (std::size_t s = 0; s < slots.size(); ++s)
                            comp[{mors[slots[s].first].name, mors[slots[s].second].name}] =
                                candidates[s][odo[s]];
                        Category c = make_category("c" + std::to_string(counter), objects,
                                                   mors, comp);
                        if (validate(c).empty()) {
                            ++counter;
                            out.push_back(share(std::move(c)));
                        }
                        std::size_t i = 0;
                        while (i < odo.size()) {
                            if (++odo[i] < candidates[i].size()) break;
                            odo[i] = 0;
                            ++i;
                        }
                        if (slots.empty() || i == odo.size()) break;
                    }
                }
                // next endpoint assignment
                int i = 0;
                while (i < 2 * k) {
                    if (++endp[i] < n) break;
                    endp[i] = 0;
                    ++i;
                }
                if (k == 0 || i == 2 * k) break;
            }
        }
    }
    return out;
}

std::vector<Presheaf> enumerate_presheaves(CatPtr base, int max_val, std::size_t cap,
                                           Variance variance) {
    std::vector<Presheaf> all;
    const auto& objs = base->objects;
    std::vector<Mor> nonid;
    for (const auto& m : base->morphisms)
        if (m.name != base->id_of(m.src)) nonid.push_back(m);

    std::vector<int> sizes(objs.size(), 0);
    int counter = 0;
    for (;;) {
        std::map<std::string, FinSet> values;
        for (std::size_t i = 0; i < objs.size(); ++i) {
            std::vector<std::string> elems;
            for (int e = 0; e < sizes[i]; ++e) elems.push_back(objs[i] + "e" + std::to_string(e));
            values[objs[i]] = FinSet(objs[i], std::move(elems));
        }
        // all action assignments on the non-identity morphisms
        std::vector<std::vector<std::map<std::string, std::string>>> options;
        bool dead = false;
        for (const auto& m : nonid) {
            auto [from, to] = variance == Variance::contra
                                  ? std::pair<std::string, std::string>{m.tgt, m.src}
                                  : std::pair<std::string, std::string>{m.src, m.tgt};
            options.push_back(all_functions(values.at(from), values.at(to)));
            if (options.back().empty()) {
                dead = true;
                break;
            }
        }
        if (!dead) {
            std::vector<std::size_t> odo(nonid.size(), 0);
            for (;;) {
                Presheaf p;
                p.name = "P" + std::to_string(counter);
                p.base = base;
                p.variance = variance;
                p.values = values;
                for (const auto& o : objs)
                    p.actions[base->id_of(o)] = SetMap::identity(values.at(o));
                for (std::size_t i = 0; i < nonid.size(); ++i) {
                    auto [from, to] = action_profile(p, nonid[i]);
                    p.actions[nonid[i].name] =
                        SetMap(values.at(from), values.at(to), options[i][odo[i]]);
                }
                if (validate(p).empty()) {
                    ++counter;
                    all.push_back(std::move(p));
                }
                std::size_t i = 0;
                while (i < odo.size()) {
                    if (++odo[i] < options[i].size()) break;
                    odo[i] = 0;
                    ++i;
                }
                if (nonid.empty() || i == odo.size()) break;
            }
        }
        std::size_t i = 0;
        while (i < sizes.size()) {
            if (++sizes[i] <= max_val) break;
            sizes[i] = 0;
            ++i;
        }
        if (i == sizes.size()) break;
    }
    if (all.size() <= cap) return all;
    // deterministic stride selection keeping the spread of value shapes
    std::vector<Presheaf> picked;
    double step = static_cast<double>(all.size()) / static_cast<double>(cap);
    for (std::size_t i = 0; i < cap; ++i)
        picked.push_back(all[static_cast<std::size_t>(i * step)]);
    return picked;
}

std::vector<Functor> enumerate_functors(CatPtr src, CatPtr tgt, std::size_t cap) {
    std::vector<Functor> out;
    const auto& sobj = src->objects;
    std::vector<Mor> nonid;
    for (const auto& m : src->morphisms)
        if (m.name != src->id_of(m.src)) nonid.push_back(m);

    std::vector<std::size_t> ob_odo(sobj.size(), 0);
    int counter = 0;
    for (;;) {
        std::map<std::string, std::string> on_obj;
        for (std::size_t i = 0; i < sobj.size(); ++i) on_obj[sobj[i]] = tgt->objects[ob_odo[i]];
        std::vector<std::vector<std::string>> options;
        bool dead = false;
        for (const auto& m : nonid) {
            std::vector<std::string> cand = tgt->hom(on_obj[m.src], on_obj[m.tgt]);
            if (cand.empty()) {
                dead = true;
                break;
            }
            options.push_back(std::move(cand));
        }
        if (!dead) {
            std::vector<std::size_t> odo(nonid.size(), 0);
            for (;;) {
                Functor f;
                f.name = "F" + std::to_string(counter);
                f.src = src;
                f.tgt = tgt;
                f.on_objects = on_obj;
                for (const auto& o : sobj)
                    f.on_morphisms[src->id_of(o)] = tgt->id_of(on_obj[o]);
                for (std::size_t i = 0; i < nonid.size(); ++i)
                    f.on_morphisms[nonid[i].name] = options[i][odo[i]];
                if (validate(f).empty()) {
                    ++counter;
                    out.push_back(std::move(f));
                    if (out.size() >= cap) return out;
                }
                std::size_t i = 0;
                while (i < odo.size()) {
                    if (++odo[i] < options[i].size()) break;
                    odo[i] = 0;
                    ++i;
                }
                if (nonid.empty() || i == odo.size()) break;
            }
        }
        std::size_t i = 0;
        while (i < ob_odo.size()) {
            if (++ob_odo[i] < tgt->objects.size()) break;
            ob_odo[i] = 0;
            ++i;
        }
        if (i == ob_odo.size()) break;
    }
    return out;
}

std::vector<Distributor> sample_distributors(CatPtr src, CatPtr tgt, int max_val,
                                             std::size_t count, std::uint64_t seed) {
    std::vector<Distributor> out;
    std::mt19937_64 rng(seed);

    // structured members first: embeddings of sampled functors
    auto fs = enumerate_functors(src, tgt, 2);
    for (const auto& f : fs) {
        Distributor d;
        d.name = "emb+" + f.name;
        d.src = src;
        d.tgt = tgt;
        bool small_enough = true;
        for (const auto& bo : tgt->objects)
            for (const auto& ao : src->objects)
                if (tgt->hom(bo, f.ob(ao)).size() > static_cast<std::size_t>(max_val))
                    small_enough = false;
        if (!small_enough) continue;
        // reuse the hom tables directly
        for (const auto& bo : tgt->objects)
            for (const auto& ao : src->objects) d.values[{bo, ao}] = tgt->hom_set(bo, f.ob(ao));
        for (const auto& g : tgt->morphisms)
            for (const auto& ao : src->objects) {
                std::map<std::string, std::string> t;
                for (const auto& h : tgt->hom(g.tgt, f.ob(ao))) t[h] = tgt->compose(h, g.name);
                d.left_action[{g.name, ao}] =
                    SetMap(d.values[{g.tgt, ao}], d.values[{g.src, ao}], std::move(t));
            }
        for (const auto& bo : tgt->objects)
            for (const auto& u : src->morphisms) {
                std::map<std::string, std::string> t;
                for (const auto& h : tgt->hom(bo, f.ob(u.src))) t[h] = tgt->compose(f.mo(u.name), h);
                d.right_action[{bo, u.name}] =
                    SetMap(d.values[{bo, u.src}], d.values[{bo, u.tgt}], std::move(t));
            }
        if (validate(d).empty()) out.push_back(std::move(d));
        if (out.size() >= count) return out;
    }

    // rejection-sampled random tables
    std::uniform_int_distribution<int> size_dist(0, max_val);
    std::size_t attempts = 0, budget = 4000 * count;
    int counter = 0;
    while (out.size() < count && attempts < budget) {
        ++attempts;
        Distributor d;
        d.name = "D" + std::to_string(counter);
        d.src = src;
        d.tgt = tgt;
        for (const auto& bo : tgt->objects)
            for (const auto& ao : src->objects) {
                int sz = size_dist(rng);
                std::vector<std::string> elems;
                for (int e = 0; e < sz; ++e)
                    elems.push_back(bo + "|" + ao + "|" + std::to_string(e));
                d.values[{bo, ao}] = FinSet(bo + "," + ao, std::move(elems));
            }
        bool dead = false;
        for (const auto& g : tgt->morphisms) {
            for (const auto& ao : src->objects) {
                const FinSet& from = d.values[{g.tgt, ao}];
                const FinSet& to = d.values[{g.src, ao}];
                if (g.name == tgt->id_of(g.src)) {
                    d.left_action[{g.name, ao}] = SetMap::identity(from);
                    continue;
                }
                if (!from.empty() && to.empty()) {
                    dead = true;
                    break;
                }
                std::map<std::string, std::string> t;
                for (const auto& x : from.elements) {
                    std::uniform_int_distribution<std::size_t> pick(0, to.size() - 1);
                    t[x] = to.elements[pick(rng)];
                }
                d.left_action[{g.name, ao}] = SetMap(from, to, std::move(t));
            }
            if (dead) break;
        }
        if (dead) continue;
        for (const auto& bo : tgt->objects) {
            for (const auto& u : src->morphisms) {
                const FinSet& from = d.values[{bo, u.src}];
                const FinSet& to = d.values[{bo, u.tgt}];
                if (u.name == src->id_of(u.src)) {
                    d.right_action[{bo, u.name}] = SetMap::identity(from);
                    continue;
                }
                if (!from.empty() && to.empty()) {
                    dead = true;
                    break;
                }
                std::map<std::string, std::string> t;
                for (const auto& x : from.elements) {
                    std::uniform_int_distribution<std::size_t> pick(0, to.size() - 1);
                    t[x] = to.elements[pick(rng)];
                }
                d.right_action[{bo, u.name}] = SetMap(from, to, std::move(t));
            }
            if (dead) break;
        }
        if (dead) continue;
        if (validate(d).empty()) {
            ++counter;
            out.push_back(std::move(d));
        }
    }
    return out;
}

Corpus build_corpus(const CorpusOptions& opt) {
    Corpus c;
    for (auto& [name, cat] : named_categories()) c.bases.push_back(cat);
    if (opt.full)
        for (auto& cat : enumerate_categories(3, 2)) c.bases.push_back(cat);

    // deterministic selection of category pairs for (M,R,S) sweeps: named
    // pairs first, then a spread over the enumerated ones
    std::vector<CatPtr> named;
    for (auto& [name, cat] : named_categories()) named.push_back(cat);
    for (std::size_t i = 0; i < named.size() && c.pairs.size() < opt.pair_limit; ++i)
        for (std::size_t j = 0; j < named.size() && c.pairs.size() < opt.pair_limit; ++j)
            if (i == j || (i + j) % 2 == 0) c.pairs.push_back({named[i], named[j]});
    if (opt.full) {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> pick(0, c.bases.size() - 1);
        while (c.pairs.size() < opt.pair_limit * 2)
            c.pairs.push_back({c.bases[pick(rng)], c.bases[pick(rng)]});
    }
    return c;
}

} // namespace psh::corpus
