#include "psh/laws.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "psh/chirality.hpp"
#include "psh/diagrams.hpp"
#include "psh/equality.hpp"
#include "psh/hyperdoctrine.hpp"
#include "psh/matll.hpp"
#include "psh/monoidal.hpp"
#include "psh/quantifiers.hpp"

namespace psh::laws {

DistIsoReport dist_unit_right(const Distributor& m, const SizeLimits& caps) {
    Distributor id = identity_dist(m.src);
    ComposedDist comp = compose_dist(m, id, caps);
    DistTrans t;
    t.src = comp.dist;
    t.tgt = m;
    for (const auto& b : m.tgt->objects)
        for (const auto& a : m.src->objects) {
            std::map<std::string, std::string> table;
            for (const auto& x : m.src->objects)
                for (const auto& me : m.at(b, x).elements)
                    for (const auto& h : m.src->hom(x, a)) {
                        const std::string& cls = comp.inject.at({b, a}).at({x, me, h});
                        std::string img = m.right(b, h)(me);
                        auto [it, fresh] = table.emplace(cls, img);
                        if (!fresh && it->second != img)
                            throw engine_error("dist_unit_right: collapse not well-defined");
                    }
            t.components[{b, a}] = SetMap(comp.dist.at(b, a), m.at(b, a), std::move(table));
        }
    return check_dist_iso(comp.dist, m, t);
}

DistIsoReport dist_unit_left(const Distributor& m, const SizeLimits& caps) {
    Distributor id = identity_dist(m.tgt);
    ComposedDist comp = compose_dist(id, m, caps);
    DistTrans t;
    t.src = comp.dist;
    t.tgt = m;
    for (const auto& b : m.tgt->objects)
        for (const auto& a : m.src->objects) {
            std::map<std::string, std::string> table;
            for (const auto& x : m.tgt->objects)
                for (const auto& k : m.tgt->hom(b, x))
                    for (const auto& me : m.at(x, a).elements) {
                        const std::string& cls = comp.inject.at({b, a}).at({x, k, me});
                        std::string img = m.left(k, a)(me);
                        auto [it, fresh] = table.emplace(cls, img);
                        if (!fresh && it->second != img)
                            throw engine_error("dist_unit_left: collapse not well-defined");
                    }
            t.components[{b, a}] = SetMap(comp.dist.at(b, a), m.at(b, a), std::move(table));
        }
    return check_dist_iso(comp.dist, m, t);
}

DistIsoReport dist_assoc(const Distributor& l, const Distributor& n, const Distributor& m,
                         const SizeLimits& caps) {
    // (L∘N)∘M  ≅  L∘(N∘M) for M : A⇸B, N : B⇸C, L : C⇸D
    ComposedDist ln = compose_dist(l, n, caps);
    ComposedDist lhs = compose_dist(ln.dist, m, caps);
    ComposedDist nm = compose_dist(n, m, caps);
    ComposedDist rhs = compose_dist(l, nm.dist, caps);

    DistTrans t;
    t.src = lhs.dist;
    t.tgt = rhs.dist;
    for (const auto& d : l.tgt->objects)
        for (const auto& a : m.src->objects) {
            std::map<std::string, std::string> table;
            for (const auto& c : n.tgt->objects)
                for (const auto& b : m.tgt->objects)
                    for (const auto& le : l.at(d, c).elements)
                        for (const auto& ne : n.at(c, b).elements)
                            for (const auto& me : m.at(b, a).elements) {
                                const std::string& lncls = ln.inject.at({d, b}).at({c, le, ne});
                                const std::string& from = lhs.inject.at({d, a}).at({b, lncls, me});
                                const std::string& nmcls = nm.inject.at({c, a}).at({b, ne, me});
                                const std::string& to = rhs.inject.at({d, a}).at({c, le, nmcls});
                                auto [it, fresh] = table.emplace(from, to);
                                if (!fresh && it->second != to)
                                    throw engine_error("dist_assoc: map not well-defined");
                            }
            t.components[{d, a}] =
                SetMap(lhs.dist.at(d, a), rhs.dist.at(d, a), std::move(table));
        }
    return check_dist_iso(lhs.dist, rhs.dist, t);
}

IsoReport tensor_unit_iso(const Presheaf& r) {
    Presheaf one = unit_presheaf();
    Presheaf lhs = tensor(one, r); // over 1 × A
    // transport along the unitor a ↦ (pt, a)
    Functor j;
    j.name = "λ";
    j.src = r.base;
    j.tgt = lhs.base;
    for (const auto& o : r.base->objects) j.on_objects[o] = pair_label("pt", o);
    for (const auto& m : r.base->morphisms) j.on_morphisms[m.name] = pair_label("id_pt", m.name);
    Presheaf moved = subst(j, lhs);

    NatTrans t;
    t.src = moved;
    t.tgt = r;
    for (const auto& o : r.base->objects) {
        std::map<std::string, std::string> table;
        for (const auto& x : r.at(o).elements) table[pair_label("*", x)] = x;
        t.components[o] = SetMap(moved.at(o), r.at(o), std::move(table));
    }
    return check_iso(moved, r, t);
}

IsoReport tensor_assoc_iso(const Presheaf& r, const Presheaf& s, const Presheaf& t) {
    Presheaf lhs = tensor(tensor(r, s), t); // over (A×B)×C
    Presheaf rhs = tensor(r, tensor(s, t)); // over A×(B×C)
    Functor assoc;
    assoc.name = "α";
    assoc.src = lhs.base;
    assoc.tgt = rhs.base;
    for (const auto& a : r.base->objects)
        for (const auto& b : s.base->objects)
            for (const auto& c : t.base->objects)
                assoc.on_objects[pair_label(pair_label(a, b), c)] =
                    pair_label(a, pair_label(b, c));
    for (const auto& f : r.base->morphisms)
        for (const auto& g : s.base->morphisms)
            for (const auto& h : t.base->morphisms)
                assoc.on_morphisms[pair_label(pair_label(f.name, g.name), h.name)] =
                    pair_label(f.name, pair_label(g.name, h.name));
    Presheaf moved = subst(assoc, rhs);

    NatTrans tr;
    tr.src = lhs;
    tr.tgt = moved;
    for (const auto& a : r.base->objects)
        for (const auto& b : s.base->objects)
            for (const auto& c : t.base->objects) {
                std::string obj = pair_label(pair_label(a, b), c);
                std::map<std::string, std::string> table;
                for (const auto& x : r.at(a).elements)
                    for (const auto& y : s.at(b).elements)
                        for (const auto& z : t.at(c).elements)
                            table[pair_label(pair_label(x, y), z)] =
                                pair_label(x, pair_label(y, z));
                tr.components[obj] = SetMap(lhs.at(obj), moved.at(obj), std::move(table));
            }
    return check_iso(lhs, moved, tr);
}

// ---------------------------------------------------------------------------

std::string to_json(const LawRecord& r) {
    auto esc = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            if (c == '\n') {
                out += "\\n";
                continue;
            }
            out += c;
        }
        return out;
    };
    std::ostringstream os;
    os << "{\"suite\":\"" << esc(r.suite) << "\",\"law\":\"" << esc(r.law) << "\",\"instance\":\""
       << esc(r.instance) << "\",\"status\":\"" << esc(r.status) << "\",\"millis\":" << r.millis
       << ",\"witness\":\"" << esc(r.witness) << "\"}";
    return os.str();
}

bool all_pass(const std::vector<LawRecord>& records) {
    for (const auto& r : records)
        if (r.status != "pass") return false;
    return true;
}

void sort_records(std::vector<LawRecord>& records) {
    std::sort(records.begin(), records.end(), [](const LawRecord& a, const LawRecord& b) {
        return std::tie(a.suite, a.law, a.instance) < std::tie(b.suite, b.law, b.instance);
    });
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

struct Recorder {
    std::vector<LawRecord>& out;
    std::string suite;

    template <typename F>
    void run(const std::string& law, const std::string& instance, F&& f) {
        Timer timer;
        LawRecord rec{suite, law, instance, "pass", 0, ""};
        try {
            std::string witness = f();
            rec.witness = witness;
        } catch (const cap_error& e) {
            rec.status = "fail";
            rec.witness = std::string("cap exceeded: ") + e.what();
        } catch (const std::exception& e) {
            rec.status = "fail";
            rec.witness = e.what();
        }
        rec.millis = timer.ms();
        out.push_back(std::move(rec));
    }
};

std::string require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
    return "";
}

std::string require_iso(const IsoReport& rep) {
    if (!rep.holds) throw std::runtime_error(rep.describe());
    return "";
}

std::string require_dist_iso(const DistIsoReport& rep) {
    if (!rep.holds) throw std::runtime_error(rep.failure);
    return "";
}

} // namespace

std::vector<LawRecord> run_core_suite(const SuiteOptions& opt) {
    std::vector<LawRecord> out;
    Recorder rec{out, "core"};
    corpus::CorpusOptions copt;
    copt.full = opt.full;
    copt.seed = opt.seed;
    if (!opt.full) {
        copt.presheaves_per_base = 4;
        copt.distributors_per_pair = 2;
        copt.pair_limit = 6;
    }
    corpus::Corpus corp = corpus::build_corpus(copt);
    const SizeLimits& caps = opt.caps;

    // per-base laws
    std::size_t base_idx = 0;
    for (const auto& base : corp.bases) {
        std::string bi = "base" + std::to_string(base_idx++) + ":" + base->name;
        rec.run("validate", bi, [&] { return require(validate(*base).empty(), "violations"); });
        rec.run("opposite_involution", bi, [&] {
            return require(equal_structure(opposite(opposite(*base)), *base),
                           "opposite is not an involution");
        });

        auto presheaves = corpus::enumerate_presheaves(base, 2, copt.presheaves_per_base);
        std::size_t pi_idx = 0;
        for (const auto& r : presheaves) {
            std::string ri = bi + "/P" + std::to_string(pi_idx++);
            rec.run("coyoneda", ri, [&] {
                ExistsResult ex = exists_along(identity_dist(base), r, caps);
                return require_iso(check_iso(ex.psh, r, coyoneda_map(ex, r)));
            });
            for (const auto& o : base->objects)
                rec.run("yoneda", ri + "@" + o,
                        [&] { return require_iso(yoneda_check(r, o, caps)); });
            rec.run("dual_involution", ri, [&] {
                Presheaf back = undual_presheaf(dual_presheaf(r));
                return require(same_presheaf(back, r), "double dual differs");
            });
            rec.run("tensor_unit", ri, [&] { return require_iso(tensor_unit_iso(r)); });
        }

        rec.run("id_rel_vs_hom", bi, [&] { return require_iso(id_rel_vs_hom(base, caps)); });
        rec.run("id_lawvere_routes", bi,
                [&] { return require_iso(id_lawvere_vs_sigma_route(base, caps)); });
        rec.run("comonoid_laws", bi, [&] {
            ComonoidLawReport cr = comonoid_laws(base, caps);
            require_dist_iso(cr.left_unit);
            require_dist_iso(cr.right_unit);
            return require_dist_iso(cr.assoc);
        });

        if (presheaves.size() >= 2) {
            const Presheaf& r = presheaves[presheaves.size() / 2];
            const Presheaf& s = presheaves[presheaves.size() - 1];
            rec.run("fiber_and", bi,
                    [&] { return require_iso(fiber_and_vs_pointwise(base, r, s, caps)); });
            rec.run("fiber_top", bi, [&] { return require_iso(fiber_top_vs_pointwise(base, caps)); });
            rec.run("fiber_imp", bi,
                    [&] { return require_iso(fiber_imp_vs_exponential(base, r, s, caps)); });
            rec.run("comonoid_pushpull", bi, [&] {
                auto [pushr, pullr] = comonoid_pushpull_iso(base, r, s, caps);
                require_iso(pushr);
                return require_iso(pullr);
            });
            rec.run("tensor_symmetry", bi, [&] { return require_iso(tensor_symmetry(r, s)); });
        }
    }

    // per-pair laws
    std::size_t pair_idx = 0;
    for (const auto& [a, b] : corp.pairs) {
        std::string pi = "pair" + std::to_string(pair_idx++) + ":" + a->name + "->" + b->name;
        auto dists = corpus::sample_distributors(a, b, 2, copt.distributors_per_pair, opt.seed);
        auto rs = corpus::enumerate_presheaves(a, 2, 3);
        auto ss = corpus::enumerate_presheaves(b, 2, 3);
        auto rs_co = corpus::enumerate_presheaves(a, 2, 2, Variance::co);
        auto ss_co = corpus::enumerate_presheaves(b, 2, 2, Variance::co);
        std::size_t mi = 0;
        for (const auto& m : dists) {
            std::string di = pi + "/M" + std::to_string(mi++);
            rec.run("dual_dist_involution", di, [&] {
                Distributor back = dual_dist(dual_dist(m));
                return require(same_distributor(back, m), "double dual differs");
            });
            rec.run("dist_unit_right", di, [&] { return require_dist_iso(dist_unit_right(m, caps)); });
            rec.run("dist_unit_left", di, [&] { return require_dist_iso(dist_unit_left(m, caps)); });
            std::size_t ri_idx = 0;
            for (const auto& r : rs) {
                std::string ii = di + "/R" + std::to_string(ri_idx++);
                for (const auto& s : ss) {
                    rec.run("adjunction", ii, [&] {
                        AdjunctionReport ar = adjunction_check(m, r, s, caps);
                        return require(ar.holds, ar.failure) +
                               ("homs=" + std::to_string(ar.hom_up));
                    });
                    rec.run("thm3_pull", ii, [&] { return require_iso(thm3_pull(m, s, caps)); });
                    break; // one S per R keeps the sweep quadratic, not cubic
                }
                rec.run("thm3_push", ii, [&] { return require_iso(thm3_push(m, r, caps)); });
            }
            for (const auto& s : ss) {
                rec.run("law_a", di, [&] { return require_iso(law_a(m, s, caps)); });
                break;
            }
            for (const auto& s : ss_co) {
                rec.run("law_b", di, [&] { return require_iso(law_b(m, s, caps)); });
                break;
            }
            for (const auto& r : rs_co) {
                rec.run("exists_q_conjugation", di, [&] {
                    CoPresheaf direct = exists_q(m, r, caps).psh;
                    CoPresheaf conj = dual_presheaf(
                        forall_along(dual_dist(m), undual_presheaf(r), caps).psh);
                    return require(same_presheaf(direct, conj),
                                   "q-side ∃ differs from its conjugate");
                });
                break;
            }
        }

        // reconstruction over the functor corpus for this pair
        auto functors = corpus::enumerate_functors(a, b, opt.full ? 6 : 3);
        std::size_t fi = 0;
        for (const auto& f : functors) {
            std::string fid = pi + "/F" + std::to_string(fi++);
            if (!rs.empty() && !ss.empty()) {
                const Presheaf& r = rs.front();
                const Presheaf& s = ss.front();
                rec.run("reconstruction", fid, [&] {
                    ReconstructionReport rr = reconstruction_check(f, r, s, caps);
                    require_iso(rr.sigma_vs_exists);
                    require_iso(rr.subst_vs_forall);
                    require_iso(rr.exists_vs_subst);
                    return require_iso(rr.pi_vs_forall);
                });
            }
            rec.run("emb_plus_compose", fid, [&] {
                Functor g = identity_functor(b);
                return require_dist_iso(emb_plus_compose_iso(f, g, caps));
            });
            rec.run("emb_minus_compose", fid, [&] {
                Functor g = identity_functor(b);
                return require_dist_iso(emb_minus_compose_iso(f, g, caps));
            });
        }
    }

    // triple-based laws: composition associativity and quantifier composition
    std::size_t tri = 0;
    for (std::size_t i = 0; i + 1 < corp.pairs.size() && tri < (opt.full ? 8u : 4u); ++i) {
        auto [a, b] = corp.pairs[i];
        auto ms = corpus::sample_distributors(a, b, 2, 1, opt.seed + i);
        auto ns = corpus::sample_distributors(b, a, 2, 1, opt.seed + 100 + i);
        if (ms.empty() || ns.empty()) continue;
        auto rs = corpus::enumerate_presheaves(a, 2, 2);
        std::string ti = "triple" + std::to_string(tri++);
        rec.run("dist_assoc", ti, [&] {
            return require_dist_iso(dist_assoc(ms[0], ns[0], ms[0], caps));
        });
        for (const auto& r : rs) {
            rec.run("compose_quantifier", ti, [&] {
                return require_iso(compose_quantifier_iso(ns[0], ms[0], r, caps));
            });
            break;
        }
    }

    // the four-category monoidal laws
    std::size_t quad = 0;
    for (std::size_t i = 0; i + 1 < corp.pairs.size() && quad < (opt.full ? 6u : 3u); i += 2) {
        auto [a, c] = corp.pairs[i];
        auto [b, d] = corp.pairs[i + 1];
        std::string qi = "quad" + std::to_string(quad++);
        auto ms = corpus::sample_distributors(a, c, 2, 1, opt.seed + 11 + i);
        auto ns = corpus::sample_distributors(b, d, 2, 1, opt.seed + 12 + i);
        auto ms_back = corpus::sample_distributors(c, a, 2, 1, opt.seed + 13 + i);
        auto ns_back = corpus::sample_distributors(d, b, 2, 1, opt.seed + 14 + i);
        auto rs = corpus::enumerate_presheaves(a, 2, 2);
        auto ss = corpus::enumerate_presheaves(b, 2, 2);
        auto rs_co = corpus::enumerate_presheaves(a, 2, 2, Variance::co);
        auto ss_co = corpus::enumerate_presheaves(b, 2, 2, Variance::co);
        if (ms.empty() || ns.empty() || ms_back.empty() || ns_back.empty()) continue;
        if (rs.empty() || ss.empty() || rs_co.empty() || ss_co.empty()) continue;
        const Presheaf& r = rs.back();
        const Presheaf& s = ss.back();
        const Presheaf& rc = rs_co.back();
        const Presheaf& sc = ss_co.back();
        rec.run("law_exists_tensor", qi,
                [&] { return require_iso(law_exists_tensor(ms[0], ns[0], r, s, caps)); });
        rec.run("law_d", qi, [&] { return require_iso(law_d(ms_back[0], ns_back[0], rc, sc, caps)); });
        rec.run("law_forall_multimap", qi, [&] {
            return require_iso(law_forall_multimap(ms[0], ns_back[0], r, s, caps));
        });
        rec.run("law_d_action", qi, [&] {
            return require_iso(law_d_action(ms[0], ns_back[0], r, s, caps));
        });
        rec.run("law_e", qi, [&] {
            IsoReport rep = law_e(ms_back[0], ns_back[0], r, s, caps);
            return std::string(rep.holds ? "iso" : "strict: " + rep.describe());
        });
        rec.run("law_f", qi, [&] {
            IsoReport rep = law_f(ms[0], ns[0], rc, sc, caps);
            return std::string(rep.holds ? "iso" : "strict: " + rep.describe());
        });
    }

    sort_records(out);
    return out;
}

std::vector<LawRecord> run_matll_suite(const SuiteOptions& opt) {
    std::vector<LawRecord> out;
    Recorder rec{out, "matll"};
    std::vector<int> chains = opt.full ? std::vector<int>{2, 3, 4} : std::vector<int>{2, 3};
    if (std::find(chains.begin(), chains.end(), opt.chain) == chains.end())
        chains.push_back(opt.chain);
    for (int n : chains) {
        mv::StarAutPoset v = mv::mv_chain(n);
        std::string ci = "chain" + std::to_string(n);
        rec.run("chain_axioms", ci, [&] {
            auto viol = validate(v);
            return require(viol.empty(), viol.empty() ? "" : viol.front());
        });
        std::size_t samples = opt.full ? 1200 : 150;
        mv::MatLawBoxReport box = mv::mat_law_box(v, 3, samples, opt.seed);
        for (std::string law : {"a", "b", "c", "d"}) {
            rec.run("box_" + law, ci, [&] {
                return require(box.failures[law] == 0,
                               std::to_string(box.failures[law]) + " failures") +
                       ("checked=" + std::to_string(box.checked[law]));
            });
        }
        for (std::string law : {"e", "f"}) {
            rec.run("box_" + law + "_leq", ci, [&] {
                return require(box.failures[law] == 0, "entrywise ≤ violated") +
                       ("checked=" + std::to_string(box.checked[law]));
            });
            rec.run("box_" + law + "_strict", ci, [&] {
                return require(box.strict_witness.count(law) > 0, "no strict instance found") +
                       (box.strict_witness.count(law) ? box.strict_witness[law].witness : "");
            });
        }
        // Galois adjunction and the De Morgan duality of the two compositions
        rec.run("galois_adjunction", ci, [&] {
            std::mt19937_64 rng(opt.seed);
            std::uniform_int_distribution<int> d(0, v.n - 1);
            FinSet A("a", {"a0", "a1"});
            FinSet B("b", {"b0", "b1", "b2"});
            for (int k = 0; k < 200; ++k) {
                mv::MVMatrix m, r, s;
                m.src = A;
                m.tgt = B;
                for (const auto& bb : B.elements)
                    for (const auto& aa : A.elements) m.entries[{bb, aa}] = d(rng);
                r.src = FinSet("1", {"*"});
                r.tgt = A;
                for (const auto& aa : A.elements) r.entries[{aa, "*"}] = d(rng);
                s.src = FinSet("1", {"*"});
                s.tgt = B;
                for (const auto& bb : B.elements) s.entries[{bb, "*"}] = d(rng);
                if (!mat_adjunction_holds(v, m, r, s))
                    throw std::runtime_error("Galois adjunction fails at sample " +
                                             std::to_string(k));
            }
            return std::string("samples=200");
        });
        rec.run("compose_de_morgan", ci, [&] {
            std::mt19937_64 rng(opt.seed + 1);
            std::uniform_int_distribution<int> d(0, v.n - 1);
            FinSet A("a", {"a0", "a1"});
            FinSet B("b", {"b0", "b1"});
            FinSet C("c", {"c0", "c1", "c2"});
            for (int k = 0; k < 100; ++k) {
                mv::MVMatrix m, nmat;
                m.src = A;
                m.tgt = B;
                nmat.src = B;
                nmat.tgt = C;
                for (const auto& bb : B.elements)
                    for (const auto& aa : A.elements) m.entries[{bb, aa}] = d(rng);
                for (const auto& cc : C.elements)
                    for (const auto& bb : B.elements) nmat.entries[{cc, bb}] = d(rng);
                mv::MVMatrix lhs = mat_dual(v, mat_compose_plus(v, nmat, m));
                mv::MVMatrix rhs = mat_compose_minus(v, mat_dual(v, m), mat_dual(v, nmat));
                if (!mat_eq(lhs, rhs))
                    throw std::runtime_error("dual of ∘ differs from ⋄ of duals at sample " +
                                             std::to_string(k));
            }
            return std::string("samples=100");
        });
        rec.run("identity_unit", ci, [&] {
            std::mt19937_64 rng(opt.seed + 2);
            std::uniform_int_distribution<int> d(0, v.n - 1);
            FinSet A("a", {"a0", "a1"});
            FinSet B("b", {"b0", "b1"});
            mv::MVMatrix m;
            m.src = A;
            m.tgt = B;
            for (const auto& bb : B.elements)
                for (const auto& aa : A.elements) m.entries[{bb, aa}] = d(rng);
            mv::MVMatrix left = mat_compose_plus(v, mat_identity(v, B), m);
            mv::MVMatrix right = mat_compose_plus(v, m, mat_identity(v, A));
            return require(mat_eq(left, m) && mat_eq(right, m), "identity is not a unit");
        });
    }
    sort_records(out);
    return out;
}

std::vector<LawRecord> run_diagram_suite(const SuiteOptions& opt) {
    std::vector<LawRecord> out;
    Recorder rec{out, "diagrams"};
    const SizeLimits& caps = opt.caps;

    // models over the walking arrow and the discrete pair
    std::vector<diag::DiagModel> models;
    {
        std::vector<CatPtr> bases = {corpus::walking_arrow(), corpus::discrete2()};
        std::uint64_t seed = opt.seed;
        for (const auto& a : bases)
            for (const auto& b : bases) {
                diag::DiagModel model;
                model.categories[a->name] = a;
                model.categories[b->name] = b;
                CatPtr unit_cat = corpus::terminal();
                model.categories[unit_cat->name] = unit_cat;
                Presheaf one = unit_presheaf();
                one.base = unit_cat;
                one.name = "one";
                model.presheaves["one"] = one;
                auto rs = corpus::enumerate_presheaves(a, 2, 3);
                auto ss = corpus::enumerate_presheaves(b, 2, 3);
                auto rs_co = corpus::enumerate_presheaves(a, 2, 2, Variance::co);
                if (rs.empty() || ss.empty() || rs_co.empty()) continue;
                Presheaf r = rs.back();
                r.name = "R";
                Presheaf s = ss.back();
                s.name = "S";
                CoPresheaf rc = rs_co.back();
                rc.name = "Rc";
                model.presheaves["R"] = r;
                model.presheaves["S"] = s;
                model.copresheaves["Rc"] = rc;
                // a singleton-valued predicate keeps the coeval end inside the
                // default family-space cap on the densest bases
                Presheaf ss1 = terminal_presheaf(b);
                ss1.name = "Ss";
                model.presheaves["Ss"] = ss1;
                auto msd = corpus::sample_distributors(a, b, 2, 2, seed += 17);
                if (msd.empty()) continue;
                Distributor m = msd.front();
                m.name = "M";
                model.distributors["M"] = m;
                // N shares M's endpoints: the rule-9 redex pairs ∀_N S with S over b
                auto nsd = corpus::sample_distributors(a, b, 2, 2, seed += 17);
                if (nsd.empty()) continue;
                Distributor n = nsd.back();
                n.name = "N";
                model.distributors["N"] = n;
                models.push_back(std::move(model));
            }
    }

    std::size_t sweeps = opt.full ? 6 : 2;
    std::size_t idx = 0;
    for (std::size_t rep_i = 0; rep_i < sweeps; ++rep_i)
        for (const auto& model : models) {
            using namespace diag;
            DiagSignature sig = model.signature();
            TermPtr r = atom("R");
            TermPtr s = atom("S");
            DistExprPtr m = dist_name("M");
            DistExprPtr n = dist_name("N");
            CatExprPtr acat = cat_name(model.presheaves.at("R").base->name);
            CatExprPtr bcat = cat_name(model.presheaves.at("S").base->name);

            struct Case {
                std::string name;
                TermPtr term;
                Move move;
            };
            std::vector<Case> cases;
            cases.push_back({"annulus_insert_root", r, {MoveKind::AnnulusInsert, {}, false, nullptr, nullptr}});
            cases.push_back({"annulus_insert_tensor", tensor(r, s),
                             {MoveKind::AnnulusInsert, {0}, false, nullptr, nullptr}});
            cases.push_back({"annulus_remove", codual(dual(r)),
                             {MoveKind::AnnulusRemove, {}, false, nullptr, nullptr}});
            cases.push_back({"annulus_remove_red", dual(codual(dual(r))),
                             {MoveKind::AnnulusRemove, {0}, false, nullptr, nullptr}});
            // distributivity redex: (∃_M R) ⊸ (∀_N S)
            TermPtr forall_ns = codual(push(dist_dual(n), dual(s)));
            TermPtr redex9 = codual(owedge(dual(forall_ns), push(m, r)));
            cases.push_back({"distributivity", redex9,
                             {MoveKind::Distributivity, {}, false, nullptr, nullptr}});
            TermPtr contract9 =
                codual(push(dist_dual(dist_tensor(dist_dual(m), dist_dual(dist_dual(n)))),
                            owedge(dual(s), r)));
            cases.push_back({"distributivity_back", contract9,
                             {MoveKind::Distributivity, {}, true, nullptr, nullptr}});
            cases.push_back({"unit", r, {MoveKind::Unit, {}, false, m, nullptr}});
            cases.push_back({"unit_id", r, {MoveKind::Unit, {}, false, dist_id(acat), nullptr}});
            TermPtr counit_redex = push(m, codual(push(dist_dual(m), dual(s))));
            cases.push_back({"counit", counit_redex, {MoveKind::Counit, {}, false, nullptr, nullptr}});
            TermPtr ss1 = atom("Ss");
            cases.push_back({"coeval", ss1, {MoveKind::Coeval, {}, false, nullptr, r}});
            cases.push_back(
                {"coeval_unit", ss1, {MoveKind::Coeval, {}, false, nullptr, atom("one")}});
            TermPtr eval_redex = push(dist_eval(acat, bcat), tensor(r, imp_term(r, ss1)));
            cases.push_back({"eval", eval_redex, {MoveKind::Eval, {}, false, nullptr, nullptr}});
            TermPtr eval_unit_redex =
                push(dist_eval(cat_name("1"), bcat), tensor(atom("one"), imp_term(atom("one"), s)));
            cases.push_back({"eval_unit", eval_unit_redex,
                             {MoveKind::Eval, {}, false, nullptr, nullptr}});

            for (const auto& c : cases) {
                std::string ii = "model" + std::to_string(idx) + "/" + c.name;
                rec.run("soundness_" + c.name, ii, [&] {
                    SoundnessReport srep = soundness_check(c.term, c.move, model, caps);
                    require(srep.natural, "canonical map not natural: " + srep.failure);
                    if (move_is_iso(c.move.kind))
                        require(srep.iso, "iso move is not bijective: " + srep.failure);
                    // the degenerate reductions of the two directed rules
                    if (c.name == "unit_id" || c.name == "eval_unit" || c.name == "coeval_unit")
                        require(srep.iso, "degenerate directed move should be invertible");
                    return std::string(srep.iso ? "iso" : "directed");
                });
                rec.run("boundary_" + c.name, ii, [&] {
                    DiagSignature s2 = model.signature();
                    auto before = typecheck(c.term, s2);
                    auto after = typecheck(apply_move(c.term, c.move, s2), s2);
                    return require(before.ok && after.ok &&
                                       diag::equal(before.boundary.cat, after.boundary.cat) &&
                                       before.boundary.blue == after.boundary.blue,
                                   "boundary not preserved");
                });
            }

            // iso moves compose to the identity at the term level
            rec.run("annulus_inverse", "model" + std::to_string(idx), [&] {
                Move ins{MoveKind::AnnulusInsert, {}, false, nullptr, nullptr};
                Move rem{MoveKind::AnnulusRemove, {}, false, nullptr, nullptr};
                TermPtr t1 = apply_move(r, ins, sig);
                TermPtr t2 = apply_move(t1, rem, sig);
                return require(diag::equal(t2, r), "insert;remove is not the identity");
            });
            rec.run("distributivity_inverse", "model" + std::to_string(idx), [&] {
                Move fwd{MoveKind::Distributivity, {}, false, nullptr, nullptr};
                Move bwd{MoveKind::Distributivity, {}, true, nullptr, nullptr};
                TermPtr t1 = apply_move(redex9, fwd, sig);
                TermPtr t2 = apply_move(t1, bwd, sig);
                return require(diag::equal(t2, redex9), "forward;backward is not the identity");
            });
            ++idx;
        }

    sort_records(out);
    return out;
}

CounterexampleResult find_counterexample(char law, const SizeLimits& caps) {
    CounterexampleResult res;
    Timer timer;
    CatPtr one = corpus::terminal();
    std::vector<CatPtr> bases = {one, corpus::discrete2()};

    auto subset_presheaf = [](CatPtr base, unsigned mask, Variance var) {
        Presheaf p;
        p.name = "sub" + std::to_string(mask);
        p.base = base;
        p.variance = var;
        std::size_t i = 0;
        for (const auto& o : base->objects) {
            std::vector<std::string> elems;
            if (mask & (1u << i)) elems.push_back("*");
            p.values[o] = FinSet(o, std::move(elems));
            ++i;
        }
        for (const auto& o : base->objects)
            p.actions[base->id_of(o)] = SetMap::identity(p.values[o]);
        return p;
    };
    auto subset_dist_from_one = [&](CatPtr a, unsigned mask) {
        // M : 1 ⇸ A, the q-side orientation of laws (e)
        Distributor d;
        d.name = "m" + std::to_string(mask);
        d.src = one;
        d.tgt = a;
        std::size_t i = 0;
        for (const auto& o : a->objects) {
            std::vector<std::string> elems;
            if (mask & (1u << i)) elems.push_back("*");
            d.values[{o, "pt"}] = FinSet(o, std::move(elems));
            ++i;
        }
        for (const auto& o : a->objects) {
            d.left_action[{a->id_of(o), "pt"}] = SetMap::identity(d.values[{o, "pt"}]);
            d.right_action[{o, "id_pt"}] = SetMap::identity(d.values[{o, "pt"}]);
        }
        return d;
    };
    auto subset_dist_to_one = [&](CatPtr a, unsigned mask) {
        // M : A ⇸ 1, the orientation of law (f)
        Distributor d;
        d.name = "m" + std::to_string(mask);
        d.src = a;
        d.tgt = one;
        std::size_t i = 0;
        for (const auto& o : a->objects) {
            std::vector<std::string> elems;
            if (mask & (1u << i)) elems.push_back("*");
            d.values[{"pt", o}] = FinSet(o, std::move(elems));
            ++i;
        }
        for (const auto& o : a->objects) {
            d.left_action[{"id_pt", o}] = SetMap::identity(d.values[{"pt", o}]);
            d.right_action[{"pt", a->id_of(o)}] = SetMap::identity(d.values[{"pt", o}]);
        }
        return d;
    };

    for (const auto& a : bases)
        for (const auto& b : bases) {
            unsigned amax = 1u << a->objects.size();
            unsigned bmax = 1u << b->objects.size();
            for (unsigned mm = 0; mm < amax; ++mm)
                for (unsigned rr = 0; rr < amax; ++rr)
                    for (unsigned nn = 0; nn < bmax; ++nn)
                        for (unsigned ssv = 0; ssv < bmax; ++ssv) {
                            IsoReport rep;
                            if (law == 'e') {
                                rep = law_e(subset_dist_from_one(a, mm),
                                            subset_dist_from_one(b, nn),
                                            subset_presheaf(a, rr, Variance::contra),
                                            subset_presheaf(b, ssv, Variance::contra), caps);
                            } else {
                                rep = law_f(subset_dist_to_one(a, mm), subset_dist_to_one(b, nn),
                                            subset_presheaf(a, rr, Variance::co),
                                            subset_presheaf(b, ssv, Variance::co), caps);
                            }
                            if (!rep.holds) {
                                res.found = true;
                                res.millis = timer.ms();
                                res.description =
                                    "law (" + std::string(1, law) + ") strict on A=" + a->name +
                                    " B=" + b->name + " M=" + std::to_string(mm) +
                                    " N=" + std::to_string(nn) + " R=" + std::to_string(rr) +
                                    " S=" + std::to_string(ssv) + ": " + rep.describe();
                                return res;
                            }
                        }
        }
    res.millis = timer.ms();
    return res;
}

} // namespace psh::laws
