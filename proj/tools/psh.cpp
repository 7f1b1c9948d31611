#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "psh/diagrams.hpp"
#include "psh/dsl.hpp"
#include "psh/io.hpp"
#include "psh/laws.hpp"
#include "psh/matll.hpp"

namespace {

// exit codes: 0 ok, 1 failed check, 2 usage/syntax, 3 cap exceeded, 4 engine bug
constexpr int kOk = 0, kFail = 1, kUsage = 2, kCap = 3, kBug = 4;

psh::SizeLimits caps_from(std::size_t cap) {
    psh::SizeLimits caps;
    if (cap > 0) {
        caps.coend_items = cap;
        caps.family_space = cap;
        caps.hom_enumeration = cap;
    }
    return caps;
}

psh::diag::DiagModel model_from(const psh::Workspace& ws) {
    psh::diag::DiagModel model;
    model.categories = ws.categories;
    for (const auto& [n, p] : ws.presheaves) {
        if (p.variance == psh::Variance::contra)
            model.presheaves[n] = p;
        else
            model.copresheaves[n] = p;
    }
    model.distributors = ws.distributors;
    return model;
}

std::vector<int> parse_path(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '.'))
        if (!part.empty()) out.push_back(std::stoi(part));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite presheaf and distributor calculator"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::size_t cap = 0;
    int chain = 3;
    std::uint64_t seed = 20170126;
    app.add_option("--cap", cap, "size cap for coend/end computations");
    app.add_option("--chain", chain, "MV-chain size for the matrix model");
    app.add_option("--seed", seed, "seed for randomized sweeps");

    // validate
    auto* v = app.add_subcommand("validate", "load files and validate every entity");
    std::vector<std::string> vfiles;
    v->add_option("files", vfiles, "entity files")->required();

    // eval
    auto* ev = app.add_subcommand("eval", "evaluate an expression against a workspace");
    std::string ev_ws, ev_expr;
    ev->add_option("-w,--workspace", ev_ws, "workspace directory")->required();
    ev->add_option("expr", ev_expr, "expression")->required();

    // check-iso
    auto* ci = app.add_subcommand("check-iso", "check two expressions for isomorphism");
    std::string ci_ws, ci_e1, ci_e2, ci_canonical = "search";
    ci->add_option("-w,--workspace", ci_ws)->required();
    ci->add_option("e1", ci_e1)->required();
    ci->add_option("e2", ci_e2)->required();
    ci->add_option("--canonical", ci_canonical, "identity | search (default)");

    // laws
    auto* lw = app.add_subcommand("laws", "run a law suite and print one record per instance");
    std::string lw_suite, lw_corpus = "small";
    bool lw_timings = false;
    lw->add_option("--suite", lw_suite, "core | matll | diagrams")->required();
    lw->add_option("--corpus", lw_corpus, "small | full");
    lw->add_flag("--timings", lw_timings,
                 "include wall-clock timings (off by default, keeping output byte-stable)");

    // counterexample
    auto* cx = app.add_subcommand("counterexample", "find a strict instance of law (e) or (f)");
    std::string cx_law;
    cx->add_option("--law", cx_law, "e | f")->required();

    // diagram
    auto* dg = app.add_subcommand("diagram", "parse, move, check or render diagram terms");
    std::string dg_action, dg_term, dg_ws, dg_kind, dg_path, dg_dist, dg_arg;
    bool dg_backward = false;
    dg->add_option("action", dg_action, "parse | check | move | render")->required();
    dg->add_option("term", dg_term, "diagram term")->required();
    dg->add_option("-w,--workspace", dg_ws, "workspace directory");
    dg->add_option("--kind", dg_kind,
                   "annulus_insert | annulus_remove | distributivity | coeval | eval | unit | counit");
    dg->add_option("--path", dg_path, "dot-separated child path, e.g. 0.1");
    dg->add_option("--dist", dg_dist, "distributor expression for the unit move");
    dg->add_option("--arg", dg_arg, "presheaf term for the coeval move");
    dg->add_flag("--backward", dg_backward, "apply an iso move in reverse");

    CLI11_PARSE(app, argc, argv);
    psh::SizeLimits caps = caps_from(cap);

    try {
        if (*v) {
            try {
                psh::Workspace ws = psh::load_files(vfiles);
                // matrix entries resolve against the selected chain
                psh::mv::StarAutPoset chain_v = psh::mv::mv_chain(chain);
                for (const auto& [n, m] : ws.matrices) {
                    psh::mv::MVMatrix resolved = psh::resolve(m, chain_v);
                    auto violations = validate(resolved, chain_v);
                    if (!violations.empty())
                        throw std::runtime_error("matrix '" + n + "': " + violations.front());
                }
                std::cout << "ok: " << ws.categories.size() << " categories, "
                          << ws.functors.size() << " functors, " << ws.presheaves.size()
                          << " presheaves, " << ws.distributors.size() << " distributors, "
                          << ws.matrices.size() << " matrices\n";
                return kOk;
            } catch (const std::exception& e) {
                std::cerr << e.what() << "\n";
                return kFail;
            }
        }

        if (*ev) {
            psh::Workspace ws = psh::load_workspace(ev_ws);
            psh::dsl::ExprPtr e = psh::dsl::parse(ev_expr);
            psh::Presheaf p = psh::dsl::eval(e, ws, caps);
            std::cout << psh::to_string(p);
            return kOk;
        }

        if (*ci) {
            psh::Workspace ws = psh::load_workspace(ci_ws);
            psh::Presheaf p1 = psh::dsl::eval(psh::dsl::parse(ci_e1), ws, caps);
            psh::Presheaf p2 = psh::dsl::eval(psh::dsl::parse(ci_e2), ws, caps);
            if (ci_canonical == "identity") {
                if (!psh::same_presheaf(p1, p2)) {
                    std::cout << "not iso: the identity map does not connect them\n";
                    return kFail;
                }
                std::cout << "iso (strict data equality)\n";
                return kOk;
            }
            auto found = psh::search_natural_iso(p1, p2, caps);
            if (found) {
                psh::IsoReport rep;
                rep.holds = true;
                rep.via_search = true;
                rep.witness = *found;
                std::cout << rep.describe() << "\n";
                return kOk;
            }
            std::cout << "not iso (no natural iso within the search bound)\n";
            return kFail;
        }

        if (*lw) {
            psh::laws::SuiteOptions opt;
            opt.full = lw_corpus == "full";
            opt.caps = caps;
            opt.seed = seed;
            opt.chain = chain;
            std::vector<psh::laws::LawRecord> records;
            if (lw_suite == "core")
                records = psh::laws::run_core_suite(opt);
            else if (lw_suite == "matll")
                records = psh::laws::run_matll_suite(opt);
            else if (lw_suite == "diagrams")
                records = psh::laws::run_diagram_suite(opt);
            else {
                std::cerr << "unknown suite '" << lw_suite << "'\n";
                return kUsage;
            }
            for (auto& r : records) {
                if (!lw_timings) r.millis = 0;
                std::cout << psh::laws::to_json(r) << "\n";
            }
            bool ok = psh::laws::all_pass(records);
            std::cerr << records.size() << " records, " << (ok ? "all pass" : "FAILURES") << "\n";
            return ok ? kOk : kFail;
        }

        if (*cx) {
            if (cx_law != "e" && cx_law != "f") {
                std::cerr << "--law must be e or f\n";
                return kUsage;
            }
            psh::laws::CounterexampleResult res =
                psh::laws::find_counterexample(cx_law[0], caps);
            if (!res.found) {
                std::cout << "no strict instance found\n";
                return kFail;
            }
            std::cout << res.description << " (" << res.millis << " ms)\n";
            return kOk;
        }

        if (*dg) {
            psh::diag::TermPtr term = psh::diag::parse_term(dg_term);
            if (dg_action == "parse") {
                std::cout << psh::diag::to_string(term) << "\n";
                return kOk;
            }
            if (dg_ws.empty()) {
                std::cerr << "this action needs a workspace (-w)\n";
                return kUsage;
            }
            psh::Workspace ws = psh::load_workspace(dg_ws);
            psh::diag::DiagModel model = model_from(ws);
            psh::diag::DiagSignature sig = model.signature();
            if (dg_action == "check") {
                auto ty = psh::diag::typecheck(term, sig);
                if (!ty.ok) {
                    for (const auto& viol : ty.violations) std::cout << "violation: " << viol << "\n";
                    return kFail;
                }
                std::cout << "boundary: " << psh::diag::to_string(ty.boundary.cat) << " ("
                          << (ty.boundary.blue ? "blue" : "red") << ")\n";
                return kOk;
            }
            if (dg_action == "render") {
                std::cout << psh::diag::render(term, sig);
                return kOk;
            }
            if (dg_action == "move") {
                psh::diag::Move m;
                m.path = parse_path(dg_path);
                m.backward = dg_backward;
                if (dg_kind == "annulus_insert")
                    m.kind = psh::diag::MoveKind::AnnulusInsert;
                else if (dg_kind == "annulus_remove")
                    m.kind = psh::diag::MoveKind::AnnulusRemove;
                else if (dg_kind == "distributivity")
                    m.kind = psh::diag::MoveKind::Distributivity;
                else if (dg_kind == "coeval")
                    m.kind = psh::diag::MoveKind::Coeval;
                else if (dg_kind == "eval")
                    m.kind = psh::diag::MoveKind::Eval;
                else if (dg_kind == "unit")
                    m.kind = psh::diag::MoveKind::Unit;
                else if (dg_kind == "counit")
                    m.kind = psh::diag::MoveKind::Counit;
                else {
                    std::cerr << "unknown move kind '" << dg_kind << "'\n";
                    return kUsage;
                }
                if (!dg_dist.empty()) {
                    // reuse the term grammar for distributor expressions
                    psh::diag::TermPtr probe = psh::diag::parse_term("push(" + dg_dist + ",atom(x))");
                    m.dist = probe->dist;
                }
                if (!dg_arg.empty()) m.arg = psh::diag::parse_term(dg_arg);
                psh::diag::TermPtr moved = psh::diag::apply_move(term, m, sig);
                std::cout << psh::diag::to_string(moved) << "\n";
                psh::diag::SoundnessReport rep = psh::diag::soundness_check(term, m, model, caps);
                std::cout << "soundness: " << (rep.natural ? "natural" : "NOT NATURAL")
                          << (rep.iso ? ", iso" : "") << "\n";
                return rep.natural ? kOk : kFail;
            }
            std::cerr << "unknown diagram action '" << dg_action << "'\n";
            return kUsage;
        }
    } catch (const psh::parse_error& e) {
        std::cerr << "syntax error at " << e.line << ":" << e.col << ": " << e.what() << "\n";
        return kUsage;
    } catch (const psh::cap_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCap;
    } catch (const psh::engine_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kBug;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
