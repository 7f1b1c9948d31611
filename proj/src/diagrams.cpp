#include "psh/diagrams.hpp"

#include <sstream>

#include "psh/quantifiers.hpp"

namespace psh::diag {

// ---- category expressions ----

CatExprPtr cat_name(std::string n) {
    return std::make_shared<CatExpr>(CatExpr{CatExpr::Name, std::move(n), nullptr, nullptr});
}
CatExprPtr cat_op(CatExprPtr x) {
    return std::make_shared<CatExpr>(CatExpr{CatExpr::Op, "", std::move(x), nullptr});
}
CatExprPtr cat_prod(CatExprPtr x, CatExprPtr y) {
    return std::make_shared<CatExpr>(CatExpr{CatExpr::Prod, "", std::move(x), std::move(y)});
}

CatExprPtr normalize(const CatExprPtr& x) {
    switch (x->kind) {
    case CatExpr::Name: return x;
    case CatExpr::Prod: return cat_prod(normalize(x->a), normalize(x->b));
    case CatExpr::Op: {
        CatExprPtr inner = normalize(x->a);
        if (inner->kind == CatExpr::Op) return inner->a;
        if (inner->kind == CatExpr::Prod)
            return cat_prod(normalize(cat_op(inner->a)), normalize(cat_op(inner->b)));
        return cat_op(inner);
    }
    }
    return x;
}

static bool equal_norm(const CatExprPtr& x, const CatExprPtr& y) {
    if (x->kind != y->kind) return false;
    switch (x->kind) {
    case CatExpr::Name: return x->name == y->name;
    case CatExpr::Op: return equal_norm(x->a, y->a);
    case CatExpr::Prod: return equal_norm(x->a, y->a) && equal_norm(x->b, y->b);
    }
    return false;
}

bool equal(const CatExprPtr& x, const CatExprPtr& y) {
    return equal_norm(normalize(x), normalize(y));
}

std::string to_string(const CatExprPtr& x) {
    switch (x->kind) {
    case CatExpr::Name: return x->name;
    case CatExpr::Op: return "op(" + to_string(x->a) + ")";
    case CatExpr::Prod: return "prod(" + to_string(x->a) + "," + to_string(x->b) + ")";
    }
    return "?";
}

// ---- distributor expressions ----

DistExprPtr dist_name(std::string n) {
    return std::make_shared<DistExpr>(
        DistExpr{DistExpr::Name, std::move(n), nullptr, nullptr, nullptr, nullptr});
}
DistExprPtr dist_dual(DistExprPtr d) {
    return std::make_shared<DistExpr>(
        DistExpr{DistExpr::Dual, "", std::move(d), nullptr, nullptr, nullptr});
}
DistExprPtr dist_tensor(DistExprPtr d, DistExprPtr e) {
    return std::make_shared<DistExpr>(
        DistExpr{DistExpr::Tensor, "", std::move(d), std::move(e), nullptr, nullptr});
}
DistExprPtr dist_eval(CatExprPtr x, CatExprPtr y) {
    return std::make_shared<DistExpr>(
        DistExpr{DistExpr::Eval, "", nullptr, nullptr, std::move(x), std::move(y)});
}
DistExprPtr dist_coev(CatExprPtr x, CatExprPtr y) {
    return std::make_shared<DistExpr>(
        DistExpr{DistExpr::Coev, "", nullptr, nullptr, std::move(x), std::move(y)});
}
DistExprPtr dist_id(CatExprPtr x) {
    return std::make_shared<DistExpr>(
        DistExpr{DistExpr::Id, "", nullptr, nullptr, std::move(x), nullptr});
}

bool equal(const DistExprPtr& d, const DistExprPtr& e) {
    if (d->kind != e->kind) return false;
    switch (d->kind) {
    case DistExpr::Name: return d->name == e->name;
    case DistExpr::Dual: return equal(d->a, e->a);
    case DistExpr::Tensor: return equal(d->a, e->a) && equal(d->b, e->b);
    case DistExpr::Eval:
    case DistExpr::Coev: return equal(d->x, e->x) && equal(d->y, e->y);
    case DistExpr::Id: return equal(d->x, e->x);
    }
    return false;
}

std::string to_string(const DistExprPtr& d) {
    switch (d->kind) {
    case DistExpr::Name: return d->name;
    case DistExpr::Dual: return "dual(" + to_string(d->a) + ")";
    case DistExpr::Tensor: return "tensor(" + to_string(d->a) + "," + to_string(d->b) + ")";
    case DistExpr::Eval: return "eval(" + to_string(d->x) + "," + to_string(d->y) + ")";
    case DistExpr::Coev: return "coev(" + to_string(d->x) + "," + to_string(d->y) + ")";
    case DistExpr::Id: return "id(" + to_string(d->x) + ")";
    }
    return "?";
}

// ---- terms ----

static TermPtr mk(DiagTerm t) { return std::make_shared<DiagTerm>(std::move(t)); }

TermPtr atom(std::string name) {
    return mk({DiagTerm::Atom, std::move(name), nullptr, nullptr, nullptr});
}
TermPtr atom_co(std::string name) {
    return mk({DiagTerm::AtomCo, std::move(name), nullptr, nullptr, nullptr});
}
TermPtr tensor(TermPtr t, TermPtr u) {
    return mk({DiagTerm::Tensor, "", nullptr, std::move(t), std::move(u)});
}
TermPtr push(DistExprPtr d, TermPtr t) {
    return mk({DiagTerm::Push, "", std::move(d), std::move(t), nullptr});
}
TermPtr dual(TermPtr t) { return mk({DiagTerm::Dual, "", nullptr, std::move(t), nullptr}); }
TermPtr codual(TermPtr t) { return mk({DiagTerm::Codual, "", nullptr, std::move(t), nullptr}); }
TermPtr owedge(TermPtr t_co, TermPtr t) {
    return mk({DiagTerm::Owedge, "", nullptr, std::move(t_co), std::move(t)});
}
TermPtr imp_term(TermPtr r, TermPtr s) { return codual(owedge(dual(std::move(s)), std::move(r))); }

bool equal(const TermPtr& t, const TermPtr& u) {
    if (t->kind != u->kind) return false;
    switch (t->kind) {
    case DiagTerm::Atom:
    case DiagTerm::AtomCo: return t->name == u->name;
    case DiagTerm::Push: return equal(t->dist, u->dist) && equal(t->a, u->a);
    case DiagTerm::Dual:
    case DiagTerm::Codual: return equal(t->a, u->a);
    case DiagTerm::Tensor:
    case DiagTerm::Owedge: return equal(t->a, u->a) && equal(t->b, u->b);
    }
    return false;
}

std::string to_string(const TermPtr& t) {
    switch (t->kind) {
    case DiagTerm::Atom: return "atom(" + t->name + ")";
    case DiagTerm::AtomCo: return "coatom(" + t->name + ")";
    case DiagTerm::Tensor: return "tensor(" + to_string(t->a) + "," + to_string(t->b) + ")";
    case DiagTerm::Push: return "push(" + to_string(t->dist) + "," + to_string(t->a) + ")";
    case DiagTerm::Dual: return "dual(" + to_string(t->a) + ")";
    case DiagTerm::Codual: return "codual(" + to_string(t->a) + ")";
    case DiagTerm::Owedge: return "owedge(" + to_string(t->a) + "," + to_string(t->b) + ")";
    }
    return "?";
}

// ---- term grammar ----

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else
                ++col;
            ++pos;
        }
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char get() {
        char c = peek();
        if (pos < text.size()) {
            ++pos;
            ++col;
        }
        return c;
    }
    void expect(char c) {
        if (peek() != c)
            throw parse_error(std::string("expected '") + c + "'", line, col);
        get();
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
            ++col;
        }
        if (start == pos) throw parse_error("expected an identifier", line, col);
        return text.substr(start, pos - start);
    }
};

CatExprPtr parse_cat(Lexer& lx) {
    std::string head = lx.ident();
    if (head == "op") {
        lx.expect('(');
        CatExprPtr x = parse_cat(lx);
        lx.expect(')');
        return cat_op(x);
    }
    if (head == "prod") {
        lx.expect('(');
        CatExprPtr x = parse_cat(lx);
        lx.expect(',');
        CatExprPtr y = parse_cat(lx);
        lx.expect(')');
        return cat_prod(x, y);
    }
    return cat_name(head);
}

DistExprPtr parse_dist(Lexer& lx) {
    std::string head = lx.ident();
    if (head == "dual") {
        lx.expect('(');
        DistExprPtr d = parse_dist(lx);
        lx.expect(')');
        return dist_dual(d);
    }
    if (head == "tensor") {
        lx.expect('(');
        DistExprPtr d = parse_dist(lx);
        lx.expect(',');
        DistExprPtr e = parse_dist(lx);
        lx.expect(')');
        return dist_tensor(d, e);
    }
    if (head == "eval" || head == "coev") {
        lx.expect('(');
        CatExprPtr x = parse_cat(lx);
        lx.expect(',');
        CatExprPtr y = parse_cat(lx);
        lx.expect(')');
        return head == "eval" ? dist_eval(x, y) : dist_coev(x, y);
    }
    if (head == "id") {
        lx.expect('(');
        CatExprPtr x = parse_cat(lx);
        lx.expect(')');
        return dist_id(x);
    }
    return dist_name(head);
}

TermPtr parse_term_at(Lexer& lx) {
    std::string head = lx.ident();
    auto unary = [&](auto ctor) {
        lx.expect('(');
        TermPtr t = parse_term_at(lx);
        lx.expect(')');
        return ctor(t);
    };
    if (head == "atom" || head == "coatom") {
        lx.expect('(');
        std::string n = lx.ident();
        lx.expect(')');
        return head == "atom" ? atom(n) : atom_co(n);
    }
    if (head == "dual") return unary([](TermPtr t) { return dual(t); });
    if (head == "codual") return unary([](TermPtr t) { return codual(t); });
    if (head == "tensor" || head == "owedge") {
        lx.expect('(');
        TermPtr t = parse_term_at(lx);
        lx.expect(',');
        TermPtr u = parse_term_at(lx);
        lx.expect(')');
        return head == "tensor" ? tensor(t, u) : owedge(t, u);
    }
    if (head == "push") {
        lx.expect('(');
        DistExprPtr d = parse_dist(lx);
        lx.expect(',');
        TermPtr t = parse_term_at(lx);
        lx.expect(')');
        return push(d, t);
    }
    throw parse_error("unknown term constructor '" + head + "'", lx.line, lx.col);
}

} // namespace

TermPtr parse_term(const std::string& text) {
    Lexer lx(text);
    TermPtr t = parse_term_at(lx);
    if (lx.peek() != '\0') throw parse_error("trailing input after term", lx.line, lx.col);
    return t;
}

// ---- typing ----

std::pair<CatExprPtr, CatExprPtr> dist_profile(const DistExprPtr& d, const DiagSignature& sig) {
    switch (d->kind) {
    case DistExpr::Name: {
        auto it = sig.dists.find(d->name);
        if (it == sig.dists.end())
            throw std::invalid_argument("unknown distributor '" + d->name + "'");
        return {cat_name(it->second.first), cat_name(it->second.second)};
    }
    case DistExpr::Dual: {
        auto [s, t] = dist_profile(d->a, sig);
        return {cat_op(t), cat_op(s)};
    }
    case DistExpr::Tensor: {
        auto [s1, t1] = dist_profile(d->a, sig);
        auto [s2, t2] = dist_profile(d->b, sig);
        return {cat_prod(s1, s2), cat_prod(t1, t2)};
    }
    case DistExpr::Eval:
        return {cat_prod(d->x, cat_prod(cat_op(d->x), d->y)), d->y};
    case DistExpr::Coev:
        return {d->y, cat_prod(cat_op(d->x), cat_prod(d->x, d->y))};
    case DistExpr::Id: return {d->x, d->x};
    }
    throw std::invalid_argument("dist_profile: bad expression");
}

namespace {

// number of boxes into blue inside a maximal red region
int blue_boxes(const TermPtr& t) {
    switch (t->kind) {
    case DiagTerm::AtomCo: return 0;
    case DiagTerm::Dual:
    case DiagTerm::Codual: return 1; // child is blue, a box crossing into blue
    case DiagTerm::Tensor: return blue_boxes(t->a) + blue_boxes(t->b);
    case DiagTerm::Push: return blue_boxes(t->a);
    case DiagTerm::Owedge: return blue_boxes(t->a); // the glued blue arm is not a box
    default: return 0;
    }
}

Boundary check_rec(const TermPtr& t, const DiagSignature& sig, std::vector<std::string>& errs) {
    auto fail = [&](const std::string& m) {
        errs.push_back(m);
        return Boundary{cat_name("?"), true};
    };
    switch (t->kind) {
    case DiagTerm::Atom: {
        auto it = sig.atoms.find(t->name);
        if (it == sig.atoms.end()) return fail("unknown presheaf atom '" + t->name + "'");
        return {cat_name(it->second), true};
    }
    case DiagTerm::AtomCo: {
        auto it = sig.coatoms.find(t->name);
        if (it == sig.coatoms.end()) return fail("unknown copresheaf atom '" + t->name + "'");
        return {cat_name(it->second), false};
    }
    case DiagTerm::Tensor: {
        Boundary ba = check_rec(t->a, sig, errs);
        Boundary bb = check_rec(t->b, sig, errs);
        if (ba.blue != bb.blue) return fail("tensor of mixed polarities");
        return {cat_prod(ba.cat, bb.cat), ba.blue};
    }
    case DiagTerm::Push: {
        Boundary bt = check_rec(t->a, sig, errs);
        try {
            auto [s, tg] = dist_profile(t->dist, sig);
            if (!equal(s, bt.cat))
                return fail("push source " + to_string(normalize(s)) +
                            " does not match boundary " + to_string(normalize(bt.cat)));
            return {tg, bt.blue};
        } catch (const std::invalid_argument& e) {
            return fail(e.what());
        }
    }
    case DiagTerm::Dual:
    case DiagTerm::Codual: {
        Boundary bt = check_rec(t->a, sig, errs);
        if (!bt.blue) {
            // entering blue: the child is the top of a maximal red region
            int boxes = blue_boxes(t->a);
            if (boxes != 1)
                errs.push_back("red region with " + std::to_string(boxes) +
                               " blue boxes (expected exactly one)");
        }
        return {cat_op(bt.cat), !bt.blue};
    }
    case DiagTerm::Owedge: {
        Boundary bco = check_rec(t->a, sig, errs);
        Boundary bbl = check_rec(t->b, sig, errs);
        if (bco.blue) errs.push_back("owedge first argument must be red");
        if (!bbl.blue) errs.push_back("owedge second argument must be blue");
        return {cat_prod(bbl.cat, bco.cat), false};
    }
    }
    return fail("malformed term");
}

} // namespace

TypeResult typecheck(const TermPtr& t, const DiagSignature& sig) {
    TypeResult res;
    res.boundary = check_rec(t, sig, res.violations);
    if (!res.boundary.blue && res.violations.empty()) {
        int boxes = blue_boxes(t);
        if (boxes != 1)
            res.violations.push_back("red region with " + std::to_string(boxes) +
                                     " blue boxes (expected exactly one)");
    }
    res.ok = res.violations.empty();
    res.boundary.cat = normalize(res.boundary.cat);
    return res;
}

// ---- moves ----

bool move_is_iso(MoveKind k) {
    return k == MoveKind::AnnulusInsert || k == MoveKind::AnnulusRemove ||
           k == MoveKind::Distributivity;
}

std::string to_string(MoveKind k) {
    switch (k) {
    case MoveKind::AnnulusInsert: return "annulus_insert";
    case MoveKind::AnnulusRemove: return "annulus_remove";
    case MoveKind::Distributivity: return "distributivity";
    case MoveKind::Coeval: return "coeval";
    case MoveKind::Eval: return "eval";
    case MoveKind::Unit: return "unit";
    case MoveKind::Counit: return "counit";
    }
    return "?";
}

namespace {

TermPtr child(const TermPtr& t, int i) {
    if (i == 0 && t->a) return t->a;
    if (i == 1 && t->b) return t->b;
    throw std::invalid_argument("move path leaves the term");
}

TermPtr replace(const TermPtr& t, const std::vector<int>& path, std::size_t at, TermPtr sub) {
    if (at == path.size()) return sub;
    TermPtr na = t->a, nb = t->b;
    if (path[at] == 0)
        na = replace(t->a, path, at + 1, std::move(sub));
    else
        nb = replace(t->b, path, at + 1, std::move(sub));
    return mk({t->kind, t->name, t->dist, na, nb});
}

TermPtr subterm(const TermPtr& t, const std::vector<int>& path) {
    TermPtr cur = t;
    for (int i : path) cur = child(cur, i);
    return cur;
}

bool is_blue(const TermPtr& t, const DiagSignature& sig) {
    std::vector<std::string> errs;
    Boundary b = check_rec(t, sig, errs);
    if (!errs.empty()) throw std::invalid_argument("move target does not typecheck: " + errs[0]);
    return b.blue;
}

TermPtr rewrite(const TermPtr& s, const Move& m, const DiagSignature& sig) {
    switch (m.kind) {
    case MoveKind::AnnulusInsert:
        return is_blue(s, sig) ? codual(dual(s)) : dual(codual(s));
    case MoveKind::AnnulusRemove:
        if (s->kind == DiagTerm::Codual && s->a->kind == DiagTerm::Dual) return s->a->a;
        if (s->kind == DiagTerm::Dual && s->a->kind == DiagTerm::Codual) return s->a->a;
        throw std::invalid_argument("annulus_remove: no annulus at the given position");
    case MoveKind::Distributivity: {
        if (!m.backward) {
            // codual(owedge(dual(codual(push(dn,s'))), push(mm,r)))
            //   ==> codual(push(dual(tensor(dual(mm),dn)), owedge(s',r)))
            if (s->kind != DiagTerm::Codual || s->a->kind != DiagTerm::Owedge)
                throw std::invalid_argument("distributivity: redex shape mismatch");
            TermPtr ow = s->a;
            TermPtr left = ow->a;  // dual(codual(push(dn, s')))
            TermPtr right = ow->b; // push(mm, r)
            if (left->kind != DiagTerm::Dual || left->a->kind != DiagTerm::Codual ||
                left->a->a->kind != DiagTerm::Push || right->kind != DiagTerm::Push)
                throw std::invalid_argument("distributivity: redex shape mismatch");
            TermPtr inner = left->a->a; // push(dn, s')
            DistExprPtr dn = inner->dist;
            TermPtr sp = inner->a;
            DistExprPtr mm = right->dist;
            TermPtr r = right->a;
            return codual(push(dist_dual(dist_tensor(dist_dual(mm), dist_dual(dn))),
                               owedge(sp, r)));
        }
        // backward: codual(push(dual(tensor(dual(mm),dual(dn))), owedge(s',r)))
        //   ==> codual(owedge(dual(codual(push(dn,s'))), push(mm,r)))
        if (s->kind != DiagTerm::Codual || s->a->kind != DiagTerm::Push)
            throw std::invalid_argument("distributivity⁻¹: redex shape mismatch");
        {
            TermPtr p = s->a;
            if (p->a->kind != DiagTerm::Owedge)
                throw std::invalid_argument("distributivity⁻¹: redex shape mismatch");
            DistExprPtr w = p->dist;
            if (w->kind != DistExpr::Dual || w->a->kind != DistExpr::Tensor ||
                w->a->a->kind != DistExpr::Dual || w->a->b->kind != DistExpr::Dual)
                throw std::invalid_argument("distributivity⁻¹: distributor shape mismatch");
            DistExprPtr mm = w->a->a->a;
            DistExprPtr dn = w->a->b->a;
            TermPtr sp = p->a->a;
            TermPtr r = p->a->b;
            return codual(owedge(dual(codual(push(dn, sp))), push(mm, r)));
        }
    case MoveKind::Unit: {
        if (!m.dist) throw std::invalid_argument("unit move needs a distributor expression");
        if (!is_blue(s, sig)) throw std::invalid_argument("unit move applies to a blue term");
        return codual(push(dist_dual(m.dist), dual(push(m.dist, s))));
    }
    case MoveKind::Counit: {
        // push(e, codual(push(dual(e), dual(s')))) ==> s'
        if (s->kind != DiagTerm::Push || s->a->kind != DiagTerm::Codual ||
            s->a->a->kind != DiagTerm::Push || s->a->a->a->kind != DiagTerm::Dual)
            throw std::invalid_argument("counit: redex shape mismatch");
        DistExprPtr e = s->dist;
        DistExprPtr einner = s->a->a->dist;
        if (!(einner->kind == DistExpr::Dual && equal(einner->a, e)))
            throw std::invalid_argument("counit: distributor expressions do not match");
        return s->a->a->a->a;
    }
    case MoveKind::Coeval: {
        if (!m.arg) throw std::invalid_argument("coeval move needs a presheaf term argument");
        std::vector<std::string> errs;
        Boundary br = check_rec(m.arg, sig, errs);
        Boundary bs = check_rec(s, sig, errs);
        if (!errs.empty()) throw std::invalid_argument("coeval: " + errs[0]);
        if (!br.blue || !bs.blue) throw std::invalid_argument("coeval: both terms must be blue");
        DistExprPtr cv = dist_coev(normalize(br.cat), normalize(bs.cat));
        return codual(push(dist_dual(cv), dual(imp_term(m.arg, tensor(m.arg, s)))));
    }
    case MoveKind::Eval: {
        // push(eval(X,Y), tensor(r, codual(owedge(dual(s'), r)))) ==> s'
        if (s->kind != DiagTerm::Push || s->dist->kind != DistExpr::Eval ||
            s->a->kind != DiagTerm::Tensor)
            throw std::invalid_argument("eval: redex shape mismatch");
        TermPtr r = s->a->a;
        TermPtr impt = s->a->b;
        if (impt->kind != DiagTerm::Codual || impt->a->kind != DiagTerm::Owedge ||
            impt->a->a->kind != DiagTerm::Dual)
            throw std::invalid_argument("eval: no implication at the tensor's right");
        TermPtr sp = impt->a->a->a;
        TermPtr r2 = impt->a->b;
        if (!equal(r, r2))
            throw std::invalid_argument("eval: the two tensor components do not share the presheaf");
        std::vector<std::string> errs;
        Boundary br = check_rec(r, sig, errs);
        Boundary bsp = check_rec(sp, sig, errs);
        if (!errs.empty()) throw std::invalid_argument("eval: " + errs[0]);
        if (!equal(s->dist->x, br.cat) || !equal(s->dist->y, bsp.cat))
            throw std::invalid_argument("eval: eval(X,Y) does not match the redex boundaries");
        return sp;
    }
    }
    }
    throw std::invalid_argument("unknown move");
}

} // namespace

TermPtr apply_move(const TermPtr& t, const Move& m, const DiagSignature& sig) {
    TypeResult before = typecheck(t, sig);
    if (!before.ok)
        throw std::invalid_argument("apply_move: term does not typecheck: " +
                                    before.violations[0]);
    TermPtr target = subterm(t, m.path);
    TermPtr rewritten = rewrite(target, m, sig);
    TermPtr out = replace(t, m.path, 0, rewritten);
    TypeResult after = typecheck(out, sig);
    if (!after.ok)
        throw engine_error("apply_move: rewritten term does not typecheck: " +
                           after.violations[0]);
    if (!equal(before.boundary.cat, after.boundary.cat) ||
        before.boundary.blue != after.boundary.blue)
        throw engine_error("apply_move: boundary not preserved by " + to_string(m.kind));
    return out;
}

// ---- semantics ----

DiagSignature DiagModel::signature() const {
    DiagSignature sig;
    for (const auto& [n, p] : presheaves) sig.atoms[n] = p.base->name;
    for (const auto& [n, p] : copresheaves) sig.coatoms[n] = p.base->name;
    for (const auto& [n, d] : distributors) sig.dists[n] = {d.src->name, d.tgt->name};
    return sig;
}

CatPtr interpret_cat(const CatExprPtr& x, const DiagModel& model) {
    switch (x->kind) {
    case CatExpr::Name: {
        auto it = model.categories.find(x->name);
        if (it == model.categories.end())
            throw std::invalid_argument("unknown category '" + x->name + "'");
        return it->second;
    }
    case CatExpr::Op: return share(opposite(*interpret_cat(x->a, model)));
    case CatExpr::Prod:
        return share(product(*interpret_cat(x->a, model), *interpret_cat(x->b, model)));
    }
    throw std::invalid_argument("interpret_cat: bad expression");
}

Distributor interpret_dist(const DistExprPtr& d, const DiagModel& model, const SizeLimits& caps) {
    (void)caps;
    switch (d->kind) {
    case DistExpr::Name: {
        auto it = model.distributors.find(d->name);
        if (it == model.distributors.end())
            throw std::invalid_argument("unknown distributor '" + d->name + "'");
        return it->second;
    }
    case DistExpr::Dual: return dual_dist(interpret_dist(d->a, model, caps));
    case DistExpr::Tensor:
        return tensor_dist(interpret_dist(d->a, model, caps), interpret_dist(d->b, model, caps));
    case DistExpr::Eval: return eval_dist(interpret_cat(d->x, model), interpret_cat(d->y, model));
    case DistExpr::Coev: return coev_dist(interpret_cat(d->x, model), interpret_cat(d->y, model));
    case DistExpr::Id: return identity_dist(interpret_cat(d->x, model));
    }
    throw std::invalid_argument("interpret_dist: bad expression");
}

Presheaf interpret(const TermPtr& t, const DiagModel& model, const SizeLimits& caps) {
    switch (t->kind) {
    case DiagTerm::Atom: {
        auto it = model.presheaves.find(t->name);
        if (it == model.presheaves.end())
            throw std::invalid_argument("unknown presheaf '" + t->name + "'");
        return it->second;
    }
    case DiagTerm::AtomCo: {
        auto it = model.copresheaves.find(t->name);
        if (it == model.copresheaves.end())
            throw std::invalid_argument("unknown copresheaf '" + t->name + "'");
        return it->second;
    }
    case DiagTerm::Tensor:
        return psh::tensor(interpret(t->a, model, caps), interpret(t->b, model, caps));
    case DiagTerm::Push: {
        Presheaf v = interpret(t->a, model, caps);
        Distributor d = interpret_dist(t->dist, model, caps);
        if (v.variance == Variance::contra) return exists_along(d, v, caps).psh;
        return exists_q(d, v, caps).psh;
    }
    case DiagTerm::Dual:
    case DiagTerm::Codual: {
        Presheaf v = interpret(t->a, model, caps);
        return v.variance == Variance::contra ? dual_presheaf(v) : undual_presheaf(v);
    }
    case DiagTerm::Owedge:
        return action_owedge(interpret(t->a, model, caps), interpret(t->b, model, caps));
    }
    throw std::invalid_argument("interpret: malformed term");
}

// ---- soundness ----

namespace {

NatTrans identity_nat(const Presheaf& p) {
    NatTrans t;
    t.src = p;
    t.tgt = p;
    for (const auto& [o, v] : p.values) t.components[o] = SetMap::identity(v);
    return t;
}

SoundnessReport report_from_iso(const IsoReport& rep, const std::string& direction) {
    SoundnessReport out;
    out.natural = true;
    out.iso = rep.holds;
    out.direction = direction;
    if (!rep.holds && rep.failure) out.failure = rep.describe();
    return out;
}

} // namespace

SoundnessReport soundness_check(const TermPtr& t, const Move& m, const DiagModel& model,
                                const SizeLimits& caps) {
    DiagSignature sig = model.signature();
    TermPtr u = apply_move(t, m, sig);
    Presheaf before = interpret(subterm(t, m.path), model, caps);
    Presheaf after = interpret(subterm(u, m.path), model, caps);
    TermPtr redex = subterm(t, m.path);

    switch (m.kind) {
    case MoveKind::AnnulusInsert:
    case MoveKind::AnnulusRemove: {
        if (!same_presheaf(before, after))
            throw engine_error("annulus move changed the interpretation");
        Presheaf after2 = after;
        after2.base = before.base;
        IsoReport rep = check_iso(before, after2, identity_nat(before));
        return report_from_iso(rep, "iso");
    }
    case MoveKind::Distributivity: {
        // extract the pieces from whichever side has the owedge redex
        TermPtr lhs_term = m.backward ? subterm(u, m.path) : redex;
        TermPtr inner = lhs_term->a->a->a->a; // push(dn, s')
        DistExprPtr dn = inner->dist;
        TermPtr sp = inner->a;
        DistExprPtr mm = lhs_term->a->b->dist;
        TermPtr r = lhs_term->a->b->a;
        Distributor M = interpret_dist(mm, model, caps);
        Distributor N = dual_dist(interpret_dist(dn, model, caps));
        Presheaf R = interpret(r, model, caps);
        Presheaf S = undual_presheaf(interpret(sp, model, caps));
        IsoReport rep = law_forall_multimap(M, N, R, S, caps);
        NatTrans w = rep.witness;
        Presheaf lhs_i = m.backward ? after : before;
        Presheaf rhs_i = m.backward ? before : after;
        if (!same_presheaf(w.src, lhs_i) || !same_presheaf(w.tgt, rhs_i))
            throw engine_error("distributivity: interpretations do not match the law data");
        w.src = lhs_i;
        w.tgt = rhs_i;
        return report_from_iso(check_iso(lhs_i, rhs_i, w), m.backward ? "iso⁻¹" : "iso");
    }
    case MoveKind::Unit: {
        Distributor M = interpret_dist(m.dist, model, caps);
        Presheaf R = before;
        ExistsResult exR = exists_along(M, R, caps);
        ForallResult faEx = forall_along(M, exR.psh, caps);
        if (!same_presheaf(faEx.psh, after))
            throw engine_error("unit move: interpretation mismatch");
        NatTrans eta = transpose_down(M, identity_nat(exR.psh), R, exR, faEx);
        eta.src = before;
        eta.tgt = after;
        auto nat = validate(eta);
        SoundnessReport rep;
        rep.direction = "forward";
        rep.natural = nat.empty();
        if (!rep.natural) {
            rep.failure = nat.front();
            return rep;
        }
        bool iso = true;
        for (const auto& [o, c] : eta.components)
            if (!c.is_bijection()) iso = false;
        rep.iso = iso;
        return rep;
    }
    case MoveKind::Counit: {
        Distributor M = interpret_dist(redex->dist, model, caps);
        Presheaf S = after;
        ForallResult faS = forall_along(M, S, caps);
        ExistsResult exFa = exists_along(M, faS.psh, caps);
        if (!same_presheaf(exFa.psh, before))
            throw engine_error("counit move: interpretation mismatch");
        ExistsResult exb = exFa;
        exb.psh = before;
        NatTrans eps = transpose_up(M, identity_nat(faS.psh), S, exb, faS);
        auto nat = validate(eps);
        SoundnessReport rep;
        rep.direction = "forward";
        rep.natural = nat.empty();
        if (!rep.natural) {
            rep.failure = nat.front();
            return rep;
        }
        bool iso = true;
        for (const auto& [o, c] : eps.components)
            if (!c.is_bijection()) iso = false;
        rep.iso = iso;
        return rep;
    }
    case MoveKind::Coeval: {
        Presheaf R = interpret(m.arg, model, caps);
        Presheaf S = before;
        CatPtr a = R.base;
        CatPtr b = S.base;
        Distributor cv = coev_dist(a, b);
        Presheaf impv = implication(R, psh::tensor(R, S));
        ForallResult fa = forall_along(cv, impv, caps);
        if (!same_presheaf(fa.psh, after)) throw engine_error("coeval move: interpretation mismatch");
        NatTrans beta;
        beta.src = before;
        beta.tgt = after;
        for (const auto& bp : b->objects) {
            const EndResult& end = fa.per_object.at(bp);
            std::map<std::string, std::string> table;
            for (const auto& se : S.at(bp).elements) {
                Family fam;
                for (const auto& a0 : a->objects)
                    for (const auto& x : a->objects)
                        for (const auto& b0 : b->objects) {
                            std::map<std::string, std::string> tb;
                            for (const auto& h : a->hom(x, a0))
                                for (const auto& k : b->hom(b0, bp)) {
                                    std::map<std::string, std::string> ftab;
                                    for (const auto& re : R.at(a0).elements)
                                        ftab[re] = pair_label(R.action(h)(re),
                                                              S.action(k)(se));
                                    tb[pair_label(h, k)] = fun_label(ftab);
                                }
                            fam[pair_label(a0, pair_label(x, b0))] = std::move(tb);
                        }
                std::string fl = family_label(fam);
                if (!end.families.count(fl))
                    throw engine_error("coeval: canonical family not natural");
                table[se] = fl;
            }
            beta.components[bp] = SetMap(S.at(bp), fa.psh.at(bp), std::move(table));
        }
        auto nat = validate(beta);
        SoundnessReport rep;
        rep.direction = "forward";
        rep.natural = nat.empty();
        if (!rep.natural) {
            rep.failure = nat.front();
            return rep;
        }
        bool iso = true;
        for (const auto& [o, c] : beta.components)
            if (!c.is_bijection()) iso = false;
        rep.iso = iso;
        return rep;
    }
    case MoveKind::Eval: {
        TermPtr r = redex->a->a;
        Presheaf R = interpret(r, model, caps);
        Presheaf S = after;
        CatPtr a = R.base;
        CatPtr b = S.base;
        Distributor ev = eval_dist(a, b);
        Presheaf impv = implication(R, S);
        Presheaf dom = psh::tensor(R, impv);
        ExistsResult ex = exists_along(ev, dom, caps);
        if (!same_presheaf(ex.psh, before)) throw engine_error("eval move: interpretation mismatch");
        NatTrans alpha;
        alpha.src = before;
        alpha.tgt = after;
        for (const auto& bp : b->objects) {
            const CoendResult& co = ex.per_object.at(bp);
            std::map<std::string, std::string> table;
            for (const auto& x : a->objects)
                for (const auto& a0 : a->objects)
                    for (const auto& b0 : b->objects) {
                        FunSpace fs = fun_space(R.at(a0), S.at(b0));
                        std::string idx = pair_label(x, pair_label(a0, b0));
                        for (const auto& h : a->hom(a0, x))
                            for (const auto& k : b->hom(bp, b0))
                                for (const auto& re : R.at(x).elements)
                                    for (const auto& [fl, ftab] : fs.table) {
                                        const std::string& cls = co.cls(
                                            idx, pair_label(h, k), pair_label(re, fl));
                                        std::string img =
                                            S.action(k)(ftab.at(R.action(h)(re)));
                                        auto [it, fresh] = table.emplace(cls, img);
                                        if (!fresh && it->second != img)
                                            throw engine_error(
                                                "eval: collapse not well-defined");
                                    }
                    }
            alpha.components[bp] = SetMap(before.at(bp), S.at(bp), std::move(table));
        }
        auto nat = validate(alpha);
        SoundnessReport rep;
        rep.direction = "forward";
        rep.natural = nat.empty();
        if (!rep.natural) {
            rep.failure = nat.front();
            return rep;
        }
        bool iso = true;
        for (const auto& [o, c] : alpha.components)
            if (!c.is_bijection()) iso = false;
        rep.iso = iso;
        return rep;
    }
    }
    throw std::invalid_argument("soundness_check: unknown move");
}

// ---- rendering ----

namespace {

void render_rec(std::ostringstream& os, const TermPtr& t, const std::string& id, bool blue,
                std::string& edges) {
    std::string fill = blue ? "lightblue" : "mistyrose";
    switch (t->kind) {
    case DiagTerm::Atom:
    case DiagTerm::AtomCo:
        os << "  " << id << " [label=\"" << t->name << "\",shape=box,style=filled,fillcolor=\""
           << fill << "\"];\n";
        break;
    case DiagTerm::Tensor:
    case DiagTerm::Owedge: {
        std::string op = t->kind == DiagTerm::Tensor ? (blue ? "⊗" : "⊽") : "⊼";
        os << "  " << id << " [label=\"" << op << "\",shape=circle,style=filled,fillcolor=\""
           << fill << "\"];\n";
        bool left_blue = t->kind == DiagTerm::Owedge ? false : blue;
        bool right_blue = t->kind == DiagTerm::Owedge ? true : blue;
        render_rec(os, t->a, id + "_0", left_blue, edges);
        render_rec(os, t->b, id + "_1", right_blue, edges);
        edges += "  " + id + " -> " + id + "_0;\n";
        edges += "  " + id + " -> " + id + "_1;\n";
        break;
    }
    case DiagTerm::Push:
        os << "  " << id << " [label=\"push " << to_string(t->dist)
           << "\",shape=ellipse,style=filled,fillcolor=\"" << fill << "\"];\n";
        render_rec(os, t->a, id + "_0", blue, edges);
        edges += "  " + id + " -> " + id + "_0;\n";
        break;
    case DiagTerm::Dual:
    case DiagTerm::Codual: {
        // a functorial box: the inner region has the opposite colour
        os << "  subgraph cluster_" << id << " {\n"
           << "    label=\"" << (t->kind == DiagTerm::Dual ? "(-)*" : "*(-)") << "\";\n"
           << "    style=rounded;\n"
           << "    bgcolor=\"" << (blue ? "mistyrose" : "lightblue") << "\";\n";
        render_rec(os, t->a, id + "_0", !blue, edges);
        os << "  }\n";
        break;
    }
    }
}

} // namespace

std::string render(const TermPtr& t, const DiagSignature& sig) {
    TypeResult ty = typecheck(t, sig);
    std::ostringstream os;
    os << "digraph diagram {\n";
    os << "  graph [compound=true];\n";
    os << "  // boundary: " << to_string(ty.boundary.cat) << " ("
       << (ty.boundary.blue ? "blue" : "red") << ")\n";
    std::string edges;
    render_rec(os, t, "n", ty.boundary.blue, edges);
    os << edges;
    os << "}\n";
    return os.str();
}

} // namespace psh::diag
