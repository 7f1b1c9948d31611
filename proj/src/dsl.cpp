#include "psh/dsl.hpp"

#include <cctype>

#include "psh/chirality.hpp"
#include "psh/equality.hpp"
#include "psh/hyperdoctrine.hpp"
#include "psh/monoidal.hpp"
#include "psh/quantifiers.hpp"

namespace psh::dsl {

namespace {

ExprPtr mk(Expr e) { return std::make_shared<Expr>(std::move(e)); }

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    void advance(char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else
            ++col;
        ++pos;
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            advance(text[pos]);
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw parse_error(std::string("expected '") + c + "'", line, col);
        advance(text[pos]);
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            advance(text[pos]);
        if (start == pos) throw parse_error("expected an identifier", line, col);
        return text.substr(start, pos - start);
    }
};

ExprPtr parse_expr(Lexer& lx);

std::string parse_name_arg(Lexer& lx) { return lx.ident(); }

ExprPtr parse_call(Lexer& lx, const std::string& head) {
    auto name_expr = [&](Expr::Kind k) { // head(NAME, e)
        lx.expect('(');
        std::string n = parse_name_arg(lx);
        lx.expect(',');
        ExprPtr e = parse_expr(lx);
        lx.expect(')');
        return mk({k, n, e, nullptr});
    };
    auto two_exprs = [&](Expr::Kind k) { // head(e, e)
        lx.expect('(');
        ExprPtr e1 = parse_expr(lx);
        lx.expect(',');
        ExprPtr e2 = parse_expr(lx);
        lx.expect(')');
        return mk({k, "", e1, e2});
    };
    auto name_only = [&](Expr::Kind k) { // head(NAME)
        lx.expect('(');
        std::string n = parse_name_arg(lx);
        lx.expect(')');
        return mk({k, n, nullptr, nullptr});
    };
    auto name_two_exprs = [&](Expr::Kind k) { // head(NAME, e, e)
        lx.expect('(');
        std::string n = parse_name_arg(lx);
        lx.expect(',');
        ExprPtr e1 = parse_expr(lx);
        lx.expect(',');
        ExprPtr e2 = parse_expr(lx);
        lx.expect(')');
        return mk({k, n, e1, e2});
    };

    if (head == "exists") return name_expr(Expr::Exists);
    if (head == "forall") return name_expr(Expr::Forall);
    if (head == "tensor") return two_exprs(Expr::Tensor);
    if (head == "imp") return two_exprs(Expr::Imp);
    if (head == "dual") {
        lx.expect('(');
        ExprPtr e = parse_expr(lx);
        lx.expect(')');
        return mk({Expr::Dual, "", e, nullptr});
    }
    if (head == "graph") return name_only(Expr::Graph);
    if (head == "id_rel") return name_only(Expr::IdRel);
    if (head == "id_lawvere") return name_only(Expr::IdLawvere);
    if (head == "sigma") return name_expr(Expr::Sigma);
    if (head == "pi") return name_expr(Expr::Pi);
    if (head == "subst") return name_expr(Expr::Subst);
    if (head == "fiber_and") return name_two_exprs(Expr::FiberAnd);
    if (head == "fiber_top") return name_only(Expr::FiberTop);
    if (head == "fiber_imp") return name_two_exprs(Expr::FiberImp);
    return nullptr;
}

ExprPtr parse_expr(Lexer& lx) {
    std::string head = lx.ident();
    if (lx.peek() == '(') {
        ExprPtr call = parse_call(lx, head);
        if (!call) throw parse_error("unknown operation '" + head + "'", lx.line, lx.col);
        return call;
    }
    return mk({Expr::Load, head, nullptr, nullptr});
}

} // namespace

ExprPtr parse(const std::string& text) {
    Lexer lx(text);
    ExprPtr e = parse_expr(lx);
    if (lx.peek() != '\0') throw parse_error("trailing input after expression", lx.line, lx.col);
    return e;
}

std::string print(const ExprPtr& e) {
    switch (e->kind) {
    case Expr::Load: return e->name;
    case Expr::Exists: return "exists(" + e->name + ", " + print(e->a) + ")";
    case Expr::Forall: return "forall(" + e->name + ", " + print(e->a) + ")";
    case Expr::Tensor: return "tensor(" + print(e->a) + ", " + print(e->b) + ")";
    case Expr::Imp: return "imp(" + print(e->a) + ", " + print(e->b) + ")";
    case Expr::Dual: return "dual(" + print(e->a) + ")";
    case Expr::Graph: return "graph(" + e->name + ")";
    case Expr::IdRel: return "id_rel(" + e->name + ")";
    case Expr::IdLawvere: return "id_lawvere(" + e->name + ")";
    case Expr::Sigma: return "sigma(" + e->name + ", " + print(e->a) + ")";
    case Expr::Pi: return "pi(" + e->name + ", " + print(e->a) + ")";
    case Expr::Subst: return "subst(" + e->name + ", " + print(e->a) + ")";
    case Expr::FiberAnd:
        return "fiber_and(" + e->name + ", " + print(e->a) + ", " + print(e->b) + ")";
    case Expr::FiberTop: return "fiber_top(" + e->name + ")";
    case Expr::FiberImp:
        return "fiber_imp(" + e->name + ", " + print(e->a) + ", " + print(e->b) + ")";
    }
    return "?";
}

bool equal(const ExprPtr& x, const ExprPtr& y) {
    if (x->kind != y->kind || x->name != y->name) return false;
    if (!!x->a != !!y->a || !!x->b != !!y->b) return false;
    if (x->a && !equal(x->a, y->a)) return false;
    if (x->b && !equal(x->b, y->b)) return false;
    return true;
}

Presheaf eval(const ExprPtr& e, const Workspace& ws, const SizeLimits& caps) {
    switch (e->kind) {
    case Expr::Load: return ws.presheaf(e->name);
    case Expr::Exists: {
        Presheaf v = eval(e->a, ws, caps);
        const Distributor& m = ws.distributor(e->name);
        return v.variance == Variance::contra ? exists_along(m, v, caps).psh
                                              : exists_q(m, v, caps).psh;
    }
    case Expr::Forall: {
        Presheaf v = eval(e->a, ws, caps);
        const Distributor& m = ws.distributor(e->name);
        return v.variance == Variance::contra ? forall_along(m, v, caps).psh
                                              : forall_q(m, v, caps).psh;
    }
    case Expr::Tensor: return tensor(eval(e->a, ws, caps), eval(e->b, ws, caps));
    case Expr::Imp: return implication(eval(e->a, ws, caps), eval(e->b, ws, caps));
    case Expr::Dual: {
        Presheaf v = eval(e->a, ws, caps);
        return v.variance == Variance::contra ? dual_presheaf(v) : undual_presheaf(v);
    }
    case Expr::Graph: return graph(ws.distributor(e->name), caps).as_presheaf;
    case Expr::IdRel: return id_rel(ws.category(e->name), caps);
    case Expr::IdLawvere: return id_lawvere(ws.category(e->name), caps).psh;
    case Expr::Sigma: return sigma(ws.functor(e->name), eval(e->a, ws, caps), caps).psh;
    case Expr::Pi: return pi(ws.functor(e->name), eval(e->a, ws, caps), caps).psh;
    case Expr::Subst: return subst(ws.functor(e->name), eval(e->a, ws, caps));
    case Expr::FiberAnd:
        return fiber_and(ws.category(e->name), eval(e->a, ws, caps), eval(e->b, ws, caps), caps);
    case Expr::FiberTop: return fiber_top(ws.category(e->name), caps);
    case Expr::FiberImp:
        return fiber_imp(ws.category(e->name), eval(e->a, ws, caps), eval(e->b, ws, caps), caps);
    }
    throw std::runtime_error("eval: malformed expression");
}

} // namespace psh::dsl
