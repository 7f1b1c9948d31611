#pragma once

#include <memory>

#include "psh/io.hpp"

namespace psh::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Surface syntax for the engine's operations. A bare identifier loads a named
// presheaf from the workspace; everything else is a constructor call.
struct Expr {
    enum Kind {
        Load,      // name
        Exists,    // exists(M, e)
        Forall,    // forall(M, e)
        Tensor,    // tensor(e, e)
        Imp,       // imp(e, e)
        Dual,      // dual(e)
        Graph,     // graph(M)
        IdRel,     // id_rel(A)
        IdLawvere, // id_lawvere(A)
        Sigma,     // sigma(F, e)
        Pi,        // pi(F, e)
        Subst,     // subst(F, e)
        FiberAnd,  // fiber_and(A, e, e)
        FiberTop,  // fiber_top(A)
        FiberImp   // fiber_imp(A, e, e)
    } kind;
    std::string name; // Load, or the named M/F/A argument
    ExprPtr a, b;
};

ExprPtr parse(const std::string& text);
std::string print(const ExprPtr& e);
bool equal(const ExprPtr& x, const ExprPtr& y);

// evaluation delegates to the engine; throws on unresolved names, variance
// mismatches, or exceeded caps
Presheaf eval(const ExprPtr& e, const Workspace& ws, const SizeLimits& caps = {});

} // namespace psh::dsl
