#pragma once

#include "psh/chirality.hpp"
#include "psh/quantifiers.hpp"

namespace psh {

// function space R -> S as a labelled finite set, with the decode table
struct FunSpace {
    FinSet set;
    std::map<std::string, std::map<std::string, std::string>> table; // label -> function
};
FunSpace fun_space(const FinSet& dom, const FinSet& cod);

// pointwise tensor; both arguments must share a variance. The result lives on
// the product base (⊗ on the p side, ⊽ on the q side).
Presheaf tensor(const Presheaf& r, const Presheaf& s);

// R ⊸ S on product(opposite(A), B), pointwise function space (contra inputs)
Presheaf implication(const Presheaf& r, const Presheaf& s);

// the action ⊼ : coPSH × PSH -> coPSH, covariant on product(base(r), base(t));
// value (a,c) = Fun(r(a), t(c))
CoPresheaf action_owedge(const CoPresheaf& t, const Presheaf& r);

// (c): ∃_{M⊗N}(R⊗S) ≅ ∃_M R ⊗ ∃_N S, for M : A⇸C, N : B⇸D, R on A, S on B in p
IsoReport law_exists_tensor(const Distributor& m, const Distributor& n, const Presheaf& r,
                            const Presheaf& s, const SizeLimits& caps = {});

// (d): ∀_M R ⊽ ∀_N S ≅ ∀_{M⊽N}(R⊽S), for M : C⇸A, N : D⇸B, R, S covariant in q
IsoReport law_d(const Distributor& m, const Distributor& n, const CoPresheaf& r,
                const CoPresheaf& s, const SizeLimits& caps = {});

// (∃_M R) ⊸ (∀_N S) ≅ ∀_{M⊸N}(R⊸S), for M : A⇸C, N : D⇸B, R on A, S on B in p
IsoReport law_forall_multimap(const Distributor& m, const Distributor& n, const Presheaf& r,
                              const Presheaf& s, const SizeLimits& caps = {});

// the action reading of (d): the forall-vs-multimap statement with both sides
// assembled through the chiral decomposition (dualization and ⊼) instead of
// the pointwise function-space formulas; checked data-equal to the pointwise
// route before the canonical map runs
IsoReport law_d_action(const Distributor& m, const Distributor& n, const Presheaf& r,
                       const Presheaf& s, const SizeLimits& caps = {});

// (e): ∀_M R ⊗ ∀_N S -> ∀_{M⊗N}(R⊗S), canonical and not invertible in general;
// M : C⇸A, N : D⇸B, R on A, S on B in p
IsoReport law_e(const Distributor& m, const Distributor& n, const Presheaf& r, const Presheaf& s,
                const SizeLimits& caps = {});

// (f): ∃_{M⊽N}(R⊽S) -> ∃_M R ⊽ ∃_N S in q; the concrete witness runs against
// the reversed fiber order, as a copresheaf map rhs -> lhs
IsoReport law_f(const Distributor& m, const Distributor& n, const CoPresheaf& r,
                const CoPresheaf& s, const SizeLimits& caps = {});

// monoid transported into Dist (carrier with multiplication and unit 1-cells)
struct MonoidInDist {
    CatPtr carrier;
    Distributor mult; // carrier×carrier ⇸ carrier
    Distributor unit; // 1 ⇸ carrier
};

// fiberwise monoidal closed structure over A induced by the diagonal comonoid
Presheaf fiber_and(CatPtr a, const Presheaf& r, const Presheaf& s, const SizeLimits& caps = {});
Presheaf fiber_top(CatPtr a, const SizeLimits& caps = {});
Presheaf fiber_imp(CatPtr a, const Presheaf& r, const Presheaf& s, const SizeLimits& caps = {});

// the ordinary ccc structure of presheaves over A, computed independently
Presheaf pointwise_product(const Presheaf& r, const Presheaf& s);
Presheaf pointwise_exponential(const Presheaf& r, const Presheaf& s, const SizeLimits& caps = {});

// comparison maps realizing "isomorphic to the usual ccc structure"
IsoReport fiber_and_vs_pointwise(CatPtr a, const Presheaf& r, const Presheaf& s,
                                 const SizeLimits& caps = {});
IsoReport fiber_top_vs_pointwise(CatPtr a, const SizeLimits& caps = {});
IsoReport fiber_imp_vs_exponential(CatPtr a, const Presheaf& r, const Presheaf& s,
                                   const SizeLimits& caps = {});

// symmetry/unit/associativity canonical isos of ⊗ (for the property suite)
IsoReport tensor_symmetry(const Presheaf& r, const Presheaf& s);

} // namespace psh
