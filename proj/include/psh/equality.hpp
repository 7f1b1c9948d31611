#pragma once

#include "psh/monoidal.hpp"
#include "psh/quantifiers.hpp"

namespace psh {

// ⌈M⌉, the presheaf over A^op × B obtained by pushing the unit along curry(M),
// together with the recorded bijection to M's raw value tables.
struct GraphPredicate {
    Distributor of;
    Presheaf as_presheaf; // over product(opposite(A), B)
    // raw_to_graph[(a,b)] : M(b,a) -> as_presheaf(a,b)
    std::map<std::pair<std::string, std::string>, SetMap> raw_to_graph;
};

GraphPredicate graph(const Distributor& m, const SizeLimits& caps = {});

// the hom presheaf of A over product(opposite(A), A); value (a1,a2) = hom(a2,a1),
// the orientation induced by the graph of the identity distributor
Presheaf hom_presheaf(CatPtr a);

// Id_A = ⌈id_A⌉ as a presheaf, plus the canonical iso against hom_presheaf
Presheaf id_rel(CatPtr a, const SizeLimits& caps = {});
IsoReport id_rel_vs_hom(CatPtr a, const SizeLimits& caps = {});

// Lawvere's identity predicate (a1,a2) ↦ ∫^a hom(a1,a) × hom(a2,a) over
// product(A, A), by the literal colimit formula
struct LawvereIdResult {
    Presheaf psh;
    std::map<std::string, CoendResult> per_object; // keyed by the pair object
};
LawvereIdResult id_lawvere(CatPtr a, const SizeLimits& caps = {});

// the same predicate computed as Σ_Δ ⊤; both routes must agree
IsoReport id_lawvere_vs_sigma_route(CatPtr a, const SizeLimits& caps = {});

// Theorem 3: push_M R ≅ push_eval(R ⊗ ⌈M⌉) and pull_M S ≅ pull_dni(⌈M⌉ ⊸ S)
IsoReport thm3_push(const Distributor& m, const Presheaf& r, const SizeLimits& caps = {});
IsoReport thm3_pull(const Distributor& m, const Presheaf& s, const SizeLimits& caps = {});

// S(a) ≅ ∫_{a'} hom(a',a) -> S(a'), the Yoneda lemma at (S, a)
IsoReport yoneda_check(const Presheaf& s, const std::string& a, const SizeLimits& caps = {});

} // namespace psh
