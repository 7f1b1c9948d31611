#pragma once

#include "psh/quantifiers.hpp"

namespace psh {

// Covariant presheaves are the q-side predicates; they share the Presheaf
// representation with variance co.
using CoPresheaf = Presheaf;

// contravariant presheaf on A  ->  covariant presheaf on A^op (same tables)
CoPresheaf dual_presheaf(const Presheaf& r);
// covariant presheaf on A  ->  contravariant presheaf on A^op (inverse)
Presheaf undual_presheaf(const CoPresheaf& r);

// M : A ⇸ B  ->  M* : B^op ⇸ A^op with transposed tables
Distributor dual_dist(const Distributor& m);

// q-side pushforward: for M : A ⇸ B and covariant R on A, ∃_M R is the
// covariant presheaf  b ↦ ∫_{a} M(b,a) -> R(a).
struct ExistsQResult {
    CoPresheaf psh; // covariant, on M.tgt
    std::map<std::string, EndResult> per_object;
};
ExistsQResult exists_q(const Distributor& m, const CoPresheaf& r, const SizeLimits& caps = {});

// q-side pullback: for M : A ⇸ B and covariant S on B, ∀_M S is the
// covariant presheaf  a ↦ ∫^{b} M(b,a) × S(b).
struct ForallQResult {
    CoPresheaf psh; // covariant, on M.src
    std::map<std::string, CoendResult> per_object;
};
ForallQResult forall_q(const Distributor& m, const CoPresheaf& s, const SizeLimits& caps = {});

// law (a): ∀_M S ≅ *(∃_{M*} S*) for S in p over M.tgt
IsoReport law_a(const Distributor& m, const Presheaf& s, const SizeLimits& caps = {});

// law (b): ∀_M S ≅ (∃_{*M} *S)* for S in q over M.tgt
IsoReport law_b(const Distributor& m, const CoPresheaf& s, const SizeLimits& caps = {});

} // namespace psh
