#pragma once

#include "psh/monoidal.hpp"
#include "psh/quantifiers.hpp"

namespace psh {

// the two embeddings of a functor into Dist
struct Embedding {
    Functor of;
    Distributor plus;  // A ⇸ B, (b,a) -> hom_B(b, Fa)
    Distributor minus; // B ⇸ A, (a,b) -> hom_B(Fa, b)
};

Distributor emb_plus(const Functor& f);
Distributor emb_minus(const Functor& f);
Embedding embedding(const Functor& f);

// emb±(G∘F) ≅ emb±F ∘ emb±G (contravariant case) / emb±G ∘ emb±F, canonical collapse
DistIsoReport emb_plus_compose_iso(const Functor& f, const Functor& g,
                                   const SizeLimits& caps = {});
DistIsoReport emb_minus_compose_iso(const Functor& f, const Functor& g,
                                    const SizeLimits& caps = {});

// the presheaf hyperdoctrine's own operations, by the literal formulas
struct SigmaResult {
    Presheaf psh;
    std::map<std::string, CoendResult> per_object;
};
SigmaResult sigma(const Functor& f, const Presheaf& r, const SizeLimits& caps = {});

struct PiResult {
    Presheaf psh;
    std::map<std::string, EndResult> per_object;
};
PiResult pi(const Functor& f, const Presheaf& r, const SizeLimits& caps = {});

Presheaf subst(const Functor& f, const Presheaf& s);

struct ReconstructionReport {
    IsoReport sigma_vs_exists;  // Σ_F R ≅ ∃_{emb+F} R
    IsoReport subst_vs_forall;  // F* S ≅ ∀_{emb+F} S
    IsoReport exists_vs_subst;  // ∃_{emb−F} S ≅ F* S
    IsoReport pi_vs_forall;     // Π_F R ≅ ∀_{emb−F} R
    bool all() const {
        return sigma_vs_exists.holds && subst_vs_forall.holds && exists_vs_subst.holds &&
               pi_vs_forall.holds;
    }
};

ReconstructionReport reconstruction_check(const Functor& f, const Presheaf& r, const Presheaf& s,
                                          const SizeLimits& caps = {});

// every category is a comonoid in Cat; emb− transports it to a monoid in Dist
MonoidInDist comonoid(CatPtr a);

struct ComonoidLawReport {
    DistIsoReport left_unit;  // mult∘(unit⊗id) ≅ emb−(a ↦ (pt,a))
    DistIsoReport right_unit; // mult∘(id⊗unit) ≅ emb−(a ↦ (a,pt))
    DistIsoReport assoc;      // mult∘(mult⊗id) ≅ mult∘(id⊗mult) across the associator
    bool all() const { return left_unit.holds && right_unit.holds && assoc.holds; }
};

ComonoidLawReport comonoid_laws(CatPtr a, const SizeLimits& caps = {});

// push_{Δ̂−}(R⊗S) and pull_{Δ̂+}(R⊗S) are both the pointwise product
std::pair<IsoReport, IsoReport> comonoid_pushpull_iso(CatPtr a, const Presheaf& r,
                                                      const Presheaf& s,
                                                      const SizeLimits& caps = {});

} // namespace psh
