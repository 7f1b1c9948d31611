#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "psh/caps.hpp"
#include "psh/distributor.hpp"
#include "psh/presheaf.hpp"

namespace psh {

// ---- generic coend: quotient of a disjoint union by a generated relation ----

struct CoendPiece {
    std::string index;
    FinSet xs;
    FinSet ys;
};

// For x in piece[from].xs and y in piece[to].ys this identifies
//   (to, x_map(x), y)  ~  (from, x, y_map(y)).
struct CoendRelation {
    std::string from;
    std::string to;
    SetMap x_map; // xs[from] -> xs[to]
    SetMap y_map; // ys[to]   -> ys[from]
};

struct CoendResult {
    FinSet value; // classes, labelled by their lexicographically least member
    std::map<std::array<std::string, 3>, std::string> inject; // (index,x,y) -> class
    std::vector<std::vector<std::array<std::string, 3>>> classes;

    const std::string& cls(const std::string& index, const std::string& x,
                           const std::string& y) const;
};

CoendResult coend(const std::vector<CoendPiece>& pieces,
                  const std::vector<CoendRelation>& relations, const SizeLimits& caps = {});

// ---- generic end: families filtered by naturality constraints ----

struct EndIndex {
    std::string index;
    FinSet dom;
    FinSet cod;
};

// Requires phi_dst(dom_map(x)) = cod_map(phi_src(x)) for all x in dom[src].
struct EndConstraint {
    std::string src;
    std::string dst;
    SetMap dom_map; // dom[src] -> dom[dst]
    SetMap cod_map; // cod[src] -> cod[dst]
};

using Family = std::map<std::string, std::map<std::string, std::string>>; // index -> table

std::string family_label(const Family& fam);

struct EndResult {
    FinSet value; // family labels
    std::map<std::string, Family> families;

    const Family& family(const std::string& label) const;
};

EndResult end_families(const std::vector<EndIndex>& indices,
                       const std::vector<EndConstraint>& constraints,
                       const SizeLimits& caps = {});

// ---- the bifibrational quantifiers of p : PSH -> Dist ----

struct ExistsResult {
    Presheaf psh; // contravariant, on M.tgt
    std::map<std::string, CoendResult> per_object;
};

// ∃_M R for M : A ⇸ B and R a contravariant presheaf on A
ExistsResult exists_along(const Distributor& m, const Presheaf& r, const SizeLimits& caps = {});

struct ForallResult {
    Presheaf psh; // contravariant, on M.src
    std::map<std::string, EndResult> per_object;
};

// ∀_M S for M : A ⇸ B and S a contravariant presheaf on B
ForallResult forall_along(const Distributor& m, const Presheaf& s, const SizeLimits& caps = {});

// canonical co-Yoneda map ∃_{id_A} R -> R
NatTrans coyoneda_map(const ExistsResult& ex, const Presheaf& r);

// canonical Yoneda unit S -> ∀_{id_A} S
NatTrans yoneda_unit(const Presheaf& s, const ForallResult& fa);

// fiber functoriality: a NatTrans R -> R' induces ∃_M R -> ∃_M R'
NatTrans exists_fiber_map(const Distributor& m, const NatTrans& t, const ExistsResult& exR,
                          const ExistsResult& exR2);

struct AdjunctionReport {
    bool holds = false;
    std::size_t hom_up = 0;   // |Nat(∃_M R, S)|
    std::size_t hom_down = 0; // |Nat(R, ∀_M S)|
    std::string failure;
};

// verifies the transposition maps of ∃_M ⊣ ∀_M are mutually inverse bijections
AdjunctionReport adjunction_check(const Distributor& m, const Presheaf& r, const Presheaf& s,
                                  const SizeLimits& caps = {});

// transposes, exposed for tests
NatTrans transpose_up(const Distributor& m, const NatTrans& beta, const Presheaf& s,
                      const ExistsResult& exR, const ForallResult& faS);
NatTrans transpose_down(const Distributor& m, const NatTrans& alpha, const Presheaf& r,
                        const ExistsResult& exR, const ForallResult& faS);

// canonical map ∃_N ∃_M R -> ∃_{N∘M} R checked bijective
IsoReport compose_quantifier_iso(const Distributor& n, const Distributor& m, const Presheaf& r,
                                 const SizeLimits& caps = {});

} // namespace psh
