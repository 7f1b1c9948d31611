#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psh/caps.hpp"
#include "psh/category.hpp"
#include "psh/finset.hpp"
#include "psh/functor.hpp"

namespace psh {

// A distributor M : A ⇸ B, i.e. a functor B^op × A -> Set given by tables.
// values are keyed (b, a) with b in tgt and a in src.
struct Distributor {
    std::string name;
    CatPtr src; // A
    CatPtr tgt; // B
    std::map<std::pair<std::string, std::string>, FinSet> values;
    // left_action[(g,a)] : values(cod g, a) -> values(dom g, a), for g in tgt
    std::map<std::pair<std::string, std::string>, SetMap> left_action;
    // right_action[(b,f)] : values(b, dom f) -> values(b, cod f), for f in src
    std::map<std::pair<std::string, std::string>, SetMap> right_action;

    const FinSet& at(const std::string& b, const std::string& a) const;
    const SetMap& left(const std::string& g, const std::string& a) const;
    const SetMap& right(const std::string& b, const std::string& f) const;
};

std::vector<std::string> validate(const Distributor& m);

bool same_distributor(const Distributor& a, const Distributor& b);

// hom distributor of A, the identity 1-cell: values(b,a) = hom_A(b,a)
Distributor identity_dist(CatPtr a);

// M⊗N : A×B ⇸ C×D with componentwise values and actions
Distributor tensor_dist(const Distributor& m, const Distributor& n);

// the graph currying  curry(M) : 1 ⇸ A^op × B  with values((a,b),pt) = M(b,a)
Distributor curry_dist(const Distributor& m);

// curry over the first factor of a product source:
// M : X×Y ⇸ Z  becomes  Y ⇸ X^op × Z  with values((x,z),y) = M(z,(x,y))
Distributor curry_first(const Distributor& m, CatPtr x, CatPtr y);

// left evaluation  eval : A × (A^op × B) ⇸ B,  values(b',(x,(a,b))) = hom_A(a,x) × hom_B(b',b)
Distributor eval_dist(CatPtr a, CatPtr b);

// right currying of eval:  dni : A ⇸ (A × B^op) × B,  values(((a',b''),b),x) = hom_A(a',x) × hom_B(b,b'')
Distributor dni_dist(CatPtr a, CatPtr b);

// coevaluation-shaped  coev : B ⇸ A^op × (A × B),  values((a,(x,b)),b') = hom_A(x,a) × hom_B(b,b')
Distributor coev_dist(CatPtr a, CatPtr b);

// A map between parallel distributors, componentwise.
struct DistTrans {
    Distributor src;
    Distributor tgt;
    std::map<std::pair<std::string, std::string>, SetMap> components;
};

std::vector<std::string> validate(const DistTrans& t);

struct DistIsoReport {
    bool holds = false;
    std::string failure;
};

DistIsoReport check_dist_iso(const Distributor& lhs, const Distributor& rhs,
                             const DistTrans& canonical);

// Composite N∘M via the coend formula, with the class decode kept for
// canonical-map construction: inject[(c,a)] maps (b, n, m) to its class.
struct ComposedDist {
    Distributor dist;
    std::map<std::pair<std::string, std::string>,
             std::map<std::array<std::string, 3>, std::string>>
        inject;
};

ComposedDist compose_dist(const Distributor& n, const Distributor& m,
                          const SizeLimits& caps = {});

std::string to_string(const Distributor& m);

} // namespace psh
