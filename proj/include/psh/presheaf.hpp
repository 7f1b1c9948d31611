#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psh/caps.hpp"
#include "psh/category.hpp"
#include "psh/finset.hpp"

namespace psh {

enum class Variance { contra, co };

// A finite-set-valued functor on a base category. With variance contra the
// action of f : a -> a' maps values(a') -> values(a); with co it maps
// values(a) -> values(a'). Covariant presheaves are the q-side predicates.
struct Presheaf {
    std::string name;
    CatPtr base;
    Variance variance = Variance::contra;
    std::map<std::string, FinSet> values;  // object -> set
    std::map<std::string, SetMap> actions; // morphism label -> map

    const FinSet& at(const std::string& obj) const;
    const SetMap& action(const std::string& mor) const;
};

std::vector<std::string> validate(const Presheaf& p);

// the constraint the action of morphism m must satisfy: src/tgt value sets
std::pair<std::string, std::string> action_profile(const Presheaf& p, const Mor& m);

struct NatTrans {
    Presheaf src;
    Presheaf tgt;
    std::map<std::string, SetMap> components; // object -> map
};

// naturality + componentwise totality; empty result means valid
std::vector<std::string> validate(const NatTrans& t);

struct IsoFailure {
    std::string object;
    std::string reason; // missed / collided element, element-level
};

struct IsoReport {
    bool holds = false;
    bool via_search = false; // found by the diagnostic fallback, not canonically
    NatTrans witness;
    std::optional<IsoFailure> failure;

    std::string describe() const;
};

// Checks that the canonical map realizes an isomorphism. A non-natural or
// ill-typed canonical map throws engine_error: that is an engine bug, not a
// law failure.
IsoReport check_iso(const Presheaf& lhs, const Presheaf& rhs, const NatTrans& canonical);

// Diagnostic fallback: bounded search for an arbitrary natural iso.
std::optional<NatTrans> search_natural_iso(const Presheaf& lhs, const Presheaf& rhs,
                                           const SizeLimits& caps = {});

// All natural transformations lhs -> rhs (componentwise enumeration + filter).
std::vector<NatTrans> enumerate_nattrans(const Presheaf& lhs, const Presheaf& rhs,
                                         const SizeLimits& caps = {});

bool same_presheaf(const Presheaf& a, const Presheaf& b); // data equality, names ignored

Presheaf unit_presheaf();                                            // 1 over the terminal category
Presheaf terminal_presheaf(CatPtr base, Variance v = Variance::contra); // all singletons
Presheaf representable(CatPtr base, const std::string& obj);         // hom(-, obj), contra
Presheaf corepresentable(CatPtr base, const std::string& obj);       // hom(obj, -), co

std::string to_string(const Presheaf& p);

} // namespace psh
