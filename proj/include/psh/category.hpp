#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "psh/finset.hpp"

namespace psh {

struct Mor {
    std::string name;
    std::string src;
    std::string tgt;
    bool operator==(const Mor& o) const = default;
};

// A finite category presented by a full composition table. Everything is
// exhaustively checkable at this scale.
struct Category {
    std::string name;
    std::vector<std::string> objects;
    std::vector<Mor> morphisms; // includes identities
    std::map<std::pair<std::string, std::string>, std::string> composites; // (g,f) -> g∘f
    std::map<std::string, std::string> identities; // object -> identity label

    bool has_object(const std::string& o) const;
    bool has_morphism(const std::string& m) const;
    const Mor& mor(const std::string& label) const;
    const std::string& id_of(const std::string& obj) const;

    // g∘f; throws when the pair is not composable
    const std::string& compose(const std::string& g, const std::string& f) const;

    // labels of morphisms a -> b, sorted
    std::vector<std::string> hom(const std::string& a, const std::string& b) const;
    FinSet hom_set(const std::string& a, const std::string& b) const;

    std::size_t size() const { return morphisms.size(); }
};

// Structural equality; names are ignored so that independently built copies
// of the same category compare equal.
bool equal_structure(const Category& a, const Category& b);

std::vector<std::string> validate(const Category& c);

Category opposite(const Category& c);
Category product(const Category& a, const Category& b);
Category terminal_category();

// Convenience builder: identities are synthesized as "id_<obj>" and the
// composition table is completed with identity rows.
Category make_category(std::string name, std::vector<std::string> objects,
                       std::vector<Mor> non_identity,
                       std::map<std::pair<std::string, std::string>, std::string> composites);

using CatPtr = std::shared_ptr<const Category>;
CatPtr share(Category c);

} // namespace psh
