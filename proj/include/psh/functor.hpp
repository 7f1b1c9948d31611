#pragma once

#include <map>
#include <string>
#include <vector>

#include "psh/category.hpp"

namespace psh {

struct Functor {
    std::string name;
    CatPtr src;
    CatPtr tgt;
    std::map<std::string, std::string> on_objects;
    std::map<std::string, std::string> on_morphisms;

    const std::string& ob(const std::string& o) const;
    const std::string& mo(const std::string& m) const;
};

std::vector<std::string> validate(const Functor& f);

Functor identity_functor(CatPtr a);
Functor compose(const Functor& g, const Functor& f);

// A -> A×A
Functor diagonal_functor(CatPtr a);
// A -> 1
Functor bang_functor(CatPtr a);
// the object a named as a functor 1 -> A
Functor object_functor(CatPtr a, const std::string& obj);

} // namespace psh
