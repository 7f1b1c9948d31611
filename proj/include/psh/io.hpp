#pragma once

#include <map>
#include <string>
#include <vector>

#include "psh/distributor.hpp"
#include "psh/functor.hpp"
#include "psh/matll.hpp"
#include "psh/presheaf.hpp"

namespace psh {

// matrix file contents before a chain is chosen
struct LabelMatrix {
    std::string name;
    FinSet src;
    FinSet tgt;
    std::map<std::pair<std::string, std::string>, std::string> entries;
};

mv::MVMatrix resolve(const LabelMatrix& m, const mv::StarAutPoset& v);

struct Workspace {
    std::map<std::string, CatPtr> categories;
    std::map<std::string, Functor> functors;
    std::map<std::string, Presheaf> presheaves; // both variances
    std::map<std::string, Distributor> distributors;
    std::map<std::string, LabelMatrix> matrices;

    CatPtr category(const std::string& name) const;
    const Functor& functor(const std::string& name) const;
    const Presheaf& presheaf(const std::string& name) const;
    const Distributor& distributor(const std::string& name) const;
};

// Parses one file worth of JSON (an entity object or an array of them) into
// the workspace. Invalid entities are rejected with a listing of violations.
void load_entity_json(const std::string& text, Workspace& ws);

// Loads every *.json file of a directory; categories resolve independent of
// file order.
Workspace load_workspace(const std::string& dir);

// Loads an explicit list of files into one workspace.
Workspace load_files(const std::vector<std::string>& paths);

std::string validate_file(const std::string& text); // empty string iff clean

} // namespace psh
