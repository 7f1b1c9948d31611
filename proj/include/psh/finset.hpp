#pragma once

#include <map>
#include <string>
#include <vector>

namespace psh {

// A finite set with distinct element labels kept in lexicographic order,
// so every derived construction prints deterministically.
struct FinSet {
    std::string name;
    std::vector<std::string> elements;

    FinSet() = default;
    FinSet(std::string name_, std::vector<std::string> elems);

    bool contains(const std::string& e) const;
    std::size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }

    bool operator==(const FinSet& o) const { return elements == o.elements; }
    bool operator!=(const FinSet& o) const { return !(*this == o); }
};

// A total function between finite sets, given by an explicit table.
struct SetMap {
    FinSet src;
    FinSet tgt;
    std::map<std::string, std::string> table;

    SetMap() = default;
    SetMap(FinSet src_, FinSet tgt_, std::map<std::string, std::string> table_)
        : src(std::move(src_)), tgt(std::move(tgt_)), table(std::move(table_)) {}

    static SetMap identity(const FinSet& s);
    static SetMap constant(const FinSet& src, const FinSet& tgt, const std::string& value);

    const std::string& operator()(const std::string& e) const;
    bool is_bijection() const;

    bool operator==(const SetMap& o) const { return src == o.src && tgt == o.tgt && table == o.table; }
};

// g after f
SetMap compose(const SetMap& g, const SetMap& f);

std::vector<std::string> validate(const SetMap& m);

// Canonical labels for derived elements. Never parsed back; used only to keep
// output deterministic and diffable.
std::string pair_label(const std::string& a, const std::string& b);
std::string triple_label(const std::string& a, const std::string& b, const std::string& c);
std::string fun_label(const std::map<std::string, std::string>& table);

// Cartesian product with pair labels, plus the projections element-wise.
FinSet product_set(const FinSet& a, const FinSet& b);

// All functions src -> tgt, in lexicographic table order.
std::vector<std::map<std::string, std::string>> all_functions(const FinSet& src, const FinSet& tgt);

} // namespace psh
