#include "psh/finset.hpp"

#include <algorithm>
#include <stdexcept>

namespace psh {

FinSet::FinSet(std::string name_, std::vector<std::string> elems)
    : name(std::move(name_)), elements(std::move(elems)) {
    std::sort(elements.begin(), elements.end());
    auto dup = std::adjacent_find(elements.begin(), elements.end());
    if (dup != elements.end())
        throw std::invalid_argument("FinSet " + name + ": duplicate element '" + *dup + "'");
}

bool FinSet::contains(const std::string& e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
}

SetMap SetMap::identity(const FinSet& s) {
    std::map<std::string, std::string> t;
    for (const auto& e : s.elements) t[e] = e;
    return SetMap(s, s, std::move(t));
}

SetMap SetMap::constant(const FinSet& src, const FinSet& tgt, const std::string& value) {
    std::map<std::string, std::string> t;
    for (const auto& e : src.elements) t[e] = value;
    return SetMap(src, tgt, std::move(t));
}

const std::string& SetMap::operator()(const std::string& e) const {
    auto it = table.find(e);
    if (it == table.end())
        throw std::out_of_range("SetMap: no image for element '" + e + "'");
    return it->second;
}

bool SetMap::is_bijection() const {
    if (src.size() != tgt.size()) return false;
    std::vector<std::string> hit;
    hit.reserve(table.size());
    for (const auto& [_, v] : table) hit.push_back(v);
    std::sort(hit.begin(), hit.end());
    return hit == tgt.elements;
}

SetMap compose(const SetMap& g, const SetMap& f) {
    if (f.tgt != g.src)
        throw std::invalid_argument("SetMap compose: middle sets differ");
    std::map<std::string, std::string> t;
    for (const auto& [x, y] : f.table) t[x] = g(y);
    return SetMap(f.src, g.tgt, std::move(t));
}

std::vector<std::string> validate(const SetMap& m) {
    std::vector<std::string> out;
    for (const auto& e : m.src.elements)
        if (!m.table.count(e)) out.push_back("map not total: no image for '" + e + "'");
    for (const auto& [x, y] : m.table) {
        if (!m.src.contains(x)) out.push_back("map table keyed by non-element '" + x + "'");
        if (!m.tgt.contains(y)) out.push_back("image '" + y + "' of '" + x + "' not in target");
    }
    return out;
}

std::string pair_label(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

std::string triple_label(const std::string& a, const std::string& b, const std::string& c) {
    return "(" + a + "," + b + "," + c + ")";
}

std::string fun_label(const std::map<std::string, std::string>& table) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : table) {
        if (!first) s += ",";
        first = false;
        s += k + ":" + v;
    }
    return s + "}";
}

FinSet product_set(const FinSet& a, const FinSet& b) {
    std::vector<std::string> elems;
    elems.reserve(a.size() * b.size());
    for (const auto& x : a.elements)
        for (const auto& y : b.elements) elems.push_back(pair_label(x, y));
    return FinSet(pair_label(a.name, b.name), std::move(elems));
}

std::vector<std::map<std::string, std::string>> all_functions(const FinSet& src, const FinSet& tgt) {
    std::vector<std::map<std::string, std::string>> out;
    if (src.empty()) {
        out.push_back({});
        return out;
    }
    if (tgt.empty()) return out; // no map into the empty set from a nonempty one
    std::vector<std::size_t> odo(src.size(), 0);
    for (;;) {
        std::map<std::string, std::string> t;
        for (std::size_t i = 0; i < src.size(); ++i) t[src.elements[i]] = tgt.elements[odo[i]];
        out.push_back(std::move(t));
        std::size_t i = 0;
        while (i < odo.size()) {
            if (++odo[i] < tgt.size()) break;
            odo[i] = 0;
            ++i;
        }
        if (i == odo.size()) break;
    }
    return out;
}

} // namespace psh
