#include "psh/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace psh {

using nlohmann::json;

mv::MVMatrix resolve(const LabelMatrix& m, const mv::StarAutPoset& v) {
    mv::MVMatrix out;
    out.name = m.name;
    out.src = m.src;
    out.tgt = m.tgt;
    for (const auto& [key, label] : m.entries) out.entries[key] = v.index_of(label);
    return out;
}

CatPtr Workspace::category(const std::string& name) const {
    auto it = categories.find(name);
    if (it == categories.end()) throw std::runtime_error("unknown category '" + name + "'");
    return it->second;
}

const Functor& Workspace::functor(const std::string& name) const {
    auto it = functors.find(name);
    if (it == functors.end()) throw std::runtime_error("unknown functor '" + name + "'");
    return it->second;
}

const Presheaf& Workspace::presheaf(const std::string& name) const {
    auto it = presheaves.find(name);
    if (it == presheaves.end()) throw std::runtime_error("unknown presheaf '" + name + "'");
    return it->second;
}

const Distributor& Workspace::distributor(const std::string& name) const {
    auto it = distributors.find(name);
    if (it == distributors.end()) throw std::runtime_error("unknown distributor '" + name + "'");
    return it->second;
}

namespace {

[[noreturn]] void reject(const std::string& what, const std::vector<std::string>& violations) {
    std::string msg = what + " failed validation:";
    for (const auto& v : violations) msg += "\n  - " + v;
    throw std::runtime_error(msg);
}

Category category_from_json(const json& j) {
    std::vector<std::string> objects = j.at("objects").get<std::vector<std::string>>();
    std::vector<Mor> mors;
    if (j.contains("morphisms"))
        for (const auto& m : j.at("morphisms"))
            mors.push_back({m.at("name").get<std::string>(), m.at("src").get<std::string>(),
                            m.at("tgt").get<std::string>()});
    std::map<std::pair<std::string, std::string>, std::string> comp;
    if (j.contains("compose"))
        for (const auto& row : j.at("compose"))
            comp[{row.at(0).get<std::string>(), row.at(1).get<std::string>()}] =
                row.at(2).get<std::string>();
    Category c = make_category(j.at("name").get<std::string>(), std::move(objects),
                               std::move(mors), std::move(comp));
    auto violations = validate(c);
    if (!violations.empty()) reject("category '" + c.name + "'", violations);
    return c;
}

Functor functor_from_json(const json& j, const Workspace& ws) {
    Functor f;
    f.name = j.at("name").get<std::string>();
    f.src = ws.category(j.at("src").get<std::string>());
    f.tgt = ws.category(j.at("tgt").get<std::string>());
    for (const auto& [k, v] : j.at("objects").items()) f.on_objects[k] = v.get<std::string>();
    if (j.contains("morphisms"))
        for (const auto& [k, v] : j.at("morphisms").items())
            f.on_morphisms[k] = v.get<std::string>();
    for (const auto& o : f.src->objects) { // identity images are implicit
        auto it = f.on_objects.find(o);
        if (it != f.on_objects.end())
            f.on_morphisms.emplace(f.src->id_of(o), f.tgt->id_of(it->second));
    }
    auto violations = validate(f);
    if (!violations.empty()) reject("functor '" + f.name + "'", violations);
    return f;
}

Presheaf presheaf_from_json(const json& j, const Workspace& ws) {
    Presheaf p;
    p.name = j.at("name").get<std::string>();
    p.base = ws.category(j.at("base").get<std::string>());
    std::string var = j.value("variance", "contra");
    if (var != "contra" && var != "co")
        throw std::runtime_error("presheaf '" + p.name + "': bad variance '" + var + "'");
    p.variance = var == "contra" ? Variance::contra : Variance::co;
    for (const auto& [obj, elems] : j.at("values").items())
        p.values[obj] = FinSet(p.name + "(" + obj + ")", elems.get<std::vector<std::string>>());
    if (j.contains("actions"))
        for (const auto& [mor, table] : j.at("actions").items()) {
            if (!p.base->has_morphism(mor))
                throw std::runtime_error("presheaf '" + p.name + "': unknown morphism '" + mor +
                                         "'");
            auto [from, to] = action_profile(p, p.base->mor(mor));
            std::map<std::string, std::string> t;
            for (const auto& [x, y] : table.items()) t[x] = y.get<std::string>();
            p.actions[mor] = SetMap(p.values.at(from), p.values.at(to), std::move(t));
        }
    for (const auto& o : p.base->objects) { // identity actions are implicit
        const std::string& id = p.base->id_of(o);
        if (!p.actions.count(id)) p.actions[id] = SetMap::identity(p.values.at(o));
    }
    auto violations = validate(p);
    if (!violations.empty()) reject("presheaf '" + p.name + "'", violations);
    return p;
}

Distributor distributor_from_json(const json& j, const Workspace& ws) {
    Distributor d;
    d.name = j.at("name").get<std::string>();
    d.src = ws.category(j.at("src").get<std::string>());
    d.tgt = ws.category(j.at("tgt").get<std::string>());
    for (const auto& [b, row] : j.at("values").items())
        for (const auto& [a, elems] : row.items())
            d.values[{b, a}] = FinSet(d.name + "(" + b + "," + a + ")",
                                      elems.get<std::vector<std::string>>());
    if (j.contains("left"))
        for (const auto& [g, row] : j.at("left").items())
            for (const auto& [a, table] : row.items()) {
                const Mor& gm = d.tgt->mor(g);
                std::map<std::string, std::string> t;
                for (const auto& [x, y] : table.items()) t[x] = y.get<std::string>();
                d.left_action[{g, a}] =
                    SetMap(d.values.at({gm.tgt, a}), d.values.at({gm.src, a}), std::move(t));
            }
    if (j.contains("right"))
        for (const auto& [b, row] : j.at("right").items())
            for (const auto& [f, table] : row.items()) {
                const Mor& fm = d.src->mor(f);
                std::map<std::string, std::string> t;
                for (const auto& [x, y] : table.items()) t[x] = y.get<std::string>();
                d.right_action[{b, f}] =
                    SetMap(d.values.at({b, fm.src}), d.values.at({b, fm.tgt}), std::move(t));
            }
    for (const auto& b : d.tgt->objects) { // identity actions are implicit
        for (const auto& a : d.src->objects) {
            const std::string& idb = d.tgt->id_of(b);
            const std::string& ida = d.src->id_of(a);
            if (!d.left_action.count({idb, a}))
                d.left_action[{idb, a}] = SetMap::identity(d.values.at({b, a}));
            if (!d.right_action.count({b, ida}))
                d.right_action[{b, ida}] = SetMap::identity(d.values.at({b, a}));
        }
    }
    auto violations = validate(d);
    if (!violations.empty()) reject("distributor '" + d.name + "'", violations);
    return d;
}

LabelMatrix matrix_from_json(const json& j) {
    LabelMatrix m;
    m.name = j.at("name").get<std::string>();
    m.src = FinSet("src", j.at("src").get<std::vector<std::string>>());
    m.tgt = FinSet("tgt", j.at("tgt").get<std::vector<std::string>>());
    for (const auto& [b, row] : j.at("entries").items())
        for (const auto& [a, label] : row.items()) m.entries[{b, a}] = label.get<std::string>();
    for (const auto& b : m.tgt.elements)
        for (const auto& a : m.src.elements)
            if (!m.entries.count({b, a}))
                throw std::runtime_error("matrix '" + m.name + "': missing entry (" + b + "," + a +
                                         ")");
    return m;
}

void load_one(const json& j, Workspace& ws) {
    std::string kind = j.at("kind").get<std::string>();
    std::string name = j.at("name").get<std::string>();
    if (kind == "category") {
        ws.categories[name] = share(category_from_json(j));
    } else if (kind == "functor") {
        ws.functors[name] = functor_from_json(j, ws);
    } else if (kind == "presheaf" || kind == "copresheaf") {
        json jj = j;
        if (kind == "copresheaf" && !jj.contains("variance")) jj["variance"] = "co";
        ws.presheaves[name] = presheaf_from_json(jj, ws);
    } else if (kind == "distributor") {
        ws.distributors[name] = distributor_from_json(j, ws);
    } else if (kind == "matrix") {
        ws.matrices[name] = matrix_from_json(j);
    } else {
        throw std::runtime_error("unknown entity kind '" + kind + "'");
    }
}

int kind_rank(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "category") return 0;
    return 1;
}

} // namespace

void load_entity_json(const std::string& text, Workspace& ws) {
    json j = json::parse(text);
    std::vector<json> items;
    if (j.is_array())
        for (const auto& x : j) items.push_back(x);
    else
        items.push_back(j);
    std::stable_sort(items.begin(), items.end(),
                     [](const json& a, const json& b) { return kind_rank(a) < kind_rank(b); });
    for (const auto& x : items) load_one(x, ws);
}

Workspace load_files(const std::vector<std::string>& paths) {
    Workspace ws;
    // categories first so that cross-references resolve regardless of file order
    std::vector<json> items;
    for (const auto& f : paths) {
        std::ifstream in(f);
        if (!in) throw std::runtime_error("cannot open " + f);
        std::stringstream ss;
        ss << in.rdbuf();
        json j = json::parse(ss.str());
        if (j.is_array())
            for (const auto& x : j) items.push_back(x);
        else
            items.push_back(j);
    }
    std::stable_sort(items.begin(), items.end(),
                     [](const json& a, const json& b) { return kind_rank(a) < kind_rank(b); });
    for (const auto& x : items) load_one(x, ws);
    return ws;
}

Workspace load_workspace(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    return load_files(files);
}

std::string validate_file(const std::string& text) {
    try {
        Workspace ws;
        load_entity_json(text, ws);
        return "";
    } catch (const std::exception& e) {
        return e.what();
    }
}

} // namespace psh
