#include "bisimod/model.hpp"

#include <cctype>

#include <nlohmann/json.hpp>

#include "bisimod/errors.hpp"

namespace bisimod {

namespace {

using nlohmann::json;

bool valid_atom_name(const std::string& s) {
    if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

void validate_side(const KripkeModel& m, const std::string& side) {
    if (m.worlds.empty()) {
        throw ValidationError("world set must be nonempty", side + ".worlds");
    }
    std::size_t i = 0;
    for (const auto& [from, to] : m.rel) {
        if (!m.worlds.count(from) || !m.worlds.count(to)) {
            throw ValidationError("relation mentions unknown world",
                                  side + ".rel[" + std::to_string(i) + "]");
        }
        ++i;
    }
    for (const auto& [atom, ws] : m.val) {
        if (!valid_atom_name(atom)) {
            throw ValidationError("bad atom name '" + atom + "'", side + ".val");
        }
        if (ws.empty()) {
            throw ValidationError("empty valuation entry must be omitted",
                                  side + ".val." + atom);
        }
        for (const auto& w : ws) {
            if (!m.worlds.count(w)) {
                throw ValidationError("valuation mentions unknown world '" + w + "'",
                                      side + ".val." + atom);
            }
        }
    }
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (key == k) ok = true;
        }
        if (!ok) throw ValidationError("unknown key '" + key + "'", path);
    }
}

std::set<WorldId> parse_world_array(const json& arr, const std::string& path) {
    if (!arr.is_array()) throw ValidationError("expected an array", path);
    std::set<WorldId> out;
    std::size_t i = 0;
    for (const auto& el : arr) {
        if (!el.is_string()) {
            throw ValidationError("expected a string", path + "[" + std::to_string(i) + "]");
        }
        auto w = el.get<std::string>();
        if (w.empty()) {
            throw ValidationError("world name must be nonempty",
                                  path + "[" + std::to_string(i) + "]");
        }
        if (!out.insert(w).second) {
            throw ValidationError("duplicate entry '" + w + "'",
                                  path + "[" + std::to_string(i) + "]");
        }
        ++i;
    }
    return out;
}

std::set<WorldPair> parse_pair_array(const json& arr, const std::string& path) {
    if (!arr.is_array()) throw ValidationError("expected an array", path);
    std::set<WorldPair> out;
    std::size_t i = 0;
    for (const auto& el : arr) {
        const std::string at = path + "[" + std::to_string(i) + "]";
        if (!el.is_array() || el.size() != 2 || !el[0].is_string() || !el[1].is_string()) {
            throw ValidationError("expected a [from, to] pair of strings", at);
        }
        WorldPair p{el[0].get<std::string>(), el[1].get<std::string>()};
        if (!out.insert(p).second) throw ValidationError("duplicate pair", at);
        ++i;
    }
    return out;
}

KripkeModel parse_side(const json& obj, const std::string& path) {
    if (!obj.is_object()) throw ValidationError("expected an object", path);
    reject_unknown_keys(obj, {"worlds", "rel", "val"}, path);
    if (!obj.contains("worlds")) throw ValidationError("missing key 'worlds'", path);
    KripkeModel m;
    m.worlds = parse_world_array(obj["worlds"], path + ".worlds");
    if (obj.contains("rel")) m.rel = parse_pair_array(obj["rel"], path + ".rel");
    if (obj.contains("val")) {
        const json& val = obj["val"];
        if (!val.is_object()) throw ValidationError("expected an object", path + ".val");
        for (const auto& [atom, arr] : val.items()) {
            m.val[atom] = parse_world_array(arr, path + ".val." + atom);
        }
    }
    return m;
}

json worlds_json(const std::set<WorldId>& ws) {
    json arr = json::array();
    for (const auto& w : ws) arr.push_back(w);
    return arr;
}

json pairs_json(const std::set<WorldPair>& ps) {
    json arr = json::array();
    for (const auto& [a, b] : ps) arr.push_back(json::array({a, b}));
    return arr;
}

json side_json(const KripkeModel& m) {
    json val = json::object();
    for (const auto& [atom, ws] : m.val) {
        if (!ws.empty()) val[atom] = worlds_json(ws);
    }
    return json{{"worlds", worlds_json(m.worlds)}, {"rel", pairs_json(m.rel)},
                {"val", val}};
}

} // namespace

void normalize(KripkeModel& m) {
    for (auto it = m.val.begin(); it != m.val.end();) {
        it = it->second.empty() ? m.val.erase(it) : std::next(it);
    }
}

void normalize(BiModel& m) {
    normalize(m.left);
    normalize(m.right);
}

void validate(const BiModel& m) {
    validate_side(m.left, "left");
    validate_side(m.right, "right");
    std::size_t i = 0;
    for (const auto& [w, wp] : m.z) {
        if (!m.left.worlds.count(w) || !m.right.worlds.count(wp)) {
            throw ValidationError("z mentions unknown world",
                                  "z[" + std::to_string(i) + "]");
        }
        ++i;
    }
}

BiModel load_bimodel(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("expected a JSON object", "$");
    reject_unknown_keys(doc, {"left", "right", "z"}, "$");
    for (const char* key : {"left", "right"}) {
        if (!doc.contains(key)) {
            throw ValidationError(std::string("missing key '") + key + "'", "$");
        }
    }
    BiModel m;
    m.left = parse_side(doc["left"], "left");
    m.right = parse_side(doc["right"], "right");
    if (doc.contains("z")) m.z = parse_pair_array(doc["z"], "z");
    normalize(m);
    validate(m);
    return m;
}

std::string save_bimodel(const BiModel& m) {
    BiModel copy = m;
    normalize(copy);
    json doc{{"left", side_json(copy.left)}, {"right", side_json(copy.right)},
             {"z", pairs_json(copy.z)}};
    return doc.dump(2) + "\n";
}

} // namespace bisimod
