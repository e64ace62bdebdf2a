#include "bisimod/fixtures.hpp"

#include "bisimod/errors.hpp"

namespace bisimod {

namespace {

KripkeModel complete_model(std::set<WorldId> worlds,
                           std::map<std::string, std::set<WorldId>> val) {
    KripkeModel m;
    m.worlds = std::move(worlds);
    for (const auto& a : m.worlds) {
        for (const auto& b : m.worlds) m.rel.insert({a, b});
    }
    m.val = std::move(val);
    return m;
}

KripkeModel bare_model(std::set<WorldId> worlds,
                       std::map<std::string, std::set<WorldId>> val = {}) {
    KripkeModel m;
    m.worlds = std::move(worlds);
    m.val = std::move(val);
    return m;
}

// Reflexive loops plus symmetric edges between every pair amount to the
// complete relation, which is what both boxes of the example figure show.
BiModel example_3_5() {
    BiModel m;
    m.left = complete_model({"w", "v", "u"}, {{"p", {"w", "u"}}, {"q", {"v"}}});
    m.right = complete_model({"w1", "v1"}, {{"p", {"w1"}}, {"q", {"v1"}}});
    m.z = {{"w", "w1"}, {"u", "w1"}, {"v", "v1"}};
    return m;
}

BiModel expressivity(bool with_pair) {
    BiModel m;
    m.left = bare_model({"w"}, {{"p", {"w"}}});
    m.right = bare_model({"v"}, {{"p", {"v"}}});
    if (with_pair) m.z = {{"w", "v"}};
    return m;
}

BiModel undef_harmony(bool harmonious) {
    BiModel m;
    m.left = bare_model({"w", "v"}, {{"p", {"w"}}});
    m.right = bare_model({"w1", "v1"}, {{"p", {"w1"}}});
    m.z = harmonious ? std::set<WorldPair>{{"w", "w1"}}
                     : std::set<WorldPair>{{"w", "v1"}};
    return m;
}

BiModel undef_frame(bool bisimulating) {
    BiModel m;
    m.left = bare_model({"w"});
    m.left.rel = {{"w", "w"}};
    m.right = bare_model({"w1", "v1"});
    m.right.rel = {{"w1", "v1"}, {"v1", "w1"}};
    m.z = bisimulating ? std::set<WorldPair>{{"w", "w1"}, {"w", "v1"}}
                       : std::set<WorldPair>{{"w", "w1"}};
    return m;
}

BiModel znovacia() {
    BiModel m;
    m.left = bare_model({"w", "v"});
    m.right = bare_model({"w1", "v1"});
    m.z = {{"w", "w1"}};
    return m;
}

BiModel znovacia_sub() {
    BiModel m;
    m.left = bare_model({"v"});
    m.right = bare_model({"v1"});
    return m;
}

} // namespace

BiModel fixture(const std::string& name) {
    if (name == "example-3.5") return example_3_5();
    if (name == "expressivity-1") return expressivity(false);
    if (name == "expressivity-2") return expressivity(true);
    if (name == "undef-harmony-1") return undef_harmony(true);
    if (name == "undef-harmony-2") return undef_harmony(false);
    if (name == "undef-frame-1") return undef_frame(true);
    if (name == "undef-frame-2") return undef_frame(false);
    if (name == "znovacia") return znovacia();
    if (name == "znovacia-sub") return znovacia_sub();
    throw UnknownFixture(name);
}

std::vector<std::string> fixture_names() {
    return {"example-3.5",    "expressivity-1", "expressivity-2",
            "undef-harmony-1", "undef-harmony-2", "undef-frame-1",
            "undef-frame-2",  "znovacia",       "znovacia-sub"};
}

} // namespace bisimod
