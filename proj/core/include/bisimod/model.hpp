#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

namespace bisimod {

using WorldId = std::string;
using WorldPair = std::pair<WorldId, WorldId>;

/// One side of a bi-model: a finite Kripke model. Ordered containers keep
/// every traversal canonical. Atoms absent from `val` are false everywhere;
/// the invariant below drops empty entries so that equality is semantic.
struct KripkeModel {
    std::set<WorldId> worlds;
    std::set<WorldPair> rel;
    std::map<std::string, std::set<WorldId>> val;

    bool operator==(const KripkeModel&) const = default;
};

/// A pair of Kripke models joined by a correspondence relation z between
/// left and right worlds. z may be empty: whether it is a bisimulation is a
/// property to check, never an assumption. The same WorldId may appear on
/// both sides and names two distinct points.
struct BiModel {
    KripkeModel left;
    KripkeModel right;
    std::set<WorldPair> z;

    bool operator==(const BiModel&) const = default;
};

/// Check all structural invariants (nonempty world sets, rel/val/z contained
/// in the world sets, well-formed atom names, no empty val entries).
/// Throws ValidationError naming the offending entry.
void validate(const BiModel& m);

/// Drop val entries with empty world sets, in place.
void normalize(KripkeModel& m);
void normalize(BiModel& m);

/// Parse a bi-model from its JSON document form. The document must be a
/// single object {"left": side, "right": side, "z": [[w,w'],...]} with
/// side = {"worlds": [...], "rel": [[w,v],...], "val": {atom: [...]}}.
/// Unknown keys and duplicate entries are rejected.
/// Throws FormatError on broken JSON, ValidationError otherwise.
BiModel load_bimodel(const std::string& document);

/// Serialize canonically: sorted worlds, sorted pairs, sorted atom keys,
/// empty valuations dropped. Structurally equal models produce identical
/// bytes, and load_bimodel(save_bimodel(m)) == m.
std::string save_bimodel(const BiModel& m);

} // namespace bisimod
