#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bisimod/formula.hpp"
#include "bisimod/model.hpp"

namespace bisimod {

enum class Side { Left, Right };

/// A world addressed together with the side it lives on. The side matters:
/// the same WorldId may occur in both models and names two distinct points.
struct Point {
    Side side;
    WorldId world;

    bool operator==(const Point&) const = default;
};

/// A valuation override used as a frame-validity counterexample witness:
/// for every atom of the refuted formula, the worlds where it holds.
struct FrameValuation {
    std::map<std::string, std::set<WorldId>> left;
    std::map<std::string, std::set<WorldId>> right;

    bool operator==(const FrameValuation&) const = default;
};

struct Witness {
    Point point;
    std::optional<FrameValuation> valuation; // frame validity only
};

/// Verdict plus a counterexample when the verdict is negative. A present
/// witness always re-checks: evaluating the formula at the witness point
/// (under the witness valuation, if any) yields false.
struct Report {
    bool verdict = false;
    std::optional<Witness> witness;
};

// --- Compiled forms -------------------------------------------------------
//
// Evaluation works on bitmask-compiled models: world i of a side is bit i,
// in sorted world order. A formula evaluates to one mask per side (the set
// of points satisfying it), so model validity is a single evaluation.
// Models are capped at 64 worlds per side; compile() throws BoundExceeded
// beyond that.

struct CompiledSide {
    std::vector<WorldId> worlds;          // sorted; index == bit position
    std::vector<std::uint64_t> succ;      // successor mask per world
    std::map<std::string, std::uint64_t> val;

    std::uint64_t all() const {
        return worlds.size() == 64 ? ~0ull : (1ull << worlds.size()) - 1;
    }
    int index_of(const WorldId& w) const;
};

struct CompiledBiModel {
    CompiledSide left;
    CompiledSide right;
    std::vector<std::uint64_t> z; // per left world, mask of right worlds

    BiModel to_bimodel() const;
};

CompiledBiModel compile(const BiModel& m);

/// The set of points of each side satisfying a formula.
struct Denotation {
    std::uint64_t left = 0;
    std::uint64_t right = 0;

    bool operator==(const Denotation&) const = default;
};

/// A formula flattened to a postorder DAG (structurally equal subtrees
/// shared), for repeated evaluation against many models.
struct CompiledFormula {
    struct Op {
        Formula::Kind kind;
        std::int32_t a = -1;    // child (Implies lhs / Box / BisBox body)
        std::int32_t b = -1;    // Implies rhs
        std::int32_t atom = -1; // index into atom_names
    };
    std::vector<Op> ops;                 // postorder; result is ops.back()
    std::vector<std::string> atom_names;
};

CompiledFormula compile(const Formula& f);

/// Resolve the compiled formula's atoms against the model's valuation.
std::vector<Denotation> resolve_atoms(const CompiledFormula& cf,
                                      const CompiledBiModel& m);

/// Evaluate with explicit atom denotations (one entry per cf.atom_names).
/// `scratch` is resized as needed and may be reused across calls.
Denotation eval(const CompiledFormula& cf, const CompiledBiModel& m,
                const std::vector<Denotation>& atom_vals,
                std::vector<Denotation>& scratch);

Denotation eval(const CompiledFormula& cf, const CompiledBiModel& m);

// --- Truth, model validity, frame validity --------------------------------

/// Truth at a point: atoms through the side's valuation, -> classically,
/// [] along the side's own relation, and [b] from a left point quantifying
/// over its z-successors on the right. At right points [b]A is true
/// unconditionally (so <b>A is false there).
/// Throws UnknownWorld when the point does not exist in the model.
bool satisfies(const BiModel& m, const Point& pt, const Formula& f);

/// True at every point of both sides. The witness for a failure is the
/// first failing point, left side first, worlds in sorted order.
Report valid_in_model(const BiModel& m, const Formula& f);

/// Frame validity by valuation enumeration over the atoms occurring in f
/// (other atoms cannot influence the verdict). Assignments are enumerated
/// in a fixed lexicographic order and the first refuting (valuation, point)
/// is reported. Throws BoundExceeded when
/// |atoms(f)| * (|left worlds| + |right worlds|) exceeds `bound`.
Report valid_in_frame(const BiModel& m, const Formula& f, std::size_t bound = 24);

} // namespace bisimod
