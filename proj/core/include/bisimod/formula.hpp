#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>

namespace bisimod {

/// An immutable modal formula over the five core constructors
///
///     atom | false | (A -> B) | []A | [b]A
///
/// The remaining connectives (~, /\, \/, <->, true, <>, <b>) are surface
/// sugar: the builders below eliminate them immediately, so a Formula value
/// never contains them. Copies are cheap (shared subtrees) and values are
/// safe to share across threads.
class Formula {
public:
    enum class Kind : std::uint8_t { Atom, Falsum, Implies, Box, BisBox };

    // Core constructors.
    static Formula atom(std::string name);
    static Formula falsum();
    static Formula implies(Formula lhs, Formula rhs);
    static Formula box(Formula body);
    static Formula bisbox(Formula body);

    // Sugar, desugared on the spot:
    //   ~A          A -> false
    //   true        false -> false
    //   A /\ B      (A -> (B -> false)) -> false
    //   A \/ B      (A -> false) -> B
    //   A <-> B     (A -> B) /\ (B -> A)
    //   <>A         ([](A -> false)) -> false
    //   <b>A        ([b](A -> false)) -> false
    static Formula negation(Formula a);
    static Formula verum();
    static Formula conjunction(Formula a, Formula b);
    static Formula disjunction(Formula a, Formula b);
    static Formula equivalence(Formula a, Formula b);
    static Formula diamond(Formula body);
    static Formula bisdiamond(Formula body);

    Kind kind() const { return node_->kind; }
    bool is(Kind k) const { return node_->kind == k; }

    /// Atom name; only valid when kind() == Kind::Atom.
    const std::string& name() const { return node_->name; }
    /// Left child of an implication.
    const Formula& lhs() const { return node_->lhs; }
    /// Right child of an implication.
    const Formula& rhs() const { return node_->rhs; }
    /// Body of a Box or BisBox.
    const Formula& body() const { return node_->lhs; }

    /// Number of constructor nodes.
    std::size_t size() const { return node_->size; }
    /// Maximum nesting of Box/BisBox.
    std::size_t modal_depth() const { return node_->depth; }
    /// True when no [b] occurs, i.e. the formula is in the box-only fragment.
    bool is_lsquare() const { return !node_->has_bisbox; }

    /// Set of atom names occurring in the formula.
    std::set<std::string> atoms() const;

    std::size_t hash() const { return node_->hash; }

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

    /// Identity of the underlying node; stable for the lifetime of the value
    /// and usable as a memoization key for shared subtrees.
    const void* id() const { return node_.get(); }

private:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Node {
        Kind kind;
        bool has_bisbox;
        std::uint32_t depth;
        std::uint32_t size;
        std::size_t hash;
        std::string name; // Atom only
        Formula lhs;      // Implies lhs / Box / BisBox body
        Formula rhs;      // Implies rhs
    };

    Formula() = default; // null child slot inside Node
    explicit Formula(NodePtr n) : node_(std::move(n)) {}

    NodePtr node_;

    friend int structural_compare(const Formula&, const Formula&);
};

/// Total structural order: Atom < Falsum < Implies < Box < BisBox,
/// atoms by name, children lexicographically. Returns <0, 0 or >0.
int structural_compare(const Formula& a, const Formula& b);

/// Canonical order used wherever "first formula" must be deterministic:
/// smaller size first, structural order as tie-break.
int canonical_compare(const Formula& a, const Formula& b);

/// Comparator for ordered containers, canonical order.
struct CanonicalLess {
    bool operator()(const Formula& a, const Formula& b) const {
        return canonical_compare(a, b) < 0;
    }
};

/// A literal is an atom or a negated atom.
bool is_literal(const Formula& f);

} // namespace bisimod
