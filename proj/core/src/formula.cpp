#include "bisimod/formula.hpp"

#include <algorithm>
#include <functional>

namespace bisimod {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

} // namespace

Formula Formula::atom(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Atom;
    n->has_bisbox = false;
    n->depth = 0;
    n->size = 1;
    n->hash = mix(1, std::hash<std::string>{}(name));
    n->name = std::move(name);
    return Formula(std::move(n));
}

Formula Formula::falsum() {
    static const Formula instance = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Falsum;
        n->has_bisbox = false;
        n->depth = 0;
        n->size = 1;
        n->hash = mix(2, 0);
        return Formula(std::move(n));
    }();
    return instance;
}

Formula Formula::implies(Formula lhs, Formula rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Implies;
    n->has_bisbox = lhs.node_->has_bisbox || rhs.node_->has_bisbox;
    n->depth = std::max(lhs.node_->depth, rhs.node_->depth);
    n->size = 1 + lhs.node_->size + rhs.node_->size;
    n->hash = mix(mix(3, lhs.node_->hash), rhs.node_->hash);
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return Formula(std::move(n));
}

Formula Formula::box(Formula body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Box;
    n->has_bisbox = body.node_->has_bisbox;
    n->depth = 1 + body.node_->depth;
    n->size = 1 + body.node_->size;
    n->hash = mix(4, body.node_->hash);
    n->lhs = std::move(body);
    return Formula(std::move(n));
}

Formula Formula::bisbox(Formula body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::BisBox;
    n->has_bisbox = true;
    n->depth = 1 + body.node_->depth;
    n->size = 1 + body.node_->size;
    n->hash = mix(5, body.node_->hash);
    n->lhs = std::move(body);
    return Formula(std::move(n));
}

Formula Formula::negation(Formula a) {
    return implies(std::move(a), falsum());
}

Formula Formula::verum() {
    return implies(falsum(), falsum());
}

Formula Formula::conjunction(Formula a, Formula b) {
    return implies(implies(std::move(a), implies(std::move(b), falsum())), falsum());
}

Formula Formula::disjunction(Formula a, Formula b) {
    return implies(implies(std::move(a), falsum()), std::move(b));
}

Formula Formula::equivalence(Formula a, Formula b) {
    return conjunction(implies(a, b), implies(b, a));
}

Formula Formula::diamond(Formula body) {
    return implies(box(negation(std::move(body))), falsum());
}

Formula Formula::bisdiamond(Formula body) {
    return implies(bisbox(negation(std::move(body))), falsum());
}

std::set<std::string> Formula::atoms() const {
    std::set<std::string> out;
    std::function<void(const Formula&)> walk = [&](const Formula& f) {
        switch (f.kind()) {
        case Kind::Atom: out.insert(f.name()); break;
        case Kind::Falsum: break;
        case Kind::Implies:
            walk(f.lhs());
            walk(f.rhs());
            break;
        case Kind::Box:
        case Kind::BisBox: walk(f.body()); break;
        }
    };
    walk(*this);
    return out;
}

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    if (node_->hash != other.node_->hash) return false;
    return structural_compare(*this, other) == 0;
}

int structural_compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) {
        return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    }
    switch (a.kind()) {
    case Formula::Kind::Atom: return a.name().compare(b.name());
    case Formula::Kind::Falsum: return 0;
    case Formula::Kind::Implies: {
        int c = structural_compare(a.lhs(), b.lhs());
        return c != 0 ? c : structural_compare(a.rhs(), b.rhs());
    }
    case Formula::Kind::Box:
    case Formula::Kind::BisBox: return structural_compare(a.body(), b.body());
    }
    return 0;
}

int canonical_compare(const Formula& a, const Formula& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return structural_compare(a, b);
}

bool is_literal(const Formula& f) {
    if (f.is(Formula::Kind::Atom)) return true;
    return f.is(Formula::Kind::Implies) && f.lhs().is(Formula::Kind::Atom) &&
           f.rhs().is(Formula::Kind::Falsum);
}

} // namespace bisimod
