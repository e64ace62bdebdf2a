#include "bisimod/semantics.hpp"

#include <algorithm>
#include <unordered_map>

#include "bisimod/errors.hpp"

namespace bisimod {

namespace {

using Kind = Formula::Kind;

CompiledSide compile_side(const KripkeModel& m) {
    if (m.worlds.size() > 64) {
        throw BoundExceeded("models with more than 64 worlds per side are not supported");
    }
    CompiledSide side;
    side.worlds.assign(m.worlds.begin(), m.worlds.end());
    side.succ.assign(side.worlds.size(), 0);
    auto index = [&](const WorldId& w) {
        return static_cast<std::size_t>(
            std::lower_bound(side.worlds.begin(), side.worlds.end(), w) -
            side.worlds.begin());
    };
    for (const auto& [from, to] : m.rel) {
        side.succ[index(from)] |= 1ull << index(to);
    }
    for (const auto& [atom, ws] : m.val) {
        std::uint64_t mask = 0;
        for (const auto& w : ws) mask |= 1ull << index(w);
        if (mask != 0) side.val[atom] = mask;
    }
    return side;
}

KripkeModel decompile_side(const CompiledSide& side) {
    KripkeModel m;
    m.worlds.insert(side.worlds.begin(), side.worlds.end());
    for (std::size_t i = 0; i < side.worlds.size(); ++i) {
        for (std::size_t j = 0; j < side.worlds.size(); ++j) {
            if (side.succ[i] >> j & 1) m.rel.insert({side.worlds[i], side.worlds[j]});
        }
    }
    for (const auto& [atom, mask] : side.val) {
        std::set<WorldId> ws;
        for (std::size_t j = 0; j < side.worlds.size(); ++j) {
            if (mask >> j & 1) ws.insert(side.worlds[j]);
        }
        if (!ws.empty()) m.val[atom] = std::move(ws);
    }
    return m;
}

} // namespace

int CompiledSide::index_of(const WorldId& w) const {
    auto it = std::lower_bound(worlds.begin(), worlds.end(), w);
    if (it == worlds.end() || *it != w) return -1;
    return static_cast<int>(it - worlds.begin());
}

CompiledBiModel compile(const BiModel& m) {
    CompiledBiModel out;
    out.left = compile_side(m.left);
    out.right = compile_side(m.right);
    out.z.assign(out.left.worlds.size(), 0);
    for (const auto& [w, wp] : m.z) {
        int i = out.left.index_of(w);
        int j = out.right.index_of(wp);
        if (i < 0) throw UnknownWorld(w);
        if (j < 0) throw UnknownWorld(wp);
        out.z[static_cast<std::size_t>(i)] |= 1ull << j;
    }
    return out;
}

BiModel CompiledBiModel::to_bimodel() const {
    BiModel m;
    m.left = decompile_side(left);
    m.right = decompile_side(right);
    for (std::size_t i = 0; i < left.worlds.size(); ++i) {
        for (std::size_t j = 0; j < right.worlds.size(); ++j) {
            if (z[i] >> j & 1) m.z.insert({left.worlds[i], right.worlds[j]});
        }
    }
    return m;
}

CompiledFormula compile(const Formula& f) {
    CompiledFormula cf;
    std::unordered_map<const void*, std::int32_t> slot;
    std::unordered_map<std::string, std::int32_t> atom_slot;

    auto walk = [&](auto&& self, const Formula& g) -> std::int32_t {
        if (auto it = slot.find(g.id()); it != slot.end()) return it->second;
        CompiledFormula::Op op;
        op.kind = g.kind();
        switch (g.kind()) {
        case Kind::Atom: {
            auto [it, fresh] = atom_slot.try_emplace(
                g.name(), static_cast<std::int32_t>(cf.atom_names.size()));
            if (fresh) cf.atom_names.push_back(g.name());
            op.atom = it->second;
            break;
        }
        case Kind::Falsum: break;
        case Kind::Implies:
            op.a = self(self, g.lhs());
            op.b = self(self, g.rhs());
            break;
        case Kind::Box:
        case Kind::BisBox: op.a = self(self, g.body()); break;
        }
        cf.ops.push_back(op);
        std::int32_t id = static_cast<std::int32_t>(cf.ops.size() - 1);
        slot.emplace(g.id(), id);
        return id;
    };
    walk(walk, f);
    return cf;
}

std::vector<Denotation> resolve_atoms(const CompiledFormula& cf,
                                      const CompiledBiModel& m) {
    std::vector<Denotation> out(cf.atom_names.size());
    for (std::size_t i = 0; i < cf.atom_names.size(); ++i) {
        auto l = m.left.val.find(cf.atom_names[i]);
        auto r = m.right.val.find(cf.atom_names[i]);
        out[i].left = l == m.left.val.end() ? 0 : l->second;
        out[i].right = r == m.right.val.end() ? 0 : r->second;
    }
    return out;
}

Denotation eval(const CompiledFormula& cf, const CompiledBiModel& m,
                const std::vector<Denotation>& atom_vals,
                std::vector<Denotation>& scratch) {
    const std::uint64_t all_l = m.left.all();
    const std::uint64_t all_r = m.right.all();
    const std::size_t nl = m.left.worlds.size();
    const std::size_t nr = m.right.worlds.size();
    scratch.resize(cf.ops.size());
    for (std::size_t i = 0; i < cf.ops.size(); ++i) {
        const auto& op = cf.ops[i];
        Denotation& d = scratch[i];
        switch (op.kind) {
        case Kind::Atom: d = atom_vals[static_cast<std::size_t>(op.atom)]; break;
        case Kind::Falsum: d = {0, 0}; break;
        case Kind::Implies: {
            const Denotation& a = scratch[static_cast<std::size_t>(op.a)];
            const Denotation& b = scratch[static_cast<std::size_t>(op.b)];
            d.left = (~a.left | b.left) & all_l;
            d.right = (~a.right | b.right) & all_r;
            break;
        }
        case Kind::Box: {
            const Denotation& a = scratch[static_cast<std::size_t>(op.a)];
            d = {0, 0};
            for (std::size_t w = 0; w < nl; ++w) {
                if ((m.left.succ[w] & ~a.left) == 0) d.left |= 1ull << w;
            }
            for (std::size_t w = 0; w < nr; ++w) {
                if ((m.right.succ[w] & ~a.right) == 0) d.right |= 1ull << w;
            }
            break;
        }
        case Kind::BisBox: {
            const Denotation& a = scratch[static_cast<std::size_t>(op.a)];
            d = {0, all_r}; // [b]A holds unconditionally at right points
            for (std::size_t w = 0; w < nl; ++w) {
                if ((m.z[w] & ~a.right) == 0) d.left |= 1ull << w;
            }
            break;
        }
        }
    }
    return scratch.back();
}

Denotation eval(const CompiledFormula& cf, const CompiledBiModel& m) {
    std::vector<Denotation> scratch;
    return eval(cf, m, resolve_atoms(cf, m), scratch);
}

bool satisfies(const BiModel& m, const Point& pt, const Formula& f) {
    CompiledBiModel cm = compile(m);
    const CompiledSide& side = pt.side == Side::Left ? cm.left : cm.right;
    int idx = side.index_of(pt.world);
    if (idx < 0) throw UnknownWorld(pt.world);
    Denotation d = eval(compile(f), cm);
    std::uint64_t mask = pt.side == Side::Left ? d.left : d.right;
    return (mask >> idx) & 1;
}

namespace {

std::optional<Point> first_failure(const CompiledBiModel& m, const Denotation& d) {
    for (std::size_t w = 0; w < m.left.worlds.size(); ++w) {
        if (!(d.left >> w & 1)) return Point{Side::Left, m.left.worlds[w]};
    }
    for (std::size_t w = 0; w < m.right.worlds.size(); ++w) {
        if (!(d.right >> w & 1)) return Point{Side::Right, m.right.worlds[w]};
    }
    return std::nullopt;
}

} // namespace

Report valid_in_model(const BiModel& m, const Formula& f) {
    CompiledBiModel cm = compile(m);
    Denotation d = eval(compile(f), cm);
    Report report;
    if (auto fail = first_failure(cm, d)) {
        report.verdict = false;
        report.witness = Witness{*fail, std::nullopt};
    } else {
        report.verdict = true;
    }
    return report;
}

Report valid_in_frame(const BiModel& m, const Formula& f, std::size_t bound) {
    CompiledBiModel cm = compile(m);
    CompiledFormula cf = compile(f);
    const std::size_t nl = cm.left.worlds.size();
    const std::size_t nr = cm.right.worlds.size();
    const std::size_t atom_count = cf.atom_names.size();
    const std::size_t bits = atom_count * (nl + nr);
    if (bits > bound) {
        throw BoundExceeded("valuation enumeration needs 2^" + std::to_string(bits) +
                            " assignments, bound is 2^" + std::to_string(bound));
    }

    // Assignment bit layout, low to high: atoms in sorted name order, each
    // holding its left-world bits then its right-world bits.
    std::vector<std::size_t> by_name(atom_count);
    for (std::size_t i = 0; i < atom_count; ++i) by_name[i] = i;
    std::sort(by_name.begin(), by_name.end(), [&](std::size_t a, std::size_t b) {
        return cf.atom_names[a] < cf.atom_names[b];
    });

    std::vector<Denotation> atom_vals(atom_count);
    std::vector<Denotation> scratch;
    const std::uint64_t total = 1ull << bits;
    for (std::uint64_t assignment = 0; assignment < total; ++assignment) {
        for (std::size_t k = 0; k < atom_count; ++k) {
            const std::size_t a = by_name[k];
            std::uint64_t chunk = assignment >> (k * (nl + nr));
            atom_vals[a].left = chunk & ((nl == 64 ? ~0ull : (1ull << nl) - 1));
            atom_vals[a].right = (chunk >> nl) & ((nr == 64 ? ~0ull : (1ull << nr) - 1));
        }
        Denotation d = eval(cf, cm, atom_vals, scratch);
        if (auto fail = first_failure(cm, d)) {
            FrameValuation valuation;
            for (std::size_t a = 0; a < atom_count; ++a) {
                std::set<WorldId>& lw = valuation.left[cf.atom_names[a]];
                std::set<WorldId>& rw = valuation.right[cf.atom_names[a]];
                for (std::size_t w = 0; w < nl; ++w) {
                    if (atom_vals[a].left >> w & 1) lw.insert(cm.left.worlds[w]);
                }
                for (std::size_t w = 0; w < nr; ++w) {
                    if (atom_vals[a].right >> w & 1) rw.insert(cm.right.worlds[w]);
                }
            }
            return Report{false, Witness{*fail, std::move(valuation)}};
        }
    }
    return Report{true, std::nullopt};
}

} // namespace bisimod
