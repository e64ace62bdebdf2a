#include "bisimod/printer.hpp"

namespace bisimod {

namespace {

using Kind = Formula::Kind;

// Binding strength; higher binds tighter.
constexpr int kImplies = 2;
constexpr int kOr = 3;
constexpr int kAnd = 4;
constexpr int kPrefix = 5;

bool is_neg(const Formula& f) {
    return f.is(Kind::Implies) && f.rhs().is(Kind::Falsum);
}

// Desugaring patterns, recognized longest first. The three five-node
// patterns (&, <>, <b>) are mutually exclusive.
bool match_and(const Formula& f, Formula& a, Formula& b) {
    if (!is_neg(f) || !f.lhs().is(Kind::Implies)) return false;
    const Formula& inner = f.lhs();
    if (!is_neg(inner.rhs())) return false;
    a = inner.lhs();
    b = inner.rhs().lhs();
    return true;
}

bool match_diamond(const Formula& f, Formula& a) {
    if (!is_neg(f) || !f.lhs().is(Kind::Box)) return false;
    if (!is_neg(f.lhs().body())) return false;
    a = f.lhs().body().lhs();
    return true;
}

bool match_bisdiamond(const Formula& f, Formula& a) {
    if (!is_neg(f) || !f.lhs().is(Kind::BisBox)) return false;
    if (!is_neg(f.lhs().body())) return false;
    a = f.lhs().body().lhs();
    return true;
}

bool match_or(const Formula& f, Formula& a, Formula& b) {
    if (!f.is(Kind::Implies) || !is_neg(f.lhs())) return false;
    a = f.lhs().lhs();
    b = f.rhs();
    return true;
}

void emit(std::string& out, const Formula& f, bool resugar, int min_prec);

void emit_infix(std::string& out, const Formula& lhs, const Formula& rhs,
                const char* op, int prec, bool right_assoc, bool resugar,
                int min_prec) {
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    emit(out, lhs, resugar, right_assoc ? prec + 1 : prec);
    out += op;
    emit(out, rhs, resugar, right_assoc ? prec : prec + 1);
    if (parens) out += ')';
}

void emit_prefix(std::string& out, const char* op, const Formula& body, bool resugar,
                 int min_prec) {
    const bool parens = kPrefix < min_prec;
    if (parens) out += '(';
    out += op;
    emit(out, body, resugar, kPrefix);
    if (parens) out += ')';
}

void emit(std::string& out, const Formula& f, bool resugar, int min_prec) {
    if (resugar) {
        Formula a = Formula::falsum();
        Formula b = Formula::falsum();
        if (match_and(f, a, b)) {
            emit_infix(out, a, b, " & ", kAnd, false, resugar, min_prec);
            return;
        }
        if (match_diamond(f, a)) {
            emit_prefix(out, "<>", a, resugar, min_prec);
            return;
        }
        if (match_bisdiamond(f, a)) {
            emit_prefix(out, "<b>", a, resugar, min_prec);
            return;
        }
        if (match_or(f, a, b)) {
            emit_infix(out, a, b, " | ", kOr, false, resugar, min_prec);
            return;
        }
        if (is_neg(f)) {
            emit_prefix(out, "~", f.lhs(), resugar, min_prec);
            return;
        }
    }
    switch (f.kind()) {
    case Kind::Atom: out += f.name(); return;
    case Kind::Falsum: out += "false"; return;
    case Kind::Implies:
        emit_infix(out, f.lhs(), f.rhs(), " -> ", kImplies, true, resugar, min_prec);
        return;
    case Kind::Box: emit_prefix(out, "[]", f.body(), resugar, min_prec); return;
    case Kind::BisBox: emit_prefix(out, "[b]", f.body(), resugar, min_prec); return;
    }
}

} // namespace

std::string render(const Formula& f, bool resugar) {
    std::string out;
    emit(out, f, resugar, 0);
    return out;
}

} // namespace bisimod
