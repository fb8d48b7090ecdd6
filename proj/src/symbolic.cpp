#include "c2r/symbolic.hpp"

namespace c2r {

namespace {

void drop_zeros(SymbolicOffset& o) {
    for (auto it = o.terms.begin(); it != o.terms.end();) {
        if (it->second == 0) it = o.terms.erase(it);
        else ++it;
    }
}

} // namespace

SymbolicOffset SymbolicOffset::of_constant(int64_t c) {
    SymbolicOffset o;
    o.constant = c;
    return o;
}

SymbolicOffset SymbolicOffset::of_var(const std::string& v, int64_t coef) {
    SymbolicOffset o;
    if (coef != 0) o.terms[v] = coef;
    return o;
}

void SymbolicOffset::add_terms(const SymbolicOffset& o, int64_t k) {
    for (const auto& [v, c] : o.terms) terms[v] += c * k;
    drop_zeros(*this);
}

SymbolicOffset SymbolicOffset::scaled(int64_t k) const {
    SymbolicOffset r;
    r.constant = constant * k;
    for (const auto& [v, c] : terms) r.terms[v] = c * k;
    drop_zeros(r);
    return r;
}

int64_t SymbolicOffset::evaluate(const std::map<std::string, int64_t>& env) const {
    int64_t v = constant;
    for (const auto& [name, c] : terms) {
        auto it = env.find(name);
        if (it != env.end()) v += c * it->second;
    }
    return v;
}

std::string to_string(const SymbolicOffset& o) {
    std::string s;
    for (const auto& [v, c] : o.terms) {
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        int64_t a = c < 0 ? -c : c;
        if (a != 1) s += std::to_string(a) + "*";
        s += v;
    }
    if (s.empty()) return std::to_string(o.constant);
    if (o.constant > 0) s += " + " + std::to_string(o.constant);
    if (o.constant < 0) s += " - " + std::to_string(-o.constant);
    return s;
}

const char* to_string(Ordering o) {
    switch (o) {
    case Ordering::lt: return "Lt";
    case Ordering::eq: return "Eq";
    case Ordering::gt: return "Gt";
    case Ordering::unknown: return "Unknown";
    }
    return "?";
}

SymbolicOffset sym_normalize(const CExpr& e) {
    using K = CExpr::Kind;
    switch (e.kind) {
    case K::int_lit: return SymbolicOffset::of_constant(static_cast<int64_t>(e.value));
    case K::var:
        if (e.type && !e.type->is_integer())
            throw CompileError("non-linear", e.loc, "'" + e.name + "' is not an integer offset");
        return SymbolicOffset::of_var(e.name);
    case K::cast: {
        const CExpr& inner = e.kids[0];
        if (inner.type && inner.type->is_integer() && e.target.is_integer() &&
            bit_width(e.target.base) >= bit_width(inner.type->base) &&
            is_signed(e.target.base) == is_signed(inner.type->base))
            return sym_normalize(inner);
        if (inner.type && inner.type->is_integer() && e.target.is_integer() && !is_signed(inner.type->base) &&
            bit_width(e.target.base) > bit_width(inner.type->base))
            return sym_normalize(inner);
        throw CompileError("non-linear", e.loc, "narrowing cast inside a pointer offset");
    }
    case K::binop: {
        if (e.op == "+") return sym_normalize(e.kids[0]) + sym_normalize(e.kids[1]);
        if (e.op == "-") return sym_normalize(e.kids[0]) - sym_normalize(e.kids[1]);
        if (e.op == "*") {
            SymbolicOffset l = sym_normalize(e.kids[0]);
            SymbolicOffset r = sym_normalize(e.kids[1]);
            if (l.is_constant()) return r.scaled(l.constant);
            if (r.is_constant()) return l.scaled(r.constant);
            throw CompileError("non-linear", e.loc, "product of two variables in a pointer offset");
        }
        throw CompileError("non-linear", e.loc, "operator '" + e.op + "' in a pointer offset");
    }
    default:
        throw CompileError("non-linear", e.loc, "unsupported expression in a pointer offset");
    }
}

Ordering sym_compare_terms(const SymbolicOffset& a, const SymbolicOffset& b) {
    SymbolicOffset d = b - a;
    if (d.terms.empty() && d.constant == 0) return Ordering::eq;
    bool all_nonneg = true, all_nonpos = true;
    for (const auto& [v, c] : d.terms) {
        if (c < 0) all_nonneg = false;
        if (c > 0) all_nonpos = false;
    }
    if (all_nonneg && d.constant > 0) return Ordering::lt;
    if (all_nonpos && d.constant < 0) return Ordering::gt;
    return Ordering::unknown;
}

} // namespace c2r
