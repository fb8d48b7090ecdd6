#pragma once

#include "c2r/c_ast.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace c2r {

/// Linear offset `constant + sum(coef * var)`. Zero coefficients are never
/// stored, so structurally equal offsets are equal values.
struct SymbolicOffset {
    int64_t constant = 0;
    std::map<std::string, int64_t> terms;

    static SymbolicOffset of_constant(int64_t c);
    static SymbolicOffset of_var(const std::string& v, int64_t coef = 1);

    bool is_constant() const { return terms.empty(); }
    bool mentions(const std::string& v) const { return terms.count(v) != 0; }

    SymbolicOffset operator+(const SymbolicOffset& o) const {
        SymbolicOffset r = *this;
        r.constant += o.constant;
        if (!o.terms.empty()) r.add_terms(o, 1);
        return r;
    }
    SymbolicOffset operator-(const SymbolicOffset& o) const {
        SymbolicOffset r = *this;
        r.constant -= o.constant;
        if (!o.terms.empty()) r.add_terms(o, -1);
        return r;
    }
    /// Adds `k` times the variable part of `o`.
    void add_terms(const SymbolicOffset& o, int64_t k);
    SymbolicOffset scaled(int64_t k) const;

    /// Value under an assignment; missing variables count as 0.
    int64_t evaluate(const std::map<std::string, int64_t>& env) const;

    bool operator==(const SymbolicOffset&) const = default;
};

std::string to_string(const SymbolicOffset& o);

enum class Ordering { lt, eq, gt, unknown };

const char* to_string(Ordering o);

/// Normal form of an integer expression made of literals, variables, `+`,
/// `-` and multiplication by a constant. Widening casts are transparent.
/// Throws `non-linear` for anything else.
SymbolicOffset sym_normalize(const CExpr& e);

/// Context-free comparison assuming every variable is a nonnegative
/// integer. Lt/Gt are only claimed when they hold for every assignment.
Ordering sym_compare_terms(const SymbolicOffset& a, const SymbolicOffset& b);

inline Ordering sym_compare(const SymbolicOffset& a, const SymbolicOffset& b) {
    if (a.terms.empty() && b.terms.empty())
        return a.constant < b.constant ? Ordering::lt : a.constant > b.constant ? Ordering::gt : Ordering::eq;
    return sym_compare_terms(a, b);
}

} // namespace c2r
