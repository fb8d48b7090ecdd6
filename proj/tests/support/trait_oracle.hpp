#pragma once

// Brute-force derivability: for each trait, try every subset of structs and
// keep the largest one that justifies itself field by field.

#include "c2r/rust_ast.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace c2r::oracle {

enum class Derive { clone, copy, eq };

inline bool field_ok(const RustType& t, Derive d, const std::set<std::string>& assumed) {
    using K = RustType::Kind;
    switch (t.kind) {
    case K::base:
    case K::unit: return true;
    case K::array: return field_ok(t.elem(), d, assumed);
    case K::slice_ref:
        // &T is Copy and Clone for any T; &mut T is neither. Both compare by content.
        if (d == Derive::eq) return field_ok(t.elem(), d, assumed);
        return !t.mut_;
    case K::boxed_slice:
        if (d == Derive::copy) return false;
        return field_ok(t.elem(), d, assumed);
    case K::function: return d != Derive::eq;
    case K::named: return assumed.count(t.name) != 0;
    case K::tuple:
        for (const auto& e : t.elems)
            if (!field_ok(e, d, assumed)) return false;
        return true;
    }
    return false;
}

/// Struct name -> derive list in canonical order (Clone, Copy, PartialEq).
inline std::map<std::string, std::vector<std::string>> brute_force_derives(const std::vector<RustStruct>& structs) {
    std::size_t n = structs.size();
    auto largest = [&](Derive d, const std::set<std::string>* within) {
        std::set<std::string> best;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::set<std::string> s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) s.insert(structs[i].name);
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                if (!(mask & (1u << i))) continue;
                if (within && !within->count(structs[i].name)) ok = false;
                for (const auto& [f, t] : structs[i].fields)
                    if (!field_ok(t, d, s)) ok = false;
            }
            if (ok && s.size() > best.size()) best = s;
        }
        return best;
    };
    std::set<std::string> clone = largest(Derive::clone, nullptr);
    std::set<std::string> copy = largest(Derive::copy, &clone);  // Copy needs Clone
    std::set<std::string> eq = largest(Derive::eq, nullptr);
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& s : structs) {
        auto& v = out[s.name];
        if (clone.count(s.name)) v.push_back("Clone");
        if (copy.count(s.name)) v.push_back("Copy");
        if (eq.count(s.name)) v.push_back("PartialEq");
    }
    return out;
}

} // namespace c2r::oracle
