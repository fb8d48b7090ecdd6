#include "c2r/traits.hpp"

namespace c2r {

const char* to_string(Trait t) {
    switch (t) {
    case Trait::clone: return "Clone";
    case Trait::copy: return "Copy";
    case Trait::partial_eq: return "PartialEq";
    }
    return "?";
}

bool type_has_trait(const RustType& t, Trait trait, const TraitFacts& facts) {
    using K = RustType::Kind;
    switch (t.kind) {
    case K::base:
    case K::unit: return true;
    case K::array: return type_has_trait(t.elem(), trait, facts);
    case K::slice_ref:
        if (trait == Trait::partial_eq) return type_has_trait(t.elem(), trait, facts);
        return !t.mut_;
    case K::boxed_slice:
        if (trait == Trait::copy) return false;
        return type_has_trait(t.elem(), trait, facts);
    case K::function: return trait != Trait::partial_eq;
    case K::named: {
        auto it = facts.find(t.name);
        return it != facts.end() && it->second.count(trait) != 0;
    }
    case K::tuple:
        for (const auto& e : t.elems)
            if (!type_has_trait(e, trait, facts)) return false;
        return true;
    }
    return false;
}

TraitFacts derive_traits(const RustProgram& program) {
    TraitFacts facts;
    for (const auto& s : program.structs) facts[s.name] = {Trait::clone, Trait::copy, Trait::partial_eq};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& s : program.structs) {
            auto& mine = facts[s.name];
            for (Trait tr : {Trait::clone, Trait::copy, Trait::partial_eq}) {
                if (!mine.count(tr)) continue;
                bool ok = true;
                for (const auto& [f, t] : s.fields)
                    if (!type_has_trait(t, tr, facts)) ok = false;
                // Copy requires Clone.
                if (tr == Trait::copy && !mine.count(Trait::clone)) ok = false;
                if (!ok) {
                    mine.erase(tr);
                    changed = true;
                }
            }
        }
    }
    return facts;
}

std::vector<std::string> derive_list(const std::set<Trait>& traits) {
    std::vector<std::string> out;
    for (Trait t : {Trait::clone, Trait::copy, Trait::partial_eq})
        if (traits.count(t)) out.push_back(to_string(t));
    return out;
}

void apply_derives(RustProgram& program, const TraitFacts& facts) {
    for (auto& s : program.structs) {
        auto it = facts.find(s.name);
        s.derives = it == facts.end() ? std::vector<std::string>{} : derive_list(it->second);
    }
}

} // namespace c2r
