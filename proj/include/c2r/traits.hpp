#pragma once

#include "c2r/rust_ast.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace c2r {

enum class Trait { clone, copy, partial_eq };

const char* to_string(Trait t);

/// Struct name -> derivable traits.
using TraitFacts = std::map<std::string, std::set<Trait>>;

/// Greatest fixpoint over the struct definitions: every struct starts with
/// all three traits and loses one as soon as a field cannot provide it.
TraitFacts derive_traits(const RustProgram& program);

/// Whether `t` has `trait` given facts for the named structs.
bool type_has_trait(const RustType& t, Trait trait, const TraitFacts& facts);

/// Canonical derive list: Clone, Copy, PartialEq.
std::vector<std::string> derive_list(const std::set<Trait>& traits);

/// Writes `derives` on every struct definition.
void apply_derives(RustProgram& program, const TraitFacts& facts);

} // namespace c2r
