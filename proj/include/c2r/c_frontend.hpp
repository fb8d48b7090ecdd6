#pragma once

#include "c2r/c_ast.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace c2r {

enum class TokKind { ident, integer, punct, void_cast, eof };

struct Token {
    TokKind kind = TokKind::eof;
    std::string text;     // identifier spelling or punctuator
    uint64_t value = 0;   // integer literals
    SourceLoc loc;

    bool is(std::string_view p) const { return (kind == TokKind::punct || kind == TokKind::ident) && text == p; }
};

/// Splits mini-C source into tokens. Comments, whitespace and allowlisted
/// `#include` lines are dropped; any other preprocessor line is a
/// `subset-error`. `(void)` followed by an identifier becomes one
/// `void_cast` token.
std::vector<Token> tokenize(std::string_view source, const std::string& file = "<input>");

/// Recursive-descent parser for the mini-C grammar plus its sugar
/// (`->`, `+=`, `++`, `for`, `calloc`, `memset`, `memcpy`, array parameters).
CProgram parse_program(const std::vector<Token>& tokens);

/// Name resolution, typing and subset checks. Fills every `CExpr::type`
/// and makes implicit integer conversions explicit as casts.
CProgram resolve(CProgram program);

/// tokenize + parse_program + resolve.
CProgram parse_and_resolve(std::string_view source, const std::string& file = "<input>");

/// Renders a parsed program back to mini-C concrete syntax.
std::string print_c(const CProgram& program);

/// Signature of the output helpers every corpus program may call
/// (`print_u32`, `print_bytes`, ...). Returns nullptr for other names.
const CFunction* builtin_function(const std::string& name);

} // namespace c2r
