#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace c2r {

struct SourceLoc {
    std::string file;
    uint32_t line = 1;
    uint32_t column = 1;

    bool operator==(const SourceLoc&) const = default;
};

enum class Severity { error, warning, note };

/// A single compiler message. `code` is a stable kebab-case identifier
/// (e.g. `use-after-move`, `split-fallback`) used by tooling and tests.
struct Diagnostic {
    Severity severity = Severity::error;
    std::string code;
    SourceLoc loc;
    std::string message;

    /// `severity[code] file:line:col: message`
    std::string format() const;
};

/// Error codes that signal a bug in the translator rather than in the input.
bool is_internal_code(const std::string& code);

/// Thrown by any pipeline stage on a fatal error in the input program.
class CompileError : public std::runtime_error {
public:
    explicit CompileError(Diagnostic d);
    CompileError(std::string code, SourceLoc loc, std::string message);

    const Diagnostic& diagnostic() const { return diag_; }

private:
    Diagnostic diag_;
};

/// Collects non-fatal diagnostics. When `escalate` names a code, reporting a
/// warning with that code throws instead.
class DiagnosticSink {
public:
    void warn(std::string code, SourceLoc loc, std::string message);
    void add(Diagnostic d) { diags_.push_back(std::move(d)); }

    const std::vector<Diagnostic>& diagnostics() const { return diags_; }
    std::size_t count(const std::string& code) const;

    std::vector<std::string> escalate;

private:
    std::vector<Diagnostic> diags_;
};

} // namespace c2r
