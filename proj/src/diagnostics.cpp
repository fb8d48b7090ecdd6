#include "c2r/diagnostics.hpp"

#include <algorithm>

namespace c2r {

namespace {

const char* severity_name(Severity s) {
    switch (s) {
    case Severity::error: return "error";
    case Severity::warning: return "warning";
    case Severity::note: return "note";
    }
    return "error";
}

} // namespace

std::string Diagnostic::format() const {
    std::string out = severity_name(severity);
    out += '[' + code + "] ";
    out += loc.file.empty() ? std::string("<input>") : loc.file;
    out += ':' + std::to_string(loc.line) + ':' + std::to_string(loc.column) + ": ";
    out += message;
    return out;
}

bool is_internal_code(const std::string& code) {
    return code == "internal" || code == "type-mismatch";
}

CompileError::CompileError(Diagnostic d)
    : std::runtime_error(d.format()), diag_(std::move(d)) {}

CompileError::CompileError(std::string code, SourceLoc loc, std::string message)
    : CompileError(Diagnostic{Severity::error, std::move(code), std::move(loc), std::move(message)}) {}

void DiagnosticSink::warn(std::string code, SourceLoc loc, std::string message) {
    if (std::find(escalate.begin(), escalate.end(), code) != escalate.end())
        throw CompileError(std::move(code), std::move(loc), std::move(message));
    diags_.push_back({Severity::warning, std::move(code), std::move(loc), std::move(message)});
}

std::size_t DiagnosticSink::count(const std::string& code) const {
    return static_cast<std::size_t>(std::count_if(diags_.begin(), diags_.end(),
        [&](const Diagnostic& d) { return d.code == code; }));
}

} // namespace c2r
