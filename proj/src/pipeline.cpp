#include "c2r/pipeline.hpp"

#include "c2r/c_frontend.hpp"
#include "c2r/checker.hpp"
#include "c2r/cleanup.hpp"
#include "c2r/mutability.hpp"
#include "c2r/ownership.hpp"
#include "c2r/traits.hpp"
#include "c2r/translate.hpp"

namespace c2r {

int exit_code_for(const Diagnostic& d) {
    if (d.severity != Severity::error) return 0;
    return is_internal_code(d.code) ? 2 : 1;
}

PipelineResult run_pipeline(std::string_view source, const std::string& file, const PipelineOptions& options) {
    PipelineResult out;
    DiagnosticSink sink;
    if (options.strict_splits) sink.escalate.push_back("split-fallback");
    try {
        CProgram program = parse_and_resolve(source, file);
        OwnershipConfig config;
        if (!options.config_text.empty()) config = parse_config(options.config_text, options.config_file);
        validate_config(config, program);
        StructTable table = make_struct_table(program, classify_structs(program, config));

        TranslateInput input;
        input.program = &program;
        input.structs = &table;
        input.fresh = fresh_returning_functions(program);
        input.tuple_structs = config.tuple_structs;
        RustProgram rust = translate_program(input, sink);

        std::set<std::string> tuple_names;
        for (const auto& n : config.tuple_structs) tuple_names.insert(rust_struct_name(n));
        lower_to_tuple(rust, tuple_names);
        out.translated = rust;

        if (options.all_mut) make_all_mut(rust);
        else infer_mutability(rust);
        apply_derives(rust, derive_traits(rust));
        if (!options.no_cleanup) cleanup_program(rust);

        for (const auto& d : check_program(rust)) sink.add(d.to_diagnostic());
        out.program = rust;
        out.diagnostics = sink.diagnostics();
        for (const auto& d : out.diagnostics) out.exit_code = std::max(out.exit_code, exit_code_for(d));
        if (out.exit_code == 0) out.rust = pretty_print(rust);
    } catch (const CompileError& e) {
        out.diagnostics = sink.diagnostics();
        out.diagnostics.push_back(e.diagnostic());
        out.exit_code = exit_code_for(e.diagnostic());
    } catch (const std::exception& e) {
        out.diagnostics = sink.diagnostics();
        out.diagnostics.push_back({Severity::error, "internal", {file, 1, 1}, e.what()});
        out.exit_code = 2;
    }
    return out;
}

} // namespace c2r
