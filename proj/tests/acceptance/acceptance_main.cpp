// Acceptance run: one line per criterion, nonzero exit if any fails.

#include "c2r/c_frontend.hpp"
#include "c2r/harness.hpp"
#include "c2r/mutability.hpp"
#include "c2r/ownership.hpp"
#include "c2r/pipeline.hpp"
#include "c2r/rust_typing.hpp"
#include "c2r/symbolic.hpp"
#include "c2r/traits.hpp"

#include "support/split_oracle.hpp"
#include "support/trait_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace c2r;

namespace {

enum class Status { pass, fail, skipped };

struct Outcome {
    Status status = Status::pass;
    std::string detail;
};

Outcome pass(std::string d) { return {Status::pass, std::move(d)}; }
Outcome fail(std::string d) { return {Status::fail, std::move(d)}; }

fs::path corpus_root() { return fs::path(C2R_SOURCE_DIR) / "corpus"; }

std::string read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PipelineResult translate_case(const CorpusCase& c) {
    PipelineOptions o;
    if (c.config) {
        o.config_text = *c.config;
        o.config_file = (c.dir / "config.toml").string();
    }
    return run_pipeline(read_text(c.input), c.input.string(), o);
}

struct Translated {
    CorpusCase c;
    PipelineResult r;
};

/// Every corpus case expected to translate, with its pipeline result.
const std::vector<Translated>& translated_corpus() {
    static const std::vector<Translated> all = [] {
        std::vector<Translated> out;
        for (auto& c : load_corpus(corpus_root()))
            if (!c.expected_error) out.push_back({c, translate_case(c)});
        return out;
    }();
    return all;
}

fs::path scratch_dir() {
    std::string tmpl = (fs::temp_directory_path() / "c2r_accept_XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    return tmpl;
}

bool has_diag(const PipelineResult& r, const std::string& code, uint32_t line) {
    for (const auto& d : r.diagnostics)
        if (d.code == code && d.severity == Severity::error && d.loc.line == line) return true;
    return false;
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (ch != ' ' && ch != '\n') out += ch;
    return out;
}

// ---------------------------------------------------------------- 1

const char* kAbcdSource = R"(#include <stdint.h>

void run(void) {
    uint8_t abcd[32] = { 0 };
    uint8_t *a = abcd + 0;
    uint8_t *c = abcd + 16;
    uint8_t *b = abcd + 8;
    uint8_t *d = abcd + 24;
    a[0] = 1;
    b[0] = 2;
    c[0] = 3;
    d[0] = 4;
    print_bytes(abcd, 32);
}
)";

const char* kAbcdExpected = R"(pub fn run() {
    let mut abcd = [0u8; 32];
    let abcd: &mut [u8] = &mut abcd[..];
    let (a_l, a_r) = abcd.split_at_mut(0);
    let (c_l, c_r) = a_r.split_at_mut(16);
    let (b_l, b_r) = c_l.split_at_mut(8);
    let (d_l, d_r) = c_r.split_at_mut(8);
    b_l[0] = 1;
    b_r[0] = 2;
    d_l[0] = 3;
    d_r[0] = 4;
    print_bytes(abcd, 32)
}
)";

Outcome criterion_abcd() {
    PipelineResult r = run_pipeline(kAbcdSource, "abcd.c");
    if (r.exit_code != 0) return fail("translation failed");
    std::string got = normalize_fresh_names(r.rust);
    if (got != kAbcdExpected) return fail("listing differs:\n" + got);
    return pass("shadow + splits at 0/16/8/8; a,b,c,d -> b_l,b_r,d_l,d_r");
}

// ---------------------------------------------------------------- 2

const char* kStruct = "#include <stdint.h>\n#include <stdlib.h>\nstruct s { uint8_t *data; };\n";
const char* kOwned = "[ownership]\ns = \"owned\"\n";

PipelineResult translate_snippet(const std::string& body, bool owned) {
    PipelineOptions o;
    if (owned) o.config_text = kOwned;
    return run_pipeline(std::string(kStruct) + "void run(void) {\n" + body + "}\n", "triptych.c", o);
}

Outcome criterion_triptych() {
    std::vector<std::string> problems;
    struct Form {
        std::string name, body, form, reuse;
        bool owned;
    };
    std::vector<Form> forms = {
        {"heap", "    uint8_t *x = malloc(16 * sizeof(uint8_t));\n    struct s st = { .data = x };\n    st.data[0] = 1;\n",
         "vec![0u8;16].into_boxed_slice()", "", false},
        {"stack", "    uint8_t x[16] = { 0 };\n    struct s st = { .data = x };\n    st.data[0] = 1;\n", "Box::new(x)",
         "    print_u8(x[0]);\n", true},
        {"view", "    uint8_t x[16] = { 0 };\n    uint8_t *y = x;\n    struct s st = { .data = y };\n    st.data[0] = 1;\n",
         "(*y).into()", "    print_u8(y[0]);\n", true},
    };
    for (const auto& f : forms) {
        PipelineResult r = translate_snippet(f.body, f.owned);
        if (r.exit_code != 0) {
            problems.push_back(f.name + ": translation failed");
            continue;
        }
        if (strip_spaces(r.rust).find(strip_spaces(f.form)) == std::string::npos)
            problems.push_back(f.name + ": no " + f.form);
        if (f.reuse.empty()) continue;
        // Count the lines so the reuse site is known.
        uint32_t line = 5;
        for (char ch : f.body) line += ch == '\n';
        PipelineResult k = translate_snippet(f.body + f.reuse, f.owned);
        if (!has_diag(k, "use-after-move", line)) problems.push_back(f.name + ": source not killed");
    }
    struct Err {
        std::string dir;
        uint32_t line;
    };
    for (const auto& e : {Err{"err_assert_counterexample", 12}, Err{"err_move_struct", 20}}) {
        PipelineResult r = translate_case(load_case(corpus_root() / e.dir));
        if (!has_diag(r, "use-after-move", e.line))
            problems.push_back(e.dir + ": no use-after-move at line " + std::to_string(e.line));
    }
    if (!problems.empty()) {
        std::string s;
        for (const auto& p : problems) s += p + "; ";
        return fail(s);
    }
    return pass("3 forms, 2 kills, both counterexamples rejected with use-after-move");
}

// ---------------------------------------------------------------- 3

void walk_c(const CExpr& e, std::set<std::string>& rules, const CProgram& p) {
    switch (e.kind) {
    case CExpr::Kind::var: rules.insert("E-Var"); break;
    case CExpr::Kind::index: rules.insert("E-Index"); break;
    case CExpr::Kind::deref: rules.insert("E-Deref"); break;
    case CExpr::Kind::addr_of: rules.insert("E-AddrOf"); break;
    case CExpr::Kind::malloc: rules.insert("E-Heap"); break;
    case CExpr::Kind::call:
        if (p.find_function(e.name)) rules.insert("E-Call");
        break;
    default: break;
    }
    for (const auto& k : e.kids) walk_c(k, rules, p);
}

void walk_c(const std::vector<CStmt>& body, std::set<std::string>& rules, const CProgram& p) {
    for (const auto& s : body) {
        if (s.kind == CStmt::Kind::decl_array) rules.insert("E-Stack");
        for (const auto& e : s.exprs) walk_c(e, rules, p);
        walk_c(s.body, rules, p);
        walk_c(s.else_body, rules, p);
        walk_c(s.for_init, rules, p);
        walk_c(s.for_step, rules, p);
    }
}

void walk_rust(const RustExpr& e, TypeScope& scope, const RustProgram& p, std::set<std::string>& rules) {
    using K = RustExpr::Kind;
    switch (e.kind) {
    case K::array_to_slice: rules.insert("E-Array-Slice"); break;
    case K::box_new: rules.insert("E-Array-Box"); break;
    case K::method_call:
        if (e.name == "into") rules.insert("E-Slice-Box");
        break;
    case K::borrow: {
        auto t = type_of(e.kids[0], scope, p);
        if (t && t->is_box()) rules.insert("E-Box-Slice");
        break;
    }
    case K::let: {
        walk_rust(e.kids[0], scope, p, rules);
        auto t = e.ty ? e.ty : type_of(e.kids[0], scope, p);
        scope.push();
        if (t) scope.bind(e.name, *t);
        walk_rust(e.kids[1], scope, p, rules);
        scope.pop();
        return;
    }
    case K::let_tuple: {
        walk_rust(e.kids[0], scope, p, rules);
        auto t = e.ty ? e.ty : type_of(e.kids[0], scope, p);
        scope.push();
        if (t && t->is_tuple())
            for (std::size_t i = 0; i < e.names.size() && i < t->elems.size(); ++i) scope.bind(e.names[i], t->elems[i]);
        walk_rust(e.kids[1], scope, p, rules);
        scope.pop();
        return;
    }
    default: break;
    }
    for (const auto& k : e.kids) walk_rust(k, scope, p, rules);
}

Outcome criterion_no_unsafe() {
    const std::vector<std::string> every_rule = {"E-Var",   "E-Index",      "E-Deref",     "E-AddrOf",
                                                 "E-Call",  "E-Heap",       "E-Stack",     "E-Array-Slice",
                                                 "E-Box-Slice", "E-Array-Box", "E-Slice-Box"};
    std::set<std::string> rules, fallbacks, outcomes;
    bool tuples = false;
    std::size_t programs = 0, unsafe_hits = 0;
    std::string failures;
    for (const auto& [c, r] : translated_corpus()) {
        if (r.exit_code != 0) {
            failures += c.name + " ";
            continue;
        }
        ++programs;
        for (std::size_t at = r.rust.find("unsafe"); at != std::string::npos; at = r.rust.find("unsafe", at + 1))
            ++unsafe_hits;
        CProgram cp = parse_and_resolve(read_text(c.input), c.input.string());
        for (const auto& f : cp.functions) walk_c(f.body, rules, cp);
        for (const auto& f : r.program->fns) {
            TypeScope scope;
            for (const auto& [n, t] : f.params) scope.bind(n, t);
            walk_rust(f.body, scope, *r.program, rules);
        }
        for (const auto& d : r.diagnostics) {
            if (d.code != "split-fallback") continue;
            if (d.message.find("cannot be ordered") != std::string::npos) fallbacks.insert("insert");
            if (d.message.find("which slice") != std::string::npos) fallbacks.insert("lookup");
        }
        if (!r.program->tuple_aliases.empty()) tuples = true;
        OwnershipConfig cfg = c.config ? parse_config(*c.config) : OwnershipConfig{};
        for (const auto& [name, cls] : classify_structs(cp, cfg)) {
            if (cfg.tuple_structs.count(name)) continue;
            if (cfg.overrides.count(name)) outcomes.insert("owned by override");
            else outcomes.insert(cls == OwnershipClass::owned ? "owned by inference" : "borrowed");
        }
    }
    std::string missing;
    for (const auto& rule : every_rule)
        if (!rules.count(rule)) missing += rule + " ";
    if (fallbacks.size() != 2) missing += "fallback-path ";
    if (!tuples) missing += "tuple-lowering ";
    if (outcomes.size() != 3) missing += "ownership-outcome ";
    std::string detail = std::to_string(programs) + " programs, " + std::to_string(rules.size()) + " E-rules, " +
                         std::to_string(fallbacks.size()) + " fallback paths, tuples " + (tuples ? "yes" : "no") +
                         ", " + std::to_string(outcomes.size()) + " ownership outcomes, " +
                         std::to_string(unsafe_hits) + " unsafe";
    if (!failures.empty()) return fail(detail + "; failed to translate: " + failures);
    if (programs < 30 || !missing.empty() || unsafe_hits != 0) return fail(detail + "; missing: " + missing);
    return pass(detail);
}

// ---------------------------------------------------------------- 4

Outcome criterion_split_oracle() {
    using oracle::ReplayedTree;
    oracle::SplitCheck check;
    std::uint64_t sets = 0, sequences = 0;
    // No tree operation takes the array length, so checking every cell of a
    // 64-cell array also covers every shorter array with the same offsets.
    std::function<void(const ReplayedTree&, int64_t, int)> ascending = [&](const ReplayedTree& t, int64_t from, int depth) {
        t.check(check);
        ++sets;
        if (depth == 5) return;
        for (int64_t o = from; o <= 64; ++o) {
            ReplayedTree next = t;
            if (next.insert(o, check)) ascending(next, o + 1, depth + 1);
        }
    };
    ascending(ReplayedTree(64), 0, 0);
    // Insertion order matters for the tree shape: every order on a 16-cell array.
    std::function<void(const ReplayedTree&, unsigned, int)> ordered = [&](const ReplayedTree& t, unsigned used, int depth) {
        t.check(check);
        ++sequences;
        if (depth == 5) return;
        for (int64_t o = 0; o <= 16; ++o) {
            if (used & (1u << o)) continue;
            ReplayedTree next = t;
            if (next.insert(o, check)) ordered(next, used | (1u << o), depth + 1);
        }
    };
    ordered(ReplayedTree(16), 0, 0);
    std::string detail = std::to_string(sets) + " offset sets on 64 cells + " + std::to_string(sequences) +
                         " ordered sequences on 16 cells, " + std::to_string(check.cells) + " accesses, " +
                         std::to_string(check.mismatches) + " mismatches";
    if (check.mismatches) return fail(detail + "; " + check.first_failure);
    return pass(detail);
}

// ---------------------------------------------------------------- 5

struct RandomExpr {
    std::mt19937_64& rng;
    std::vector<std::string> vars{"n", "m", "k"};

    int64_t pick(int64_t lo, int64_t hi) { return std::uniform_int_distribution<int64_t>(lo, hi)(rng); }

    CExpr lit(int64_t v) {
        CExpr e;
        e.kind = CExpr::Kind::int_lit;
        e.value = static_cast<uint64_t>(v);
        return e;
    }
    CExpr var() {
        CExpr e;
        e.kind = CExpr::Kind::var;
        e.name = vars[static_cast<std::size_t>(pick(0, 2))];
        e.type = CType::make_base(BaseType::u32);
        return e;
    }
    CExpr bin(std::string op, CExpr l, CExpr r) {
        CExpr e;
        e.kind = CExpr::Kind::binop;
        e.op = std::move(op);
        e.kids = {std::move(l), std::move(r)};
        return e;
    }
    CExpr gen(int depth) {
        if (depth == 0) return pick(0, 1) ? var() : lit(pick(0, 20));
        switch (pick(0, 4)) {
        case 0: return bin("+", gen(depth - 1), gen(depth - 1));
        case 1: return bin("-", gen(depth - 1), gen(depth - 1));
        case 2: return bin("*", lit(pick(0, 4)), gen(depth - 1));
        case 3: return bin("*", gen(depth - 1), lit(pick(0, 4)));
        default: return gen(0);
        }
    }
};

int64_t eval_c(const CExpr& e, const std::map<std::string, int64_t>& env) {
    switch (e.kind) {
    case CExpr::Kind::int_lit: return static_cast<int64_t>(e.value);
    case CExpr::Kind::var: return env.at(e.name);
    case CExpr::Kind::binop: {
        int64_t l = eval_c(e.kids[0], env), r = eval_c(e.kids[1], env);
        if (e.op == "+") return l + r;
        if (e.op == "-") return l - r;
        return l * r;
    }
    default: throw std::logic_error("unexpected expression");
    }
}

Outcome criterion_solver() {
    std::mt19937_64 rng(20240917);
    RandomExpr gen{rng};
    std::uint64_t decided = 0, violations = 0, checks = 0;
    std::string first;
    for (int pair = 0; pair < 10000; ++pair) {
        CExpr a = gen.gen(static_cast<int>(gen.pick(0, 3)));
        // Half of the pairs share a prefix so that many are comparable.
        CExpr b = gen.pick(0, 1) ? gen.bin(gen.pick(0, 1) ? "+" : "-", a, gen.gen(static_cast<int>(gen.pick(0, 2))))
                                 : gen.gen(static_cast<int>(gen.pick(0, 3)));
        Ordering o = sym_compare(sym_normalize(a), sym_normalize(b));
        if (o == Ordering::unknown) continue;
        ++decided;
        for (int i = 0; i < 1000; ++i) {
            std::map<std::string, int64_t> env;
            for (const auto& v : gen.vars) env[v] = i % 4 == 0 ? gen.pick(0, 3) : gen.pick(0, 1000000);
            int64_t x = eval_c(a, env), y = eval_c(b, env);
            bool ok = o == Ordering::lt ? x < y : o == Ordering::gt ? x > y : x == y;
            ++checks;
            if (!ok) {
                ++violations;
                if (first.empty()) first = to_string(sym_normalize(a)) + " vs " + to_string(sym_normalize(b));
            }
        }
    }
    std::string detail = "10000 pairs, " + std::to_string(decided) + " decided, " + std::to_string(checks) +
                         " assignments, " + std::to_string(violations) + " violations";
    if (violations) return fail(detail + "; first: " + first);
    if (decided == 0) return fail(detail + "; nothing decided");
    return pass(detail);
}

// ---------------------------------------------------------------- 6

bool monotone(const std::vector<std::size_t>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[i - 1]) return false;
    return true;
}

Outcome criterion_mutability() {
    std::size_t programs = 0, qualifiers = 0;
    std::string problems;
    for (const auto& [c, r] : translated_corpus()) {
        if (!r.translated) continue;
        ++programs;
        RustProgram worklist = *r.translated, naive = *r.translated;
        MutTrace tw = infer_mutability(worklist);
        MutTrace tn = infer_mutability_naive(naive);
        if (!(worklist == naive)) problems += c.name + ": worklist != naive; ";
        if (!monotone(tw.qualifier_counts) || !monotone(tn.qualifier_counts)) problems += c.name + ": count drops; ";
        qualifiers += count_mut_qualifiers(worklist);
        RustProgram erased = worklist;
        erase_mutability(erased);
        if (!(erased == *r.translated)) problems += c.name + ": erasure differs; ";
    }
    std::string detail = std::to_string(programs) + " programs, " + std::to_string(qualifiers) + " inferred qualifiers";
    if (!problems.empty()) return fail(detail + "; " + problems);
    return pass(detail);
}

// ---------------------------------------------------------------- 7

RustType random_field(std::mt19937_64& rng, const std::vector<std::string>& names) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto leaf = [&]() {
        if (pick(0, 2) == 0) return RustType::named(names[static_cast<std::size_t>(pick(0, static_cast<int>(names.size()) - 1))]);
        static const char* bases[] = {"u8", "u32", "u64", "bool"};
        return RustType::base(bases[pick(0, 3)]);
    };
    switch (pick(0, 6)) {
    case 0: return RustType::slice(leaf(), false);
    case 1: return RustType::slice(leaf(), true);
    case 2: return RustType::boxed(leaf());
    case 3: return RustType::array(leaf(), static_cast<uint64_t>(pick(1, 4)));
    case 4: return RustType::tuple({leaf(), leaf()});
    default: return leaf();
    }
}

std::string compare_derives(const std::vector<RustStruct>& structs, const std::string& where) {
    RustProgram p;
    p.structs = structs;
    apply_derives(p, derive_traits(p));
    auto expected = oracle::brute_force_derives(structs);
    for (const auto& s : p.structs)
        if (s.derives != expected[s.name]) return where + " struct " + s.name;
    return {};
}

Outcome criterion_traits() {
    std::size_t corpus_structs = 0;
    std::string problems;
    for (const auto& [c, r] : translated_corpus()) {
        if (!r.program) continue;
        corpus_structs += r.program->structs.size();
        if (r.program->structs.empty()) continue;
        auto expected = oracle::brute_force_derives(r.program->structs);
        for (const auto& s : r.program->structs)
            if (s.derives != expected[s.name]) problems += c.name + "/" + s.name + " ";
    }
    std::mt19937_64 rng(7);
    for (int g = 0; g < 500; ++g) {
        int count = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<std::string> names;
        for (int i = 0; i < count; ++i) names.push_back("S" + std::to_string(i));
        std::vector<RustStruct> structs;
        for (const auto& n : names) {
            RustStruct s;
            s.name = n;
            int fields = std::uniform_int_distribution<int>(0, 5)(rng);
            for (int f = 0; f < fields; ++f) s.fields.emplace_back("f" + std::to_string(f), random_field(rng, names));
            structs.push_back(std::move(s));
        }
        std::string bad = compare_derives(structs, "graph " + std::to_string(g));
        if (!bad.empty()) problems += bad + " ";
    }
    std::string detail = std::to_string(corpus_structs) + " corpus structs + 500 random graphs";
    if (!problems.empty()) return fail(detail + "; disagree: " + problems);
    return pass(detail);
}

// ---------------------------------------------------------------- 8

Outcome criterion_differential() {
    Toolchains tc = detect_toolchains();
    if (!tc.complete()) return {Status::skipped, "C or Rust toolchain not found"};
    HarnessOptions opts;
    auto results = run_corpus(load_corpus(corpus_root()), tc, opts);
    std::size_t compared = 0;
    std::string failures;
    for (const auto& r : results) {
        if (r.verdict == Verdict::fail) failures += r.name + " ";
        if (r.verdict == Verdict::pass) ++compared;
    }
    if (!failures.empty()) return fail("corpus failures: " + failures);

    fs::path work = scratch_dir();
    std::size_t flips = 0, accepted = 0;
    std::string survivors;
    for (const auto& [c, r] : translated_corpus()) {
        if (!r.program) continue;
        for (const auto& site : mut_sites(*r.program)) {
            RustProgram flipped = flip_mut(*r.program, site);
            ProcessResult pr = compile_rust(tc, pretty_print(flipped), work, true);
            ++flips;
            if (pr.exit_code == 0) {
                ++accepted;
                survivors += c.name + "/" + flipped.fns[site.fn].name + " ";
            }
        }
    }
    fs::remove_all(work);
    std::string detail = std::to_string(compared) + " cases byte-identical, " + std::to_string(flips) +
                         " single-mut flips, " + std::to_string(accepted) + " accepted by rustc";
    if (flips < 20) return fail(detail + "; fewer than 20 flips");
    if (accepted) return fail(detail + "; unnecessary mut in " + survivors);
    return pass(detail);
}

// ---------------------------------------------------------------- 9

Outcome criterion_fallback() {
    std::string input = (corpus_root() / "fallback_insert" / "input.c").string();
    ProcessResult lax = run_process({C2R_CLI_PATH, input});
    ProcessResult strict = run_process({C2R_CLI_PATH, "--strict-splits", input});
    std::size_t warnings = 0;
    for (std::size_t at = lax.err.find("warning[split-fallback]"); at != std::string::npos;
         at = lax.err.find("warning[split-fallback]", at + 1))
        ++warnings;
    std::string detail = "default: exit " + std::to_string(lax.exit_code) + ", " + std::to_string(warnings) +
                         " warning(s); --strict-splits: exit " + std::to_string(strict.exit_code);
    if (lax.exit_code != 0 || warnings != 1 || strict.exit_code != 1) return fail(detail);
    return pass(detail);
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "abcd listing", 1, criterion_abcd},
        {2, "triptych and use-after-move", 1, criterion_triptych},
        {3, "no unsafe in corpus output", 10, criterion_no_unsafe},
        {4, "split-tree oracle", 60, criterion_split_oracle},
        {5, "solver soundness", 30, criterion_solver},
        {6, "mutability fixpoint", 30, criterion_mutability},
        {7, "trait derivation", 30, criterion_traits},
        {8, "differential suite and mut minimality", 300, criterion_differential},
        {9, "split fallback", 1, criterion_fallback},
    };
    bool any_failed = false;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.status == Status::pass && secs > c.budget_s) {
            o.status = Status::fail;
            o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
        }
        const char* label = o.status == Status::pass ? "PASS" : o.status == Status::fail ? "FAIL" : "SKIPPED";
        std::printf("criterion %d %-40s %-7s %7.2fs  %s\n", c.id, c.name, label, secs, o.detail.c_str());
        std::fflush(stdout);
        any_failed = any_failed || o.status == Status::fail;
    }
    return any_failed ? 1 : 0;
}
