#include "c2r/harness.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fcntl.h>
#include <fstream>
#include <mutex>
#include <regex>
#include <signal.h>
#include <sstream>
#include <sys/wait.h>
#include <thread>
#include <unistd.h>

namespace c2r {

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

fs::path make_temp_dir(const std::string& hint) {
    std::string tmpl = (fs::temp_directory_path() / ("c2r-" + hint + "-XXXXXX")).string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    if (!mkdtemp(buf.data())) throw std::runtime_error("cannot create temporary directory");
    return fs::path(buf.data());
}

bool runs(const std::string& tool) {
    ProcessResult r = run_process({tool, "--version"}, {}, 30);
    return r.exit_code == 0;
}

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v && *v ? std::string(v) : fallback;
}

} // namespace

ProcessResult run_process(const std::vector<std::string>& argv, const std::string& stdin_text, int timeout_s) {
    ProcessResult result;
    fs::path dir = make_temp_dir("proc");
    fs::path in = dir / "stdin", out = dir / "stdout", err = dir / "stderr";
    write_file(in, stdin_text);
    pid_t pid = fork();
    if (pid < 0) {
        fs::remove_all(dir);
        result.err = "fork failed";
        return result;
    }
    if (pid == 0) {
        int fi = open(in.c_str(), O_RDONLY);
        int fo = open(out.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
        int fe = open(err.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
        dup2(fi, 0);
        dup2(fo, 1);
        dup2(fe, 2);
        setpgid(0, 0);
        std::vector<char*> args;
        for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
        args.push_back(nullptr);
        execvp(args[0], args.data());
        _exit(127);
    }
    auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(timeout_s);
    int status = 0;
    bool timed_out = false;
    while (true) {
        pid_t w = waitpid(pid, &status, WNOHANG);
        if (w == pid) break;
        if (std::chrono::steady_clock::now() > deadline) {
            kill(-pid, SIGKILL);
            kill(pid, SIGKILL);
            waitpid(pid, &status, 0);
            timed_out = true;
            break;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
    if (timed_out) result.exit_code = 124;
    else if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    else result.exit_code = 128 + WTERMSIG(status);
    result.out = read_file(out);
    result.err = read_file(err);
    fs::remove_all(dir);
    return result;
}

Toolchains detect_toolchains() {
    Toolchains tc;
    std::string cc = env_or("C2R_CC", "cc");
    std::string rustc = env_or("C2R_RUSTC", "rustc");
    if (runs(cc)) tc.cc = cc;
    if (runs(rustc)) tc.rustc = rustc;
    return tc;
}

fs::path runtime_dir() {
    const char* v = std::getenv("C2R_RUNTIME_DIR");
    if (v && *v) return v;
    return fs::path(C2R_SOURCE_DIR) / "runtime";
}

std::string with_rust_runtime(const std::string& rust) {
    return rust + "\n" + read_file(runtime_dir() / "c2r_runtime.rs");
}

ProcessResult compile_rust(const Toolchains& tc, const std::string& source, const fs::path& work, bool metadata_only) {
    fs::path src = work / "main.rs";
    write_file(src, with_rust_runtime(source));
    std::vector<std::string> argv = {tc.rustc, "--edition", "2021", "-A", "warnings", "--crate-name", "c2r_case"};
    if (metadata_only) {
        argv.insert(argv.end(), {"--emit=metadata", "--out-dir", (work / "meta").string()});
    } else {
        argv.insert(argv.end(), {"-o", (work / "rust.bin").string()});
    }
    argv.push_back(src.string());
    return run_process(argv, {}, 300);
}

ProcessResult compile_c(const Toolchains& tc, const fs::path& c_file, const fs::path& work) {
    fs::path rt = runtime_dir();
    return run_process({tc.cc, "-std=c11", "-O0", "-w", "-I", rt.string(), "-include", (rt / "c2r_runtime.h").string(),
                        c_file.string(), "-o", (work / "c.bin").string()},
                       {}, 300);
}

std::string normalize_fresh_names(const std::string& rust) {
    static const std::regex fresh(R"(\b([A-Za-z_][A-Za-z0-9_]*_[lr])[0-9]+\b)");
    return std::regex_replace(rust, fresh, "$1");
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "Pass";
    case Verdict::fail: return "Fail";
    case Verdict::skipped: return "Skipped";
    case Verdict::expected_panic: return "ExpectedPanic";
    }
    return "?";
}

CorpusCase load_case(const fs::path& dir) {
    CorpusCase c;
    c.name = dir.filename().string();
    c.dir = dir;
    c.input = dir / "input.c";
    if (!fs::is_regular_file(c.input))
        throw CompileError("config-error", {dir.string(), 1, 1}, "corpus case '" + c.name + "' has no input.c");
    auto opt = [&](const char* f) -> std::optional<std::string> {
        fs::path p = dir / f;
        if (fs::is_regular_file(p)) return read_file(p);
        return std::nullopt;
    };
    if (fs::is_regular_file(dir / "golden.rs")) c.golden = dir / "golden.rs";
    c.stdin_text = opt("stdin");
    c.expected_stdout = opt("expected_stdout");
    c.config = opt("config.toml");
    if (auto e = opt("expected_error")) {
        std::string code = *e;
        while (!code.empty() && std::isspace(static_cast<unsigned char>(code.back()))) code.pop_back();
        if (code.empty())
            throw CompileError("config-error", {(dir / "expected_error").string(), 1, 1},
                               "corpus case '" + c.name + "' has an empty expected_error");
        c.expected_error = code;
    }
    c.expect_panic = fs::exists(dir / "expect_panic");
    if (c.expected_error && (c.golden || c.expect_panic))
        throw CompileError("config-error", {dir.string(), 1, 1},
                           "corpus case '" + c.name + "' expects a translation error but also has golden/panic files");
    return c;
}

std::vector<CorpusCase> load_corpus(const fs::path& root) {
    std::vector<CorpusCase> out;
    if (!fs::is_directory(root)) return out;
    std::vector<fs::path> dirs;
    for (const auto& e : fs::directory_iterator(root))
        if (e.is_directory()) dirs.push_back(e.path());
    std::sort(dirs.begin(), dirs.end());
    for (const auto& d : dirs) out.push_back(load_case(d));
    return out;
}

namespace {

std::string first_difference(const std::string& a, const std::string& b) {
    std::istringstream sa(a), sb(b);
    std::string la, lb;
    for (int line = 1;; ++line) {
        bool ga = static_cast<bool>(std::getline(sa, la));
        bool gb = static_cast<bool>(std::getline(sb, lb));
        if (!ga && !gb) return "outputs differ in trailing bytes";
        if (!ga || !gb || la != lb)
            return "line " + std::to_string(line) + ": expected '" + (ga ? la : "<eof>") + "', got '" + (gb ? lb : "<eof>") + "'";
    }
}

std::string diagnostics_text(const PipelineResult& r) {
    std::string s;
    for (const auto& d : r.diagnostics) s += d.format() + "\n";
    return s;
}

} // namespace

CaseResult run_case(const CorpusCase& c, const Toolchains& tc, const HarnessOptions& options) {
    CaseResult res{c.name, Verdict::skipped, {}};
    PipelineOptions po;
    if (c.config) {
        po.config_text = *c.config;
        po.config_file = (c.dir / "config.toml").string();
    }
    PipelineResult pr = run_pipeline(read_file(c.input), c.input.string(), po);

    if (c.expected_error) {
        bool hit = false;
        for (const auto& d : pr.diagnostics)
            if (d.severity == Severity::error && d.code == *c.expected_error) hit = true;
        res.verdict = hit && pr.exit_code != 0 ? Verdict::pass : Verdict::fail;
        res.detail = hit ? "rejected with " + *c.expected_error : "expected error " + *c.expected_error + ", got:\n" + diagnostics_text(pr);
        return res;
    }
    if (pr.exit_code != 0) {
        res.verdict = Verdict::fail;
        res.detail = "translation failed:\n" + diagnostics_text(pr);
        return res;
    }
    if (pr.rust.find("unsafe") != std::string::npos) {
        res.verdict = Verdict::fail;
        res.detail = "output contains unsafe";
        return res;
    }
    if (options.bless) {
        write_file(c.dir / "golden.rs", pr.rust);
    } else if (c.golden) {
        std::string want = normalize_fresh_names(read_file(*c.golden));
        std::string got = normalize_fresh_names(pr.rust);
        if (want != got) {
            res.verdict = Verdict::fail;
            res.detail = "golden mismatch, " + first_difference(want, got);
            return res;
        }
    }
    if (!options.differential) {
        res.verdict = c.golden || options.bless ? Verdict::pass : Verdict::skipped;
        res.detail = c.golden ? "golden match" : "differential run disabled";
        return res;
    }
    if (!tc.complete()) {
        res.verdict = Verdict::skipped;
        res.detail = std::string(c.golden ? "golden match; " : "") + "C or Rust toolchain missing";
        return res;
    }

    fs::path work = make_temp_dir(c.name);
    struct Cleanup {
        fs::path p;
        ~Cleanup() { std::error_code ec; fs::remove_all(p, ec); }
    } cleanup{work};

    ProcessResult cc = compile_c(tc, c.input, work);
    if (cc.exit_code != 0) {
        res.verdict = Verdict::fail;
        res.detail = "C compilation failed:\n" + cc.err;
        return res;
    }
    ProcessResult rc = compile_rust(tc, pr.rust, work);
    if (rc.exit_code != 0) {
        res.verdict = Verdict::fail;
        res.detail = "Rust compilation failed:\n" + rc.err;
        return res;
    }
    std::string input = c.stdin_text.value_or("");
    ProcessResult crun = run_process({(work / "c.bin").string()}, input, 60);
    ProcessResult rrun = run_process({(work / "rust.bin").string()}, input, 60);
    if (c.expect_panic) {
        bool panicked = rrun.exit_code == 101 && rrun.err.find("panicked") != std::string::npos;
        res.verdict = panicked ? Verdict::expected_panic : Verdict::fail;
        res.detail = panicked ? "Rust binary panicked as expected" : "expected a panic, Rust exited with " + std::to_string(rrun.exit_code);
        return res;
    }
    if (crun.exit_code != 0 || rrun.exit_code != 0) {
        res.verdict = Verdict::fail;
        res.detail = "exit codes: C " + std::to_string(crun.exit_code) + ", Rust " + std::to_string(rrun.exit_code) + "\n" + rrun.err;
        return res;
    }
    if (c.expected_stdout && *c.expected_stdout != crun.out) {
        res.verdict = Verdict::fail;
        res.detail = "C output differs from expected_stdout, " + first_difference(*c.expected_stdout, crun.out);
        return res;
    }
    if (crun.out != rrun.out) {
        res.verdict = Verdict::fail;
        res.detail = "stdout differs, " + first_difference(crun.out, rrun.out);
        return res;
    }
    res.verdict = Verdict::pass;
    res.detail = std::to_string(crun.out.size()) + " bytes of identical output";
    return res;
}

std::vector<CaseResult> run_corpus(const std::vector<CorpusCase>& cases, const Toolchains& tc, const HarnessOptions& options) {
    std::vector<CaseResult> results(cases.size());
    unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            try {
                results[i] = run_case(cases[i], tc, options);
            } catch (const std::exception& e) {
                results[i] = {cases[i].name, Verdict::fail, std::string("harness error: ") + e.what()};
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

std::string summary_json(const std::vector<CaseResult>& results) {
    nlohmann::json j;
    std::map<std::string, int> counts = {{"Pass", 0}, {"Fail", 0}, {"Skipped", 0}, {"ExpectedPanic", 0}};
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& r : results) {
        ++counts[to_string(r.verdict)];
        cases.push_back({{"name", r.name}, {"verdict", to_string(r.verdict)}, {"detail", r.detail}});
    }
    j["counts"] = counts;
    j["total"] = results.size();
    j["cases"] = std::move(cases);
    return j.dump(2) + "\n";
}

std::string summary_text(const std::vector<CaseResult>& results) {
    std::size_t width = 4;
    for (const auto& r : results) width = std::max(width, r.name.size());
    std::ostringstream out;
    std::map<Verdict, int> counts;
    for (const auto& r : results) {
        ++counts[r.verdict];
        std::string first_line = r.detail.substr(0, r.detail.find('\n'));
        out << r.name << std::string(width - r.name.size() + 2, ' ') << to_string(r.verdict);
        if (!first_line.empty()) out << "  " << first_line;
        out << "\n";
    }
    out << results.size() << " cases: " << counts[Verdict::pass] << " Pass, " << counts[Verdict::fail] << " Fail, "
        << counts[Verdict::skipped] << " Skipped, " << counts[Verdict::expected_panic] << " ExpectedPanic\n";
    return out.str();
}

namespace {

using K = RustExpr::Kind;

bool printed_mut_flag(const RustExpr& e) {
    if (!e.mut_) return false;
    switch (e.kind) {
    case K::let:
    case K::borrow:
    case K::slice_from_ref: return true;
    case K::method_call: return e.name == "split_at";
    default: return false;
    }
}

template <class F>
void preorder(RustExpr& e, std::size_t& i, F&& f) {
    f(e, i++);
    for (auto& k : e.kids) preorder(k, i, f);
}

} // namespace

std::vector<MutSite> mut_sites(const RustProgram& program) {
    std::vector<MutSite> out;
    for (std::size_t f = 0; f < program.fns.size(); ++f) {
        const RustFn& fn = program.fns[f];
        RustExpr body = fn.body;
        std::size_t i = 0;
        preorder(body, i, [&](RustExpr& e, std::size_t idx) {
            if (printed_mut_flag(e)) out.push_back({f, MutSite::Kind::expr_flag, idx});
            if (e.kind == K::let && e.ty && e.ty->is_slice() && e.ty->mut_) out.push_back({f, MutSite::Kind::let_type, idx});
        });
        for (std::size_t p = 0; p < fn.params.size(); ++p) {
            if (fn.params[p].second.is_slice() && fn.params[p].second.mut_) out.push_back({f, MutSite::Kind::param_type, p});
            if (p < fn.mut_params.size() && fn.mut_params[p]) out.push_back({f, MutSite::Kind::param_binding, p});
        }
        if (fn.ret.is_slice() && fn.ret.mut_) out.push_back({f, MutSite::Kind::ret_type, 0});
    }
    return out;
}

RustProgram flip_mut(const RustProgram& program, const MutSite& site) {
    RustProgram p = program;
    RustFn& fn = p.fns.at(site.fn);
    switch (site.kind) {
    case MutSite::Kind::expr_flag:
    case MutSite::Kind::let_type: {
        std::size_t i = 0;
        preorder(fn.body, i, [&](RustExpr& e, std::size_t idx) {
            if (idx != site.index) return;
            if (site.kind == MutSite::Kind::expr_flag) e.mut_ = false;
            else e.ty->mut_ = false;
        });
        break;
    }
    case MutSite::Kind::param_type: fn.params.at(site.index).second.mut_ = false; break;
    case MutSite::Kind::param_binding: fn.mut_params.at(site.index) = false; break;
    case MutSite::Kind::ret_type: fn.ret.mut_ = false; break;
    }
    return p;
}

} // namespace c2r
