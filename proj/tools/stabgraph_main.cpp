// Command-line front end: convert a stabilizer code to its graph code, verify
// detection conditions, cross-check against the dense oracle, export records.
//
// Exit codes: 0 verified/agrees, 1 verification failed, 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stabgraph/pipeline.hpp"

namespace fs = std::filesystem;
using namespace stabgraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error("cannot write " + path.string());
    f << contents;
}

PipelineRecord load_record(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw ParseError("cannot open record file: " + path);
    nlohmann::json j;
    f >> j;
    return record_from_json(j);
}

// A verification input is either a record JSON or a bare Xi matrix file.
CoincidenceMatrix load_xi_any(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw ParseError("cannot open file: " + path);
    char first = 0;
    f >> first;
    f.seekg(0);
    if (first == '{') {
        nlohmann::json j;
        f >> j;
        return record_from_json(j).xi;
    }
    return xi_from_matrix_text(f);
}

int cmd_convert(const std::string& code_path, const std::string& out_dir,
                const PipelineOptions& opts) {
    StabilizerCode code = load_code_file(code_path);
    PipelineRecord rec = run_pipeline(code, opts);

    fs::path dir(out_dir);
    fs::create_directories(dir);
    write_file(dir / "record.json", record_to_json(rec).dump(2) + "\n");
    write_file(dir / "xi.txt", xi_to_matrix_text(rec.xi));
    write_file(dir / "xi.dot", xi_to_dot(rec.xi));
    CoincidenceMatrix gamma_only(Graph(rec.gamma), BitMatrix(0, rec.code.n), {});
    write_file(dir / "gamma.txt", xi_to_matrix_text(gamma_only));

    std::cout << "[[" << code.n << "," << code.k << "]] code converted\n";
    std::cout << "hadamard set (1-based):";
    for (int h : rec.hadamard_set)
        std::cout << " " << (h + 1);
    std::cout << "\nlc sequence (1-based):";
    for (int v : rec.lc_sequence)
        std::cout << " " << (v + 1);
    std::cout << "\nconditions: i=" << (rec.conditions.cond_i ? "yes" : "no")
              << " ii=" << (rec.conditions.cond_ii ? "yes" : "no")
              << " iii=" << (rec.conditions.cond_iii ? "yes" : "no")
              << (rec.conditions_enforced ? "" : "  (structural attachment)") << "\n";
    std::cout << "wrote " << (dir / "record.json").string() << ", xi.txt, xi.dot, gamma.txt\n";
    return kExitOk;
}

int cmd_verify(const std::string& xi_path, int e, Mode mode, const std::string& out_dir,
               int threads) {
    CoincidenceMatrix xi = load_xi_any(xi_path);
    DetectionReport rep = verify_correction(xi, e, mode, threads);
    std::cout << rep.table();
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_file(fs::path(out_dir) / "detection.json",
                   detection_report_to_json(rep).dump(2) + "\n");
    }
    return rep.all_detected ? kExitOk : kExitVerificationFailed;
}

int cmd_crosscheck(const std::string& code_path, int e, const PipelineOptions& opts,
                   const std::string& out_dir) {
    StabilizerCode code = load_code_file(code_path);
    if (code.n > opts.oracle_cap)
        throw TooManyQubitsError("code has " + std::to_string(code.n) +
                                 " qubits; raise --oracle-cap (currently " +
                                 std::to_string(opts.oracle_cap) + ")");
    PipelineRecord rec = run_pipeline(code, opts);
    CodeSpace cs = record_codespace(rec);
    AgreementReport rep = cross_validate(rec.xi, cs, e, opts.threads);
    std::cout << rep.table();
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_file(fs::path(out_dir) / "agreement.json",
                   agreement_report_to_json(rep).dump(2) + "\n");
    }
    return rep.disagreements == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_export(const std::string& record_path, const std::string& format,
               const std::string& out_path) {
    PipelineRecord rec = load_record(record_path);
    std::string payload;
    if (format == "dot")
        payload = xi_to_dot(rec.xi);
    else if (format == "json")
        payload = record_to_json(rec).dump(2) + "\n";
    else if (format == "matrix")
        payload = xi_to_matrix_text(rec.xi);
    else
        throw FormatError("unknown export format: " + format);
    if (out_path.empty())
        std::cout << payload;
    else
        write_file(out_path, payload);
    return kExitOk;
}

// Small randomized invariant sweep, mostly useful for bug reports.
int cmd_selftest(unsigned seed, int cases) {
    std::mt19937_64 rng(seed);
    auto random_graph = [&](int nmin, int nmax) {
        std::uniform_int_distribution<int> nd(nmin, nmax);
        int nq = nd(rng);
        BitMatrix adj(nq, nq);
        for (int i = 0; i < nq; ++i)
            for (int j = i + 1; j < nq; ++j)
                if (rng() & 1) {
                    adj.set(i, j, true);
                    adj.set(j, i, true);
                }
        return Graph(std::move(adj));
    };
    for (int c = 0; c < cases; ++c) {
        Graph g = random_graph(2, 8);
        std::uniform_int_distribution<int> vd(0, g.n() - 1);
        int v = vd(rng);
        if (local_complement(local_complement(g, v), v) != g) {
            std::cout << "FAIL: LC involution\n";
            return kExitVerificationFailed;
        }
        BitMatrix m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                m.set(i, j, rng() & 1);
        if (rank(m) + kernel(m).size() != 4) {
            std::cout << "FAIL: rank-nullity\n";
            return kExitVerificationFailed;
        }
    }
    std::cout << "selftest ok (" << cases << " cases, seed " << seed << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph codes from binary stabilizer codes"};
    app.require_subcommand(1);

    PipelineOptions opts;
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for per-configuration checks")
        ->capture_default_str();
    int oracle_cap = kDefaultOracleCap;
    app.add_option("--oracle-cap", oracle_cap, "max qubits for the dense oracle")
        ->capture_default_str();
    unsigned seed = 0;
    app.add_option("--seed", seed, "seed for the randomized self-test harness")
        ->capture_default_str();

    auto* conv = app.add_subcommand("convert", "stabilizer code -> graph code (steps 1-3)");
    std::string code_path, out_dir = "out";
    conv->add_option("code", code_path, "code definition file")->required();
    conv->add_option("--out", out_dir, "output directory")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "graph-theoretic detection check (step 4)");
    std::string xi_path, ver_out;
    int e = 1;
    std::string mode_str = "strong";
    ver->add_option("xi", xi_path, "coincidence matrix file or record JSON")->required();
    ver->add_option("--e", e, "errors to correct (checks all |E| <= 2e)")
        ->capture_default_str();
    ver->add_option("--mode", mode_str, "strong|weak")
        ->check(CLI::IsMember({"strong", "weak"}))
        ->capture_default_str();
    ver->add_option("--out", ver_out, "directory for the JSON report");

    auto* cross = app.add_subcommand("crosscheck", "pipeline + state-vector oracle agreement");
    std::string cross_code, cross_out;
    int cross_e = 1;
    cross->add_option("code", cross_code, "code definition file")->required();
    cross->add_option("--e", cross_e, "errors to correct")->capture_default_str();
    cross->add_option("--out", cross_out, "directory for the JSON report");

    auto* exp = app.add_subcommand("export", "re-export a recorded conversion");
    std::string rec_path, format = "dot", exp_out;
    exp->add_option("record", rec_path, "record JSON from convert")->required();
    exp->add_option("--format", format, "dot|json|matrix")->capture_default_str();
    exp->add_option("--out", exp_out, "output file (stdout when omitted)");

    auto* st = app.add_subcommand("selftest", "randomized invariant sweep");
    int st_cases = 200;
    st->add_option("--cases", st_cases, "number of random cases")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    opts.oracle_cap = oracle_cap;
    opts.threads = threads;
    try {
        if (conv->parsed())
            return cmd_convert(code_path, out_dir, opts);
        if (ver->parsed())
            return cmd_verify(xi_path, e, mode_str == "strong" ? Mode::strong : Mode::weak,
                              ver_out, threads);
        if (cross->parsed())
            return cmd_crosscheck(cross_code, cross_e, opts, cross_out);
        if (exp->parsed())
            return cmd_export(rec_path, format, exp_out);
        if (st->parsed())
            return cmd_selftest(seed, st_cases);
    } catch (const ParseError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const FormatError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const TooManyQubitsError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
