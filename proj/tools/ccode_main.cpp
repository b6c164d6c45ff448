// Command-line workbench for circuit codes: verification, sequence rewrites,
// the bound table and the embedded corpus.
//
// Exit codes: 0 success / property holds; 1 verification violation;
// 2 usage error; 3 parse or I/O error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ccode/bounds.hpp"
#include "ccode/code_io.hpp"
#include "ccode/constructions.hpp"
#include "ccode/corpus.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot write '" + path + "'");
    out << payload;
}

ccode::CircuitCode load_code(const std::string& path) {
    return ccode::parse_code_file(read_file(path));
}

std::string witness_line(const ccode::SpreadWitness& w) {
    // vertex indices are printed 1-based, matching the file format
    std::ostringstream os;
    os << "witness pair (" << w.i + 1 << ", " << w.j + 1 << "): cycle distance "
       << w.cycle_distance << ", hypercube distance " << w.hypercube_distance;
    return os.str();
}

// --table-range N0:N1:K0:K1
ccode::GridRange parse_range(const std::string& text) {
    ccode::GridRange r;
    if (text.empty()) return r;
    int fields[4];
    char sep[3];
    std::istringstream is(text);
    if (!(is >> fields[0] >> sep[0] >> fields[1] >> sep[1] >> fields[2] >> sep[2] >> fields[3]) ||
        sep[0] != ':' || sep[1] != ':' || sep[2] != ':' || !(is >> std::ws).eof())
        throw IoFailure("bad --table-range, expected N0:N1:K0:K1");
    r.n_lo = fields[0];
    r.n_hi = fields[1];
    r.k_lo = fields[2];
    r.k_hi = fields[3];
    return r;
}

std::string render_table(const ccode::BoundTable& table, const std::string& format) {
    return format == "text" ? ccode::export_table_text(table) : ccode::export_table_csv(table);
}

int cmd_verify(const std::string& file, int k) {
    ccode::CircuitCode code = load_code(file);
    std::cout << "code: n=" << code.dimension() << " k=" << code.claimed_spread()
              << " N=" << code.length() << "\n";
    ccode::SpreadVerdict simple = ccode::is_simple_cycle(code.seq(), code.dimension());
    if (!simple.holds) {
        std::cout << "simple cycle: NO -- " << witness_line(*simple.witness) << "\n";
        return kExitViolation;
    }
    std::cout << "simple cycle: yes\n";
    ccode::SpreadVerdict v = ccode::has_spread(code, k);
    if (k == 1) {
        // spread 1 asks only for a simple cycle; report inducedness separately
        ccode::SpreadVerdict chordless = ccode::chord_free(code);
        std::cout << "chord-free (induced): " << (chordless.holds ? "yes" : "no") << "\n";
    }
    if (v.holds) {
        std::cout << "spread " << k << ": HOLDS\n";
        return 0;
    }
    std::cout << "spread " << k << ": VIOLATED -- " << witness_line(*v.witness) << "\n";
    return kExitViolation;
}

int cmd_spread(const std::string& file) {
    ccode::CircuitCode code = load_code(file);
    ccode::SpreadVerdict simple = ccode::is_simple_cycle(code.seq(), code.dimension());
    if (!simple.holds) {
        std::cout << "not a simple cycle -- " << witness_line(*simple.witness) << "\n";
        return kExitViolation;
    }
    std::cout << "max spread: " << ccode::max_spread(code) << "\n";
    return 0;
}

void print_report(const ccode::ConstructionReport& rep) {
    std::cerr << "(" << rep.input_params.n << "," << rep.input_params.k << ","
              << rep.input_params.length << ") -> (" << rep.output_params.n << ","
              << rep.output_params.k << "," << rep.output_params.length << ")  q=" << rep.q
              << " r=" << rep.r << " insertions/half=" << rep.insertions.size() << "\n";
}

int cmd_construct7(const std::string& file, const std::string& out) {
    ccode::ConstructionReport rep = ccode::construct7(load_code(file));
    print_report(rep);
    write_output(out, ccode::serialize_code_file(rep.output));
    return 0;
}

int cmd_pad(const std::string& file, const std::string& out) {
    ccode::ConstructionReport rep = ccode::klee_padding(load_code(file));
    print_report(rep);
    write_output(out, ccode::serialize_code_file(rep.output));
    return 0;
}

int cmd_naive(const std::string& file, int offset, const std::string& out) {
    ccode::CircuitCode code = load_code(file);
    ccode::TransitionSequence cand = ccode::naive_insertion(code, offset);
    // claimed spread k+1 is exactly what the naive rewrite hopes for
    ccode::CircuitCode candidate(code.dimension() + 1, code.claimed_spread() + 1, cand);
    write_output(out, ccode::serialize_code_file(candidate));
    return 0;
}

int cmd_table(const std::string& range_text, const std::string& format, bool run_propagation) {
    ccode::BoundTable table = ccode::seed_table(parse_range(range_text));
    if (run_propagation) {
        ccode::PropagationStats stats;
        table = ccode::propagate(table, &stats);
        std::cerr << "fixpoint after " << stats.rounds << " rounds, " << stats.improvements
                  << " improvements, " << table.size() << " entries\n";
    }
    std::cout << render_table(table, format);
    return 0;
}

int cmd_explain(int n, int k, const std::string& range_text) {
    ccode::BoundTable table = ccode::propagate(ccode::seed_table(parse_range(range_text)));
    std::cout << ccode::explain(table, n, k);
    return 0;
}

int cmd_bound_k4(int n) {
    auto bound = ccode::theorem2_bound(n);
    std::cout << "spread-4 bound at n=" << n << ": "
              << (bound ? bound->str() : std::string("none (floor(0.6535 n) < 8)")) << "\n";
    if (2 * n / 6 >= 2) {
        ccode::BigUint base = ccode::singleton_k4_baseline(n);
        std::cout << "classical baseline 6*2^(floor(2n/6)-1): " << base.str() << "\n";
        if (bound)
            std::cout << "new bound " << (*bound > base ? "exceeds" : "does not exceed")
                      << " the baseline\n";
    }
    return 0;
}

int cmd_corpus(const std::string& id, const std::string& out) {
    if (id.empty()) {
        for (const ccode::CorpusEntry& e : ccode::corpus())
            std::cout << e.id << "  n=" << e.code.dimension() << " k=" << e.code.claimed_spread()
                      << " N=" << e.code.length() << "  [" << e.source << "]\n";
        return 0;
    }
    write_output(out, ccode::serialize_code_file(ccode::corpus_entry(id).code));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circuit code workbench"};
    app.require_subcommand(1);

    std::string file, out_path, corpus_id, range_text, format = "csv";
    int k = 1, offset = 0, n_arg = 0, k_arg = 0;

    auto* verify = app.add_subcommand("verify", "check a code file at a given spread");
    verify->add_option("file", file)->required();
    verify->add_option("--k", k, "spread to verify")->required();

    auto* spread = app.add_subcommand("spread", "print the maximum spread of a code file");
    spread->add_option("file", file)->required();

    auto* c7 = app.add_subcommand("construct7", "raise the spread of a code by one");
    c7->add_option("file", file)->required();
    c7->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* pad = app.add_subcommand("pad", "pad a code into dimension n+1 with 2(k+1) | N'");
    pad->add_option("file", file)->required();
    pad->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* naive = app.add_subcommand("naive", "emit a phase-shifted naive insertion candidate");
    naive->add_option("file", file)->required();
    naive->add_option("--offset", offset, "phase 0, 1 or 2")->required();
    naive->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* seed = app.add_subcommand("seed-table", "emit the seeded bound table");
    seed->add_option("--table-range", range_text, "grid as N0:N1:K0:K1 (default 2:30:1:10)");
    seed->add_option("--format", format)->check(CLI::IsMember({"csv", "text"}));

    auto* prop = app.add_subcommand("propagate", "emit the propagated bound table");
    prop->add_option("--table-range", range_text, "grid as N0:N1:K0:K1 (default 2:30:1:10)");
    prop->add_option("--format", format)->check(CLI::IsMember({"csv", "text"}));

    auto* explain = app.add_subcommand("explain", "print the derivation of one table entry");
    explain->add_option("n", n_arg)->required();
    explain->add_option("k", k_arg)->required();
    explain->add_option("--table-range", range_text, "grid as N0:N1:K0:K1 (default 2:30:1:10)");

    auto* bound = app.add_subcommand("bound-k4", "print the spread-4 bound and its baseline");
    bound->add_option("n", n_arg)->required();

    auto* corpus_cmd = app.add_subcommand("corpus", "list or dump the embedded codes");
    corpus_cmd->add_option("id", corpus_id, "entry id to dump (omit to list)");
    corpus_cmd->add_option("-o,--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(file, k);
        if (*spread) return cmd_spread(file);
        if (*c7) return cmd_construct7(file, out_path);
        if (*pad) return cmd_pad(file, out_path);
        if (*naive) return cmd_naive(file, offset, out_path);
        if (*seed) return cmd_table(range_text, format, false);
        if (*prop) return cmd_table(range_text, format, true);
        if (*explain) return cmd_explain(n_arg, k_arg, range_text);
        if (*bound) return cmd_bound_k4(n_arg);
        if (*corpus_cmd) return cmd_corpus(corpus_id, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
