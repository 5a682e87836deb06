// Command-line front end.
//
//   weq solve FILE [--scheme count] [--max-nodes N] [--max-depth N] [--early-stop] [--fold ancestor|memo]
//   weq enumerate FILE [--max-len L] [--max-path P] [--alphabet AB]
//   weq verify EQFILE NARFILE [--scheme count]
//   weq dot FILE [--prune] [-o out.dot]
//   weq oracle FILE [--max-len L] [--alphabet AB]
//   weq bench DIR [--timeout-ms T] [--csv out.csv]
//   weq gen-bench DIR [--per-family N] [--seed S]
//
// Exit status: 0 SAT / T, 1 UNSAT / F, 2 UNKNOWN, 3 error.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weq/graph.hpp"
#include "weq/oracle.hpp"
#include "weq/parse.hpp"
#include "weq/solutions.hpp"
#include "weq/witness.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitError = 3;

struct SearchFlags {
    std::string scheme = "count";
    std::size_t max_nodes = 100'000;
    std::size_t max_depth = 10'000;
    bool early_stop = false;
    std::string fold = "ancestor";
    std::optional<long> timeout_ms;
};

void add_search_flags(CLI::App* cmd, SearchFlags& f) {
    cmd->add_option("--scheme", f.scheme, "Simplification scheme")
        ->check(CLI::IsMember({"base", "split", "count"}))
        ->capture_default_str();
    cmd->add_option("--max-nodes", f.max_nodes, "Node budget")->capture_default_str();
    cmd->add_option("--max-depth", f.max_depth, "Depth budget")->capture_default_str();
    cmd->add_flag("--early-stop", f.early_stop, "Stop at the first T-leaf");
    cmd->add_option("--fold", f.fold, "Folding criterion")
        ->check(CLI::IsMember({"ancestor", "memo"}))
        ->capture_default_str();
}

weq::BuildOutcome run_build(const std::vector<weq::Equation>& system, const SearchFlags& f) {
    weq::BuildOptions options;
    options.fold = f.fold == "memo" ? weq::FoldMode::Memo : weq::FoldMode::Ancestor;
    options.early_stop = f.early_stop;
    if (f.timeout_ms) options.time_limit = std::chrono::milliseconds(*f.timeout_ms);
    return weq::build(system, weq::parse_scheme(f.scheme), weq::Budget{f.max_nodes, f.max_depth}, options);
}

int exit_code(weq::Verdict v) {
    switch (v) {
        case weq::Verdict::Sat: return kExitSat;
        case weq::Verdict::Unsat: return kExitUnsat;
        case weq::Verdict::Unknown: return kExitUnknown;
    }
    return kExitError;
}

long elapsed_ms(std::chrono::steady_clock::time_point since) {
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - since).count());
}

std::set<weq::Letter> pick_alphabet(const std::vector<weq::Equation>& system, const std::string& flag) {
    std::set<weq::Letter> out;
    if (flag.empty()) return weq::letters_of(system);
    for (char c : flag) out.insert(weq::Term{weq::Letter{c}}.as_letter());
    return out;
}

int cmd_solve(const std::string& file, const SearchFlags& f) {
    const auto system = weq::parse_system(weq::read_file(file));
    const auto start = std::chrono::steady_clock::now();
    const auto outcome = run_build(system, f);
    const auto v = weq::verdict(outcome);
    const long ms = elapsed_ms(start);

    std::cout << weq::to_string(v);
    if (v == weq::Verdict::Unknown && !outcome.reason.empty()) std::cout << " (" << outcome.reason << ")";
    std::cout << "\nnodes: " << outcome.graph.nodes().size() << "\ndepth: " << outcome.graph.max_depth()
              << "\ntime_ms: " << ms << "\n";
    if (v == weq::Verdict::Sat) {
        if (auto w = weq::min_witness(outcome.graph)) {
            std::cout << "witness:\n";
            const std::string text = weq::serialize_program(*w);
            if (!text.empty()) std::cout << text << "\n";
        }
    }
    return exit_code(v);
}

int cmd_enumerate(const std::string& file, const SearchFlags& f, std::size_t max_len, std::size_t max_path,
                  const std::string& alphabet) {
    const auto system = weq::parse_system(weq::read_file(file));
    const auto outcome = run_build(system, f);
    for (const auto& a : weq::enumerate_solutions(outcome.graph, pick_alphabet(system, alphabet), max_len, max_path)) {
        std::cout << weq::serialize_assignment(a) << "\n";
    }
    return exit_code(weq::verdict(outcome));
}

int cmd_verify(const std::string& eq_file, const std::string& nar_file, const std::string& scheme) {
    const auto system = weq::parse_system(weq::read_file(eq_file));
    const auto program = weq::parse_program(weq::read_file(nar_file));
    const bool ok = weq::verify(program, system, weq::parse_scheme(scheme));
    std::cout << (ok ? "T" : "F") << "\n";
    return ok ? kExitSat : kExitUnsat;
}

int cmd_dot(const std::string& file, const SearchFlags& f, bool prune, const std::string& out) {
    const auto system = weq::parse_system(weq::read_file(file));
    const auto outcome = run_build(system, f);
    const std::string dot = weq::to_dot(prune ? weq::prune(outcome.graph) : outcome.graph);
    if (out.empty()) {
        std::cout << dot;
    } else {
        std::ofstream os(out);
        if (!os) throw std::runtime_error("cannot write " + out);
        os << dot;
    }
    return exit_code(weq::verdict(outcome));
}

int cmd_oracle(const std::string& file, std::size_t max_len, const std::string& alphabet) {
    const auto system = weq::parse_system(weq::read_file(file));
    auto letters = pick_alphabet(system, alphabet);
    if (letters.empty()) letters.insert(weq::Letter{'A'});
    const auto found = weq::brute_solutions(system, letters, max_len);
    for (const auto& a : found) std::cout << weq::serialize_assignment(a) << "\n";
    return found.empty() ? kExitUnsat : kExitSat;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int cmd_bench(const std::string& dir, const SearchFlags& f, const std::string& csv_out) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".eq") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    std::ostringstream csv;
    csv << "file,scheme,result,nodes,depth,time_ms\n";
    for (const auto& path : files) {
        const auto start = std::chrono::steady_clock::now();
        std::string result = "ERROR";
        std::size_t nodes = 0;
        std::size_t depth = 0;
        try {
            const auto system = weq::parse_system(weq::read_file(path.string()));
            const auto outcome = run_build(system, f);
            result = std::string(weq::to_string(weq::verdict(outcome)));
            nodes = outcome.graph.nodes().size();
            depth = outcome.graph.max_depth();
        } catch (const std::exception& e) {
            std::cerr << path.string() << ": " << e.what() << "\n";
        }
        csv << csv_field(path.filename().string()) << ',' << f.scheme << ',' << result << ',' << nodes << ','
            << depth << ',' << elapsed_ms(start) << "\n";
    }

    if (csv_out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream os(csv_out);
        if (!os) throw std::runtime_error("cannot write " + csv_out);
        os << csv.str();
    }
    return kExitSat;
}

int cmd_gen_bench(const std::string& dir, std::size_t per_family, std::uint64_t seed) {
    fs::create_directories(dir);
    for (int family = 1; family <= 5; ++family) {
        for (std::size_t i = 0; i < per_family; ++i) {
            const auto system = weq::gen_family(family, seed + i);
            std::ostringstream name;
            name << "family" << family << "_" << (i < 10 ? "0" : "") << i << ".eq";
            std::ofstream os(fs::path(dir) / name.str());
            if (!os) throw std::runtime_error("cannot write into " + dir);
            os << weq::serialize_system(system) << "\n";
        }
    }
    return kExitSat;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Word equation solver by narrowing and folding"};
    app.require_subcommand(1);

    std::string file;
    std::string second_file;
    SearchFlags flags;
    std::size_t max_len = 2;
    std::size_t max_path = 24;
    std::string alphabet;
    bool prune = false;
    std::string out;
    long timeout_ms = 10'000;
    std::size_t per_family = 10;
    std::uint64_t seed = 1;

    auto* solve = app.add_subcommand("solve", "Decide satisfiability and print a witness");
    solve->add_option("file", file, ".eq file")->required();
    add_search_flags(solve, flags);

    auto* enumerate = app.add_subcommand("enumerate", "List bounded ground solutions");
    enumerate->add_option("file", file, ".eq file")->required();
    add_search_flags(enumerate, flags);
    enumerate->add_option("--max-len", max_len, "Longest value")->capture_default_str();
    enumerate->add_option("--max-path", max_path, "Longest narrowing walk")->capture_default_str();
    enumerate->add_option("--alphabet", alphabet, "Letters for values (default: letters of the input)");

    auto* verify = app.add_subcommand("verify", "Run a narrowing program against a system");
    verify->add_option("eqfile", file, ".eq file")->required();
    verify->add_option("narfile", second_file, ".nar file")->required();
    verify->add_option("--scheme", flags.scheme, "Simplification scheme")
        ->check(CLI::IsMember({"base", "split", "count"}))
        ->capture_default_str();

    auto* dot = app.add_subcommand("dot", "Export the solution graph as DOT");
    dot->add_option("file", file, ".eq file")->required();
    add_search_flags(dot, flags);
    dot->add_flag("--prune", prune, "Drop nodes that cannot reach a T-leaf");
    dot->add_option("-o", out, "Output file (default: stdout)");

    auto* oracle = app.add_subcommand("oracle", "Brute-force solutions up to a value length");
    oracle->add_option("file", file, ".eq file")->required();
    oracle->add_option("--max-len", max_len, "Longest value")->capture_default_str();
    oracle->add_option("--alphabet", alphabet, "Letters for values (default: letters of the input)");

    auto* bench = app.add_subcommand("bench", "Solve every .eq file in a directory and report CSV");
    bench->add_option("dir", file, "Directory of .eq files")->required()->check(CLI::ExistingDirectory);
    add_search_flags(bench, flags);
    bench->add_option("--timeout-ms", timeout_ms, "Per-file wall-clock limit")->capture_default_str();
    bench->add_option("--csv", out, "Output file (default: stdout)");

    auto* gen = app.add_subcommand("gen-bench", "Write a generated benchmark of the five families");
    gen->add_option("dir", file, "Output directory")->required();
    gen->add_option("--per-family", per_family, "Instances per family")->capture_default_str();
    gen->add_option("--seed", seed, "First seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*solve) return cmd_solve(file, flags);
        if (*enumerate) return cmd_enumerate(file, flags, max_len, max_path, alphabet);
        if (*verify) return cmd_verify(file, second_file, flags.scheme);
        if (*dot) return cmd_dot(file, flags, prune, out);
        if (*oracle) return cmd_oracle(file, max_len, alphabet);
        if (*bench) {
            flags.timeout_ms = timeout_ms;
            return cmd_bench(file, flags, out);
        }
        if (*gen) return cmd_gen_bench(file, per_family, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
