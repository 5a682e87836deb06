// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Limits are pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "weq/graph.hpp"
#include "weq/narrow.hpp"
#include "weq/oracle.hpp"
#include "weq/parse.hpp"
#include "weq/solutions.hpp"
#include "weq/witness.hpp"

using namespace weq;

namespace {

constexpr double kSmallSeconds = 1.0;         // criteria 1, 2 (per build)
constexpr double kHardSeconds = 5.0;          // criterion 3, and per instance in 5
constexpr double kQuadraticSeconds = 10.0;    // criterion 4
constexpr std::size_t kHardNodes = 10'000;    // criterion 3
constexpr std::size_t kSuiteNodes = 100'000;  // criterion 5
constexpr std::size_t kSuiteSize = 200;       // criterion 5
constexpr std::size_t kOracleSystems = 500;   // criterion 6
constexpr std::size_t kOracleNodes = 10'000;  // criterion 6
constexpr std::size_t kMutations = 1'000;     // criterion 8

std::vector<Equation> sys(std::string_view text) { return parse_system(text); }

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

template <typename F>
auto timed(double& secs, F&& f) {
    const auto t = std::chrono::steady_clock::now();
    auto r = f();
    secs = seconds_since(t);
    return r;
}

struct Result {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Result& r) {
    std::printf("[%s] %d %s: %s\n", r.pass ? "PASS" : "FAIL", id, name.c_str(), r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failures;
}

Result figure_graph() {
    double secs = 0;
    const auto out = timed(secs, [] { return build(sys("A x y = x y A"), Scheme::Base); });
    const auto& g = out.graph;
    const std::size_t internal = g.expanded_count();
    const std::size_t t_leaves = g.count(NodeKind::TLeaf);
    const std::size_t back = g.back_edges().size();
    const std::string golden = read_file(std::string(WEQ_GOLDEN_DIR) + "/axy_base.dot");
    const bool dot_ok = to_dot(g) == golden;
    std::ostringstream d;
    d << "internal=" << internal << " (want 2), T-leaves=" << t_leaves << " (want 2), back-edges=" << back
      << " (want 2), verdict=" << to_string(verdict(out)) << ", golden DOT " << (dot_ok ? "matches" : "differs")
      << ", " << secs << " s";
    const bool pass = internal == 2 && t_leaves == 2 && back == 2 && verdict(out) == Verdict::Sat && dot_ok &&
                      secs < kSmallSeconds;
    return {pass, d.str()};
}

Result triptych() {
    const auto input = sys("x x A y B z = A x x z y");
    double tb = 0, ts = 0, tc = 0;
    const auto base = timed(tb, [&] { return build(input, Scheme::Base, Budget{kHardNodes, 10'000}); });
    const auto split = timed(ts, [&] { return build(input, Scheme::Split); });
    const auto count = timed(tc, [&] { return build(input, Scheme::Count); });

    const SystemState loop = SystemState::eqs(sys("y B z = z y\nx x A = A x x"));
    bool loop_folded = false;
    for (const auto& e : split.graph.back_edges()) loop_folded |= split.graph.node(e.to).label == loop;

    const bool base_ok = verdict(base) == Verdict::Unknown && base.reason == "max_nodes";
    const bool split_ok = split.status == BuildStatus::Complete && loop_folded;
    const bool count_ok = verdict(count) == Verdict::Unsat && count.graph.nodes().size() <= 3;
    std::ostringstream d;
    d << "base " << to_string(verdict(base)) << "(" << base.reason << ") " << tb << " s; split "
      << (split.status == BuildStatus::Complete ? "complete" : "incomplete") << " with "
      << split.graph.nodes().size() << " nodes, loop back-edge " << (loop_folded ? "present" : "missing") << " "
      << ts << " s; count " << to_string(verdict(count)) << " with " << count.graph.nodes().size() << " nodes "
      << tc << " s";
    const bool fast = tb < kSmallSeconds && ts < kSmallSeconds && tc < kSmallSeconds;
    return {base_ok && split_ok && count_ok && fast, d.str()};
}

Result hard_instance() {
    const auto input = sys("A B x x y y = x x y y B A");
    std::ostringstream d;
    bool pass = true;
    for (Scheme s : {Scheme::Split, Scheme::Count}) {
        double secs = 0;
        const auto out = timed(secs, [&] { return build(input, s, Budget{kHardNodes, 10'000}); });
        const bool ok = verdict(out) == Verdict::Unsat && secs < kHardSeconds;
        pass &= ok;
        d << to_string(s) << " " << to_string(verdict(out)) << " with " << out.graph.nodes().size() << " nodes "
          << secs << " s; ";
    }
    return {pass, d.str()};
}

Result quadratic_instance() {
    const auto input = sys("x y z A B A B A B = A A A B B B y z x");
    double secs = 0;
    const auto out = timed(secs, [&] { return build(input, Scheme::Base); });
    const Verdict v = verdict(out);
    std::ostringstream d;
    d << "base " << to_string(v) << " (" << (out.status == BuildStatus::Complete ? "complete" : "incomplete")
      << ", " << out.graph.nodes().size() << " nodes, " << secs << " s)";

    bool pass = v == Verdict::Sat && secs < kQuadraticSeconds;
    if (v == Verdict::Sat) {
        const auto w = min_witness(out.graph);
        const bool verified = w && verify(*w, input, Scheme::Base);
        Assignment ground;
        if (w) {
            for (Var x : variables_of(input)) {
                Word value;
                for (const auto& t : compose_value(*w, x)) {
                    if (t.is_letter()) value.push_back(t);
                }
                ground[x] = value;
            }
        }
        const auto oracle = brute_solutions(input, letters_of(input), 6);
        const bool cross = std::find(oracle.begin(), oracle.end(), ground) != oracle.end();
        pass &= verified && cross;
        d << "; witness " << (verified ? "verifies" : "rejected") << "; oracle " << (cross ? "agrees" : "disagrees");
    } else {
        const bool oracle_empty = brute_solutions(input, letters_of(input), 6).empty();
        d << "; oracle finds " << (oracle_empty ? "no" : "some") << " solution with values up to length 6";
    }
    return {pass, d.str()};
}

struct SuiteStats {
    std::size_t terminated = 0;
    std::size_t sat = 0;
    std::size_t max_nodes = 0;
    double max_secs = 0;
    std::string first_failure;
};

SuiteStats run_suite(InstanceClass cls, Scheme scheme, const GenParams& params) {
    SuiteStats st;
    for (std::uint64_t seed = 1; seed <= kSuiteSize; ++seed) {
        const auto input = gen_instance(cls, seed, params);
        double secs = 0;
        BuildOptions opts;
        opts.time_limit = std::chrono::milliseconds(static_cast<long>(kHardSeconds * 1000));
        const auto out = timed(secs, [&] { return build(input, scheme, Budget{kSuiteNodes, kSuiteNodes}, opts); });
        st.max_nodes = std::max(st.max_nodes, out.graph.nodes().size());
        st.max_secs = std::max(st.max_secs, secs);
        if (out.status == BuildStatus::Complete && secs < kHardSeconds) {
            ++st.terminated;
            if (verdict(out) == Verdict::Sat) ++st.sat;
        } else if (st.first_failure.empty()) {
            st.first_failure = serialize_system(input);
        }
    }
    return st;
}

Result termination_suites() {
    struct Suite {
        const char* name;
        InstanceClass cls;
        Scheme scheme;
        GenParams params;
    };
    const std::vector<Suite> suites{
        {"quadratic/base", InstanceClass::Quadratic, Scheme::Base, GenParams{12, 4, 1, "AB"}},
        {"sro-rep/split", InstanceClass::SroRep, Scheme::Split, GenParams{12, 4, 1, "AB"}},
        {"one-variable/count", InstanceClass::OneVariable, Scheme::Count, GenParams{16, 1, 1, "AB"}},
    };
    bool pass = true;
    std::ostringstream d;
    for (const auto& s : suites) {
        const auto st = run_suite(s.cls, s.scheme, s.params);
        pass &= st.terminated == kSuiteSize;
        d << s.name << " " << st.terminated << "/" << kSuiteSize << " (sat " << st.sat << ", max " << st.max_nodes
          << " nodes, " << st.max_secs << " s)";
        if (!st.first_failure.empty()) d << " first open: [" << st.first_failure << "]";
        d << "; ";
    }
    return {pass, d.str()};
}

std::vector<Equation> random_system(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 2);
    std::uniform_int_distribution<int> side(0, 6);
    std::uniform_int_distribution<int> term(0, 4);
    static constexpr char terms[] = "ABxyz";
    std::vector<Equation> out;
    for (int n = count(rng); n > 0; --n) {
        std::string text;
        for (int k = side(rng); k > 0; --k) text += terms[term(rng)];
        text += '=';
        for (int k = side(rng); k > 0; --k) text += terms[term(rng)];
        const auto at = text.find('=');
        out.push_back(Equation{word(text.substr(0, at)), word(text.substr(at + 1))});
    }
    return out;
}

Result oracle_equivalence() {
    std::mt19937_64 rng(20'240'601);
    const std::set<Letter> ab{Letter{'A'}, Letter{'B'}};
    std::size_t completed = 0;
    std::size_t mismatches = 0;
    std::size_t unsound = 0;
    std::size_t with_solutions = 0;
    std::string first;
    const auto t = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < kOracleSystems; ++i) {
        const auto input = random_system(rng);
        const auto out = build(input, Scheme::Count, Budget{kOracleNodes, kOracleNodes});
        if (out.status != BuildStatus::Complete) continue;
        ++completed;
        const auto found = enumerate_solutions(out.graph, ab, 2, 24);
        const auto truth = brute_solutions(input, ab, 2);
        if (!truth.empty()) ++with_solutions;
        for (const auto& a : found) unsound += satisfies(input, a) ? 0 : 1;
        if (found != truth) {
            ++mismatches;
            if (first.empty()) first = serialize_system(input);
        }
    }
    std::ostringstream d;
    d << completed << "/" << kOracleSystems << " systems completed (" << with_solutions << " with solutions), "
      << mismatches << " mismatches, " << unsound << " unsound solutions, " << seconds_since(t) << " s";
    if (!first.empty()) d << "; first mismatch: [" << first << "]";
    return {mismatches == 0 && unsound == 0 && completed > 0, d.str()};
}

Result nielsen_gap() {
    const auto input = sys("x y = y x");
    const auto out = build(input, Scheme::Count);
    const auto found = enumerate_solutions(out.graph, {Letter{'A'}}, 1, 8);
    Assignment target{{Var{'x'}, word("A")}, {Var{'y'}, word("")}};
    const bool hit = std::find(found.begin(), found.end(), target) != found.end();
    return {hit, std::string("x=A, y= ") + (hit ? "found" : "missing") + " among " + std::to_string(found.size()) +
                     " bounded solutions"};
}

// Every accepted program of at most max_len narrowings reachable in the graph.
void accepted_walks(const SolutionGraph& g, NodeId id, std::size_t max_len, NarrowingProgram& prefix,
                    std::vector<NarrowingProgram>& out) {
    while (auto t = g.fold_target(id)) id = *t;
    if (g.node(id).kind == NodeKind::TLeaf) {
        out.push_back(prefix);
        return;
    }
    if (prefix.size() == max_len) return;
    for (std::size_t edge : g.out_edges(id)) {
        prefix.push_back(g.tree_edges()[edge].narrowing);
        accepted_walks(g, g.tree_edges()[edge].child, max_len, prefix, out);
        prefix.pop_back();
    }
}

Assignment ground_by_substitution(const NarrowingProgram& p, const std::vector<Equation>& input) {
    Assignment a;
    for (Var x : variables_of(input)) {
        Word value;
        for (const auto& t : compose_value(p, x)) {
            if (t.is_letter()) value.push_back(t);
        }
        a[x] = value;
    }
    return a;
}

Narrowing random_narrowing(std::mt19937_64& rng, const std::vector<Equation>& input) {
    const auto vs = variables_of(input);
    const std::vector<Var> vars(vs.begin(), vs.end());
    std::uniform_int_distribution<std::size_t> pick_var(0, vars.size() - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    const Var x = vars[pick_var(rng)];
    switch (kind(rng)) {
        case 0: return Narrowing::to_eps(x);
        case 1: return Narrowing::to_letter(x, Letter{rng() % 2 ? 'A' : 'B'});
        default: {
            const Var y = vars[pick_var(rng)];
            if (y == x) return Narrowing::to_eps(x);
            return Narrowing::to_var(x, y);
        }
    }
}

Result witness_round_trip() {
    std::mt19937_64 rng(8);
    std::size_t programs = 0;
    std::size_t rejected = 0;
    std::size_t mutated = 0;
    std::size_t inconsistent = 0;
    std::size_t mutated_accepted = 0;
    std::size_t attempts = 0;
    while (mutated < kMutations && attempts < 100'000) {
        ++attempts;
        const auto input = random_system(rng);
        const Scheme scheme = input.size() == 1 && rng() % 3 == 0 ? Scheme::Base
                              : rng() % 2                         ? Scheme::Split
                                                                  : Scheme::Count;
        const auto out = build(input, scheme, Budget{kOracleNodes, 200});
        std::vector<NarrowingProgram> walks;
        NarrowingProgram prefix;
        accepted_walks(out.graph, out.graph.root(), 8, prefix, walks);
        if (walks.size() > 20) walks.resize(20);
        for (const auto& p : walks) {
            ++programs;
            if (!verify(p, input, scheme) || !satisfies(input, ground_by_substitution(p, input))) ++rejected;
            if (p.empty() || variables_of(input).empty()) continue;

            NarrowingProgram m = p;
            const std::size_t at = rng() % m.size();
            const Narrowing replacement = random_narrowing(rng, input);
            if (replacement == m[at]) continue;
            m[at] = replacement;
            ++mutated;
            if (verify(m, input, scheme)) {
                ++mutated_accepted;
                if (!satisfies(input, ground_by_substitution(m, input))) ++inconsistent;
            }
        }
    }
    std::ostringstream d;
    d << programs << " extracted programs, " << rejected << " rejected; " << mutated << " mutated programs, "
      << mutated_accepted << " still accepted, " << inconsistent << " inconsistent with substitution";
    return {rejected == 0 && inconsistent == 0 && mutated >= kMutations, d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"figure graph Axy=xyA", figure_graph},
        {"xxAyBz=Axxzy under three schemes", triptych},
        {"hard instance ABxxyy=xxyyBA", hard_instance},
        {"quadratic xyzABABAB=AAABBByzx", quadratic_instance},
        {"termination suites", termination_suites},
        {"oracle equivalence", oracle_equivalence},
        {"xy=yx finds x=A, y=", nielsen_gap},
        {"witness round trip", witness_round_trip},
    };
    int id = 0;
    for (const auto& [name, run] : criteria) {
        ++id;
        try {
            report(id, name, run());
        } catch (const std::exception& e) {
            report(id, name, {false, std::string("exception: ") + e.what()});
        }
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
