#include "weq/solutions.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace weq {

namespace {

NodeId resolve(const SolutionGraph& g, NodeId id) {
    // Fold targets are never folded themselves, but memo mode may chain.
    while (auto t = g.fold_target(id)) id = *t;
    return id;
}

}  // namespace

NarrowingProgram extract_program(const SolutionGraph& g, const std::vector<std::size_t>& choices) {
    NarrowingProgram program;
    NodeId at = resolve(g, g.root());
    for (std::size_t i = 0; i < choices.size(); ++i) {
        const auto& edges = g.out_edges(at);
        if (choices[i] >= edges.size()) {
            throw std::invalid_argument("choice " + std::to_string(i) + " is out of range at node " +
                                        std::to_string(at));
        }
        const TreeEdge& e = g.tree_edges()[edges[choices[i]]];
        program.push_back(e.narrowing);
        at = resolve(g, e.child);
    }
    if (g.node(at).kind != NodeKind::TLeaf) {
        throw std::invalid_argument("walk ends at node " + std::to_string(at) + ", which is not a T-leaf");
    }
    return program;
}

Solution path_solution(const NarrowingProgram& p, const std::set<Var>& vars) {
    Solution s;
    for (Var v : vars) {
        Word value = compose_value(p, v);
        auto occurring = variables_of(value);
        if (!occurring.empty()) s.residual_free.insert(v);
        s.residual_free.merge(occurring);
        s.assignment.emplace(v, std::move(value));
    }
    return s;
}

Assignment instantiate(const Solution& s, const Assignment& ground) {
    Assignment out;
    for (const auto& [v, value] : s.assignment) {
        Word w;
        for (const auto& t : value) {
            if (t.is_letter()) {
                w.push_back(t);
                continue;
            }
            auto it = ground.find(t.as_var());
            if (it != ground.end()) w.insert(w.end(), it->second.begin(), it->second.end());
        }
        out.emplace(v, std::move(w));
    }
    return out;
}

std::vector<Word> words_up_to(const std::set<Letter>& alphabet, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t layer_end = out.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            for (Letter a : alphabet) {
                Word w = out[i];
                w.emplace_back(a);
                out.push_back(std::move(w));
            }
        }
        layer_begin = layer_end;
        if (alphabet.empty()) break;
    }
    return out;
}

namespace {

Word substitute(const Word& w, const Assignment& a) {
    Word out;
    for (const auto& t : w) {
        if (t.is_letter()) {
            out.push_back(t);
        } else if (auto it = a.find(t.as_var()); it != a.end()) {
            out.insert(out.end(), it->second.begin(), it->second.end());
        }
    }
    return out;
}

std::vector<Var> sorted_vars(const std::vector<Equation>& system) {
    const auto vars = variables_of(system);
    return {vars.begin(), vars.end()};
}

// Bounded solution sets computed backwards from the T-leaves.
//
// A T-leaf admits every assignment with values of at most max_value_len
// letters over the alphabet (residual variables are unconstrained). A node
// admits the assignments of each child lifted through the edge narrowing:
// x -> ε sets x to ε, x -> a x prepends a, x -> y x prepends the value of y.
// Lifting never shortens a value except x -> ε, below which x is never
// narrowed again, so discarding over-long assignments at every node loses
// nothing. Round k holds the solutions of walks with at most k narrowings.
class Enumerator {
public:
    Enumerator(const SolutionGraph& g, const std::set<Letter>& alphabet, std::size_t max_value_len,
               std::size_t max_path_len)
        : g_(g), vars_(sorted_vars(g.system())), max_path_len_(max_path_len) {
        std::set<Letter> letters = alphabet;
        letters.merge(letters_of(g.system()));
        words_ = words_up_to(letters, max_value_len);
        for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], static_cast<Code>(i));
        // Values at a T-leaf range over the alphabet alone.
        for (std::size_t w = 0; w < words_.size(); ++w) {
            const bool in_alphabet = std::all_of(words_[w].begin(), words_[w].end(),
                                                 [&](const Term& t) { return alphabet.contains(t.as_letter()); });
            if (in_alphabet) free_.push_back(static_cast<Code>(w));
        }
        for (std::size_t i = 0; i < vars_.size(); ++i) slot_.emplace(vars_[i], i);
    }

    std::vector<Assignment> run() {
        const std::size_t n = g_.nodes().size();
        std::vector<Set> solved(n);
        std::vector<Set> fresh(n);
        for (const auto& node : g_.nodes()) {
            if (node.kind == NodeKind::TLeaf) {
                every_assignment([&](const Key& k) { solved[node.id].insert(k); });
                fresh[node.id] = solved[node.id];
            }
        }

        for (std::size_t round = 1; round <= max_path_len_; ++round) {
            std::vector<Set> next(n);
            bool grew = false;
            for (const auto& edge : g_.tree_edges()) {
                const NodeId parent = edge.parent;
                const NodeId child = resolve(g_, edge.child);
                for (const Key& k : fresh[child]) {
                    auto lifted = lift(edge.narrowing, k);
                    if (lifted && !solved[parent].contains(*lifted)) next[parent].insert(std::move(*lifted));
                }
            }
            for (std::size_t id = 0; id < n; ++id) {
                for (const Key& k : next[id]) solved[id].insert(k);
                grew |= !next[id].empty();
            }
            fresh = std::move(next);
            if (!grew) break;
        }

        std::vector<Assignment> out;
        for (const Key& k : solved[resolve(g_, g_.root())]) out.push_back(decode(k));
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    // An assignment as one word index per variable, packed into a string.
    using Code = std::uint32_t;
    using Key = std::string;
    using Set = std::unordered_set<Key>;

    Code code_at(const Key& k, std::size_t i) const {
        Code c;
        std::memcpy(&c, k.data() + i * sizeof(Code), sizeof(Code));
        return c;
    }

    void set_code(Key& k, std::size_t i, Code c) const { std::memcpy(k.data() + i * sizeof(Code), &c, sizeof(Code)); }

    template <typename F>
    void every_assignment(F&& emit) const {
        Key k(vars_.size() * sizeof(Code), '\0');
        std::vector<Code> pick(vars_.size(), 0);
        for (;;) {
            for (std::size_t i = 0; i < pick.size(); ++i) set_code(k, i, free_[pick[i]]);
            emit(k);
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == free_.size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
    }

    std::optional<Key> lift(const Narrowing& n, const Key& k) const {
        const std::size_t x = slot_.at(n.var());
        Word value;
        switch (n.kind()) {
            case Narrowing::Kind::ToEps: break;
            case Narrowing::Kind::ToLetter:
                value.push_back(n.head());
                value.insert(value.end(), words_[code_at(k, x)].begin(), words_[code_at(k, x)].end());
                break;
            case Narrowing::Kind::ToVar: {
                const Word& head = words_[code_at(k, slot_.at(n.head().as_var()))];
                value = head;
                value.insert(value.end(), words_[code_at(k, x)].begin(), words_[code_at(k, x)].end());
                break;
            }
        }
        auto it = index_.find(value);
        if (it == index_.end()) return std::nullopt;  // longer than the bound
        Key out = k;
        set_code(out, x, it->second);
        return out;
    }

    Assignment decode(const Key& k) const {
        Assignment a;
        for (std::size_t i = 0; i < vars_.size(); ++i) a.emplace(vars_[i], words_[code_at(k, i)]);
        return a;
    }

    const SolutionGraph& g_;
    std::vector<Var> vars_;
    std::size_t max_path_len_;
    std::vector<Word> words_;
    std::map<Word, Code> index_;
    std::vector<Code> free_;
    std::map<Var, std::size_t> slot_;
};

}  // namespace

std::vector<Assignment> enumerate_solutions(const SolutionGraph& g, const std::set<Letter>& alphabet,
                                            std::size_t max_value_len, std::size_t max_path_len) {
    return Enumerator(g, alphabet, max_value_len, max_path_len).run();
}

std::optional<NarrowingProgram> min_witness(const SolutionGraph& g) {
    const std::size_t n = g.nodes().size();
    struct Pred {
        NodeId node;
        std::size_t edge;
    };
    std::vector<std::optional<Pred>> pred(n);
    std::vector<bool> seen(n, false);
    std::deque<NodeId> queue;

    const NodeId start = resolve(g, g.root());
    seen[start] = true;
    queue.push_back(start);
    while (!queue.empty()) {
        const NodeId at = queue.front();
        queue.pop_front();
        if (g.node(at).kind == NodeKind::TLeaf) {
            NarrowingProgram program;
            for (NodeId cur = at; pred[cur]; cur = pred[cur]->node) {
                program.push_back(g.tree_edges()[pred[cur]->edge].narrowing);
            }
            std::reverse(program.begin(), program.end());
            return program;
        }
        for (std::size_t edge : g.out_edges(at)) {
            const NodeId next = resolve(g, g.tree_edges()[edge].child);
            if (seen[next]) continue;
            seen[next] = true;
            pred[next] = Pred{at, edge};
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

bool satisfies(const std::vector<Equation>& system, const Assignment& a) {
    return std::all_of(system.begin(), system.end(),
                       [&a](const Equation& e) { return substitute(e.lhs, a) == substitute(e.rhs, a); });
}

}  // namespace weq
