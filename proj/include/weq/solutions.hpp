#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "weq/core.hpp"
#include "weq/graph.hpp"

namespace weq {

using Assignment = std::map<Var, Word>;

/// Value of each variable after composing a narrowing program. Variables in
/// residual_free are left unconstrained: any ground words substituted for
/// them yield a solution.
struct Solution {
    Assignment assignment;
    std::set<Var> residual_free;

    bool operator==(const Solution&) const = default;
};

/// Walks the graph from the root taking, at every internal node, the tree
/// edge at position choices[i] among its outgoing edges. Arriving at a folded
/// node continues from its fold target. Throws std::invalid_argument when a
/// choice is out of range or the walk does not end at a T-leaf.
NarrowingProgram extract_program(const SolutionGraph& g, const std::vector<std::size_t>& choices);

Solution path_solution(const NarrowingProgram& p, const std::set<Var>& vars);

/// Substitutes ground words for the residual variables in every value.
Assignment instantiate(const Solution& s, const Assignment& ground);

/// All ground solutions reachable through root-to-T walks of at most
/// max_path_len narrowings whose values all have length <= max_value_len.
/// Residual variables range over words on the given alphabet. The result is
/// sorted and free of duplicates.
std::vector<Assignment> enumerate_solutions(const SolutionGraph& g, const std::set<Letter>& alphabet,
                                            std::size_t max_value_len, std::size_t max_path_len);

/// Shortest root-to-T walk, counted in narrowings.
std::optional<NarrowingProgram> min_witness(const SolutionGraph& g);

/// All words over the alphabet up to the given length, shortest first, then
/// lexicographically.
std::vector<Word> words_up_to(const std::set<Letter>& alphabet, std::size_t max_len);

/// Textual check that every equation holds under a ground assignment.
/// Variables missing from the assignment are read as the empty word.
bool satisfies(const std::vector<Equation>& system, const Assignment& a);

}  // namespace weq
