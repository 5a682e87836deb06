// Simplification schemes applied after every narrowing step.
//
//   Base  - strip common prefixes and suffixes of a single equation.
//   Split - Base on every equation, then split off the shortest
//           var-permutated prefixes until none remain.
//   Count - Split, then split off var-permutated suffixes, then reject
//           equations whose letter/variable counts rule out any solution.

#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "weq/core.hpp"

namespace weq {

enum class Scheme { Base, Split, Count };

std::string_view to_string(Scheme s);
// Accepts "base", "split", "count"; throws std::invalid_argument otherwise.
Scheme parse_scheme(std::string_view name);

/// Strips the longest common prefix, then the longest common suffix.
/// Returns nullopt when the stripped sides start (or end) with two distinct
/// letters, i.e. the equation is contradictory.
std::optional<Equation> reduce(const Equation& e);

struct PrefixSplit {
    Equation prefix;
    Equation remainder;
};

struct SuffixSplit {
    Equation remainder;
    Equation suffix;
};

/// Shortest non-empty var-permutated prefixes of the two sides.
std::optional<PrefixSplit> left_split(const Equation& e);

/// Mirror image of left_split.
std::optional<SuffixSplit> right_split(const Equation& e);

struct SplitOutcome {
    // [remainder, piece_1, ..., piece_k]; empty when contradiction is set.
    std::vector<Equation> pieces;
    bool contradiction = false;
};

/// Repeated left splitting with reduction of the remainder in between.
/// Every produced piece is reduced as well.
SplitOutcome exhaustive_left_split(const Equation& e);

/// Repeated right splitting; pieces are [remainder, suffix_1, ..., suffix_k].
SplitOutcome exhaustive_right_split(const Equation& e);

/// True when one side dominates the other in every variable count while
/// holding strictly more letters. Such an equation has no solution.
bool count_unsat(const Equation& e);

/// Applies the simplification scheme to an equation list.
/// Throws std::invalid_argument if s is not an equation list, or for Base
/// when the list does not hold exactly one equation.
SystemState simplify(Scheme scheme, const SystemState& s);

}  // namespace weq
