// Brute-force ground truth and seeded instance generators for testing.

#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "weq/core.hpp"
#include "weq/solutions.hpp"

namespace weq {

/// Every assignment of words of length <= max_value_len over the alphabet to
/// the system's variables that makes all equations textually equal. Sorted.
/// Throws std::invalid_argument for an empty alphabet.
std::vector<Assignment> brute_solutions(const std::vector<Equation>& system, const std::set<Letter>& alphabet,
                                        std::size_t max_value_len);

bool brute_sat(const std::vector<Equation>& system, const std::set<Letter>& alphabet, std::size_t max_value_len);

enum class InstanceClass {
    Quadratic,   // every variable at most twice in total
    SroRep,      // letters erased, both sides read the same variable sequence
    OneVariable, // a single variable x
    Random,
};

struct GenParams {
    // Target length of the whole equation (both sides together).
    std::size_t length = 8;
    std::size_t vars = 3;
    std::size_t equations = 1;
    std::string alphabet = "AB";
};

/// Deterministic in (cls, seed, params). The output satisfies the class
/// predicate of classify() for every equation.
std::vector<Equation> gen_instance(InstanceClass cls, std::uint64_t seed, const GenParams& params = {});

/// The five benchmark families:
///   1 regular-ordered with repetitions
///   2 as 1, but each side may order the variables differently
///   3 x P = Q x, where P = Q is of family 1 and does not mention x
///   4 a family-1 equation together with commutation equations P Q = Q P
///   5 unstructured equations sharing several variables
/// Throws std::invalid_argument for a family outside 1..5.
std::vector<Equation> gen_family(int family, std::uint64_t seed);

}  // namespace weq
