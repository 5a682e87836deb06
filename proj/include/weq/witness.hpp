#pragma once

#include <vector>

#include "weq/core.hpp"
#include "weq/rewrite.hpp"

namespace weq {

/// Runs a narrowing program against an equation system the way the search
/// does: simplify, then for every narrowing check that it is compatible with
/// the current first equation, apply it and simplify again. Returns true iff
/// every step was compatible and the final state is Accepted.
///
/// An empty system is accepted outright. Throws std::invalid_argument for the
/// Base scheme on a system with more than one equation.
bool verify(const NarrowingProgram& p, const std::vector<Equation>& system, Scheme scheme);

}  // namespace weq
