#pragma once

#include <vector>

#include "weq/core.hpp"
#include "weq/rewrite.hpp"

namespace weq {

/// Narrowings compatible with the first equation of s, in canonical order:
/// eps-narrowings first, the lhs variable before the rhs variable.
///
///   x.. = a..  ->  x->eps, x->a x
///   a.. = x..  ->  x->eps, x->a x
///   x.. = y..  ->  x->eps, y->eps, x->y x, y->x y
///   x.. = eps  ->  x->eps      (and symmetrically)
///   a.. = b.., a.. = eps  ->  none (dead end)
///
/// Throws std::invalid_argument if s is not a non-empty equation list or its
/// first equation is trivial.
std::vector<Narrowing> compatible_narrowings(const SystemState& s);

bool is_compatible(const Narrowing& n, const SystemState& s);

/// One search step: apply n to every equation, then simplify with the scheme.
/// Throws std::invalid_argument when n is not compatible with s.
SystemState step(const SystemState& s, const Narrowing& n, Scheme scheme);

}  // namespace weq
