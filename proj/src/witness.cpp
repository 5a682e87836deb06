#include "weq/witness.hpp"

#include <stdexcept>

#include "weq/narrow.hpp"

namespace weq {

bool verify(const NarrowingProgram& p, const std::vector<Equation>& system, Scheme scheme) {
    if (scheme == Scheme::Base && system.size() > 1) {
        throw std::invalid_argument("the base scheme handles exactly one equation");
    }
    SystemState state = system.empty() ? SystemState::accepted() : simplify(scheme, SystemState::eqs(system));
    for (const auto& n : p) {
        if (!is_compatible(n, state)) return false;
        state = simplify(scheme, apply_to_state(n, state));
    }
    return state.is_accepted();
}

}  // namespace weq
