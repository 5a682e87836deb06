#include "weq/narrow.hpp"

#include <algorithm>
#include <stdexcept>

namespace weq {

std::vector<Narrowing> compatible_narrowings(const SystemState& s) {
    if (!s.is_eqs() || s.equations().empty()) {
        throw std::invalid_argument("narrowings are only defined for a non-empty equation list");
    }
    const Equation& first = s.equations().front();
    if (first.trivial()) {
        throw std::invalid_argument("first equation is trivial");
    }

    if (first.lhs.empty() || first.rhs.empty()) {
        const Term& t = first.lhs.empty() ? first.rhs.front() : first.lhs.front();
        if (t.is_var()) return {Narrowing::to_eps(t.as_var())};
        return {};
    }

    const Term& p = first.lhs.front();
    const Term& q = first.rhs.front();
    if (p.is_letter() && q.is_letter()) return {};
    if (p.is_var() && q.is_var()) {
        if (p == q) throw std::logic_error("first equation is not reduced");
        const Var x = p.as_var();
        const Var y = q.as_var();
        return {Narrowing::to_eps(x), Narrowing::to_eps(y), Narrowing::to_var(x, y), Narrowing::to_var(y, x)};
    }
    const Var x = p.is_var() ? p.as_var() : q.as_var();
    const Letter a = p.is_letter() ? p.as_letter() : q.as_letter();
    return {Narrowing::to_eps(x), Narrowing::to_letter(x, a)};
}

bool is_compatible(const Narrowing& n, const SystemState& s) {
    if (!s.is_eqs() || s.equations().empty() || s.equations().front().trivial()) return false;
    const auto all = compatible_narrowings(s);
    return std::find(all.begin(), all.end(), n) != all.end();
}

SystemState step(const SystemState& s, const Narrowing& n, Scheme scheme) {
    if (!is_compatible(n, s)) {
        throw std::invalid_argument("narrowing is not compatible with the first equation");
    }
    return simplify(scheme, apply_to_state(n, s));
}

}  // namespace weq
