#include "weq/core.hpp"

#include <algorithm>
#include <map>

namespace weq {

bool is_letter_char(char c) { return c >= 'A' && c <= 'Z'; }
bool is_var_char(char c) { return c >= 'a' && c <= 'z'; }

Term::Term(Letter l) : kind_(Kind::Letter), symbol_(l.symbol) {
    if (!is_letter_char(l.symbol)) {
        throw std::invalid_argument(std::string("not a letter: '") + l.symbol + "'");
    }
}

Term::Term(Var v) : kind_(Kind::Var), symbol_(v.name) {
    if (!is_var_char(v.name)) {
        throw std::invalid_argument(std::string("not a variable: '") + v.name + "'");
    }
}

Var Term::as_var() const {
    if (!is_var()) throw std::logic_error("term is not a variable");
    return Var{symbol_};
}

Letter Term::as_letter() const {
    if (!is_letter()) throw std::logic_error("term is not a letter");
    return Letter{symbol_};
}

SystemState SystemState::eqs(std::vector<Equation> equations) {
    return SystemState(Kind::Eqs, std::move(equations));
}

SystemState SystemState::contradiction() { return SystemState(Kind::Contradiction, {}); }

SystemState SystemState::accepted() { return SystemState(Kind::Accepted, {}); }

std::size_t SystemState::hash() const {
    // FNV-1a over a flat encoding; '|' separates sides, ';' equations.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](unsigned char c) {
        h ^= c;
        h *= 1099511628211ULL;
    };
    mix(static_cast<unsigned char>(kind_));
    for (const auto& e : equations_) {
        for (const auto& t : e.lhs) mix(static_cast<unsigned char>(t.symbol()));
        mix('|');
        for (const auto& t : e.rhs) mix(static_cast<unsigned char>(t.symbol()));
        mix(';');
    }
    return static_cast<std::size_t>(h);
}

Narrowing Narrowing::to_eps(Var x) {
    (void)Term{x};
    return Narrowing(Kind::ToEps, x, '\0');
}

Narrowing Narrowing::to_letter(Var x, Letter a) {
    (void)Term{x};
    (void)Term{a};
    return Narrowing(Kind::ToLetter, x, a.symbol);
}

Narrowing Narrowing::to_var(Var x, Var y) {
    (void)Term{x};
    (void)Term{y};
    if (x == y) {
        throw std::invalid_argument(std::string("narrowing ") + x.name + " -> " + y.name + " " +
                                    x.name + " maps a variable onto itself");
    }
    return Narrowing(Kind::ToVar, x, y.name);
}

Term Narrowing::head() const {
    switch (kind_) {
        case Kind::ToLetter: return Term{Letter{head_}};
        case Kind::ToVar: return Term{Var{head_}};
        case Kind::ToEps: break;
    }
    throw std::logic_error("x -> eps has no head term");
}

Word Narrowing::replacement() const {
    if (kind_ == Kind::ToEps) return {};
    return {head(), Term{var_}};
}

std::size_t count_occurrences(const Word& w, const Term& t) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), t));
}

std::size_t letter_count(const Word& w) {
    return static_cast<std::size_t>(
        std::count_if(w.begin(), w.end(), [](const Term& t) { return t.is_letter(); }));
}

bool is_var_permutated(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    std::map<char, long> balance;
    for (const auto& t : a) {
        if (t.is_var()) ++balance[t.symbol()];
    }
    for (const auto& t : b) {
        if (t.is_var()) --balance[t.symbol()];
    }
    return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
}

Word erase_letters(const Word& w) {
    Word out;
    std::copy_if(w.begin(), w.end(), std::back_inserter(out), [](const Term& t) { return t.is_var(); });
    return out;
}

std::set<Var> variables_of(const Word& w) {
    std::set<Var> out;
    for (const auto& t : w) {
        if (t.is_var()) out.insert(t.as_var());
    }
    return out;
}

std::set<Var> variables_of(const Equation& e) {
    auto out = variables_of(e.lhs);
    out.merge(variables_of(e.rhs));
    return out;
}

std::set<Var> variables_of(const std::vector<Equation>& system) {
    std::set<Var> out;
    for (const auto& e : system) out.merge(variables_of(e));
    return out;
}

std::set<Letter> letters_of(const std::vector<Equation>& system) {
    std::set<Letter> out;
    for (const auto& e : system) {
        for (const auto* side : {&e.lhs, &e.rhs}) {
            for (const auto& t : *side) {
                if (t.is_letter()) out.insert(t.as_letter());
            }
        }
    }
    return out;
}

Word apply_to_word(const Narrowing& n, const Word& w) {
    const Term x{n.var()};
    const Word repl = n.replacement();
    Word out;
    out.reserve(w.size() + (repl.empty() ? 0 : count_occurrences(w, x)));
    for (const auto& t : w) {
        if (t == x) {
            out.insert(out.end(), repl.begin(), repl.end());
        } else {
            out.push_back(t);
        }
    }
    return out;
}

Equation apply_to_equation(const Narrowing& n, const Equation& e) {
    return Equation{apply_to_word(n, e.lhs), apply_to_word(n, e.rhs)};
}

SystemState apply_to_state(const Narrowing& n, const SystemState& s) {
    if (!s.is_eqs()) {
        throw std::invalid_argument("cannot apply a narrowing to a contradiction or accepted state");
    }
    std::vector<Equation> out;
    out.reserve(s.equations().size());
    for (const auto& e : s.equations()) out.push_back(apply_to_equation(n, e));
    return SystemState::eqs(std::move(out));
}

Word compose_value(const NarrowingProgram& p, Var x) {
    Word w{Term{x}};
    for (const auto& n : p) w = apply_to_word(n, w);
    return w;
}

EquationClass classify(const Equation& e) {
    std::map<char, std::size_t> totals;
    for (const auto* side : {&e.lhs, &e.rhs}) {
        for (const auto& t : *side) {
            if (t.is_var()) ++totals[t.symbol()];
        }
    }
    EquationClass c;
    c.quadratic = std::all_of(totals.begin(), totals.end(), [](const auto& kv) { return kv.second <= 2; });
    c.linear = std::all_of(totals.begin(), totals.end(), [](const auto& kv) { return kv.second <= 1; });
    c.one_variable = totals.size() <= 1;
    c.strictly_regular_ordered_rep = erase_letters(e.lhs) == erase_letters(e.rhs);
    return c;
}

Word word(std::string_view text) {
    Word w;
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        if (is_letter_char(c)) {
            w.emplace_back(Letter{c});
        } else if (is_var_char(c)) {
            w.emplace_back(Var{c});
        } else {
            throw std::invalid_argument(std::string("illegal term character '") + c + "'");
        }
    }
    return w;
}

}  // namespace weq
