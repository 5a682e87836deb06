// Shared helpers for the unit tests: compact literals and seeded generators.

#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "weq/core.hpp"
#include "weq/solutions.hpp"

namespace weq::testing {

// "xAy=yAx" -> Equation; spaces are not allowed, '=' separates the sides.
inline Equation eq(std::string_view text) {
    const auto at = text.find('=');
    return Equation{word(text.substr(0, at)), word(text.substr(at + 1))};
}

inline std::vector<Equation> eqs(std::initializer_list<std::string_view> texts) {
    std::vector<Equation> out;
    for (auto t : texts) out.push_back(eq(t));
    return out;
}

inline SystemState state(std::initializer_list<std::string_view> texts) { return SystemState::eqs(eqs(texts)); }

inline Narrowing eps(char x) { return Narrowing::to_eps(Var{x}); }
inline Narrowing letter(char x, char a) { return Narrowing::to_letter(Var{x}, Letter{a}); }
inline Narrowing var(char x, char y) { return Narrowing::to_var(Var{x}, Var{y}); }

// {"x=A", "y="} style assignment literal.
inline Assignment assign(std::initializer_list<std::pair<char, std::string_view>> values) {
    Assignment a;
    for (auto [v, w] : values) a[Var{v}] = word(w);
    return a;
}

inline std::set<Letter> alphabet(std::string_view letters) {
    std::set<Letter> out;
    for (char c : letters) out.insert(Letter{c});
    return out;
}

// A word over the given letters and variables, each term picked uniformly.
inline Word random_word(std::mt19937_64& rng, std::size_t max_len, std::string_view terms) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, terms.size() - 1);
    std::string text;
    for (std::size_t n = len(rng); n > 0; --n) text += terms[pick(rng)];
    return word(text);
}

inline Equation random_equation(std::mt19937_64& rng, std::size_t max_side, std::string_view terms) {
    return Equation{random_word(rng, max_side, terms), random_word(rng, max_side, terms)};
}

}  // namespace weq::testing
