// Terms, words, equations and elementary narrowings.
//
// Letters are uppercase ASCII characters, variables are lowercase ASCII
// characters. A word is a finite sequence of terms; an equation is a pair of
// words. A SystemState is either an ordered list of equations, the
// contradiction marker, or the accepted (all equations trivial) marker.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weq {

struct Var {
    char name;
    auto operator<=>(const Var&) const = default;
};

struct Letter {
    char symbol;
    auto operator<=>(const Letter&) const = default;
};

bool is_letter_char(char c);
bool is_var_char(char c);

class Term {
public:
    enum class Kind : std::uint8_t { Letter, Var };

    // Throws std::invalid_argument if the character lies outside the
    // corresponding namespace.
    Term(Letter l);
    Term(Var v);

    Kind kind() const { return kind_; }
    bool is_letter() const { return kind_ == Kind::Letter; }
    bool is_var() const { return kind_ == Kind::Var; }
    char symbol() const { return symbol_; }

    Var as_var() const;
    Letter as_letter() const;

    auto operator<=>(const Term&) const = default;

private:
    Kind kind_;
    char symbol_;
};

using Word = std::vector<Term>;

struct Equation {
    Word lhs;
    Word rhs;

    std::size_t length() const { return lhs.size() + rhs.size(); }
    bool trivial() const { return lhs.empty() && rhs.empty(); }

    auto operator<=>(const Equation&) const = default;
};

class SystemState {
public:
    enum class Kind : std::uint8_t { Eqs, Contradiction, Accepted };

    static SystemState eqs(std::vector<Equation> equations);
    static SystemState contradiction();
    static SystemState accepted();

    Kind kind() const { return kind_; }
    bool is_eqs() const { return kind_ == Kind::Eqs; }
    bool is_contradiction() const { return kind_ == Kind::Contradiction; }
    bool is_accepted() const { return kind_ == Kind::Accepted; }

    // Empty for Contradiction and Accepted.
    const std::vector<Equation>& equations() const { return equations_; }

    std::size_t hash() const;

    bool operator==(const SystemState&) const = default;

private:
    SystemState(Kind kind, std::vector<Equation> equations)
        : kind_(kind), equations_(std::move(equations)) {}

    Kind kind_;
    std::vector<Equation> equations_;
};

/// Elementary substitution applied during the search:
///   x -> eps, x -> a x (a a letter), x -> y x (y a variable distinct from x).
class Narrowing {
public:
    enum class Kind : std::uint8_t { ToEps, ToLetter, ToVar };

    static Narrowing to_eps(Var x);
    static Narrowing to_letter(Var x, Letter a);
    // Throws std::invalid_argument when x == y.
    static Narrowing to_var(Var x, Var y);

    Kind kind() const { return kind_; }
    Var var() const { return var_; }
    // The term prepended to the variable; only meaningful for ToLetter/ToVar.
    Term head() const;

    // The word the variable is replaced with: eps, a x or y x.
    Word replacement() const;

    auto operator<=>(const Narrowing&) const = default;

private:
    Narrowing(Kind kind, Var var, char head) : kind_(kind), var_(var), head_(head) {}

    Kind kind_;
    Var var_;
    char head_;
};

using NarrowingProgram = std::vector<Narrowing>;

std::size_t count_occurrences(const Word& w, const Term& t);
std::size_t letter_count(const Word& w);
bool is_var_permutated(const Word& a, const Word& b);
Word erase_letters(const Word& w);

std::set<Var> variables_of(const Word& w);
std::set<Var> variables_of(const Equation& e);
std::set<Var> variables_of(const std::vector<Equation>& system);
std::set<Letter> letters_of(const std::vector<Equation>& system);

Word apply_to_word(const Narrowing& n, const Word& w);
Equation apply_to_equation(const Narrowing& n, const Equation& e);

// Throws std::invalid_argument unless s is an equation list.
SystemState apply_to_state(const Narrowing& n, const SystemState& s);

/// x * p[0] * p[1] * ..., i.e. the value the program assigns to x.
Word compose_value(const NarrowingProgram& p, Var x);

struct EquationClass {
    bool quadratic = false;
    bool strictly_regular_ordered_rep = false;
    bool one_variable = false;
    bool linear = false;
};

EquationClass classify(const Equation& e);

// Shorthand used heavily by tests: "xAy" -> [x, A, y]. Whitespace is skipped.
// Throws std::invalid_argument on any other character.
Word word(std::string_view text);

}  // namespace weq

template <>
struct std::hash<weq::SystemState> {
    std::size_t operator()(const weq::SystemState& s) const noexcept { return s.hash(); }
};
