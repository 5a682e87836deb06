#include "weq/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace weq {

std::vector<Assignment> brute_solutions(const std::vector<Equation>& system, const std::set<Letter>& alphabet,
                                        std::size_t max_value_len) {
    if (alphabet.empty()) throw std::invalid_argument("oracle needs a non-empty alphabet");
    const auto var_set = variables_of(system);
    const std::vector<Var> vars(var_set.begin(), var_set.end());
    const auto words = words_up_to(alphabet, max_value_len);

    std::vector<Assignment> out;
    std::vector<std::size_t> pick(vars.size(), 0);
    Assignment a;
    for (;;) {
        for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = words[pick[i]];
        if (satisfies(system, a)) out.push_back(a);

        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == words.size()) pick[k++] = 0;
        if (k == pick.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool brute_sat(const std::vector<Equation>& system, const std::set<Letter>& alphabet, std::size_t max_value_len) {
    return !brute_solutions(system, alphabet, max_value_len).empty();
}

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Term random_letter(Rng& rng, const std::string& alphabet) {
    return Term{Letter{alphabet[uniform(rng, 0, alphabet.size() - 1)]}};
}

Var nth_var(std::size_t i) {
    // x, y, z, then wrap through the rest of the alphabet.
    static constexpr char names[] = "xyzuvwabcdefghijklmnopqrst";
    return Var{names[i % (sizeof(names) - 1)]};
}

// Splits a token sequence at a random cut into the two sides.
Equation cut(Rng& rng, const Word& tokens) {
    const std::size_t at = tokens.empty() ? 0 : uniform(rng, 0, tokens.size());
    return Equation{Word(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(at)),
                    Word(tokens.begin() + static_cast<std::ptrdiff_t>(at), tokens.end())};
}

// Inserts `count` random letters at random positions.
Word sprinkle(Rng& rng, Word w, std::size_t count, const std::string& alphabet) {
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t at = uniform(rng, 0, w.size());
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(at), random_letter(rng, alphabet));
    }
    return w;
}

Equation gen_quadratic(Rng& rng, const GenParams& p) {
    Word tokens;
    for (std::size_t v = 0; v < p.vars; ++v) {
        const std::size_t times = uniform(rng, 1, 2);
        for (std::size_t k = 0; k < times; ++k) tokens.emplace_back(nth_var(v));
    }
    while (tokens.size() < p.length) tokens.push_back(random_letter(rng, p.alphabet));
    std::shuffle(tokens.begin(), tokens.end(), rng);
    return cut(rng, tokens);
}

Word random_var_sequence(Rng& rng, std::size_t len, std::size_t vars) {
    Word seq;
    for (std::size_t i = 0; i < len; ++i) seq.emplace_back(nth_var(uniform(rng, 0, vars - 1)));
    return seq;
}

Equation gen_sro(Rng& rng, const GenParams& p) {
    const std::size_t max_seq = std::max<std::size_t>(1, p.length / 2);
    const std::size_t seq_len = uniform(rng, 1, max_seq);
    const Word seq = random_var_sequence(rng, seq_len, std::max<std::size_t>(1, p.vars));
    const std::size_t letters = p.length > 2 * seq_len ? p.length - 2 * seq_len : 0;
    const std::size_t left = uniform(rng, 0, letters);
    return Equation{sprinkle(rng, seq, left, p.alphabet), sprinkle(rng, seq, letters - left, p.alphabet)};
}

// Half of the instances are planted: the rhs re-reads lhs[x := v] for a
// random short v, folding some occurrences of v back into x.
Equation gen_planted_one_variable(Rng& rng, const GenParams& p) {
    Word lhs;
    const std::size_t half = std::max<std::size_t>(1, p.length / 2);
    for (std::size_t i = 0; i < half; ++i) {
        if (uniform(rng, 0, 2) == 0) {
            lhs.emplace_back(Var{'x'});
        } else {
            lhs.push_back(random_letter(rng, p.alphabet));
        }
    }
    lhs[uniform(rng, 0, half - 1)] = Term{Var{'x'}};

    Word value;
    for (std::size_t i = uniform(rng, 0, 2); i > 0; --i) value.push_back(random_letter(rng, p.alphabet));
    Word ground;
    for (const auto& t : lhs) {
        if (t.is_var()) {
            ground.insert(ground.end(), value.begin(), value.end());
        } else {
            ground.push_back(t);
        }
    }

    Word rhs;
    bool has_var = false;
    for (std::size_t at = 0; at <= ground.size();) {
        const bool fits = at + value.size() <= ground.size() &&
                          std::equal(value.begin(), value.end(), ground.begin() + static_cast<std::ptrdiff_t>(at));
        if (fits && uniform(rng, 0, 1) == 0 && (!value.empty() || !has_var)) {
            rhs.emplace_back(Var{'x'});
            has_var = true;
            at += value.size();
            if (!value.empty()) continue;
        }
        if (at == ground.size()) break;
        rhs.push_back(ground[at++]);
    }
    if (!has_var) {
        lhs.emplace_back(Var{'x'});
        rhs.emplace_back(Var{'x'});
    }
    return Equation{lhs, rhs};
}

Equation gen_one_variable(Rng& rng, const GenParams& p) {
    if (uniform(rng, 0, 1) == 0) return gen_planted_one_variable(rng, p);
    Word tokens;
    for (std::size_t i = 0; i < p.length; ++i) {
        if (uniform(rng, 0, 2) == 0) {
            tokens.emplace_back(Var{'x'});
        } else {
            tokens.push_back(random_letter(rng, p.alphabet));
        }
    }
    return cut(rng, tokens);
}

Equation gen_random(Rng& rng, const GenParams& p) {
    Word tokens;
    for (std::size_t i = 0; i < p.length; ++i) {
        if (p.vars > 0 && uniform(rng, 0, 4) < 3) {
            tokens.emplace_back(nth_var(uniform(rng, 0, p.vars - 1)));
        } else {
            tokens.push_back(random_letter(rng, p.alphabet));
        }
    }
    return cut(rng, tokens);
}

bool in_class(InstanceClass cls, const Equation& e) {
    const auto c = classify(e);
    switch (cls) {
        case InstanceClass::Quadratic: return c.quadratic;
        case InstanceClass::SroRep: return c.strictly_regular_ordered_rep;
        case InstanceClass::OneVariable: return c.one_variable;
        case InstanceClass::Random: return true;
    }
    return false;
}

}  // namespace

std::vector<Equation> gen_instance(InstanceClass cls, std::uint64_t seed, const GenParams& params) {
    if (params.alphabet.empty()) throw std::invalid_argument("generator needs a non-empty alphabet");
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(cls));
    std::vector<Equation> out;
    for (std::size_t i = 0; i < std::max<std::size_t>(1, params.equations); ++i) {
        Equation e;
        switch (cls) {
            case InstanceClass::Quadratic: e = gen_quadratic(rng, params); break;
            case InstanceClass::SroRep: e = gen_sro(rng, params); break;
            case InstanceClass::OneVariable: e = gen_one_variable(rng, params); break;
            case InstanceClass::Random: e = gen_random(rng, params); break;
        }
        if (!in_class(cls, e)) throw std::logic_error("generator produced an equation outside its class");
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

// A regular-ordered equation with repetitions over the variables
// first_var, first_var+1, ...
Equation family_sro(Rng& rng, std::size_t first_var, std::size_t vars, std::size_t seq_len, std::size_t letters) {
    Word seq;
    for (std::size_t i = 0; i < seq_len; ++i) seq.emplace_back(nth_var(first_var + uniform(rng, 0, vars - 1)));
    const std::size_t left = uniform(rng, 1, std::max<std::size_t>(1, letters));
    const std::size_t right = letters > left ? letters - left : 0;
    return Equation{sprinkle(rng, seq, left, "AB"), sprinkle(rng, seq, right, "AB")};
}

Word random_word(Rng& rng, std::size_t len, std::size_t first_var, std::size_t vars) {
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
        if (uniform(rng, 0, 2) == 0) {
            w.push_back(random_letter(rng, "AB"));
        } else {
            w.emplace_back(nth_var(first_var + uniform(rng, 0, vars - 1)));
        }
    }
    return w;
}

}  // namespace

std::vector<Equation> gen_family(int family, std::uint64_t seed) {
    Rng rng(seed * 0xD1B54A32D192ED03ULL + static_cast<std::uint64_t>(family));
    switch (family) {
        case 1:
            return {family_sro(rng, 0, uniform(rng, 2, 3), uniform(rng, 3, 5), uniform(rng, 2, 4))};
        case 2: {
            Equation e = family_sro(rng, 0, uniform(rng, 2, 3), uniform(rng, 3, 5), uniform(rng, 2, 4));
            Word rhs_vars = erase_letters(e.rhs);
            std::shuffle(rhs_vars.begin(), rhs_vars.end(), rng);
            Word rhs;
            std::size_t k = 0;
            for (const auto& t : e.rhs) rhs.push_back(t.is_var() ? rhs_vars[k++] : t);
            return {Equation{e.lhs, rhs}};
        }
        case 3: {
            // Variables y, z, ... only; x wraps the equation.
            Equation inner = family_sro(rng, 1, uniform(rng, 1, 2), uniform(rng, 2, 3), uniform(rng, 1, 3));
            Word lhs{Term{Var{'x'}}};
            lhs.insert(lhs.end(), inner.lhs.begin(), inner.lhs.end());
            Word rhs = inner.rhs;
            rhs.emplace_back(Var{'x'});
            return {Equation{lhs, rhs}};
        }
        case 4: {
            Equation sro = family_sro(rng, 0, 2, uniform(rng, 2, 4), uniform(rng, 1, 3));
            Word p = random_word(rng, uniform(rng, 1, 2), 0, 3);
            Word q = random_word(rng, uniform(rng, 1, 2), 0, 3);
            Word pq = p;
            pq.insert(pq.end(), q.begin(), q.end());
            Word qp = q;
            qp.insert(qp.end(), p.begin(), p.end());
            return {sro, Equation{pq, qp}};
        }
        case 5: {
            const std::size_t vars = uniform(rng, 2, 3);
            Word lhs = random_word(rng, uniform(rng, 3, 5), 0, vars);
            Word rhs = random_word(rng, uniform(rng, 3, 5), 0, vars);
            return {Equation{lhs, rhs}};
        }
        default: break;
    }
    throw std::invalid_argument("benchmark family must be in 1..5, got " + std::to_string(family));
}

}  // namespace weq
