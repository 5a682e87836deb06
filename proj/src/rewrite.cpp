#include "weq/rewrite.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace weq {

namespace {

// Per-variable occurrence balance of two equally long word prefixes. The
// prefixes are var-permutated exactly when no variable is out of balance.
class Balance {
public:
    void add(const Term& left, const Term& right) {
        if (left == right) return;
        if (left.is_var()) bump(left.symbol(), +1);
        if (right.is_var()) bump(right.symbol(), -1);
    }

    bool even() const { return unbalanced_ == 0; }

private:
    void bump(char v, int delta) {
        int& slot = counts_[static_cast<unsigned char>(v)];
        if (slot == 0) ++unbalanced_;
        slot += delta;
        if (slot == 0) --unbalanced_;
    }

    std::array<int, 128> counts_{};
    int unbalanced_ = 0;
};

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

}  // namespace

std::string_view to_string(Scheme s) {
    switch (s) {
        case Scheme::Base: return "base";
        case Scheme::Split: return "split";
        case Scheme::Count: return "count";
    }
    return "?";
}

Scheme parse_scheme(std::string_view name) {
    if (name == "base") return Scheme::Base;
    if (name == "split") return Scheme::Split;
    if (name == "count") return Scheme::Count;
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "' (expected base, split or count)");
}

std::optional<Equation> reduce(const Equation& e) {
    const Word& l = e.lhs;
    const Word& r = e.rhs;
    std::size_t begin = 0;
    const std::size_t shortest = std::min(l.size(), r.size());
    while (begin < shortest && l[begin] == r[begin]) ++begin;

    std::size_t l_end = l.size();
    std::size_t r_end = r.size();
    while (l_end > begin && r_end > begin && l[l_end - 1] == r[r_end - 1]) {
        --l_end;
        --r_end;
    }

    if (begin < l_end && begin < r_end) {
        if (l[begin].is_letter() && r[begin].is_letter()) return std::nullopt;
        if (l[l_end - 1].is_letter() && r[r_end - 1].is_letter()) return std::nullopt;
    }
    return Equation{slice(l, begin, l_end), slice(r, begin, r_end)};
}

std::optional<PrefixSplit> left_split(const Equation& e) {
    const std::size_t shortest = std::min(e.lhs.size(), e.rhs.size());
    Balance balance;
    for (std::size_t len = 1; len <= shortest; ++len) {
        balance.add(e.lhs[len - 1], e.rhs[len - 1]);
        if (balance.even()) {
            return PrefixSplit{
                Equation{slice(e.lhs, 0, len), slice(e.rhs, 0, len)},
                Equation{slice(e.lhs, len, e.lhs.size()), slice(e.rhs, len, e.rhs.size())},
            };
        }
    }
    return std::nullopt;
}

std::optional<SuffixSplit> right_split(const Equation& e) {
    const std::size_t nl = e.lhs.size();
    const std::size_t nr = e.rhs.size();
    const std::size_t shortest = std::min(nl, nr);
    Balance balance;
    for (std::size_t len = 1; len <= shortest; ++len) {
        balance.add(e.lhs[nl - len], e.rhs[nr - len]);
        if (balance.even()) {
            return SuffixSplit{
                Equation{slice(e.lhs, 0, nl - len), slice(e.rhs, 0, nr - len)},
                Equation{slice(e.lhs, nl - len, nl), slice(e.rhs, nr - len, nr)},
            };
        }
    }
    return std::nullopt;
}

namespace {

template <typename SplitFn>
SplitOutcome exhaustive_split(const Equation& e, SplitFn split_once) {
    SplitOutcome out;
    auto current = reduce(e);
    std::vector<Equation> pieces;
    while (current) {
        auto split = split_once(*current);
        if (!split) break;
        auto [piece, rest] = std::move(*split);
        auto reduced_piece = reduce(piece);
        if (!reduced_piece) {
            out.contradiction = true;
            return out;
        }
        pieces.push_back(std::move(*reduced_piece));
        current = reduce(rest);
    }
    if (!current) {
        out.contradiction = true;
        return out;
    }
    out.pieces.reserve(pieces.size() + 1);
    out.pieces.push_back(std::move(*current));
    std::move(pieces.begin(), pieces.end(), std::back_inserter(out.pieces));
    return out;
}

}  // namespace

SplitOutcome exhaustive_left_split(const Equation& e) {
    return exhaustive_split(e, [](const Equation& eq) -> std::optional<std::pair<Equation, Equation>> {
        auto s = left_split(eq);
        if (!s) return std::nullopt;
        return std::pair{std::move(s->prefix), std::move(s->remainder)};
    });
}

SplitOutcome exhaustive_right_split(const Equation& e) {
    return exhaustive_split(e, [](const Equation& eq) -> std::optional<std::pair<Equation, Equation>> {
        auto s = right_split(eq);
        if (!s) return std::nullopt;
        return std::pair{std::move(s->suffix), std::move(s->remainder)};
    });
}

bool count_unsat(const Equation& e) {
    std::array<long, 128> lhs{};
    std::array<long, 128> rhs{};
    long lhs_letters = 0;
    long rhs_letters = 0;
    for (const auto& t : e.lhs) {
        if (t.is_var()) ++lhs[static_cast<unsigned char>(t.symbol())];
        else ++lhs_letters;
    }
    for (const auto& t : e.rhs) {
        if (t.is_var()) ++rhs[static_cast<unsigned char>(t.symbol())];
        else ++rhs_letters;
    }
    auto dominates = [](const std::array<long, 128>& big, const std::array<long, 128>& small) {
        for (std::size_t i = 0; i < big.size(); ++i) {
            if (big[i] < small[i]) return false;
        }
        return true;
    };
    return (lhs_letters > rhs_letters && dominates(lhs, rhs)) ||
           (rhs_letters > lhs_letters && dominates(rhs, lhs));
}

namespace {

// Splits one equation for the Split scheme. Returns false on contradiction.
bool split_equation(const Equation& e, std::vector<Equation>& out) {
    auto outcome = exhaustive_left_split(e);
    if (outcome.contradiction) return false;
    for (auto& piece : outcome.pieces) {
        if (!piece.trivial()) out.push_back(std::move(piece));
    }
    return true;
}

// Count scheme: alternate left and right splitting of the remainder until
// neither applies, then run the counting check. Pieces come out as
// [remainder, prefixes..., suffixes...] in discovery order.
bool count_equation(const Equation& e, std::vector<Equation>& out) {
    std::vector<Equation> prefixes;
    std::vector<Equation> suffixes;
    Equation remainder = e;
    bool first = true;
    for (;;) {
        auto left = exhaustive_left_split(remainder);
        if (left.contradiction) return false;
        const bool left_changed = left.pieces.size() > 1;
        remainder = std::move(left.pieces.front());
        std::move(left.pieces.begin() + 1, left.pieces.end(), std::back_inserter(prefixes));
        if (!first && !left_changed) break;

        auto right = exhaustive_right_split(remainder);
        if (right.contradiction) return false;
        const bool right_changed = right.pieces.size() > 1;
        remainder = std::move(right.pieces.front());
        std::move(right.pieces.begin() + 1, right.pieces.end(), std::back_inserter(suffixes));
        if (!right_changed) break;
        first = false;
    }

    std::vector<Equation> pieces;
    pieces.reserve(1 + prefixes.size() + suffixes.size());
    pieces.push_back(std::move(remainder));
    std::move(prefixes.begin(), prefixes.end(), std::back_inserter(pieces));
    std::move(suffixes.begin(), suffixes.end(), std::back_inserter(pieces));
    for (auto& piece : pieces) {
        if (piece.trivial()) continue;
        if (count_unsat(piece)) return false;
        out.push_back(std::move(piece));
    }
    return true;
}

}  // namespace

SystemState simplify(Scheme scheme, const SystemState& s) {
    if (!s.is_eqs()) {
        throw std::invalid_argument("simplify expects an equation list");
    }
    const auto& eqs = s.equations();
    if (scheme == Scheme::Base) {
        if (eqs.size() != 1) {
            throw std::invalid_argument("the base scheme handles exactly one equation, got " +
                                        std::to_string(eqs.size()));
        }
        auto r = reduce(eqs.front());
        if (!r) return SystemState::contradiction();
        if (r->trivial()) return SystemState::accepted();
        return SystemState::eqs({std::move(*r)});
    }

    std::vector<Equation> out;
    for (const auto& e : eqs) {
        const bool ok = scheme == Scheme::Split ? split_equation(e, out) : count_equation(e, out);
        if (!ok) return SystemState::contradiction();
    }
    if (out.empty()) return SystemState::accepted();
    return SystemState::eqs(std::move(out));
}

}  // namespace weq
