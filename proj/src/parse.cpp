#include "weq/parse.hpp"

#include <fstream>
#include <sstream>

namespace weq {

namespace {

std::string make_message(std::size_t line, std::size_t column, const std::string& message) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

// Splits on LF, dropping a trailing CR from every line.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool all_blank(std::string_view s) {
    for (char c : s) {
        if (!is_blank(c)) return false;
    }
    return true;
}

std::string quote(char c) {
    if (c >= 0x20 && c < 0x7f) return std::string("'") + c + "'";
    std::ostringstream os;
    os << "byte 0x" << std::hex << static_cast<int>(static_cast<unsigned char>(c));
    return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(make_message(line, column, message)), line_(line), column_(column) {}

std::vector<Equation> parse_system(std::string_view text) {
    std::vector<Equation> system;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::string_view line = strip_comment(lines[i]);
        if (all_blank(line)) continue;

        Equation eq;
        Word* side = &eq.lhs;
        bool seen_eq = false;
        for (std::size_t col = 0; col < line.size(); ++col) {
            const char c = line[col];
            if (is_blank(c)) continue;
            if (c == '=') {
                if (seen_eq) throw ParseError(line_no, col + 1, "duplicate '='");
                seen_eq = true;
                side = &eq.rhs;
            } else if (is_letter_char(c)) {
                side->emplace_back(Letter{c});
            } else if (is_var_char(c)) {
                side->emplace_back(Var{c});
            } else {
                throw ParseError(line_no, col + 1, "illegal character " + quote(c));
            }
        }
        if (!seen_eq) throw ParseError(line_no, line.size() + 1, "missing '='");
        system.push_back(std::move(eq));
    }
    if (system.empty()) throw ParseError(1, 1, "no equations");
    return system;
}

NarrowingProgram parse_program(std::string_view text) {
    NarrowingProgram program;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::string_view line = strip_comment(lines[i]);
        if (all_blank(line)) continue;

        // (character, column) pairs with blanks removed.
        std::vector<std::pair<char, std::size_t>> toks;
        for (std::size_t col = 0; col < line.size(); ++col) {
            if (!is_blank(line[col])) toks.emplace_back(line[col], col + 1);
        }
        auto fail = [&](std::size_t k, const std::string& msg) -> ParseError {
            const std::size_t col = k < toks.size() ? toks[k].second : line.size() + 1;
            return ParseError(line_no, col, msg);
        };

        if (!is_var_char(toks[0].first)) throw fail(0, "narrowing must start with a variable");
        const Var head{toks[0].first};
        if (toks.size() < 3 || toks[1].first != '-' || toks[2].first != '>') {
            throw fail(1, "expected '->' after the variable");
        }
        const std::size_t rest = toks.size() - 3;
        if (rest == 0) {
            program.push_back(Narrowing::to_eps(head));
            continue;
        }
        if (rest != 2) throw fail(3, "expected 'x ->', 'x -> A x' or 'x -> y x'");
        const char t = toks[3].first;
        const char tail = toks[4].first;
        if (!is_var_char(tail) || tail != head.name) {
            throw fail(4, std::string("trailing term must repeat the variable '") + head.name + "'");
        }
        if (is_letter_char(t)) {
            program.push_back(Narrowing::to_letter(head, Letter{t}));
        } else if (is_var_char(t)) {
            if (t == head.name) throw fail(3, "a variable cannot be prepended to itself");
            program.push_back(Narrowing::to_var(head, Var{t}));
        } else {
            throw fail(3, "illegal character " + quote(t));
        }
    }
    return program;
}

std::string serialize_word(const Word& w) {
    std::string out;
    for (const auto& t : w) {
        if (!out.empty()) out += ' ';
        out += t.symbol();
    }
    return out;
}

std::string serialize_equation(const Equation& e) {
    std::string out = serialize_word(e.lhs);
    out += out.empty() ? "=" : " =";
    if (!e.rhs.empty()) {
        out += ' ';
        out += serialize_word(e.rhs);
    }
    return out;
}

std::string serialize_system(const std::vector<Equation>& system) {
    std::string out;
    for (std::size_t i = 0; i < system.size(); ++i) {
        if (i) out += '\n';
        out += serialize_equation(system[i]);
    }
    return out;
}

std::string serialize_narrowing(const Narrowing& n) {
    std::string out(1, n.var().name);
    out += " ->";
    if (n.kind() != Narrowing::Kind::ToEps) {
        out += ' ';
        out += n.head().symbol();
        out += ' ';
        out += n.var().name;
    }
    return out;
}

std::string serialize_program(const NarrowingProgram& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += '\n';
        out += serialize_narrowing(p[i]);
    }
    return out;
}

std::string serialize_state(const SystemState& s) {
    switch (s.kind()) {
        case SystemState::Kind::Accepted: return "T";
        case SystemState::Kind::Contradiction: return "F";
        case SystemState::Kind::Eqs: break;
    }
    return serialize_system(s.equations());
}

std::string serialize_assignment(const std::map<Var, Word>& assignment) {
    std::string out;
    for (const auto& [v, value] : assignment) {
        if (!out.empty()) out += ", ";
        out += v.name;
        out += '=';
        for (const auto& t : value) out += t.symbol();
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace weq
