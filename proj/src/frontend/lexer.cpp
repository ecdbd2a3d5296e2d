#include "teq/frontend/lexer.hpp"

#include <cctype>

namespace teq::frontend {

ParseError::ParseError(Position pos, const std::string& what)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " +
                         what),
      pos_(pos),
      detail_(what) {}

namespace {

constexpr std::string_view kReserved[] = {
    // annotated and implicit terms, types
    "nat", "Pi", "Term", "Suc", "rec", "recnat", "case", "join", "conv", "by", "reflect",
    "tm", "inv", "at", "contra", "abort", "terminates",
    // formulas and sequents
    "True", "forall", "sigma", "hyps", "goal", "proof",
    // program directives
    "def", "check", "eval", "obligation", "assume",
    // proof rules
    "alli", "alle", "impi", "impe", "andi", "ande1", "ande2", "truei", "ind", "compind",
    "term0", "termS", "termabs", "termrec", "terminv", "nottermabort", "opsem", "subst",
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

bool is_reserved(std::string_view word) {
    for (auto w : kReserved)
        if (w == word) return true;
    return false;
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    Position pos;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
            if (src[i] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
                ++pos.column;
            }
        }
    };
    auto emit = [&](Tok k, std::size_t len) {
        out.push_back({k, std::string(src.substr(i, len)), pos});
        advance(len);
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (src.substr(i, 2) == "--") {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (src.substr(i, 2) == "=>") { emit(Tok::Implies, 2); continue; }
        if (src.substr(i, 2) == "/\\") { emit(Tok::And, 2); continue; }
        if (src.substr(i, 2) == "->") { emit(Tok::Arrow, 2); continue; }
        if (src.substr(i, 2) == "\xCE\xBB") { emit(Tok::Backslash, 2); continue; }  // λ
        if (ident_start(c)) {
            std::size_t j = i + 1;
            while (j < src.size() && ident_char(src[j])) ++j;
            if (j - i == 1 && c == '_') {
                emit(Tok::Hole, 1);
            } else {
                emit(Tok::Ident, j - i);
            }
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            emit(Tok::Number, j - i);
            continue;
        }
        switch (c) {
        case '\\': emit(Tok::Backslash, 1); continue;
        case '!': emit(Tok::Bang, 1); continue;
        case '?': emit(Tok::Question, 1); continue;
        case ':': emit(Tok::Colon, 1); continue;
        case '.': emit(Tok::Dot, 1); continue;
        case ',': emit(Tok::Comma, 1); continue;
        case '(': emit(Tok::LParen, 1); continue;
        case ')': emit(Tok::RParen, 1); continue;
        case '[': emit(Tok::LBracket, 1); continue;
        case ']': emit(Tok::RBracket, 1); continue;
        case '=': emit(Tok::Equals, 1); continue;
        default:
            throw ParseError(pos, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", pos});
    return out;
}

}  // namespace teq::frontend
