#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace teq::frontend {

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(Position pos, const std::string& what);
    Position position() const { return pos_; }
    // Message without the location prefix.
    const std::string& detail() const { return detail_; }

private:
    Position pos_;
    std::string detail_;
};

enum class Tok : std::uint8_t {
    Ident,
    Number,
    Hole,       // _
    Backslash,  // \ (also accepts λ)
    Bang,
    Question,
    Colon,
    Dot,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Equals,
    Implies,  // =>
    And,      // /\ .
    Arrow,    // ->
    End,
};

struct Token {
    Tok kind;
    std::string text;
    Position pos;
};

// `--` starts a comment running to the end of the line.
std::vector<Token> tokenize(std::string_view src);

bool is_reserved(std::string_view word);

}  // namespace teq::frontend
