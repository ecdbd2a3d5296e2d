#pragma once

#include <optional>
#include <string>
#include <vector>

#include "teq/core/context.hpp"
#include "teq/core/effect.hpp"
#include "teq/core/syntax.hpp"
#include "teq/frontend/lexer.hpp"

namespace teq::frontend {

struct Definition {
    std::string name;
    ATerm source;  // as written
    ATerm body;    // earlier definitions substituted in
    Position pos;
};

struct Assumption {
    std::string name;
    AType type;  // definitions substituted in
    Position pos;
};

enum class DirectiveKind : std::uint8_t { Check, Obligation, Eval };

struct Directive {
    DirectiveKind kind;
    std::string name;
    std::optional<AType> type;     // check only; inlined
    std::optional<Effect> effect;  // absent: the driver's default
    Context context;               // assumptions made before the directive
    Position pos;
};

// A program: definitions are macros, so every stored body and type is closed
// over the definitions that precede it.
struct SourceFile {
    std::vector<Definition> definitions;
    std::vector<Assumption> assumptions;
    std::vector<Directive> directives;

    const Definition* find(const std::string& name) const;
};

}  // namespace teq::frontend
