#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "teq/core/sort.hpp"
#include "teq/core/syntax.hpp"
#include "teq/eval/eval.hpp"
#include "teq/frontend/lexer.hpp"
#include "teq/frontend/program.hpp"
#include "teq/wprime/formula.hpp"
#include "teq/wproof/proof.hpp"

namespace teq::frontend {

// Each entry point consumes the whole input and throws ParseError otherwise.
ATerm parse_aterm(std::string_view src);
AType parse_atype(std::string_view src);
Term parse_term(std::string_view src);
Type parse_type(std::string_view src);
Formula parse_formula(std::string_view src);
Sort parse_sort(std::string_view src);
// An implicit term with exactly one `_` in evaluation position.
eval::EvalContext parse_context(std::string_view src);
wproof::Proof parse_proof_term(std::string_view src);

struct ProofBlock {
    wprime::Sequent sequent;
    wproof::Proof proof;
    Position pos;
};

// One or more `[sigma: ...] [hyps: ...] goal: F [proof:] P` blocks.
std::vector<ProofBlock> parse_proof_script(std::string_view src);
// Exactly one block.
std::pair<wprime::Sequent, wproof::Proof> parse_proof(std::string_view src);

SourceFile parse_program(std::string_view src);

}  // namespace teq::frontend
