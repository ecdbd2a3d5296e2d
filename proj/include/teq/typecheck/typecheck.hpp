#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "teq/core/context.hpp"
#include "teq/core/result.hpp"
#include "teq/core/syntax.hpp"
#include "teq/eval/eval.hpp"

namespace teq::check {

struct CheckConfig {
    std::size_t join_fuel = eval::kDefaultFuel;
};

// A failed premise.  `premise` counts the rule's premises left to right from
// 1; 0 stands for a side condition on the conclusion (A_Abort's effect, a
// duplicate name in Oka_cons).  `path` is the chain of child labels from
// the checked term (or type) down to the offending node.
struct Diagnostic {
    std::string rule;
    int premise = 0;
    std::string path;
    std::string message;
    std::optional<AType> expected;
    std::optional<AType> actual;
};

bool subeffect(Effect rho, Effect theta);

Result<Unit, Diagnostic> wf_context(const Context& g, const CheckConfig& cfg = {});
Result<Unit, Diagnostic> wf_type(const Context& g, const AType& s, const CheckConfig& cfg = {});
// Γ ⊩ a : S θ with S the output.  Assumes Γ is well formed.
Result<AType, Diagnostic> infer(const Context& g, const ATerm& a, Effect theta,
                                const CheckConfig& cfg = {});

std::optional<eval::EvalContext> find_eval_position(const Term& big, const Term& sub);

}  // namespace teq::check
