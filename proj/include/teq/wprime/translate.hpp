#pragma once

#include <vector>

#include "teq/core/context.hpp"
#include "teq/core/sort.hpp"
#include "teq/core/syntax.hpp"
#include "teq/wprime/formula.hpp"

namespace teq::wprime {

// [[t]]C: join, terminates and contra become 0, everything else is kept.
Term trans_term_c(const Term& t);
// [[T]]C: effects are dropped, equations and termination types become nat.
Sort trans_type_c(const Type& t);
// [[T]]L w
Formula trans_type_l(const Type& t, const Term& w);
// [[T]]L! w = Terminates w /\ [[T]]L w,  [[T]]L? w = Terminates w => [[T]]L w
Formula trans_type_l_eff(const Type& t, Effect e, const Term& w);

struct TranslatedContext {
    std::vector<SortBinding> sigma;
    std::vector<Formula> hyps;
};

// Σ from [[|S|]]C per binding, H from [[|S|]]L! x per binding.
TranslatedContext trans_ctx(const Context& g);

// The soundness obligation for Γ ⊢ t : T θ:  [[Γ]]C ; [[Γ]]L ⊢ [[T]]Lθ [[t]]C.
Sequent make_obligation(const Context& g, const Term& t, const Type& type, Effect e);

}  // namespace teq::wprime
