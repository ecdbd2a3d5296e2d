#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "teq/core/result.hpp"
#include "teq/eval/eval.hpp"
#include "teq/wprime/formula.hpp"
#include "teq/wproof/proof.hpp"

namespace teq::wproof {

struct ProofConfig {
    // Upper bound on the fuel any OpSem step may request.
    std::size_t max_fuel = eval::kDefaultFuel;
};

struct ProofFailure {
    std::string rule;      // e.g. "Pv_Alli"
    std::string position;  // premise indices from the root, "root" or "1/0"
    std::string message;
    std::optional<Formula> expected;
    std::optional<Formula> actual;
};

Result<Unit, ProofFailure> check_proof(const wprime::Sequent& seq, const Proof& p,
                                       const ProofConfig& cfg = {});

// The formula a proof establishes when it can be read off without a goal
// (Assume, Alle, Impe, Ande*, Subst, CompInd, Term0).
Result<Formula, ProofFailure> infer_proof(const std::vector<wprime::SortBinding>& sigma,
                                          const std::vector<Formula>& hyps, const Proof& p,
                                          const ProofConfig& cfg = {});

}  // namespace teq::wproof
