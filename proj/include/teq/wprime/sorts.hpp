#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "teq/core/result.hpp"
#include "teq/core/sort.hpp"
#include "teq/core/syntax.hpp"
#include "teq/wprime/formula.hpp"

namespace teq::wprime {

struct SortError {
    std::string rule;  // STy_* rule whose equation failed
    std::string message;
};

// First-order unification over sorts with occurs check.  Every equation
// handed to `unify` is kept so a caller can audit the final solution.
class SortSolver {
public:
    Sort fresh();
    bool unify(const Sort& a, const Sort& b);
    Sort resolve(const Sort& s) const;

    const std::vector<std::pair<Sort, Sort>>& equations() const { return equations_; }

private:
    bool occurs(std::uint32_t id, const Sort& s) const;
    bool unify_resolved(const Sort& a, const Sort& b);

    std::vector<std::optional<Sort>> binding_;
    std::vector<std::pair<Sort, Sort>> equations_;
};

// Σ ⊢ t : A.  `rec` is typed at any A' -> A (the A_Rec rule allows any
// domain); abort at every sort.  join, terminates and contra are rejected:
// they are not W' terms.
Result<Unit, SortError> sty_check(const std::vector<SortBinding>& sigma, const Term& t,
                                  const Sort& expected);

// Same, exposing the solver for inspection.
Result<Unit, SortError> sty_check(const std::vector<SortBinding>& sigma, const Term& t,
                                  const Sort& expected, SortSolver& solver);

}  // namespace teq::wprime
