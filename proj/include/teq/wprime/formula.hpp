#pragma once

#include <optional>
#include <string>
#include <vector>

#include "teq/core/sort.hpp"
#include "teq/core/syntax.hpp"

namespace teq::wprime {

namespace formula {
Formula truth();
Formula forall(std::string x, Sort a, Formula body);
Formula imp(Formula premise, Formula conclusion);
Formula conj(Formula left, Formula right);
Formula terminates(Term t);
Formula eq(Term lhs, Term rhs);
}  // namespace formula

// Capture-avoiding [t/x]F.
Formula formula_subst(const Formula& f, const std::string& x, const Term& t);

struct SortBinding {
    std::string name;
    Sort sort;
};

// Σ ; H ⊢ F.  Construction rejects free variables outside Σ.
class Sequent {
public:
    Sequent(std::vector<SortBinding> sigma, std::vector<Formula> hyps, Formula goal);

    const std::vector<SortBinding>& sigma() const { return sigma_; }
    const std::vector<Formula>& hyps() const { return hyps_; }
    const Formula& goal() const { return goal_; }

    std::optional<Sort> lookup(const std::string& x) const;
    NameSet sigma_names() const;

private:
    std::vector<SortBinding> sigma_;
    std::vector<Formula> hyps_;
    Formula goal_;
};

}  // namespace teq::wprime
