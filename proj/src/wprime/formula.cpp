#include "teq/wprime/formula.hpp"

#include <array>
#include <stdexcept>

namespace teq::wprime {

namespace formula {

Formula truth() { return Formula(Expr::node(Kind::FTrue, {}, {})); }

Formula forall(std::string x, Sort a, Formula body) {
    std::array<std::string, 1> names{x};
    Expr::Payload p;
    p.sort = std::move(a);
    return Formula(
        Expr::node(Kind::FForall, {std::move(x)}, {abstract(body.expr(), names)}, std::move(p)));
}

Formula imp(Formula l, Formula r) { return Formula(Expr::node(Kind::FImp, {}, {l.expr(), r.expr()})); }
Formula conj(Formula l, Formula r) { return Formula(Expr::node(Kind::FAnd, {}, {l.expr(), r.expr()})); }
Formula terminates(Term t) { return Formula(Expr::node(Kind::FTerm, {}, {t.expr()})); }
Formula eq(Term l, Term r) { return Formula(Expr::node(Kind::FEq, {}, {l.expr(), r.expr()})); }

}  // namespace formula

Formula formula_subst(const Formula& f, const std::string& x, const Term& t) {
    return Formula(substitute(f.expr(), x, t.expr()));
}

Sequent::Sequent(std::vector<SortBinding> sigma, std::vector<Formula> hyps, Formula goal)
    : sigma_(std::move(sigma)), hyps_(std::move(hyps)), goal_(std::move(goal)) {
    NameSet dom = sigma_names();
    auto check = [&](const Formula& f, const char* where) {
        for (const auto& v : free_vars(f))
            if (dom.count(v) == 0)
                throw std::invalid_argument(std::string(where) + " mentions " + v +
                                            ", which sigma does not bind");
    };
    for (const auto& h : hyps_) check(h, "a hypothesis");
    check(goal_, "the goal");
}

std::optional<Sort> Sequent::lookup(const std::string& x) const {
    for (auto it = sigma_.rbegin(); it != sigma_.rend(); ++it)
        if (it->name == x) return it->sort;
    return std::nullopt;
}

NameSet Sequent::sigma_names() const {
    NameSet out;
    for (const auto& b : sigma_) out.insert(b.name);
    return out;
}

}  // namespace teq::wprime
