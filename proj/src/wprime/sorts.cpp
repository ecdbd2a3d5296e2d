#include "teq/wprime/sorts.hpp"

namespace teq::wprime {

Sort SortSolver::fresh() {
    binding_.emplace_back(std::nullopt);
    return Sort::var(static_cast<std::uint32_t>(binding_.size() - 1));
}

Sort SortSolver::resolve(const Sort& s) const {
    switch (s.tag()) {
    case Sort::Tag::Nat:
        return s;
    case Sort::Tag::Var: {
        const auto& b = binding_[s.var_id()];
        return b ? resolve(*b) : s;
    }
    case Sort::Tag::Arrow:
        return Sort::arrow(resolve(s.dom()), resolve(s.cod()));
    }
    return s;
}

bool SortSolver::occurs(std::uint32_t id, const Sort& s) const {
    switch (s.tag()) {
    case Sort::Tag::Nat:
        return false;
    case Sort::Tag::Var:
        return s.var_id() == id;
    case Sort::Tag::Arrow:
        return occurs(id, s.dom()) || occurs(id, s.cod());
    }
    return false;
}

bool SortSolver::unify(const Sort& a, const Sort& b) {
    equations_.emplace_back(a, b);
    return unify_resolved(resolve(a), resolve(b));
}

bool SortSolver::unify_resolved(const Sort& a, const Sort& b) {
    if (a.is_var() && b.is_var() && a.var_id() == b.var_id()) return true;
    if (a.is_var()) {
        if (occurs(a.var_id(), b)) return false;
        binding_[a.var_id()] = b;
        return true;
    }
    if (b.is_var()) return unify_resolved(b, a);
    if (a.tag() != b.tag()) return false;
    if (a.is_nat()) return true;
    if (!unify_resolved(a.dom(), b.dom())) return false;
    return unify_resolved(resolve(a.cod()), resolve(b.cod()));
}

namespace {

struct Failed {
    SortError err;
};

class Generator {
public:
    Generator(const std::vector<SortBinding>& sigma, SortSolver& s) : sigma_(sigma), s_(s) {}

    void gen(const Expr& e, const Sort& want) {
        switch (e.kind()) {
        case Kind::Var: {
            for (auto it = sigma_.rbegin(); it != sigma_.rend(); ++it)
                if (it->name == e.name()) return equate("STy_Var", it->sort, want, e.name());
            throw Failed{{"STy_Var", e.name() + " is not in the sort context"}};
        }
        case Kind::Bound:
            return equate("STy_Var", stack_[stack_.size() - 1 - e.index()], want, "bound variable");
        case Kind::Zero:
            return equate("STy_Zero", Sort::nat(), want, "0");
        case Kind::Suc:
            equate("STy_Suc", Sort::nat(), want, "Suc");
            return gen(e.child(0), Sort::nat());
        case Kind::Lam: {
            Sort a = s_.fresh();
            Sort b = s_.fresh();
            equate("STy_Abs", Sort::arrow(a, b), want, "abstraction");
            stack_.push_back(a);
            gen(e.child(0), b);
            stack_.pop_back();
            return;
        }
        case Kind::App: {
            Sort a = s_.fresh();
            gen(e.child(0), Sort::arrow(a, want));
            return gen(e.child(1), a);
        }
        case Kind::Rec: {
            Sort a = s_.fresh();
            Sort b = s_.fresh();
            Sort fn = Sort::arrow(a, b);
            equate("STy_Rec", fn, want, "rec");
            stack_.push_back(fn);
            stack_.push_back(a);
            gen(e.child(0), b);
            stack_.pop_back();
            stack_.pop_back();
            return;
        }
        case Kind::Case:
            gen(e.child(0), Sort::nat());
            gen(e.child(1), want);
            return gen(e.child(2), Sort::arrow(Sort::nat(), want));
        case Kind::Abort:
            return;
        case Kind::Join:
        case Kind::TermPf:
        case Kind::Contra:
            throw Failed{{"STy", "logical constant outside the W' term language"}};
        default:
            throw Failed{{"STy", "not a term"}};
        }
    }

private:
    void equate(const char* rule, const Sort& have, const Sort& want, const std::string& what) {
        if (!s_.unify(have, want))
            throw Failed{{rule, what + ": cannot use sort " + to_string(s_.resolve(have)) +
                                    " at sort " + to_string(s_.resolve(want))}};
    }

    const std::vector<SortBinding>& sigma_;
    SortSolver& s_;
    std::vector<Sort> stack_;
};

}  // namespace

Result<Unit, SortError> sty_check(const std::vector<SortBinding>& sigma, const Term& t,
                                  const Sort& expected, SortSolver& solver) {
    try {
        Generator(sigma, solver).gen(t.expr(), expected);
        return Unit{};
    } catch (const Failed& f) {
        return f.err;
    }
}

Result<Unit, SortError> sty_check(const std::vector<SortBinding>& sigma, const Term& t,
                                  const Sort& expected) {
    SortSolver solver;
    return sty_check(sigma, t, expected, solver);
}

}  // namespace teq::wprime
