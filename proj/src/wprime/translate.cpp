#include "teq/wprime/translate.hpp"

#include <array>

#include "teq/core/erase.hpp"

namespace teq::wprime {

namespace {

Expr comp(const Expr& e) {
    switch (e.kind()) {
    case Kind::Join:
    case Kind::TermPf:
    case Kind::Contra:
        return term::zero().expr();
    case Kind::Var:
    case Kind::Bound:
        return e;
    default: {
        std::vector<Expr> kids;
        kids.reserve(e.arity());
        for (const Expr& c : e.children()) kids.push_back(comp(c));
        return with_children(e, std::move(kids));
    }
    }
}

Sort sort_of(const Expr& t) {
    if (t.kind() == Kind::Pi) return Sort::arrow(sort_of(t.child(0)), sort_of(t.child(1)));
    return Sort::nat();
}

}  // namespace

Term trans_term_c(const Term& t) { return Term(comp(t.expr())); }

Sort trans_type_c(const Type& t) { return sort_of(t.expr()); }

Formula trans_type_l(const Type& t, const Term& w) {
    const Expr& e = t.expr();
    switch (e.kind()) {
    case Kind::Nat:
        return formula::truth();
    case Kind::Eq:
        return formula::eq(trans_term_c(Term(e.child(0))), trans_term_c(Term(e.child(1))));
    case Kind::TermTy:
        return formula::terminates(trans_term_c(Term(e.child(0))));
    case Kind::Pi: {
        NameSet avoid = free_names(e);
        NameSet wv = free_names(w.expr());
        avoid.insert(wv.begin(), wv.end());
        std::string x = freshen(e.hints()[0], avoid);
        std::array<std::string, 1> names{x};
        Type dom(e.child(0));
        Type cod(open_child(e, 1, names));
        Term arg = term::var(x);
        Formula body = formula::imp(trans_type_l_eff(dom, Effect::Total, arg),
                                    trans_type_l_eff(cod, e.effect(), term::app(w, arg)));
        return formula::forall(x, trans_type_c(dom), body);
    }
    default:
        throw std::invalid_argument("trans_type_l: not a type");
    }
}

Formula trans_type_l_eff(const Type& t, Effect e, const Term& w) {
    Formula term = formula::terminates(w);
    Formula logical = trans_type_l(t, w);
    return e == Effect::Total ? formula::conj(term, logical) : formula::imp(term, logical);
}

TranslatedContext trans_ctx(const Context& g) {
    TranslatedContext out;
    for (const Binding& b : g.bindings()) {
        Type t = erase_type(b.type);
        out.sigma.push_back({b.name, trans_type_c(t)});
        out.hyps.push_back(trans_type_l_eff(t, Effect::Total, term::var(b.name)));
    }
    return out;
}

Sequent make_obligation(const Context& g, const Term& t, const Type& type, Effect e) {
    TranslatedContext c = trans_ctx(g);
    return Sequent(std::move(c.sigma), std::move(c.hyps),
                   trans_type_l_eff(type, e, trans_term_c(t)));
}

}  // namespace teq::wprime
