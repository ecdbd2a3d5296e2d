#include "teq/core/syntax.hpp"

#include <array>

namespace teq {

bool admits(Category c, Kind k) {
    if (k == Kind::Bound) return c != Category::Type && c != Category::AType &&
                                 c != Category::Formula;
    switch (c) {
    case Category::Term:
        return k == Kind::Var || (k >= Kind::App && k <= Kind::Abort);
    case Category::Type:
        return k >= Kind::Nat && k <= Kind::TermTy;
    case Category::ATerm:
        return k == Kind::Var || (k >= Kind::AApp && k <= Kind::AAbort);
    case Category::AType:
        return k >= Kind::ANat && k <= Kind::ATermTy;
    case Category::Formula:
        return k >= Kind::FTrue && k <= Kind::FEq;
    }
    return false;
}

Term subst_term(const Term& body, const std::string& x, const Term& v) {
    return Term(substitute(body.expr(), x, v.expr()));
}

Type subst_type(const Type& body, const std::string& x, const Term& v) {
    return Type(substitute(body.expr(), x, v.expr()));
}

ATerm subst_aterm(const ATerm& body, const std::string& x, const ATerm& v) {
    return ATerm(substitute(body.expr(), x, v.expr()));
}

AType subst_atype(const AType& body, const std::string& x, const ATerm& v) {
    return AType(substitute(body.expr(), x, v.expr()));
}

bool is_unannotated(const Expr& e) {
    if (e.kind() >= Kind::AApp) return false;
    for (const Expr& c : e.children())
        if (!is_unannotated(c)) return false;
    return true;
}

namespace {

Expr leaf(Kind k) { return Expr::node(k, {}, {}); }

Expr binder(Kind k, Effect eff, std::vector<std::string> names, std::vector<Expr> kids) {
    std::vector<Expr> closed;
    closed.reserve(kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i) {
        std::vector<std::string> bound;
        for (auto slot : binder_slots(k, i)) bound.push_back(names[slot]);
        closed.push_back(abstract(kids[i], bound));
    }
    Expr::Payload p;
    p.effect = eff;
    return Expr::node(k, std::move(names), std::move(closed), std::move(p));
}

}  // namespace

namespace term {
Term var(std::string x) { return Term(Expr::free(std::move(x))); }
Term app(Term f, Term a) { return Term(Expr::node(Kind::App, {}, {f.expr(), a.expr()})); }
Term apps(Term f, std::vector<Term> args) {
    for (auto& a : args) f = app(f, a);
    return f;
}
Term lam(std::string x, Term body) {
    return Term(binder(Kind::Lam, Effect::Total, {std::move(x)}, {body.expr()}));
}
Term zero() { return Term(leaf(Kind::Zero)); }
Term suc(Term t) { return Term(Expr::node(Kind::Suc, {}, {t.expr()})); }
Term numeral(unsigned n) {
    Term t = zero();
    while (n-- > 0) t = suc(t);
    return t;
}
Term rec(std::string f, std::string x, Term body) {
    return Term(binder(Kind::Rec, Effect::Total, {std::move(f), std::move(x)}, {body.expr()}));
}
Term cases(Term s, Term z, Term n) {
    return Term(Expr::node(Kind::Case, {}, {s.expr(), z.expr(), n.expr()}));
}
Term join() { return Term(leaf(Kind::Join)); }
Term terminates() { return Term(leaf(Kind::TermPf)); }
Term contra() { return Term(leaf(Kind::Contra)); }
Term abort() { return Term(leaf(Kind::Abort)); }
}  // namespace term

namespace type {
Type nat() { return Type(leaf(Kind::Nat)); }
Type pi(Effect e, std::string x, Type dom, Type cod) {
    return Type(binder(Kind::Pi, e, {std::move(x)}, {dom.expr(), cod.expr()}));
}
Type eq(Term l, Term r) { return Type(Expr::node(Kind::Eq, {}, {l.expr(), r.expr()})); }
Type terminates(Term t) { return Type(Expr::node(Kind::TermTy, {}, {t.expr()})); }
}  // namespace type

namespace aterm {
ATerm var(std::string x) { return ATerm(Expr::free(std::move(x))); }
ATerm app(ATerm f, ATerm a) { return ATerm(Expr::node(Kind::AApp, {}, {f.expr(), a.expr()})); }
ATerm apps(ATerm f, std::vector<ATerm> args) {
    for (auto& a : args) f = app(f, a);
    return f;
}
ATerm lam(Effect e, std::string x, AType dom, ATerm body) {
    return ATerm(binder(Kind::ALam, e, {std::move(x)}, {dom.expr(), body.expr()}));
}
ATerm zero() { return ATerm(leaf(Kind::AZero)); }
ATerm suc(ATerm a) { return ATerm(Expr::node(Kind::ASuc, {}, {a.expr()})); }
ATerm recnat(std::string f, std::string x, std::string p, AType cod, ATerm body) {
    return ATerm(binder(Kind::ARecNat, Effect::Total, {std::move(f), std::move(x), std::move(p)},
                        {cod.expr(), body.expr()}));
}
ATerm rec(std::string f, std::string x, AType dom, AType cod, ATerm body) {
    return ATerm(binder(Kind::ARec, Effect::General, {std::move(f), std::move(x)},
                        {dom.expr(), cod.expr(), body.expr()}));
}
ATerm cases(std::string x, AType motive, ATerm s, ATerm z, ATerm n) {
    return ATerm(binder(Kind::ACase, Effect::Total, {std::move(x)},
                        {motive.expr(), s.expr(), z.expr(), n.expr()}));
}
ATerm join(ATerm l, ATerm r) { return ATerm(Expr::node(Kind::AJoin, {}, {l.expr(), r.expr()})); }
ATerm conv(std::string x, AType motive, ATerm subject, ATerm proof) {
    return ATerm(binder(Kind::AConv, Effect::Total, {std::move(x)},
                        {motive.expr(), subject.expr(), proof.expr()}));
}
ATerm reflect(ATerm subject, ATerm proof) {
    return ATerm(Expr::node(Kind::AReflect, {}, {subject.expr(), proof.expr()}));
}
ATerm tm(ATerm subject) { return ATerm(Expr::node(Kind::ATerminates, {}, {subject.expr()})); }
ATerm inv(ATerm proof, ATerm sub) {
    return ATerm(Expr::node(Kind::AInv, {}, {proof.expr(), sub.expr()}));
}
ATerm contra(AType t, ATerm proof) {
    return ATerm(Expr::node(Kind::AContra, {}, {t.expr(), proof.expr()}));
}
ATerm abort(AType t) { return ATerm(Expr::node(Kind::AAbort, {}, {t.expr()})); }
}  // namespace aterm

namespace atype {
AType nat() { return AType(leaf(Kind::ANat)); }
AType pi(Effect e, std::string x, AType dom, AType cod) {
    return AType(binder(Kind::APi, e, {std::move(x)}, {dom.expr(), cod.expr()}));
}
AType eq(ATerm l, ATerm r) { return AType(Expr::node(Kind::AEq, {}, {l.expr(), r.expr()})); }
AType terminates(ATerm a) { return AType(Expr::node(Kind::ATermTy, {}, {a.expr()})); }
}  // namespace atype

}  // namespace teq
