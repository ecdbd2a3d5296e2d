#include "teq/core/erase.hpp"

#include <array>

namespace teq {

namespace {

Expr node0(Kind k) { return Expr::node(k, {}, {}); }

Expr erase(const Expr& a) {
    switch (a.kind()) {
    case Kind::Var:
    case Kind::Bound:
        return a;
    case Kind::AApp:
        return Expr::node(Kind::App, {}, {erase(a.child(0)), erase(a.child(1))});
    case Kind::ALam:
        return Expr::node(Kind::Lam, a.hints(), {erase(a.child(1))});
    case Kind::AZero:
        return node0(Kind::Zero);
    case Kind::ASuc:
        return Expr::node(Kind::Suc, {}, {erase(a.child(0))});
    case Kind::ARecNat: {
        // The body binds f x p.  p never occurs in checked code; erasure is
        // total though, and an escaping p becomes the constant terminates so
        // that the result stays closed under substitution.
        const auto& h = a.hints();
        NameSet avoid = free_names(a.child(1));
        std::string f = freshen(h[0], avoid);
        avoid.insert(f);
        std::string x = freshen(h[1], avoid);
        avoid.insert(x);
        std::string p = freshen("%p", avoid);
        std::array<std::string, 3> names{f, x, p};
        Expr body = erase(open_child(a, 1, names));
        body = substitute(body, p, node0(Kind::TermPf));
        std::array<std::string, 2> closing{f, x};
        return Expr::node(Kind::Rec, {h[0], h[1]}, {abstract(body, closing)});
    }
    case Kind::ARec:
        return Expr::node(Kind::Rec, a.hints(), {erase(a.child(2))});
    case Kind::ACase:
        return Expr::node(Kind::Case, {},
                          {erase(a.child(1)), erase(a.child(2)), erase(a.child(3))});
    case Kind::AJoin:
        return node0(Kind::Join);
    case Kind::AConv:
        return erase(a.child(1));
    case Kind::AReflect:
    case Kind::AInv:
        return erase(a.child(0));
    case Kind::ATerminates:
        return node0(Kind::TermPf);
    case Kind::AContra:
        return node0(Kind::Contra);
    case Kind::AAbort:
        return node0(Kind::Abort);
    case Kind::ANat:
        return node0(Kind::Nat);
    case Kind::APi: {
        Expr::Payload p;
        p.effect = a.effect();
        return Expr::node(Kind::Pi, a.hints(), {erase(a.child(0)), erase(a.child(1))}, p);
    }
    case Kind::AEq:
        return Expr::node(Kind::Eq, {}, {erase(a.child(0)), erase(a.child(1))});
    case Kind::ATermTy:
        return Expr::node(Kind::TermTy, {}, {erase(a.child(0))});
    default:
        throw std::invalid_argument("erase: not annotated syntax");
    }
}

}  // namespace

Term erase_term(const ATerm& a) { return Term(erase(a.expr())); }
Type erase_type(const AType& s) { return Type(erase(s.expr())); }

}  // namespace teq
