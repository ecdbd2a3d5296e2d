#include "teq/typecheck/typecheck.hpp"

#include <array>

#include "teq/core/erase.hpp"

namespace teq::check {

bool subeffect(Effect rho, Effect theta) { return rho == theta || rho == Effect::Total; }

std::optional<eval::EvalContext> find_eval_position(const Term& big, const Term& sub) {
    return eval::find_eval_position(big, sub);
}

namespace {

struct Failure {
    Diagnostic diag;
};

Expr pi_node(Effect e, const std::string& hint, const Expr& dom, const Expr& cod_closed) {
    Expr::Payload p;
    p.effect = e;
    return Expr::node(Kind::APi, {hint}, {dom, cod_closed}, p);
}

Expr pi_open(Effect e, const std::string& hint, const Expr& dom, const Expr& cod,
             const std::string& x) {
    std::array<std::string, 1> names{x};
    return pi_node(e, hint, dom, abstract(cod, names));
}

const Expr& nat_type() {
    static const Expr n = atype::nat().expr();
    return n;
}

bool same(const Expr& a, const Expr& b) { return alpha_equal(a, b); }

class Checker {
public:
    explicit Checker(const CheckConfig& cfg) : cfg_(cfg) {}

    Expr infer(const Context& g, const Expr& a, Effect th);
    void wf(const Context& g, const Expr& s);
    void wf_context(const Context& g);

private:
    class Segment {
    public:
        Segment(Checker& c, std::string label) : c_(c) { c_.path_.push_back(std::move(label)); }
        ~Segment() { c_.path_.pop_back(); }
        Segment(const Segment&) = delete;
        Segment& operator=(const Segment&) = delete;

    private:
        Checker& c_;
    };

    [[noreturn]] void fail(std::string rule, int premise, std::string message,
                           std::optional<Expr> expected = std::nullopt,
                           std::optional<Expr> actual = std::nullopt) const {
        Diagnostic d;
        d.rule = std::move(rule);
        d.premise = premise;
        d.message = std::move(message);
        for (std::size_t i = 0; i < path_.size(); ++i) d.path += (i ? "/" : "") + path_[i];
        if (expected) d.expected = AType(*expected);
        if (actual) d.actual = AType(*actual);
        throw Failure{std::move(d)};
    }

    Expr sub_infer(const char* label, const Context& g, const Expr& a, Effect th) {
        Segment s(*this, label);
        return infer(g, a, th);
    }
    void sub_wf(const char* label, const Context& g, const Expr& s) {
        Segment seg(*this, label);
        wf(g, s);
    }

    static std::string fresh(const Context& g, const Expr& e, const std::string& hint,
                             const NameSet& extra = {}) {
        NameSet avoid = g.names();
        NameSet fv = free_names(e);
        avoid.insert(fv.begin(), fv.end());
        avoid.insert(extra.begin(), extra.end());
        return freshen(hint, avoid);
    }

    Expr infer_rec(const Context& g, const Expr& a);
    Expr infer_recnat(const Context& g, const Expr& a);
    Expr infer_case(const Context& g, const Expr& a, Effect th);

    const CheckConfig& cfg_;
    std::vector<std::string> path_;
};

Expr Checker::infer(const Context& g, const Expr& a, Effect th) {
    switch (a.kind()) {
    case Kind::Var: {
        auto t = g.lookup(a.name());
        if (!t) fail("A_Var", 1, "unbound variable " + a.name());
        return t->expr();
    }
    case Kind::AZero:
        return nat_type();
    case Kind::ASuc: {
        Expr t = sub_infer("pred", g, a.child(0), th);
        if (!same(t, nat_type())) fail("A_Suc", 1, "Suc applied to a non-nat", nat_type(), t);
        return nat_type();
    }
    case Kind::ALam: {
        const Expr& dom = a.child(0);
        sub_wf("dom", g, dom);
        std::string x = fresh(g, a, a.hints()[0]);
        std::array<std::string, 1> names{x};
        Context inner = g.extended(x, AType(dom));
        Expr cod = sub_infer("body", inner, open_child(a, 1, names), a.effect());
        sub_wf("body", inner, cod);
        return pi_open(a.effect(), a.hints()[0], dom, cod, x);
    }
    case Kind::AApp: {
        Expr ft = sub_infer("fn", g, a.child(0), th);
        if (ft.kind() != Kind::APi) fail("A_App", 1, "applied term is not a function", {}, ft);
        Expr at = sub_infer("arg", g, a.child(1), th);
        if (!same(at, ft.child(0))) fail("A_App", 2, "argument type mismatch", ft.child(0), at);
        if (!subeffect(ft.effect(), th))
            fail("A_App", 3, "latent effect ? applied in a total (!) position");
        std::array<Expr, 1> vals{a.child(1)};
        return instantiate_child(ft, 1, vals);
    }
    case Kind::AJoin: {
        sub_infer("lhs", g, a.child(0), Effect::General);
        sub_infer("rhs", g, a.child(1), Effect::General);
        Term l = erase_term(ATerm(a.child(0)));
        Term r = erase_term(ATerm(a.child(1)));
        if (!eval::joinable(l, r, cfg_.join_fuel))
            fail("A_Join", 1,
                 "erasures have no common reduct within " + std::to_string(cfg_.join_fuel) +
                     " steps");
        return atype::eq(ATerm(a.child(0)), ATerm(a.child(1))).expr();
    }
    case Kind::AConv: {
        Expr pt = sub_infer("proof", g, a.child(2), Effect::Total);
        if (pt.kind() != Kind::AEq) fail("A_Conv", 2, "proof is not an equation", {}, pt);
        std::array<Expr, 1> rhs{pt.child(1)};
        std::array<Expr, 1> lhs{pt.child(0)};
        Expr want = instantiate_child(a, 0, rhs);
        Expr st = sub_infer("subject", g, a.child(1), th);
        if (!same(st, want)) fail("A_Conv", 1, "subject type does not match [a2/x]S", want, st);
        Expr out = instantiate_child(a, 0, lhs);
        sub_wf("motive", g, out);
        return out;
    }
    case Kind::AReflect: {
        Expr st = sub_infer("subject", g, a.child(0), Effect::General);
        Expr pt = sub_infer("proof", g, a.child(1), Effect::Total);
        if (pt.kind() != Kind::ATermTy || !same(pt.child(0), a.child(0)))
            fail("A_Reflect", 2, "proof must show termination of the subject",
                 atype::terminates(ATerm(a.child(0))).expr(), pt);
        return st;
    }
    case Kind::ATerminates:
        sub_infer("subject", g, a.child(0), Effect::Total);
        return atype::terminates(ATerm(a.child(0))).expr();
    case Kind::AInv: {
        Expr pt = sub_infer("proof", g, a.child(0), th);
        if (pt.kind() != Kind::ATermTy) fail("A_CtxTerm", 1, "expected a termination proof", {}, pt);
        Term big = erase_term(ATerm(pt.child(0)));
        Term sub = erase_term(ATerm(a.child(1)));
        if (!eval::find_eval_position(big, sub))
            fail("A_CtxTerm", 2, "subterm is not in evaluation position");
        return atype::terminates(ATerm(a.child(1))).expr();
    }
    case Kind::ARec:
        return infer_rec(g, a);
    case Kind::ARecNat:
        return infer_recnat(g, a);
    case Kind::ACase:
        return infer_case(g, a, th);
    case Kind::AContra: {
        Expr pt = sub_infer("proof", g, a.child(1), Effect::Total);
        if (pt.kind() != Kind::AEq || pt.child(0).kind() != Kind::AZero ||
            pt.child(1).kind() != Kind::ASuc)
            fail("A_Contra", 1, "expected a proof of 0 = Suc a'", {}, pt);
        sub_wf("type", g, a.child(0));
        return a.child(0);
    }
    case Kind::AAbort:
        if (th != Effect::General) fail("A_Abort", 0, "abort is only typeable at effect ?");
        return a.child(0);
    default:
        fail("A_Var", 1, "not an annotated term");
    }
}

Expr Checker::infer_rec(const Context& g, const Expr& a) {
    std::string f = fresh(g, a, a.hints()[0]);
    std::string x = fresh(g, a, a.hints()[1], {f});
    std::array<std::string, 2> names{f, x};
    const Expr& dom = a.child(0);
    Expr pi = pi_node(Effect::General, a.hints()[1], dom, a.child(1));
    sub_wf("type", g, pi);
    Context inner = g.extended(f, AType(pi)).extended(x, AType(dom));
    Expr want = open_child(a, 1, names);
    Expr bt = sub_infer("body", inner, open_child(a, 2, names), Effect::General);
    if (!same(bt, want)) fail("A_Rec", 1, "body type does not match the declared result type", want, bt);
    return pi;
}

Expr Checker::infer_recnat(const Context& g, const Expr& a) {
    std::string f = fresh(g, a, a.hints()[0]);
    std::string x = fresh(g, a, a.hints()[1], {f});
    std::string p = fresh(g, a, a.hints()[2], {f, x});
    std::array<std::string, 3> names{f, x, p};
    Expr body = open_child(a, 1, names);
    if (occurs_free(erase_term(ATerm(body)).expr(), p)) {
        Segment s(*this, "body");
        fail("A_RecNat", 1, "the termination hypothesis " + a.hints()[2] +
                                " is used computationally");
    }
    Expr fty = pi_node(Effect::General, a.hints()[1], nat_type(), a.child(0));
    sub_wf("type", g, fty);

    // p : Π! x1:nat. Π! p':(x = Suc x1). Terminates (f x1)
    NameSet taken{f, x, p};
    std::string x1 = freshen("x1", taken);
    std::string p1 = freshen("p'", taken);
    AType pty = atype::pi(
        Effect::Total, x1, atype::nat(),
        atype::pi(Effect::Total, p1, atype::eq(aterm::var(x), aterm::suc(aterm::var(x1))),
                  atype::terminates(aterm::app(aterm::var(f), aterm::var(x1)))));
    Context inner = g.extended(f, AType(fty)).extended(x, atype::nat());
    sub_wf("type", inner, pty.expr());
    inner.push(p, pty);

    Expr want = open_child(a, 0, names);
    Expr bt = sub_infer("body", inner, body, Effect::Total);
    if (!same(bt, want))
        fail("A_RecNat", 2, "body type does not match the declared result type", want, bt);
    return pi_node(Effect::Total, a.hints()[1], nat_type(), a.child(0));
}

Expr Checker::infer_case(const Context& g, const Expr& a, Effect th) {
    Expr st = sub_infer("scrutinee", g, a.child(1), th);
    if (!same(st, nat_type())) fail("A_Case", 1, "scrutinee is not a nat", nat_type(), st);

    std::array<Expr, 1> zero{aterm::zero().expr()};
    Expr want0 = instantiate_child(a, 0, zero);
    Expr zt = sub_infer("zero", g, a.child(2), th);
    if (!same(zt, want0)) fail("A_Case", 2, "zero branch type mismatch", want0, zt);

    Expr nt = sub_infer("succ", g, a.child(3), th);
    if (nt.kind() != Kind::APi || !same(nt.child(0), nat_type()))
        fail("A_Case", 3, "successor branch must be a function over nat", {}, nt);
    std::string y = fresh(g, a, "x'", free_names(nt));
    std::array<std::string, 1> yn{y};
    std::array<Expr, 1> succ{aterm::suc(aterm::var(y)).expr()};
    Expr b = open_child(nt, 1, yn);
    Expr want1 = instantiate_child(a, 0, succ);
    if (!same(b, want1)) fail("A_Case", 3, "successor branch type mismatch", want1, b);
    if (!subeffect(nt.effect(), th))
        fail("A_Case", 4, "successor branch has latent effect ? in a total (!) position");

    std::array<Expr, 1> scrut{a.child(1)};
    return instantiate_child(a, 0, scrut);
}

void Checker::wf(const Context& g, const Expr& s) {
    switch (s.kind()) {
    case Kind::ANat:
        return;
    case Kind::APi: {
        sub_wf("dom", g, s.child(0));
        std::string x = fresh(g, s, s.hints()[0]);
        std::array<std::string, 1> names{x};
        sub_wf("cod", g.extended(x, AType(s.child(0))), open_child(s, 1, names));
        return;
    }
    case Kind::AEq: {
        Expr l = sub_infer("lhs", g, s.child(0), Effect::General);
        Expr r = sub_infer("rhs", g, s.child(1), Effect::General);
        sub_wf("lhs", g, l);
        sub_wf("rhs", g, r);
        return;
    }
    case Kind::ATermTy:
        sub_infer("subject", g, s.child(0), Effect::General);
        return;
    default:
        fail("S_Nat", 0, "not an annotated type");
    }
}

void Checker::wf_context(const Context& g) {
    Context prefix;
    for (const Binding& b : g.bindings()) {
        Segment s(*this, b.name);
        if (prefix.binds(b.name)) fail("Oka_cons", 0, b.name + " is bound twice");
        wf(prefix, b.type.expr());
        prefix.push(b.name, b.type);
    }
}

}  // namespace

Result<Unit, Diagnostic> wf_context(const Context& g, const CheckConfig& cfg) {
    try {
        Checker(cfg).wf_context(g);
        return Unit{};
    } catch (const Failure& f) {
        return f.diag;
    }
}

Result<Unit, Diagnostic> wf_type(const Context& g, const AType& s, const CheckConfig& cfg) {
    try {
        Checker(cfg).wf(g, s.expr());
        return Unit{};
    } catch (const Failure& f) {
        return f.diag;
    }
}

Result<AType, Diagnostic> infer(const Context& g, const ATerm& a, Effect theta,
                                const CheckConfig& cfg) {
    try {
        return AType(Checker(cfg).infer(g, a.expr(), theta));
    } catch (const Failure& f) {
        return f.diag;
    }
}

}  // namespace teq::check
