#include "gen.hpp"

#include <functional>
#include <optional>

namespace teq::testgen {

std::string Gen::binder(std::vector<std::string>& scope) {
    static const std::vector<std::string> pool = {"x", "y", "z", "f", "g", "u", "v", "w"};
    std::string n = pick(pool);
    scope.push_back(n);
    return n;
}

Sort Gen::sort(int depth) {
    if (depth <= 0 || chance(0.5)) return Sort::nat();
    return Sort::arrow(sort(depth - 1), sort(depth - 1));
}

Term Gen::value(int depth, std::vector<std::string> scope) {
    std::size_t k = below(depth <= 0 ? 4 : 8);
    switch (k) {
        case 0:
            return term::zero();
        case 1:
            if (!scope.empty()) return term::var(pick(scope));
            return term::zero();
        case 2:
            return term::join();
        case 3:
            return chance(0.5) ? term::terminates() : term::contra();
        case 4:
            return term::suc(value(depth - 1, scope));
        case 5: {
            auto s = scope;
            std::string x = binder(s);
            return term::lam(x, term(depth - 1, s));
        }
        case 6: {
            auto s = scope;
            std::string f = binder(s);
            std::string x = binder(s);
            return term::rec(f, x, term(depth - 1, s));
        }
        default:
            return term::numeral(static_cast<unsigned>(below(3)));
    }
}

Term Gen::term(int depth, std::vector<std::string> scope) {
    if (depth <= 0) return chance(0.15) ? term::abort() : value(0, scope);
    switch (below(9)) {
        case 0:
        case 1:
            return value(depth, scope);
        case 2:
            return term::app(term(depth - 1, scope), term(depth - 1, scope));
        case 3: {
            // beta redex with a value argument
            auto s = scope;
            std::string x = binder(s);
            return term::app(term::lam(x, term(depth - 1, s)), value(depth - 1, scope));
        }
        case 4: {
            auto s = scope;
            std::string x = binder(s);
            return term::cases(term(depth - 1, scope), term(depth - 1, scope),
                               term::lam(x, term(depth - 1, s)));
        }
        case 5:
            return term::suc(term(depth - 1, scope));
        case 6:
            return term::abort();
        case 7:
            return context(depth - 1, scope).plug(term(depth - 1, scope));
        default: {
            auto s = scope;
            std::string f = binder(s);
            std::string x = binder(s);
            return term::app(term::rec(f, x, term(depth - 1, s)), value(depth - 1, scope));
        }
    }
}

eval::EvalContext Gen::context(int depth, std::vector<std::string> scope) {
    if (depth <= 0) return eval::EvalContext::hole();
    eval::EvalContext inner = context(depth - 1, scope);
    switch (below(5)) {
        case 0:
            return eval::EvalContext::suc(inner);
        case 1:
            return eval::EvalContext::app_l(inner, term(depth - 1, scope));
        case 2:
            return eval::EvalContext::app_r(value(depth - 1, scope), inner);
        case 3: {
            auto s = scope;
            std::string x = binder(s);
            return eval::EvalContext::case_of(inner, term(depth - 1, scope),
                                              term::lam(x, term(depth - 1, s)));
        }
        default:
            return inner;
    }
}

Type Gen::type(int depth, std::vector<std::string> scope) {
    if (depth <= 0) return type::nat();
    switch (below(5)) {
        case 0:
            return type::nat();
        case 1:
        case 2: {
            auto s = scope;
            std::string x = binder(s);
            return type::pi(effect(), x, type(depth - 1, scope), type(depth - 1, s));
        }
        case 3:
            return type::eq(term(depth - 1, scope), term(depth - 1, scope));
        default:
            return type::terminates(term(depth - 1, scope));
    }
}

Formula Gen::formula(int depth, std::vector<std::string> scope) {
    namespace F = wprime::formula;
    if (depth <= 0) {
        switch (below(3)) {
            case 0:
                return F::truth();
            case 1:
                return F::terminates(term(1, scope));
            default:
                return F::eq(term(1, scope), term(1, scope));
        }
    }
    switch (below(4)) {
        case 0: {
            auto s = scope;
            std::string x = binder(s);
            return F::forall(x, sort(2), formula(depth - 1, s));
        }
        case 1:
            return F::imp(formula(depth - 1, scope), formula(depth - 1, scope));
        case 2:
            return F::conj(formula(depth - 1, scope), formula(depth - 1, scope));
        default:
            return formula(0, scope);
    }
}

AType Gen::atype(int depth, std::vector<std::string> scope) {
    if (depth <= 0) return atype::nat();
    switch (below(5)) {
        case 0:
            return atype::nat();
        case 1:
        case 2: {
            auto s = scope;
            std::string x = binder(s);
            return atype::pi(effect(), x, atype(depth - 1, scope), atype(depth - 1, s));
        }
        case 3:
            return atype::eq(aterm(depth - 1, scope), aterm(depth - 1, scope));
        default:
            return atype::terminates(aterm(depth - 1, scope));
    }
}

ATerm Gen::aterm(int depth, std::vector<std::string> scope) {
    if (depth <= 0) {
        if (!scope.empty() && chance(0.6)) return aterm::var(pick(scope));
        return aterm::zero();
    }
    auto sub = [&] { return aterm(depth - 1, scope); };
    auto ty = [&] { return atype(depth - 1, scope); };
    switch (below(16)) {
        case 0:
            return aterm::app(sub(), sub());
        case 1: {
            auto s = scope;
            std::string x = binder(s);
            return aterm::lam(effect(), x, ty(), aterm(depth - 1, s));
        }
        case 2:
            return aterm::suc(sub());
        case 3: {
            auto s = scope;
            std::string f = binder(s), x = binder(s), p = binder(s);
            return aterm::recnat(f, x, p, atype(depth - 1, s), aterm(depth - 1, s));
        }
        case 4: {
            auto s = scope;
            std::string f = binder(s), x = binder(s);
            return aterm::rec(f, x, ty(), atype(depth - 1, s), aterm(depth - 1, s));
        }
        case 5: {
            auto s = scope;
            std::string x = binder(s);
            return aterm::cases(x, atype(depth - 1, s), sub(), sub(), sub());
        }
        case 6:
            return aterm::join(sub(), sub());
        case 7: {
            auto s = scope;
            std::string x = binder(s);
            return aterm::conv(x, atype(depth - 1, s), sub(), sub());
        }
        case 8:
            return aterm::reflect(sub(), sub());
        case 9:
            return aterm::tm(sub());
        case 10:
            return aterm::inv(sub(), sub());
        case 11:
            return aterm::contra(ty(), sub());
        case 12:
            return aterm::abort(ty());
        default:
            return aterm(0, scope);
    }
}

// ---------------------------------------------------------------------------
// Well-typed generation.  Types are simple: nat and non-dependent Pi over
// simple types.  Every binder gets a globally fresh name so that no rule has
// to rename.

namespace {

struct Var {
    std::string name;
    AType type;
};

class TypedGen {
public:
    TypedGen(Gen& g) : g_(g) {}

    std::string fresh(const char* base) { return std::string(base) + std::to_string(counter_++); }

    AType simple(int depth) {
        if (depth <= 0 || g_.chance(0.6)) return atype::nat();
        return atype::pi(g_.effect(), fresh("a"), simple(depth - 1), simple(depth - 1));
    }

    // Vars of the given type usable at effect theta.
    std::vector<std::string> vars_of(const std::vector<Var>& env, const AType& t) {
        std::vector<std::string> out;
        for (const auto& v : env)
            if (v.type == t) out.push_back(v.name);
        return out;
    }

    std::optional<ATerm> leaf(const std::vector<Var>& env, const AType& t, Effect theta) {
        auto vs = vars_of(env, t);
        if (!vs.empty() && g_.chance(0.7)) return aterm::var(g_.pick(vs));
        if (t.kind() == Kind::ANat) return aterm::zero();
        if (theta == Effect::General && g_.chance(0.3)) return aterm::abort(t);
        return std::nullopt;
    }

    Effect sub_effect(Effect theta) {
        return theta == Effect::Total ? Effect::Total : g_.effect();
    }

    ATerm gen(std::vector<Var> env, const AType& t, Effect theta, int depth) {
        if (t.kind() == Kind::APi) return gen_pi(std::move(env), t, theta, depth);
        return gen_nat(std::move(env), theta, depth);
    }

    ATerm lambda(std::vector<Var> env, const AType& t, int depth) {
        const Expr& e = t.expr();
        Effect rho = e.effect();
        AType dom(e.child(0));
        AType cod(e.child(1));  // non-dependent: no loose index
        std::string x = fresh("x");
        env.push_back({x, dom});
        return aterm::lam(rho, x, dom, gen(env, cod, rho, depth - 1));
    }

    ATerm gen_pi(std::vector<Var> env, const AType& t, Effect theta, int depth) {
        const Expr& e = t.expr();
        Effect rho = e.effect();
        AType dom(e.child(0));
        AType cod(e.child(1));
        if (depth <= 0) {
            auto vs = vars_of(env, t);
            if (!vs.empty() && g_.chance(0.5)) return aterm::var(g_.pick(vs));
            return lambda(env, t, 0);
        }
        switch (g_.below(6)) {
            case 0: {
                auto vs = vars_of(env, t);
                if (!vs.empty()) return aterm::var(g_.pick(vs));
                return lambda(env, t, depth);
            }
            case 1:
                if (rho == Effect::General) {
                    std::string f = fresh("f"), x = fresh("x");
                    env.push_back({f, t});
                    env.push_back({x, dom});
                    return aterm::rec(f, x, dom, cod, gen(env, cod, Effect::General, depth - 1));
                }
                if (dom.kind() == Kind::ANat) {
                    std::string f = fresh("f"), x = fresh("x"), p = fresh("p");
                    env.push_back({x, dom});
                    return aterm::recnat(f, x, p, cod, gen(env, cod, Effect::Total, depth - 1));
                }
                return lambda(env, t, depth);
            case 2: {
                std::string y = fresh("y"), z = fresh("z");
                Effect r = sub_effect(theta);
                ATerm scrut = gen_nat(env, theta, depth - 1);
                ATerm if_zero = gen(env, t, theta, depth - 1);
                auto env2 = env;
                env2.push_back({z, atype::nat()});
                ATerm if_suc = aterm::lam(r, z, atype::nat(), gen(env2, t, r, depth - 1));
                return aterm::cases(y, t, scrut, if_zero, if_suc);
            }
            case 3:
                if (theta == Effect::General) return aterm::abort(t);
                return lambda(env, t, depth);
            default:
                return lambda(env, t, depth);
        }
    }

    ATerm gen_nat(std::vector<Var> env, Effect theta, int depth) {
        AType nat = atype::nat();
        if (depth <= 0) {
            if (auto l = leaf(env, nat, theta)) return *l;
            return aterm::zero();
        }
        switch (g_.below(14)) {
            case 0:
                if (auto l = leaf(env, nat, theta)) return *l;
                return aterm::zero();
            case 1:
                return aterm::suc(gen_nat(env, theta, depth - 1));
            case 2: {
                // apply a function variable whose latent effect fits theta
                std::vector<Var> fs;
                for (const auto& v : env) {
                    const Expr& e = v.type.expr();
                    if (e.kind() == Kind::APi && AType(e.child(1)).kind() == Kind::ANat &&
                        (theta == Effect::General || e.effect() == Effect::Total))
                        fs.push_back(v);
                }
                if (fs.empty()) return aterm::suc(gen_nat(env, theta, depth - 1));
                const Var& f = g_.pick(fs);
                AType dom(f.type.expr().child(0));
                return aterm::app(aterm::var(f.name), gen(env, dom, theta, depth - 1));
            }
            case 3: {
                // beta redex
                Effect rho = sub_effect(theta);
                AType dom = simple(1);
                std::string x = fresh("x");
                auto env2 = env;
                env2.push_back({x, dom});
                ATerm fn = aterm::lam(rho, x, dom, gen_nat(env2, rho, depth - 1));
                return aterm::app(fn, gen(env, dom, theta, depth - 1));
            }
            case 4: {
                std::string y = fresh("y"), z = fresh("z");
                Effect r = sub_effect(theta);
                ATerm scrut = gen_nat(env, theta, depth - 1);
                ATerm if_zero = gen_nat(env, theta, depth - 1);
                auto env2 = env;
                env2.push_back({z, nat});
                ATerm if_suc = aterm::lam(r, z, nat, gen_nat(env2, r, depth - 1));
                return aterm::cases(y, nat, scrut, if_zero, if_suc);
            }
            case 5:
                if (theta == Effect::General) return aterm::abort(nat);
                return gen_nat(env, theta, depth - 1);
            case 6: {
                std::vector<std::string> us;
                for (const auto& v : env)
                    if (v.type.kind() == Kind::AEq) us.push_back(v.name);
                if (us.empty()) return gen_nat(env, theta, depth - 1);
                return aterm::contra(nat, aterm::var(g_.pick(us)));
            }
            case 7: {
                ATerm a = gen_nat(env, Effect::Total, depth - 1);
                return aterm::reflect(a, aterm::tm(a));
            }
            case 8: {
                // a Term x hypothesis from the context
                for (const auto& v : env) {
                    if (v.type.kind() != Kind::ATermTy) continue;
                    ATerm subj(v.type.expr().child(0));
                    return aterm::reflect(subj, aterm::var(v.name));
                }
                return gen_nat(env, theta, depth - 1);
            }
            case 9: {
                std::string y = fresh("y");
                ATerm b = gen_nat(env, Effect::General, depth - 1);
                return aterm::conv(y, nat, gen_nat(env, theta, depth - 1), aterm::join(b, b));
            }
            case 10: {
                std::string f = fresh("f"), x = fresh("x"), p = fresh("p");
                auto env2 = env;
                env2.push_back({x, nat});
                ATerm fn = aterm::recnat(f, x, p, nat, gen_nat(env2, Effect::Total, depth - 1));
                return aterm::app(fn, gen_nat(env, theta, depth - 1));
            }
            case 11:
                return aterm::app(structural(env, depth - 1), gen_nat(env, theta, depth - 1));
            case 12: {
                if (theta != Effect::Total) {
                    AType ft = atype::pi(Effect::General, fresh("a"), nat, nat);
                    std::string f = fresh("f"), x = fresh("x");
                    auto env2 = env;
                    env2.push_back({f, ft});
                    env2.push_back({x, nat});
                    ATerm fn = aterm::rec(f, x, nat, nat, gen_nat(env2, Effect::General, depth - 1));
                    return aterm::app(fn, gen_nat(env, theta, depth - 1));
                }
                return gen_nat(env, theta, depth - 1);
            }
            default:
                return gen_nat(env, theta, depth - 1);
        }
    }

    // recnat f (x, p) : nat =
    //   (case [y . Pi ! q : x = y . nat] x (\! q : x = 0 . B0)
    //         (\! z : nat . \! q : x = Suc z . B1[w := reflect (f z) by (p z q)])) (join x x)
    ATerm structural(const std::vector<Var>& env, int depth) {
        AType nat = atype::nat();
        std::string f = fresh("f"), x = fresh("x"), p = fresh("p"), y = fresh("y"),
                    z = fresh("z"), q = fresh("q"), w = fresh("w");
        ATerm vx = aterm::var(x);
        auto env0 = env;
        env0.push_back({x, nat});
        ATerm b0 = gen_nat(env0, Effect::Total, depth);
        auto env1 = env0;
        env1.push_back({z, nat});
        env1.push_back({w, nat});
        ATerm b1 = gen_nat(env1, Effect::Total, depth);
        ATerm call = aterm::reflect(aterm::app(aterm::var(f), aterm::var(z)),
                                    aterm::apps(aterm::var(p), {aterm::var(z), aterm::var(q)}));
        b1 = subst_aterm(b1, w, call);
        AType motive = atype::pi(Effect::Total, q, atype::eq(vx, aterm::var(y)), nat);
        ATerm if_zero = aterm::lam(Effect::Total, q, atype::eq(vx, aterm::zero()), b0);
        ATerm if_suc = aterm::lam(
            Effect::Total, z, nat,
            aterm::lam(Effect::Total, q, atype::eq(vx, aterm::suc(aterm::var(z))), b1));
        ATerm body = aterm::app(aterm::cases(y, motive, vx, if_zero, if_suc), aterm::join(vx, vx));
        return aterm::recnat(f, x, p, nat, body);
    }

    Gen& g_;
    int counter_ = 0;
};

}  // namespace

Gen::Typed Gen::typed(int depth) {
    TypedGen tg(*this);
    std::vector<Var> env;
    Context ctx;
    std::size_t n = below(4);
    for (std::size_t i = 0; i < n; ++i) {
        std::string name;
        AType t = atype::nat();
        switch (below(5)) {
            case 0:
            case 1:
                name = tg.fresh("n");
                break;
            case 2:
                name = tg.fresh("g");
                t = atype::pi(effect(), tg.fresh("a"), atype::nat(), atype::nat());
                break;
            case 3:
                name = tg.fresh("u");
                t = atype::eq(aterm::zero(), aterm::suc(aterm::zero()));
                break;
            default: {
                std::vector<std::string> nats;
                for (const auto& v : env)
                    if (v.type.kind() == Kind::ANat) nats.push_back(v.name);
                name = tg.fresh("n");
                if (!nats.empty()) {
                    t = atype::terminates(aterm::var(pick(nats)));
                    name = tg.fresh("t");
                }
                break;
            }
        }
        env.push_back({name, t});
        ctx.push(name, t);
    }
    Effect theta = effect();
    AType target = tg.simple(2);
    ATerm a = tg.gen(env, target, theta, depth);
    return {ctx, a, theta};
}

}  // namespace teq::testgen
