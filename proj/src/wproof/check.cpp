#include "teq/wproof/check.hpp"

#include <array>

#include "teq/wprime/sorts.hpp"

namespace teq::wproof {

using wprime::SortBinding;
namespace F = wprime::formula;

namespace {

struct Failure {
    ProofFailure f;
};

class Kernel {
public:
    explicit Kernel(const ProofConfig& cfg) : cfg_(cfg) {}

    void check(std::vector<SortBinding>& sigma, std::vector<Formula>& hyps, const Formula& goal,
               const Proof& p);
    Formula synth(std::vector<SortBinding>& sigma, std::vector<Formula>& hyps, const Proof& p);

private:
    [[noreturn]] void fail(const Proof& p, std::string msg, std::optional<Formula> expected = {},
                           std::optional<Formula> actual = {}) const {
        std::string pos;
        for (std::size_t i : path_) pos += (pos.empty() ? "" : "/") + std::to_string(i);
        throw Failure{{std::string(rule_name(p.rule())), pos.empty() ? "root" : pos,
                       std::move(msg), std::move(expected), std::move(actual)}};
    }

    void expect(const Proof& p, const Formula& expected, const Formula& actual,
                const std::string& what) const {
        if (!(expected == actual)) fail(p, what, expected, actual);
    }

    void want_kind(const Proof& p, const Formula& goal, Kind k, const char* what) const {
        if (goal.kind() != k) fail(p, std::string("goal is not ") + what, {}, goal);
    }

    // Run `fn` with premise index i pushed on the path.
    template <class Fn>
    auto premise(std::size_t i, Fn&& fn) {
        path_.push_back(i);
        struct Pop {
            std::vector<std::size_t>& v;
            ~Pop() { v.pop_back(); }
        } pop{path_};
        return fn();
    }

    static NameSet domain(const std::vector<SortBinding>& sigma) {
        NameSet out;
        for (const auto& b : sigma) out.insert(b.name);
        return out;
    }

    void scoped(const Proof& p, const NameSet& fv, NameSet allowed, const char* what) const {
        for (const auto& v : fv)
            if (allowed.count(v) == 0) fail(p, std::string(what) + " mentions unbound " + v);
    }

    void fresh_for(const Proof& p, const std::vector<SortBinding>& sigma, const std::string& x) const {
        for (const auto& b : sigma)
            if (b.name == x) fail(p, x + " is already bound in sigma");
    }

    void sort_check(const Proof& p, const std::vector<SortBinding>& sigma, const Term& t,
                    const Sort& s) const {
        auto r = wprime::sty_check(sigma, t, s);
        if (!r) fail(p, "witness does not have sort " + to_string(s) + " (" + r.error().rule + ": " +
                            r.error().message + ")");
    }

    static Formula instantiate_forall(const Formula& f, const Term& t) {
        std::array<Expr, 1> v{t.expr()};
        return Formula(instantiate_child(f.expr(), 0, v));
    }

    static bool synthesizes(Rule r) {
        switch (r) {
        case Rule::Assume: case Rule::Alle: case Rule::Impe: case Rule::Ande1:
        case Rule::Ande2: case Rule::Subst: case Rule::CompInd: case Rule::Term0:
            return true;
        default:
            return false;
        }
    }

    // Premise i of `parent` must prove `goal`.  When the premise's conclusion
    // can be read off, a mismatch is charged to the parent rule.
    void sub(const Proof& parent, std::size_t i, std::vector<SortBinding>& sigma,
             std::vector<Formula>& hyps, const Formula& goal) {
        const Proof& child = parent.premises()[i];
        if (synthesizes(child.rule())) {
            Formula got = premise(i, [&] { return synth(sigma, hyps, child); });
            expect(parent, goal, got, "premise " + std::to_string(i) + " proves the wrong formula");
        } else {
            premise(i, [&] { check(sigma, hyps, goal, child); });
        }
    }

    Formula compind_conclusion(const Proof& p, std::vector<SortBinding>& sigma,
                               std::vector<Formula>& hyps);
    Formula subst_conclusion(const Proof& p, std::vector<SortBinding>& sigma,
                             std::vector<Formula>& hyps);

    const ProofConfig& cfg_;
    std::vector<std::size_t> path_;
};

Formula Kernel::compind_conclusion(const Proof& p, std::vector<SortBinding>& sigma,
                                   std::vector<Formula>& hyps) {
    const std::string& z = p.names()[0];
    const std::string& f = p.names()[1];
    const std::string& x = p.names()[2];
    const Formula& pat = *p.pattern();
    const Term& body = *p.term();
    const Sort& dom = p.sorts()[0];
    const Sort& cod = p.sorts()[1];
    if (f == x) fail(p, "function and argument names coincide");
    fresh_for(p, sigma, f);
    fresh_for(p, sigma, x);
    NameSet dm = domain(sigma);
    NameSet pat_ok = dm;
    pat_ok.insert({z, x});
    scoped(p, free_vars(pat), pat_ok, "the pattern");
    NameSet body_ok = dm;
    body_ok.insert({f, x});
    scoped(p, free_vars(body), body_ok, "the recursive body");

    Term r = term::rec(f, x, body);
    Sort arrow = Sort::arrow(dom, cod);
    sort_check(p, sigma, r, arrow);

    Term fx = term::app(term::var(f), term::var(x));
    Formula ih = F::forall(x, dom, wprime::formula_subst(pat, z, fx));
    Formula step = F::forall(x, dom, wprime::formula_subst(pat, z, body));
    sigma.push_back({f, arrow});
    hyps.push_back(ih);
    sub(p, 0, sigma, hyps, step);
    hyps.pop_back();
    sigma.pop_back();

    Term rx = term::app(r, term::var(x));
    return F::forall(x, dom, F::imp(F::terminates(rx), wprime::formula_subst(pat, z, rx)));
}

Formula Kernel::subst_conclusion(const Proof& p, std::vector<SortBinding>& sigma,
                                 std::vector<Formula>& hyps) {
    const std::string& x = p.names()[0];
    const Formula& pat = *p.pattern();
    NameSet ok = domain(sigma);
    ok.insert(x);
    scoped(p, free_vars(pat), ok, "the pattern");
    Formula e = premise(0, [&] { return synth(sigma, hyps, p.premises()[0]); });
    if (e.kind() != Kind::FEq) fail(p, "first premise is not an equation", {}, e);
    Term lhs(e.expr().child(0));
    Term rhs(e.expr().child(1));
    sub(p, 1, sigma, hyps, wprime::formula_subst(pat, x, lhs));
    return wprime::formula_subst(pat, x, rhs);
}

Formula Kernel::synth(std::vector<SortBinding>& sigma, std::vector<Formula>& hyps, const Proof& p) {
    switch (p.rule()) {
    case Rule::Assume:
        if (p.number() >= hyps.size())
            fail(p, "hypothesis index " + std::to_string(p.number()) + " out of range");
        return hyps[p.number()];
    case Rule::Alle: {
        Formula all = premise(0, [&] { return synth(sigma, hyps, p.premises()[0]); });
        if (all.kind() != Kind::FForall) fail(p, "premise is not a universal", {}, all);
        sort_check(p, sigma, *p.term(), all.expr().sort());
        return instantiate_forall(all, *p.term());
    }
    case Rule::Impe: {
        Formula imp = premise(0, [&] { return synth(sigma, hyps, p.premises()[0]); });
        if (imp.kind() != Kind::FImp) fail(p, "first premise is not an implication", {}, imp);
        sub(p, 1, sigma, hyps, Formula(imp.expr().child(0)));
        return Formula(imp.expr().child(1));
    }
    case Rule::Ande1:
    case Rule::Ande2: {
        Formula c = premise(0, [&] { return synth(sigma, hyps, p.premises()[0]); });
        if (c.kind() != Kind::FAnd) fail(p, "premise is not a conjunction", {}, c);
        return Formula(c.expr().child(p.rule() == Rule::Ande1 ? 0 : 1));
    }
    case Rule::Subst:
        return subst_conclusion(p, sigma, hyps);
    case Rule::CompInd:
        return compind_conclusion(p, sigma, hyps);
    case Rule::Term0:
        return F::terminates(term::zero());
    default:
        fail(p, "conclusion cannot be inferred here; the rule needs a known goal");
    }
}

void Kernel::check(std::vector<SortBinding>& sigma, std::vector<Formula>& hyps, const Formula& goal,
                   const Proof& p) {
    const Expr& g = goal.expr();
    switch (p.rule()) {
    case Rule::Assume:
    case Rule::Alle:
    case Rule::Impe:
    case Rule::Ande1:
    case Rule::Ande2:
    case Rule::Subst:
    case Rule::CompInd:
    case Rule::Term0:
        expect(p, goal, synth(sigma, hyps, p), "conclusion does not match the goal");
        return;
    case Rule::Alli: {
        want_kind(p, goal, Kind::FForall, "a universal");
        const std::string& x = p.names()[0];
        if (!(g.sort() == p.sorts()[0]))
            fail(p, "binder sort " + to_string(p.sorts()[0]) + " differs from goal sort " +
                        to_string(g.sort()));
        for (const auto& h : hyps)
            if (occurs_free(h.expr(), x)) fail(p, x + " occurs free in a hypothesis");
        fresh_for(p, sigma, x);
        std::array<std::string, 1> names{x};
        Formula body(open_child(g, 0, names));
        sigma.push_back({x, p.sorts()[0]});
        sub(p, 0, sigma, hyps, body);
        sigma.pop_back();
        return;
    }
    case Rule::Impi: {
        want_kind(p, goal, Kind::FImp, "an implication");
        hyps.push_back(Formula(g.child(0)));
        sub(p, 0, sigma, hyps, Formula(g.child(1)));
        hyps.pop_back();
        return;
    }
    case Rule::Andi:
        want_kind(p, goal, Kind::FAnd, "a conjunction");
        sub(p, 0, sigma, hyps, Formula(g.child(0)));
        sub(p, 1, sigma, hyps, Formula(g.child(1)));
        return;
    case Rule::Truei:
        want_kind(p, goal, Kind::FTrue, "True");
        return;
    case Rule::Contra: {
        Formula e = premise(0, [&] { return synth(sigma, hyps, p.premises()[0]); });
        const Expr& ee = e.expr();
        if (e.kind() != Kind::FEq || ee.child(0).kind() != Kind::Zero ||
            ee.child(1).kind() != Kind::Suc)
            fail(p, "premise is not of the form 0 = Suc t", {}, e);
        return;
    }
    case Rule::NotTermAbort:
        sub(p, 0, sigma, hyps, F::terminates(term::abort()));
        return;
    case Rule::Ind: {
        const std::string& x = p.names()[0];
        const std::string& x1 = p.names()[1];
        const Formula& pat = *p.pattern();
        NameSet ok = domain(sigma);
        ok.insert(x);
        scoped(p, free_vars(pat), ok, "the pattern");
        expect(p, F::forall(x, Sort::nat(), F::imp(F::terminates(term::var(x)), pat)), goal,
               "goal is not the induction conclusion for this pattern");
        sub(p, 0, sigma, hyps, wprime::formula_subst(pat, x, term::zero()));
        fresh_for(p, sigma, x1);
        Term v = term::var(x1);
        sigma.push_back({x1, Sort::nat()});
        hyps.push_back(F::terminates(v));
        hyps.push_back(wprime::formula_subst(pat, x, v));
        sub(p, 1, sigma, hyps, wprime::formula_subst(pat, x, term::suc(v)));
        hyps.pop_back();
        hyps.pop_back();
        sigma.pop_back();
        return;
    }
    case Rule::TermS:
        want_kind(p, goal, Kind::FTerm, "a termination claim");
        if (g.child(0).kind() != Kind::Suc) fail(p, "goal is not Terminates (Suc t)", {}, goal);
        sub(p, 0, sigma, hyps, F::terminates(Term(g.child(0).child(0))));
        return;
    case Rule::TermAbs:
        want_kind(p, goal, Kind::FTerm, "a termination claim");
        if (g.child(0).kind() != Kind::Lam) fail(p, "goal is not Terminates (\\x. t)", {}, goal);
        return;
    case Rule::TermRec:
        want_kind(p, goal, Kind::FTerm, "a termination claim");
        if (g.child(0).kind() != Kind::Rec)
            fail(p, "goal is not Terminates (rec f (x) = t)", {}, goal);
        return;
    case Rule::TermInv: {
        want_kind(p, goal, Kind::FTerm, "a termination claim");
        NameSet dm = domain(sigma);
        for (const auto& fr : p.context()->frames())
            for (const auto& part : fr.parts) scoped(p, free_vars(part), dm, "the context");
        Term big = p.context()->plug(Term(g.child(0)));
        sub(p, 0, sigma, hyps, F::terminates(big));
        return;
    }
    case Rule::OpSem: {
        want_kind(p, goal, Kind::FEq, "an equation");
        if (p.number() > cfg_.max_fuel)
            fail(p, "requested fuel " + std::to_string(p.number()) + " exceeds the limit " +
                        std::to_string(cfg_.max_fuel));
        Term lhs(g.child(0));
        Term rhs(g.child(1));
        eval::Trace tr = eval::reduce_trace(lhs, p.number());
        for (const auto& t : tr.terms)
            if (t == rhs) return;
        fail(p, "right side not reached from the left within " + std::to_string(p.number()) +
                    " steps" + (tr.fuel_exhausted ? " (fuel exhausted)" : ""));
    }
    }
}

}  // namespace

Result<Unit, ProofFailure> check_proof(const wprime::Sequent& seq, const Proof& p,
                                       const ProofConfig& cfg) {
    std::vector<SortBinding> sigma = seq.sigma();
    std::vector<Formula> hyps = seq.hyps();
    try {
        Kernel(cfg).check(sigma, hyps, seq.goal(), p);
        return Unit{};
    } catch (const Failure& f) {
        return f.f;
    }
}

Result<Formula, ProofFailure> infer_proof(const std::vector<SortBinding>& sigma0,
                                          const std::vector<Formula>& hyps0, const Proof& p,
                                          const ProofConfig& cfg) {
    std::vector<SortBinding> sigma = sigma0;
    std::vector<Formula> hyps = hyps0;
    try {
        return Kernel(cfg).synth(sigma, hyps, p);
    } catch (const Failure& f) {
        return f.f;
    }
}

}  // namespace teq::wproof
