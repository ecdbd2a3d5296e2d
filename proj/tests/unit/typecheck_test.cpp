#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "gen.hpp"
#include "teq/frontend/parser.hpp"
#include "teq/frontend/printer.hpp"
#include "teq/typecheck/typecheck.hpp"

using namespace teq;
using namespace teq::check;
using frontend::parse_aterm;
using frontend::parse_atype;
using frontend::print;

namespace {

constexpr Effect T = Effect::Total;
constexpr Effect G = Effect::General;

std::string slurp(const std::string& f) {
    std::ifstream in(std::string(TEQ_CORPUS_DIR) + "/" + f);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Context ctx(std::vector<std::pair<std::string, std::string>> bs) {
    Context g;
    for (auto& [n, t] : bs) g.push(n, parse_atype(t));
    return g;
}

AType infer_ok(const Context& g, const std::string& a, Effect e) {
    auto r = infer(g, parse_aterm(a), e);
    EXPECT_TRUE(r) << a << ": " << (r ? "" : r.error().rule + " " + r.error().message);
    return r ? *r : atype::nat();
}

std::string rule_of(const Context& g, const std::string& a, Effect e, CheckConfig cfg = {}) {
    auto r = infer(g, parse_aterm(a), e, cfg);
    return r ? "accepted" : r.error().rule;
}

Expr rename_hints(const Expr& e, int& n) {
    if (e.kind() == Kind::Var || e.kind() == Kind::Bound) return e;
    std::vector<std::string> hints;
    for (std::size_t i = 0; i < e.hints().size(); ++i) hints.push_back("r" + std::to_string(n++));
    std::vector<Expr> kids;
    for (const auto& c : e.children()) kids.push_back(rename_hints(c, n));
    return Expr::node(e.kind(), hints, kids, e.payload());
}

}  // namespace

TEST(Subeffect, Lattice) {
    EXPECT_TRUE(subeffect(T, G));
    EXPECT_TRUE(subeffect(G, G));
    EXPECT_TRUE(subeffect(T, T));
    EXPECT_FALSE(subeffect(G, T));
}

TEST(WfContext, Examples) {
    EXPECT_TRUE(wf_context({}));
    EXPECT_TRUE(wf_context(ctx({{"x", "nat"}})));
    auto bad = wf_context(ctx({{"x", "0 = 0 0"}}));
    ASSERT_FALSE(bad);
    EXPECT_EQ(bad.error().rule, "A_App");
    auto dup = wf_context(ctx({{"x", "nat"}, {"x", "nat"}}));
    ASSERT_FALSE(dup);
    EXPECT_EQ(dup.error().rule, "Oka_cons");
    EXPECT_FALSE(wf_context(ctx({{"u", "y = 0"}})));
}

TEST(WfType, Examples) {
    EXPECT_TRUE(wf_type({}, atype::nat()));
    EXPECT_TRUE(wf_type({}, parse_atype("Pi ! x : nat . nat")));
    EXPECT_TRUE(wf_type({}, parse_atype("Term (abort nat)")));
    EXPECT_TRUE(wf_type({}, parse_atype("Pi ! x : nat . x = 0")));
    EXPECT_FALSE(wf_type({}, parse_atype("x = 0")));
}

TEST(Infer, Basics) {
    EXPECT_EQ(infer_ok({}, "0", G), atype::nat());
    EXPECT_EQ(infer_ok({}, "Suc (Suc 0)", T), atype::nat());
    EXPECT_EQ(infer_ok({}, "\\! x : nat . x", T), parse_atype("Pi ! x : nat . nat"));
    EXPECT_EQ(infer_ok({}, "\\? x : nat . abort nat", T), parse_atype("Pi ? x : nat . nat"));
    EXPECT_EQ(infer_ok({}, "(\\! x : nat . x) 0", T), atype::nat());
    EXPECT_EQ(infer_ok({}, "join ((\\! x : nat . x) 0) 0", T), parse_atype("(\\! x : nat . x) 0 = 0"));
    EXPECT_EQ(infer_ok({}, "tm (Suc 0)", T), parse_atype("Term (Suc 0)"));
    EXPECT_EQ(infer_ok(ctx({{"u", "0 = Suc 0"}}), "contra (Pi ! x : nat . nat) u", T),
              parse_atype("Pi ! x : nat . nat"));
}

TEST(Infer, AppEffects) {
    Context g = ctx({{"g", "Pi ? x : nat . nat"}});
    EXPECT_EQ(rule_of(g, "g 0", T), "A_App");
    EXPECT_EQ(rule_of(g, "g 0", G), "accepted");
    EXPECT_EQ(rule_of({}, "0 0", G), "A_App");
    EXPECT_EQ(rule_of({}, "(\\! x : nat . x) (\\! y : nat . y)", G), "A_App");
}

TEST(Infer, DependentApp) {
    Context g = ctx({{"h", "Pi ! x : nat . x = x"}});
    EXPECT_EQ(infer_ok(g, "h (Suc 0)", T), parse_atype("Suc 0 = Suc 0"));
}

TEST(Infer, ReflectUnderRecNatContext) {
    Context g = ctx({{"x1", "nat"},
                     {"x2", "nat"},
                     {"f", "Pi ? x1 : nat . nat"},
                     {"p", "Pi ! x' : nat . Pi ! q : x1 = Suc x' . Term (f x')"},
                     {"x'", "nat"},
                     {"q", "x1 = Suc x'"}});
    ASSERT_TRUE(wf_context(g));
    EXPECT_EQ(infer_ok(g, "reflect (f x') by (p x' q)", T), atype::nat());
    EXPECT_EQ(rule_of(g, "f x'", T), "A_App");
    EXPECT_EQ(rule_of(g, "reflect (f 0) by (p x' q)", T), "A_Reflect");
}

TEST(Infer, AbortOnlyGeneral) {
    auto r = infer({}, aterm::abort(atype::nat()), T);
    ASSERT_FALSE(r);
    EXPECT_EQ(r.error().rule, "A_Abort");
    EXPECT_EQ(infer_ok({}, "abort nat", G), atype::nat());
}

TEST(Infer, RecNatRejectsP) {
    EXPECT_EQ(rule_of({}, "recnat f (x, p) : nat = (\\! r : (Pi ! y : nat . Pi ! u : x = Suc y . Term (f y)) . 0) p", T),
              "A_RecNat");
    EXPECT_EQ(infer_ok({}, "recnat f (x, p) : nat = 0", T), parse_atype("Pi ! x : nat . nat"));
    // The body is checked at !, so an unguarded recursive call fails.
    EXPECT_EQ(rule_of({}, "recnat f (x, p) : nat = f x", T), "A_App");
}

TEST(Infer, RecIsGeneral) {
    EXPECT_EQ(infer_ok({}, "rec f (x : nat) : nat = f x", T), parse_atype("Pi ? x : nat . nat"));
    EXPECT_EQ(rule_of({}, "(rec f (x : nat) : nat = f x) 0", T), "A_App");
    EXPECT_EQ(rule_of({}, "(rec f (x : nat) : nat = f x) 0", G), "accepted");
}

TEST(Infer, JoinLoopNeverJoins) {
    ATerm a = parse_aterm("join ((rec f (x : nat) : nat = f x) 0) 0");
    for (std::size_t n = 0; n <= 10000; n += 37) {
        auto r = infer({}, a, G, {n});
        ASSERT_FALSE(r);
        EXPECT_EQ(r.error().rule, "A_Join");
    }
}

TEST(Infer, JoinFuelMatters) {
    ATerm a = parse_aterm("join ((\\! x : nat . Suc x) 0) (Suc 0)");
    EXPECT_FALSE(infer({}, a, T, {0}));
    EXPECT_TRUE(infer({}, a, T, {1}));
}

TEST(Infer, Conv) {
    Context g = ctx({{"n", "nat"}, {"u", "n = 0"}, {"v", "Term n"}});
    // v : Term n, u : n = 0; conv [y. Term y] v by join ... needs a proof of n = ?
    EXPECT_EQ(infer_ok(g, "conv [y . Term y] (tm 0) by (join ((\\! z : nat . z) 0) 0)", T),
              parse_atype("Term ((\\! z : nat . z) 0)"));
    EXPECT_EQ(rule_of(g, "conv [y . Term y] v by (join 0 0)", T), "A_Conv");
    EXPECT_EQ(infer_ok(g, "conv [y . Term y] (tm 0) by u", T), parse_atype("Term n"));
}

TEST(Infer, CaseMotives) {
    Context g = ctx({{"n", "nat"}});
    EXPECT_EQ(infer_ok(g, "case [y . nat] n 0 (\\! z : nat . z)", T), atype::nat());
    EXPECT_EQ(infer_ok(g, "case [y . Pi ! q : n = y . nat] n (\\! q : n = 0 . 0) "
                          "(\\! z : nat . \\! q : n = Suc z . z)", T),
              parse_atype("Pi ! q : n = n . nat"));
    EXPECT_EQ(rule_of(g, "case [y . nat] n 0 (\\? z : nat . z)", T), "A_Case");
    EXPECT_EQ(rule_of(g, "case [y . nat] n 0 (\\? z : nat . z)", G), "accepted");
    EXPECT_EQ(rule_of(g, "case [y . nat] n 0 0", T), "A_Case");
}

TEST(Infer, Inv) {
    Context g = ctx({{"f", "Pi ? x : nat . nat"}, {"t", "Term (Suc (f 0))"}});
    EXPECT_EQ(infer_ok(g, "inv t at (f 0)", T), parse_atype("Term (f 0)"));
    EXPECT_EQ(rule_of(g, "inv t at (Suc 0)", T), "A_CtxTerm");
}

TEST(Infer, UnboundVariable) { EXPECT_EQ(rule_of({}, "x", T), "A_Var"); }

TEST(FindEvalPosition, Examples) {
    Term lam = frontend::parse_term("\\x. x");
    Term f0 = frontend::parse_term("f 0");
    EXPECT_EQ(*find_eval_position(term::app(lam, f0), f0), eval::EvalContext::app_r(lam, eval::EvalContext::hole()));
}

TEST(Corpus, TotalAlsoGeneral) {
    for (const char* f : {"plus.teqt", "plusext.teqt", "plustotal.teqt", "lte.teqt", "hrec.teqt",
                          "div.teqt"}) {
        auto src = frontend::parse_program(slurp(f));
        for (const auto& d : src.directives) {
            if (d.kind != frontend::DirectiveKind::Check) continue;
            const ATerm& a = src.find(d.name)->body;
            auto t = infer(d.context, a, T);
            auto g = infer(d.context, a, G);
            ASSERT_TRUE(t) << d.name;
            ASSERT_TRUE(g) << d.name;
            EXPECT_EQ(*t, *g);
        }
    }
}

TEST(Corpus, AlphaStable) {
    for (const char* f : {"plus.teqt", "plusext.teqt", "plustotal.teqt", "lte.teqt", "hrec.teqt",
                          "div.teqt"}) {
        auto src = frontend::parse_program(slurp(f));
        for (const auto& d : src.directives) {
            if (d.kind != frontend::DirectiveKind::Check) continue;
            int n = 0;
            ATerm a = src.find(d.name)->body;
            ATerm b(rename_hints(a.expr(), n));
            auto ra = infer(d.context, a, T);
            auto rb = infer(d.context, b, T);
            ASSERT_TRUE(ra && rb) << d.name;
            EXPECT_EQ(*ra, *rb);
        }
    }
}

// Properties ----------------------------------------------------------------

TEST(TypecheckProperty, Deterministic) {
    testgen::Gen g(31);
    for (int i = 0; i < 300; ++i) {
        auto c = g.typed(4);
        auto r1 = infer(c.context, c.term, c.effect);
        auto r2 = infer(c.context, c.term, c.effect);
        ASSERT_EQ(r1.ok(), r2.ok());
        if (r1) EXPECT_EQ(*r1, *r2);
        else EXPECT_EQ(r1.error().rule, r2.error().rule);
    }
}

TEST(TypecheckProperty, AlphaStableOnGenerated) {
    testgen::Gen g(32);
    for (int i = 0; i < 300; ++i) {
        auto c = g.typed(4);
        int n = 0;
        ATerm b(rename_hints(c.term.expr(), n));
        auto ra = infer(c.context, c.term, c.effect);
        auto rb = infer(c.context, b, c.effect);
        ASSERT_EQ(ra.ok(), rb.ok()) << print(c.term);
        if (ra) {
            EXPECT_EQ(*ra, *rb);
        }
    }
}

TEST(TypecheckProperty, GeneratedTermsAreAcceptedAtTheirEffect) {
    testgen::Gen g(33);
    int accepted = 0;
    for (int i = 0; i < 300; ++i) {
        auto c = g.typed(4);
        ASSERT_TRUE(wf_context(c.context));
        auto r = infer(c.context, c.term, c.effect);
        EXPECT_TRUE(r) << print(c.term) << ": " << (r ? "" : r.error().rule + " " + r.error().message);
        accepted += r.ok();
    }
    EXPECT_EQ(accepted, 300);
}

TEST(TypecheckProperty, JoinSymmetry) {
    testgen::Gen g(34);
    for (int i = 0; i < 300; ++i) {
        auto closed = [&] {
            for (;;)
                if (auto c = g.typed(3); c.context.empty()) return c.term;
        };
        ATerm a = closed();
        ATerm b = g.chance(0.5) ? closed() : a;
        std::size_t fuel = g.below(30);
        auto ab = infer({}, aterm::join(a, b), G, {fuel});
        auto ba = infer({}, aterm::join(b, a), G, {fuel});
        ASSERT_EQ(ab.ok(), ba.ok()) << print(a) << " / " << print(b);
        if (ab) {
            EXPECT_EQ(*ab, atype::eq(a, b));
            EXPECT_EQ(*ba, atype::eq(b, a));
        }
    }
}
