#include "teq/frontend/parser.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace teq::frontend {

namespace {

namespace F = wprime::formula;
using wproof::Proof;

const std::string kHoleName = "_";

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    // ---- token plumbing

    const Token& peek(std::size_t k = 0) const {
        std::size_t i = std::min(pos_ + k, toks_.size() - 1);
        return toks_[i];
    }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_word(std::string_view w, std::size_t k = 0) const {
        return peek(k).kind == Tok::Ident && peek(k).text == w;
    }
    Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void error(const std::string& msg) const { throw ParseError(peek().pos, msg); }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::End) return "end of input";
        return "'" + t.text + "'";
    }

    Token expect(Tok k, const char* what) {
        if (!at(k)) error(std::string("expected ") + what + ", found " + describe(peek()));
        return take();
    }
    void expect_word(std::string_view w) {
        if (!at_word(w)) error("expected '" + std::string(w) + "', found " + describe(peek()));
        take();
    }
    bool accept(Tok k) {
        if (!at(k)) return false;
        take();
        return true;
    }
    bool accept_word(std::string_view w) {
        if (!at_word(w)) return false;
        take();
        return true;
    }

    std::string ident(const char* what = "an identifier") {
        if (!at(Tok::Ident) || is_reserved(peek().text))
            error(std::string("expected ") + what + ", found " + describe(peek()));
        return take().text;
    }

    void finish() {
        if (!at(Tok::End)) error("unexpected " + describe(peek()));
    }

    std::size_t mark() const { return pos_; }
    void reset(std::size_t m) { pos_ = m; }

    unsigned number() {
        Token t = expect(Tok::Number, "a number");
        try {
            return static_cast<unsigned>(std::stoul(t.text));
        } catch (const std::exception&) {
            throw ParseError(t.pos, "number out of range");
        }
    }

    Effect effect() {
        if (accept(Tok::Bang)) return Effect::Total;
        if (accept(Tok::Question)) return Effect::General;
        error("expected an effect '!' or '?', found " + describe(peek()));
    }

    // ---- sorts

    Sort sort() {
        Sort a = sort_atom();
        if (accept(Tok::Arrow)) return Sort::arrow(a, sort());
        return a;
    }
    Sort sort_atom() {
        if (accept_word("nat")) return Sort::nat();
        if (accept(Tok::LParen)) {
            Sort s = sort();
            expect(Tok::RParen, "')'");
            return s;
        }
        error("expected a sort, found " + describe(peek()));
    }

    // ---- annotated terms

    bool starts_aarg() const {
        switch (peek().kind) {
        case Tok::Ident: return !is_reserved(peek().text);
        case Tok::Number:
        case Tok::LParen: return true;
        default: return false;
        }
    }

    ATerm aarg() {
        if (at(Tok::Ident) && !is_reserved(peek().text)) return aterm::var(take().text);
        if (at(Tok::Number)) {
            unsigned n = number();
            ATerm t = aterm::zero();
            for (unsigned i = 0; i < n; ++i) t = aterm::suc(t);
            return t;
        }
        if (accept(Tok::LParen)) {
            ATerm t = aexpr();
            expect(Tok::RParen, "')'");
            return t;
        }
        error("expected an annotated term, found " + describe(peek()));
    }

    AType atype_atom() {
        if (accept_word("nat")) return atype::nat();
        if (accept(Tok::LParen)) {
            AType s = atype();
            expect(Tok::RParen, "')'");
            return s;
        }
        error("expected 'nat' or a parenthesized type, found " + describe(peek()));
    }

    // [x . S]
    std::pair<std::string, AType> amotive() {
        expect(Tok::LBracket, "'['");
        std::string x = ident("a motive variable");
        expect(Tok::Dot, "'.'");
        AType s = atype();
        expect(Tok::RBracket, "']'");
        return {x, s};
    }

    ATerm ahead() {
        if (accept_word("Suc")) return aterm::suc(aarg());
        if (accept_word("case")) {
            auto [x, s] = amotive();
            ATerm a = aarg();
            ATerm z = aarg();
            ATerm n = aarg();
            return aterm::cases(x, s, a, z, n);
        }
        if (accept_word("join")) {
            ATerm l = aarg();
            return aterm::join(l, aarg());
        }
        if (accept_word("conv")) {
            auto [x, s] = amotive();
            ATerm subject = aexpr();
            expect_word("by");
            return aterm::conv(x, s, subject, aarg());
        }
        if (accept_word("reflect")) {
            ATerm subject = aexpr();
            expect_word("by");
            return aterm::reflect(subject, aarg());
        }
        if (accept_word("tm")) return aterm::tm(aarg());
        if (accept_word("inv")) {
            ATerm proof = aexpr();
            expect_word("at");
            return aterm::inv(proof, aarg());
        }
        if (accept_word("contra")) {
            AType s = atype_atom();
            return aterm::contra(s, aarg());
        }
        if (accept_word("abort")) return aterm::abort(atype_atom());
        if (at_word("terminates")) error("'terminates' is not an annotated term; use 'tm'");
        return aarg();
    }

    ATerm aexpr() {
        if (accept(Tok::Backslash)) {
            Effect e = effect();
            std::string x = ident("a bound variable");
            expect(Tok::Colon, "':'");
            AType dom = atype();
            expect(Tok::Dot, "'.'");
            return aterm::lam(e, x, dom, aexpr());
        }
        if (accept_word("rec")) {
            std::string f = ident("a function name");
            expect(Tok::LParen, "'('");
            if (at(Tok::RParen)) error("annotated rec needs an argument type: rec f (x : S) : S' = a");
            std::string x = ident("a bound variable");
            if (!at(Tok::Colon)) error("annotated rec needs an argument type: rec f (x : S) : S' = a");
            take();
            AType dom = atype();
            expect(Tok::RParen, "')'");
            expect(Tok::Colon, "':'");
            AType cod = atype(true);
            expect(Tok::Equals, "'='");
            return aterm::rec(f, x, dom, cod, aexpr());
        }
        if (accept_word("recnat")) {
            std::string f = ident("a function name");
            expect(Tok::LParen, "'('");
            std::string x = ident("a bound variable");
            expect(Tok::Comma, "','");
            std::string p = ident("a proof variable");
            expect(Tok::RParen, "')'");
            expect(Tok::Colon, "':'");
            AType cod = atype(true);
            expect(Tok::Equals, "'='");
            return aterm::recnat(f, x, p, cod, aexpr());
        }
        ATerm t = ahead();
        while (starts_aarg()) t = aterm::app(t, aarg());
        return t;
    }

    // `rec_cod`: the type is followed by the '=' of a rec binder.
    AType atype(bool rec_cod = false) {
        if (accept_word("nat")) return atype::nat();
        if (accept_word("Pi")) {
            Effect e = effect();
            std::string x = ident("a bound variable");
            expect(Tok::Colon, "':'");
            AType dom = atype();
            expect(Tok::Dot, "'.'");
            return atype::pi(e, x, dom, atype());
        }
        if (accept_word("Term")) return atype::terminates(aarg());
        if (at(Tok::LParen)) {
            std::size_t m = mark();
            try {
                take();
                AType s = atype();
                expect(Tok::RParen, "')'");
                if (rec_cod || !at(Tok::Equals)) return s;
            } catch (const ParseError&) {
            }
            reset(m);
        }
        ATerm l = aexpr();
        expect(Tok::Equals, "'=' in an equation type");
        return atype::eq(l, aexpr());
    }

    // ---- implicit terms

    bool starts_targ() const {
        switch (peek().kind) {
        case Tok::Ident:
            return !is_reserved(peek().text) || at_word("join") || at_word("terminates") ||
                   at_word("contra") || at_word("abort");
        case Tok::Number:
        case Tok::LParen: return true;
        case Tok::Hole: return holes_;
        default: return false;
        }
    }

    Term targ() {
        if (at(Tok::Ident)) {
            if (accept_word("join")) return term::join();
            if (accept_word("terminates")) return term::terminates();
            if (accept_word("contra")) return term::contra();
            if (accept_word("abort")) return term::abort();
            if (!is_reserved(peek().text)) return term::var(take().text);
        }
        if (at(Tok::Number)) return term::numeral(number());
        if (at(Tok::Hole)) {
            if (!holes_) error("'_' is only allowed in an evaluation context");
            take();
            return term::var(kHoleName);
        }
        if (accept(Tok::LParen)) {
            Term t = texpr();
            expect(Tok::RParen, "')'");
            return t;
        }
        error("expected a term, found " + describe(peek()));
    }

    Term thead() {
        if (accept_word("Suc")) return term::suc(targ());
        if (accept_word("case")) {
            Term a = targ();
            Term z = targ();
            return term::cases(a, z, targ());
        }
        return targ();
    }

    Term texpr() {
        if (accept(Tok::Backslash)) {
            if (at(Tok::Bang) || at(Tok::Question))
                error("implicit lambdas carry no effect or type: \\x. t");
            std::string x = ident("a bound variable");
            expect(Tok::Dot, "'.'");
            return term::lam(x, texpr());
        }
        if (accept_word("rec")) {
            std::string f = ident("a function name");
            expect(Tok::LParen, "'('");
            std::string x = ident("a bound variable");
            expect(Tok::RParen, "')'");
            expect(Tok::Equals, "'='");
            return term::rec(f, x, texpr());
        }
        Term t = thead();
        while (starts_targ()) t = term::app(t, targ());
        return t;
    }

    Type ttype() {
        if (accept_word("nat")) return type::nat();
        if (accept_word("Pi")) {
            Effect e = effect();
            std::string x = ident("a bound variable");
            expect(Tok::Colon, "':'");
            Type dom = ttype();
            expect(Tok::Dot, "'.'");
            return type::pi(e, x, dom, ttype());
        }
        if (accept_word("Term")) return type::terminates(targ());
        if (at(Tok::LParen)) {
            std::size_t m = mark();
            try {
                take();
                Type s = ttype();
                expect(Tok::RParen, "')'");
                if (!at(Tok::Equals)) return s;
            } catch (const ParseError&) {
            }
            reset(m);
        }
        Term l = texpr();
        expect(Tok::Equals, "'=' in an equation type");
        return type::eq(l, texpr());
    }

    // ---- formulas

    Formula formula() {
        Formula l = fconj();
        if (accept(Tok::Implies)) return F::imp(l, formula());
        return l;
    }
    Formula fconj() {
        Formula l = funary();
        if (accept(Tok::And)) return F::conj(l, fconj());
        return l;
    }
    Formula funary() {
        if (accept_word("True")) return F::truth();
        if (accept_word("forall")) {
            std::string x = ident("a bound variable");
            expect(Tok::Colon, "':'");
            Sort a = sort();
            expect(Tok::Dot, "'.'");
            return F::forall(x, a, formula());
        }
        if (accept_word("Term")) return F::terminates(targ());
        if (at(Tok::LParen)) {
            std::size_t m = mark();
            try {
                take();
                Formula f = formula();
                expect(Tok::RParen, "')'");
                if (!at(Tok::Equals)) return f;
            } catch (const ParseError&) {
            }
            reset(m);
        }
        Term l = texpr();
        expect(Tok::Equals, "'=' in an equation");
        return F::eq(l, texpr());
    }

    // ---- evaluation contexts

    eval::EvalContext context() {
        Position p = peek().pos;
        bool saved = holes_;
        holes_ = true;
        Term t = texpr();
        holes_ = saved;
        return to_context(t.expr(), p);
    }

    static std::size_t count_holes(const Expr& e) {
        if (e.kind() == Kind::Var) return e.name() == kHoleName ? 1 : 0;
        std::size_t n = 0;
        for (const Expr& c : e.children()) n += count_holes(c);
        return n;
    }

    static eval::EvalContext to_context(const Expr& e, Position p) {
        std::size_t n = count_holes(e);
        if (n != 1) throw ParseError(p, "an evaluation context needs exactly one '_'");
        return build_context(e, p);
    }

    static eval::EvalContext build_context(const Expr& e, Position p) {
        auto has = [](const Expr& x) { return count_holes(x) > 0; };
        switch (e.kind()) {
        case Kind::Var:
            return eval::EvalContext::hole();
        case Kind::Suc:
            return eval::EvalContext::suc(build_context(e.child(0), p));
        case Kind::App:
            if (has(e.child(0)))
                return eval::EvalContext::app_l(build_context(e.child(0), p), Term(e.child(1)));
            if (!eval::is_value(Term(e.child(0))))
                throw ParseError(p, "'_' in argument position needs a value in function position");
            return eval::EvalContext::app_r(Term(e.child(0)), build_context(e.child(1), p));
        case Kind::Case:
            if (has(e.child(0)))
                return eval::EvalContext::case_of(build_context(e.child(0), p), Term(e.child(1)),
                                                  Term(e.child(2)));
            break;
        default:
            break;
        }
        throw ParseError(p, "'_' is not in evaluation position");
    }

    // ---- proofs

    Formula bracketed_formula() {
        expect(Tok::LBracket, "'[' before a formula pattern");
        Formula f = formula();
        expect(Tok::RBracket, "']'");
        return f;
    }

    Term witness() {
        if (at(Tok::RParen)) error("missing term witness");
        return targ();
    }

    Proof proof() {
        expect(Tok::LParen, "'(' to start a proof");
        if (!at(Tok::Ident)) error("expected a proof rule, found " + describe(peek()));
        Token kw = take();
        const std::string& k = kw.text;
        auto sub = [&] {
            if (at(Tok::RParen)) error("'" + k + "' is missing a premise");
            return proof();
        };
        std::optional<Proof> out;
        if (k == "assume") {
            out = Proof::assume(number());
        } else if (k == "alli") {
            std::string x = ident("a bound variable");
            Sort a = sort_atom();
            out = Proof::alli(x, a, sub());
        } else if (k == "alle") {
            Proof p = sub();
            out = Proof::alle(p, witness());
        } else if (k == "impi") {
            out = Proof::impi(sub());
        } else if (k == "impe") {
            Proof p = sub();
            out = Proof::impe(p, sub());
        } else if (k == "andi") {
            Proof p = sub();
            out = Proof::andi(p, sub());
        } else if (k == "ande1") {
            out = Proof::ande1(sub());
        } else if (k == "ande2") {
            out = Proof::ande2(sub());
        } else if (k == "truei") {
            out = Proof::truei();
        } else if (k == "contra") {
            out = Proof::contra(sub());
        } else if (k == "ind") {
            std::string x = ident("the induction variable");
            Formula f = bracketed_formula();
            Proof base = sub();
            std::string x1 = ident("the predecessor variable");
            out = Proof::ind(x, f, base, x1, sub());
        } else if (k == "compind") {
            std::string z = ident("the pattern variable");
            Formula f = bracketed_formula();
            std::string fn = ident("a function name");
            std::string x = ident("a bound variable");
            Term body = witness();
            Sort dom = sort_atom();
            Sort cod = sort_atom();
            out = Proof::compind(z, f, fn, x, body, dom, cod, sub());
        } else if (k == "term0") {
            out = Proof::term0();
        } else if (k == "termS") {
            out = Proof::termS(sub());
        } else if (k == "termabs") {
            out = Proof::termabs();
        } else if (k == "termrec") {
            out = Proof::termrec();
        } else if (k == "terminv") {
            eval::EvalContext c = eval::EvalContext::hole();
            if (accept(Tok::LBracket)) {
                c = context();
                expect(Tok::RBracket, "']'");
            } else {
                Position p = peek().pos;
                bool saved = holes_;
                holes_ = true;
                Term t = targ();
                holes_ = saved;
                c = to_context(t.expr(), p);
            }
            out = Proof::terminv(c, sub());
        } else if (k == "nottermabort") {
            out = Proof::nottermabort(sub());
        } else if (k == "opsem") {
            out = Proof::opsem(number());
        } else if (k == "subst") {
            std::string x = ident("the pattern variable");
            Formula f = bracketed_formula();
            Proof eq = sub();
            out = Proof::subst(x, f, eq, sub());
        } else {
            throw ParseError(kw.pos, "unknown proof rule '" + k + "'");
        }
        if (!at(Tok::RParen)) error("too many arguments to '" + k + "'");
        take();
        return *out;
    }

    bool at_block_start() const {
        return at_word("sigma") || at_word("hyps") || at_word("goal");
    }

    ProofBlock block() {
        Position start = peek().pos;
        std::vector<wprime::SortBinding> sigma;
        std::vector<Formula> hyps;
        if (accept_word("sigma")) {
            expect(Tok::Colon, "':'");
            if (!at_word("hyps") && !at_word("goal")) {
                do {
                    std::string x = ident("a variable");
                    expect(Tok::Colon, "':'");
                    sigma.push_back({x, sort()});
                } while (accept(Tok::Comma));
            }
        }
        if (accept_word("hyps")) {
            expect(Tok::Colon, "':'");
            if (!at_word("goal")) {
                do hyps.push_back(formula());
                while (accept(Tok::Comma));
            }
        }
        expect_word("goal");
        expect(Tok::Colon, "':'");
        Formula goal = formula();
        if (accept_word("proof")) expect(Tok::Colon, "':'");
        Proof p = proof();
        try {
            return ProofBlock{wprime::Sequent(std::move(sigma), std::move(hyps), goal), p, start};
        } catch (const std::invalid_argument& e) {
            throw ParseError(start, e.what());
        }
    }

    std::vector<ProofBlock> script() {
        std::vector<ProofBlock> out;
        do out.push_back(block());
        while (!at(Tok::End));
        return out;
    }

    // ---- programs

    SourceFile program() {
        SourceFile out;
        std::map<std::string, ATerm> defs;
        Context gamma;
        auto inline_defs = [&](auto v, auto subst) {
            for (const auto& d : out.definitions) v = subst(v, d.name, d.body);
            return v;
        };
        auto inline_term = [&](ATerm a) { return inline_defs(a, subst_aterm); };
        auto inline_type = [&](AType s) { return inline_defs(s, subst_atype); };
        auto taken = [&](const std::string& n) {
            return defs.count(n) > 0 || gamma.binds(n);
        };
        while (!at(Tok::End)) {
            Position p = peek().pos;
            if (accept_word("def")) {
                std::string n = ident("a definition name");
                if (taken(n)) throw ParseError(p, "'" + n + "' is already defined");
                expect(Tok::Equals, "'='");
                ATerm src = aexpr();
                ATerm body = inline_term(src);
                defs.emplace(n, body);
                out.definitions.push_back({n, src, body, p});
            } else if (accept_word("assume")) {
                std::string n = ident("a variable");
                if (taken(n)) throw ParseError(p, "'" + n + "' is already defined");
                expect(Tok::Colon, "':'");
                AType s = inline_type(atype());
                gamma.push(n, s);
                out.assumptions.push_back({n, s, p});
            } else if (at_word("check") || at_word("obligation") || at_word("eval")) {
                std::string kw = take().text;
                Directive d{kw == "check"        ? DirectiveKind::Check
                            : kw == "obligation" ? DirectiveKind::Obligation
                                                 : DirectiveKind::Eval,
                            "", std::nullopt, std::nullopt, gamma, p};
                Position np = peek().pos;
                d.name = ident("a definition name");
                if (defs.count(d.name) == 0)
                    throw ParseError(np, "'" + d.name + "' is not defined");
                if (d.kind == DirectiveKind::Check && accept(Tok::Colon))
                    d.type = inline_type(atype());
                if (d.kind != DirectiveKind::Eval && accept_word("at")) d.effect = effect();
                out.directives.push_back(std::move(d));
            } else {
                error("expected 'def', 'assume', 'check', 'obligation' or 'eval', found " +
                      describe(peek()));
            }
        }
        return out;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    bool holes_ = false;
};

template <class Fn>
auto whole(std::string_view src, Fn&& fn) {
    Parser p(src);
    auto v = fn(p);
    p.finish();
    return v;
}

}  // namespace

const Definition* SourceFile::find(const std::string& name) const {
    for (const auto& d : definitions)
        if (d.name == name) return &d;
    return nullptr;
}

ATerm parse_aterm(std::string_view src) {
    return whole(src, [](Parser& p) { return p.aexpr(); });
}
AType parse_atype(std::string_view src) {
    return whole(src, [](Parser& p) { return p.atype(); });
}
Term parse_term(std::string_view src) {
    return whole(src, [](Parser& p) { return p.texpr(); });
}
Type parse_type(std::string_view src) {
    return whole(src, [](Parser& p) { return p.ttype(); });
}
Formula parse_formula(std::string_view src) {
    return whole(src, [](Parser& p) { return p.formula(); });
}
Sort parse_sort(std::string_view src) {
    return whole(src, [](Parser& p) { return p.sort(); });
}
eval::EvalContext parse_context(std::string_view src) {
    return whole(src, [](Parser& p) { return p.context(); });
}
wproof::Proof parse_proof_term(std::string_view src) {
    return whole(src, [](Parser& p) { return p.proof(); });
}
std::vector<ProofBlock> parse_proof_script(std::string_view src) {
    return whole(src, [](Parser& p) { return p.script(); });
}
std::pair<wprime::Sequent, wproof::Proof> parse_proof(std::string_view src) {
    auto blocks = parse_proof_script(src);
    if (blocks.size() != 1) throw ParseError(blocks[1].pos, "expected a single proof block");
    return {blocks[0].sequent, blocks[0].proof};
}
SourceFile parse_program(std::string_view src) {
    return whole(src, [](Parser& p) { return p.program(); });
}

}  // namespace teq::frontend
