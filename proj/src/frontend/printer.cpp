#include "teq/frontend/printer.hpp"

#include <set>
#include <stdexcept>

namespace teq::frontend {

namespace {

// Term precedence: binders extend right, applications are left-nested.
enum Level : int { EXPR = 0, APP = 1, ARG = 2 };
// Formula precedence.
enum FLevel : int { IMP = 0, CONJ = 1, UNARY = 2 };

std::string paren(std::string s) { return "(" + s + ")"; }

class Printer {
public:
    Printer() = default;

    std::string term(const Expr& e, int level);
    std::string type(const Expr& e);
    std::string formula(const Expr& e, int level, bool tail);

private:
    // Indices escaping `e` from under `depth` binders, relative to the
    // enclosing scope.
    static void escaping(const Expr& e, std::uint32_t depth, std::set<std::uint32_t>& out) {
        if (e.loose() <= depth) return;
        if (e.kind() == Kind::Bound) {
            out.insert(e.index() - depth);
            return;
        }
        for (std::size_t i = 0; i < e.arity(); ++i)
            escaping(e.child(i), depth + static_cast<std::uint32_t>(binder_slots(e.kind(), i).size()),
                     out);
    }

    // Names the binders of `e` must not take: its free names, and outer
    // binders it mentions.
    NameSet visible(const Expr& e) const {
        NameSet out = free_names(e);
        std::set<std::uint32_t> idx;
        escaping(e, 0, idx);
        for (auto k : idx)
            if (k < env_.size()) out.insert(env_[env_.size() - 1 - k]);
        return out;
    }

    std::vector<std::string> pick(const Expr& e) {
        NameSet avoid = visible(e);
        std::vector<std::string> out;
        for (std::string h : e.hints()) {
            if (h.empty()) h = "x";
            while (avoid.count(h) > 0) h += '\'';
            avoid.insert(h);
            out.push_back(h);
        }
        return out;
    }

    // Print child i of e with its binders in scope.
    template <class Fn>
    std::string under(const Expr& e, std::size_t i, const std::vector<std::string>& names, Fn&& fn) {
        auto slots = binder_slots(e.kind(), i);
        for (auto s : slots) env_.push_back(names[s]);
        std::string out = fn(e.child(i));
        env_.resize(env_.size() - slots.size());
        return out;
    }

    std::string bound(const Expr& e) const {
        if (e.index() >= env_.size()) return "#" + std::to_string(e.index());
        return env_[env_.size() - 1 - e.index()];
    }

    std::string sub_term(const Expr& e, std::size_t i, const std::vector<std::string>& names,
                         int level) {
        return under(e, i, names, [&](const Expr& c) { return term(c, level); });
    }
    std::string sub_type(const Expr& e, std::size_t i, const std::vector<std::string>& names) {
        return under(e, i, names, [&](const Expr& c) { return type(c); });
    }

    // Pi domains always get parentheses when they are themselves Pi types.
    std::string domain(const Expr& s) {
        std::string t = type(s);
        return s.kind() == Kind::Pi || s.kind() == Kind::APi ? paren(t) : t;
    }
    std::string type_atom(const Expr& s) {
        std::string t = type(s);
        return s.kind() == Kind::ANat || s.kind() == Kind::Nat ? t : paren(t);
    }

    std::vector<std::string> env_;
};

std::string Printer::term(const Expr& e, int level) {
    auto wrap = [&](int own, std::string s) { return own < level ? paren(std::move(s)) : s; };
    switch (e.kind()) {
    case Kind::Var:
        return e.name();
    case Kind::Bound:
        return bound(e);
    case Kind::Zero:
    case Kind::AZero:
        return "0";
    case Kind::Suc:
    case Kind::ASuc:
        return wrap(APP, "Suc " + term(e.child(0), ARG));
    case Kind::App:
    case Kind::AApp:
        return wrap(APP, term(e.child(0), APP) + " " + term(e.child(1), ARG));
    case Kind::Lam: {
        auto n = pick(e);
        return wrap(EXPR, "\\" + n[0] + ". " + sub_term(e, 0, n, EXPR));
    }
    case Kind::Rec: {
        auto n = pick(e);
        return wrap(EXPR, "rec " + n[0] + " (" + n[1] + ") = " + sub_term(e, 0, n, EXPR));
    }
    case Kind::Case:
        return wrap(APP, "case " + term(e.child(0), ARG) + " " + term(e.child(1), ARG) + " " +
                             term(e.child(2), ARG));
    case Kind::Join:
        return "join";
    case Kind::TermPf:
        return "terminates";
    case Kind::Contra:
        return "contra";
    case Kind::Abort:
        return "abort";
    case Kind::ALam: {
        auto n = pick(e);
        std::string dom = domain(e.child(0));
        return wrap(EXPR, std::string("\\") + std::string(effect_symbol(e.effect())) + " " + n[0] + ":" + dom +
                              ". " + sub_term(e, 1, n, EXPR));
    }
    case Kind::ARec: {
        auto n = pick(e);
        std::string dom = type(e.child(0));
        std::string cod = under(e, 1, n, [&](const Expr& c) {
            std::string t = type(c);
            return c.kind() == Kind::AEq ? paren(t) : t;
        });
        return wrap(EXPR, "rec " + n[0] + " (" + n[1] + ":" + dom + "):" + cod + " = " +
                              sub_term(e, 2, n, EXPR));
    }
    case Kind::ARecNat: {
        auto n = pick(e);
        std::string cod = under(e, 0, n, [&](const Expr& c) {
            std::string t = type(c);
            return c.kind() == Kind::AEq ? paren(t) : t;
        });
        return wrap(EXPR, "recnat " + n[0] + " (" + n[1] + ", " + n[2] + "):" + cod + " = " +
                              sub_term(e, 1, n, EXPR));
    }
    case Kind::ACase: {
        auto n = pick(e);
        return wrap(APP, "case [" + n[0] + ". " + sub_type(e, 0, n) + "] " + term(e.child(1), ARG) +
                             " " + term(e.child(2), ARG) + " " + term(e.child(3), ARG));
    }
    case Kind::AJoin:
        return wrap(APP, "join " + term(e.child(0), ARG) + " " + term(e.child(1), ARG));
    case Kind::AConv: {
        auto n = pick(e);
        return wrap(APP, "conv [" + n[0] + ". " + sub_type(e, 0, n) + "] " +
                             term(e.child(1), EXPR) + " by " + term(e.child(2), ARG));
    }
    case Kind::AReflect:
        return wrap(APP, "reflect " + term(e.child(0), EXPR) + " by " + term(e.child(1), ARG));
    case Kind::ATerminates:
        return wrap(APP, "tm " + term(e.child(0), ARG));
    case Kind::AInv:
        return wrap(APP, "inv " + term(e.child(0), EXPR) + " at " + term(e.child(1), ARG));
    case Kind::AContra:
        return wrap(APP, "contra " + type_atom(e.child(0)) + " " + term(e.child(1), ARG));
    case Kind::AAbort:
        return wrap(APP, "abort " + type_atom(e.child(0)));
    default:
        throw std::invalid_argument("print: expected a term");
    }
}

std::string Printer::type(const Expr& e) {
    switch (e.kind()) {
    case Kind::Nat:
    case Kind::ANat:
        return "nat";
    case Kind::Pi:
    case Kind::APi: {
        auto n = pick(e);
        std::string dom = domain(e.child(0));
        return std::string("Pi ") + std::string(effect_symbol(e.effect())) + " " + n[0] + ":" + dom + ". " +
               sub_type(e, 1, n);
    }
    case Kind::Eq:
    case Kind::AEq:
        return term(e.child(0), APP) + " = " + term(e.child(1), APP);
    case Kind::TermTy:
    case Kind::ATermTy:
        return "Term " + term(e.child(0), ARG);
    default:
        throw std::invalid_argument("print: expected a type");
    }
}

// `tail`: nothing follows this formula inside its parenthesis group, so a
// quantifier may extend to the right unbracketed.
std::string Printer::formula(const Expr& e, int level, bool tail) {
    switch (e.kind()) {
    case Kind::FTrue:
        return "True";
    case Kind::FTerm:
        return "Term " + term(e.child(0), ARG);
    case Kind::FEq:
        return term(e.child(0), APP) + " = " + term(e.child(1), APP);
    case Kind::FImp:
        if (level > IMP) return paren(formula(e, IMP, true));
        return formula(e.child(0), CONJ, false) + " => " + formula(e.child(1), IMP, tail);
    case Kind::FAnd:
        if (level > CONJ) return paren(formula(e, CONJ, true));
        return formula(e.child(0), UNARY, false) + " /\\ " + formula(e.child(1), CONJ, tail);
    case Kind::FForall: {
        if (!tail) return paren(formula(e, IMP, true));
        auto n = pick(e);
        std::string body = under(e, 0, n, [&](const Expr& c) { return formula(c, IMP, true); });
        std::string s = to_string(e.sort());
        return "forall " + n[0] + " : " + s + ". " + body;
    }
    default:
        throw std::invalid_argument("print: expected a formula");
    }
}

std::string sort_atom(const Sort& s) {
    return s.is_arrow() ? paren(to_string(s)) : to_string(s);
}

Expr placeholder_hole() { return Expr::free("_"); }

}  // namespace

std::string print(const ATerm& a) { return Printer().term(a.expr(), EXPR); }
std::string print(const AType& s) { return Printer().type(s.expr()); }
std::string print(const Term& t) { return Printer().term(t.expr(), EXPR); }
std::string print(const Type& t) { return Printer().type(t.expr()); }
std::string print(const Formula& f) { return Printer().formula(f.expr(), IMP, true); }
std::string print(const Sort& s) { return to_string(s); }

std::string print(const eval::EvalContext& c) {
    return print(c.plug(Term(placeholder_hole())));
}

std::string print(const wproof::Proof& p) {
    using wproof::Rule;
    auto prem = [&](std::size_t i) { return " " + print(p.premises()[i]); };
    auto arg = [](const Term& t) { return Printer().term(t.expr(), ARG); };
    auto pat = [](const Formula& f) { return " [" + print(f) + "]"; };
    const auto& n = p.names();
    std::string body;
    switch (p.rule()) {
    case Rule::Assume: body = "assume " + std::to_string(p.number()); break;
    case Rule::Alli: body = "alli " + n[0] + " " + sort_atom(p.sorts()[0]) + prem(0); break;
    case Rule::Alle: body = "alle" + prem(0) + " " + arg(*p.term()); break;
    case Rule::Impi: body = "impi" + prem(0); break;
    case Rule::Impe: body = "impe" + prem(0) + prem(1); break;
    case Rule::Andi: body = "andi" + prem(0) + prem(1); break;
    case Rule::Ande1: body = "ande1" + prem(0); break;
    case Rule::Ande2: body = "ande2" + prem(0); break;
    case Rule::Truei: body = "truei"; break;
    case Rule::Contra: body = "contra" + prem(0); break;
    case Rule::Ind:
        body = "ind " + n[0] + pat(*p.pattern()) + prem(0) + " " + n[1] + prem(1);
        break;
    case Rule::CompInd:
        body = "compind " + n[0] + pat(*p.pattern()) + " " + n[1] + " " + n[2] + " " +
               arg(*p.term()) + " " + sort_atom(p.sorts()[0]) + " " + sort_atom(p.sorts()[1]) +
               prem(0);
        break;
    case Rule::Term0: body = "term0"; break;
    case Rule::TermS: body = "termS" + prem(0); break;
    case Rule::TermAbs: body = "termabs"; break;
    case Rule::TermRec: body = "termrec"; break;
    case Rule::TermInv: body = "terminv [" + print(*p.context()) + "]" + prem(0); break;
    case Rule::NotTermAbort: body = "nottermabort" + prem(0); break;
    case Rule::OpSem: body = "opsem " + std::to_string(p.number()); break;
    case Rule::Subst: body = "subst " + n[0] + pat(*p.pattern()) + prem(0) + prem(1); break;
    }
    return "(" + body + ")";
}

std::string print(const wprime::Sequent& s) {
    std::string out;
    if (!s.sigma().empty()) {
        out += "sigma: ";
        for (std::size_t i = 0; i < s.sigma().size(); ++i)
            out += (i ? ", " : "") + s.sigma()[i].name + " : " + to_string(s.sigma()[i].sort);
        out += "\n";
    }
    if (!s.hyps().empty()) {
        out += "hyps: ";
        for (std::size_t i = 0; i < s.hyps().size(); ++i)
            out += (i ? ", " : "") + print(s.hyps()[i]);
        out += "\n";
    }
    out += "goal: " + print(s.goal()) + "\n";
    return out;
}

std::string print_expr(const Expr& e) {
    Printer p;
    Kind k = e.kind();
    if (k >= Kind::FTrue) return p.formula(e, IMP, true);
    switch (k) {
    case Kind::Nat:
    case Kind::Pi:
    case Kind::Eq:
    case Kind::TermTy:
    case Kind::ANat:
    case Kind::APi:
    case Kind::AEq:
    case Kind::ATermTy:
        return p.type(e);
    default:
        return p.term(e, EXPR);
    }
}

}  // namespace teq::frontend
