#include "teq/eval/eval.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

namespace teq::eval {

EvalContext EvalContext::wrapped(Frame f) const {
    EvalContext c;
    c.frames_.reserve(frames_.size() + 1);
    c.frames_.push_back(std::move(f));
    c.frames_.insert(c.frames_.end(), frames_.begin(), frames_.end());
    return c;
}

EvalContext EvalContext::suc(EvalContext inner) { return inner.wrapped({FrameTag::Suc, {}}); }

EvalContext EvalContext::app_l(EvalContext inner, Term arg) {
    return inner.wrapped({FrameTag::AppL, {std::move(arg)}});
}

EvalContext EvalContext::app_r(Term fn, EvalContext inner) {
    if (!is_value(fn)) throw std::invalid_argument("app_r: function part is not a value");
    return inner.wrapped({FrameTag::AppR, {std::move(fn)}});
}

EvalContext EvalContext::case_of(EvalContext inner, Term z, Term s) {
    return inner.wrapped({FrameTag::Case, {std::move(z), std::move(s)}});
}

Term EvalContext::plug(const Term& t) const {
    Term out = t;
    for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
        switch (it->tag) {
        case FrameTag::Suc:
            out = term::suc(out);
            break;
        case FrameTag::AppL:
            out = term::app(out, it->parts[0]);
            break;
        case FrameTag::AppR:
            out = term::app(it->parts[0], out);
            break;
        case FrameTag::Case:
            out = term::cases(out, it->parts[0], it->parts[1]);
            break;
        }
    }
    return out;
}

bool operator==(const EvalContext& a, const EvalContext& b) {
    if (a.frames_.size() != b.frames_.size()) return false;
    for (std::size_t i = 0; i < a.frames_.size(); ++i) {
        const Frame& x = a.frames_[i];
        const Frame& y = b.frames_[i];
        if (x.tag != y.tag || x.parts.size() != y.parts.size()) return false;
        for (std::size_t j = 0; j < x.parts.size(); ++j)
            if (!(x.parts[j] == y.parts[j])) return false;
    }
    return true;
}

bool is_value(const Term& t) {
    switch (t.expr().suc_base()) {
    case Kind::Var:
    case Kind::Zero:
    case Kind::Lam:
    case Kind::Rec:
    case Kind::Join:
    case Kind::TermPf:
    case Kind::Contra:
        return true;
    default:
        return false;
    }
}

std::optional<Term> beta(const Term& t) {
    const Expr& e = t.expr();
    if (e.kind() == Kind::App) {
        const Expr& fn = e.child(0);
        const Term arg(e.child(1));
        if (!is_value(arg)) return std::nullopt;
        if (fn.kind() == Kind::Lam) {
            std::array<Expr, 1> vals{arg.expr()};
            return Term(instantiate(fn.child(0), vals));
        }
        if (fn.kind() == Kind::Rec) {
            std::array<Expr, 2> vals{fn, arg.expr()};
            return Term(instantiate(fn.child(0), vals));
        }
        return std::nullopt;
    }
    if (e.kind() == Kind::Case) {
        const Expr& s = e.child(0);
        if (s.kind() == Kind::Zero) return Term(e.child(1));
        if (s.kind() == Kind::Suc && is_value(Term(s.child(0))))
            return term::app(Term(e.child(2)), Term(s.child(0)));
    }
    return std::nullopt;
}

namespace {

// Frames are collected innermost first.
bool dec(const Term& t, std::vector<Frame>& frames, std::optional<Term>& redex) {
    const Expr& e = t.expr();
    switch (e.kind()) {
    case Kind::Abort:
        redex = t;
        return true;
    case Kind::Suc: {
        Term inner(e.child(0));
        if (is_value(inner)) return false;
        if (!dec(inner, frames, redex)) return false;
        frames.push_back({FrameTag::Suc, {}});
        return true;
    }
    case Kind::App: {
        Term fn(e.child(0));
        Term arg(e.child(1));
        if (!is_value(fn)) {
            if (!dec(fn, frames, redex)) return false;
            frames.push_back({FrameTag::AppL, {arg}});
            return true;
        }
        if (!is_value(arg)) {
            if (!dec(arg, frames, redex)) return false;
            frames.push_back({FrameTag::AppR, {fn}});
            return true;
        }
        if (!beta(t)) return false;
        redex = t;
        return true;
    }
    case Kind::Case: {
        Term s(e.child(0));
        if (!is_value(s)) {
            if (!dec(s, frames, redex)) return false;
            frames.push_back({FrameTag::Case, {Term(e.child(1)), Term(e.child(2))}});
            return true;
        }
        if (!beta(t)) return false;
        redex = t;
        return true;
    }
    default:
        return false;
    }
}

EvalContext from_inner_frames(const std::vector<Frame>& inner_first) {
    EvalContext c = EvalContext::hole();
    for (const Frame& f : inner_first) {
        switch (f.tag) {
        case FrameTag::Suc:
            c = EvalContext::suc(c);
            break;
        case FrameTag::AppL:
            c = EvalContext::app_l(c, f.parts[0]);
            break;
        case FrameTag::AppR:
            c = EvalContext::app_r(f.parts[0], c);
            break;
        case FrameTag::Case:
            c = EvalContext::case_of(c, f.parts[0], f.parts[1]);
            break;
        }
    }
    return c;
}

struct TermHash {
    std::size_t operator()(const Term& t) const { return alpha_hash(t.expr()); }
};

using TermSet = std::unordered_set<Term, TermHash>;

}  // namespace

std::optional<Decomposition> decompose(const Term& t) {
    if (is_value(t)) return std::nullopt;
    std::vector<Frame> frames;
    std::optional<Term> redex;
    if (!dec(t, frames, redex)) return std::nullopt;
    return Decomposition{from_inner_frames(frames), *redex};
}

Term plug(const EvalContext& c, const Term& t) { return c.plug(t); }

std::optional<Term> step(const Term& t) {
    auto d = decompose(t);
    if (!d) return std::nullopt;
    if (d->redex.kind() == Kind::Abort) {
        if (d->context.is_hole()) return std::nullopt;
        return term::abort();
    }
    return d->context.plug(*beta(d->redex));
}

Trace reduce_trace(const Term& t, std::size_t fuel) {
    Trace tr;
    tr.terms.push_back(t);
    while (tr.steps() < fuel) {
        auto next = step(tr.last());
        if (!next) return tr;
        tr.terms.push_back(std::move(*next));
    }
    tr.fuel_exhausted = step(tr.last()).has_value();
    return tr;
}

namespace {

// Terms reachable in at most `fuel` steps.  The reduction is deterministic,
// so once a term repeats nothing new can appear and the walk stops early.
TermSet reachable(const Term& t, std::size_t fuel) {
    TermSet seen;
    Term cur = t;
    seen.insert(cur);
    for (std::size_t i = 0; i < fuel; ++i) {
        auto next = step(cur);
        if (!next) break;
        if (!seen.insert(*next).second) break;
        cur = std::move(*next);
    }
    return seen;
}

}  // namespace

bool joinable(const Term& t1, const Term& t2, std::size_t fuel) {
    TermSet left = reachable(t1, fuel);
    if (left.count(t2) != 0) return true;
    Term cur = t2;
    TermSet right{cur};
    for (std::size_t i = 0; i < fuel; ++i) {
        auto next = step(cur);
        if (!next) break;
        if (left.count(*next) != 0) return true;
        if (!right.insert(*next).second) break;
        cur = std::move(*next);
    }
    return false;
}

namespace {

std::optional<EvalContext> position(const Term& big, const Term& sub) {
    if (big == sub) return EvalContext::hole();
    const Expr& e = big.expr();
    switch (e.kind()) {
    case Kind::Suc:
        if (auto c = position(Term(e.child(0)), sub)) return EvalContext::suc(*c);
        return std::nullopt;
    case Kind::App: {
        Term fn(e.child(0));
        Term arg(e.child(1));
        if (auto c = position(fn, sub)) return EvalContext::app_l(*c, arg);
        if (is_value(fn))
            if (auto c = position(arg, sub)) return EvalContext::app_r(fn, *c);
        return std::nullopt;
    }
    case Kind::Case:
        if (auto c = position(Term(e.child(0)), sub))
            return EvalContext::case_of(*c, Term(e.child(1)), Term(e.child(2)));
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

}  // namespace

std::optional<EvalContext> find_eval_position(const Term& big, const Term& sub) {
    return position(big, sub);
}

}  // namespace teq::eval
