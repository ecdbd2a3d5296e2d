#include "named.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace teq::oracle {

namespace {

NP mk(N::K k, std::string a = "", std::string b = "", std::vector<NP> kids = {}) {
    return std::make_shared<const N>(N{k, std::move(a), std::move(b), std::move(kids)});
}

int counter = 0;
std::string fresh_name() { return "%" + std::to_string(counter++); }

}  // namespace

NP from_term(const Term& t) {
    // Walk the nameless tree keeping a stack of invented names for binders.
    std::function<NP(const Expr&, std::vector<std::string>&)> go =
        [&](const Expr& e, std::vector<std::string>& env) -> NP {
        auto kid = [&](std::size_t i, std::vector<std::string> names) {
            for (auto& n : names) env.push_back(n);
            NP r = go(e.child(i), env);
            env.resize(env.size() - names.size());
            return r;
        };
        switch (e.kind()) {
            case Kind::Var:
                return mk(N::Var, e.name());
            case Kind::Bound:
                return mk(N::Var, env[env.size() - 1 - e.index()]);
            case Kind::App:
                return mk(N::App, "", "", {kid(0, {}), kid(1, {})});
            case Kind::Lam: {
                std::string x = fresh_name();
                return mk(N::Lam, x, "", {kid(0, {x})});
            }
            case Kind::Rec: {
                std::string f = fresh_name(), x = fresh_name();
                return mk(N::Rec, f, x, {kid(0, {f, x})});
            }
            case Kind::Zero:
                return mk(N::Zero);
            case Kind::Suc:
                return mk(N::Suc, "", "", {kid(0, {})});
            case Kind::Case:
                return mk(N::Case, "", "", {kid(0, {}), kid(1, {}), kid(2, {})});
            case Kind::Join:
                return mk(N::Join);
            case Kind::TermPf:
                return mk(N::TermPf);
            case Kind::Contra:
                return mk(N::Contra);
            case Kind::Abort:
                return mk(N::Abort);
            default:
                throw std::invalid_argument("not an implicit term");
        }
    };
    std::vector<std::string> env;
    return go(t.expr(), env);
}

Term to_term(const NP& n) {
    switch (n->k) {
        case N::Var:
            return term::var(n->a);
        case N::App:
            return term::app(to_term(n->kids[0]), to_term(n->kids[1]));
        case N::Lam:
            return term::lam(n->a, to_term(n->kids[0]));
        case N::Rec:
            return term::rec(n->a, n->b, to_term(n->kids[0]));
        case N::Zero:
            return term::zero();
        case N::Suc:
            return term::suc(to_term(n->kids[0]));
        case N::Case:
            return term::cases(to_term(n->kids[0]), to_term(n->kids[1]), to_term(n->kids[2]));
        case N::Join:
            return term::join();
        case N::TermPf:
            return term::terminates();
        case N::Contra:
            return term::contra();
        case N::Abort:
            return term::abort();
    }
    throw std::logic_error("bad node");
}

std::set<std::string> fv(const NP& n) {
    std::set<std::string> out;
    switch (n->k) {
        case N::Var:
            out.insert(n->a);
            return out;
        case N::Lam:
            out = fv(n->kids[0]);
            out.erase(n->a);
            return out;
        case N::Rec:
            out = fv(n->kids[0]);
            out.erase(n->a);
            out.erase(n->b);
            return out;
        default:
            for (const auto& k : n->kids)
                for (const auto& s : fv(k)) out.insert(s);
            return out;
    }
}

NP subst(const NP& body, const std::string& x, const NP& v) {
    switch (body->k) {
        case N::Var:
            return body->a == x ? v : body;
        case N::Lam: {
            if (body->a == x) return body;
            NP inner = body->kids[0];
            std::string y = body->a;
            if (fv(v).count(y)) {
                std::string y2 = fresh_name();
                inner = subst(inner, y, mk(N::Var, y2));
                y = y2;
            }
            return mk(N::Lam, y, "", {subst(inner, x, v)});
        }
        case N::Rec: {
            if (body->a == x || body->b == x) return body;
            NP inner = body->kids[0];
            std::string f = body->a, y = body->b;
            auto vars = fv(v);
            if (vars.count(f)) {
                std::string f2 = fresh_name();
                inner = subst(inner, f, mk(N::Var, f2));
                f = f2;
            }
            if (vars.count(y)) {
                std::string y2 = fresh_name();
                inner = subst(inner, y, mk(N::Var, y2));
                y = y2;
            }
            return mk(N::Rec, f, y, {subst(inner, x, v)});
        }
        default: {
            std::vector<NP> kids;
            for (const auto& k : body->kids) kids.push_back(subst(k, x, v));
            return mk(body->k, body->a, body->b, std::move(kids));
        }
    }
}

namespace {

bool alpha_env(const NP& a, const NP& b, std::map<std::string, std::string>& l,
               std::map<std::string, std::string>& r, int depth) {
    if (a->k != b->k) return false;
    switch (a->k) {
        case N::Var: {
            auto la = l.find(a->a);
            auto rb = r.find(b->a);
            if (la == l.end() && rb == r.end()) return a->a == b->a;
            if (la == l.end() || rb == r.end()) return false;
            return la->second == rb->second;
        }
        case N::Lam:
        case N::Rec: {
            std::vector<std::pair<std::string, std::string>> bs = {{a->a, b->a}};
            if (a->k == N::Rec) bs.push_back({a->b, b->b});
            auto l2 = l, r2 = r;
            for (std::size_t i = 0; i < bs.size(); ++i) {
                std::string tag = "#" + std::to_string(depth) + "." + std::to_string(i);
                l2[bs[i].first] = tag;
                r2[bs[i].second] = tag;
            }
            return alpha_env(a->kids[0], b->kids[0], l2, r2, depth + 1);
        }
        default:
            for (std::size_t i = 0; i < a->kids.size(); ++i)
                if (!alpha_env(a->kids[i], b->kids[i], l, r, depth)) return false;
            return true;
    }
}

}  // namespace

bool alpha(const NP& a, const NP& b) {
    std::map<std::string, std::string> l, r;
    return alpha_env(a, b, l, r, 0);
}

bool is_value(const NP& n) {
    switch (n->k) {
        case N::Var:
        case N::Zero:
        case N::Lam:
        case N::Rec:
        case N::Join:
        case N::TermPf:
        case N::Contra:
            return true;
        case N::Suc:
            return is_value(n->kids[0]);
        default:
            return false;
    }
}

namespace {

bool root_redex(const NP& n) {
    if (n->k == N::Abort) return true;
    if (n->k == N::App)
        return (n->kids[0]->k == N::Lam || n->kids[0]->k == N::Rec) && is_value(n->kids[1]);
    if (n->k == N::Case)
        return n->kids[0]->k == N::Zero || (n->kids[0]->k == N::Suc && is_value(n->kids[0]));
    return false;
}

void splits(const NP& n, std::vector<int>& path, std::vector<Split>& out) {
    if (root_redex(n)) out.push_back({path, n});
    auto into = [&](int i) {
        path.push_back(i);
        splits(n->kids[i], path, out);
        path.pop_back();
    };
    switch (n->k) {
        case N::Suc:
            into(0);
            break;
        case N::App:
            into(0);                                 // C t
            if (is_value(n->kids[0])) into(1);       // v C
            break;
        case N::Case:
            into(0);
            break;
        default:
            break;
    }
}

NP contract(const NP& r) {
    if (r->k == N::App) {
        const NP& fn = r->kids[0];
        const NP& v = r->kids[1];
        if (fn->k == N::Lam) return subst(fn->kids[0], fn->a, v);
        // substitute the argument first, then the function for f
        NP body = fn->kids[0];
        if (fn->a == fn->b) return subst(body, fn->b, v);
        std::string f2 = fresh_name();
        body = subst(body, fn->a, mk(N::Var, f2));
        body = subst(body, fn->b, v);
        return subst(body, f2, fn);
    }
    // case
    const NP& s = r->kids[0];
    if (s->k == N::Zero) return r->kids[1];
    return mk(N::App, "", "", {r->kids[2], s->kids[0]});
}

}  // namespace

std::vector<Split> all_splits(const NP& n) {
    std::vector<Split> out;
    std::vector<int> path;
    splits(n, path, out);
    return out;
}

NP plug_at(const NP& n, const std::vector<int>& path, const NP& r) {
    if (path.empty()) return r;
    std::vector<NP> kids = n->kids;
    std::vector<int> rest(path.begin() + 1, path.end());
    kids[path[0]] = plug_at(kids[path[0]], rest, r);
    return mk(n->k, n->a, n->b, std::move(kids));
}

std::optional<NP> step(const NP& n) {
    auto ss = all_splits(n);
    if (ss.empty()) return std::nullopt;
    const Split& s = ss.front();
    if (s.redex->k == N::Abort) {
        if (s.path.empty()) return std::nullopt;  // abort is stuck on its own
        return s.redex;
    }
    return plug_at(n, s.path, contract(s.redex));
}

}  // namespace teq::oracle
