#include "teq/core/expr.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace teq {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t sort_hash(const Sort& s) {
    switch (s.tag()) {
    case Sort::Tag::Nat:
        return 0x51;
    case Sort::Tag::Var:
        return mix(0x52, s.var_id());
    case Sort::Tag::Arrow:
        return mix(mix(0x53, sort_hash(s.dom())), sort_hash(s.cod()));
    }
    return 0;
}

std::uint64_t name_bit(const std::string& name) {
    return std::uint64_t{1} << (std::hash<std::string>{}(name) & 63);
}

constexpr std::array<std::uint8_t, 0> kNone{};
constexpr std::array<std::uint8_t, 1> kFirst{0};
constexpr std::array<std::uint8_t, 1> kSecond{1};
constexpr std::array<std::uint8_t, 2> kFirstTwo{0, 1};
constexpr std::array<std::uint8_t, 3> kFirstThree{0, 1, 2};

}  // namespace

std::span<const std::uint8_t> binder_slots(Kind k, std::size_t i) {
    switch (k) {
    case Kind::Lam:
    case Kind::FForall:
        return kFirst;
    case Kind::Rec:
        return kFirstTwo;
    case Kind::Pi:
    case Kind::APi:
    case Kind::ALam:
        return i == 1 ? std::span<const std::uint8_t>(kFirst) : kNone;
    case Kind::ARecNat:  // S sees x, body sees f x p
        return i == 0 ? std::span<const std::uint8_t>(kSecond)
                      : std::span<const std::uint8_t>(kFirstThree);
    case Kind::ARec:  // S' sees nothing, S sees x, body sees f x
        if (i == 0) return kNone;
        return i == 1 ? std::span<const std::uint8_t>(kSecond)
                      : std::span<const std::uint8_t>(kFirstTwo);
    case Kind::ACase:
    case Kind::AConv:
        return i == 0 ? std::span<const std::uint8_t>(kFirst) : kNone;
    default:
        return kNone;
    }
}

std::size_t binder_count(Kind k) {
    switch (k) {
    case Kind::Lam:
    case Kind::FForall:
    case Kind::Pi:
    case Kind::APi:
    case Kind::ALam:
    case Kind::ACase:
    case Kind::AConv:
        return 1;
    case Kind::Rec:
    case Kind::ARec:
        return 2;
    case Kind::ARecNat:
        return 3;
    default:
        return 0;
    }
}

Expr Expr::finish(Node n) {
    std::size_t h = mix(0xabc, static_cast<std::size_t>(n.kind));
    std::uint32_t loose = 0;
    std::uint64_t bloom = 0;
    switch (n.kind) {
    case Kind::Var:
        h = mix(h, std::hash<std::string>{}(n.name));
        bloom = name_bit(n.name);
        break;
    case Kind::Bound:
        h = mix(h, n.index);
        loose = n.index + 1;
        break;
    default:
        break;
    }
    h = mix(h, static_cast<std::size_t>(n.payload.effect));
    if (n.payload.sort) h = mix(h, sort_hash(*n.payload.sort));
    for (std::size_t i = 0; i < n.children.size(); ++i) {
        const Expr& c = n.children[i];
        h = mix(h, c.hash());
        auto slots = static_cast<std::uint32_t>(binder_slots(n.kind, i).size());
        if (c.loose() > slots) loose = std::max(loose, c.loose() - slots);
        bloom |= c.free_bloom();
    }
    n.hash = h;
    n.loose = loose;
    n.bloom = bloom;
    n.suc_base = n.kind == Kind::Suc && !n.children.empty() ? n.children[0].suc_base() : n.kind;
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::free(std::string name) {
    Node n{Kind::Var, std::move(name), 0, {}, {}, {}};
    return finish(std::move(n));
}

Expr Expr::bound(std::uint32_t index) {
    Node n{Kind::Bound, {}, index, {}, {}, {}};
    return finish(std::move(n));
}

Expr Expr::node(Kind k, std::vector<std::string> hints, std::vector<Expr> children,
                Payload payload) {
    Node n{k, {}, 0, std::move(hints), std::move(children), std::move(payload)};
    return finish(std::move(n));
}

Expr with_children(const Expr& e, std::vector<Expr> children) {
    if (e.kind() == Kind::Var || e.kind() == Kind::Bound) return e;
    return Expr::node(e.kind(), e.hints(), std::move(children), e.payload());
}

Expr with_kind(const Expr& e, Kind k, std::vector<Expr> children) {
    return Expr::node(k, e.hints(), std::move(children), e.payload());
}

namespace {

Expr inst(const Expr& e, std::uint32_t depth, std::span<const Expr> vals) {
    if (e.loose() <= depth) return e;
    if (e.kind() == Kind::Bound) {
        const std::uint32_t i = e.index() - depth;
        const auto n = static_cast<std::uint32_t>(vals.size());
        if (i < n) return vals[n - 1 - i];
        return Expr::bound(e.index() - n);
    }
    std::vector<Expr> kids;
    kids.reserve(e.arity());
    for (std::size_t c = 0; c < e.arity(); ++c) {
        auto d = depth + static_cast<std::uint32_t>(binder_slots(e.kind(), c).size());
        kids.push_back(inst(e.child(c), d, vals));
    }
    return with_children(e, std::move(kids));
}

Expr abst(const Expr& e, std::uint32_t depth, std::span<const std::string> names,
          std::uint64_t mask) {
    if ((e.free_bloom() & mask) == 0 && e.loose() <= depth) return e;
    const auto n = static_cast<std::uint32_t>(names.size());
    if (e.kind() == Kind::Var) {
        for (std::uint32_t j = n; j-- > 0;)
            if (names[j] == e.name()) return Expr::bound(depth + n - 1 - j);
        return e;
    }
    if (e.kind() == Kind::Bound) return e.index() >= depth ? Expr::bound(e.index() + n) : e;
    std::vector<Expr> kids;
    kids.reserve(e.arity());
    for (std::size_t c = 0; c < e.arity(); ++c) {
        auto d = depth + static_cast<std::uint32_t>(binder_slots(e.kind(), c).size());
        kids.push_back(abst(e.child(c), d, names, mask));
    }
    return with_children(e, std::move(kids));
}

Expr subst(const Expr& e, const std::string& x, std::uint64_t bit, const Expr& v) {
    if ((e.free_bloom() & bit) == 0) return e;
    if (e.kind() == Kind::Var) return e.name() == x ? v : e;
    std::vector<Expr> kids;
    kids.reserve(e.arity());
    for (const Expr& c : e.children()) kids.push_back(subst(c, x, bit, v));
    return with_children(e, std::move(kids));
}

void collect(const Expr& e, NameSet& out) {
    if (e.free_bloom() == 0) return;
    if (e.kind() == Kind::Var) {
        out.insert(e.name());
        return;
    }
    for (const Expr& c : e.children()) collect(c, out);
}

bool occurs(const Expr& e, const std::string& x, std::uint64_t bit) {
    if ((e.free_bloom() & bit) == 0) return false;
    if (e.kind() == Kind::Var) return e.name() == x;
    return std::any_of(e.children().begin(), e.children().end(),
                       [&](const Expr& c) { return occurs(c, x, bit); });
}

}  // namespace

Expr instantiate(const Expr& body, std::span<const Expr> values) {
    if (values.empty()) return body;
    return inst(body, 0, values);
}

Expr abstract(const Expr& body, std::span<const std::string> names) {
    if (names.empty()) return body;
    std::uint64_t mask = 0;
    for (const auto& n : names) mask |= name_bit(n);
    return abst(body, 0, names, mask);
}

Expr open_child(const Expr& e, std::size_t i, std::span<const std::string> names) {
    std::vector<Expr> vals;
    for (auto slot : binder_slots(e.kind(), i)) vals.push_back(Expr::free(names[slot]));
    return instantiate(e.child(i), vals);
}

Expr instantiate_child(const Expr& e, std::size_t i, std::span<const Expr> values) {
    std::vector<Expr> vals;
    for (auto slot : binder_slots(e.kind(), i)) vals.push_back(values[slot]);
    return instantiate(e.child(i), vals);
}

Expr substitute(const Expr& e, const std::string& x, const Expr& v) {
    return subst(e, x, name_bit(x), v);
}

NameSet free_names(const Expr& e) {
    NameSet out;
    collect(e, out);
    return out;
}

bool occurs_free(const Expr& e, const std::string& x) { return occurs(e, x, name_bit(x)); }

bool locally_closed(const Expr& e) { return e.loose() == 0; }

bool alpha_equal(const Expr& a, const Expr& b) {
    if (a.same_node(b)) return true;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.arity() != b.arity()) return false;
    if (a.effect() != b.effect()) return false;
    switch (a.kind()) {
    case Kind::Var:
        return a.name() == b.name();
    case Kind::Bound:
        return a.index() == b.index();
    default:
        break;
    }
    if (a.payload().sort.has_value() != b.payload().sort.has_value()) return false;
    if (a.payload().sort && !(a.sort() == b.sort())) return false;
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (!alpha_equal(a.child(i), b.child(i))) return false;
    return true;
}

std::size_t alpha_hash(const Expr& e) { return e.hash(); }

std::string freshen(std::string base, const NameSet& avoid) {
    if (base.empty()) base = "x";
    while (avoid.count(base) != 0) base += '\'';
    return base;
}

}  // namespace teq
