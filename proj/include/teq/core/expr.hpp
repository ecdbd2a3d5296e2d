#pragma once

// Abstract binding trees shared by every syntactic category.
//
// Bound variables are de Bruijn indices, free variables are names.  Each node
// keeps the surface names of the variables it binds ("hints") for printing;
// they take no part in equality.  All public values are locally closed, so
// substituting a value for a free name never needs shifting or renaming.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "teq/core/effect.hpp"
#include "teq/core/sort.hpp"

namespace teq {

enum class Kind : std::uint8_t {
    // shared by Term and ATerm
    Var,
    Bound,
    // Term
    App,
    Lam,
    Zero,
    Suc,
    Rec,
    Case,
    Join,
    TermPf,
    Contra,
    Abort,
    // Type
    Nat,
    Pi,
    Eq,
    TermTy,
    // ATerm
    AApp,
    ALam,
    AZero,
    ASuc,
    ARecNat,
    ARec,
    ACase,
    AJoin,
    AConv,
    AReflect,
    ATerminates,
    AInv,
    AContra,
    AAbort,
    // AType
    ANat,
    APi,
    AEq,
    ATermTy,
    // Formula
    FTrue,
    FForall,
    FImp,
    FAnd,
    FTerm,
    FEq,
};

using NameSet = std::set<std::string>;

struct ExprPayload {
    Effect effect = Effect::Total;
    std::optional<Sort> sort;
};

class Expr {
public:
    // Leaves
    static Expr free(std::string name);
    static Expr bound(std::uint32_t index);

    // Generic node.  `hints` names every variable the node binds; which
    // children see which of them is fixed per kind (see binder_slots).
    using Payload = ExprPayload;
    static Expr node(Kind k, std::vector<std::string> hints, std::vector<Expr> children,
                     Payload payload = {});

    Kind kind() const { return n_->kind; }
    Effect effect() const { return n_->payload.effect; }
    const Sort& sort() const { return *n_->payload.sort; }
    const std::string& name() const { return n_->name; }
    std::uint32_t index() const { return n_->index; }
    const std::vector<std::string>& hints() const { return n_->hints; }
    std::size_t arity() const { return n_->children.size(); }
    const Expr& child(std::size_t i) const { return n_->children[i]; }
    const std::vector<Expr>& children() const { return n_->children; }
    const Payload& payload() const { return n_->payload; }

    bool same_node(const Expr& o) const { return n_ == o.n_; }
    std::size_t hash() const { return n_->hash; }
    // 1 + the largest bound index escaping this node, 0 if locally closed.
    std::uint32_t loose() const { return n_->loose; }
    // Bloom filter over free names, for skipping untouched subtrees.
    std::uint64_t free_bloom() const { return n_->bloom; }
    // Kind of the first node below any leading Suc nodes (kind() if none).
    Kind suc_base() const { return n_->suc_base; }

private:
    struct Node {
        Kind kind;
        std::string name;
        std::uint32_t index = 0;
        std::vector<std::string> hints;
        std::vector<Expr> children;
        Payload payload;
        std::size_t hash = 0;
        std::uint32_t loose = 0;
        std::uint64_t bloom = 0;
        Kind suc_base = Kind::Var;
    };
    static Expr finish(Node n);
    explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

// Indices into hints() bound in child `i` of a node of kind `k`, outermost first.
std::span<const std::uint8_t> binder_slots(Kind k, std::size_t i);
// Number of hints a node of kind `k` carries.
std::size_t binder_count(Kind k);

// Replace the variables bound at the top of `body` (one per entry of
// `values`, outermost first) by `values`.  Values must be locally closed.
Expr instantiate(const Expr& body, std::span<const Expr> values);
// Inverse of instantiate with free variables: `names` become the bound
// variables at the top of `body`, outermost first.
Expr abstract(const Expr& body, std::span<const std::string> names);

// Child `i` of `e` with its binders replaced by free variables, named by
// `names` (one name per hint of `e`; only the ones bound in `i` are used).
Expr open_child(const Expr& e, std::size_t i, std::span<const std::string> names);
// Child `i` of `e` with its binders replaced by arbitrary terms (one per hint).
Expr instantiate_child(const Expr& e, std::size_t i, std::span<const Expr> values);

Expr substitute(const Expr& e, const std::string& x, const Expr& v);
NameSet free_names(const Expr& e);
bool occurs_free(const Expr& e, const std::string& x);
bool locally_closed(const Expr& e);

// Structural equality ignoring hints, i.e. alpha-equivalence.
bool alpha_equal(const Expr& a, const Expr& b);
// Hash compatible with alpha_equal.
std::size_t alpha_hash(const Expr& e);

// `base` primed until it is not in `avoid`.
std::string freshen(std::string base, const NameSet& avoid);

// Same node (kind, hints, payload) over new children.
Expr with_children(const Expr& e, std::vector<Expr> children);
Expr with_kind(const Expr& e, Kind k, std::vector<Expr> children);

}  // namespace teq
