#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teq/core/sort.hpp"
#include "teq/core/syntax.hpp"
#include "teq/eval/eval.hpp"

namespace teq::wproof {

enum class Rule : std::uint8_t {
    Assume,
    Alli,
    Alle,
    Impi,
    Impe,
    Andi,
    Ande1,
    Ande2,
    Truei,
    Contra,
    Ind,
    CompInd,
    Term0,
    TermS,
    TermAbs,
    TermRec,
    TermInv,
    NotTermAbort,
    OpSem,
    Subst,
};

// "Pv_Assume", ...
std::string_view rule_name(Rule r);

// Proof terms, one constructor per rule.  Witnesses the checker cannot
// recover from the goal are carried explicitly.
class Proof {
public:
    static Proof assume(std::size_t index);
    static Proof alli(std::string x, Sort a, Proof body);
    static Proof alle(Proof forall, Term witness);
    static Proof impi(Proof body);
    static Proof impe(Proof implication, Proof premise);
    static Proof andi(Proof left, Proof right);
    static Proof ande1(Proof conj);
    static Proof ande2(Proof conj);
    static Proof truei();
    static Proof contra(Proof zero_is_suc);
    // goal ∀x:nat. Terminates x => F
    static Proof ind(std::string x, Formula f, Proof base, std::string x1, Proof step);
    static Proof compind(std::string z, Formula f, std::string fn, std::string x, Term body,
                         Sort dom, Sort cod, Proof premise);
    static Proof term0();
    static Proof termS(Proof p);
    static Proof termabs();
    static Proof termrec();
    static Proof terminv(eval::EvalContext c, Proof p);
    static Proof nottermabort(Proof p);
    static Proof opsem(std::size_t fuel);
    static Proof subst(std::string x, Formula f, Proof eq, Proof body);

    Rule rule() const { return n_->rule; }
    // Assume index or OpSem fuel.
    std::size_t number() const { return n_->number; }
    // Bound names in order: Alli {x}; Ind {x, x'}; CompInd {z, f, x}; Subst {x}.
    const std::vector<std::string>& names() const { return n_->names; }
    const std::optional<Formula>& pattern() const { return n_->pattern; }
    const std::optional<Term>& term() const { return n_->term; }
    // Alli {A}; CompInd {A', A}.
    const std::vector<Sort>& sorts() const { return n_->sorts; }
    const std::optional<eval::EvalContext>& context() const { return n_->context; }
    const std::vector<Proof>& premises() const { return n_->premises; }

private:
    struct Node {
        explicit Node(Rule r, std::size_t k = 0) : rule(r), number(k) {}
        Rule rule;
        std::size_t number = 0;
        std::vector<std::string> names;
        std::optional<Formula> pattern;
        std::optional<Term> term;
        std::vector<Sort> sorts;
        std::optional<eval::EvalContext> context;
        std::vector<Proof> premises;
    };
    explicit Proof(Node n) : n_(std::make_shared<const Node>(std::move(n))) {}
    std::shared_ptr<const Node> n_;
};

}  // namespace teq::wproof
