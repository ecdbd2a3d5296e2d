#include "teq/wproof/proof.hpp"

namespace teq::wproof {

std::string_view rule_name(Rule r) {
    switch (r) {
    case Rule::Assume: return "Pv_Assume";
    case Rule::Alli: return "Pv_Alli";
    case Rule::Alle: return "Pv_Alle";
    case Rule::Impi: return "Pv_Impi";
    case Rule::Impe: return "Pv_Impe";
    case Rule::Andi: return "Pv_Andi";
    case Rule::Ande1: return "Pv_Ande1";
    case Rule::Ande2: return "Pv_Ande2";
    case Rule::Truei: return "Pv_Truei";
    case Rule::Contra: return "Pv_Contra";
    case Rule::Ind: return "Pv_Ind";
    case Rule::CompInd: return "Pv_CompInd";
    case Rule::Term0: return "Pv_Term0";
    case Rule::TermS: return "Pv_TermS";
    case Rule::TermAbs: return "Pv_TermAbs";
    case Rule::TermRec: return "Pv_TermRec";
    case Rule::TermInv: return "Pv_TermInv";
    case Rule::NotTermAbort: return "Pv_NotTermAbort";
    case Rule::OpSem: return "Pv_OpSem";
    case Rule::Subst: return "Pv_Subst";
    }
    return "Pv_?";
}

Proof Proof::assume(std::size_t i) { return Proof(Node(Rule::Assume, i)); }

Proof Proof::alli(std::string x, Sort a, Proof body) {
    Node n{Rule::Alli};
    n.names = {std::move(x)};
    n.sorts = {std::move(a)};
    n.premises = {std::move(body)};
    return Proof(std::move(n));
}

Proof Proof::alle(Proof p, Term t) {
    Node n{Rule::Alle};
    n.term = std::move(t);
    n.premises = {std::move(p)};
    return Proof(std::move(n));
}

Proof Proof::impi(Proof p) {
    Node n{Rule::Impi};
    n.premises = {std::move(p)};
    return Proof(std::move(n));
}

Proof Proof::impe(Proof p, Proof q) {
    Node n{Rule::Impe};
    n.premises = {std::move(p), std::move(q)};
    return Proof(std::move(n));
}

Proof Proof::andi(Proof p, Proof q) {
    Node n{Rule::Andi};
    n.premises = {std::move(p), std::move(q)};
    return Proof(std::move(n));
}

Proof Proof::ande1(Proof p) {
    Node n{Rule::Ande1};
    n.premises = {std::move(p)};
    return Proof(std::move(n));
}

Proof Proof::ande2(Proof p) {
    Node n{Rule::Ande2};
    n.premises = {std::move(p)};
    return Proof(std::move(n));
}

Proof Proof::truei() { return Proof(Node(Rule::Truei)); }

Proof Proof::contra(Proof p) {
    Node n{Rule::Contra};
    n.premises = {std::move(p)};
    return Proof(std::move(n));
}

Proof Proof::ind(std::string x, Formula f, Proof base, std::string x1, Proof step) {
    Node n{Rule::Ind};
    n.names = {std::move(x), std::move(x1)};
    n.pattern = std::move(f);
    n.premises = {std::move(base), std::move(step)};
    return Proof(std::move(n));
}

Proof Proof::compind(std::string z, Formula f, std::string fn, std::string x, Term body,
                     Sort dom, Sort cod, Proof premise) {
    Node n{Rule::CompInd};
    n.names = {std::move(z), std::move(fn), std::move(x)};
    n.pattern = std::move(f);
    n.term = std::move(body);
    n.sorts = {std::move(dom), std::move(cod)};
    n.premises = {std::move(premise)};
    return Proof(std::move(n));
}

Proof Proof::term0() { return Proof(Node(Rule::Term0)); }

Proof Proof::termS(Proof p) {
    Node n{Rule::TermS};
    n.premises = {std::move(p)};
    return Proof(std::move(n));
}

Proof Proof::termabs() { return Proof(Node(Rule::TermAbs)); }
Proof Proof::termrec() { return Proof(Node(Rule::TermRec)); }

Proof Proof::terminv(eval::EvalContext c, Proof p) {
    Node n{Rule::TermInv};
    n.context = std::move(c);
    n.premises = {std::move(p)};
    return Proof(std::move(n));
}

Proof Proof::nottermabort(Proof p) {
    Node n{Rule::NotTermAbort};
    n.premises = {std::move(p)};
    return Proof(std::move(n));
}

Proof Proof::opsem(std::size_t fuel) { return Proof(Node(Rule::OpSem, fuel)); }

Proof Proof::subst(std::string x, Formula f, Proof eq, Proof body) {
    Node n{Rule::Subst};
    n.names = {std::move(x)};
    n.pattern = std::move(f);
    n.premises = {std::move(eq), std::move(body)};
    return Proof(std::move(n));
}

}  // namespace teq::wproof
