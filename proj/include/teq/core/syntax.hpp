#pragma once

// Typed views over Expr for the five syntactic categories, with smart
// constructors.  Constructors taking a binder name close the given body over
// that name, so `term::lam("x", term::var("x"))` is the identity.

#include <stdexcept>
#include <string>
#include <vector>

#include "teq/core/expr.hpp"

namespace teq {

enum class Category : std::uint8_t { Term, Type, ATerm, AType, Formula };

// Whether a node of kind `k` may head a value of category `c`.
bool admits(Category c, Kind k);

template <Category C>
class Syntax {
public:
    explicit Syntax(Expr e) : e_(std::move(e)) {
        if (!admits(C, e_.kind())) throw std::invalid_argument("node kind outside its category");
    }

    const Expr& expr() const { return e_; }
    Kind kind() const { return e_.kind(); }

    // Alpha-equivalence.
    friend bool operator==(const Syntax& a, const Syntax& b) { return alpha_equal(a.e_, b.e_); }

private:
    Expr e_;
};

using Term = Syntax<Category::Term>;
using Type = Syntax<Category::Type>;
using ATerm = Syntax<Category::ATerm>;
using AType = Syntax<Category::AType>;
using Formula = Syntax<Category::Formula>;

template <Category C>
bool alpha_eq(const Syntax<C>& a, const Syntax<C>& b) {
    return alpha_equal(a.expr(), b.expr());
}

template <Category C>
NameSet free_vars(const Syntax<C>& s) {
    return free_names(s.expr());
}

Term subst_term(const Term& body, const std::string& x, const Term& v);
Type subst_type(const Type& body, const std::string& x, const Term& v);
ATerm subst_aterm(const ATerm& body, const std::string& x, const ATerm& v);
AType subst_atype(const AType& body, const std::string& x, const ATerm& v);

// True when no annotated constructor (and no formula node) occurs anywhere.
bool is_unannotated(const Expr& e);

namespace term {
Term var(std::string x);
Term app(Term f, Term a);
Term apps(Term f, std::vector<Term> args);
Term lam(std::string x, Term body);
Term zero();
Term suc(Term t);
Term numeral(unsigned n);
Term rec(std::string f, std::string x, Term body);
Term cases(Term scrutinee, Term if_zero, Term if_suc);
Term join();
Term terminates();
Term contra();
Term abort();
}  // namespace term

namespace type {
Type nat();
Type pi(Effect e, std::string x, Type dom, Type cod);
Type eq(Term lhs, Term rhs);
Type terminates(Term t);
}  // namespace type

namespace aterm {
ATerm var(std::string x);
ATerm app(ATerm f, ATerm a);
ATerm apps(ATerm f, std::vector<ATerm> args);
ATerm lam(Effect e, std::string x, AType dom, ATerm body);
ATerm zero();
ATerm suc(ATerm a);
ATerm recnat(std::string f, std::string x, std::string p, AType cod, ATerm body);
ATerm rec(std::string f, std::string x, AType dom, AType cod, ATerm body);
ATerm cases(std::string x, AType motive, ATerm scrutinee, ATerm if_zero, ATerm if_suc);
ATerm join(ATerm lhs, ATerm rhs);
ATerm conv(std::string x, AType motive, ATerm subject, ATerm proof);
ATerm reflect(ATerm subject, ATerm proof);
ATerm tm(ATerm subject);
ATerm inv(ATerm proof, ATerm subterm);
ATerm contra(AType type, ATerm proof);
ATerm abort(AType type);
}  // namespace aterm

namespace atype {
AType nat();
AType pi(Effect e, std::string x, AType dom, AType cod);
AType eq(ATerm lhs, ATerm rhs);
AType terminates(ATerm a);
}  // namespace atype

}  // namespace teq
