#pragma once

#include <string>

#include "teq/core/sort.hpp"
#include "teq/core/syntax.hpp"
#include "teq/eval/eval.hpp"
#include "teq/wprime/formula.hpp"
#include "teq/wproof/proof.hpp"

namespace teq::frontend {

// Concrete syntax accepted by the parser; parse(print(v)) is alpha-equal to v.
// Bound variables print under their binder hints, primed where a hint
// would capture or shadow.
std::string print(const ATerm& a);
std::string print(const AType& s);
std::string print(const Term& t);
std::string print(const Type& t);
std::string print(const Formula& f);
std::string print(const Sort& s);
std::string print(const eval::EvalContext& c);
std::string print(const wproof::Proof& p);
// Multi-line `sigma: / hyps: / goal:` header; empty parts are omitted.
std::string print(const wprime::Sequent& s);

// Any node, whatever its category.
std::string print_expr(const Expr& e);

}  // namespace teq::frontend
