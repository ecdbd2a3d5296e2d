#pragma once

#include "teq/core/syntax.hpp"

namespace teq {

// |a|: drops annotations and proofs.  conv, reflect and inv keep their first
// subterm; join, tm, contra and abort become the bare logical constants.
Term erase_term(const ATerm& a);
Type erase_type(const AType& s);

}  // namespace teq
