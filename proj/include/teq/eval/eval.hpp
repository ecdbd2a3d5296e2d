#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "teq/core/syntax.hpp"

namespace teq::eval {

inline constexpr std::size_t kDefaultFuel = 1000;

enum class FrameTag : std::uint8_t { Suc, AppL, AppR, Case };

// One layer of an evaluation context.  parts: AppL holds the argument, AppR
// the (value) function, Case the two branches, Suc nothing.
struct Frame {
    FrameTag tag;
    std::vector<Term> parts;
};

// C ::= [] | Suc C | C t | v C | case C t t
class EvalContext {
public:
    static EvalContext hole() { return EvalContext{}; }
    static EvalContext suc(EvalContext inner);
    static EvalContext app_l(EvalContext inner, Term arg);
    // Throws std::invalid_argument unless `fn` is a value.
    static EvalContext app_r(Term fn, EvalContext inner);
    static EvalContext case_of(EvalContext inner, Term if_zero, Term if_suc);

    bool is_hole() const { return frames_.empty(); }
    // Outermost first.
    const std::vector<Frame>& frames() const { return frames_; }

    Term plug(const Term& t) const;

    friend bool operator==(const EvalContext& a, const EvalContext& b);

private:
    EvalContext wrapped(Frame f) const;
    std::vector<Frame> frames_;
};

struct Decomposition {
    EvalContext context;
    Term redex;
};

struct Trace {
    std::vector<Term> terms;  // first is the input
    bool fuel_exhausted = false;

    std::size_t steps() const { return terms.size() - 1; }
    const Term& last() const { return terms.back(); }
};

bool is_value(const Term& t);
std::optional<Term> beta(const Term& t);
std::optional<Decomposition> decompose(const Term& t);
Term plug(const EvalContext& c, const Term& t);
std::optional<Term> step(const Term& t);
Trace reduce_trace(const Term& t, std::size_t fuel);
// The traces of t1 and t2 of at most `fuel` steps share a term up to alpha.
bool joinable(const Term& t1, const Term& t2, std::size_t fuel);

// First C (in a fixed search order: hole, then Suc, AppL, AppR when the left
// side is a value, case scrutinee) with big = C[sub].
std::optional<EvalContext> find_eval_position(const Term& big, const Term& sub);

}  // namespace teq::eval
