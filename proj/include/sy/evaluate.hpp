#pragma once

// Evaluating a parsed expression in the algebra its atoms belong to.

#include <optional>
#include <set>
#include <string>

#include "sy/expr.hpp"
#include "sy/grading.hpp"

namespace sy {

struct Evaluated {
    std::string algebra;   // "Y(01)", "U(gl)" or "U(gl[x])"
    Element value;         // normal-ordered
};

/// Generator families occurring in an expression.
std::set<Family> families_in(const Expr& expr);

/// e atoms go to U(gl), x atoms to U(gl[x]), everything else to Y(seq);
/// D, Dp, E, F need mu. Throws std::invalid_argument when the expression
/// mixes algebras, needs a missing mu or refers to degrees above cap.
Evaluated evaluate_expression(const Expr& expr, const ZeroOneSequence& seq, const std::optional<Composition>& mu,
                              int cap);

}  // namespace sy
