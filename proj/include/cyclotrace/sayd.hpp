#pragma once

#include "cyclotrace/rep.hpp"

#include <string>
#include <vector>

namespace cyclo {

// Coefficient datum: a G-graded G-space.  The checker certifies the two
// extra axioms on top of the grading/action compatibility:
//   crossing: action(h) carries the degree-g component to degree h g h^-1,
//   stability: g acts as the identity on its own degree-g component.
using SaydModule = EquivariantGraded;

struct SaydReport {
    enum class Kind { Ok, BadShape, NotAction, Crossing, Stability };
    Kind kind = Kind::Ok;
    Index h = -1; // acting element of a crossing witness
    Index g = -1; // degree of the violated component
    std::string detail;

    bool ok() const { return kind == Kind::Ok; }
    std::string message() const;
};

SaydReport check_sayd(const SaydModule& m);

// Throws ConfigError carrying the report message if the checker fails.
void require_sayd(const SaydModule& m, const std::string& what);

// V placed in degree e with its own action.
SaydModule sayd_from_rep(const Rep& v);

// Basis e_g in degree g, action by conjugation e_g -> e_{h g h^-1}.
SaydModule sayd_adjoint(GroupPtr group);

// All of kG in degree e with the left regular action.
SaydModule sayd_regular_at_identity(GroupPtr group);

// One-dimensional module in degree x with action by the character chi.
// Requires x central and chi(x) = 1; the latter is exactly stability, and
// the rejection message says so.
SaydModule sayd_from_modular_pair(GroupPtr group, const std::vector<Rational>& chi, Index x);

// Degreewise dual: the new degree-g component is the dual of the old
// degree-(g^-1) component, with the inverse-transpose action.  Involutive
// on the nose.
SaydModule sayd_dual(const SaydModule& m);

// The underlying action with the grading forgotten, as a representation.
Rep total_action_rep(const SaydModule& m);

} // namespace cyclo
