#pragma once

#include "cyclotrace/category.hpp"

#include <string>

namespace cyclo {

// Unital associative algebra internal to one of the backends.
// mult : A (x) A -> A is dim x dim^2 (columns indexed row-major by (i, j)),
// unit : 1 -> A is dim x 1.
struct AlgebraData {
    Obj obj;
    Matrix mult;
    Matrix unit;

    Index dim() const { return obj.dim; }
};

struct CheckReport {
    bool ok = true;
    std::string violation;
};

// Structural check: shapes, mult and unit are morphisms of the backend,
// associativity, two-sided unit law.  Reports the first violation with a
// witness (basis indices or group element).
CheckReport check_algebra(const AlgebraData& a);

AlgebraData unit_algebra(const CatRef& cat);

// Group algebra kG.  Graded backend: e_g in degree g.  Rep backend: the
// same multiplication with the trivial action (any algebra is equivariant
// for it); this is the reading used by the equivariant test instances.
AlgebraData group_algebra(const CatRef& cat);

// Functions on `copies` disjoint copies of the regular G-set, pointwise
// multiplication, translation action.  Rep backend (or trivial group).
AlgebraData function_algebra(const CatRef& cat, Index copies = 1);

// k[t]/(t^2) with trivial structure.
AlgebraData dual_numbers_algebra(const CatRef& cat);

// n x n matrices over A: basis (a, (p, q)) at index a * n^2 + p * n + q,
// matrix units in degree e with trivial action.
AlgebraData matrix_amplify(const AlgebraData& a, Index n);

// A |x G for A in Rep(G): basis (g, a) at index g * dim A + a, grading by
// the group leg, product (a (x) g)(b (x) h) = a (g.b) (x) gh.  Lands in the
// graded backend over the same group.
AlgebraData crossed_product(const AlgebraData& a);

// Validates via check_algebra and throws MathError on failure.
AlgebraData explicit_algebra(Obj obj, Matrix mult, Matrix unit);

// Dimension of the commutant {x : xy = yx for all y}; spot check for the
// matrix amplification.
Index center_dim(const AlgebraData& a);

} // namespace cyclo
