#pragma once

#include "cyclotrace/rep.hpp"
#include "cyclotrace/subspace.hpp"

namespace cyclo {

// The two hard-coded monoidal backends: rational representations of a
// finite group, and group-graded vector spaces.  Both are strictified by
// a fixed index convention: the tensor product of objects carries the
// row-major pair index (i, j) -> i * dim_second + j, so iterated products
// index by tuples and need no associators.
enum class CatKind { Rep, Graded };

struct CatRef {
    CatKind kind = CatKind::Rep;
    GroupPtr group;

    bool same_as(const CatRef& other) const {
        return kind == other.kind && (group == other.group || *group == *other.group);
    }
};

// Object of one of the two backends.
//  Rep kind:    rho[g] is the (invertible) action of g on the total space.
//  Graded kind: proj[g] is the idempotent projector onto the degree-g
//               component; the projectors sum to the identity.
// Atomic objects have contiguous components in element order; quotient and
// sub objects may carry non-diagonal projectors.
struct Obj {
    CatRef cat;
    Index dim = 0;
    std::vector<Matrix> rho;
    std::vector<Matrix> proj;

    const Matrix& rho_at(Index g) const { return rho[static_cast<std::size_t>(g)]; }
    const Matrix& proj_at(Index g) const { return proj[static_cast<std::size_t>(g)]; }
};

Obj unit_obj(const CatRef& cat);
Obj rep_obj(const CatRef& cat, const Rep& rep);
Obj graded_obj(const CatRef& cat, const GradedSpace& grading);

// Object with both structures given explicitly; validates them.
Obj make_obj(const CatRef& cat, Index dim, std::vector<Matrix> structure);

Obj tensor_obj(const Obj& v, const Obj& w);
Obj direct_sum_obj(const Obj& v, const Obj& w);
Obj tensor_power_obj(const Obj& v, Index k, Index budget);

// Quotient by an invariant subspace; throws MathError if the subspace is
// not invariant under the structure maps.
Obj quotient_obj(const Obj& v, const QuotientPresentation& pres);

bool is_morphism(const Obj& v, const Obj& w, const Matrix& f);

// Hom(V, W) as a subspace of matrix space, row-major (w_index, v_index).
// Rep kind: joint kernel of the commutation constraints over group
// generators.  Graded kind: grade-preserving maps.
Subspace hom_space(const Obj& v, const Obj& w);

// Rep kind only: 1/|G| sum of the conjugation operators on matrix space.
// Its image is Hom(V, W) again; used as an independent cross-check.
Matrix hom_averaging_projector(const Obj& v, const Obj& w);

// Component dimension of a graded object at degree g (trace of the
// projector; integral by idempotence).
Index graded_component_dim(const Obj& v, Index g);

} // namespace cyclo
