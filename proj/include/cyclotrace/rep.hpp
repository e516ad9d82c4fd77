#pragma once

#include "cyclotrace/group.hpp"
#include "cyclotrace/matrix.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace cyclo {

using GroupPtr = std::shared_ptr<const FinGroup>;

// Rational representation of a finite group: one matrix per element.
// make_rep checks rho(e) = id and rho(g)rho(h) = rho(gh) exactly.
struct Rep {
    GroupPtr group;
    Index dim = 0;
    std::vector<Matrix> matrices;

    const Matrix& at(Index g) const { return matrices[static_cast<std::size_t>(g)]; }
};

Rep make_rep(GroupPtr group, std::vector<Matrix> matrices);
Rep trivial_rep(GroupPtr group, Index dim = 1);

// Left regular representation: rho(g) e_h = e_{gh}.
Rep regular_rep(GroupPtr group);

// One-dimensional representation from character values; rejects
// non-multiplicative value lists.
Rep character_rep(GroupPtr group, const std::vector<Rational>& values);

Rep tensor_rep(const Rep& a, const Rep& b);
Rep dual_rep(const Rep& a);
Rep direct_sum_rep(const Rep& a, const Rep& b);

// Dimension vector indexed by group elements, with the components laid out
// contiguously in element order.
struct GradedSpace {
    std::vector<Index> dims;

    Index total() const;
    Index offset(Index g) const;
    Index component(Index g) const { return dims[static_cast<std::size_t>(g)]; }
    // degree of a total-space basis index
    Index degree_of(Index i) const;
};

// G-graded space with a G-action on the total space.  The compatible case
// (action(h) maps the component at g into the component at h g h^-1) is the
// center of the graded category; validation lives with the coefficient
// checkers so that invalid data can still be examined and reported.
struct EquivariantGraded {
    GroupPtr group;
    GradedSpace grading;
    std::vector<Matrix> action;

    Index total() const { return grading.total(); }
};

// First (h, g) for which action(h) fails to map the g-component into the
// (h g h^-1)-component, if any.
std::optional<std::pair<Index, Index>> equivariance_violation(const EquivariantGraded& m);

} // namespace cyclo
