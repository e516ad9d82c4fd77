#pragma once

#include "cyclotrace/matrix.hpp"

#include <vector>

namespace cyclo {

// Row echelon data for a matrix: unique reduced row echelon form, pivot
// columns in ascending order, zero rows dropped.
struct Echelon {
    Matrix reduced;
    std::vector<Index> pivot_cols;
    Index rank = 0;
};

// Gauss-Jordan over the rationals.  Pivot selection: columns are processed
// left to right (required for uniqueness of the reduced form); within a
// column the candidate row with the fewest nonzeros wins (Markowitz-style
// min-fill heuristic), ties broken by smallest row index.
Echelon row_reduce(const Matrix& m);

// Subspace of Q^ambient in canonical form: `basis` is ambient x dim in
// reduced column echelon form (each column's first nonzero entry is a 1,
// pivot rows strictly increase left to right, and every pivot row is zero
// in all other columns).  Two bases of the same subspace canonicalize to
// the identical Matrix, so == is exact subspace equality.
struct Subspace {
    Index ambient = 0;
    Matrix basis;

    Index dim() const { return basis.cols(); }
    bool operator==(const Subspace& other) const = default;
};

// Canonicalize an arbitrary spanning set (columns of `span`).
Subspace canonical_span(Index ambient, const Matrix& span);

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

Subspace full_space(Index ambient);
Subspace zero_space(Index ambient);

std::vector<Index> pivot_rows(const Subspace& s);

// Coordinates of the given column vectors in the subspace basis, i.e. the
// unique X with basis * X = vectors.  Throws MathError if some column is
// not contained in the subspace.
Matrix coords_in(const Subspace& s, const Matrix& vectors);

bool subspace_contains(const Subspace& s, const Matrix& vectors);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// Presentation of Q^ambient / sub.  projection * section = id on the
// quotient, projection kills exactly `sub`, and section picks the
// representative supported on the non-pivot coordinates of `sub`.
struct QuotientPresentation {
    Index ambient = 0;
    Subspace sub;
    Matrix projection; // dim(quotient) x ambient
    Matrix section;    // ambient x dim(quotient)

    Index dim() const { return projection.rows(); }
};

QuotientPresentation quotient(Index ambient, const Subspace& sub);

// dim ker(d_out) - dim im(d_in) for a composable pair with d_out * d_in = 0;
// throws MathError("not a complex: ...") otherwise.
Index cohomology_at(const Matrix& d_in, const Matrix& d_out);

} // namespace cyclo
