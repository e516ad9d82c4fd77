#pragma once

#include <gmpxx.h>

#include <vector>

// Brute-force reference for the cyclic complex of an algebra in plain
// vector spaces with one-dimensional trivial coefficients.  Everything is
// dense and index-by-index: dual bases of tuple spaces, textbook face and
// cyclic formulas, Gaussian elimination with first-nonzero pivots.  It
// shares no code with the engine on purpose.
namespace oracle {

using Scalar = mpq_class;

struct DenseAlgebra {
    long dim = 0;
    // structure constants: product of e_i and e_j has coefficient
    // mult[i][j][k] on e_k
    std::vector<std::vector<std::vector<Scalar>>> mult;
    std::vector<Scalar> unit;
};

DenseAlgebra dense_dual_numbers();
DenseAlgebra dense_group_algebra_z2();
DenseAlgebra dense_split_pair(); // k x k

// cohomology of the full dual complex, degrees 0..top-1
std::vector<long> dense_hochschild(const DenseAlgebra& a, long top);

// cohomology of the subcomplex fixed by the signed cyclic rotation
std::vector<long> dense_cyclic(const DenseAlgebra& a, long top);

} // namespace oracle
