#pragma once

#include "cyclotrace/algebra.hpp"

namespace cyclo {

// A-bimodule internal to the backend.
// left  : A (x) S -> S is dim_S x (dim_A * dim_S),
// right : S (x) A -> S is dim_S x (dim_S * dim_A).
struct BimoduleData {
    AlgebraData algebra;
    Obj obj;
    Matrix left;
    Matrix right;

    Index dim() const { return obj.dim; }
};

CheckReport check_bimodule(const BimoduleData& s);

// A over itself with the multiplication on both sides.
BimoduleData regular_bimodule(const AlgebraData& a);

// A (x) Q (x) A with the outer multiplications.  aug collapses the middle
// factor with eps_q and multiplies: a (x) x (x) a' -> eps_q(x) a a'.
// Rejects eps_q that is not a surjective morphism Q -> 1.
struct FreeBimodule {
    BimoduleData bim;
    Matrix aug;
};
FreeBimodule free_bimodule(const AlgebraData& a, const Obj& q, const Matrix& eps_q);

// S (x)_A T: cokernel of s.a (x) t - s (x) a.t with the induced outer
// actions, together with the presentation over the plain tensor square.
struct RelTensor {
    BimoduleData bim;
    QuotientPresentation pres;
};
RelTensor bimodule_tensor(const BimoduleData& s, const BimoduleData& t);

// P^{(x)_A k} presented flatly: the plain power P^{(x) k} modulo the sum of
// all adjacent junction relations p.a (x) q - p (x) a.q.  This presentation
// is independent of any bracketing of the iterated relative product.
struct RelativePower {
    Index k = 0;
    QuotientPresentation pres; // ambient = dim_P^k
    Obj obj;                   // quotient object
    Matrix left;               // A (x) -  on the first slot, quotient coords
    Matrix right;              // - (x) A on the last slot, quotient coords
};
RelativePower relative_power(const BimoduleData& p, Index k, Index budget);

} // namespace cyclo
