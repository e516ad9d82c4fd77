#pragma once

#include "cyclotrace/bimodule.hpp"
#include "cyclotrace/sayd.hpp"

namespace cyclo {

// The two realizations of a symmetric coefficient functor F : C^op -> Vec.
//   TypeA (representation backend): F(V) = invariant functionals on M (x) V.
//   TypeB (graded backend):         F(V) = grade-preserving maps V -> M.
// Both use the ambient coordinate (m, v) -> m * dim V + v, so F(f) is the
// restriction of kron(id_M, f^T) in either case.
enum class TraceKind { TypeA, TypeB };

struct Contratrace {
    TraceKind kind = TraceKind::TypeA;
    CatRef cat;
    SaydModule coeff;

    Index coeff_dim() const { return coeff.grading.total(); }
};

// Validates backend compatibility and the coefficient axioms.
Contratrace make_contratrace(TraceKind kind, CatRef cat, SaydModule coeff);

Index trace_ambient(const Contratrace& f, const Obj& v);

// F(V) as a canonical subspace of the ambient coordinate space.
Subspace trace_space(const Contratrace& f, const Obj& v);

// kron(id_m, g^T): pullback of functionals / precomposition of maps.
Matrix functional_pullback(Index m_dim, const Matrix& g);

// F(g) : F(W) -> F(V) for a morphism g : V -> W, in the given bases.
// Throws MathError if g is not a morphism or the pullback leaves F(V).
Matrix trace_map(const Contratrace& f, const Obj& v, const Obj& w, const Matrix& g,
                 const Subspace& fw, const Subspace& fv);

// Ambient matrix of the flip F(V (x) W) -> F(W (x) V).
//   TypeA: (tau c)(m (x) w (x) v) = c(m (x) v (x) x^-1 w) for m of degree x.
//   TypeB: (tau phi)(w (x) v) = y^-1 . phi(v (x) w) summed over the degree-y
//          components of v.
// Stability and crossing of the coefficient make this an involution.
Matrix trace_flip_ambient(const Contratrace& f, const Obj& v, const Obj& w);

// The flip restricted to the trace spaces.
Matrix trace_flip(const Contratrace& f, const Obj& v, const Obj& w, const Subspace& fvw,
                  const Subspace& fwv);

// F_A(S) for an A-bimodule S: the part of F(S) where the right A-action
// agrees with the flipped left action.  Same ambient as F(S).
Subspace lifted_space(const Contratrace& f, const BimoduleData& s);

// F_A(S (x)_A T) -> F_A(T (x)_A S) computed on representatives of the
// presented relative tensor products; exact well-definedness is checked
// and failure throws MathError.
Matrix lifted_flip(const Contratrace& f, const BimoduleData& s, const BimoduleData& t,
                   const RelTensor& st, const RelTensor& ts, const Subspace& f_st,
                   const Subspace& f_ts);

} // namespace cyclo
