#pragma once

#include "cyclotrace/contratrace.hpp"

namespace cyclo {

// Materialized tower of trace spaces with cofaces, cyclic operators and
// (for the direct construction) codegeneracies.  Levels 0..top.
// cofaces[n][i] : C^n -> C^{n+1} for i = 0..n+1,
// codegeneracies[n][j] : C^{n+1} -> C^n for j = 0..n,
// cyclic[n] : C^n -> C^n with tau_n^{n+1} = id.
// All maps are written in the canonical bases of the trace spaces.
struct PrecocyclicObject {
    Index top = 0;
    std::vector<Subspace> spaces;
    std::vector<std::vector<Matrix>> cofaces;
    std::vector<std::vector<Matrix>> codegeneracies;
    std::vector<Matrix> cyclic;
    bool has_codegeneracies = false;

    std::vector<Index> level_dims() const;
};

struct CheckOutcome {
    bool ok = true;
    std::string detail;
};

// Exact verification of every defining relation available at the
// materialized degrees; reports the first violation by name and indices.
CheckOutcome check_precocyclic(const PrecocyclicObject& c);

// Tower F(A^{(x) n+1}) with cofaces from multiplication, codegeneracies
// from unit insertion, cyclic operator from the flip, and the last coface
// defined as tau_{n+1} after the zeroth.
PrecocyclicObject build_algebra_cocyclic(const Contratrace& f, const AlgebraData& a, Index top,
                                         Index budget);

// Resolution datum: a bimodule P with an augmentation P -> A that is
// surjective with P (x)_A P -> P -> A -> 0 exact.  Projectivity of P is
// certified by provenance: both constructors below only produce free
// bimodules.
struct AdmissiblePair {
    BimoduleData p;
    Matrix aug;
    std::string provenance;
};

AdmissiblePair canonical_pair(const AlgebraData& a); // P = A (x) A, aug = mult
AdmissiblePair free_pair(const AlgebraData& a, const Obj& q, const Matrix& eps_q,
                         const std::string& label);

// Throws MathError naming the failed condition.
void verify_admissible(const AdmissiblePair& pair, Index budget);

// Tower F_A(P^{(x)_A n+1}) with cofaces inserting the augmentation at each
// slot (no flipover; the i = n+1 coface is genuine) and the cyclic operator
// transported through the flat presentations.
PrecocyclicObject build_pair_precocyclic(const Contratrace& f, const AdmissiblePair& pair,
                                         Index top, Index budget);

// Cohomology of the total alternating-sum differential; degrees 0..top-1.
std::vector<Index> hochschild_dims(const PrecocyclicObject& c);

// Cohomology of the subcomplex of lambda-invariant cochains,
// lambda_n = (-1)^n tau_n; degrees 0..top-1.  In characteristic zero this
// is the cyclic cohomology of the tower.
std::vector<Index> cyclic_dims(const PrecocyclicObject& c);

// Tensor-power homotopy data: two augmented bimodules over one algebra,
// two compatible maps f, g : P -> Q and a primitive h : P -> Q (x)_A Q
// (in the junction-quotient coordinates) with (d (x) id - id (x) d) h = g - f.
struct HomotopyData {
    BimoduleData p;
    BimoduleData q;
    Matrix d_p;
    Matrix d_q;
    Matrix f;
    Matrix g;
    Matrix h;
};

// Verifies the preconditions (reporting the first failure) and then the
// identity d H + H d = g^{(x) n+1} - f^{(x) n+1} exactly for n = 0..top.
CheckOutcome homotopy_check(const HomotopyData& data, Index top, Index budget);

} // namespace cyclo
