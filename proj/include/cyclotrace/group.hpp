#pragma once

#include "cyclotrace/rational.hpp"

#include <string>
#include <vector>

namespace cyclo {

// Finite group given by its full multiplication table.
// table[g][h] = g * h, elements are 0..order-1, identity() is the unique
// two-sided unit, inverse(g) the unique right inverse.
class FinGroup {
public:
    // Validates the table (closure, identity, inverses, associativity)
    // and throws MathError naming the violated axiom and a witness.
    explicit FinGroup(std::vector<std::vector<Index>> table);

    Index order() const { return order_; }
    Index mul(Index g, Index h) const;
    Index identity() const { return identity_; }
    Index inverse(Index g) const;
    Index conjugate(Index h, Index g) const; // h g h^-1

    bool is_abelian() const;

    // Minimal-by-greed generating set: scan elements in index order and
    // keep those not generated by the ones already kept.  Deterministic.
    const std::vector<Index>& generators() const { return generators_; }

    bool operator==(const FinGroup& other) const { return table_ == other.table_; }

private:
    Index order_ = 0;
    Index identity_ = 0;
    std::vector<std::vector<Index>> table_;
    std::vector<Index> inverse_;
    std::vector<Index> generators_;

    void validate() const;
    void compute_identity_and_inverses();
    void compute_generators();
};

FinGroup cyclic_group(Index n);

// Group of all permutations of {0..n-1} via composition tables; elements
// are enumerated in lexicographic one-line order.  Intended for small n.
FinGroup symmetric_group(Index n);

} // namespace cyclo
