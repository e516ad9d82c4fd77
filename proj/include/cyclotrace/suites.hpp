#pragma once

#include "cyclotrace/cyclic.hpp"

#include <string>
#include <vector>

namespace cyclo {

// One comparison: two dimension vectors computed along independent routes.
struct SuiteInstance {
    std::string description;
    std::vector<Index> left;
    std::vector<Index> right;
    bool pass = false;
};

struct SuiteResult {
    std::string name;
    Index truncation = 0;
    std::vector<SuiteInstance> instances;
    bool pass = true;
};

// Each suite instantiates one invariance statement as dimension equalities
// in degrees 0..top-1.  The two sides of every instance are built and
// reduced separately; no intermediate complex is shared.

// direct tower from the algebra vs the tower of the canonical pair
SuiteResult suite_old_vs_new(Index top, Index budget);

// canonical pair vs free pairs on larger generators, new pipeline both sides
SuiteResult suite_pair_independence(Index top, Index budget);

// algebras vs their matrix amplifications
SuiteResult suite_morita(Index top, Index budget);

// equivariant theory of A vs graded theory of the crossed product, with
// dualized coefficients
SuiteResult suite_ab_duality(Index top, Index budget);

// coefficient modules that reduce the theory to ordinary cyclic cohomology
// of the algebra, respectively of its crossed product
SuiteResult suite_fiber_examples(Index top, Index budget);

// function algebras on free finite G-sets against the invariants count:
// dim (M (x) O_Y)^G in even degrees, 0 in odd degrees
SuiteResult suite_derham_finite(Index top, Index budget);

// fixed registry, in report order
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// ConfigError on unknown name
SuiteResult run_suite(const std::string& name, Index top, Index budget);
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, Index top,
                                    Index budget);

} // namespace cyclo
