#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle/dense_complex.hpp"

// Sanity checks for the dense reference implementation against values
// computed by hand. The ground field is the rationals throughout.

using oracle::dense_cyclic;
using oracle::dense_hochschild;

TEST_CASE("one dimensional algebra") {
    // For k itself the coboundary alternates between 0 and the identity,
    // so only degree 0 survives in Hochschild and the even degrees in cyclic.
    auto a = oracle::dense_split_pair();
    a.dim = 1;
    a.mult.assign(1, {{std::vector<oracle::Scalar>{1}}});
    a.unit = {1};
    CHECK(dense_hochschild(a, 4) == std::vector<long>{1, 0, 0, 0});
    CHECK(dense_cyclic(a, 4) == std::vector<long>{1, 0, 1, 0});
}

TEST_CASE("product of two fields") {
    // k x k is separable: higher Hochschild groups vanish, traces are 2-dim,
    // and cyclic cohomology is one copy of (1,0,1,0) per factor.
    const auto a = oracle::dense_split_pair();
    CHECK(dense_hochschild(a, 4) == std::vector<long>{2, 0, 0, 0});
    CHECK(dense_cyclic(a, 4) == std::vector<long>{2, 0, 2, 0});
}

TEST_CASE("group algebra of Z/2") {
    // Isomorphic to k x k over the rationals, same answers.
    const auto a = oracle::dense_group_algebra_z2();
    CHECK(dense_hochschild(a, 4) == std::vector<long>{2, 0, 0, 0});
    CHECK(dense_cyclic(a, 4) == std::vector<long>{2, 0, 2, 0});
}

TEST_CASE("dual numbers") {
    // k[x]/(x^2): the periodic two-term resolution gives Hochschild
    // dimensions 2,1,1,1,... and the Connes sequence forces HC^2 = 2.
    const auto a = oracle::dense_dual_numbers();
    CHECK(dense_hochschild(a, 4) == std::vector<long>{2, 1, 1, 1});

    const auto hc = dense_cyclic(a, 4);
    REQUIRE(hc.size() == 4);
    CHECK(hc[0] == 2);
    CHECK(hc[1] == 0);
    CHECK(hc[2] == 2);
}
