#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclotrace/errors.hpp"
#include "cyclotrace/suites.hpp"

using namespace cyclo;

namespace {
constexpr Index kBudget = 100000;
constexpr Index kTop = 4;

std::vector<Index> zeros(Index n) { return std::vector<Index>(static_cast<std::size_t>(n), 0); }
} // namespace

TEST_CASE("registry") {
    CHECK(suite_names().size() == 6);
    for (const auto& n : suite_names()) CHECK(is_suite_name(n));
    CHECK_FALSE(is_suite_name("nope"));
    CHECK_THROWS_AS(run_suite("nope", kTop, kBudget), ConfigError);
}

TEST_CASE("direct tower against the canonical pair tower") {
    const SuiteResult r = suite_old_vs_new(kTop, kBudget);
    REQUIRE(r.instances.size() == 3);
    CHECK(r.pass);
    CHECK(r.truncation == kTop);
    for (const auto& inst : r.instances) {
        INFO(inst.description);
        CHECK(inst.pass);
        CHECK(inst.left == inst.right);
    }
    CHECK(r.instances[0].left == std::vector<Index>{2, 0, 2, 0});
    // Schur vanishing: the whole theory is zero on both routes
    CHECK(r.instances[1].left == zeros(kTop));
    CHECK(r.instances[1].right == zeros(kTop));
    CHECK(r.instances[2].left == std::vector<Index>{2, 0, 2, 0});
}

TEST_CASE("resolution choice does not matter") {
    const SuiteResult r = suite_pair_independence(kTop, kBudget);
    REQUIRE(r.instances.size() == 4);
    CHECK(r.pass);
    for (const auto& inst : r.instances) {
        INFO(inst.description);
        CHECK(inst.pass);
    }
    CHECK(r.instances[0].left == std::vector<Index>{2, 0, 2, 0});
    CHECK(r.instances[2].left == std::vector<Index>{1, 0, 1, 0});
}

TEST_CASE("matrix amplification is invisible") {
    const SuiteResult r = suite_morita(kTop, kBudget);
    REQUIRE(r.instances.size() == 3);
    CHECK(r.pass);
    CHECK(r.instances[0].left == std::vector<Index>{1, 0, 1, 0});
    CHECK(r.instances[0].right == std::vector<Index>{1, 0, 1, 0});
    CHECK(r.instances[1].left == std::vector<Index>{2, 0, 2, 0});
    CHECK(r.instances[1].right == std::vector<Index>{2, 0, 2, 0});
}

TEST_CASE("equivariant theory matches the graded theory of the crossed product") {
    const SuiteResult r = suite_ab_duality(kTop, kBudget);
    REQUIRE(r.instances.size() == 4);
    CHECK(r.pass);
    for (const auto& inst : r.instances) {
        INFO(inst.description);
        CHECK(inst.pass);
    }
    // the sign-coefficient instance vanishes on both sides
    CHECK(r.instances[0].left == zeros(kTop));
    CHECK(r.instances[0].right == zeros(kTop));
    CHECK(r.instances[1].left == std::vector<Index>{1, 0, 1, 0});
    CHECK(r.instances[3].left == std::vector<Index>{2, 0, 2, 0});
}

TEST_CASE("coefficients that collapse to the plain theory") {
    const SuiteResult r = suite_fiber_examples(kTop, kBudget);
    REQUIRE(r.instances.size() == 3);
    CHECK(r.pass);
    for (const auto& inst : r.instances) {
        INFO(inst.description);
        CHECK(inst.pass);
    }
    CHECK(r.instances[0].left == std::vector<Index>{1, 0, 1, 0});
    CHECK(r.instances[1].left == std::vector<Index>{2, 0, 2, 0});
    // the crossed product here is a 2x2 matrix algebra, closing the loop
    // with the amplification suite
    CHECK(r.instances[2].left == std::vector<Index>{1, 0, 1, 0});
    CHECK(r.instances[2].right == std::vector<Index>{1, 0, 1, 0});
}

TEST_CASE("function algebras on free sets against the invariants count") {
    const SuiteResult r = suite_derham_finite(kTop, kBudget);
    REQUIRE(r.instances.size() == 4);
    CHECK(r.pass);
    for (const auto& inst : r.instances) {
        INFO(inst.description);
        CHECK(inst.pass);
    }
    CHECK(r.instances[0].right == std::vector<Index>{1, 0, 1, 0});
    CHECK(r.instances[1].right == std::vector<Index>{1, 0, 1, 0});
    CHECK(r.instances[2].right == std::vector<Index>{1, 0, 1, 0});
    CHECK(r.instances[3].right == std::vector<Index>{2, 0, 2, 0});
}

TEST_CASE("run_suites preserves order and reports per suite") {
    const std::vector<std::string> names = {"morita", "derham"};
    const auto results = run_suites(names, 3, kBudget);
    REQUIRE(results.size() == 2);
    CHECK(results[0].name == "morita");
    CHECK(results[1].name == "derham");
    CHECK(results[0].pass);
    CHECK(results[1].pass);
    CHECK(results[0].truncation == 3);
    for (const auto& inst : results[0].instances) CHECK(inst.left.size() == 3);
}
