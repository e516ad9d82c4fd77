#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclotrace/config.hpp"
#include "cyclotrace/errors.hpp"

using namespace cyclo;
using doctest::Contains;

namespace {

const char* kMinimal = R"({
  "schema": 1,
  "group": {"cyclic": 1},
  "category": "rep",
  "trace": "A",
  "algebra": {"named": "unit"},
  "coefficient": {"named": "rep_at_identity", "rep": "trivial"},
  "max_degree": 3
})";

std::string patched(const std::string& needle, const std::string& with) {
    std::string s = kMinimal;
    const auto pos = s.find(needle);
    REQUIRE(pos != std::string::npos);
    return s.replace(pos, needle.size(), with);
}

} // namespace

TEST_CASE("minimal config parses and computes") {
    const ComputationConfig cfg = parse_config(kMinimal);
    CHECK(cfg.max_degree == 3);
    CHECK(cfg.budget == 100000);
    CHECK(cfg.pipeline == Pipeline::All);
    CHECK(cfg.algebra.dim() == 1);

    const Report rep = cmd_compute(cfg);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.pass);
    CHECK(rep.rows[0].pipeline == "direct");
    CHECK(rep.rows[1].pipeline == "resolution");
    CHECK(rep.rows[0].cyclic == std::vector<Index>{1, 0, 1});
    CHECK(rep.rows[1].cyclic == std::vector<Index>{1, 0, 1});
    CHECK(rep.rows[0].hochschild == std::vector<Index>{1, 0, 0});
    CHECK(rep.rows[0].relations_ok);
    CHECK(rep.rows[1].relations_ok);
}

TEST_CASE("schema violations carry the offending path") {
    CHECK_THROWS_WITH_AS(parse_config("{nope"), Contains("not valid JSON"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"schema": 2})"), Contains("$.schema"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(patched("\"schema\": 1", "\"schema\": 1, \"zap\": 0")),
                         Contains("unknown field 'zap'"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(patched("\"category\": \"rep\"", "\"category\": \"set\"")),
                         Contains("$.category"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(patched("\"trace\": \"A\"", "\"trace\": \"C\"")),
                         Contains("$.trace"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(patched("{\"named\": \"unit\"}", "{\"named\": \"frobenius\"}")),
        Contains("unknown algebra"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(patched("\"max_degree\": 3", "\"max_degree\": 0")),
                         Contains("$.max_degree"), ConfigError);
}

TEST_CASE("group tables are validated at the config boundary") {
    const std::string bad = patched("{\"cyclic\": 1}", "{\"table\": [[0, 1], [1, 1]]}");
    CHECK_THROWS_WITH_AS(parse_config(bad), Contains("$.group.table"), ConfigError);
    const std::string good = patched("{\"cyclic\": 1}", "{\"table\": [[0, 1], [1, 0]]}");
    CHECK(parse_config(good).group->order() == 2);
}

TEST_CASE("coefficient axioms are enforced with witnesses") {
    // modular pair whose character does not fix the chosen degree
    const char* mpi = R"({
      "schema": 1,
      "group": {"cyclic": 4},
      "category": "rep",
      "trace": "A",
      "algebra": {"named": "unit"},
      "coefficient": {"named": "modular_pair", "character": [1, -1, 1, -1], "degree": 1}
    })";
    CHECK_THROWS_WITH_AS(parse_config(mpi), Contains("stability"), ConfigError);

    // explicit module: the generator acts by -1 on its own degree component
    const char* unstable = R"({
      "schema": 1,
      "group": {"cyclic": 2},
      "category": "graded",
      "trace": "B",
      "algebra": {"named": "group_algebra"},
      "coefficient": {"explicit": {"grading": [0, 1], "action": [[[1]], [[-1]]]}}
    })";
    CHECK_THROWS_WITH_AS(parse_config(unstable), Contains("stability"), ConfigError);

    // same shape with the identity action is fine
    const char* stable = R"({
      "schema": 1,
      "group": {"cyclic": 2},
      "category": "graded",
      "trace": "B",
      "algebra": {"named": "group_algebra"},
      "coefficient": {"explicit": {"grading": [0, 1], "action": [[[1]], [[1]]]}}
    })";
    CHECK(parse_config(stable).coefficient.grading.component(1) == 1);
}

TEST_CASE("explicit algebras are validated at the config boundary") {
    const char* good = R"({
      "schema": 1,
      "group": {"cyclic": 1},
      "category": "graded",
      "trace": "B",
      "algebra": {"explicit": {
        "mult": [[1, 0, 0, 1], [0, 1, 1, 0]],
        "unit": [1, 0]
      }},
      "coefficient": {"named": "rep_at_identity", "rep": "trivial"},
      "max_degree": 3
    })";
    const ComputationConfig cfg = parse_config(good);
    CHECK(cfg.algebra.dim() == 2);
    const Report rep = cmd_compute(cfg);
    CHECK(rep.pass);
    CHECK(rep.rows[0].cyclic == std::vector<Index>{2, 0, 2});

    // s*e comes back as e: the right unit law fails
    const char* broken = R"({
      "schema": 1,
      "group": {"cyclic": 1},
      "category": "graded",
      "trace": "B",
      "algebra": {"explicit": {
        "mult": [[1, 0, 1, 1], [0, 1, 0, 0]],
        "unit": [1, 0]
      }},
      "coefficient": {"named": "rep_at_identity", "rep": "trivial"}
    })";
    CHECK_THROWS_WITH_AS(parse_config(broken), Contains("$.algebra.explicit"), ConfigError);
}

TEST_CASE("budget refusal happens before any tower is built") {
    const char* kz2 = R"({
      "schema": 1,
      "group": {"cyclic": 2},
      "category": "graded",
      "trace": "B",
      "algebra": {"named": "group_algebra"},
      "coefficient": {"named": "adjoint"},
      "max_degree": 4,
      "budget": 50
    })";
    CHECK_THROWS_WITH_AS(parse_config(kz2), Contains("budget"), ConfigError);
    const char* eps = R"({
      "schema": 1,
      "group": {"cyclic": 1},
      "category": "rep",
      "trace": "A",
      "algebra": {"named": "dual_numbers"},
      "coefficient": {"named": "rep_at_identity", "rep": "trivial"},
      "max_degree": 3,
      "budget": 4
    })";
    CHECK_THROWS_WITH_AS(parse_config(eps), Contains("budget"), ConfigError);
}

TEST_CASE("pipeline selection controls the rows") {
    const ComputationConfig direct_only =
        parse_config(patched("\"max_degree\": 3", "\"max_degree\": 3, \"pipeline\": \"old\""));
    const Report r1 = cmd_compute(direct_only);
    REQUIRE(r1.rows.size() == 1);
    CHECK(r1.rows[0].pipeline == "direct");

    const ComputationConfig res_only =
        parse_config(patched("\"max_degree\": 3", "\"max_degree\": 3, \"pipeline\": \"new\""));
    const Report r2 = cmd_compute(res_only);
    REQUIRE(r2.rows.size() == 1);
    CHECK(r2.rows[0].pipeline == "resolution");
    CHECK(r2.rows[0].provenance == "tower of the canonical pair");

    CHECK_THROWS_WITH_AS(
        parse_config(patched("\"max_degree\": 3", "\"max_degree\": 3, \"pipeline\": \"both\"")),
        Contains("$.pipeline"), ConfigError);
}

TEST_CASE("crossed products require the graded backend") {
    const char* wrong = R"({
      "schema": 1,
      "group": {"cyclic": 2},
      "category": "rep",
      "trace": "A",
      "algebra": {"named": "crossed", "inner": {"named": "unit"}},
      "coefficient": {"named": "rep_at_identity", "rep": "trivial"}
    })";
    CHECK_THROWS_WITH_AS(parse_config(wrong), Contains("graded"), ConfigError);

    const char* right = R"({
      "schema": 1,
      "group": {"cyclic": 2},
      "category": "graded",
      "trace": "B",
      "algebra": {"named": "crossed", "inner": {"named": "function_algebra"}},
      "coefficient": {"named": "adjoint"},
      "max_degree": 3,
      "pipeline": "old"
    })";
    const ComputationConfig cfg = parse_config(right);
    CHECK(cfg.algebra.dim() == 4);
    const Report rep = cmd_compute(cfg);
    CHECK(rep.pass);
    // crossed product of functions on the free orbit is a matrix algebra
    CHECK(rep.rows[0].cyclic == std::vector<Index>{1, 0, 1});
}

TEST_CASE("reports round trip through the machine form") {
    const Report computed = cmd_compute(parse_config(kMinimal));
    const Report back = parse_report(render_json(computed));
    CHECK(same_numbers(computed, back));

    const Report verified = cmd_verify({"morita"}, 3, 100000);
    CHECK(verified.pass);
    REQUIRE(verified.suites.size() == 1);
    CHECK(verified.suites[0].instances.size() == 3);
    const Report vback = parse_report(render_json(verified));
    CHECK(same_numbers(verified, vback));

    // timing differences must not affect number equality
    Report jitter = computed;
    jitter.wall_seconds = computed.wall_seconds + 1;
    CHECK(same_numbers(computed, jitter));

    // but any dimension difference must
    Report tweaked = computed;
    tweaked.rows[0].cyclic[0] += 1;
    CHECK_FALSE(same_numbers(computed, tweaked));
}

TEST_CASE("identical configs give identical reports") {
    const Report a = cmd_compute(parse_config(kMinimal));
    const Report b = cmd_compute(parse_config(kMinimal));
    CHECK(same_numbers(a, b));
    CHECK(render_text(a).find("pipelines agree: yes") != std::string::npos);
    CHECK(render_text(a).find("result: pass") != std::string::npos);
}

TEST_CASE("verify rejects unknown suite names") {
    CHECK_THROWS_WITH_AS(cmd_verify({"morita", "nope"}, 3, 100000), Contains("unknown suite"),
                         ConfigError);
}

TEST_CASE("explain prints the instantiated maps for small instances") {
    const std::string text = explain_text(parse_config(kMinimal));
    CHECK(text.find("dim C^0 = 1") != std::string::npos);
    CHECK(text.find("delta_0") != std::string::npos);
    CHECK(text.find("sigma_0") != std::string::npos);
    CHECK(text.find("tau_1") != std::string::npos);

    // 4-dimensional algebra at degree 3 needs 4^4 = 256 ambient: over the cap
    const char* big = R"({
      "schema": 1,
      "group": {"cyclic": 2},
      "category": "graded",
      "trace": "B",
      "algebra": {"named": "crossed", "inner": {"named": "function_algebra"}},
      "coefficient": {"named": "rep_at_identity", "rep": "trivial"},
      "max_degree": 3
    })";
    CHECK_THROWS_WITH_AS(explain_text(parse_config(big)), Contains("64"), ConfigError);
}
