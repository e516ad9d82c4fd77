#pragma once

#include "cyclotrace/contratrace.hpp"
#include "cyclotrace/suites.hpp"

#include <string>
#include <vector>

namespace cyclo {

enum class Pipeline { Direct, Resolution, All };

// A fully validated computation request.  Everything referenced by the
// config text has been constructed and structurally checked by the time
// parse_config returns.
struct ComputationConfig {
    GroupPtr group;
    CatRef cat;
    TraceKind kind = TraceKind::TypeA;
    AlgebraData algebra;
    SaydModule coefficient;
    Index max_degree = 4;
    Index budget = 100000;
    Pipeline pipeline = Pipeline::All;
};

// JSON text (schema 1) -> config.  Throws ConfigError naming the path of
// the first offending field.  Dimension budgets are enforced here, before
// any tower is materialized.
ComputationConfig parse_config(const std::string& text);

// One pipeline run: dimension tables plus the relation-check summary.
struct ComputeRow {
    std::string pipeline;   // "direct" or "resolution"
    std::string provenance; // which construction produced the tower
    std::vector<Index> hochschild;
    std::vector<Index> cyclic;
    bool relations_ok = false;
    std::string relation_detail;
};

struct Report {
    std::string kind; // "compute" or "verify"
    std::vector<ComputeRow> rows;
    std::vector<SuiteResult> suites;
    bool pass = false;
    double wall_seconds = 0;
};

// Runs the requested pipelines.  With Pipeline::All the report passes only
// if both towers satisfy their relations and agree degreewise.
Report cmd_compute(const ComputationConfig& cfg);

// Runs named suites from the registry; ConfigError on an unknown name.
Report cmd_verify(const std::vector<std::string>& names, Index top, Index budget);

// Human-readable aligned table and machine-readable JSON carrying the same
// numbers; parse_report inverts render_json.
std::string render_text(const Report& r);
std::string render_json(const Report& r);
Report parse_report(const std::string& json_text);

// Equality of everything except the timing field.
bool same_numbers(const Report& a, const Report& b);

// Prints the instantiated spaces and structure maps of the direct tower.
// Refuses instances whose largest ambient space exceeds 64 dimensions.
std::string explain_text(const ComputationConfig& cfg);

} // namespace cyclo
