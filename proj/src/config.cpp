#include "cyclotrace/config.hpp"

#include "cyclotrace/cyclic.hpp"
#include "cyclotrace/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <initializer_list>
#include <sstream>
#include <utility>

namespace cyclo {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
    throw ConfigError("config error at " + path + ": " + msg);
}

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(path, std::string("missing field '") + key + "'");
    return *it;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known) bad(path, "unknown field '" + it.key() + "'");
    }
}

Index get_count(const json& j, const std::string& path, Index least) {
    if (!j.is_number_integer()) bad(path, "expected an integer");
    const Index v = j.get<Index>();
    if (v < least) bad(path, "must be at least " + std::to_string(least));
    return v;
}

Rational get_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return rational_from_string(j.get<std::string>());
        } catch (const ConfigError& e) {
            bad(path, e.what());
        }
    }
    bad(path, "expected an integer or a rational string like \"3/4\"");
}

std::vector<Rational> get_rational_list(const json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(get_rational(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

Matrix get_matrix(const json& j, Index rows, Index cols, const std::string& path) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(rows))
        bad(path, "expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        const auto row =
            get_rational_list(j[static_cast<std::size_t>(r)], path + "[" + std::to_string(r) + "]");
        if (static_cast<Index>(row.size()) != cols)
            bad(path + "[" + std::to_string(r) + "]",
                "expected " + std::to_string(cols) + " entries");
        for (Index c = 0; c < cols; ++c) m.set(r, c, row[static_cast<std::size_t>(c)]);
    }
    return m;
}

GroupPtr parse_group(const json& j, const std::string& path) {
    check_keys(j, {"cyclic", "table"}, path);
    if (j.contains("cyclic"))
        return std::make_shared<const FinGroup>(
            cyclic_group(get_count(field(j, "cyclic", path), path + ".cyclic", 1)));
    if (j.contains("table")) {
        const json& t = field(j, "table", path);
        if (!t.is_array()) bad(path + ".table", "expected an array of rows");
        std::vector<std::vector<Index>> table;
        for (std::size_t r = 0; r < t.size(); ++r) {
            if (!t[r].is_array()) bad(path + ".table", "expected an array of rows");
            std::vector<Index> row;
            for (const auto& v : t[r]) {
                if (!v.is_number_integer()) bad(path + ".table", "entries must be integers");
                row.push_back(v.get<Index>());
            }
            table.push_back(std::move(row));
        }
        try {
            return std::make_shared<const FinGroup>(std::move(table));
        } catch (const MathError& e) {
            bad(path + ".table", e.what());
        }
    }
    bad(path, "expected either 'cyclic' or 'table'");
}

Rep parse_rep(const json& j, const GroupPtr& group, const std::string& path) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "trivial") return trivial_rep(group);
        if (s == "regular") return regular_rep(group);
        bad(path, "unknown representation '" + s + "'");
    }
    check_keys(j, {"trivial", "character", "matrices"}, path);
    if (j.contains("trivial"))
        return trivial_rep(group, get_count(field(j, "trivial", path), path + ".trivial", 1));
    if (j.contains("character"))
        return character_rep(group,
                             get_rational_list(field(j, "character", path), path + ".character"));
    if (j.contains("matrices")) {
        const json& ms = field(j, "matrices", path);
        if (!ms.is_array() || ms.size() != static_cast<std::size_t>(group->order()))
            bad(path + ".matrices", "expected one matrix per group element");
        if (ms.empty() || !ms[0].is_array() || ms[0].empty())
            bad(path + ".matrices", "matrices must be nonempty arrays of rows");
        const Index dim = static_cast<Index>(ms[0].size());
        std::vector<Matrix> mats;
        for (std::size_t g = 0; g < ms.size(); ++g)
            mats.push_back(
                get_matrix(ms[g], dim, dim, path + ".matrices[" + std::to_string(g) + "]"));
        try {
            return make_rep(group, std::move(mats));
        } catch (const MathError& e) {
            bad(path + ".matrices", e.what());
        }
    }
    bad(path, "expected 'trivial', 'regular', 'character' or 'matrices'");
}

AlgebraData parse_algebra(const json& j, const CatRef& cat, const std::string& path) {
    check_keys(j, {"named", "size", "copies", "inner", "explicit"}, path);
    if (j.contains("explicit")) {
        const json& e = field(j, "explicit", path);
        const std::string epath = path + ".explicit";
        check_keys(e, {"mult", "unit", "grading", "action"}, epath);
        const json& unit_j = field(e, "unit", epath);
        const auto unit_col = get_rational_list(unit_j, epath + ".unit");
        const Index dim = static_cast<Index>(unit_col.size());
        if (dim < 1) bad(epath + ".unit", "algebra must have positive dimension");
        Matrix unit(dim, 1);
        for (Index i = 0; i < dim; ++i) unit.set(i, 0, unit_col[static_cast<std::size_t>(i)]);
        const Matrix mult = get_matrix(field(e, "mult", epath), dim, dim * dim, epath + ".mult");

        Obj obj;
        try {
            if (cat.kind == CatKind::Graded) {
                GradedSpace gs;
                if (e.contains("grading")) {
                    const json& g = field(e, "grading", epath);
                    if (!g.is_array() || g.size() != static_cast<std::size_t>(cat.group->order()))
                        bad(epath + ".grading", "expected one dimension per group element");
                    for (const auto& d : g)
                        gs.dims.push_back(get_count(d, epath + ".grading", 0));
                    if (gs.total() != dim) bad(epath + ".grading", "grading dimensions must sum "
                                                                   "to the algebra dimension");
                } else {
                    gs.dims.assign(static_cast<std::size_t>(cat.group->order()), 0);
                    gs.dims[static_cast<std::size_t>(cat.group->identity())] = dim;
                }
                obj = graded_obj(cat, gs);
            } else {
                if (e.contains("action")) {
                    json wrap;
                    wrap["matrices"] = e.at("action");
                    obj = rep_obj(cat, parse_rep(wrap, cat.group, epath + ".action"));
                    if (obj.dim != dim) bad(epath + ".action", "action dimension must match "
                                                               "the algebra dimension");
                } else {
                    obj = rep_obj(cat, trivial_rep(cat.group, dim));
                }
            }
            return explicit_algebra(obj, mult, unit);
        } catch (const MathError& err) {
            bad(epath, err.what());
        }
    }

    const json& name_j = field(j, "named", path);
    if (!name_j.is_string()) bad(path + ".named", "expected a string");
    const std::string name = name_j.get<std::string>();
    if (name == "unit") return unit_algebra(cat);
    if (name == "group_algebra") return group_algebra(cat);
    if (name == "dual_numbers") return dual_numbers_algebra(cat);
    if (name == "function_algebra") {
        Index copies = 1;
        if (j.contains("copies")) copies = get_count(j.at("copies"), path + ".copies", 1);
        try {
            return function_algebra(cat, copies);
        } catch (const MathError& e) {
            bad(path, e.what());
        }
    }
    if (name == "matrix") {
        const Index size = get_count(field(j, "size", path), path + ".size", 1);
        const AlgebraData inner = parse_algebra(field(j, "inner", path), cat, path + ".inner");
        return matrix_amplify(inner, size);
    }
    if (name == "crossed") {
        if (cat.kind != CatKind::Graded)
            bad(path, "the crossed product lives in the graded backend");
        const CatRef inner_cat{CatKind::Rep, cat.group};
        const AlgebraData inner =
            parse_algebra(field(j, "inner", path), inner_cat, path + ".inner");
        try {
            return crossed_product(inner);
        } catch (const MathError& e) {
            bad(path, e.what());
        }
    }
    bad(path + ".named", "unknown algebra '" + name + "'");
}

SaydModule parse_coefficient(const json& j, const GroupPtr& group, const std::string& path) {
    check_keys(j, {"named", "rep", "character", "degree", "dual", "explicit"}, path);
    if (j.contains("dual"))
        return sayd_dual(parse_coefficient(field(j, "dual", path), group, path + ".dual"));
    if (j.contains("explicit")) {
        const json& e = field(j, "explicit", path);
        const std::string epath = path + ".explicit";
        check_keys(e, {"grading", "action"}, epath);
        SaydModule m;
        m.group = group;
        const json& g = field(e, "grading", epath);
        if (!g.is_array() || g.size() != static_cast<std::size_t>(group->order()))
            bad(epath + ".grading", "expected one dimension per group element");
        for (const auto& d : g) m.grading.dims.push_back(get_count(d, epath + ".grading", 0));
        const Index total = m.grading.total();
        const json& act = field(e, "action", epath);
        if (!act.is_array() || act.size() != static_cast<std::size_t>(group->order()))
            bad(epath + ".action", "expected one matrix per group element");
        for (std::size_t gidx = 0; gidx < act.size(); ++gidx)
            m.action.push_back(get_matrix(act[gidx], total, total,
                                          epath + ".action[" + std::to_string(gidx) + "]"));
        require_sayd(m, "coefficient at " + path);
        return m;
    }

    const json& name_j = field(j, "named", path);
    if (!name_j.is_string()) bad(path + ".named", "expected a string");
    const std::string name = name_j.get<std::string>();
    if (name == "rep_at_identity")
        return sayd_from_rep(parse_rep(field(j, "rep", path), group, path + ".rep"));
    if (name == "adjoint") return sayd_adjoint(group);
    if (name == "regular_at_identity") return sayd_regular_at_identity(group);
    if (name == "modular_pair") {
        const auto chi = get_rational_list(field(j, "character", path), path + ".character");
        const Index x = get_count(field(j, "degree", path), path + ".degree", 0);
        if (x >= group->order()) bad(path + ".degree", "not a group element");
        return sayd_from_modular_pair(group, chi, x);
    }
    bad(path + ".named", "unknown coefficient '" + name + "'");
}

// overflow-safe base^exp * factor <= budget
void budget_precheck(Index base, Index exp, Index factor, Index budget, const std::string& what) {
    Index acc = factor;
    for (Index i = 0; i < exp; ++i) {
        if (base != 0 && acc > budget / base + 1) acc = budget + 1;
        else acc *= base;
        if (acc > budget) {
            std::ostringstream os;
            os << "dimension budget exceeded for " << what << ": " << factor << " * " << base
               << "^" << exp << " > " << budget;
            throw ConfigError(os.str());
        }
    }
}

json row_to_json(const ComputeRow& r) {
    json j;
    j["pipeline"] = r.pipeline;
    j["provenance"] = r.provenance;
    j["hochschild"] = r.hochschild;
    j["cyclic"] = r.cyclic;
    j["relations_ok"] = r.relations_ok;
    j["relation_detail"] = r.relation_detail;
    return j;
}

json suite_to_json(const SuiteResult& s) {
    json j;
    j["name"] = s.name;
    j["truncation"] = s.truncation;
    j["pass"] = s.pass;
    j["instances"] = json::array();
    for (const auto& inst : s.instances) {
        json ji;
        ji["description"] = inst.description;
        ji["left"] = inst.left;
        ji["right"] = inst.right;
        ji["pass"] = inst.pass;
        j["instances"].push_back(std::move(ji));
    }
    return j;
}

std::vector<Index> index_list(const json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array");
    std::vector<Index> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) bad(path, "expected integers");
        out.push_back(v.get<Index>());
    }
    return out;
}

void print_dims(std::ostringstream& os, const char* label, const std::vector<Index>& v) {
    os << "    " << label;
    for (Index d : v) os << "  " << d;
    os << "\n";
}

ComputeRow run_direct(const Contratrace& f, const ComputationConfig& cfg) {
    ComputeRow row;
    row.pipeline = "direct";
    row.provenance = "tower of algebra tensor powers";
    const PrecocyclicObject c =
        build_algebra_cocyclic(f, cfg.algebra, cfg.max_degree, cfg.budget);
    const CheckOutcome rel = check_precocyclic(c);
    row.relations_ok = rel.ok;
    row.relation_detail = rel.detail;
    row.hochschild = hochschild_dims(c);
    row.cyclic = cyclic_dims(c);
    return row;
}

ComputeRow run_resolution(const Contratrace& f, const ComputationConfig& cfg) {
    ComputeRow row;
    row.pipeline = "resolution";
    const AdmissiblePair pair = canonical_pair(cfg.algebra);
    row.provenance = "tower of the " + pair.provenance + " pair";
    const PrecocyclicObject c = build_pair_precocyclic(f, pair, cfg.max_degree, cfg.budget);
    const CheckOutcome rel = check_precocyclic(c);
    row.relations_ok = rel.ok;
    row.relation_detail = rel.detail;
    row.hochschild = hochschild_dims(c);
    row.cyclic = cyclic_dims(c);
    return row;
}

} // namespace

ComputationConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    check_keys(j, {"schema", "group", "category", "trace", "algebra", "coefficient", "max_degree",
                   "budget", "pipeline"},
               "$");
    if (field(j, "schema", "$") != 1) bad("$.schema", "unsupported schema version");

    ComputationConfig cfg;
    cfg.group = parse_group(field(j, "group", "$"), "$.group");

    const json& cat_j = field(j, "category", "$");
    if (cat_j == "rep") cfg.cat = CatRef{CatKind::Rep, cfg.group};
    else if (cat_j == "graded") cfg.cat = CatRef{CatKind::Graded, cfg.group};
    else bad("$.category", "expected \"rep\" or \"graded\"");

    const json& trace_j = field(j, "trace", "$");
    if (trace_j == "A") cfg.kind = TraceKind::TypeA;
    else if (trace_j == "B") cfg.kind = TraceKind::TypeB;
    else bad("$.trace", "expected \"A\" or \"B\"");

    cfg.algebra = parse_algebra(field(j, "algebra", "$"), cfg.cat, "$.algebra");
    cfg.coefficient = parse_coefficient(field(j, "coefficient", "$"), cfg.group, "$.coefficient");

    if (j.contains("max_degree"))
        cfg.max_degree = get_count(j.at("max_degree"), "$.max_degree", 1);
    if (j.contains("budget")) cfg.budget = get_count(j.at("budget"), "$.budget", 1);
    if (j.contains("pipeline")) {
        const json& p = j.at("pipeline");
        if (p == "old") cfg.pipeline = Pipeline::Direct;
        else if (p == "new") cfg.pipeline = Pipeline::Resolution;
        else if (p == "all") cfg.pipeline = Pipeline::All;
        else bad("$.pipeline", "expected \"old\", \"new\" or \"all\"");
    }

    // the functor checks kind/backend compatibility and the coefficient axioms
    make_contratrace(cfg.kind, cfg.cat, cfg.coefficient);

    const Index md = cfg.coefficient.grading.total();
    if (cfg.pipeline != Pipeline::Resolution)
        budget_precheck(cfg.algebra.dim(), cfg.max_degree + 1, std::max<Index>(md, 1), cfg.budget,
                        "the direct tower");
    if (cfg.pipeline != Pipeline::Direct)
        budget_precheck(cfg.algebra.dim() * cfg.algebra.dim(), cfg.max_degree + 1,
                        std::max<Index>(md, 1), cfg.budget, "the resolution tower");
    return cfg;
}

Report cmd_compute(const ComputationConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.kind = "compute";
    const Contratrace f = make_contratrace(cfg.kind, cfg.cat, cfg.coefficient);
    if (cfg.pipeline != Pipeline::Resolution) rep.rows.push_back(run_direct(f, cfg));
    if (cfg.pipeline != Pipeline::Direct) rep.rows.push_back(run_resolution(f, cfg));

    rep.pass = true;
    for (const auto& row : rep.rows) rep.pass = rep.pass && row.relations_ok;
    if (rep.rows.size() == 2) {
        rep.pass = rep.pass && rep.rows[0].hochschild == rep.rows[1].hochschild
                   && rep.rows[0].cyclic == rep.rows[1].cyclic;
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

Report cmd_verify(const std::vector<std::string>& names, Index top, Index budget) {
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.kind = "verify";
    rep.suites = run_suites(names, top, budget);
    rep.pass = true;
    for (const auto& s : rep.suites) rep.pass = rep.pass && s.pass;
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << r.kind << " report\n";
    for (const auto& row : r.rows) {
        os << "  pipeline " << row.pipeline << " (" << row.provenance << ")\n";
        std::vector<Index> degrees;
        for (Index n = 0; n < static_cast<Index>(row.hochschild.size()); ++n)
            degrees.push_back(n);
        print_dims(os, "n stage ", degrees);
        print_dims(os, "HH dim  ", row.hochschild);
        print_dims(os, "HC dim  ", row.cyclic);
        os << "    relations: " << (row.relations_ok ? "ok" : row.relation_detail.c_str())
           << "\n";
    }
    if (r.rows.size() == 2) {
        const bool agree = r.rows[0].hochschild == r.rows[1].hochschild
                           && r.rows[0].cyclic == r.rows[1].cyclic;
        os << "  pipelines agree: " << (agree ? "yes" : "NO") << "\n";
    }
    for (const auto& s : r.suites) {
        os << "  suite " << s.name << "  N=" << s.truncation << "  "
           << (s.pass ? "pass" : "FAIL") << "\n";
        for (const auto& inst : s.instances) {
            os << "    " << (inst.pass ? "pass" : "FAIL") << "  " << inst.description << "\n";
            print_dims(os, "left ", inst.left);
            print_dims(os, "right", inst.right);
        }
    }
    os << "result: " << (r.pass ? "pass" : "FAIL") << "\n";
    os << "wall time: " << r.wall_seconds << " s\n";
    return os.str();
}

std::string render_json(const Report& r) {
    json j;
    j["schema"] = 1;
    j["kind"] = r.kind;
    j["pass"] = r.pass;
    j["wall_seconds"] = r.wall_seconds;
    j["rows"] = json::array();
    for (const auto& row : r.rows) j["rows"].push_back(row_to_json(row));
    j["suites"] = json::array();
    for (const auto& s : r.suites) j["suites"].push_back(suite_to_json(s));
    return j.dump(2) + "\n";
}

Report parse_report(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("report is not valid JSON: ") + e.what());
    }
    if (field(j, "schema", "$") != 1) bad("$.schema", "unsupported schema version");
    Report r;
    r.kind = field(j, "kind", "$").get<std::string>();
    r.pass = field(j, "pass", "$").get<bool>();
    r.wall_seconds = field(j, "wall_seconds", "$").get<double>();
    for (const auto& row_j : field(j, "rows", "$")) {
        ComputeRow row;
        row.pipeline = field(row_j, "pipeline", "$.rows").get<std::string>();
        row.provenance = field(row_j, "provenance", "$.rows").get<std::string>();
        row.hochschild = index_list(field(row_j, "hochschild", "$.rows"), "$.rows.hochschild");
        row.cyclic = index_list(field(row_j, "cyclic", "$.rows"), "$.rows.cyclic");
        row.relations_ok = field(row_j, "relations_ok", "$.rows").get<bool>();
        row.relation_detail = field(row_j, "relation_detail", "$.rows").get<std::string>();
        r.rows.push_back(std::move(row));
    }
    for (const auto& s_j : field(j, "suites", "$")) {
        SuiteResult s;
        s.name = field(s_j, "name", "$.suites").get<std::string>();
        s.truncation = field(s_j, "truncation", "$.suites").get<Index>();
        s.pass = field(s_j, "pass", "$.suites").get<bool>();
        for (const auto& inst_j : field(s_j, "instances", "$.suites")) {
            SuiteInstance inst;
            inst.description = field(inst_j, "description", "$.suites.instances")
                                   .get<std::string>();
            inst.left = index_list(field(inst_j, "left", "$.suites.instances"), "left");
            inst.right = index_list(field(inst_j, "right", "$.suites.instances"), "right");
            inst.pass = field(inst_j, "pass", "$.suites.instances").get<bool>();
            s.instances.push_back(std::move(inst));
        }
        r.suites.push_back(std::move(s));
    }
    return r;
}

bool same_numbers(const Report& a, const Report& b) {
    if (a.kind != b.kind || a.pass != b.pass) return false;
    if (a.rows.size() != b.rows.size() || a.suites.size() != b.suites.size()) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const ComputeRow& x = a.rows[i];
        const ComputeRow& y = b.rows[i];
        if (x.pipeline != y.pipeline || x.provenance != y.provenance) return false;
        if (x.hochschild != y.hochschild || x.cyclic != y.cyclic) return false;
        if (x.relations_ok != y.relations_ok || x.relation_detail != y.relation_detail)
            return false;
    }
    for (std::size_t i = 0; i < a.suites.size(); ++i) {
        const SuiteResult& x = a.suites[i];
        const SuiteResult& y = b.suites[i];
        if (x.name != y.name || x.truncation != y.truncation || x.pass != y.pass) return false;
        if (x.instances.size() != y.instances.size()) return false;
        for (std::size_t k = 0; k < x.instances.size(); ++k) {
            const SuiteInstance& u = x.instances[k];
            const SuiteInstance& v = y.instances[k];
            if (u.description != v.description || u.pass != v.pass) return false;
            if (u.left != v.left || u.right != v.right) return false;
        }
    }
    return true;
}

std::string explain_text(const ComputationConfig& cfg) {
    const Contratrace f = make_contratrace(cfg.kind, cfg.cat, cfg.coefficient);
    const Index md = std::max<Index>(cfg.coefficient.grading.total(), 1);
    budget_precheck(cfg.algebra.dim(), cfg.max_degree + 1, md, 64,
                    "explain (capped at ambient dimension 64)");

    const PrecocyclicObject c =
        build_algebra_cocyclic(f, cfg.algebra, cfg.max_degree, cfg.budget);
    std::ostringstream os;
    os << "direct tower, levels 0.." << c.top << "\n";
    for (Index n = 0; n <= c.top; ++n)
        os << "  dim C^" << n << " = " << c.spaces[static_cast<std::size_t>(n)].dim() << "\n";
    for (Index n = 0; n + 1 <= c.top; ++n) {
        const auto& row = c.cofaces[static_cast<std::size_t>(n)];
        for (std::size_t i = 0; i < row.size(); ++i)
            os << "delta_" << i << " : C^" << n << " -> C^" << n + 1 << "  " << row[i] << "\n";
        const auto& sig = c.codegeneracies[static_cast<std::size_t>(n)];
        for (std::size_t jx = 0; jx < sig.size(); ++jx)
            os << "sigma_" << jx << " : C^" << n + 1 << " -> C^" << n << "  " << sig[jx] << "\n";
    }
    for (Index n = 0; n <= c.top; ++n)
        os << "tau_" << n << " : C^" << n << " -> C^" << n << "  "
           << c.cyclic[static_cast<std::size_t>(n)] << "\n";
    return os.str();
}

} // namespace cyclo
