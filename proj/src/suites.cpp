#include "cyclotrace/suites.hpp"

#include "cyclotrace/errors.hpp"

#include <utility>

namespace cyclo {

namespace {

GroupPtr trivial_group() {
    static GroupPtr g = std::make_shared<const FinGroup>(cyclic_group(1));
    return g;
}

GroupPtr z2() {
    static GroupPtr g = std::make_shared<const FinGroup>(cyclic_group(2));
    return g;
}

// plain vector spaces, modeled as the graded backend over the one-element group
CatRef vec_cat() { return CatRef{CatKind::Graded, trivial_group()}; }
CatRef rep2() { return CatRef{CatKind::Rep, z2()}; }
CatRef graded2() { return CatRef{CatKind::Graded, z2()}; }

Contratrace vec_dual() {
    return make_contratrace(TraceKind::TypeB, vec_cat(), sayd_from_rep(trivial_rep(trivial_group())));
}

// the two-element group algebra as a bare algebra, no grading, no action
AlgebraData kz2_in_vec() {
    GradedSpace gs;
    gs.dims = {2};
    Matrix mult(2, 4);
    mult.set(0, 0, 1); // e e = e
    mult.set(1, 1, 1); // e s = s
    mult.set(1, 2, 1); // s e = s
    mult.set(0, 3, 1); // s s = e
    Matrix unit(2, 1);
    unit.set(0, 0, 1);
    return explicit_algebra(graded_obj(vec_cat(), gs), mult, unit);
}

// forget grading and action, keeping the multiplication table
AlgebraData underlying_in_vec(const AlgebraData& a) {
    GradedSpace gs;
    gs.dims = {a.dim()};
    return explicit_algebra(graded_obj(vec_cat(), gs), a.mult, a.unit);
}

Matrix ones_row(Index n) {
    Matrix m(1, n);
    for (Index j = 0; j < n; ++j) m.set(0, j, 1);
    return m;
}

std::vector<Index> old_hc(const Contratrace& f, const AlgebraData& a, Index top, Index budget) {
    return cyclic_dims(build_algebra_cocyclic(f, a, top, budget));
}

std::vector<Index> pair_hc(const Contratrace& f, const AdmissiblePair& pair, Index top,
                           Index budget) {
    return cyclic_dims(build_pair_precocyclic(f, pair, top, budget));
}

SuiteInstance instance(std::string desc, std::vector<Index> left, std::vector<Index> right) {
    SuiteInstance inst;
    inst.description = std::move(desc);
    inst.pass = left == right;
    inst.left = std::move(left);
    inst.right = std::move(right);
    return inst;
}

SuiteResult assemble(std::string name, Index top, std::vector<SuiteInstance> instances) {
    SuiteResult r;
    r.name = std::move(name);
    r.truncation = top;
    r.pass = true;
    for (const auto& inst : instances) r.pass = r.pass && inst.pass;
    r.instances = std::move(instances);
    return r;
}

// number of invariants of M (x) A, by the averaged trace; this route never
// touches the hom-space machinery
Index invariants_by_characters(const SaydModule& m, const AlgebraData& a) {
    const Rep act = total_action_rep(m);
    Rational sum = 0;
    const Index order = m.group->order();
    for (Index g = 0; g < order; ++g) {
        Rational tr_m = 0;
        for (Index i = 0; i < act.dim; ++i) tr_m += act.at(g).at(i, i);
        Rational tr_a = 0;
        const Matrix& ag = a.obj.rho_at(g);
        for (Index i = 0; i < a.dim(); ++i) tr_a += ag.at(i, i);
        sum += tr_m * tr_a;
    }
    const Rational dim = sum / Rational(order);
    if (dim.get_den() != 1 || dim < 0) throw MathError("invariant count is not a natural number");
    return static_cast<Index>(dim.get_num().get_si());
}

} // namespace

SuiteResult suite_old_vs_new(Index top, Index budget) {
    std::vector<SuiteInstance> out;

    {
        const Contratrace f = vec_dual();
        const AlgebraData a = kz2_in_vec();
        out.push_back(instance("two-element group algebra, plain, trivial coefficient",
                               old_hc(f, a, top, budget),
                               pair_hc(f, canonical_pair(a), top, budget)));
    }
    {
        const Contratrace f =
            make_contratrace(TraceKind::TypeA, rep2(), sayd_from_rep(character_rep(z2(), {1, -1})));
        const AlgebraData a = unit_algebra(rep2());
        out.push_back(instance("unit algebra over Z/2 with sign coefficient (vanishing theory)",
                               old_hc(f, a, top, budget),
                               pair_hc(f, canonical_pair(a), top, budget)));
    }
    {
        const Contratrace f = make_contratrace(TraceKind::TypeB, graded2(), sayd_adjoint(z2()));
        const AlgebraData a = group_algebra(graded2());
        out.push_back(instance("graded group algebra with adjoint coefficient",
                               old_hc(f, a, top, budget),
                               pair_hc(f, canonical_pair(a), top, budget)));
    }

    return assemble("old_vs_new", top, std::move(out));
}

SuiteResult suite_pair_independence(Index top, Index budget) {
    std::vector<SuiteInstance> out;

    {
        const Contratrace f =
            make_contratrace(TraceKind::TypeA, rep2(), sayd_from_rep(trivial_rep(z2())));
        const AlgebraData a = group_algebra(rep2());
        const Obj q = rep_obj(rep2(), regular_rep(z2()));
        out.push_back(instance("canonical vs free on the regular object, equivariant kZ/2",
                               pair_hc(f, canonical_pair(a), top, budget),
                               pair_hc(f, free_pair(a, q, ones_row(2), "kG"), top, budget)));
    }
    {
        const Contratrace f =
            make_contratrace(TraceKind::TypeA, rep2(), sayd_from_rep(trivial_rep(z2())));
        const AlgebraData a = group_algebra(rep2());
        const Obj q = unit_obj(rep2());
        out.push_back(instance("canonical vs free on the unit object (identical pairs)",
                               pair_hc(f, canonical_pair(a), top, budget),
                               pair_hc(f, free_pair(a, q, ones_row(1), "unit"), top, budget)));
    }
    {
        const Contratrace f =
            make_contratrace(TraceKind::TypeA, rep2(), sayd_from_rep(trivial_rep(z2())));
        const AlgebraData a = unit_algebra(rep2());
        const Obj q = direct_sum_obj(rep_obj(rep2(), regular_rep(z2())), unit_obj(rep2()));
        out.push_back(instance("canonical vs free on the regular object plus a unit summand",
                               pair_hc(f, canonical_pair(a), top, budget),
                               pair_hc(f, free_pair(a, q, ones_row(3), "kG+1"), top, budget)));
    }
    {
        const Contratrace f = make_contratrace(TraceKind::TypeB, graded2(), sayd_adjoint(z2()));
        const AlgebraData a = group_algebra(graded2());
        Matrix eps(1, 2);
        eps.set(0, 0, 1);
        out.push_back(instance("canonical vs free on the group algebra object, graded side",
                               pair_hc(f, canonical_pair(a), top, budget),
                               pair_hc(f, free_pair(a, a.obj, eps, "kG"), top, budget)));
    }

    return assemble("pair_independence", top, std::move(out));
}

SuiteResult suite_morita(Index top, Index budget) {
    std::vector<SuiteInstance> out;
    const Contratrace f = vec_dual();

    {
        const AlgebraData base = unit_algebra(vec_cat());
        const AlgebraData amp = matrix_amplify(base, 2);
        out.push_back(instance("ground field vs its 2x2 matrix algebra",
                               old_hc(f, base, top, budget), old_hc(f, amp, top, budget)));
    }
    {
        const AlgebraData base = kz2_in_vec();
        const AlgebraData amp = matrix_amplify(base, 2);
        out.push_back(instance("two-element group algebra vs 2x2 matrices over it",
                               old_hc(f, base, top, budget), old_hc(f, amp, top, budget)));
    }
    {
        const AlgebraData base = kz2_in_vec();
        const AlgebraData amp = matrix_amplify(base, 1);
        out.push_back(instance("algebra vs its 1x1 matrix algebra (identical)",
                               old_hc(f, base, top, budget), old_hc(f, amp, top, budget)));
    }

    return assemble("morita", top, std::move(out));
}

SuiteResult suite_ab_duality(Index top, Index budget) {
    std::vector<SuiteInstance> out;

    // equivariant side: invariant functionals with coefficient V at the
    // identity degree; graded side: the crossed product with the dual module
    auto both = [&](const std::string& desc, const AlgebraData& a, const SaydModule& v_e,
                    const SaydModule& v_dual_e) {
        const Contratrace lhs = make_contratrace(TraceKind::TypeA, rep2(), v_e);
        const Contratrace rhs = make_contratrace(TraceKind::TypeB, graded2(), v_dual_e);
        out.push_back(instance(desc, old_hc(lhs, a, top, budget),
                               old_hc(rhs, crossed_product(a), top, budget)));
    };

    const Rep sign = character_rep(z2(), {1, -1});
    both("unit algebra with sign coefficient (both sides vanish)", unit_algebra(rep2()),
         sayd_from_rep(sign), sayd_from_rep(dual_rep(sign)));
    both("unit algebra with trivial coefficient", unit_algebra(rep2()),
         sayd_from_rep(trivial_rep(z2())), sayd_from_rep(dual_rep(trivial_rep(z2()))));
    both("function algebra on the free Z/2 set with trivial coefficient", function_algebra(rep2()),
         sayd_from_rep(trivial_rep(z2())), sayd_from_rep(dual_rep(trivial_rep(z2()))));
    both("unit algebra with the adjoint module and its dual", unit_algebra(rep2()),
         sayd_adjoint(z2()), sayd_dual(sayd_adjoint(z2())));

    return assemble("ab_duality", top, std::move(out));
}

SuiteResult suite_fiber_examples(Index top, Index budget) {
    std::vector<SuiteInstance> out;

    {
        // regular module at the identity degree reduces invariant functionals
        // to plain functionals
        const Contratrace lhs =
            make_contratrace(TraceKind::TypeA, rep2(), sayd_regular_at_identity(z2()));
        out.push_back(instance("unit algebra with regular coefficient vs plain unit algebra",
                               old_hc(lhs, unit_algebra(rep2()), top, budget),
                               old_hc(vec_dual(), unit_algebra(vec_cat()), top, budget)));
    }
    {
        // adjoint module on the graded side reduces to the plain theory of
        // the underlying algebra
        const Contratrace lhs = make_contratrace(TraceKind::TypeB, graded2(), sayd_adjoint(z2()));
        out.push_back(instance("graded group algebra with adjoint coefficient vs its plain self",
                               old_hc(lhs, group_algebra(graded2()), top, budget),
                               old_hc(vec_dual(), kz2_in_vec(), top, budget)));
    }
    {
        // adjoint module on the equivariant side computes the theory of the
        // crossed product
        const Contratrace lhs = make_contratrace(TraceKind::TypeA, rep2(), sayd_adjoint(z2()));
        const AlgebraData a = function_algebra(rep2());
        out.push_back(instance("equivariant function algebra with adjoint coefficient vs its "
                               "crossed product, plain",
                               old_hc(lhs, a, top, budget),
                               old_hc(vec_dual(), underlying_in_vec(crossed_product(a)), top,
                                      budget)));
    }

    return assemble("fiber", top, std::move(out));
}

SuiteResult suite_derham_finite(Index top, Index budget) {
    std::vector<SuiteInstance> out;

    auto compare = [&](const std::string& desc, const CatRef& cat, const AlgebraData& o_y,
                       const SaydModule& m) {
        const Contratrace f = make_contratrace(TraceKind::TypeA, cat, m);
        const Index gamma = invariants_by_characters(m, o_y);
        std::vector<Index> expected;
        for (Index n = 0; n < top; ++n) expected.push_back(n % 2 == 0 ? gamma : 0);
        out.push_back(instance(desc, old_hc(f, o_y, top, budget), std::move(expected)));
    };

    compare("free Z/2 set, sign coefficient", rep2(), function_algebra(rep2()),
            sayd_from_rep(character_rep(z2(), {1, -1})));
    compare("free Z/2 set, trivial coefficient", rep2(), function_algebra(rep2()),
            sayd_from_rep(trivial_rep(z2())));
    const CatRef rep1{CatKind::Rep, trivial_group()};
    compare("one-point set over the trivial group", rep1, function_algebra(rep1),
            sayd_from_rep(trivial_rep(trivial_group())));
    compare("two free Z/2 orbits, trivial coefficient", rep2(), function_algebra(rep2(), 2),
            sayd_from_rep(trivial_rep(z2())));

    return assemble("derham", top, std::move(out));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"old_vs_new", "pair_independence", "morita",
                                                   "ab_duality", "fiber", "derham"};
    return names;
}

bool is_suite_name(const std::string& name) {
    for (const auto& n : suite_names())
        if (n == name) return true;
    return false;
}

SuiteResult run_suite(const std::string& name, Index top, Index budget) {
    if (name == "old_vs_new") return suite_old_vs_new(top, budget);
    if (name == "pair_independence") return suite_pair_independence(top, budget);
    if (name == "morita") return suite_morita(top, budget);
    if (name == "ab_duality") return suite_ab_duality(top, budget);
    if (name == "fiber") return suite_fiber_examples(top, budget);
    if (name == "derham") return suite_derham_finite(top, budget);
    throw ConfigError("unknown suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, Index top,
                                    Index budget) {
    std::vector<SuiteResult> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(run_suite(n, top, budget));
    return out;
}

} // namespace cyclo
