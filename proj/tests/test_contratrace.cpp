#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclotrace/contratrace.hpp"
#include "cyclotrace/errors.hpp"

using namespace cyclo;

namespace {

GroupPtr z2() {
    static GroupPtr g = std::make_shared<const FinGroup>(cyclic_group(2));
    return g;
}

GroupPtr s3() {
    static GroupPtr g = std::make_shared<const FinGroup>(symmetric_group(3));
    return g;
}

Contratrace invariant_functionals(GroupPtr grp, const SaydModule& m) {
    return make_contratrace(TraceKind::TypeA, CatRef{CatKind::Rep, grp}, m);
}

Contratrace graded_maps(GroupPtr grp, const SaydModule& m) {
    return make_contratrace(TraceKind::TypeB, CatRef{CatKind::Graded, grp}, m);
}

} // namespace

TEST_CASE("backend and kind must match") {
    const SaydModule m = sayd_adjoint(z2());
    CHECK_THROWS_AS(make_contratrace(TraceKind::TypeA, CatRef{CatKind::Graded, z2()}, m),
                    ConfigError);
    CHECK_THROWS_AS(make_contratrace(TraceKind::TypeB, CatRef{CatKind::Rep, z2()}, m),
                    ConfigError);

    // broken coefficients are rejected up front
    SaydModule bad;
    bad.group = z2();
    bad.grading.dims = {0, 1};
    bad.action = {Matrix::identity(1), Matrix::from_rows({{-1}})};
    CHECK_THROWS_AS(make_contratrace(TraceKind::TypeB, CatRef{CatKind::Graded, z2()}, bad),
                    ConfigError);
}

TEST_CASE("invariant functional dimensions match character counts") {
    const CatRef cat{CatKind::Rep, s3()};
    const Contratrace f = invariant_functionals(s3(), sayd_adjoint(s3()));

    // multiplicity of the trivial rep in (conjugation action) (x) V:
    // dim + chi_V(transposition) + chi_V(3-cycle)
    CHECK(trace_space(f, rep_obj(cat, trivial_rep(s3()))).dim() == 3);
    CHECK(trace_space(f, rep_obj(cat, regular_rep(s3()))).dim() == 6);
    CHECK(trace_space(f, rep_obj(cat, character_rep(s3(), {1, -1, -1, 1, 1, -1}))).dim() == 1);
}

TEST_CASE("trivial coefficient counts plain invariants") {
    const CatRef cat{CatKind::Rep, z2()};
    const Contratrace f = invariant_functionals(z2(), sayd_from_rep(trivial_rep(z2())));
    CHECK(trace_space(f, rep_obj(cat, trivial_rep(z2()))).dim() == 1);
    CHECK(trace_space(f, rep_obj(cat, character_rep(z2(), {1, -1}))).dim() == 0);
    CHECK(trace_space(f, rep_obj(cat, regular_rep(z2()))).dim() == 1);
}

TEST_CASE("graded map dimensions pair the gradings") {
    const CatRef cat{CatKind::Graded, z2()};
    const Contratrace f = graded_maps(z2(), sayd_adjoint(z2()));

    GradedSpace both, even;
    both.dims = {1, 1};
    even.dims = {2, 0};
    const Obj vb = graded_obj(cat, both);
    const Obj ve = graded_obj(cat, even);
    CHECK(trace_space(f, vb).dim() == 2);
    CHECK(trace_space(f, ve).dim() == 2);
    CHECK(trace_space(f, tensor_obj(vb, vb)).dim() == 4);
    CHECK(trace_space(f, tensor_obj(ve, ve)).dim() == 4);
}

TEST_CASE("trace spaces add over direct sums") {
    const CatRef cat{CatKind::Rep, s3()};
    const Contratrace f = invariant_functionals(s3(), sayd_adjoint(s3()));
    const Obj a = rep_obj(cat, trivial_rep(s3()));
    const Obj b = rep_obj(cat, regular_rep(s3()));
    CHECK(trace_space(f, direct_sum_obj(a, b)).dim() ==
          trace_space(f, a).dim() + trace_space(f, b).dim());
}

TEST_CASE("functional dimension agrees with a hom space computation") {
    // invariant functionals on M (x) V are G-maps V -> M^*
    const CatRef cat{CatKind::Rep, s3()};
    const SaydModule m = sayd_adjoint(s3());
    const Contratrace f = invariant_functionals(s3(), m);
    const Obj dual_m = rep_obj(cat, dual_rep(total_action_rep(m)));
    for (const Obj& v : {rep_obj(cat, trivial_rep(s3())), rep_obj(cat, regular_rep(s3()))})
        CHECK(trace_space(f, v).dim() == hom_space(v, dual_m).dim());
}

TEST_CASE("pullback along multiplication, full trace spaces") {
    // trivial group, trivial coefficient: F(V) = V^*, F(g) = g^T
    GroupPtr one = std::make_shared<const FinGroup>(cyclic_group(1));
    const CatRef cat{CatKind::Rep, one};
    const Contratrace f = invariant_functionals(one, sayd_from_rep(trivial_rep(one)));
    const AlgebraData a = group_algebra(cat);
    const Obj sq = tensor_obj(a.obj, a.obj);
    const Subspace fa = trace_space(f, a.obj);
    const Subspace fsq = trace_space(f, sq);
    CHECK(fa.dim() == 1);
    CHECK(fsq.dim() == 1);
    CHECK(trace_map(f, sq, a.obj, a.mult, fa, fsq) == a.mult.transpose());
}

TEST_CASE("pullback along multiplication, graded") {
    const CatRef cat{CatKind::Graded, z2()};
    const Contratrace f = graded_maps(z2(), sayd_adjoint(z2()));
    const AlgebraData a = group_algebra(cat);
    const Obj sq = tensor_obj(a.obj, a.obj);
    const Subspace fa = trace_space(f, a.obj);
    const Subspace fsq = trace_space(f, sq);
    REQUIRE(fa.dim() == 2);
    REQUIRE(fsq.dim() == 4);
    // phi |-> phi o mult in the canonical bases: each product basis
    // functional pulls back to the sum over the fiber of the degree
    CHECK(trace_map(f, sq, a.obj, a.mult, fa, fsq) ==
          Matrix::from_rows({{1, 0}, {1, 0}, {0, 1}, {0, 1}}));
}

TEST_CASE("trace_map rejects non morphisms") {
    const CatRef cat{CatKind::Graded, z2()};
    const Contratrace f = graded_maps(z2(), sayd_adjoint(z2()));
    const AlgebraData a = group_algebra(cat);
    const Subspace fa = trace_space(f, a.obj);
    const Matrix grade_mixing = Matrix::from_rows({{0, 1}, {1, 0}});
    CHECK_THROWS_AS(trace_map(f, a.obj, a.obj, grade_mixing, fa, fa), MathError);
}

TEST_CASE("flip against the unit is the identity") {
    const CatRef rcat{CatKind::Rep, s3()};
    const Contratrace fa = invariant_functionals(s3(), sayd_adjoint(s3()));
    const Obj v = rep_obj(rcat, regular_rep(s3()));
    const Obj u = unit_obj(rcat);
    const Subspace fv = trace_space(fa, v);
    CHECK(trace_flip(fa, v, u, fv, fv) == Matrix::identity(fv.dim()));
    CHECK(trace_flip(fa, u, v, fv, fv) == Matrix::identity(fv.dim()));

    const CatRef gcat{CatKind::Graded, s3()};
    const Contratrace fb = graded_maps(s3(), sayd_adjoint(s3()));
    const AlgebraData kg = group_algebra(gcat);
    const Subspace fk = trace_space(fb, kg.obj);
    const Obj ug = unit_obj(gcat);
    CHECK(trace_flip(fb, kg.obj, ug, fk, fk) == Matrix::identity(fk.dim()));
    CHECK(trace_flip(fb, ug, kg.obj, fk, fk) == Matrix::identity(fk.dim()));
}

TEST_CASE("flip is an involution on invariant functionals") {
    const CatRef cat{CatKind::Rep, s3()};
    const Contratrace f = invariant_functionals(s3(), sayd_adjoint(s3()));
    const Obj v = rep_obj(cat, regular_rep(s3()));
    const Obj w = rep_obj(cat, direct_sum_rep(trivial_rep(s3()), character_rep(s3(), {1, -1, -1, 1, 1, -1})));
    const Subspace fvw = trace_space(f, tensor_obj(v, w));
    const Subspace fwv = trace_space(f, tensor_obj(w, v));
    const Matrix to = trace_flip(f, v, w, fvw, fwv);
    const Matrix back = trace_flip(f, w, v, fwv, fvw);
    CHECK(back * to == Matrix::identity(fvw.dim()));
    CHECK(to * back == Matrix::identity(fwv.dim()));
}

TEST_CASE("flip is an involution on graded maps") {
    const CatRef cat{CatKind::Graded, s3()};
    const Contratrace f = graded_maps(s3(), sayd_adjoint(s3()));
    const AlgebraData kg = group_algebra(cat);
    GradedSpace partial;
    partial.dims = {1, 1, 0, 0, 1, 0};
    const Obj v = kg.obj;
    const Obj w = graded_obj(cat, partial);
    const Subspace fvw = trace_space(f, tensor_obj(v, w));
    const Subspace fwv = trace_space(f, tensor_obj(w, v));
    const Matrix to = trace_flip(f, v, w, fvw, fwv);
    const Matrix back = trace_flip(f, w, v, fwv, fvw);
    CHECK(back * to == Matrix::identity(fvw.dim()));
    CHECK(to * back == Matrix::identity(fwv.dim()));
}

TEST_CASE("flip with a nontrivially acting coefficient") {
    // regular module at the identity: the action genuinely twists TypeB flips
    const CatRef cat{CatKind::Graded, s3()};
    const Contratrace f = graded_maps(s3(), sayd_regular_at_identity(s3()));
    const AlgebraData kg = group_algebra(cat);
    const Subspace fvw = trace_space(f, tensor_obj(kg.obj, kg.obj));
    const Matrix to = trace_flip(f, kg.obj, kg.obj, fvw, fvw);
    CHECK(to * to == Matrix::identity(fvw.dim()));
    CHECK(to != Matrix::identity(fvw.dim()));
}

TEST_CASE("lifted space of the regular bimodule") {
    const CatRef cat{CatKind::Graded, z2()};
    const Contratrace f = graded_maps(z2(), sayd_adjoint(z2()));
    const AlgebraData a = group_algebra(cat);
    const Subspace l = lifted_space(f, regular_bimodule(a));
    // both graded basis functionals are tracelike for an abelian group
    CHECK(l.dim() == 2);
}

TEST_CASE("lifted space of the free bimodule matches the plain trace space") {
    const CatRef cat{CatKind::Graded, z2()};
    const Contratrace f = graded_maps(z2(), sayd_adjoint(z2()));
    const AlgebraData a = group_algebra(cat);
    const FreeBimodule p = free_bimodule(a, unit_obj(cat), Matrix::identity(1));
    CHECK(lifted_space(f, p.bim).dim() == trace_space(f, a.obj).dim());

    const CatRef rcat{CatKind::Rep, s3()};
    const Contratrace g = invariant_functionals(s3(), sayd_adjoint(s3()));
    const AlgebraData kg = group_algebra(rcat);
    const FreeBimodule q = free_bimodule(kg, unit_obj(rcat), Matrix::identity(1));
    CHECK(lifted_space(g, q.bim).dim() == trace_space(g, kg.obj).dim());
}

TEST_CASE("lifted flip is an involution") {
    const CatRef cat{CatKind::Graded, z2()};
    const Contratrace f = graded_maps(z2(), sayd_adjoint(z2()));
    const AlgebraData a = group_algebra(cat);
    const BimoduleData p = free_bimodule(a, unit_obj(cat), Matrix::identity(1)).bim;

    const RelTensor pp = bimodule_tensor(p, p);
    const Subspace fpp = lifted_space(f, pp.bim);
    const Matrix t = lifted_flip(f, p, p, pp, pp, fpp, fpp);
    CHECK(t * t == Matrix::identity(fpp.dim()));
}

TEST_CASE("lifted flip round trips between asymmetric products") {
    const CatRef cat{CatKind::Graded, z2()};
    const Contratrace f = graded_maps(z2(), sayd_adjoint(z2()));
    const AlgebraData a = group_algebra(cat);
    const BimoduleData r = regular_bimodule(a);
    const BimoduleData p = free_bimodule(a, unit_obj(cat), Matrix::identity(1)).bim;

    const RelTensor rp = bimodule_tensor(r, p);
    const RelTensor pr = bimodule_tensor(p, r);
    const Subspace f_rp = lifted_space(f, rp.bim);
    const Subspace f_pr = lifted_space(f, pr.bim);
    const Matrix to = lifted_flip(f, r, p, rp, pr, f_rp, f_pr);
    const Matrix back = lifted_flip(f, p, r, pr, rp, f_pr, f_rp);
    CHECK(back * to == Matrix::identity(f_rp.dim()));
    CHECK(to * back == Matrix::identity(f_pr.dim()));
}
