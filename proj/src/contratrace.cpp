#include "cyclotrace/contratrace.hpp"

#include "cyclotrace/errors.hpp"

namespace cyclo {

Contratrace make_contratrace(TraceKind kind, CatRef cat, SaydModule coeff) {
    if (!cat.group) throw ConfigError("contratrace needs a group");
    if (kind == TraceKind::TypeA && cat.kind != CatKind::Rep)
        throw ConfigError("the invariant-functional realization lives on the representation backend");
    if (kind == TraceKind::TypeB && cat.kind != CatKind::Graded)
        throw ConfigError("the graded-map realization lives on the graded backend");
    if (!coeff.group || !(*coeff.group == *cat.group))
        throw ConfigError("coefficient group does not match the category group");
    require_sayd(coeff, "coefficient");
    Contratrace f;
    f.kind = kind;
    f.cat = cat;
    f.coeff = std::move(coeff);
    return f;
}

Index trace_ambient(const Contratrace& f, const Obj& v) { return f.coeff_dim() * v.dim; }

namespace {

// diagonal projector of the coefficient's atomic grading at degree g
Matrix coeff_projector(const SaydModule& m, Index g) {
    Matrix p(m.grading.total(), m.grading.total());
    const Index off = m.grading.offset(g);
    for (Index i = 0; i < m.grading.component(g); ++i) p.set(off + i, off + i, 1);
    return p;
}

} // namespace

Subspace trace_space(const Contratrace& f, const Obj& v) {
    const Index md = f.coeff_dim();
    const Index ambient = md * v.dim;
    if (f.kind == TraceKind::TypeA) {
        Matrix constraints(0, ambient);
        for (Index g : f.cat.group->generators()) {
            const Matrix op =
                Matrix::kron(f.coeff.action[static_cast<std::size_t>(g)], v.rho_at(g));
            constraints = Matrix::vcat(constraints, op.transpose() - Matrix::identity(ambient));
        }
        return kernel(constraints);
    }
    Matrix p(ambient, ambient);
    for (Index g = 0; g < f.cat.group->order(); ++g)
        p = p + Matrix::kron(coeff_projector(f.coeff, g), v.proj_at(g).transpose());
    return kernel(p - Matrix::identity(ambient));
}

Matrix functional_pullback(Index m_dim, const Matrix& g) {
    return Matrix::kron(Matrix::identity(m_dim), g.transpose());
}

Matrix trace_map(const Contratrace& f, const Obj& v, const Obj& w, const Matrix& g,
                 const Subspace& fw, const Subspace& fv) {
    if (!is_morphism(v, w, g)) throw MathError("trace_map: not a morphism of the backend");
    const Matrix pullback = functional_pullback(f.coeff_dim(), g);
    return coords_in(fv, pullback * fw.basis);
}

Matrix trace_flip_ambient(const Contratrace& f, const Obj& v, const Obj& w) {
    const Index md = f.coeff_dim();
    const Index dv = v.dim;
    const Index dw = w.dim;
    Matrix u(md * dw * dv, md * dv * dw);

    if (f.kind == TraceKind::TypeA) {
        for (Index m = 0; m < md; ++m) {
            const Index x = f.coeff.grading.degree_of(m);
            const Matrix& twist = w.rho_at(f.cat.group->inverse(x));
            for (Index wp = 0; wp < dw; ++wp)
                for (const auto& [wc, val] : twist.row(wp))
                    for (Index vv = 0; vv < dv; ++vv)
                        u.set((m * dw + wc) * dv + vv, (m * dv + vv) * dw + wp, val);
        }
        return u;
    }

    // sum over the degree-y components of the first tensor factor
    for (Index y = 0; y < f.cat.group->order(); ++y) {
        const Matrix& act = f.coeff.action[static_cast<std::size_t>(f.cat.group->inverse(y))];
        const Matrix& ey = v.proj_at(y);
        for (Index mp = 0; mp < md; ++mp)
            for (const auto& [m, aval] : act.row(mp))
                for (Index vp = 0; vp < dv; ++vp)
                    for (const auto& [vv, eval_] : ey.row(vp))
                        for (Index ww = 0; ww < dw; ++ww)
                            u.add_at((mp * dw + ww) * dv + vv, (m * dv + vp) * dw + ww,
                                     aval * eval_);
    }
    return u;
}

Matrix trace_flip(const Contratrace& f, const Obj& v, const Obj& w, const Subspace& fvw,
                  const Subspace& fwv) {
    const Matrix u = trace_flip_ambient(f, v, w);
    return coords_in(fwv, u * fvw.basis);
}

Subspace lifted_space(const Contratrace& f, const BimoduleData& s) {
    const Subspace base = trace_space(f, s.obj);
    const Matrix t_left = functional_pullback(f.coeff_dim(), s.left);
    const Matrix t_right = functional_pullback(f.coeff_dim(), s.right);
    const Matrix u = trace_flip_ambient(f, s.algebra.obj, s.obj);
    const Matrix condition = (t_right - u * t_left) * base.basis;
    const Subspace inner = kernel(condition);
    return canonical_span(base.ambient, base.basis * inner.basis);
}

Matrix lifted_flip(const Contratrace& f, const BimoduleData& s, const BimoduleData& t,
                   const RelTensor& st, const RelTensor& ts, const Subspace& f_st,
                   const Subspace& f_ts) {
    const Index md = f.coeff_dim();
    // representatives on the plain tensor square
    const Matrix lift = functional_pullback(md, st.pres.projection) * f_st.basis;
    const Matrix flipped = trace_flip_ambient(f, s.obj, t.obj) * lift;
    // well-definedness: the flipped functionals must kill the junction
    // relations of the target presentation
    if (!(functional_pullback(md, ts.pres.sub.basis) * flipped).is_zero())
        throw MathError("flip of the relative tensor product is not well defined on representatives");
    const Matrix pushed = functional_pullback(md, ts.pres.section) * flipped;
    return coords_in(f_ts, pushed);
}

} // namespace cyclo
