#include "cyclotrace/algebra.hpp"

#include "cyclotrace/errors.hpp"

#include <sstream>

namespace cyclo {

namespace {

// first column where two equal-shaped matrices differ, -1 if none
Index first_diff_col(const Matrix& a, const Matrix& b) {
    const Matrix d = a - b;
    Index best = -1;
    for (Index i = 0; i < d.rows(); ++i)
        for (const auto& [j, v] : d.row(i))
            if (best == -1 || j < best) best = j;
    return best;
}

} // namespace

CheckReport check_algebra(const AlgebraData& a) {
    const Index d = a.dim();
    if (a.mult.rows() != d || a.mult.cols() != d * d)
        return {false, "multiplication matrix must be dim x dim^2"};
    if (a.unit.rows() != d || a.unit.cols() != 1)
        return {false, "unit matrix must be dim x 1"};

    const Obj square = tensor_obj(a.obj, a.obj);
    if (!is_morphism(square, a.obj, a.mult))
        return {false, "multiplication is not a morphism of the backend"};
    if (!is_morphism(unit_obj(a.obj.cat), a.obj, a.unit))
        return {false, "unit is not a morphism of the backend"};

    const Matrix lhs = a.mult * Matrix::kron(a.mult, Matrix::identity(d));
    const Matrix rhs = a.mult * Matrix::kron(Matrix::identity(d), a.mult);
    if (!(lhs == rhs)) {
        const Index c = first_diff_col(lhs, rhs);
        std::ostringstream os;
        os << "associativity fails at basis triple (" << c / (d * d) << "," << (c / d) % d << ","
           << c % d << ")";
        return {false, os.str()};
    }

    if (!(a.mult * Matrix::kron(a.unit, Matrix::identity(d)) == Matrix::identity(d)))
        return {false, "left unit law fails"};
    if (!(a.mult * Matrix::kron(Matrix::identity(d), a.unit) == Matrix::identity(d)))
        return {false, "right unit law fails"};
    return {};
}

AlgebraData unit_algebra(const CatRef& cat) {
    AlgebraData a;
    a.obj = unit_obj(cat);
    a.mult = Matrix::identity(1);
    a.unit = Matrix::identity(1);
    return a;
}

AlgebraData group_algebra(const CatRef& cat) {
    const Index n = cat.group->order();
    Matrix mult(n, n * n);
    for (Index g = 0; g < n; ++g)
        for (Index h = 0; h < n; ++h) mult.set(cat.group->mul(g, h), g * n + h, 1);
    Matrix unit(n, 1);
    unit.set(cat.group->identity(), 0, 1);

    AlgebraData a;
    if (cat.kind == CatKind::Graded) {
        GradedSpace gr;
        gr.dims.assign(static_cast<std::size_t>(n), 1);
        a.obj = graded_obj(cat, gr);
    } else {
        a.obj = rep_obj(cat, trivial_rep(cat.group, n));
    }
    a.mult = std::move(mult);
    a.unit = std::move(unit);
    return a;
}

AlgebraData function_algebra(const CatRef& cat, Index copies) {
    if (copies <= 0) throw ConfigError("function algebra needs at least one copy");
    const Index n = cat.group->order();
    const Index dim = n * copies;
    Matrix mult(dim, dim * dim);
    for (Index y = 0; y < dim; ++y) mult.set(y, y * dim + y, 1);
    Matrix unit(dim, 1);
    for (Index y = 0; y < dim; ++y) unit.set(y, 0, 1);

    AlgebraData a;
    if (cat.kind == CatKind::Rep) {
        std::vector<Matrix> mats;
        for (Index h = 0; h < n; ++h) {
            Matrix p(dim, dim);
            for (Index g = 0; g < n; ++g)
                for (Index c = 0; c < copies; ++c) p.set(cat.group->mul(h, g) * copies + c, g * copies + c, 1);
            mats.push_back(std::move(p));
        }
        a.obj = rep_obj(cat, make_rep(cat.group, std::move(mats)));
    } else {
        if (n != 1) throw ConfigError("function algebra is equivariant, not graded; use the representation backend");
        GradedSpace gr;
        gr.dims = {dim};
        a.obj = graded_obj(cat, gr);
    }
    a.mult = std::move(mult);
    a.unit = std::move(unit);
    return a;
}

AlgebraData dual_numbers_algebra(const CatRef& cat) {
    Matrix mult(2, 4);
    mult.set(0, 0, 1);
    mult.set(1, 1, 1);
    mult.set(1, 2, 1);
    Matrix unit(2, 1);
    unit.set(0, 0, 1);

    AlgebraData a;
    if (cat.kind == CatKind::Rep) {
        a.obj = rep_obj(cat, trivial_rep(cat.group, 2));
    } else {
        GradedSpace gr;
        gr.dims.assign(static_cast<std::size_t>(cat.group->order()), 0);
        gr.dims[static_cast<std::size_t>(cat.group->identity())] = 2;
        a.obj = graded_obj(cat, gr);
    }
    a.mult = std::move(mult);
    a.unit = std::move(unit);
    return a;
}

AlgebraData matrix_amplify(const AlgebraData& a, Index n) {
    if (n <= 0) throw ConfigError("matrix amplification needs positive size");
    const Index d = a.dim();
    const Index nn = n * n;
    const Index dim = d * nn;

    Matrix mult(dim, dim * dim);
    const Matrix multT = a.mult.transpose(); // row (i*d + j) lists the products' components
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j)
            for (const auto& [k, v] : multT.row(i * d + j))
                for (Index p = 0; p < n; ++p)
                    for (Index q = 0; q < n; ++q)
                        for (Index s = 0; s < n; ++s)
                            mult.set(k * nn + p * n + s,
                                     (i * nn + p * n + q) * dim + (j * nn + q * n + s), v);

    Matrix unit(dim, 1);
    const Matrix unitT = a.unit.transpose();
    for (const auto& [k, v] : unitT.row(0))
        for (Index p = 0; p < n; ++p) unit.set(k * nn + p * n + p, 0, v);

    AlgebraData out;
    out.obj.cat = a.obj.cat;
    out.obj.dim = dim;
    const Index order = a.obj.cat.group->order();
    for (Index g = 0; g < order; ++g) {
        if (a.obj.cat.kind == CatKind::Rep)
            out.obj.rho.push_back(Matrix::kron(a.obj.rho_at(g), Matrix::identity(nn)));
        else
            out.obj.proj.push_back(Matrix::kron(a.obj.proj_at(g), Matrix::identity(nn)));
    }
    out.mult = std::move(mult);
    out.unit = std::move(unit);
    return out;
}

AlgebraData crossed_product(const AlgebraData& a) {
    if (a.obj.cat.kind != CatKind::Rep)
        throw ConfigError("crossed product starts from the representation backend");
    const GroupPtr grp = a.obj.cat.group;
    const Index n = grp->order();
    const Index d = a.dim();
    const Index dim = n * d;

    Matrix mult(dim, dim * dim);
    const Matrix multT = a.mult.transpose();
    for (Index g = 0; g < n; ++g) {
        const Matrix& act = a.obj.rho_at(g);
        for (Index h = 0; h < n; ++h) {
            const Index gh = grp->mul(g, h);
            for (Index j = 0; j < d; ++j) {
                // g . e_j, then multiply on the left by e_i
                for (Index m = 0; m < d; ++m) {
                    const Rational& w = act.at(m, j);
                    if (w == 0) continue;
                    for (Index i = 0; i < d; ++i)
                        for (const auto& [k, v] : multT.row(i * d + m))
                            mult.add_at(gh * d + k, (g * d + i) * dim + (h * d + j), v * w);
                }
            }
        }
    }
    Matrix unit(dim, 1);
    const Matrix unitT = a.unit.transpose();
    for (const auto& [k, v] : unitT.row(0)) unit.set(grp->identity() * d + k, 0, v);

    CatRef graded{CatKind::Graded, grp};
    GradedSpace gr;
    gr.dims.assign(static_cast<std::size_t>(n), d);

    AlgebraData out;
    out.obj = graded_obj(graded, gr);
    out.mult = std::move(mult);
    out.unit = std::move(unit);

    const CheckReport rep = check_algebra(out);
    if (!rep.ok) throw MathError("crossed product is not an algebra: " + rep.violation);
    return out;
}

AlgebraData explicit_algebra(Obj obj, Matrix mult, Matrix unit) {
    AlgebraData a;
    a.obj = std::move(obj);
    a.mult = std::move(mult);
    a.unit = std::move(unit);
    const CheckReport rep = check_algebra(a);
    if (!rep.ok) throw MathError("explicit algebra rejected: " + rep.violation);
    return a;
}

Index center_dim(const AlgebraData& a) {
    const Index d = a.dim();
    Matrix constraints(0, d);
    for (Index j = 0; j < d; ++j) {
        Matrix into(d * d, d), from(d * d, d);
        for (Index i = 0; i < d; ++i) {
            into.set(i * d + j, i, 1); // x (x) e_j
            from.set(j * d + i, i, 1); // e_j (x) x
        }
        constraints = Matrix::vcat(constraints, a.mult * into - a.mult * from);
    }
    return kernel(constraints).dim();
}

} // namespace cyclo
