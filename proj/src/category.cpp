#include "cyclotrace/category.hpp"

#include "cyclotrace/errors.hpp"

#include <sstream>

namespace cyclo {

namespace {

void require_group(const CatRef& cat) {
    if (!cat.group) throw MathError("category reference without group");
}

void validate_obj(const Obj& v) {
    require_group(v.cat);
    const Index n = v.cat.group->order();
    if (v.cat.kind == CatKind::Rep) {
        if (static_cast<Index>(v.rho.size()) != n) throw MathError("object needs one action matrix per element");
        // rho must be a homomorphism with rho(e) = id
        for (Index g = 0; g < n; ++g) {
            if (v.rho_at(g).rows() != v.dim || v.rho_at(g).cols() != v.dim)
                throw MathError("action matrix shape mismatch");
            for (Index h = 0; h < n; ++h)
                if (!(v.rho_at(g) * v.rho_at(h) == v.rho_at(v.cat.group->mul(g, h))))
                    throw MathError("object action is not a homomorphism");
        }
        if (!(v.rho_at(v.cat.group->identity()) == Matrix::identity(v.dim)))
            throw MathError("object action does not fix the identity");
    } else {
        if (static_cast<Index>(v.proj.size()) != n) throw MathError("object needs one projector per element");
        Matrix sum(v.dim, v.dim);
        for (Index g = 0; g < n; ++g) {
            const Matrix& p = v.proj_at(g);
            if (p.rows() != v.dim || p.cols() != v.dim) throw MathError("projector shape mismatch");
            if (!(p * p == p)) throw MathError("degree projector is not idempotent");
            sum = sum + p;
        }
        if (!(sum == Matrix::identity(v.dim))) throw MathError("degree projectors do not sum to id");
        for (Index g = 0; g < n; ++g)
            for (Index h = 0; h < n; ++h)
                if (g != h && !(v.proj_at(g) * v.proj_at(h)).is_zero())
                    throw MathError("degree projectors are not orthogonal");
    }
}

} // namespace

Obj unit_obj(const CatRef& cat) {
    require_group(cat);
    Obj v;
    v.cat = cat;
    v.dim = 1;
    const Index n = cat.group->order();
    if (cat.kind == CatKind::Rep) {
        v.rho.assign(static_cast<std::size_t>(n), Matrix::identity(1));
    } else {
        v.proj.assign(static_cast<std::size_t>(n), Matrix(1, 1));
        v.proj[static_cast<std::size_t>(cat.group->identity())] = Matrix::identity(1);
    }
    return v;
}

Obj rep_obj(const CatRef& cat, const Rep& rep) {
    require_group(cat);
    if (cat.kind != CatKind::Rep) throw MathError("rep_obj needs the representation backend");
    if (!(*cat.group == *rep.group)) throw MathError("rep_obj: group mismatch");
    Obj v;
    v.cat = cat;
    v.dim = rep.dim;
    v.rho = rep.matrices;
    return v;
}

Obj graded_obj(const CatRef& cat, const GradedSpace& grading) {
    require_group(cat);
    if (cat.kind != CatKind::Graded) throw MathError("graded_obj needs the graded backend");
    const Index n = cat.group->order();
    if (static_cast<Index>(grading.dims.size()) != n)
        throw MathError("grading needs one dimension per group element");
    Obj v;
    v.cat = cat;
    v.dim = grading.total();
    for (Index g = 0; g < n; ++g) {
        Matrix p(v.dim, v.dim);
        const Index off = grading.offset(g);
        for (Index i = 0; i < grading.component(g); ++i) p.set(off + i, off + i, 1);
        v.proj.push_back(std::move(p));
    }
    return v;
}

Obj make_obj(const CatRef& cat, Index dim, std::vector<Matrix> structure) {
    Obj v;
    v.cat = cat;
    v.dim = dim;
    if (cat.kind == CatKind::Rep)
        v.rho = std::move(structure);
    else
        v.proj = std::move(structure);
    validate_obj(v);
    return v;
}

Obj tensor_obj(const Obj& v, const Obj& w) {
    if (!v.cat.same_as(w.cat)) throw MathError("tensor_obj: category mismatch");
    Obj t;
    t.cat = v.cat;
    t.dim = v.dim * w.dim;
    const Index n = v.cat.group->order();
    if (v.cat.kind == CatKind::Rep) {
        for (Index g = 0; g < n; ++g) t.rho.push_back(Matrix::kron(v.rho_at(g), w.rho_at(g)));
    } else {
        const auto& grp = *v.cat.group;
        for (Index g = 0; g < n; ++g) {
            Matrix p(t.dim, t.dim);
            for (Index x = 0; x < n; ++x) {
                // degree g part = sum over splittings x * y = g
                const Index y = grp.mul(grp.inverse(x), g);
                p = p + Matrix::kron(v.proj_at(x), w.proj_at(y));
            }
            t.proj.push_back(std::move(p));
        }
    }
    return t;
}

Obj direct_sum_obj(const Obj& v, const Obj& w) {
    if (!v.cat.same_as(w.cat)) throw MathError("direct_sum_obj: category mismatch");
    Obj s;
    s.cat = v.cat;
    s.dim = v.dim + w.dim;
    const Index n = v.cat.group->order();
    auto block = [&](const Matrix& a, const Matrix& b) {
        Matrix m(s.dim, s.dim);
        for (Index i = 0; i < a.rows(); ++i)
            for (const auto& [j, val] : a.row(i)) m.set(i, j, val);
        for (Index i = 0; i < b.rows(); ++i)
            for (const auto& [j, val] : b.row(i)) m.set(v.dim + i, v.dim + j, val);
        return m;
    };
    for (Index g = 0; g < n; ++g) {
        if (v.cat.kind == CatKind::Rep)
            s.rho.push_back(block(v.rho_at(g), w.rho_at(g)));
        else
            s.proj.push_back(block(v.proj_at(g), w.proj_at(g)));
    }
    return s;
}

Obj tensor_power_obj(const Obj& v, Index k, Index budget) {
    if (k < 0) throw MathError("negative tensor power");
    Index dim = 1;
    for (Index i = 0; i < k; ++i) {
        dim *= v.dim;
        if (dim > budget) {
            std::ostringstream os;
            os << "dimension budget exceeded: |V|^" << k << " = " << v.dim << "^" << k
               << " > " << budget;
            throw ConfigError(os.str());
        }
    }
    Obj acc = unit_obj(v.cat);
    for (Index i = 0; i < k; ++i) acc = tensor_obj(acc, v);
    return acc;
}

Obj quotient_obj(const Obj& v, const QuotientPresentation& pres) {
    if (pres.ambient != v.dim) throw MathError("quotient_obj: ambient mismatch");
    const Index n = v.cat.group->order();
    Obj q;
    q.cat = v.cat;
    q.dim = pres.dim();
    const auto& structure = v.cat.kind == CatKind::Rep ? v.rho : v.proj;
    for (Index g = 0; g < n; ++g) {
        // the subspace must be carried into itself, otherwise the structure
        // does not descend
        if (!(pres.projection * (structure[static_cast<std::size_t>(g)] * pres.sub.basis)).is_zero())
            throw MathError("quotient_obj: subspace is not invariant under the structure maps");
        Matrix desc = pres.projection * structure[static_cast<std::size_t>(g)] * pres.section;
        if (v.cat.kind == CatKind::Rep)
            q.rho.push_back(std::move(desc));
        else
            q.proj.push_back(std::move(desc));
    }
    return q;
}

bool is_morphism(const Obj& v, const Obj& w, const Matrix& f) {
    if (!v.cat.same_as(w.cat)) return false;
    if (f.rows() != w.dim || f.cols() != v.dim) return false;
    if (v.cat.kind == CatKind::Rep) {
        for (Index g : v.cat.group->generators())
            if (!(f * v.rho_at(g) == w.rho_at(g) * f)) return false;
        return true;
    }
    for (Index g = 0; g < v.cat.group->order(); ++g)
        if (!(f * v.proj_at(g) == w.proj_at(g) * f)) return false;
    return true;
}

Subspace hom_space(const Obj& v, const Obj& w) {
    if (!v.cat.same_as(w.cat)) throw MathError("hom_space: category mismatch");
    const Index ambient = w.dim * v.dim;
    if (v.cat.kind == CatKind::Rep) {
        Matrix constraints(0, ambient);
        for (Index g : v.cat.group->generators()) {
            // f rho_V(g) = rho_W(g) f, i.e. rho_W(g) f rho_V(g)^-1 = f
            const Matrix c = Matrix::kron(w.rho_at(g), v.rho_at(v.cat.group->inverse(g)).transpose())
                             - Matrix::identity(ambient);
            constraints = Matrix::vcat(constraints, c);
        }
        return kernel(constraints);
    }
    Matrix p(ambient, ambient);
    for (Index g = 0; g < v.cat.group->order(); ++g)
        p = p + Matrix::kron(w.proj_at(g), v.proj_at(g).transpose());
    return kernel(p - Matrix::identity(ambient));
}

Matrix hom_averaging_projector(const Obj& v, const Obj& w) {
    if (v.cat.kind != CatKind::Rep) throw MathError("averaging projector needs the representation backend");
    const Index ambient = w.dim * v.dim;
    Matrix sum(ambient, ambient);
    const Index n = v.cat.group->order();
    for (Index g = 0; g < n; ++g)
        sum = sum + Matrix::kron(w.rho_at(g), v.rho_at(v.cat.group->inverse(g)).transpose());
    return sum.scaled(Rational(1, n));
}

Index graded_component_dim(const Obj& v, Index g) {
    if (v.cat.kind != CatKind::Graded) throw MathError("component dims need the graded backend");
    Rational tr = 0;
    const Matrix& p = v.proj_at(g);
    for (Index i = 0; i < p.rows(); ++i) tr += p.at(i, i);
    if (tr.get_den() != 1) throw MathError("projector trace is not integral");
    return static_cast<Index>(tr.get_num().get_si());
}

} // namespace cyclo
