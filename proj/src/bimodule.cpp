#include "cyclotrace/bimodule.hpp"

#include "cyclotrace/errors.hpp"

#include <sstream>

namespace cyclo {

namespace {

Matrix identity_pow(Index d, Index k) {
    Index n = 1;
    for (Index i = 0; i < k; ++i) n *= d;
    return Matrix::identity(n);
}

} // namespace

CheckReport check_bimodule(const BimoduleData& s) {
    const Index d = s.dim();
    const Index a = s.algebra.dim();
    if (s.left.rows() != d || s.left.cols() != a * d) return {false, "left action shape mismatch"};
    if (s.right.rows() != d || s.right.cols() != d * a) return {false, "right action shape mismatch"};

    if (!is_morphism(tensor_obj(s.algebra.obj, s.obj), s.obj, s.left))
        return {false, "left action is not a morphism of the backend"};
    if (!is_morphism(tensor_obj(s.obj, s.algebra.obj), s.obj, s.right))
        return {false, "right action is not a morphism of the backend"};

    const Matrix ia = Matrix::identity(a);
    const Matrix is = Matrix::identity(d);

    // (ab)s = a(bs)
    if (!(s.left * Matrix::kron(s.algebra.mult, is) == s.left * Matrix::kron(ia, s.left)))
        return {false, "left action is not associative"};
    // s(ab) = (sa)b
    if (!(s.right * Matrix::kron(is, s.algebra.mult) == s.right * Matrix::kron(s.right, ia)))
        return {false, "right action is not associative"};
    // (as)b = a(sb)
    if (!(s.right * Matrix::kron(s.left, ia) == s.left * Matrix::kron(ia, s.right)))
        return {false, "left and right actions do not commute"};
    // unit acts as identity
    if (!(s.left * Matrix::kron(s.algebra.unit, is) == is)) return {false, "left unit law fails"};
    if (!(s.right * Matrix::kron(is, s.algebra.unit) == is)) return {false, "right unit law fails"};
    return {};
}

BimoduleData regular_bimodule(const AlgebraData& a) {
    BimoduleData s;
    s.algebra = a;
    s.obj = a.obj;
    s.left = a.mult;
    s.right = a.mult;
    return s;
}

FreeBimodule free_bimodule(const AlgebraData& a, const Obj& q, const Matrix& eps_q) {
    if (!is_morphism(q, unit_obj(a.obj.cat), eps_q))
        throw ConfigError("middle-factor augmentation is not a morphism to the unit object");
    if (row_reduce(eps_q).rank != 1)
        throw ConfigError("middle-factor augmentation is not surjective");

    const Index ad = a.dim();
    const Index qd = q.dim;
    const Matrix ia = Matrix::identity(ad);

    FreeBimodule out;
    out.bim.algebra = a;
    out.bim.obj = tensor_obj(tensor_obj(a.obj, q), a.obj);
    out.bim.left = Matrix::kron(a.mult, Matrix::identity(qd * ad));
    out.bim.right = Matrix::kron(Matrix::identity(ad * qd), a.mult);
    out.aug = a.mult * Matrix::kron(ia, Matrix::kron(eps_q, ia));

    const CheckReport rep = check_bimodule(out.bim);
    if (!rep.ok) throw MathError("free bimodule is broken: " + rep.violation);
    return out;
}

RelTensor bimodule_tensor(const BimoduleData& s, const BimoduleData& t) {
    const Index sd = s.dim();
    const Index td = t.dim();
    const Index ad = s.algebra.dim();

    // junction relation s.a (x) t - s (x) a.t on S (x) A (x) T
    const Matrix j = Matrix::kron(s.right, Matrix::identity(td))
                     - Matrix::kron(Matrix::identity(sd), t.left);
    const QuotientPresentation pres = quotient(sd * td, image(j));

    RelTensor out;
    out.pres = pres;
    out.bim.algebra = s.algebra;
    out.bim.obj = quotient_obj(tensor_obj(s.obj, t.obj), pres);

    const Matrix l_flat = Matrix::kron(s.left, Matrix::identity(td));
    const Matrix r_flat = Matrix::kron(Matrix::identity(sd), t.right);
    // the outer actions must descend: they carry the junction subspace into itself
    if (!(pres.projection * (l_flat * Matrix::kron(Matrix::identity(ad), pres.sub.basis))).is_zero())
        throw MathError("left action does not descend to the relative tensor product");
    if (!(pres.projection * (r_flat * Matrix::kron(pres.sub.basis, Matrix::identity(ad)))).is_zero())
        throw MathError("right action does not descend to the relative tensor product");
    out.bim.left = pres.projection * l_flat * Matrix::kron(Matrix::identity(ad), pres.section);
    out.bim.right = pres.projection * r_flat * Matrix::kron(pres.section, Matrix::identity(ad));
    return out;
}

RelativePower relative_power(const BimoduleData& p, Index k, Index budget) {
    if (k < 1) throw MathError("relative power needs k >= 1");
    const Index d = p.dim();
    const Index ad = p.algebra.dim();

    Index flat = 1;
    for (Index i = 0; i < k; ++i) {
        flat *= d;
        if (flat > budget) {
            std::ostringstream os;
            os << "dimension budget exceeded: " << d << "^" << k << " > " << budget;
            throw ConfigError(os.str());
        }
    }

    RelativePower out;
    out.k = k;

    // all adjacent junction relations inside P^{(x) k}
    Matrix span(flat, 0);
    for (Index t = 1; t < k; ++t) {
        Index before = 1, after = 1;
        for (Index i = 0; i < t - 1; ++i) before *= d;
        for (Index i = 0; i < k - t - 1; ++i) after *= d;
        const Matrix j =
            Matrix::kron(Matrix::identity(before),
                         Matrix::kron(Matrix::kron(p.right, Matrix::identity(d))
                                          - Matrix::kron(Matrix::identity(d), p.left),
                                      Matrix::identity(after)));
        span = Matrix::hcat(span, j);
    }
    out.pres = quotient(flat, image(span));

    const Obj flat_obj = tensor_power_obj(p.obj, k, budget);
    out.obj = quotient_obj(flat_obj, out.pres);

    const Matrix rest = identity_pow(d, k - 1);
    const Matrix l_flat = Matrix::kron(p.left, rest);
    const Matrix r_flat = Matrix::kron(rest, p.right);
    if (!(out.pres.projection
          * (l_flat * Matrix::kron(Matrix::identity(ad), out.pres.sub.basis)))
             .is_zero())
        throw MathError("left action does not descend to the relative power");
    if (!(out.pres.projection
          * (r_flat * Matrix::kron(out.pres.sub.basis, Matrix::identity(ad))))
             .is_zero())
        throw MathError("right action does not descend to the relative power");
    out.left = out.pres.projection * l_flat * Matrix::kron(Matrix::identity(ad), out.pres.section);
    out.right = out.pres.projection * r_flat * Matrix::kron(out.pres.section, Matrix::identity(ad));
    return out;
}

} // namespace cyclo
