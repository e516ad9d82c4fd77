#include "cyclotrace/cyclic.hpp"

#include "cyclotrace/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cyclo {

std::vector<Index> PrecocyclicObject::level_dims() const {
    std::vector<Index> out;
    for (const auto& s : spaces) out.push_back(s.dim());
    return out;
}

namespace {

Index pow_checked(Index base, Index exp, Index budget, const char* what) {
    Index v = 1;
    for (Index i = 0; i < exp; ++i) {
        v *= base;
        if (v > budget) {
            std::ostringstream os;
            os << "dimension budget exceeded while sizing " << what << ": " << base << "^" << exp
               << " > " << budget;
            throw ConfigError(os.str());
        }
    }
    return v;
}

Matrix matrix_pow(const Matrix& m, Index k) {
    Matrix acc = Matrix::identity(1);
    for (Index i = 0; i < k; ++i) acc = Matrix::kron(acc, m);
    return acc;
}

// P^{(x) slots} -> P^{(x) slots-1}: apply the augmentation at slot i and
// absorb the resulting algebra factor into a neighboring slot.
Matrix flat_aug_absorb(const BimoduleData& p, const Matrix& aug, Index slots, Index i) {
    const Index d = p.dim();
    auto idn = [&](Index k) {
        Index n = 1;
        for (Index t = 0; t < k; ++t) n *= d;
        return Matrix::identity(n);
    };
    if (i == 0) return Matrix::kron(p.left * Matrix::kron(aug, Matrix::identity(d)), idn(slots - 2));
    return Matrix::kron(idn(i - 1),
                        Matrix::kron(p.right * Matrix::kron(Matrix::identity(d), aug),
                                     idn(slots - 1 - i)));
}

} // namespace

PrecocyclicObject build_algebra_cocyclic(const Contratrace& f, const AlgebraData& a, Index top,
                                         Index budget) {
    if (top < 1) throw ConfigError("max degree must be at least 1");
    const Index ad = a.dim();
    const Index md = f.coeff_dim();
    pow_checked(ad, top + 1, budget / std::max<Index>(md, 1), "the trace tower");

    const CheckReport rep = check_algebra(a);
    if (!rep.ok) throw ConfigError("algebra rejected: " + rep.violation);

    PrecocyclicObject c;
    c.top = top;
    c.has_codegeneracies = true;

    std::vector<Obj> powers; // A^{(x) n}, n = 0..top+1
    powers.push_back(unit_obj(a.obj.cat));
    for (Index n = 1; n <= top + 1; ++n) powers.push_back(tensor_obj(powers.back(), a.obj));

    for (Index n = 0; n <= top; ++n)
        c.spaces.push_back(trace_space(f, powers[static_cast<std::size_t>(n + 1)]));

    for (Index n = 0; n <= top; ++n) {
        // tau_n through the flip of A against A^{(x) n}
        c.cyclic.push_back(trace_flip(f, a.obj, powers[static_cast<std::size_t>(n)],
                                      c.spaces[static_cast<std::size_t>(n)],
                                      c.spaces[static_cast<std::size_t>(n)]));
    }

    for (Index n = 0; n + 1 <= top; ++n) {
        std::vector<Matrix> row;
        for (Index i = 0; i <= n; ++i) {
            // multiply slots i, i+1 of A^{(x) n+2}
            Index before = 1, after = 1;
            for (Index t = 0; t < i; ++t) before *= ad;
            for (Index t = 0; t < n - i; ++t) after *= ad;
            const Matrix mu = Matrix::kron(Matrix::identity(before),
                                           Matrix::kron(a.mult, Matrix::identity(after)));
            row.push_back(trace_map(f, powers[static_cast<std::size_t>(n + 2)],
                                    powers[static_cast<std::size_t>(n + 1)], mu,
                                    c.spaces[static_cast<std::size_t>(n)],
                                    c.spaces[static_cast<std::size_t>(n + 1)]));
        }
        // the wraparound coface is the flip after the zeroth coface
        row.push_back(c.cyclic[static_cast<std::size_t>(n + 1)] * row[0]);
        c.cofaces.push_back(std::move(row));

        std::vector<Matrix> srow;
        for (Index j = 0; j <= n; ++j) {
            // insert the unit after slot j of A^{(x) n+1}
            Index before = 1, after = 1;
            for (Index t = 0; t < j + 1; ++t) before *= ad;
            for (Index t = 0; t < n - j; ++t) after *= ad;
            const Matrix ins = Matrix::kron(Matrix::identity(before),
                                            Matrix::kron(a.unit, Matrix::identity(after)));
            srow.push_back(trace_map(f, powers[static_cast<std::size_t>(n + 1)],
                                     powers[static_cast<std::size_t>(n + 2)], ins,
                                     c.spaces[static_cast<std::size_t>(n + 1)],
                                     c.spaces[static_cast<std::size_t>(n)]));
        }
        c.codegeneracies.push_back(std::move(srow));
    }
    return c;
}

AdmissiblePair canonical_pair(const AlgebraData& a) {
    const FreeBimodule fb = free_bimodule(a, unit_obj(a.obj.cat), Matrix::identity(1));
    return {fb.bim, fb.aug, "canonical"};
}

AdmissiblePair free_pair(const AlgebraData& a, const Obj& q, const Matrix& eps_q,
                         const std::string& label) {
    const FreeBimodule fb = free_bimodule(a, q, eps_q);
    return {fb.bim, fb.aug, "free(" + label + ")"};
}

void verify_admissible(const AdmissiblePair& pair, Index budget) {
    const AlgebraData& a = pair.p.algebra;
    const CheckReport rep = check_bimodule(pair.p);
    if (!rep.ok) throw MathError("admissible pair: " + rep.violation);

    if (!is_morphism(pair.p.obj, a.obj, pair.aug))
        throw MathError("admissible pair: augmentation is not a morphism of the backend");
    const Matrix ia = Matrix::identity(a.dim());
    if (!(pair.aug * pair.p.left == a.mult * Matrix::kron(ia, pair.aug)))
        throw MathError("admissible pair: augmentation does not respect the left action");
    if (!(pair.aug * pair.p.right == a.mult * Matrix::kron(pair.aug, ia)))
        throw MathError("admissible pair: augmentation does not respect the right action");

    if (row_reduce(pair.aug).rank != a.dim())
        throw MathError("admissible pair: augmentation is not surjective");

    const RelativePower r2 = relative_power(pair.p, 2, budget);
    const Matrix diff = (flat_aug_absorb(pair.p, pair.aug, 2, 0)
                         - flat_aug_absorb(pair.p, pair.aug, 2, 1))
                        * r2.pres.section;
    if (!(image(diff) == kernel(pair.aug)))
        throw MathError("admissible pair: the difference image does not equal the augmentation kernel");
}

PrecocyclicObject build_pair_precocyclic(const Contratrace& f, const AdmissiblePair& pair,
                                         Index top, Index budget) {
    if (top < 1) throw ConfigError("max degree must be at least 1");
    const Index pd = pair.p.dim();
    const Index md = f.coeff_dim();
    pow_checked(pd, top + 1, budget / std::max<Index>(md, 1), "the resolution tower");
    verify_admissible(pair, budget);

    PrecocyclicObject c;
    c.top = top;
    c.has_codegeneracies = false;

    std::vector<RelativePower> rel; // P^{(x)_A k}, k = 1..top+1
    for (Index k = 1; k <= top + 1; ++k) rel.push_back(relative_power(pair.p, k, budget));
    auto relk = [&](Index k) -> const RelativePower& { return rel[static_cast<std::size_t>(k - 1)]; };

    for (Index n = 0; n <= top; ++n) {
        BimoduleData level;
        level.algebra = pair.p.algebra;
        level.obj = relk(n + 1).obj;
        level.left = relk(n + 1).left;
        level.right = relk(n + 1).right;
        c.spaces.push_back(lifted_space(f, level));
    }

    std::vector<Obj> powers; // plain P^{(x) n}, n = 0..top
    powers.push_back(unit_obj(pair.p.obj.cat));
    for (Index n = 1; n <= top; ++n) powers.push_back(tensor_obj(powers.back(), pair.p.obj));

    for (Index n = 0; n <= top; ++n) {
        const RelativePower& r = relk(n + 1);
        // lift to the flat power, flip there, push back down
        const Matrix lifted = functional_pullback(md, r.pres.projection)
                              * c.spaces[static_cast<std::size_t>(n)].basis;
        const Matrix flipped =
            trace_flip_ambient(f, pair.p.obj, powers[static_cast<std::size_t>(n)]) * lifted;
        if (!(functional_pullback(md, r.pres.sub.basis) * flipped).is_zero())
            throw MathError("cyclic operator is not well defined on the presented relative power");
        const Matrix pushed = functional_pullback(md, r.pres.section) * flipped;
        c.cyclic.push_back(coords_in(c.spaces[static_cast<std::size_t>(n)], pushed));
    }

    for (Index n = 0; n + 1 <= top; ++n) {
        const RelativePower& src = relk(n + 2);
        const RelativePower& tgt = relk(n + 1);
        std::vector<Matrix> row;
        for (Index i = 0; i <= n + 1; ++i) {
            const Matrix flat = flat_aug_absorb(pair.p, pair.aug, n + 2, i);
            if (!(tgt.pres.projection * (flat * src.pres.sub.basis)).is_zero())
                throw MathError("coface does not descend to the relative power");
            const Matrix down = tgt.pres.projection * flat * src.pres.section;
            const Matrix pulled = functional_pullback(md, down)
                                  * c.spaces[static_cast<std::size_t>(n)].basis;
            row.push_back(coords_in(c.spaces[static_cast<std::size_t>(n + 1)], pulled));
        }
        c.cofaces.push_back(std::move(row));
    }
    return c;
}

CheckOutcome check_precocyclic(const PrecocyclicObject& c) {
    const Index top = c.top;
    auto fail = [](const std::string& s) { return CheckOutcome{false, s}; };

    for (Index n = 0; n + 2 <= top; ++n) {
        const auto& lo = c.cofaces[static_cast<std::size_t>(n)];
        const auto& hi = c.cofaces[static_cast<std::size_t>(n + 1)];
        for (Index i = 0; i <= n + 2; ++i)
            for (Index j = i + 1; j <= n + 2; ++j)
                if (!(hi[static_cast<std::size_t>(j)] * lo[static_cast<std::size_t>(i)]
                      == hi[static_cast<std::size_t>(i)] * lo[static_cast<std::size_t>(j - 1)])) {
                    std::ostringstream os;
                    os << "coface relation delta_j delta_i = delta_i delta_(j-1) fails at n=" << n
                       << " i=" << i << " j=" << j;
                    return fail(os.str());
                }
    }

    for (Index n = 0; n + 1 <= top; ++n) {
        const auto& row = c.cofaces[static_cast<std::size_t>(n)];
        const Matrix& tau_hi = c.cyclic[static_cast<std::size_t>(n + 1)];
        const Matrix& tau_lo = c.cyclic[static_cast<std::size_t>(n)];
        for (Index i = 1; i <= n + 1; ++i)
            if (!(tau_hi * row[static_cast<std::size_t>(i)]
                  == row[static_cast<std::size_t>(i - 1)] * tau_lo)) {
                std::ostringstream os;
                os << "cyclic-coface relation tau delta_i = delta_(i-1) tau fails at n=" << n
                   << " i=" << i;
                return fail(os.str());
            }
        if (!(tau_hi * row[0] == row[static_cast<std::size_t>(n + 1)])) {
            std::ostringstream os;
            os << "wraparound relation tau delta_0 = delta_(n+1) fails at n=" << n;
            return fail(os.str());
        }
    }

    for (Index n = 0; n <= top; ++n) {
        const Matrix& tau = c.cyclic[static_cast<std::size_t>(n)];
        Matrix acc = Matrix::identity(tau.rows());
        for (Index k = 0; k <= n; ++k) acc = tau * acc;
        if (!(acc == Matrix::identity(tau.rows()))) {
            std::ostringstream os;
            os << "cyclic order relation tau^(n+1) = id fails at n=" << n;
            return fail(os.str());
        }
    }

    if (!c.has_codegeneracies) return {};

    for (Index n = 0; n + 2 <= top; ++n) {
        const auto& lo = c.codegeneracies[static_cast<std::size_t>(n)];      // C^{n+1} -> C^n
        const auto& hi = c.codegeneracies[static_cast<std::size_t>(n + 1)];  // C^{n+2} -> C^{n+1}
        for (Index i = 0; i <= n; ++i)
            for (Index j = i; j <= n; ++j)
                if (!(lo[static_cast<std::size_t>(j)] * hi[static_cast<std::size_t>(i)]
                      == lo[static_cast<std::size_t>(i)] * hi[static_cast<std::size_t>(j + 1)])) {
                    std::ostringstream os;
                    os << "codegeneracy relation sigma_j sigma_i = sigma_i sigma_(j+1) fails at n="
                       << n << " i=" << i << " j=" << j;
                    return fail(os.str());
                }
    }

    for (Index n = 0; n + 1 <= top; ++n) {
        const auto& sig = c.codegeneracies[static_cast<std::size_t>(n)]; // sigma_j : C^{n+1} -> C^n
        const auto& del = c.cofaces[static_cast<std::size_t>(n)];        // delta_i : C^n -> C^{n+1}
        for (Index j = 0; j <= n; ++j)
            for (Index i = 0; i <= n + 1; ++i) {
                const Matrix comp = sig[static_cast<std::size_t>(j)] * del[static_cast<std::size_t>(i)];
                Matrix expect;
                if (i == j || i == j + 1) {
                    expect = Matrix::identity(comp.rows());
                } else if (i < j) {
                    expect = c.cofaces[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)]
                             * c.codegeneracies[static_cast<std::size_t>(n - 1)]
                                               [static_cast<std::size_t>(j - 1)];
                } else {
                    expect = c.cofaces[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i - 1)]
                             * c.codegeneracies[static_cast<std::size_t>(n - 1)]
                                               [static_cast<std::size_t>(j)];
                }
                if (!(comp == expect)) {
                    std::ostringstream os;
                    os << "mixed simplicial relation fails at n=" << n << " i=" << i << " j=" << j;
                    return fail(os.str());
                }
            }
    }

    for (Index n = 0; n + 1 <= top; ++n) {
        const auto& sig = c.codegeneracies[static_cast<std::size_t>(n)];
        const Matrix& tau_lo = c.cyclic[static_cast<std::size_t>(n)];
        const Matrix& tau_hi = c.cyclic[static_cast<std::size_t>(n + 1)];
        for (Index i = 1; i <= n; ++i)
            if (!(tau_lo * sig[static_cast<std::size_t>(i)]
                  == sig[static_cast<std::size_t>(i - 1)] * tau_hi)) {
                std::ostringstream os;
                os << "cyclic-codegeneracy relation tau sigma_i = sigma_(i-1) tau fails at n=" << n
                   << " i=" << i;
                return fail(os.str());
            }
        if (!(tau_lo * sig[0] == sig[static_cast<std::size_t>(n)] * tau_hi * tau_hi)) {
            std::ostringstream os;
            os << "cyclic-codegeneracy wraparound tau sigma_0 = sigma_n tau^2 fails at n=" << n;
            return fail(os.str());
        }
    }

    return {};
}

namespace {

Matrix total_differential(const PrecocyclicObject& c, Index n) {
    const auto& row = c.cofaces[static_cast<std::size_t>(n)];
    Matrix b = row[0];
    for (Index i = 1; i < static_cast<Index>(row.size()); ++i) {
        b = i % 2 == 0 ? b + row[static_cast<std::size_t>(i)] : b - row[static_cast<std::size_t>(i)];
    }
    return b;
}

} // namespace

std::vector<Index> hochschild_dims(const PrecocyclicObject& c) {
    std::vector<Matrix> b;
    for (Index n = 0; n + 1 <= c.top; ++n) b.push_back(total_differential(c, n));
    std::vector<Index> out;
    for (Index n = 0; n + 1 <= c.top; ++n) {
        const Matrix d_in =
            n == 0 ? Matrix(c.spaces[0].dim(), 0) : b[static_cast<std::size_t>(n - 1)];
        out.push_back(cohomology_at(d_in, b[static_cast<std::size_t>(n)]));
    }
    return out;
}

std::vector<Index> cyclic_dims(const PrecocyclicObject& c) {
    // invariants of lambda_n = (-1)^n tau_n, then the restricted differential
    std::vector<Subspace> inv;
    for (Index n = 0; n <= c.top; ++n) {
        const Matrix& tau = c.cyclic[static_cast<std::size_t>(n)];
        const Matrix lambda = n % 2 == 0 ? tau : tau.scaled(-1);
        inv.push_back(kernel(Matrix::identity(tau.rows()) - lambda));
    }
    std::vector<Matrix> restricted;
    for (Index n = 0; n + 1 <= c.top; ++n) {
        const Matrix b = total_differential(c, n);
        const Matrix moved = b * inv[static_cast<std::size_t>(n)].basis;
        if (!subspace_contains(inv[static_cast<std::size_t>(n + 1)], moved))
            throw MathError("differential does not preserve the cyclic-invariant subcomplex");
        restricted.push_back(coords_in(inv[static_cast<std::size_t>(n + 1)], moved));
    }
    std::vector<Index> out;
    for (Index n = 0; n + 1 <= c.top; ++n) {
        const Matrix d_in =
            n == 0 ? Matrix(inv[0].dim(), 0) : restricted[static_cast<std::size_t>(n - 1)];
        out.push_back(cohomology_at(d_in, restricted[static_cast<std::size_t>(n)]));
    }
    return out;
}

CheckOutcome homotopy_check(const HomotopyData& data, Index top, Index budget) {
    auto fail = [](const std::string& s) { return CheckOutcome{false, s}; };

    if (!(data.p.algebra.mult == data.q.algebra.mult)
        || !(data.p.algebra.unit == data.q.algebra.unit))
        return fail("the two bimodules live over different algebras");
    const AlgebraData& a = data.p.algebra;
    const Index ia_dim = a.dim();
    const Matrix ia = Matrix::identity(ia_dim);

    for (const auto* bm : {&data.p, &data.q}) {
        const CheckReport rep = check_bimodule(*bm);
        if (!rep.ok) return fail(rep.violation);
    }

    auto is_bimodule_map = [&](const BimoduleData& src, const BimoduleData& dst, const Matrix& m) {
        return is_morphism(src.obj, dst.obj, m)
               && m * src.left == dst.left * Matrix::kron(ia, m)
               && m * src.right == dst.right * Matrix::kron(m, ia);
    };

    const BimoduleData reg = regular_bimodule(a);
    if (!is_bimodule_map(data.p, reg, data.d_p)) return fail("d_P is not a bimodule map");
    if (!is_bimodule_map(data.q, reg, data.d_q)) return fail("d_Q is not a bimodule map");
    if (!is_bimodule_map(data.p, data.q, data.f)) return fail("f is not a bimodule map");
    if (!is_bimodule_map(data.p, data.q, data.g)) return fail("g is not a bimodule map");
    if (!(data.d_q * data.f == data.d_p)) return fail("d_Q f = d_P fails");
    if (!(data.d_q * data.g == data.d_p)) return fail("d_Q g = d_P fails");

    const RelativePower q2 = relative_power(data.q, 2, budget);
    BimoduleData q2bim;
    q2bim.algebra = a;
    q2bim.obj = q2.obj;
    q2bim.left = q2.left;
    q2bim.right = q2.right;
    if (!is_bimodule_map(data.p, q2bim, data.h)) return fail("h is not a bimodule map");

    const Matrix diff2 = (flat_aug_absorb(data.q, data.d_q, 2, 0)
                          - flat_aug_absorb(data.q, data.d_q, 2, 1))
                         * q2.pres.section;
    if (!(diff2 * data.h == data.g - data.f)) return fail("(d (x) id - id (x) d) h = g - f fails");

    // flat powers and their presentations
    std::vector<RelativePower> rp, rq;
    for (Index k = 1; k <= top + 1; ++k) rp.push_back(relative_power(data.p, k, budget));
    for (Index k = 1; k <= top + 2; ++k) rq.push_back(relative_power(data.q, k, budget));
    auto rpk = [&](Index k) -> const RelativePower& { return rp[static_cast<std::size_t>(k - 1)]; };
    auto rqk = [&](Index k) -> const RelativePower& { return rq[static_cast<std::size_t>(k - 1)]; };

    const Matrix h_flat = q2.pres.section * data.h; // representative P -> Q (x) Q

    for (Index n = 0; n <= top; ++n) {
        const Matrix f_pow = matrix_pow(data.f, n + 1);
        const Matrix g_pow = matrix_pow(data.g, n + 1);
        const Matrix f_level = rqk(n + 1).pres.projection * f_pow * rpk(n + 1).pres.section;
        const Matrix g_level = rqk(n + 1).pres.projection * g_pow * rpk(n + 1).pres.section;

        Matrix h_flat_sum(rqk(n + 2).pres.ambient, rpk(n + 1).pres.ambient);
        for (Index i = 0; i <= n; ++i) {
            const Matrix term = Matrix::kron(matrix_pow(data.f, i),
                                             Matrix::kron(h_flat, matrix_pow(data.g, n - i)));
            h_flat_sum = i % 2 == 0 ? h_flat_sum + term : h_flat_sum - term;
        }
        const Matrix h_level = rqk(n + 2).pres.projection * h_flat_sum * rpk(n + 1).pres.section;

        // homological differentials with n+2 resp. n+1 terms
        auto boundary = [&](const BimoduleData& bm, const Matrix& aug,
                            const RelativePower& src, const RelativePower& tgt,
                            Index slots) {
            Matrix d(tgt.pres.projection.rows(), src.pres.section.cols());
            for (Index i = 0; i < slots; ++i) {
                const Matrix flat = flat_aug_absorb(bm, aug, slots, i);
                const Matrix term = tgt.pres.projection * flat * src.pres.section;
                d = i % 2 == 0 ? d + term : d - term;
            }
            return d;
        };

        const Matrix dq = boundary(data.q, data.d_q, rqk(n + 2), rqk(n + 1), n + 2);
        Matrix lhs = dq * h_level;
        if (n > 0) {
            Matrix h_prev_sum(rqk(n + 1).pres.ambient, rpk(n).pres.ambient);
            for (Index i = 0; i <= n - 1; ++i) {
                const Matrix term = Matrix::kron(matrix_pow(data.f, i),
                                                 Matrix::kron(h_flat, matrix_pow(data.g, n - 1 - i)));
                h_prev_sum = i % 2 == 0 ? h_prev_sum + term : h_prev_sum - term;
            }
            const Matrix h_prev = rqk(n + 1).pres.projection * h_prev_sum * rpk(n).pres.section;
            const Matrix dp = boundary(data.p, data.d_p, rpk(n + 1), rpk(n), n + 1);
            lhs = lhs + h_prev * dp;
        }
        if (!(lhs == g_level - f_level)) {
            std::ostringstream os;
            os << "homotopy identity fails at n=" << n;
            return fail(os.str());
        }
    }
    return {};
}

} // namespace cyclo
