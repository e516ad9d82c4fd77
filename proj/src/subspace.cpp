#include "cyclotrace/subspace.hpp"

#include "cyclotrace/errors.hpp"

#include <set>

namespace cyclo {

Echelon row_reduce(const Matrix& m) {
    const Index nr = m.rows();
    const Index nc = m.cols();
    std::vector<std::map<Index, Rational>> rows(nr);
    std::vector<std::set<Index>> col_rows(nc);
    for (Index i = 0; i < nr; ++i) {
        rows[i] = m.row(i);
        for (const auto& [j, v] : rows[i]) col_rows[j].insert(i);
    }

    std::vector<char> pivoted(nr, 0);
    std::vector<std::pair<Index, Index>> pivots; // (row, col), col ascending

    for (Index c = 0; c < nc; ++c) {
        Index best = -1;
        std::size_t best_nnz = 0;
        for (Index r : col_rows[c]) {
            if (pivoted[r]) continue;
            if (best == -1 || rows[r].size() < best_nnz) {
                best = r;
                best_nnz = rows[r].size();
            }
        }
        if (best == -1) continue;
        pivoted[best] = 1;
        pivots.emplace_back(best, c);

        Rational lead = rows[best].at(c);
        if (lead != 1) {
            for (auto& [j, v] : rows[best]) v /= lead;
        }

        const std::vector<Index> touched(col_rows[c].begin(), col_rows[c].end());
        for (Index r : touched) {
            if (r == best) continue;
            const Rational factor = rows[r].at(c);
            for (const auto& [j, v] : rows[best]) {
                auto it = rows[r].find(j);
                if (it == rows[r].end()) {
                    rows[r].emplace(j, -factor * v);
                    col_rows[j].insert(r);
                } else {
                    it->second -= factor * v;
                    if (it->second == 0) {
                        rows[r].erase(it);
                        col_rows[j].erase(r);
                    }
                }
            }
        }
    }

    Echelon e;
    e.rank = static_cast<Index>(pivots.size());
    e.reduced = Matrix(e.rank, nc);
    for (Index k = 0; k < e.rank; ++k) {
        const auto& [r, c] = pivots[k];
        e.pivot_cols.push_back(c);
        for (const auto& [j, v] : rows[r]) e.reduced.set(k, j, v);
    }
    return e;
}

Subspace canonical_span(Index ambient, const Matrix& span) {
    if (span.rows() != ambient) throw MathError("span rows do not match ambient dimension");
    Subspace s;
    s.ambient = ambient;
    // transpose of the (unique) reduced row echelon form of the transpose:
    // pivot rows ascend, pivots are 1, pivot rows vanish in other columns
    s.basis = row_reduce(span.transpose()).reduced.transpose();
    return s;
}

Subspace kernel(const Matrix& m) {
    const Echelon e = row_reduce(m);
    const Index nc = m.cols();
    std::vector<char> is_pivot(nc, 0);
    for (Index c : e.pivot_cols) is_pivot[c] = 1;

    Matrix basis(nc, nc - e.rank);
    Index col = 0;
    for (Index f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        basis.set(f, col, 1);
        for (Index k = 0; k < e.rank; ++k) {
            const Rational& v = e.reduced.at(k, f);
            if (v != 0) basis.set(e.pivot_cols[k], col, -v);
        }
        ++col;
    }
    return canonical_span(nc, basis);
}

Subspace image(const Matrix& m) { return canonical_span(m.rows(), m); }

Subspace full_space(Index ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix::identity(ambient);
    return s;
}

Subspace zero_space(Index ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix(ambient, 0);
    return s;
}

std::vector<Index> pivot_rows(const Subspace& s) {
    std::vector<Index> res(s.dim(), -1);
    for (Index i = 0; i < s.basis.rows(); ++i)
        for (const auto& [j, v] : s.basis.row(i))
            if (res[j] == -1) res[j] = i;
    for (Index r : res)
        if (r == -1) throw MathError("zero column in subspace basis");
    return res;
}

namespace {

// Read off candidate coordinates from the pivot rows, then verify exactly.
bool try_coords(const Subspace& s, const Matrix& vectors, Matrix& out) {
    if (vectors.rows() != s.ambient) throw MathError("vector ambient mismatch");
    const auto pr = pivot_rows(s);
    Matrix x(s.dim(), vectors.cols());
    for (Index j = 0; j < s.dim(); ++j)
        for (const auto& [c, v] : vectors.row(pr[j])) x.set(j, c, v);
    if (!(s.basis * x == vectors)) return false;
    out = std::move(x);
    return true;
}

Matrix row_slice(const Matrix& m, Index first, Index count) {
    Matrix out(count, m.cols());
    for (Index i = 0; i < count; ++i)
        for (const auto& [j, v] : m.row(first + i)) out.set(i, j, v);
    return out;
}

} // namespace

Matrix coords_in(const Subspace& s, const Matrix& vectors) {
    Matrix x;
    if (!try_coords(s, vectors, x)) throw MathError("vector not contained in subspace");
    return x;
}

bool subspace_contains(const Subspace& s, const Matrix& vectors) {
    Matrix x;
    return try_coords(s, vectors, x);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw MathError("ambient mismatch in subspace_sum");
    return canonical_span(a.ambient, Matrix::hcat(a.basis, b.basis));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw MathError("ambient mismatch in subspace_intersect");
    // kernel of [A | B] gives A x = -B y; the intersection is spanned by A x.
    const Subspace k = kernel(Matrix::hcat(a.basis, b.basis));
    const Matrix xs = row_slice(k.basis, 0, a.dim());
    return canonical_span(a.ambient, a.basis * xs);
}

QuotientPresentation quotient(Index ambient, const Subspace& sub) {
    if (sub.ambient != ambient) throw MathError("ambient mismatch in quotient");
    const auto pr = pivot_rows(sub);
    std::vector<char> is_pivot(ambient, 0);
    for (Index r : pr) is_pivot[r] = 1;

    QuotientPresentation q;
    q.ambient = ambient;
    q.sub = sub;
    const Index qdim = ambient - sub.dim();
    q.projection = Matrix(qdim, ambient);
    q.section = Matrix(ambient, qdim);

    Index row = 0;
    for (Index f = 0; f < ambient; ++f) {
        if (is_pivot[f]) continue;
        q.section.set(f, row, 1);
        q.projection.set(row, f, 1);
        // subtract the sub-component determined by the pivot coordinates
        for (Index k = 0; k < sub.dim(); ++k) {
            const Rational& v = sub.basis.at(f, k);
            if (v != 0) q.projection.add_at(row, pr[k], -v);
        }
        ++row;
    }
    return q;
}

Index cohomology_at(const Matrix& d_in, const Matrix& d_out) {
    if (d_in.rows() != d_out.cols()) throw MathError("not a complex: shape mismatch");
    if (!(d_out * d_in).is_zero()) throw MathError("not a complex: composite differential is nonzero");
    const Index cycles = d_out.cols() - row_reduce(d_out).rank;
    const Index boundaries = row_reduce(d_in).rank;
    return cycles - boundaries;
}

} // namespace cyclo
