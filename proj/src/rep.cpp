#include "cyclotrace/rep.hpp"

#include "cyclotrace/errors.hpp"

#include <sstream>

namespace cyclo {

Rep make_rep(GroupPtr group, std::vector<Matrix> matrices) {
    if (!group) throw MathError("null group");
    const Index n = group->order();
    if (static_cast<Index>(matrices.size()) != n)
        throw MathError("representation needs one matrix per group element");
    const Index d = matrices.empty() ? 0 : matrices[0].rows();
    for (const auto& m : matrices)
        if (m.rows() != d || m.cols() != d) throw MathError("representation matrices must be square of equal size");
    if (!(matrices[static_cast<std::size_t>(group->identity())] == Matrix::identity(d)))
        throw MathError("representation does not send the identity to id");
    for (Index g = 0; g < n; ++g)
        for (Index h = 0; h < n; ++h) {
            if (!(matrices[static_cast<std::size_t>(g)] * matrices[static_cast<std::size_t>(h)]
                  == matrices[static_cast<std::size_t>(group->mul(g, h))])) {
                std::ostringstream os;
                os << "representation is not a homomorphism at (" << g << "," << h << ")";
                throw MathError(os.str());
            }
        }
    Rep r;
    r.group = std::move(group);
    r.dim = d;
    r.matrices = std::move(matrices);
    return r;
}

Rep trivial_rep(GroupPtr group, Index dim) {
    std::vector<Matrix> mats(static_cast<std::size_t>(group->order()), Matrix::identity(dim));
    return make_rep(std::move(group), std::move(mats));
}

Rep regular_rep(GroupPtr group) {
    const Index n = group->order();
    std::vector<Matrix> mats;
    for (Index g = 0; g < n; ++g) {
        Matrix m(n, n);
        for (Index h = 0; h < n; ++h) m.set(group->mul(g, h), h, 1);
        mats.push_back(std::move(m));
    }
    return make_rep(std::move(group), std::move(mats));
}

Rep character_rep(GroupPtr group, const std::vector<Rational>& values) {
    const Index n = group->order();
    if (static_cast<Index>(values.size()) != n)
        throw ConfigError("character needs one value per group element");
    if (values[static_cast<std::size_t>(group->identity())] != 1)
        throw ConfigError("character value at the identity must be 1");
    for (Index g = 0; g < n; ++g)
        for (Index h = 0; h < n; ++h)
            if (values[static_cast<std::size_t>(g)] * values[static_cast<std::size_t>(h)]
                != values[static_cast<std::size_t>(group->mul(g, h))]) {
                std::ostringstream os;
                os << "character is not multiplicative at (" << g << "," << h << ")";
                throw ConfigError(os.str());
            }
    std::vector<Matrix> mats;
    for (Index g = 0; g < n; ++g) {
        Matrix m(1, 1);
        m.set(0, 0, values[static_cast<std::size_t>(g)]);
        mats.push_back(std::move(m));
    }
    return make_rep(std::move(group), std::move(mats));
}

Rep tensor_rep(const Rep& a, const Rep& b) {
    if (a.group != b.group && !(*a.group == *b.group)) throw MathError("tensor_rep: group mismatch");
    std::vector<Matrix> mats;
    for (Index g = 0; g < a.group->order(); ++g) mats.push_back(Matrix::kron(a.at(g), b.at(g)));
    return make_rep(a.group, std::move(mats));
}

Rep dual_rep(const Rep& a) {
    std::vector<Matrix> mats;
    for (Index g = 0; g < a.group->order(); ++g)
        mats.push_back(a.at(a.group->inverse(g)).transpose());
    return make_rep(a.group, std::move(mats));
}

Rep direct_sum_rep(const Rep& a, const Rep& b) {
    if (a.group != b.group && !(*a.group == *b.group)) throw MathError("direct_sum_rep: group mismatch");
    std::vector<Matrix> mats;
    for (Index g = 0; g < a.group->order(); ++g) {
        Matrix m(a.dim + b.dim, a.dim + b.dim);
        for (Index i = 0; i < a.dim; ++i)
            for (const auto& [j, v] : a.at(g).row(i)) m.set(i, j, v);
        for (Index i = 0; i < b.dim; ++i)
            for (const auto& [j, v] : b.at(g).row(i)) m.set(a.dim + i, a.dim + j, v);
        mats.push_back(std::move(m));
    }
    return make_rep(a.group, std::move(mats));
}

Index GradedSpace::total() const {
    Index t = 0;
    for (Index d : dims) t += d;
    return t;
}

Index GradedSpace::offset(Index g) const {
    if (g < 0 || g >= static_cast<Index>(dims.size())) throw MathError("degree out of range");
    Index t = 0;
    for (Index i = 0; i < g; ++i) t += dims[static_cast<std::size_t>(i)];
    return t;
}

Index GradedSpace::degree_of(Index i) const {
    Index t = 0;
    for (std::size_t g = 0; g < dims.size(); ++g) {
        t += dims[g];
        if (i < t) return static_cast<Index>(g);
    }
    throw MathError("total-space index out of range");
}

std::optional<std::pair<Index, Index>> equivariance_violation(const EquivariantGraded& m) {
    const Index n = m.group->order();
    const Index total = m.total();
    for (Index h = 0; h < n; ++h) {
        const Matrix& act = m.action[static_cast<std::size_t>(h)];
        if (act.rows() != total || act.cols() != total) throw MathError("action matrix shape mismatch");
        for (Index g = 0; g < n; ++g) {
            const Index src = m.grading.offset(g);
            const Index srcd = m.grading.component(g);
            const Index tgt = m.group->conjugate(h, g);
            const Index tgto = m.grading.offset(tgt);
            const Index tgtd = m.grading.component(tgt);
            for (Index col = src; col < src + srcd; ++col)
                for (Index row = 0; row < total; ++row)
                    if ((row < tgto || row >= tgto + tgtd) && act.at(row, col) != 0)
                        return std::make_pair(h, g);
        }
    }
    return std::nullopt;
}

} // namespace cyclo
