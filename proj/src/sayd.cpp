#include "cyclotrace/sayd.hpp"

#include "cyclotrace/errors.hpp"

#include <sstream>

namespace cyclo {

std::string SaydReport::message() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Ok: return "ok";
        case Kind::BadShape: return "bad shape: " + detail;
        case Kind::NotAction: return "not a group action: " + detail;
        case Kind::Crossing:
            os << "crossing violation: action of " << h << " leaves the degree-" << g
               << " component outside degree h g h^-1";
            return os.str();
        case Kind::Stability:
            os << "stability violation: " << g << " does not act as the identity on its own degree-"
               << g << " component";
            return os.str();
    }
    return detail;
}

SaydReport check_sayd(const SaydModule& m) {
    SaydReport r;
    if (!m.group) {
        r.kind = SaydReport::Kind::BadShape;
        r.detail = "missing group";
        return r;
    }
    const Index n = m.group->order();
    if (static_cast<Index>(m.grading.dims.size()) != n
        || static_cast<Index>(m.action.size()) != n) {
        r.kind = SaydReport::Kind::BadShape;
        r.detail = "needs one dimension and one action matrix per group element";
        return r;
    }
    const Index total = m.total();
    for (const Matrix& a : m.action)
        if (a.rows() != total || a.cols() != total) {
            r.kind = SaydReport::Kind::BadShape;
            r.detail = "action matrix shape mismatch";
            return r;
        }

    try {
        make_rep(m.group, m.action); // homomorphism + identity checks
    } catch (const MathError& e) {
        r.kind = SaydReport::Kind::NotAction;
        r.detail = e.what();
        return r;
    }

    if (auto witness = equivariance_violation(m)) {
        r.kind = SaydReport::Kind::Crossing;
        r.h = witness->first;
        r.g = witness->second;
        return r;
    }

    for (Index g = 0; g < n; ++g) {
        const Index off = m.grading.offset(g);
        const Index d = m.grading.component(g);
        const Matrix& act = m.action[static_cast<std::size_t>(g)];
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j)
                if (act.at(off + i, off + j) != Rational(i == j ? 1 : 0)) {
                    r.kind = SaydReport::Kind::Stability;
                    r.g = g;
                    return r;
                }
    }
    return r;
}

void require_sayd(const SaydModule& m, const std::string& what) {
    const SaydReport r = check_sayd(m);
    if (!r.ok()) throw ConfigError(what + ": " + r.message());
}

SaydModule sayd_from_rep(const Rep& v) {
    SaydModule m;
    m.group = v.group;
    m.grading.dims.assign(static_cast<std::size_t>(v.group->order()), 0);
    m.grading.dims[static_cast<std::size_t>(v.group->identity())] = v.dim;
    m.action = v.matrices;
    return m;
}

SaydModule sayd_adjoint(GroupPtr group) {
    const Index n = group->order();
    SaydModule m;
    m.group = group;
    m.grading.dims.assign(static_cast<std::size_t>(n), 1);
    for (Index h = 0; h < n; ++h) {
        Matrix a(n, n);
        for (Index g = 0; g < n; ++g) a.set(group->conjugate(h, g), g, 1);
        m.action.push_back(std::move(a));
    }
    return m;
}

SaydModule sayd_regular_at_identity(GroupPtr group) {
    const Rep reg = regular_rep(group);
    SaydModule m;
    m.group = group;
    m.grading.dims.assign(static_cast<std::size_t>(group->order()), 0);
    m.grading.dims[static_cast<std::size_t>(group->identity())] = group->order();
    m.action = reg.matrices;
    return m;
}

SaydModule sayd_from_modular_pair(GroupPtr group, const std::vector<Rational>& chi, Index x) {
    const Rep ch = character_rep(group, chi); // validates multiplicativity
    if (x < 0 || x >= group->order()) throw ConfigError("modular pair: base point out of range");
    for (Index h = 0; h < group->order(); ++h)
        if (group->conjugate(h, x) != x)
            throw ConfigError("modular pair: base point is not central");
    if (chi[static_cast<std::size_t>(x)] != 1)
        throw ConfigError(
            "modular pair rejected: chi(x) != 1, so x would act by a non-identity scalar on its "
            "own degree, violating stability");

    SaydModule m;
    m.group = group;
    m.grading.dims.assign(static_cast<std::size_t>(group->order()), 0);
    m.grading.dims[static_cast<std::size_t>(x)] = 1;
    m.action = ch.matrices;
    return m;
}

SaydModule sayd_dual(const SaydModule& m) {
    const Index n = m.group->order();
    const Index total = m.total();

    GradedSpace dual_grading;
    dual_grading.dims.assign(static_cast<std::size_t>(n), 0);
    for (Index g = 0; g < n; ++g)
        dual_grading.dims[static_cast<std::size_t>(g)] =
            m.grading.component(m.group->inverse(g));

    // relabeling that moves the dual of the old g^-1 component to degree g
    Matrix relabel(total, total);
    for (Index g = 0; g < n; ++g) {
        const Index src = m.grading.offset(m.group->inverse(g));
        const Index dst = dual_grading.offset(g);
        for (Index i = 0; i < dual_grading.component(g); ++i) relabel.set(dst + i, src + i, 1);
    }
    const Matrix relabel_t = relabel.transpose();

    SaydModule out;
    out.group = m.group;
    out.grading = std::move(dual_grading);
    for (Index h = 0; h < n; ++h) {
        const Matrix dual_act =
            m.action[static_cast<std::size_t>(m.group->inverse(h))].transpose();
        out.action.push_back(relabel * dual_act * relabel_t);
    }
    return out;
}

Rep total_action_rep(const SaydModule& m) { return make_rep(m.group, m.action); }

} // namespace cyclo
