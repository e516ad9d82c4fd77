#include "cyclotrace/group.hpp"

#include "cyclotrace/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cyclo {

FinGroup::FinGroup(std::vector<std::vector<Index>> table) : table_(std::move(table)) {
    order_ = static_cast<Index>(table_.size());
    if (order_ == 0) throw MathError("group axiom violated: empty table");
    validate();
    compute_identity_and_inverses();
    compute_generators();
}

void FinGroup::validate() const {
    const Index n = order_;
    for (Index g = 0; g < n; ++g) {
        if (static_cast<Index>(table_[g].size()) != n) {
            std::ostringstream os;
            os << "group axiom violated: row " << g << " has wrong length";
            throw MathError(os.str());
        }
        for (Index h = 0; h < n; ++h) {
            if (table_[g][h] < 0 || table_[g][h] >= n) {
                std::ostringstream os;
                os << "group axiom violated: product of " << g << " and " << h
                   << " is out of range";
                throw MathError(os.str());
            }
        }
    }
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                    std::ostringstream os;
                    os << "group axiom violated: associativity fails at (" << a << "," << b
                       << "," << c << ")";
                    throw MathError(os.str());
                }
}

void FinGroup::compute_identity_and_inverses() {
    const Index n = order_;
    Index e = -1;
    for (Index cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (Index g = 0; g < n && ok; ++g)
            ok = table_[cand][g] == g && table_[g][cand] == g;
        if (ok) {
            e = cand;
            break;
        }
    }
    if (e == -1) throw MathError("group axiom violated: no identity element");
    identity_ = e;

    inverse_.assign(n, -1);
    for (Index g = 0; g < n; ++g) {
        for (Index h = 0; h < n; ++h)
            if (table_[g][h] == e && table_[h][g] == e) {
                inverse_[g] = h;
                break;
            }
        if (inverse_[g] == -1) {
            std::ostringstream os;
            os << "group axiom violated: no inverse for " << g;
            throw MathError(os.str());
        }
    }
}

void FinGroup::compute_generators() {
    std::set<Index> closed = {identity_};
    for (Index g = 0; g < order_; ++g) {
        if (closed.count(g)) continue;
        generators_.push_back(g);
        // close under multiplication
        std::vector<Index> frontier(closed.begin(), closed.end());
        frontier.push_back(g);
        closed.insert(g);
        while (!frontier.empty()) {
            Index x = frontier.back();
            frontier.pop_back();
            for (Index y : std::set<Index>(closed)) {
                for (Index z : {table_[x][y], table_[y][x]}) {
                    if (!closed.count(z)) {
                        closed.insert(z);
                        frontier.push_back(z);
                    }
                }
            }
        }
    }
}

Index FinGroup::mul(Index g, Index h) const {
    if (g < 0 || g >= order_ || h < 0 || h >= order_) throw MathError("group element out of range");
    return table_[g][h];
}

Index FinGroup::inverse(Index g) const {
    if (g < 0 || g >= order_) throw MathError("group element out of range");
    return inverse_[g];
}

Index FinGroup::conjugate(Index h, Index g) const { return mul(mul(h, g), inverse(h)); }

bool FinGroup::is_abelian() const {
    for (Index g = 0; g < order_; ++g)
        for (Index h = g + 1; h < order_; ++h)
            if (table_[g][h] != table_[h][g]) return false;
    return true;
}

FinGroup cyclic_group(Index n) {
    if (n <= 0) throw ConfigError("cyclic group order must be positive");
    std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return FinGroup(std::move(table));
}

FinGroup symmetric_group(Index n) {
    if (n <= 0) throw ConfigError("symmetric group degree must be positive");
    std::vector<std::vector<Index>> perms;
    std::vector<Index> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    const Index m = static_cast<Index>(perms.size());
    auto find = [&](const std::vector<Index>& q) {
        return static_cast<Index>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<Index>> table(m, std::vector<Index>(m));
    for (Index a = 0; a < m; ++a)
        for (Index b = 0; b < m; ++b) {
            std::vector<Index> q(n);
            for (Index i = 0; i < n; ++i) q[i] = perms[a][perms[b][i]];
            table[a][b] = find(q);
        }
    return FinGroup(std::move(table));
}

} // namespace cyclo
