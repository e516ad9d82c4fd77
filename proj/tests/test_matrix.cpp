#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cyclotrace/errors.hpp"
#include "cyclotrace/matrix.hpp"
#include "cyclotrace/subspace.hpp"

using namespace cyclo;

namespace {

Matrix random_matrix(std::mt19937_64& rng, Index rows, Index cols) {
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> keep(0, 2);
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            if (keep(rng) == 0) m.set(i, j, entry(rng));
    return m;
}

} // namespace

TEST_CASE("arithmetic basics") {
    const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    const Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
    CHECK(a * b == Matrix::from_rows({{2, 1}, {4, 3}}));
    CHECK(a + b == Matrix::from_rows({{1, 3}, {4, 4}}));
    CHECK(a - a == Matrix(2, 2));
    CHECK((a - a).is_zero());
    CHECK(a.scaled(ratio(1, 2)) == Matrix::from_rows({{ratio(1, 2), 1}, {ratio(3, 2), 2}}));
    CHECK(a.transpose() == Matrix::from_rows({{1, 3}, {2, 4}}));
    CHECK(Matrix::identity(3) * Matrix::identity(3) == Matrix::identity(3));
}

TEST_CASE("sparse storage drops explicit zeros") {
    Matrix m(2, 2);
    m.set(0, 0, 5);
    CHECK(m.nnz() == 1);
    m.set(0, 0, 0);
    CHECK(m.nnz() == 0);
    m.add_at(1, 1, ratio(1, 3));
    m.add_at(1, 1, ratio(-1, 3));
    CHECK(m.nnz() == 0);
    CHECK(m.is_zero());
}

TEST_CASE("kronecker product uses row major pair indexing") {
    const Matrix a = Matrix::from_rows({{1, 2}, {0, 1}});
    const Matrix b = Matrix::from_rows({{3, 0}, {0, 4}});
    const Matrix k = Matrix::kron(a, b);
    REQUIRE(k.rows() == 4);
    REQUIRE(k.cols() == 4);
    // entry ((ia,ib),(ja,jb)) lives at (ia*2+ib, ja*2+jb)
    CHECK(k.at(0, 0) == 3);
    CHECK(k.at(0, 2) == 6);
    CHECK(k.at(1, 3) == 8);
    CHECK(k.at(3, 3) == 4);
    CHECK(Matrix::kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
}

TEST_CASE("kron is functorial") {
    std::mt19937_64 rng(11);
    const Matrix a = random_matrix(rng, 2, 3);
    const Matrix b = random_matrix(rng, 3, 2);
    const Matrix c = random_matrix(rng, 3, 2);
    const Matrix d = random_matrix(rng, 2, 3);
    CHECK(Matrix::kron(a, c) * Matrix::kron(b, d) == Matrix::kron(a * b, c * d));
}

TEST_CASE("row reduce produces reduced echelon form") {
    const Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 2, 4}});
    const Echelon e = row_reduce(m);
    CHECK(e.rank == 2);
    REQUIRE(e.pivot_cols == std::vector<Index>{0, 2});
    CHECK(e.reduced.at(0, 0) == 1);
    CHECK(e.reduced.at(0, 1) == 2);
    CHECK(e.reduced.at(0, 2) == 0);
    CHECK(e.reduced.at(1, 2) == 1);
}

TEST_CASE("kernel of a rank one square matrix") {
    const Matrix m = Matrix::from_rows({{1, 1}, {1, 1}});
    const Subspace k = kernel(m);
    CHECK(k.dim() == 1);
    // canonical basis column is scaled so the pivot coordinate is 1
    CHECK((m * k.basis).is_zero());
    const Subspace expected = canonical_span(2, Matrix::from_rows({{1}, {-1}}));
    CHECK(k == expected);
}

TEST_CASE("image of a rank one matrix") {
    const Matrix m = Matrix::from_rows({{1, 2}, {2, 4}});
    const Subspace im = image(m);
    CHECK(im.dim() == 1);
    CHECK(im == canonical_span(2, Matrix::from_rows({{1}, {2}})));
}

TEST_CASE("canonical form is basis independent") {
    // same plane presented by two different spanning sets
    const Subspace a = canonical_span(3, Matrix::from_rows({{1, 0}, {0, 1}, {1, 1}}));
    const Subspace b =
        canonical_span(3, Matrix::from_rows({{2, 1}, {1, 1}, {3, 2}}));
    CHECK(a == b);
    CHECK(a.dim() == 2);
}

TEST_CASE("canonical form of random spans is stable under GL changes") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix span = random_matrix(rng, 6, 3);
        Matrix g(3, 3);
        // unipotent upper triangular change of spanning set, always invertible
        for (Index i = 0; i < 3; ++i) g.set(i, i, 1);
        g.set(0, 1, 2);
        g.set(1, 2, -3);
        const Subspace s1 = canonical_span(6, span);
        const Subspace s2 = canonical_span(6, span * g);
        CHECK(s1 == s2);
    }
}

TEST_CASE("rank nullity on random matrices") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix m = random_matrix(rng, 5, 7);
        CHECK(kernel(m).dim() + image(m).dim() == 7);
        CHECK((m * kernel(m).basis).is_zero());
    }
}

TEST_CASE("membership and coordinates") {
    const Subspace plane = canonical_span(3, Matrix::from_rows({{1, 0}, {0, 1}, {1, 1}}));
    CHECK(subspace_contains(plane, Matrix::from_rows({{2}, {3}, {5}})));
    CHECK_FALSE(subspace_contains(plane, Matrix::from_rows({{0}, {0}, {1}})));

    const Matrix x = coords_in(plane, Matrix::from_rows({{2}, {3}, {5}}));
    CHECK(plane.basis * x == Matrix::from_rows({{2}, {3}, {5}}));
    CHECK_THROWS_AS(coords_in(plane, Matrix::from_rows({{0}, {0}, {1}})), MathError);
}

TEST_CASE("sum and intersection") {
    const Subspace a = canonical_span(3, Matrix::from_rows({{1, 0}, {0, 1}, {0, 0}}));
    const Subspace b = canonical_span(3, Matrix::from_rows({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(subspace_sum(a, b).dim() == 3);
    const Subspace meet = subspace_intersect(a, b);
    CHECK(meet.dim() == 1);
    CHECK(subspace_contains(meet, Matrix::from_rows({{0}, {1}, {0}})));
}

TEST_CASE("intersection dimension formula on random subspaces") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        const Subspace a = image(random_matrix(rng, 5, 3));
        const Subspace b = image(random_matrix(rng, 5, 3));
        CHECK(subspace_sum(a, b).dim() + subspace_intersect(a, b).dim() == a.dim() + b.dim());
    }
}

TEST_CASE("quotient presentation") {
    const Subspace sub =
        canonical_span(3, Matrix::from_rows({{1, 0}, {1, 0}, {0, 1}}));
    const QuotientPresentation q = quotient(3, sub);
    CHECK(q.projection.rows() == 1);
    CHECK(q.projection.cols() == 3);
    CHECK(q.section.rows() == 3);
    CHECK(q.section.cols() == 1);
    // projection kills the subspace and splits the section
    CHECK((q.projection * sub.basis).is_zero());
    CHECK(q.projection * q.section == Matrix::identity(1));
}

TEST_CASE("quotient of random subspaces round trips") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        const Subspace sub = image(random_matrix(rng, 6, 3));
        const QuotientPresentation q = quotient(6, sub);
        CHECK(q.projection.rows() == 6 - sub.dim());
        CHECK((q.projection * sub.basis).is_zero());
        CHECK(q.projection * q.section == Matrix::identity(6 - sub.dim()));
        // section followed by projection is the identity on the quotient,
        // and 1 - section*projection lands in the subspace
        const Matrix defect = Matrix::identity(6) - q.section * q.projection;
        for (Index j = 0; j < 6; ++j)
            CHECK(subspace_contains(sub, defect.col_slice(j, 1)));
    }
}

TEST_CASE("cohomology of a small two step complex") {
    // 0 -> Q^2 --d_in--> Q^2 --d_out--> Q^2 with d_out d_in = 0
    const Matrix d_in = Matrix::from_rows({{1, 0}, {0, 0}});
    const Matrix d_out = Matrix::from_rows({{0, 0}, {0, 1}});
    CHECK(cohomology_at(d_in, d_out) == 0);
}

TEST_CASE("cohomology rejects non complexes") {
    const Matrix id = Matrix::identity(2);
    CHECK_THROWS_AS(cohomology_at(id, id), MathError);
}

TEST_CASE("hcat vcat col_slice") {
    const Matrix a = Matrix::from_rows({{1}, {2}});
    const Matrix b = Matrix::from_rows({{3}, {4}});
    const Matrix h = Matrix::hcat(a, b);
    CHECK(h == Matrix::from_rows({{1, 3}, {2, 4}}));
    const Matrix v = Matrix::vcat(a.transpose(), b.transpose());
    CHECK(v == Matrix::from_rows({{1, 2}, {3, 4}}));
    CHECK(h.col_slice(1, 1) == b);
}

TEST_CASE("rational parsing round trip") {
    CHECK(rational_from_string("3/4") == ratio(3, 4));
    CHECK(rational_from_string("-2") == Rational(-2));
    CHECK(rational_to_string(ratio(-6, 8)) == "-3/4");
    CHECK(rational_to_string(Rational(5)) == "5");
}
