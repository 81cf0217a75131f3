#include <doctest.h>

#include "cardpoly/error.hpp"
#include "cardpoly/linalg.hpp"
#include "cardpoly/model.hpp"

#include <random>

using namespace cardpoly;

namespace {

RationalMatrix random_matrix(std::mt19937 &rng, int rows, int cols, int spread)
{
    std::uniform_int_distribution<int> num(-spread, spread), den(1, 4);
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m(r, c) = make_rational(num(rng), den(rng));
    return m;
}

// Low-rank matrix built as a product of random factors.
RationalMatrix product(const RationalMatrix &a, const RationalMatrix &b)
{
    RationalMatrix m(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Rational s = 0;
            for (int k = 0; k < a.cols(); ++k)
                s += a(i, k) * b(k, j);
            m(i, j) = s;
        }
    return m;
}

} // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidParameter);
    CHECK_THROWS_AS(parse_rational("x"), InvalidParameter);
    CHECK_THROWS_AS(make_rational(1, 0), InvalidParameter);
}

TEST_CASE("rank of basic matrices")
{
    RationalMatrix id(3, 3);
    for (int i = 0; i < 3; ++i)
        id(i, i) = 1;
    CHECK(rank(id) == 3);
    CHECK(rank(RationalMatrix(4, 5)) == 0);
    CHECK(rank(RationalMatrix(0, 0)) == 0);
}

TEST_CASE("rank equals rank of transpose and respects factorization")
{
    std::mt19937 rng(7);
    for (int t = 0; t < 60; ++t) {
        const int r = 1 + t % 6, c = 1 + (t * 5) % 7;
        auto m = random_matrix(rng, r, c, 5);
        CHECK(rank(m) == rank(m.transposed()));
        const int k = 1 + t % 3;
        auto low = product(random_matrix(rng, 6, k, 3), random_matrix(rng, k, 7, 3));
        CHECK(rank(low) <= k);
        CHECK(rank(low) == rank(low.transposed()));
    }
}

TEST_CASE("incremental row space agrees with Bareiss rank")
{
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        auto m = random_matrix(rng, 8, 6, t < 20 ? 3 : 1000000000);
        RowSpace rs(6);
        std::vector<RationalVector> rows;
        for (int r = 0; r < m.rows(); ++r) {
            rows.emplace_back(m.row(r).begin(), m.row(r).end());
            rs.add(m.row(r));
            CHECK(rs.rank() == rank(RationalMatrix::from_rows(rows)));
        }
    }
}

TEST_CASE("row space survives 64-bit overflow")
{
    RowSpace rs(3);
    const std::int64_t big = std::int64_t{1} << 61;
    std::vector<std::int64_t> a{big, 3, 0}, b{3, big, 1}, c{big - 1, big + 1, 2};
    CHECK(rs.add(std::span<const std::int64_t>(a)));
    CHECK(rs.add(std::span<const std::int64_t>(b)));
    RationalVector sum{Rational(big) + 3, Rational(big) + 3, 1};
    CHECK(rs.contains(sum));
    rs.add(std::span<const std::int64_t>(c));
    RationalMatrix m(3, 3);
    for (int j = 0; j < 3; ++j) {
        m(0, j) = Rational(a[static_cast<std::size_t>(j)]);
        m(1, j) = Rational(b[static_cast<std::size_t>(j)]);
        m(2, j) = Rational(c[static_cast<std::size_t>(j)]);
    }
    CHECK(rs.rank() == rank(m));
}

TEST_CASE("affine rank examples")
{
    CHECK(affine_rank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 2);
    CHECK(affine_rank({{Rational(1, 2), 3}}) == 0);
    CHECK_THROWS_AS(affine_rank({}), InvalidParameter);
    CHECK_THROWS_AS(affine_rank({{1, 2}, {1}}), InvalidParameter);

    // Points on 1'x = 2 plus one point on 1'x = 1 raise the affine rank by one.
    std::vector<RationalVector> pts{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    const int before = affine_rank(pts);
    pts.push_back({1, 0, 0, 0});
    CHECK(affine_rank(pts) == before + 1);
}

TEST_CASE("affine rank is translation invariant")
{
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto m = random_matrix(rng, 1 + t % 5, 4, 4);
        auto shift = random_matrix(rng, 1, 4, 9);
        std::vector<RationalVector> p, q;
        for (int r = 0; r < m.rows(); ++r) {
            RationalVector a(m.row(r).begin(), m.row(r).end()), b = a;
            for (int j = 0; j < 4; ++j)
                b[static_cast<std::size_t>(j)] += shift(0, j);
            p.push_back(a);
            q.push_back(b);
        }
        CHECK(affine_rank(p) == affine_rank(q));
    }
}

TEST_CASE("affine independence matches linear independence off the origin hyperplane")
{
    // Points on 1'x = k with k != 0: affinely independent iff linearly independent.
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int t = 0; t < 80; ++t) {
        const int k = 2;
        std::vector<RationalVector> pts;
        for (int r = 0; r < 4; ++r) {
            RationalVector v(6, 0);
            int placed = 0;
            for (int j = 0; j < 6 && placed < k; ++j)
                if (bit(rng)) {
                    v[static_cast<std::size_t>(j)] = 1;
                    ++placed;
                }
            for (int j = 5; placed < k; --j)
                if (v[static_cast<std::size_t>(j)] == 0) {
                    v[static_cast<std::size_t>(j)] = 1;
                    ++placed;
                }
            pts.push_back(v);
        }
        const int lin = rank(RationalMatrix::from_rows(pts));
        CHECK(affine_rank(pts) + 1 == lin);
    }
}

TEST_CASE("affine hull membership")
{
    std::vector<RationalVector> pts{{1, 0, 0}, {0, 1, 0}};
    CHECK(in_affine_hull({Rational(1, 2), Rational(1, 2), 0}, pts));
    CHECK(in_affine_hull({1, 0, 0}, pts));
    CHECK_FALSE(in_affine_hull({0, 0, 1}, pts));
    CHECK_FALSE(in_affine_hull({Rational(1, 2), 0, 0}, pts));
    CHECK_THROWS_AS(in_affine_hull({1, 0}, pts), InvalidParameter);
}

TEST_CASE("block matrix of Hamiltonian and 2-cycles has rank n^2-2n+2")
{
    // Rows (x, y) with loop variables y_i = 1 - x(out(i)): all Hamiltonian
    // cycles, the 2-cycle on {2,3} and the 2-cycles {1,i}.
    const int n = 5;
    auto g = Graph::complete_digraph(n);
    auto ham = enumerate_cycles(g, CardinalitySequence({n}));
    auto two = enumerate_cycles(g, CardinalitySequence({2}));
    auto lifted = [&](const IncidenceVector &x) {
        RationalVector row = x.to_rational();
        for (Node v = 1; v <= n; ++v) {
            int out = 0;
            for (ArcIndex a : g.out_arcs(v))
                out += x.contains(a);
            row.push_back(1 - out);
        }
        return row;
    };
    std::vector<RationalVector> rows;
    for (const auto &h : ham)
        rows.push_back(lifted(h));
    const int dn1 = rank(RationalMatrix::from_rows(rows));
    CHECK(dn1 == n * n - 3 * n + 2);
    for (const auto &t : two) {
        const auto &w = t.walk();
        if ((w[0] == 2 && w[1] == 3) || w[0] == 1)
            rows.push_back(lifted(t));
    }
    CHECK(rows.size() == ham.size() + n);
    CHECK(rank(RationalMatrix::from_rows(rows)) == n * n - 2 * n + 2);
}
