#include <doctest.h>

#include "cardpoly/error.hpp"
#include "cardpoly/generators.hpp"
#include "cardpoly/solver.hpp"

#include <functional>
#include <random>

using namespace cardpoly;

namespace {

LinearInequality row(std::vector<Rational> coeffs, Sense sense, Rational rhs)
{
    LinearInequality ineq;
    ineq.coeffs = std::move(coeffs);
    ineq.sense = sense;
    ineq.rhs = std::move(rhs);
    return ineq;
}

/// Independent optimum: walk every simple path/cycle by DFS over weights.
Rational dfs_optimum(const Instance &in)
{
    const Graph g = Graph::for_kind(in.kind, in.n);
    std::optional<Rational> best;
    const bool path = in.kind == PolytopeKind::Path;
    std::vector<bool> used(static_cast<std::size_t>(g.last_node()) + 1, false);
    auto better = [&](const Rational &v) {
        if (!best || (in.objective == Objective::Minimize ? v < *best : v > *best))
            best = v;
    };
    std::function<void(Node, Node, int, Rational)> go = [&](Node start, Node v, int len,
                                                            Rational value) {
        for (ArcIndex a : g.out_arcs(v)) {
            const Node w = g.arc(a).head;
            const Rational next = value + in.weights[static_cast<std::size_t>(a)];
            if ((path && w == g.n()) || (!path && w == start)) {
                if (in.c.contains(len + 1))
                    better(next);
                continue;
            }
            if (used[static_cast<std::size_t>(w)] || (!path && w < start))
                continue;
            used[static_cast<std::size_t>(w)] = true;
            go(start, w, len + 1, next);
            used[static_cast<std::size_t>(w)] = false;
        }
    };
    for (Node s : path ? std::vector<Node>{0} : g.nodes()) {
        used[static_cast<std::size_t>(s)] = true;
        go(s, s, 0, 0);
        used[static_cast<std::size_t>(s)] = false;
    }
    return *best;
}

Instance random_instance(PolytopeKind kind, int n, std::mt19937 &rng)
{
    Instance in;
    in.kind = kind;
    in.n = n;
    std::vector<int> c;
    while (c.size() < 2) {
        c.clear();
        for (int k = 2; k <= n; ++k)
            if (rng() % 2)
                c.push_back(k);
    }
    in.c = CardinalitySequence(c);
    const Graph g = Graph::for_kind(kind, n);
    for (ArcIndex a = 0; a < g.num_arcs(); ++a)
        in.weights.push_back(make_rational(static_cast<int>(rng() % 41) - 20,
                                           1 + static_cast<int>(rng() % 5)));
    if (rng() % 4 == 0)
        in.objective = Objective::Maximize;
    return in;
}

} // namespace

TEST_CASE("lp: one variable with a fractional bound")
{
    const auto r = lp_solve({row({1}, Sense::GreaterEq, Rational(1, 3))}, {1});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Rational(1, 3));
    CHECK(r.point == RationalVector{Rational(1, 3)});
}

TEST_CASE("lp: infeasible system")
{
    const auto r = lp_solve({row({1}, Sense::GreaterEq, 1), row({1}, Sense::LessEq, 0)}, {1});
    CHECK(r.status == LpStatus::Infeasible);
    CHECK(lp_solve({}, {1}, RationalVector{2}, RationalVector{1}).status == LpStatus::Infeasible);
}

TEST_CASE("lp: equations, bounds and degeneracy")
{
    // max x + y + z s.t. x + y = 1, y + z <= 1, x - z >= 0 on [0,1]^3.
    const auto r = lp_solve({row({1, 1, 0}, Sense::Equal, 1), row({0, 1, 1}, Sense::LessEq, 1),
                             row({1, 0, -1}, Sense::GreaterEq, 0)},
                            {-1, -1, -1});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == -2);
    // Tightened lower bound.
    const auto s = lp_solve({row({1, 1}, Sense::LessEq, 3)}, {1, 1}, RationalVector{1, Rational(3, 2)},
                            RationalVector{2, 2});
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == Rational(5, 2));
}

TEST_CASE("lp relaxation bounds the integer optimum")
{
    std::mt19937 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        auto in = random_instance(trial % 2 ? PolytopeKind::Cycle : PolytopeKind::Path, 5, rng);
        in.objective = Objective::Minimize;
        const Graph g = Graph::for_kind(in.kind, in.n);
        const auto lp = lp_solve(initial_constraints(g, in.c), in.weights);
        REQUIRE(lp.status == LpStatus::Optimal);
        CHECK(lp.value <= dfs_optimum(in));
    }
}

TEST_CASE("unit weights give the shortest allowed path")
{
    Instance in;
    in.kind = PolytopeKind::Path;
    in.n = 6;
    in.c = CardinalitySequence({3, 5});
    in.weights.assign(static_cast<std::size_t>(Graph::path_digraph(6).num_arcs()), Rational(1));
    const auto log = solve(in);
    CHECK(log.status == SolveStatus::Optimal);
    CHECK(log.value == 3);
    REQUIRE(log.optimum);
    CHECK(log.optimum->cardinality() == 3);
}

TEST_CASE("one node cardinality forcing cut closes the gap")
{
    Instance in;
    in.kind = PolytopeKind::Path;
    in.n = 5;
    in.c = CardinalitySequence({2, 4});
    in.weights = {-10, 6, -4, 3, -9, 10, 1, -5, 6, -8, -2, -6, -3, 6, 6, 7, 7, 7, 9, 6};
    SolverConfig cfg;
    cfg.mcf = cfg.parity_exclusion = cfg.cardinality_subgraph = false;
    const auto log = solve(in, cfg);
    REQUIRE(log.iterations.size() == 2);
    // The root LP sits on the forbidden path 0-1-2-5.
    CHECK(log.iterations[0].lp_value == -25);
    CHECK(log.iterations[0].cuts_added.at("cf_node") >= 1);
    CHECK(log.iterations[1].integral);
    CHECK(log.certificate == Certificate::CuttingPlaneIntegral);
    CHECK(log.value == -22);
    CHECK(log.value == dfs_optimum(in));
}

TEST_CASE("solver matches an independent search")
{
    std::mt19937 rng(17);
    for (auto kind : {PolytopeKind::Path, PolytopeKind::Cycle})
        for (int trial = 0; trial < 15; ++trial) {
            const auto in = random_instance(kind, 4 + trial % 3, rng);
            CAPTURE(in.c.to_string());
            SolverConfig cfg;
            cfg.cross_check = false;
            const auto log = solve(in, cfg);
            REQUIRE(log.status == SolveStatus::Optimal);
            CHECK(log.value == dfs_optimum(in));
            REQUIRE(log.optimum);
            Rational v = 0;
            for (ArcIndex a : log.optimum->support())
                v += in.weights[static_cast<std::size_t>(a)];
            CHECK(v == log.value);
            CHECK(in.c.contains(log.optimum->cardinality()));
        }
}

TEST_CASE("lp values never decrease within a node")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        auto in = random_instance(trial % 2 ? PolytopeKind::Cycle : PolytopeKind::Path, 6, rng);
        in.objective = Objective::Minimize;
        const auto log = solve(in);
        for (std::size_t i = 1; i < log.iterations.size(); ++i)
            if (log.iterations[i].node == log.iterations[i - 1].node)
                CHECK(log.iterations[i].lp_value >= log.iterations[i - 1].lp_value);
    }
}

TEST_CASE("solving is deterministic")
{
    std::mt19937 rng(31);
    const auto in = random_instance(PolytopeKind::Cycle, 6, rng);
    const auto a = solve(in), b = solve(in);
    REQUIRE(a.iterations.size() == b.iterations.size());
    for (std::size_t i = 0; i < a.iterations.size(); ++i) {
        CHECK(a.iterations[i].lp_value == b.iterations[i].lp_value);
        CHECK(a.iterations[i].cuts_added == b.iterations[i].cuts_added);
        CHECK(a.iterations[i].node == b.iterations[i].node);
    }
    CHECK(a.value == b.value);
    CHECK(a.optimum == b.optimum);
    CHECK(a.certificate == b.certificate);
}

TEST_CASE("undirected instances are solved by enumeration")
{
    Instance in;
    in.kind = PolytopeKind::UndirectedCycle;
    in.n = 5;
    in.c = CardinalitySequence({3, 5});
    in.weights.assign(10, Rational(2));
    in.weights[0] = -7;
    const auto log = solve(in);
    CHECK(log.certificate == Certificate::EnumerationFallback);
    CHECK(log.value == -3);
}

TEST_CASE("instance validation")
{
    Instance in;
    in.kind = PolytopeKind::Cycle;
    in.n = 4;
    in.c = CardinalitySequence({1, 3});
    in.weights.assign(12, Rational(0));
    CHECK_THROWS_AS(solve(in), InvalidParameter);
    in.c = CardinalitySequence({2, 3});
    in.weights.pop_back();
    CHECK_THROWS_AS(solve(in), InvalidParameter);
}
