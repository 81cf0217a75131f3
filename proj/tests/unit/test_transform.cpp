#include <doctest.h>

#include "cardpoly/equivalence.hpp"
#include "cardpoly/error.hpp"
#include "cardpoly/generators.hpp"
#include "cardpoly/transform.hpp"
#include "cardpoly/verify.hpp"

using namespace cardpoly;

TEST_CASE("lifted degree constraints are cycle facets")
{
    for (int n = 5; n <= 6; ++n)
        for (const auto &values : std::vector<std::vector<int>>{{2, 4}, {3, 4}, {3, 5}}) {
            const CardinalitySequence c(values);
            const auto path = Polytope::build(PolytopeKind::Path, n, c);
            const auto cycle = Polytope::build(PolytopeKind::Cycle, n, c);
            for (Node i : path.graph.internal_nodes()) {
                const auto deg = degree_constraint(path.graph, i);
                REQUIRE(is_facet(deg, path.vertices, path.dimension));
                const auto lifted = lift_path_to_cycle(deg, c);
                CHECK(lifted.kind == PolytopeKind::Cycle);
                CHECK(is_valid(lifted, cycle.vertices).valid);
                CHECK(is_facet(lifted, cycle.vertices, cycle.dimension));
            }
        }
}

TEST_CASE("lifting attains gamma on a cycle")
{
    const CardinalitySequence c({2, 5});
    const Graph path = Graph::path_digraph(6);
    const auto cycle = Polytope::build(PolytopeKind::Cycle, 6, c);
    const auto ineq = cf_node(path, {0, 1, 2, 3, 6}, c, 1);
    const auto gamma = max_cycle_value(path, ineq.as_less_eq(), c);
    const auto lifted = lift_path_to_cycle(ineq, c);
    CHECK(lifted.rhs == gamma);
    bool tight = false;
    for (const auto &x : cycle.vertices) {
        CHECK(lifted.satisfied_by(x));
        tight = tight || lifted.tight_at(x);
    }
    CHECK(tight);
}

TEST_CASE("one-sided min-cut lifts to multiple cycle exclusion")
{
    const CardinalitySequence c({2, 4});
    const Graph path = Graph::path_digraph(6);
    const auto cycle = Polytope::build(PolytopeKind::Cycle, 6, c);
    const auto lifted = lift_path_to_cycle(one_sided_min_cut(path, {0, 1, 2, 6}, 3), c);
    // Node 0 and node n of the path both become node n.
    const auto mce = multiple_cycle_exclusion(cycle.graph, {1, 2, 6}, 6, 3);
    for (const auto &x : cycle.vertices)
        CHECK(lifted.lhs(x) - lifted.rhs == mce.lhs(x) - mce.rhs);
}

TEST_CASE("lifting rejects equations")
{
    const Graph path = Graph::path_digraph(5);
    CHECK_THROWS_AS(lift_path_to_cycle(flow_conservation(path, 2), CardinalitySequence({2, 4})),
                    InvalidParameter);
}

TEST_CASE("deoriented degree constraint")
{
    const Graph g = Graph::complete_digraph(5);
    const auto sym = symmetrize(g, degree_constraint(g, 2), SymmetryMode::Symmetric);
    REQUIRE(sym);
    const auto und = deorient(*sym);
    const Graph k = Graph::complete_graph(5);
    CHECK(und.kind == PolytopeKind::UndirectedCycle);
    CHECK(und.rhs == 2);
    CHECK(und.sense == Sense::LessEq);
    for (ArcIndex e = 0; e < k.num_arcs(); ++e) {
        const Arc &a = k.arc(e);
        CHECK(und.coeffs[static_cast<std::size_t>(e)] == ((a.tail == 2 || a.head == 2) ? 1 : 0));
    }
}

TEST_CASE("deorientation rejects asymmetric input")
{
    const Graph g = Graph::complete_digraph(5);
    CHECK_THROWS_AS(deorient(degree_constraint(g, 2)), InvalidParameter);
}

TEST_CASE("deorientation agrees on evaluation and keeps validity")
{
    for (auto kind : {PolytopeKind::Cycle, PolytopeKind::Path}) {
        const CardinalitySequence c({3, 5});
        const auto directed = Polytope::build(kind, 5, c);
        const auto undirected = Polytope::build(
            kind == PolytopeKind::Cycle ? PolytopeKind::UndirectedCycle : PolytopeKind::UndirectedPath,
            5, c);
        for (auto tag : {ClassTag::CfNode, ClassTag::Degree, ClassTag::CardSubgraph}) {
            for (const auto &params : instantiations(directed.graph, tag, c)) {
                const auto ineq = regenerate(directed.graph, tag, params, c);
                const auto sym = symmetrize(directed.graph, ineq, natural_mode(directed.graph));
                REQUIRE(sym);
                const auto und = deorient(*sym);
                for (const auto &x : directed.vertices)
                    CHECK(sym->lhs(x) == und.lhs(deorient(directed.graph, x)));
                CHECK(is_valid(und, undirected.vertices).valid);
            }
        }
    }
}

TEST_CASE("undirected one-sided min-cut with two outside nodes is a parity constraint")
{
    const Graph k = Graph::complete_graph(6);
    // N \ S = {2, 5}, j = 2: y(delta(5)) - 2 y_25 >= 0.
    const auto ineq = one_sided_min_cut(k, {1, 3, 4, 6}, 2);
    for (ArcIndex e = 0; e < k.num_arcs(); ++e) {
        const Arc &a = k.arc(e);
        Rational want = 0;
        if (a == Arc{2, 5})
            want = -1;
        else if (a.tail == 5 || a.head == 5)
            want = 1;
        CHECK(ineq.coeffs[static_cast<std::size_t>(e)] == want);
    }
    CHECK(ineq.rhs == 0);
}
