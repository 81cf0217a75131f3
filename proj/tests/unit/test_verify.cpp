#include <doctest.h>

#include "cardpoly/error.hpp"
#include "cardpoly/facet.hpp"
#include "cardpoly/generators.hpp"
#include "cardpoly/verify.hpp"

using namespace cardpoly;

namespace {

/// Every strictly increasing subset of [lo, hi] with at least `min_size`
/// members.
std::vector<CardinalitySequence> sequences(int lo, int hi, int min_size)
{
    std::vector<CardinalitySequence> out;
    const int span = hi - lo + 1;
    for (int mask = 1; mask < (1 << span); ++mask) {
        std::vector<int> values;
        for (int i = 0; i < span; ++i)
            if (mask & (1 << i))
                values.push_back(lo + i);
        if (static_cast<int>(values.size()) >= min_size)
            out.emplace_back(values);
    }
    return out;
}

int dim(PolytopeKind kind, int n, std::vector<int> c)
{
    return polytope_dimension(Graph::for_kind(kind, n), CardinalitySequence(std::move(c)));
}

} // namespace

TEST_CASE("small cycle polytope dimensions")
{
    CHECK(dim(PolytopeKind::Cycle, 3, {2, 3}) == 4);
    CHECK(dim(PolytopeKind::Cycle, 4, {3}) == 6);
}

TEST_CASE("cycle polytope has dimension (n-1)^2 for m >= 2")
{
    for (int n = 4; n <= 6; ++n)
        for (const auto &c : sequences(2, n, 2)) {
            CAPTURE(n);
            CAPTURE(c.to_string());
            CHECK(polytope_dimension(Graph::complete_digraph(n), c) == (n - 1) * (n - 1));
        }
}

TEST_CASE("single cardinality cycle polytopes")
{
    for (int n = 4; n <= 6; ++n) {
        const int arcs = n * (n - 1);
        CHECK(dim(PolytopeKind::Cycle, n, {2}) == arcs / 2 - 1);
        CHECK(dim(PolytopeKind::Cycle, n, {n}) == n * n - 3 * n + 1);
        for (int k = 3; k < n; ++k)
            if (n >= 5)
                CHECK(dim(PolytopeKind::Cycle, n, {k}) == n * n - 2 * n);
    }
}

TEST_CASE("path polytope has dimension n^2 - 2n")
{
    for (int n = 4; n <= 6; ++n)
        for (const auto &c : sequences(2, n, 2)) {
            if (c == CardinalitySequence({2, 3}))
                continue;
            CAPTURE(n);
            CAPTURE(c.to_string());
            CHECK(polytope_dimension(Graph::path_digraph(n), c) == n * n - 2 * n);
        }
}

TEST_CASE("undirected dimensions")
{
    for (int n = 4; n <= 5; ++n) {
        const int path_edges = (n + 1) * n / 2;
        for (const auto &c : sequences(2, n, 2)) {
            if (c == CardinalitySequence({2, 3}))
                continue;
            CHECK(polytope_dimension(Graph::path_graph(n), c) == path_edges - 3);
        }
        for (const auto &c : sequences(3, n, 2))
            CHECK(polytope_dimension(Graph::complete_graph(n), c) == n * (n - 1) / 2);
    }
}

TEST_CASE("empty polytope has dimension -1")
{
    CHECK(polytope_dimension(std::vector<IncidenceVector>{}) == -1);
}

TEST_CASE("validity with counterexample")
{
    const Graph g = Graph::path_digraph(6);
    const CardinalitySequence c({3, 5});
    const auto xs = enumerate_paths(g, c);
    CHECK(is_valid(degree_constraint(g, 2), xs).valid);
    for (Node v : g.nodes())
        CHECK(is_valid(flow_conservation(g, v), xs).valid);

    // |S| = c_1 + 1 holds a whole c_1-path inside S.
    const auto cut = min_cut(g, {0, 1, 2, 6});
    const auto r = is_valid(cut, xs);
    REQUIRE_FALSE(r.valid);
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->cardinality() == 3);
    for (Node v : r.counterexample->walk())
        CHECK((v == 0 || v == 1 || v == 2 || v == 6));
}

TEST_CASE("facet certification examples")
{
    {
        const auto p = Polytope::build(PolytopeKind::Cycle, 5, CardinalitySequence({2, 3}));
        CHECK(is_facet(degree_constraint(p.graph, 3), p.vertices, p.dimension));
    }
    {
        // |W| + 1 = c_{p+1} < n is dominated by nonnegativity.
        const auto p = Polytope::build(PolytopeKind::Cycle, 6, CardinalitySequence({2, 5}));
        CHECK_FALSE(is_facet(cf_node(p.graph, {1, 2, 3, 4}, p.c, 1), p.vertices, p.dimension));
    }
    {
        const auto p = Polytope::build(PolytopeKind::Path, 6, CardinalitySequence({4, 5}));
        const auto lo = cardinality_bounds(p.graph, p.c).first;
        CHECK(is_facet(lo, p.vertices, p.dimension));
    }
    {
        const auto p = Polytope::build(PolytopeKind::Path, 5, CardinalitySequence({3, 5}));
        CHECK_THROWS_AS(is_facet(min_cut(p.graph, {0, 1, 2, 3, 5}), p.vertices, p.dimension),
                        InvalidParameter);
    }
}

TEST_CASE("a reported facet is valid")
{
    const auto p = Polytope::build(PolytopeKind::Path, 5, CardinalitySequence({2, 4}));
    for (const auto &info : theorem_catalog()) {
        if (info.kind != PolytopeKind::Path)
            continue;
        SweepReport report;
        try {
            report = sweep_theorem(info, p);
        } catch (const InvalidParameter &) {
            continue; // class not defined for this c
        }
        for (const auto &e : report.entries)
            if (e.facet)
                CHECK(e.valid);
    }
}

TEST_CASE("facet predicate examples")
{
    InequalityParams params;
    params.W = {1, 2, 3, 4, 5};
    params.p = 1;
    auto pred = facet_predicate(ClassTag::CfNode, params, 6, CardinalitySequence({2, 6}),
                                PolytopeKind::Cycle);
    CHECK(pred.verdict == Verdict::True);

    params.W = {1, 2, 3, 4};
    pred = facet_predicate(ClassTag::CfNode, params, 6, CardinalitySequence({2, 5}),
                           PolytopeKind::Cycle);
    CHECK(pred.verdict == Verdict::False);

    InequalityParams deg;
    deg.v = 2;
    pred = facet_predicate(ClassTag::Degree, deg, 6, CardinalitySequence({2, 6}),
                           PolytopeKind::Path);
    CHECK(pred.verdict == Verdict::Unknown);
    REQUIRE(pred.stated);

    InequalityParams osmc;
    osmc.S = {0, 1, 2, 3, 6};
    osmc.v = 4;
    pred = facet_predicate(ClassTag::OneSidedMinCut, osmc, 6, CardinalitySequence({4, 5}),
                           PolytopeKind::Path);
    CHECK(pred.verdict == Verdict::True);
}

TEST_CASE("sweeps without disagreement")
{
    for (const auto &[id, c] : std::vector<std::pair<std::string, std::vector<int>>>{
             {"path/min_cut", {4, 5}}, {"path/cf_node", {2, 4}}}) {
        const auto report = sweep_theorem(id, 6, CardinalitySequence(c));
        CAPTURE(id);
        CHECK(report.entries.size() > 0);
        CHECK(report.disagreements() == 0);
    }
}

TEST_CASE("orbit caching agrees with direct computation")
{
    const auto p = Polytope::build(PolytopeKind::Cycle, 5, CardinalitySequence({2, 4}));
    const auto report = sweep_theorem(find_theorem("cycle/cf_node"), p);
    int cached = 0;
    for (const auto &e : report.entries) {
        if (!e.from_orbit)
            continue;
        ++cached;
        const auto ineq = regenerate(p.graph, ClassTag::CfNode, e.params, p.c);
        CHECK(e.facet == is_facet(ineq, p.vertices, p.dimension));
    }
    CHECK(cached > 0);
}
