#include <doctest.h>

#include "cardpoly/error.hpp"
#include "cardpoly/generators.hpp"

#include <algorithm>

using namespace cardpoly;

namespace {

std::vector<std::vector<Node>> subsets(const std::vector<Node> &ground)
{
    std::vector<std::vector<Node>> out;
    const auto k = ground.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<Node> s;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i))
                s.push_back(ground[i]);
        out.push_back(s);
    }
    return out;
}

std::vector<Node> complement(const Graph &g, const std::vector<Node> &s)
{
    std::vector<Node> out;
    for (Node v : g.nodes())
        if (std::find(s.begin(), s.end(), v) == s.end())
            out.push_back(v);
    return out;
}

std::vector<Node> with_ends(std::vector<Node> s, int n)
{
    s.push_back(0);
    s.push_back(n);
    std::sort(s.begin(), s.end());
    return s;
}

bool valid_on(const LinearInequality &ineq, const std::vector<IncidenceVector> &xs)
{
    return std::all_of(xs.begin(), xs.end(),
                       [&](const IncidenceVector &x) { return ineq.satisfied_by(x); });
}

const IncidenceVector &find_walk(const std::vector<IncidenceVector> &xs,
                                 const std::vector<Node> &walk)
{
    for (const auto &x : xs)
        if (x.walk() == walk)
            return x;
    FAIL("walk not enumerated");
    return xs.front();
}

void check_regenerates(const Graph &g, const LinearInequality &ineq,
                       const CardinalitySequence &c)
{
    CHECK(regenerate(g, ineq.tag, ineq.params, c) == ineq);
}

} // namespace

TEST_CASE("flow conservation and degree")
{
    auto g = Graph::path_digraph(4);
    auto f0 = flow_conservation(g, 0);
    CHECK(f0.sense == Sense::Equal);
    CHECK(f0.rhs == 1);
    for (ArcIndex a = 0; a < g.num_arcs(); ++a)
        CHECK(f0.coeffs[static_cast<std::size_t>(a)] == (g.arc(a).tail == 0 ? 1 : 0));
    CHECK(flow_conservation(g, 4).rhs == -1);
    CHECK(flow_conservation(g, 2).rhs == 0);
    CHECK(flow_conservation(Graph::complete_digraph(4), 3).rhs == 0);

    auto d = degree_constraint(g, 2);
    CHECK(describe(g, d) == "x(2,1) + x(2,3) + x(2,4) <= 1");
    CHECK_THROWS_AS(degree_constraint(g, 0), InvalidParameter);
    CHECK_THROWS_AS(degree_constraint(g, 4), InvalidParameter);
    CHECK(describe(Graph::complete_digraph(3), degree_constraint(Graph::complete_digraph(3), 1)) ==
          "x(1,2) + x(1,3) <= 1");

    CardinalitySequence c({2, 4});
    for (const auto &x : enumerate_paths(g, c)) {
        for (Node v : g.nodes())
            CHECK(flow_conservation(g, v).satisfied_by(x));
        for (Node v : g.internal_nodes()) {
            const auto l = d.lhs(x);
            CHECK((l == 0 || l == 1));
            CHECK(degree_constraint(g, v).satisfied_by(x));
        }
    }
}

TEST_CASE("nonnegativity and cardinality bounds")
{
    auto g = Graph::path_digraph(4);
    auto nn = nonnegativity(g, g.index(1, 2));
    CHECK(nn.rhs == 0);
    CHECK(nn.sense == Sense::GreaterEq);
    CHECK(describe(g, nn) == "x(1,2) >= 0");

    CardinalitySequence c({2, 4});
    auto [lo, hi] = cardinality_bounds(g, c);
    CHECK(lo.rhs == 2);
    CHECK(hi.rhs == 4);
    auto all = enumerate_paths(g, CardinalitySequence({2, 3, 4}));
    for (const auto &x : all) {
        CHECK(lo.satisfied_by(x));
        CHECK(hi.satisfied_by(x));
        if (x.cardinality() == 2)
            CHECK(lo.tight_at(x));
    }
}

TEST_CASE("node cardinality forcing, cycle form")
{
    auto g = Graph::complete_digraph(5);
    CardinalitySequence c({2, 4});
    auto cf = cf_node(g, {1, 2, 3}, c, 1);
    CHECK(cf.rhs == 2);
    for (ArcIndex a = 0; a < g.num_arcs(); ++a)
        CHECK(cf.coeffs[static_cast<std::size_t>(a)] == (g.arc(a).tail <= 3 ? 1 : -1));

    auto three = enumerate_cycles(g, CardinalitySequence({3}));
    CHECK(cf.lhs(find_walk(three, {1, 2, 3})) == 3);
    auto feasible = enumerate_cycles(g, c);
    CHECK(cf.tight_at(find_walk(feasible, {1, 2})));
    CHECK(valid_on(cf, feasible));
    CHECK_THROWS_AS(cf_node(g, {1, 2}, c, 1), InvalidParameter);
    check_regenerates(g, cf, c);
}

TEST_CASE("node cardinality forcing, path form")
{
    auto g = Graph::path_digraph(6);
    CardinalitySequence c({2, 4});
    auto cf = cf_node(g, {0, 1, 2, 6}, c, 1);
    CHECK(cf.rhs == 2);
    auto three = enumerate_paths(g, CardinalitySequence({3}));
    CHECK(cf.lhs(find_walk(three, {0, 1, 2, 6})) == 3);
    CHECK(valid_on(cf, enumerate_paths(g, c)));
    CHECK_THROWS_AS(cf_node(g, {1, 2, 3, 4}, c, 1), InvalidParameter);
}

TEST_CASE("arc cardinality forcing")
{
    auto g = Graph::complete_digraph(5);
    CardinalitySequence c({2, 4});
    std::vector<Arc> F{{1, 2}, {2, 3}, {3, 1}};
    auto cf = cf_arc(g, F, c, 1);
    auto three = enumerate_cycles(g, CardinalitySequence({3}));
    const auto &chiF = find_walk(three, {1, 2, 3});
    CHECK(cf.lhs(chiF) == 3 * (4 - 3));
    CHECK(cf.lhs(chiF) > cf.rhs);
    auto feasible = enumerate_cycles(g, c);
    CHECK(valid_on(cf, feasible));
    // Tight: |H| = c_p inside F, or |H| = c_{p+1} containing F.
    auto four = enumerate_cycles(g, CardinalitySequence({4}));
    for (const auto &h : four) {
        bool covers = true;
        for (const Arc &e : F)
            covers = covers && h.contains(g.index(e.tail, e.head));
        if (covers)
            CHECK(cf.tight_at(h));
    }
    check_regenerates(g, cf, c);
}

TEST_CASE("cardinality subgraph")
{
    auto g = Graph::complete_digraph(6);
    CardinalitySequence c({2, 5});
    auto cs = cardinality_subgraph(g, {1, 2, 3, 4}, c, 1);
    auto feasible = enumerate_cycles(g, c);
    CHECK(cs.lhs(find_walk(feasible, {1, 2, 3, 4, 5})) == 4);
    CHECK(cs.rhs == 4);
    CHECK(cs.tight_at(find_walk(feasible, {1, 2})));
    CHECK(valid_on(cs, feasible));
    check_regenerates(g, cs, c);
}

TEST_CASE("cuts on the path digraph")
{
    const int n = 6;
    auto g = Graph::path_digraph(n);
    CardinalitySequence c({4, 5});
    auto feasible = enumerate_paths(g, c);

    auto os = one_sided_min_cut(g, {0, 1, 2, 3, 6}, 4);
    CHECK(valid_on(os, feasible));
    CHECK_THROWS_AS(one_sided_min_cut(g, {1, 2, 6}, 4), InvalidParameter);
    CHECK_THROWS_AS(one_sided_min_cut(g, {0, 1, 6}, 1), InvalidParameter);
    check_regenerates(g, os, c);

    // |S| <= c_1: valid; |S| = c_1 + 1: a c_1-path inside S violates it.
    auto mc = min_cut(g, {0, 1, 2, 6});
    CHECK(valid_on(mc, feasible));
    bool tight = false;
    for (const auto &x : feasible)
        tight = tight || mc.tight_at(x);
    CHECK(tight);
    auto bad = min_cut(g, {0, 1, 2, 3, 6});
    CHECK_FALSE(bad.satisfied_by(find_walk(feasible, {0, 1, 2, 3, 6})));
}

TEST_CASE("multiple cycle exclusion")
{
    auto g = Graph::complete_digraph(6);
    CardinalitySequence c({2, 3, 6});
    auto feasible = enumerate_cycles(g, c);
    for (const auto &S : subsets({1, 2, 3, 4, 5, 6})) {
        if (S.size() < 2 || S.size() > 4)
            continue;
        for (Node v : S)
            for (Node w : complement(g, S)) {
                auto ineq = multiple_cycle_exclusion(g, S, v, w);
                CHECK(valid_on(ineq, feasible));
            }
    }
    auto ineq = multiple_cycle_exclusion(g, {1, 2, 3}, 1, 4);
    CHECK(ineq.tight_at(find_walk(feasible, {1, 2})));
    CHECK_THROWS_AS(multiple_cycle_exclusion(g, {1}, 1, 4), InvalidParameter);
    CHECK_THROWS_AS(multiple_cycle_exclusion(g, {1, 2}, 3, 4), InvalidParameter);
}

TEST_CASE("parity exclusion constraints are valid")
{
    SUBCASE("odd path exclusion")
    {
        const int n = 6;
        auto g = Graph::path_digraph(n);
        CardinalitySequence c({2, 4});
        auto feasible = enumerate_paths(g, c);
        for (const auto &inner : subsets({1, 2, 3, 4, 5})) {
            std::vector<Node> S = inner;
            S.insert(S.begin(), 0);
            auto T = complement(g, S);
            auto ineq = parity_exclusion(g, S, T, Parity::Odd, c);
            CHECK(valid_on(ineq, feasible));
        }
        // 0 -> 3 -> 1 -> 4 -> 6 alternates S, T, S, T, T: one arc inside T.
        auto ineq = parity_exclusion(g, {0, 1, 2}, {3, 4, 5, 6}, Parity::Odd, c);
        CHECK(ineq.tight_at(find_walk(feasible, {0, 3, 1, 4, 6})));
        CHECK_THROWS_AS(parity_exclusion(g, {0, 1, 2}, {3, 4, 5, 6}, Parity::Odd,
                                         CardinalitySequence({2, 3})),
                        InvalidParameter);
    }
    SUBCASE("even path exclusion")
    {
        const int n = 6;
        auto g = Graph::path_digraph(n);
        CardinalitySequence c({3, 5});
        auto feasible = enumerate_paths(g, c);
        for (const auto &inner : subsets({1, 2, 3, 4, 5})) {
            auto S = with_ends(inner, n);
            auto ineq = parity_exclusion(g, S, complement(g, S), Parity::Even, c);
            CHECK(valid_on(ineq, feasible));
        }
    }
    SUBCASE("cycle exclusions")
    {
        const int n = 6;
        auto g = Graph::complete_digraph(n);
        CardinalitySequence even({2, 4, 6}), odd({3, 5});
        auto fe = enumerate_cycles(g, even), fo = enumerate_cycles(g, odd);
        for (const auto &S : subsets({1, 2, 3, 4, 5})) {
            std::vector<Node> T;
            for (Node v = 1; v < n; ++v)
                if (std::find(S.begin(), S.end(), v) == S.end())
                    T.push_back(v);
            auto oc = parity_exclusion(g, S, T, Parity::Odd, even);
            CHECK(oc.rhs == 0);
            CHECK(valid_on(oc, fe));
            check_regenerates(g, oc, even);
            auto S2 = S;
            S2.push_back(n);
            auto ec = parity_exclusion(g, S2, T, Parity::Even, odd);
            CHECK(valid_on(ec, fo));
        }
    }
}

TEST_CASE("modified cardinality forcing")
{
    const int n = 8;
    auto g = Graph::complete_digraph(n);
    CardinalitySequence c({2, 3, 5, 7});
    CHECK(has_mcf_bracket(c, 2));
    CHECK_FALSE(has_mcf_bracket(c, 1));
    auto mcf = modified_cf(g, {1, 2, 3, 4}, {5, 6, 7}, 8, c, 2);
    for (ArcIndex a = 0; a < g.num_arcs(); ++a)
        if (g.arc(a).tail == 8 || g.arc(a).head == 8)
            CHECK(mcf.coeffs[static_cast<std::size_t>(a)] == 0);
    auto feasible = enumerate_cycles(g, c);
    CHECK(mcf.lhs(find_walk(feasible, {1, 2, 3})) == 3);
    CHECK(valid_on(mcf, feasible));
    check_regenerates(g, mcf, c);
    CHECK_THROWS_AS(modified_cf(g, {1, 2, 3}, {4, 5, 6, 7}, 8, c, 2), InvalidParameter);
    auto g7 = Graph::complete_digraph(7);
    auto mcf7 = modified_cf(g7, {1, 2, 3, 4}, {5, 6}, 7, c, 2);
    CHECK(valid_on(mcf7, enumerate_cycles(g7, c)));
    CHECK_THROWS_AS(modified_cf(g7, {1, 2, 3, 4}, {5, 6}, 7, CardinalitySequence({2, 3, 5, 6}), 2),
                    InvalidParameter);
}
