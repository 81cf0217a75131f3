#include <doctest.h>

#include "cardpoly/equivalence.hpp"
#include "cardpoly/error.hpp"
#include "cardpoly/generators.hpp"
#include "cardpoly/verify.hpp"

using namespace cardpoly;

namespace {

/// Star tree rooted at the first node: (0,i) for internal i plus (1,n) on
/// the path digraph, (1,i) on the cycle digraph.
std::vector<ArcIndex> star_tree(const Graph &g)
{
    std::vector<ArcIndex> tree;
    const Node root = g.first_node();
    for (Node v : g.nodes()) {
        if (v == root)
            continue;
        if (g.kind() == PolytopeKind::Path && v == g.n())
            tree.push_back(g.index(1, v));
        else
            tree.push_back(g.index(root, v));
    }
    return tree;
}

std::vector<bool> tight_set(const LinearInequality &ineq, const std::vector<IncidenceVector> &xs)
{
    std::vector<bool> out;
    for (const auto &x : xs)
        out.push_back(ineq.tight_at(x));
    return out;
}

/// Slack a x - a_0 on every vertex.
std::vector<Rational> slacks(const LinearInequality &ineq, const std::vector<IncidenceVector> &xs)
{
    std::vector<Rational> out;
    for (const auto &x : xs)
        out.push_back(ineq.lhs(x) - ineq.rhs);
    return out;
}

LinearInequality first_instance(const Graph &g, ClassTag tag, const CardinalitySequence &c)
{
    const auto all = instantiations(g, tag, c);
    REQUIRE_FALSE(all.empty());
    return regenerate(g, tag, all.front(), c);
}

} // namespace

TEST_CASE("normalize with current coefficients is the identity")
{
    const Graph g = Graph::path_digraph(5);
    const CardinalitySequence c({2, 4});
    const auto ineq = cf_node(g, {0, 1, 2, 5}, c, 1);
    const auto tree = star_tree(g);
    std::map<ArcIndex, Rational> targets;
    for (ArcIndex a : tree)
        targets[a] = ineq.coeffs[static_cast<std::size_t>(a)];
    const auto out = normalize(g, ineq, tree, targets);
    CHECK(out.coeffs == ineq.coeffs);
    CHECK(out.rhs == ineq.rhs);
    CHECK(out.sense == ineq.sense);
}

TEST_CASE("normalize keeps the face")
{
    for (auto kind : {PolytopeKind::Path, PolytopeKind::Cycle}) {
        const auto p = Polytope::build(kind, 5, CardinalitySequence({2, 4}));
        const auto tree = star_tree(p.graph);
        for (auto tag : {ClassTag::CfNode, ClassTag::OneSidedMinCut, ClassTag::Degree}) {
            for (const auto &params : instantiations(p.graph, tag, p.c)) {
                const auto ineq = regenerate(p.graph, tag, params, p.c);
                std::map<ArcIndex, Rational> zero;
                for (ArcIndex a : tree)
                    zero[a] = 0;
                const auto out = normalize(p.graph, ineq, tree, zero);
                for (ArcIndex a : tree)
                    CHECK(out.coeffs[static_cast<std::size_t>(a)] == 0);
                CHECK(tight_set(out, p.vertices) == tight_set(ineq, p.vertices));
                CHECK(slacks(out, p.vertices) == slacks(ineq, p.vertices));
            }
        }
    }
}

TEST_CASE("normalize rejects a tree that does not span")
{
    const Graph g = Graph::complete_digraph(4);
    const auto ineq = degree_constraint(g, 1);
    std::vector<ArcIndex> tree{g.index(1, 2), g.index(2, 1), g.index(1, 3)};
    std::map<ArcIndex, Rational> targets;
    for (ArcIndex a : tree)
        targets[a] = 0;
    CHECK_THROWS_AS(normalize(g, ineq, tree, targets), InvalidParameter);
}

TEST_CASE("symmetric form of the degree constraint")
{
    const Graph g = Graph::complete_digraph(5);
    const auto sym = symmetrize(g, degree_constraint(g, 2), SymmetryMode::Symmetric);
    REQUIRE(sym);
    CHECK(sym->rhs == 2);
    for (ArcIndex a = 0; a < g.num_arcs(); ++a) {
        const Arc &e = g.arc(a);
        const Rational want = (e.tail == 2 || e.head == 2) ? 1 : 0;
        CHECK(sym->coeffs[static_cast<std::size_t>(a)] == want);
    }
    CHECK(is_symmetric(g, *sym, SymmetryMode::Symmetric));
}

TEST_CASE("symmetrize preserves evaluation up to the scale")
{
    const auto p = Polytope::build(PolytopeKind::Cycle, 5, CardinalitySequence({2, 4}));
    for (const auto &params : instantiations(p.graph, ClassTag::CfNode, p.c)) {
        const auto ineq = regenerate(p.graph, ClassTag::CfNode, params, p.c);
        const auto sym = symmetrize(p.graph, ineq, SymmetryMode::Symmetric);
        REQUIRE(sym);
        CHECK(tight_set(*sym, p.vertices) == tight_set(ineq, p.vertices));
    }
}

TEST_CASE("classes with no symmetric equivalent")
{
    {
        const Graph g = Graph::complete_digraph(6);
        const CardinalitySequence c({2, 4});
        int checked = 0;
        for (const auto &params : instantiations(g, ClassTag::OddExcl, c)) {
            // With S empty the constraint degenerates to a cut around r.
            if (params.S.empty() || params.T.empty())
                continue;
            CHECK_FALSE(symmetrize(g, regenerate(g, ClassTag::OddExcl, params, c),
                                   SymmetryMode::Symmetric));
            ++checked;
        }
        CHECK(checked > 0);
    }
    {
        const Graph g = Graph::path_digraph(8);
        const auto mcf = first_instance(g, ClassTag::ModifiedCf, CardinalitySequence({2, 3, 5, 7}));
        CHECK_FALSE(symmetrize(g, mcf, SymmetryMode::PseudoSymmetric));
    }
}

TEST_CASE("pseudo-symmetry concerns internal pairs only")
{
    const Graph g = Graph::path_digraph(5);
    const auto deg = degree_constraint(g, 2);
    CHECK_FALSE(is_symmetric(g, deg, SymmetryMode::PseudoSymmetric));
    const auto sym = symmetrize(g, deg, SymmetryMode::PseudoSymmetric);
    REQUIRE(sym);
    CHECK(is_symmetric(g, *sym, SymmetryMode::PseudoSymmetric));
    CHECK(natural_mode(g) == SymmetryMode::PseudoSymmetric);
    CHECK_THROWS_AS(symmetrize(g, deg, SymmetryMode::Symmetric), InvalidParameter);
}
