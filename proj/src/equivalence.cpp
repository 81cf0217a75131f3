#include "cardpoly/equivalence.hpp"

#include "cardpoly/error.hpp"

#include <deque>
#include <set>

namespace cardpoly {

namespace {

std::size_t at(Node v) { return static_cast<std::size_t>(v); }

/// Pairs {i,j} whose two arcs must carry equal coefficients.
std::vector<Node> paired_nodes(const Graph &g, SymmetryMode mode)
{
    if (mode == SymmetryMode::Symmetric) {
        require(g.kind() == PolytopeKind::Cycle, "symmetric mode needs the cycle digraph");
        return g.nodes();
    }
    require(g.kind() == PolytopeKind::Path, "pseudo-symmetric mode needs the path digraph");
    return g.internal_nodes();
}

Rational coeff(const Graph &g, const LinearInequality &ineq, Node i, Node j)
{
    return ineq.coeffs.at(static_cast<std::size_t>(g.index(i, j)));
}

} // namespace

LinearInequality apply_potentials(const Graph &g, const LinearInequality &ineq,
                                  const NodePotentials &t)
{
    require(g.directed(), "node potentials act through flow conservation on digraphs");
    require(static_cast<int>(ineq.coeffs.size()) == g.num_arcs(),
            "inequality does not match the graph");
    require(t.t.size() > at(g.last_node()), "potentials do not cover every node");
    LinearInequality out = ineq;
    for (ArcIndex a = 0; a < g.num_arcs(); ++a) {
        const Arc &e = g.arc(a);
        out.coeffs[at(a)] += t[e.tail] - t[e.head];
    }
    for (Node v : g.nodes())
        out.rhs += t[v] * g.flow_balance(v);
    out.tag = ClassTag::Custom;
    out.params = {};
    return out;
}

NodePotentials tree_potentials(const Graph &g, const LinearInequality &ineq,
                               const std::vector<ArcIndex> &tree,
                               const std::map<ArcIndex, Rational> &targets)
{
    require(g.directed(), "normalization needs a digraph");
    require(static_cast<int>(ineq.coeffs.size()) == g.num_arcs(),
            "inequality does not match the graph");
    const std::set<ArcIndex> arcs(tree.begin(), tree.end());
    require(arcs.size() == tree.size(), "tree lists an arc twice");
    require(static_cast<int>(tree.size()) + 1 == static_cast<int>(g.nodes().size()),
            "a spanning tree has one arc fewer than the graph has nodes");
    require(targets.size() == arcs.size(), "targets must be given exactly on the tree arcs");
    for (ArcIndex a : tree) {
        require(a >= 0 && a < g.num_arcs(), "tree arc out of range");
        require(targets.contains(a), "missing target for a tree arc");
    }

    NodePotentials t{g.first_node(), RationalVector(at(g.last_node()) + 1)};
    std::vector<bool> known(t.t.size(), false);
    known[at(t.root)] = true;
    std::deque<Node> queue{t.root};
    while (!queue.empty()) {
        const Node u = queue.front();
        queue.pop_front();
        for (ArcIndex a : tree) {
            const Arc &e = g.arc(a);
            if (e.tail != u && e.head != u)
                continue;
            const Node other = e.tail == u ? e.head : e.tail;
            if (known[at(other)])
                continue;
            // a_ij + t_i - t_j = target
            const Rational &beta = targets.at(a);
            const Rational &alpha = ineq.coeffs[at(a)];
            if (e.tail == u)
                t.t[at(other)] = alpha + t.t[at(u)] - beta;
            else
                t.t[at(other)] = beta - alpha + t.t[at(u)];
            known[at(other)] = true;
            queue.push_back(other);
        }
    }
    for (Node v : g.nodes())
        require(known[at(v)], "tree does not span the graph");
    for (ArcIndex a : tree) {
        const Arc &e = g.arc(a);
        if (ineq.coeffs[at(a)] + t[e.tail] - t[e.head] != targets.at(a))
            throw InternalError("tree potentials are inconsistent");
    }
    return t;
}

LinearInequality normalize(const Graph &g, const LinearInequality &ineq,
                           const std::vector<ArcIndex> &tree,
                           const std::map<ArcIndex, Rational> &targets)
{
    return apply_potentials(g, ineq, tree_potentials(g, ineq, tree, targets));
}

SymmetryMode natural_mode(const Graph &g)
{
    require(g.directed(), "symmetry modes apply to digraphs");
    return g.kind() == PolytopeKind::Cycle ? SymmetryMode::Symmetric
                                           : SymmetryMode::PseudoSymmetric;
}

bool is_symmetric(const Graph &g, const LinearInequality &ineq, SymmetryMode mode)
{
    const auto nodes = paired_nodes(g, mode);
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            if (coeff(g, ineq, nodes[a], nodes[b]) != coeff(g, ineq, nodes[b], nodes[a]))
                return false;
    return true;
}

std::optional<LinearInequality> symmetrize(const Graph &g, const LinearInequality &ineq,
                                           SymmetryMode mode)
{
    require(static_cast<int>(ineq.coeffs.size()) == g.num_arcs(),
            "inequality does not match the graph");
    const auto nodes = paired_nodes(g, mode);
    if (is_symmetric(g, ineq, mode))
        return ineq;

    // t_j - t_i = a_ij - a_ji on every pair, rooted at the first paired node.
    NodePotentials t{nodes.front(), RationalVector(at(g.last_node()) + 1)};
    const Node r = t.root;
    for (Node j : nodes)
        if (j != r)
            t.t[at(j)] = coeff(g, ineq, r, j) - coeff(g, ineq, j, r);
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b) {
            const Node i = nodes[a], j = nodes[b];
            if (t[j] - t[i] != coeff(g, ineq, i, j) - coeff(g, ineq, j, i))
                return std::nullopt;
        }

    LinearInequality doubled = ineq;
    for (auto &q : doubled.coeffs)
        q *= 2;
    doubled.rhs *= 2;
    auto out = apply_potentials(g, doubled, t);
    if (!is_symmetric(g, out, mode))
        throw InternalError("symmetrization left an asymmetric pair");
    return out;
}

} // namespace cardpoly
