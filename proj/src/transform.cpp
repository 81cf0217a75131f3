#include "cardpoly/transform.hpp"

#include "cardpoly/equivalence.hpp"
#include "cardpoly/error.hpp"

#include <optional>

namespace cardpoly {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

} // namespace

Rational max_cycle_value(const Graph &path, const LinearInequality &ineq,
                         const CardinalitySequence &c)
{
    require(path.kind() == PolytopeKind::Path, "lifting starts from the path digraph");
    const int n = path.n();
    std::vector<int> lengths;
    for (int k : c.values())
        if (k >= 2 && k <= n - 1)
            lengths.push_back(k);
    require(!lengths.empty(), "no allowed cycle length fits on the internal nodes");
    const Graph inner = Graph::complete_digraph(n - 1);
    std::optional<Rational> best;
    for (const auto &cyc : enumerate_cycles(inner, CardinalitySequence(lengths))) {
        Rational v = 0;
        for (ArcIndex a : cyc.support()) {
            const Arc &e = inner.arc(a);
            v += ineq.coeffs[at(path.index(e.tail, e.head))];
        }
        if (!best || v > *best)
            best = v;
    }
    require(best.has_value(), "no feasible cycle exists on the internal nodes");
    return *best;
}

LinearInequality lift_path_to_cycle(const LinearInequality &input, const CardinalitySequence &c)
{
    require(input.kind == PolytopeKind::Path, "lifting starts from the path polytope");
    require(input.sense != Sense::Equal, "equations cannot be lifted");
    require(c.size() >= 2 && c.first() >= 2, "lifting needs m >= 2 and c_1 >= 2");
    const int n = input.n;
    const Graph path = Graph::path_digraph(n);
    require(static_cast<int>(input.coeffs.size()) == path.num_arcs(),
            "inequality does not match the path digraph");
    require(c.last() <= n, "c_m exceeds n");
    const LinearInequality ineq = input.as_less_eq();
    const Rational gamma = max_cycle_value(path, ineq, c);

    const Graph cycle = Graph::complete_digraph(n);
    LinearInequality out;
    out.kind = PolytopeKind::Cycle;
    out.n = n;
    out.coeffs.assign(at(cycle.num_arcs()), Rational(0));
    out.sense = Sense::LessEq;
    out.rhs = gamma;
    for (ArcIndex a = 0; a < cycle.num_arcs(); ++a) {
        const Arc &e = cycle.arc(a);
        // Arcs leaving n take the coefficient of the matching arc leaving 0.
        const Node tail = e.tail == n ? 0 : e.tail;
        out.coeffs[at(a)] = ineq.coeffs[at(path.index(tail, e.head))];
        if (e.tail == n)
            out.coeffs[at(a)] += gamma - ineq.rhs;
    }
    return out;
}

LinearInequality deorient(const LinearInequality &ineq)
{
    require(is_directed_kind(ineq.kind), "deorientation needs a directed inequality");
    const Graph g = Graph::for_kind(ineq.kind, ineq.n);
    require(static_cast<int>(ineq.coeffs.size()) == g.num_arcs(),
            "inequality does not match the graph");
    require(is_symmetric(g, ineq, natural_mode(g)),
            "inequality is not (pseudo-)symmetric; symmetrize it first");

    const bool path = ineq.kind == PolytopeKind::Path;
    const Graph u = Graph::for_kind(path ? PolytopeKind::UndirectedPath
                                         : PolytopeKind::UndirectedCycle,
                                    ineq.n);
    LinearInequality out;
    out.kind = u.kind();
    out.n = ineq.n;
    out.coeffs.assign(at(u.num_arcs()), Rational(0));
    out.sense = ineq.sense;
    out.rhs = ineq.rhs;
    for (ArcIndex a = 0; a < u.num_arcs(); ++a) {
        const Arc &e = u.arc(a);
        if (auto d = g.find(e.tail, e.head))
            out.coeffs[at(a)] = ineq.coeffs[at(*d)];
        else if (auto r = g.find(e.head, e.tail))
            out.coeffs[at(a)] = ineq.coeffs[at(*r)];
    }
    return out;
}

IncidenceVector deorient(const Graph &directed, const IncidenceVector &x)
{
    require(directed.directed(), "deorientation needs a digraph");
    require(x.dimension() == directed.num_arcs(), "vector does not match the graph");
    const bool path = directed.kind() == PolytopeKind::Path;
    const Graph u = Graph::for_kind(path ? PolytopeKind::UndirectedPath
                                         : PolytopeKind::UndirectedCycle,
                                    directed.n());
    require(path || x.cardinality() >= 3, "a 2-cycle has no undirected counterpart");
    std::vector<std::uint8_t> entries(at(u.num_arcs()), 0);
    for (ArcIndex a : x.support()) {
        const Arc &e = directed.arc(a);
        entries[at(u.index(e.tail, e.head))] = 1;
    }
    return IncidenceVector(x.shape(), std::move(entries), x.walk());
}

} // namespace cardpoly
