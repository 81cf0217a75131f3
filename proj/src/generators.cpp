#include "cardpoly/generators.hpp"

#include "cardpoly/error.hpp"

#include <algorithm>
#include <string>

namespace cardpoly {

namespace {

/// Membership table over node ids 0..n.
class Membership {
public:
    Membership(const Graph &g, const std::vector<Node> &set, const char *name)
        : in_(static_cast<std::size_t>(g.n() + 1), false)
    {
        for (Node v : set) {
            require(g.has_node(v), std::string("node ") + std::to_string(v) +
                                       " of " + name + " is not in the graph");
            in_[static_cast<std::size_t>(v)] = true;
        }
    }
    bool operator()(Node v) const { return in_[static_cast<std::size_t>(v)]; }

private:
    std::vector<bool> in_;
};

std::vector<Node> sorted_unique(std::vector<Node> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

LinearInequality blank(const Graph &g, ClassTag tag, Sense sense)
{
    LinearInequality ineq;
    ineq.kind = g.kind();
    ineq.n = g.n();
    ineq.coeffs.assign(static_cast<std::size_t>(g.num_arcs()), Rational(0));
    ineq.sense = sense;
    ineq.rhs = 0;
    ineq.tag = tag;
    return ineq;
}

Rational &coef(LinearInequality &ineq, ArcIndex a)
{
    return ineq.coeffs[static_cast<std::size_t>(a)];
}

int count(const std::vector<Node> &set) { return static_cast<int>(set.size()); }

void require_bracket(const CardinalitySequence &c, int p, int k, const char *what)
{
    require(p >= 1 && p < c.size(),
            std::string(what) + ": bracket index p out of range");
    require(c[p] < k && k < c[p + 1],
            std::string(what) + ": need c_p < " + std::to_string(k) + " < c_{p+1}");
}

void require_path_ends(const Graph &g, const Membership &in, const char *what)
{
    require(in(0) && in(g.n()),
            std::string(what) + ": set must contain 0 and n");
}

/// Adds `weight` to every arc leaving v (every edge at v when undirected).
void add_star(const Graph &g, LinearInequality &ineq, Node v, const Rational &weight)
{
    const auto &arcs = g.directed() ? g.out_arcs(v) : g.incident(v);
    for (ArcIndex a : arcs)
        coef(ineq, a) += weight;
}

} // namespace

LinearInequality flow_conservation(const Graph &g, Node i)
{
    require(g.directed(), "flow conservation is defined on digraphs only");
    require(g.has_node(i), "node not in graph");
    auto ineq = blank(g, ClassTag::Flow, Sense::Equal);
    for (ArcIndex a : g.out_arcs(i))
        coef(ineq, a) += 1;
    for (ArcIndex a : g.in_arcs(i))
        coef(ineq, a) -= 1;
    ineq.rhs = g.flow_balance(i);
    ineq.params.v = i;
    return ineq;
}

LinearInequality degree_constraint(const Graph &g, Node i)
{
    require(g.has_node(i), "node not in graph");
    if (is_path_kind(g.kind()))
        require(g.is_internal(i), "path degree constraint needs an internal node");
    auto ineq = blank(g, ClassTag::Degree, Sense::LessEq);
    add_star(g, ineq, i, 1);
    ineq.rhs = g.directed() ? 1 : 2;
    ineq.params.v = i;
    return ineq;
}

LinearInequality nonnegativity(const Graph &g, ArcIndex a)
{
    require(a >= 0 && a < g.num_arcs(), "arc index out of range");
    auto ineq = blank(g, ClassTag::Nonneg, Sense::GreaterEq);
    coef(ineq, a) = 1;
    ineq.params.v = g.arc(a).tail;
    ineq.params.w = g.arc(a).head;
    return ineq;
}

std::pair<LinearInequality, LinearInequality>
cardinality_bounds(const Graph &g, const CardinalitySequence &c)
{
    auto lo = blank(g, ClassTag::CardinalityBoundLo, Sense::GreaterEq);
    auto hi = blank(g, ClassTag::CardinalityBoundHi, Sense::LessEq);
    for (auto &q : lo.coeffs)
        q = 1;
    for (auto &q : hi.coeffs)
        q = 1;
    lo.rhs = c.first();
    hi.rhs = c.last();
    return {lo, hi};
}

LinearInequality cf_node(const Graph &g, std::vector<Node> W,
                         const CardinalitySequence &c, int p)
{
    W = sorted_unique(std::move(W));
    const Membership in(g, W, "W");
    // visited nodes = |W| on cycles, |W|-1 arcs' worth on paths
    int k = count(W);
    if (is_path_kind(g.kind())) {
        require_path_ends(g, in, "cf_node");
        k -= 1;
    }
    require_bracket(c, p, k, "cf_node");
    const Rational inside = c[p + 1] - k;
    const Rational outside = -(k - c[p]);

    auto ineq = blank(g, ClassTag::CfNode, Sense::LessEq);
    for (Node v : g.nodes())
        add_star(g, ineq, v, in(v) ? inside : outside);
    ineq.rhs = Rational(c[p]) * inside * (g.directed() ? 1 : 2);
    ineq.params.W = std::move(W);
    ineq.params.p = p;
    return ineq;
}

LinearInequality cf_arc(const Graph &g, std::vector<Arc> F,
                        const CardinalitySequence &c, int p)
{
    std::vector<ArcIndex> idx;
    for (Arc &e : F) {
        if (!g.directed() && e.tail > e.head)
            std::swap(e.tail, e.head);
        idx.push_back(g.index(e.tail, e.head));
    }
    std::sort(F.begin(), F.end());
    F.erase(std::unique(F.begin(), F.end()), F.end());
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    const int k = static_cast<int>(idx.size());
    require_bracket(c, p, k, "cf_arc");

    auto ineq = blank(g, ClassTag::CfArc, Sense::LessEq);
    for (auto &q : ineq.coeffs)
        q = -(k - c[p]);
    for (ArcIndex a : idx)
        coef(ineq, a) = c[p + 1] - k;
    ineq.rhs = Rational(c[p]) * (c[p + 1] - k);
    ineq.params.F = std::move(F);
    ineq.params.p = p;
    return ineq;
}

LinearInequality cardinality_subgraph(const Graph &g, std::vector<Node> W,
                                      const CardinalitySequence &c, int p)
{
    W = sorted_unique(std::move(W));
    const Membership in(g, W, "W");
    int k = count(W);
    if (is_path_kind(g.kind())) {
        require_path_ends(g, in, "cardinality_subgraph");
        k -= 1;
    }
    require_bracket(c, p, k, "cardinality_subgraph");
    // |W|-c_p-1 for cycles, |W|-c_p-2 for paths
    const Rational cross = -(k - c[p] - 1);

    auto ineq = blank(g, ClassTag::CardSubgraph, Sense::LessEq);
    for (ArcIndex a = 0; a < g.num_arcs(); ++a) {
        const Arc &e = g.arc(a);
        const bool t = in(e.tail), h = in(e.head);
        if (t && h)
            coef(ineq, a) = 2;
        else if (t != h)
            coef(ineq, a) = cross;
    }
    ineq.rhs = 2 * c[p];
    ineq.params.W = std::move(W);
    ineq.params.p = p;
    return ineq;
}

LinearInequality one_sided_min_cut(const Graph &g, std::vector<Node> S, Node v)
{
    S = sorted_unique(std::move(S));
    const Membership in(g, S, "S");
    require(g.has_node(v) && !in(v), "one_sided_min_cut: v must be a node outside S");
    require(!S.empty(), "one_sided_min_cut: S must be nonempty");
    if (is_path_kind(g.kind()))
        require_path_ends(g, in, "one_sided_min_cut");

    auto ineq = blank(g, ClassTag::OneSidedMinCut, Sense::GreaterEq);
    for (ArcIndex a = 0; a < g.num_arcs(); ++a) {
        const Arc &e = g.arc(a);
        if (in(e.tail) != in(e.head) && (g.directed() ? in(e.tail) : true))
            coef(ineq, a) += 1;
    }
    const auto &star = g.kind() == PolytopeKind::Path  ? g.in_arcs(v)
                       : g.kind() == PolytopeKind::Cycle ? g.out_arcs(v)
                                                         : g.incident(v);
    for (ArcIndex a : star)
        coef(ineq, a) -= 1;
    ineq.rhs = 0;
    ineq.params.S = std::move(S);
    ineq.params.v = v;
    return ineq;
}

LinearInequality min_cut(const Graph &g, std::vector<Node> S)
{
    S = sorted_unique(std::move(S));
    const Membership in(g, S, "S");
    require(!S.empty() && count(S) < static_cast<int>(g.nodes().size()),
            "min_cut: S must be a nonempty proper subset");
    if (is_path_kind(g.kind()))
        require_path_ends(g, in, "min_cut");

    auto ineq = blank(g, ClassTag::MinCut, Sense::GreaterEq);
    for (ArcIndex a = 0; a < g.num_arcs(); ++a) {
        const Arc &e = g.arc(a);
        if (in(e.tail) != in(e.head) && (g.directed() ? in(e.tail) : true))
            coef(ineq, a) = 1;
    }
    ineq.rhs = g.directed() ? 1 : 2;
    ineq.params.S = std::move(S);
    return ineq;
}

LinearInequality multiple_cycle_exclusion(const Graph &g, std::vector<Node> S,
                                          Node v, Node w)
{
    require(g.kind() == PolytopeKind::Cycle || g.kind() == PolytopeKind::UndirectedCycle,
            "multiple_cycle_exclusion is defined on cycle polytopes only");
    S = sorted_unique(std::move(S));
    const Membership in(g, S, "S");
    require(count(S) >= 2 && count(S) <= g.n() - 2,
            "multiple_cycle_exclusion: need 2 <= |S| <= n-2");
    require(g.has_node(v) && in(v), "multiple_cycle_exclusion: v must lie in S");
    require(g.has_node(w) && !in(w), "multiple_cycle_exclusion: w must lie outside S");

    auto ineq = blank(g, ClassTag::MultiCycleExcl, Sense::LessEq);
    add_star(g, ineq, v, 1);
    add_star(g, ineq, w, 1);
    for (ArcIndex a = 0; a < g.num_arcs(); ++a) {
        const Arc &e = g.arc(a);
        if (in(e.tail) != in(e.head) && (g.directed() ? in(e.tail) : true))
            coef(ineq, a) -= 1;
    }
    ineq.rhs = g.directed() ? 1 : 2;
    ineq.params.S = std::move(S);
    ineq.params.v = v;
    ineq.params.w = w;
    return ineq;
}

LinearInequality parity_exclusion(const Graph &g, std::vector<Node> S,
                                  std::vector<Node> T, Parity parity,
                                  const CardinalitySequence &c,
                                  std::optional<Node> r)
{
    S = sorted_unique(std::move(S));
    T = sorted_unique(std::move(T));
    const Membership inS(g, S, "S"), inT(g, T, "T");
    if (parity == Parity::Odd)
        require(c.all_even(), "odd exclusion needs every c_p even");
    else
        require(c.all_odd(), "even exclusion needs every c_p odd");

    const bool odd_cycle = parity == Parity::Odd && g.kind() == PolytopeKind::Cycle;
    require(!(parity == Parity::Odd && g.kind() == PolytopeKind::UndirectedCycle),
            "odd cycle exclusion has no undirected counterpart");
    if (odd_cycle) {
        if (!r)
            r = g.n();
        require(g.has_node(*r), "special node not in graph");
    } else {
        require(!r, "special node only applies to odd cycle exclusion");
    }

    for (Node v : g.nodes()) {
        const int hits = int(inS(v)) + int(inT(v)) + int(odd_cycle && v == *r);
        require(hits == 1, "S, T (and the special node) must partition the nodes");
    }
    if (is_path_kind(g.kind())) {
        require(inS(0), "parity exclusion on paths needs 0 in S");
        if (parity == Parity::Odd)
            require(inT(g.n()), "odd path exclusion needs n in T");
        else
            require(inS(g.n()), "even path exclusion needs n in S");
    }

    auto ineq = blank(g, parity == Parity::Odd ? ClassTag::OddExcl : ClassTag::EvenExcl,
                      Sense::GreaterEq);
    for (ArcIndex a = 0; a < g.num_arcs(); ++a) {
        const Arc &e = g.arc(a);
        if ((inS(e.tail) && inS(e.head)) || (inT(e.tail) && inT(e.head)))
            coef(ineq, a) = 1;
        else if (odd_cycle && inT(e.tail) && e.head == *r)
            coef(ineq, a) = 1;
        else if (odd_cycle && e.tail == *r && inT(e.head))
            coef(ineq, a) = -1;
    }
    ineq.rhs = odd_cycle ? 0 : 1;
    ineq.params.S = std::move(S);
    ineq.params.T = std::move(T);
    if (odd_cycle)
        ineq.params.r = r;
    return ineq;
}

bool has_mcf_bracket(const CardinalitySequence &c, int p)
{
    if (p < 2 || p > c.size() - 2)
        return false;
    return c[p + 2] == c[p + 1] + 2 && c[p + 1] + 2 == c[p] + 4;
}

LinearInequality modified_cf(const Graph &g, std::vector<Node> P,
                             std::vector<Node> Q, Node r,
                             const CardinalitySequence &c, int p)
{
    require(g.directed(), "modified_cf is defined on digraphs only");
    require(g.n() >= 6, "modified_cf needs n >= 6");
    require(c.size() >= 3, "modified_cf needs m >= 3");
    require(has_mcf_bracket(c, p),
            "modified_cf needs 2 <= p <= m-2 and c_{p+2} = c_{p+1}+2 = c_p+4");
    P = sorted_unique(std::move(P));
    Q = sorted_unique(std::move(Q));
    const Membership inP(g, P, "P"), inQ(g, Q, "Q");
    require(g.is_internal(r), "modified_cf: r must be an internal node");
    for (Node v : g.nodes()) {
        const int hits = int(inP(v)) + int(inQ(v)) + int(v == r);
        require(hits == 1, "modified_cf: P, Q, {r} must partition the nodes");
    }
    if (g.kind() == PolytopeKind::Path) {
        require_path_ends(g, inP, "modified_cf");
        require(count(P) == c[p] + 2, "modified_cf (path): need |P| = c_p + 2");
    } else {
        require(count(P) == c[p] + 1, "modified_cf: need |P| = c_p + 1");
    }

    auto ineq = blank(g, ClassTag::ModifiedCf, Sense::LessEq);
    for (ArcIndex a = 0; a < g.num_arcs(); ++a) {
        const Arc &e = g.arc(a);
        if (e.tail == r || e.head == r)
            continue;
        coef(ineq, a) = inP(e.tail) ? 1 : -1;
    }
    ineq.rhs = c[p];
    ineq.params.P = std::move(P);
    ineq.params.Q = std::move(Q);
    ineq.params.r = r;
    ineq.params.p = p;
    return ineq;
}

LinearInequality regenerate(const Graph &g, ClassTag tag,
                            const InequalityParams &params,
                            const CardinalitySequence &c)
{
    auto need = [](const auto &opt, const char *name) {
        require(opt.has_value(), std::string("missing parameter ") + name);
        return *opt;
    };
    switch (tag) {
    case ClassTag::Flow: return flow_conservation(g, need(params.v, "v"));
    case ClassTag::Degree: return degree_constraint(g, need(params.v, "v"));
    case ClassTag::Nonneg:
        return nonnegativity(g, g.index(need(params.v, "v"), need(params.w, "w")));
    case ClassTag::CardinalityBoundLo: return cardinality_bounds(g, c).first;
    case ClassTag::CardinalityBoundHi: return cardinality_bounds(g, c).second;
    case ClassTag::CfNode: return cf_node(g, params.W, c, need(params.p, "p"));
    case ClassTag::CfArc: return cf_arc(g, params.F, c, need(params.p, "p"));
    case ClassTag::CardSubgraph:
        return cardinality_subgraph(g, params.W, c, need(params.p, "p"));
    case ClassTag::OneSidedMinCut:
        return one_sided_min_cut(g, params.S, need(params.v, "v"));
    case ClassTag::MinCut: return min_cut(g, params.S);
    case ClassTag::MultiCycleExcl:
        return multiple_cycle_exclusion(g, params.S, need(params.v, "v"),
                                        need(params.w, "w"));
    case ClassTag::OddExcl:
        return parity_exclusion(g, params.S, params.T, Parity::Odd, c, params.r);
    case ClassTag::EvenExcl:
        return parity_exclusion(g, params.S, params.T, Parity::Even, c, params.r);
    case ClassTag::ModifiedCf:
        return modified_cf(g, params.P, params.Q, need(params.r, "r"), c,
                           need(params.p, "p"));
    case ClassTag::Custom: break;
    }
    throw InvalidParameter("custom inequalities cannot be regenerated");
}

} // namespace cardpoly
