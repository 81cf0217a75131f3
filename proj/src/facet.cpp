#include "cardpoly/facet.hpp"

#include "cardpoly/error.hpp"

namespace cardpoly {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
    }
    return "?";
}

bool is_delegated_sequence(const CardinalitySequence &c, int n)
{
    const auto &v = c.values();
    return v == std::vector<int>{2, n} || v == std::vector<int>{3, n} ||
           v == std::vector<int>{2, 3, n};
}

namespace {

FacetPrediction decided(bool facet, bool valid = true)
{
    return {facet ? Verdict::True : Verdict::False, facet, valid};
}

FacetPrediction delegated(std::optional<bool> stated)
{
    return {Verdict::Unknown, stated, true};
}

bool is_seq(const CardinalitySequence &c, std::initializer_list<int> v)
{
    return c.values() == std::vector<int>(v);
}

int size_of(const std::vector<Node> &s) { return static_cast<int>(s.size()); }

/// Bracket p of the visited-node count k, or throw.
int bracket(const CardinalitySequence &c, int k)
{
    auto p = c.forbidden_bracket(k);
    require(p.has_value(), "set size is not strictly between two allowed cardinalities");
    return *p;
}

// Node-counting forcing and subgraph conditions, written in the visited-node
// count k (|W| on cycles, |W|-1 on paths).
bool cf_condition(const CardinalitySequence &c, int n, int k)
{
    const int p = bracket(c, k);
    return (c[p + 1] - k >= 2 && c[p + 1] < n) || (c[p + 1] == n && k == n - 1);
}

bool subgraph_condition(const CardinalitySequence &c, int n, int k)
{
    const int p = bracket(c, k);
    return p + 1 < c.size() || (c[p + 1] == n && n == k + 1);
}

bool odd_path_condition(const CardinalitySequence &c, int s, int t)
{
    const int c2 = c[2];
    return (c.first() == 2 && 2 * s >= c2 + 2 && 2 * t >= c2 + 2) ||
           (c.first() >= 4 && 2 * s >= c2 && 2 * t >= c2);
}

bool even_path_condition(const CardinalitySequence &c, int s, int t)
{
    const int c2 = c[2];
    return (c.first() == 3 && 2 * (s - 1) >= c2 + 1 && 2 * t >= c2 - 1) ||
           (c.first() >= 5 && 2 * std::min(s - 1, t) >= c2 - 1);
}

bool cycle_bound_condition(int k, int n)
{
    return (k == 3 && n >= 5) || (4 <= k && k <= n - 1);
}

void require_parity(const CardinalitySequence &c, ClassTag tag)
{
    if (tag == ClassTag::OddExcl)
        require(c.all_even(), "odd exclusion needs every c_p even");
    if (tag == ClassTag::EvenExcl)
        require(c.all_odd() && c.first() >= 3, "even exclusion needs every c_p odd and c_1 >= 3");
}

[[noreturn]] void no_condition(ClassTag tag, PolytopeKind kind)
{
    throw InvalidParameter("no facet condition is published for " + to_string(tag) +
                           " on the " + to_string(kind) + " polytope");
}

FacetPrediction path_prediction(ClassTag tag, const InequalityParams &q, int n,
                                const CardinalitySequence &c)
{
    const int nodes = n + 1;
    const bool delegated_c = is_delegated_sequence(c, n);
    auto require_cs = [&] {
        require(n >= 4, "statement needs n >= 4");
        require(!is_seq(c, {2, 3}), "statement excludes c = (2,3)");
    };
    switch (tag) {
    case ClassTag::CardinalityBoundLo:
        return decided(4 <= c.first() && c.first() <= n - 1);
    case ClassTag::CardinalityBoundHi:
        return decided(4 <= c.last() && c.last() <= n - 1);
    case ClassTag::CfNode:
        require(n >= 4, "statement needs n >= 4");
        return decided(cf_condition(c, n, size_of(q.W) - 1));
    case ClassTag::CardSubgraph:
        return decided(subgraph_condition(c, n, size_of(q.W) - 1));
    case ClassTag::Nonneg: {
        require_cs();
        const bool inner = q.v && q.w && *q.v != 0 && *q.w != n;
        const bool stated = !is_seq(c, {2, n}) || (n >= 5 && inner);
        return delegated_c ? delegated(stated) : decided(stated);
    }
    case ClassTag::Degree:
        require_cs();
        return delegated_c ? delegated(!is_seq(c, {2, n})) : decided(true);
    case ClassTag::OneSidedMinCut: {
        require_cs();
        const int s = size_of(q.S);
        if (nodes - s < 2 || s <= c.first())
            return decided(false);
        if (c.first() <= 3)
            return delegated(!is_seq(c, {2, n}));
        return decided(true);
    }
    case ClassTag::MinCut: {
        require_cs();
        const int s = size_of(q.S);
        if (s > c.first())
            return decided(false, false);
        const bool stated = s >= 3 && nodes - s >= 2;
        return is_seq(c, {3, n}) ? delegated(stated) : decided(stated);
    }
    case ClassTag::OddExcl:
        require_parity(c, tag);
        return decided(odd_path_condition(c, size_of(q.S), size_of(q.T)));
    case ClassTag::EvenExcl:
        require_parity(c, tag);
        return decided(even_path_condition(c, size_of(q.S), size_of(q.T)));
    case ClassTag::ModifiedCf:
        return decided(true);
    default:
        no_condition(tag, PolytopeKind::Path);
    }
}

FacetPrediction cycle_prediction(ClassTag tag, const InequalityParams &q, int n,
                                 const CardinalitySequence &c)
{
    const int c1 = c.first();
    switch (tag) {
    case ClassTag::Nonneg: return decided(true);
    case ClassTag::Degree:
        return is_seq(c, {2, n}) ? delegated(true) : decided(true);
    case ClassTag::MultiCycleExcl: {
        const int s = size_of(q.S);
        return decided(s >= c1 && n - s >= c1 && !is_seq(c, {2, 3}) && !is_seq(c, {2, n}));
    }
    case ClassTag::MinCut: {
        const int s = size_of(q.S);
        if (s > c1 - 1 || n - s > c1 - 1)
            return decided(false, false);
        return decided(s >= 2 && n - s >= 2);
    }
    case ClassTag::OneSidedMinCut: {
        const int s = size_of(q.S);
        const bool valid = n - s <= c1 - 1;
        return decided(s >= c1 && 2 <= n - s && n - s <= c1 - 1, valid);
    }
    case ClassTag::CardinalityBoundLo: return decided(cycle_bound_condition(c.first(), n));
    case ClassTag::CardinalityBoundHi: return decided(cycle_bound_condition(c.last(), n));
    case ClassTag::CfNode: return decided(cf_condition(c, n, size_of(q.W)));
    case ClassTag::CardSubgraph: return decided(subgraph_condition(c, n, size_of(q.W)));
    case ClassTag::OddExcl: {
        require_parity(c, tag);
        const int s = size_of(q.S), t = size_of(q.T), c2 = c[2];
        return decided((c1 == 2 && 2 * s >= c2 && 2 * t >= c2) ||
                       (c1 >= 4 && 2 * s >= c2 - 2 && 2 * t >= c2 - 2));
    }
    case ClassTag::EvenExcl: {
        require_parity(c, tag);
        const int s = size_of(q.S), t = size_of(q.T);
        return decided(2 * s >= c[2] - 1 && 2 * t >= c[2] - 1);
    }
    case ClassTag::ModifiedCf: return decided(true);
    default: no_condition(tag, PolytopeKind::Cycle);
    }
}

FacetPrediction undirected_cycle_prediction(ClassTag tag, const InequalityParams &q,
                                            int n, const CardinalitySequence &c)
{
    require(c.first() >= 3, "undirected cycle statements need c_1 >= 3");
    const int c1 = c.first();
    switch (tag) {
    case ClassTag::Nonneg: return decided(n >= 5);
    case ClassTag::Degree: return decided(true);
    case ClassTag::MultiCycleExcl: {
        const int s = size_of(q.S);
        if (c1 <= s && s <= n - c1)
            return decided(true);
        return delegated(std::nullopt);
    }
    case ClassTag::MinCut:
    case ClassTag::OneSidedMinCut:
    case ClassTag::CfNode:
    case ClassTag::CardSubgraph:
    case ClassTag::EvenExcl:
        return cycle_prediction(tag, q, n, c);
    case ClassTag::CardinalityBoundLo: return decided(true);
    case ClassTag::CardinalityBoundHi: return decided(c.last() < n);
    default: no_condition(tag, PolytopeKind::UndirectedCycle);
    }
}

FacetPrediction undirected_path_prediction(ClassTag tag, const InequalityParams &q,
                                           int n, const CardinalitySequence &c)
{
    require(n >= 4, "statement needs n >= 4");
    require(!is_seq(c, {2, 3}), "statement excludes c = (2,3)");
    const int nodes = n + 1;
    const bool delegated_c = is_delegated_sequence(c, n);
    switch (tag) {
    case ClassTag::Nonneg: {
        require(q.v && q.w, "nonnegativity needs its edge");
        const Node a = std::min(*q.v, *q.w), b = std::max(*q.v, *q.w);
        // y_{0n} = 0 holds on every path: an implicit equation, never a facet.
        if (a == 0 && b == n)
            return decided(false);
        const bool internal = a != 0 && b != n;
        const bool stated = !is_seq(c, {2, n}) || internal;
        return delegated_c ? delegated(stated) : decided(stated);
    }
    case ClassTag::Degree:
        return delegated_c ? delegated(!is_seq(c, {2, n})) : decided(true);
    case ClassTag::MinCut: {
        const int s = size_of(q.S);
        if (s > c.first())
            return decided(false, false);
        const bool stated = s >= 3 && nodes - s >= 2;
        return is_seq(c, {3, n}) ? delegated(stated) : decided(stated);
    }
    case ClassTag::OneSidedMinCut: {
        const int s = size_of(q.S);
        require(s >= c.first() + 1, "one-sided min-cut statement needs |S| >= c_1 + 1");
        if (nodes - s < 2)
            return decided(false);
        return c.first() <= 3 ? delegated(true) : decided(true);
    }
    case ClassTag::CardinalityBoundLo: return decided(c.first() >= 4);
    case ClassTag::CardinalityBoundHi: return decided(c.last() < n);
    case ClassTag::CfNode:
    case ClassTag::CardSubgraph:
    case ClassTag::OddExcl:
    case ClassTag::EvenExcl:
        return path_prediction(tag, q, n, c);
    default: no_condition(tag, PolytopeKind::UndirectedPath);
    }
}

} // namespace

FacetPrediction facet_predicate(ClassTag tag, const InequalityParams &params,
                                int n, const CardinalitySequence &c,
                                PolytopeKind kind)
{
    require(c.size() >= 2, "facet statements need m >= 2");
    require(c.first() >= 2, "facet statements need c_1 >= 2");
    require(c.last() <= n, "c_m exceeds n");
    if (tag == ClassTag::Flow)
        return decided(false);
    switch (kind) {
    case PolytopeKind::Path: return path_prediction(tag, params, n, c);
    case PolytopeKind::Cycle: return cycle_prediction(tag, params, n, c);
    case PolytopeKind::UndirectedCycle: return undirected_cycle_prediction(tag, params, n, c);
    case PolytopeKind::UndirectedPath: return undirected_path_prediction(tag, params, n, c);
    }
    no_condition(tag, kind);
}

} // namespace cardpoly
