#include "cardpoly/separation.hpp"

#include "cardpoly/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>

namespace cardpoly {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

using Dense = std::vector<RationalVector>;

/// Capacities as a dense (n+1) x (n+1) matrix indexed by node id.
Dense dense_capacities(const Graph &g, std::span<const Rational> capacity)
{
    require(static_cast<int>(capacity.size()) == g.num_arcs(),
            "capacities do not match the graph");
    const std::size_t size = at(g.last_node()) + 1;
    Dense cap(size, RationalVector(size));
    for (ArcIndex a = 0; a < g.num_arcs(); ++a) {
        const Rational &q = capacity[at(a)];
        require(q >= 0, "capacities must be nonnegative");
        const Arc &e = g.arc(a);
        cap[at(e.tail)][at(e.head)] += q;
        if (!g.directed())
            cap[at(e.head)][at(e.tail)] += q;
    }
    return cap;
}

FlowResult dense_max_flow(Dense residual, Node s, Node t, const std::vector<Node> &nodes)
{
    Rational value = 0;
    const std::size_t size = residual.size();
    for (;;) {
        std::vector<int> parent(size, -1);
        parent[at(s)] = s;
        std::deque<Node> queue{s};
        while (!queue.empty() && parent[at(t)] < 0) {
            const Node u = queue.front();
            queue.pop_front();
            for (Node v : nodes)
                if (parent[at(v)] < 0 && sgn(residual[at(u)][at(v)]) > 0) {
                    parent[at(v)] = u;
                    queue.push_back(v);
                }
        }
        if (parent[at(t)] < 0)
            break;
        Rational push = residual[at(parent[at(t)])][at(t)];
        for (Node v = t; v != s; v = parent[at(v)])
            push = std::min(push, residual[at(parent[at(v)])][at(v)]);
        for (Node v = t; v != s; v = parent[at(v)]) {
            const Node u = parent[at(v)];
            residual[at(u)][at(v)] -= push;
            residual[at(v)][at(u)] += push;
        }
        value += push;
    }
    // Source side: nodes still reachable in the residual network.
    std::vector<bool> seen(size, false);
    seen[at(s)] = true;
    std::deque<Node> queue{s};
    while (!queue.empty()) {
        const Node u = queue.front();
        queue.pop_front();
        for (Node v : nodes)
            if (!seen[at(v)] && sgn(residual[at(u)][at(v)]) > 0) {
                seen[at(v)] = true;
                queue.push_back(v);
            }
    }
    FlowResult out{value, {}};
    for (Node v : nodes)
        if (seen[at(v)])
            out.source_side.push_back(v);
    return out;
}

bool contains(const std::vector<Node> &s, Node v)
{
    return std::find(s.begin(), s.end(), v) != s.end();
}

Rational star(const FractionalPoint &x, const std::vector<ArcIndex> &arcs)
{
    Rational sum = 0;
    for (ArcIndex a : arcs)
        sum += x[a];
    return sum;
}

/// Nodes sorted by value descending, ties by index ascending.
std::vector<Node> by_value(const std::vector<Node> &nodes, const RationalVector &value)
{
    std::vector<Node> out = nodes;
    std::stable_sort(out.begin(), out.end(), [&](Node a, Node b) {
        return value[at(a)] > value[at(b)];
    });
    return out;
}

void add_if_violated(SeparationResult &result, LinearInequality ineq, const FractionalPoint &x)
{
    if (sgn(ineq.violation(x.entries())) > 0)
        result.add(std::move(ineq));
}

std::vector<Node> minus(const std::vector<Node> &a, const std::vector<Node> &b)
{
    std::vector<Node> out;
    for (Node v : a)
        if (!contains(b, v))
            out.push_back(v);
    return out;
}

/// All (bracket, visited-count) pairs with c_p < k < c_{p+1}.
std::vector<std::pair<int, int>> forbidden_counts(const CardinalitySequence &c, int max_k)
{
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p < c.size(); ++p)
        for (int k = c[p] + 1; k < c[p + 1] && k <= max_k; ++k)
            out.emplace_back(p, k);
    return out;
}

/// Iterates over the k-subsets of `ground` in lexicographic order.
template <typename F>
void for_each_subset(const std::vector<Node> &ground, int k, F &&visit)
{
    const int n = static_cast<int>(ground.size());
    if (k < 0 || k > n)
        return;
    std::vector<int> idx(at(k));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Node> pick(at(k));
    for (;;) {
        for (int i = 0; i < k; ++i)
            pick[at(i)] = ground[at(idx[at(i)])];
        visit(pick);
        int i = k - 1;
        while (i >= 0 && idx[at(i)] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[at(i)];
        for (int j = i + 1; j < k; ++j)
            idx[at(j)] = idx[at(j - 1)] + 1;
    }
}

} // namespace

FractionalPoint::FractionalPoint(RationalVector entries) : entries_(std::move(entries))
{
    for (const auto &q : entries_)
        require(q >= 0, "fractional point has a negative entry");
}

FractionalPoint FractionalPoint::from(const IncidenceVector &x)
{
    return FractionalPoint(x.to_rational());
}

bool FractionalPoint::integral() const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational &q) { return is_integral(q); });
}

void SeparationResult::add(LinearInequality ineq)
{
    Rational v = ineq.violation(point_.entries());
    if (sgn(v) <= 0)
        throw InternalError("separator emitted an inequality that is not violated");
    cuts_.push_back({std::move(ineq), std::move(v)});
}

void SeparationResult::merge(const SeparationResult &other)
{
    for (const auto &cut : other.cuts_)
        add(cut.ineq);
    exhausted_ = exhausted_ && other.exhausted_;
}

Rational SeparationResult::max_violation() const
{
    Rational best = 0;
    for (const auto &cut : cuts_)
        best = std::max(best, cut.violation);
    return best;
}

FlowResult max_flow(const Graph &g, std::span<const Rational> capacity, Node s, Node t)
{
    require(g.has_node(s) && g.has_node(t), "flow endpoints must be nodes of the graph");
    require(s != t, "source and sink must differ");
    return dense_max_flow(dense_capacities(g, capacity), s, t, g.nodes());
}

FlowResult min_cut_between(const Graph &g, std::span<const Rational> capacity,
                           const std::vector<Node> &sources, Node sink)
{
    require(!sources.empty(), "need at least one source");
    require(!contains(sources, sink), "sink cannot be a source");
    auto cap = dense_capacities(g, capacity);
    Rational big = 1;
    for (const auto &q : capacity)
        big += q;
    const Node s = sources.front();
    for (Node v : sources)
        if (v != s)
            cap[at(s)][at(v)] += big;
    return dense_max_flow(std::move(cap), s, sink, g.nodes());
}

SeparationResult separate_one_sided_min_cut(const Graph &g, const FractionalPoint &x,
                                            const CardinalitySequence &c)
{
    require(x.dimension() == g.num_arcs(), "point does not match the graph");
    SeparationResult result(x);
    if (is_path_kind(g.kind())) {
        for (Node v : g.internal_nodes()) {
            const Rational rhs = star(x, g.directed() ? g.in_arcs(v) : g.incident(v));
            auto best = min_cut_between(g, x.entries(), {0, g.n()}, v);
            if (best.value < rhs)
                result.add(one_sided_min_cut(g, best.source_side, v));
        }
        return result;
    }
    // On cycle graphs the inequality is valid only while every allowed
    // cycle through v leaves N\S, i.e. |N\S| <= c_1 - 1.
    const std::vector<Node> nodes = g.nodes();
    for (Node v : nodes) {
        const Rational rhs = star(x, g.directed() ? g.out_arcs(v) : g.incident(v));
        const std::vector<Node> others = minus(nodes, {v});
        std::optional<std::pair<Rational, std::vector<Node>>> best;
        for (int extra = 0; extra <= c.first() - 2; ++extra)
            for_each_subset(others, extra, [&](const std::vector<Node> &pick) {
                std::vector<Node> T = pick;
                T.push_back(v);
                Rational value = 0;
                for (ArcIndex a = 0; a < g.num_arcs(); ++a) {
                    const Arc &e = g.arc(a);
                    const bool tail_out = contains(T, e.tail), head_out = contains(T, e.head);
                    if (g.directed() ? (!tail_out && head_out) : tail_out != head_out)
                        value += x[a];
                }
                if (!best || value < best->first)
                    best.emplace(value, minus(nodes, T));
            });
        if (best && best->first < rhs)
            result.add(one_sided_min_cut(g, best->second, v));
    }
    return result;
}

SeparationResult separate_multiple_cycle_exclusion(const Graph &g, const FractionalPoint &x)
{
    require(!is_path_kind(g.kind()), "multiple cycle exclusion lives on cycle graphs");
    require(x.dimension() == g.num_arcs(), "point does not match the graph");
    SeparationResult result(x);
    const RationalVector y = node_values(g, x);
    const Rational bound = g.directed() ? 1 : 2;
    for (Node v : g.nodes())
        for (Node w : g.nodes()) {
            if (v == w || (!g.directed() && w < v))
                continue;
            if (y[at(v)] + y[at(w)] <= bound)
                continue;
            auto cut = min_cut_between(g, x.entries(), {v}, w);
            const int s = static_cast<int>(cut.source_side.size());
            // Outside this window the inequality is a degree constraint.
            if (s < 2 || s > g.n() - 2)
                continue;
            if (y[at(v)] + y[at(w)] - cut.value > bound)
                result.add(multiple_cycle_exclusion(g, cut.source_side, v, w));
        }
    return result;
}

RationalVector node_values(const Graph &g, const FractionalPoint &x)
{
    require(x.dimension() == g.num_arcs(), "point does not match the graph");
    RationalVector y(at(g.last_node()) + 1);
    for (Node v : g.nodes())
        y[at(v)] = star(x, g.directed() ? g.out_arcs(v) : g.incident(v));
    return y;
}

SeparationResult separate_cf_greedy(const Graph &g, const FractionalPoint &x,
                                    const CardinalitySequence &c)
{
    SeparationResult result(x);
    const bool path = is_path_kind(g.kind());
    const auto order = by_value(g.internal_nodes(), node_values(g, x));
    for (auto [p, k] : forbidden_counts(c, g.n())) {
        // Path W holds 0, n and k-1 internal nodes (k visited nodes).
        const int take = path ? k - 1 : k;
        if (take > static_cast<int>(order.size()))
            continue;
        std::vector<Node> W(order.begin(), order.begin() + take);
        if (path) {
            W.push_back(0);
            W.push_back(g.n());
        }
        add_if_violated(result, cf_node(g, W, c, p), x);
    }
    return result;
}

SeparationResult separate_cf_arc_greedy(const Graph &g, const FractionalPoint &x,
                                        const CardinalitySequence &c)
{
    require(x.dimension() == g.num_arcs(), "point does not match the graph");
    SeparationResult result(x);
    std::vector<ArcIndex> order(at(g.num_arcs()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](ArcIndex a, ArcIndex b) { return x[a] > x[b]; });
    for (auto [p, k] : forbidden_counts(c, g.num_arcs())) {
        std::vector<Arc> F;
        for (int i = 0; i < k; ++i)
            F.push_back(g.arc(order[at(i)]));
        add_if_violated(result, cf_arc(g, F, c, p), x);
    }
    return result;
}

SeparationResult separate_mcf(const Graph &g, const FractionalPoint &x,
                              const CardinalitySequence &c)
{
    require(x.dimension() == g.num_arcs(), "point does not match the graph");
    SeparationResult result(x);
    if (!g.directed() || g.n() < 6 || c.size() < 3)
        return result;
    const bool path = g.kind() == PolytopeKind::Path;
    const RationalVector y = node_values(g, x);
    for (int p = 2; p <= c.size() - 2; ++p) {
        if (!has_mcf_bracket(c, p))
            continue;
        for (Node r : g.internal_nodes()) {
            // z_v = x(out(v)) - x_{vr}; the MCF left-hand side is
            // sum_P z - sum_Q z.
            RationalVector z = y;
            for (Node v : g.nodes())
                if (v != r)
                    if (auto a = g.find(v, r))
                        z[at(v)] -= x[*a];
            std::vector<Node> pool;
            for (Node v : g.internal_nodes())
                if (v != r)
                    pool.push_back(v);
            // Path P holds 0, n and c_p internal nodes; cycle P holds c_p+1 nodes.
            const int want = path ? c[p] : c[p] + 1;
            if (want > static_cast<int>(pool.size()))
                continue;
            const auto order = by_value(pool, z);
            std::vector<Node> P(order.begin(), order.begin() + want);
            if (path) {
                P.push_back(0);
                P.push_back(g.n());
            }
            std::sort(P.begin(), P.end());
            auto Q = minus(minus(g.nodes(), P), {r});
            add_if_violated(result, modified_cf(g, P, Q, r, c, p), x);
        }
    }
    return result;
}

namespace {

/// Left-hand side of the parity constraint for a side labelling (0 = S,
/// 1 = T, 2 = r, -1 = absent node id).
Rational parity_lhs(const Graph &g, const FractionalPoint &x, const std::vector<int> &side)
{
    Rational sum = 0;
    for (ArcIndex a = 0; a < g.num_arcs(); ++a) {
        const Arc &e = g.arc(a);
        const int s = side[at(e.tail)], t = side[at(e.head)];
        if (s == t && (s == 0 || s == 1))
            sum += x[a];
        else if (s == 1 && t == 2)
            sum += x[a];
        else if (s == 2 && t == 1)
            sum -= x[a];
    }
    return sum;
}

} // namespace

SeparationResult separate_parity_exclusion(const Graph &g, const FractionalPoint &x,
                                           const CardinalitySequence &c, Parity parity,
                                           int budget)
{
    require(x.dimension() == g.num_arcs(), "point does not match the graph");
    if (parity == Parity::Odd)
        require(c.all_even(), "odd exclusion needs every c_p even");
    else
        require(c.all_odd() && c.first() >= 3, "even exclusion needs every c_p odd and c_1 >= 3");
    const bool path = is_path_kind(g.kind());
    const bool odd_cycle = parity == Parity::Odd && !path;
    require(!(odd_cycle && !g.directed()), "odd exclusion has no undirected cycle form");
    const Rational rhs = odd_cycle ? 0 : 1;
    const bool exhaustive = g.n() <= budget;
    SeparationResult result(x, exhaustive);

    const std::vector<Node> specials =
        odd_cycle ? g.nodes() : std::vector<Node>{-1};
    for (Node r : specials) {
        std::vector<Node> free;
        for (Node v : g.nodes())
            if (!(path && (v == 0 || v == g.n())) && v != r)
                free.push_back(v);
        std::vector<int> side(at(g.last_node()) + 1, -1);
        if (path) {
            side[0] = 0;
            side[at(g.n())] = parity == Parity::Odd ? 1 : 0;
        }
        if (r >= 0)
            side[at(r)] = 2;
        auto evaluate = [&] { return parity_lhs(g, x, side); };

        std::optional<Rational> best;
        std::vector<int> best_side;
        auto consider = [&] {
            Rational v = evaluate();
            if (!best || v < *best) {
                best = v;
                best_side = side;
            }
        };
        if (exhaustive) {
            const unsigned total = 1u << free.size();
            for (unsigned mask = 0; mask < total; ++mask) {
                for (std::size_t i = 0; i < free.size(); ++i)
                    side[at(free[i])] = (mask >> i) & 1u;
                consider();
            }
        } else {
            for (std::size_t i = 0; i < free.size(); ++i)
                side[at(free[i])] = static_cast<int>(i % 2);
            consider();
            bool improved = true;
            while (improved) {
                improved = false;
                for (Node v : free) {
                    side = best_side;
                    side[at(v)] ^= 1;
                    const Rational before = *best;
                    consider();
                    if (*best < before)
                        improved = true;
                }
            }
        }
        if (best && *best < rhs) {
            std::vector<Node> S, T;
            for (Node v : g.nodes()) {
                if (best_side[at(v)] == 0)
                    S.push_back(v);
                else if (best_side[at(v)] == 1)
                    T.push_back(v);
            }
            result.add(parity_exclusion(g, S, T, parity, c,
                                        r >= 0 ? std::optional<Node>(r) : std::nullopt));
        }
    }
    return result;
}

SeparationResult separate_cardinality_subgraph(const Graph &g, const FractionalPoint &x,
                                               const CardinalitySequence &c, int budget)
{
    require(x.dimension() == g.num_arcs(), "point does not match the graph");
    const bool path = is_path_kind(g.kind());
    const bool exhaustive = g.n() <= budget;
    SeparationResult result(x, exhaustive);
    const auto free = g.internal_nodes();
    const std::vector<Node> forced = path ? std::vector<Node>{0, g.n()} : std::vector<Node>{};

    for (auto [p, k] : forbidden_counts(c, g.n())) {
        const int take = path ? k - 1 : k;
        if (take > static_cast<int>(free.size()))
            continue;
        // |W|-c_p-1 on cycles and |W|-c_p-2 on paths are both k-c_p-1.
        const Rational cross = k - c[p] - 1;
        std::vector<int> side(at(g.last_node()) + 1, -1);
        auto lhs_of = [&](const std::vector<Node> &inner) {
            std::fill(side.begin(), side.end(), -1);
            for (Node v : g.nodes())
                side[at(v)] = 1;
            for (Node v : inner)
                side[at(v)] = 0;
            for (Node v : forced)
                side[at(v)] = 0;
            Rational sum = 0;
            for (ArcIndex a = 0; a < g.num_arcs(); ++a) {
                const Arc &e = g.arc(a);
                const int s = side[at(e.tail)], t = side[at(e.head)];
                if (s == 0 && t == 0)
                    sum += 2 * x[a];
                else if (s != t)
                    sum -= cross * x[a];
            }
            return sum;
        };
        std::optional<Rational> best;
        std::vector<Node> best_set;
        auto consider = [&](const std::vector<Node> &inner) {
            Rational v = lhs_of(inner);
            if (!best || v > *best) {
                best = v;
                best_set = inner;
            }
        };
        if (exhaustive) {
            for_each_subset(free, take, consider);
        } else {
            const auto order = by_value(free, node_values(g, x));
            consider(std::vector<Node>(order.begin(), order.begin() + take));
            bool improved = true;
            while (improved) {
                improved = false;
                const auto current = best_set;
                for (std::size_t i = 0; i < current.size() && !improved; ++i)
                    for (Node out : minus(free, current)) {
                        auto trial = current;
                        trial[i] = out;
                        const Rational before = *best;
                        consider(trial);
                        if (*best > before) {
                            improved = true;
                            break;
                        }
                    }
            }
        }
        if (best && *best > 2 * c[p]) {
            auto W = best_set;
            W.insert(W.end(), forced.begin(), forced.end());
            result.add(cardinality_subgraph(g, W, c, p));
        }
    }
    return result;
}

} // namespace cardpoly
