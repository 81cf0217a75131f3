#include "cardpoly/solver.hpp"

#include "cardpoly/error.hpp"
#include "cardpoly/generators.hpp"
#include "cardpoly/separation.hpp"

#include <set>

namespace cardpoly {

std::string to_string(Certificate c)
{
    switch (c) {
    case Certificate::CuttingPlaneIntegral: return "cutting-plane-integral";
    case Certificate::Branch: return "branch";
    case Certificate::EnumerationFallback: return "enumeration-fallback";
    }
    return "?";
}

void Instance::validate() const
{
    const Graph g = Graph::for_kind(kind, n);
    require(static_cast<int>(weights.size()) == g.num_arcs(),
            "instance needs one weight per arc");
    validate_sequence_for(kind, n, c);
}

std::vector<LinearInequality> initial_constraints(const Graph &g, const CardinalitySequence &c)
{
    require(g.directed(), "the cutting-plane model is defined on digraphs");
    std::vector<LinearInequality> out;
    for (Node v : g.nodes())
        out.push_back(flow_conservation(g, v));
    for (Node v : g.internal_nodes())
        out.push_back(degree_constraint(g, v));
    auto [lo, hi] = cardinality_bounds(g, c);
    out.push_back(std::move(lo));
    out.push_back(std::move(hi));
    return out;
}

std::optional<std::pair<Rational, IncidenceVector>> enumerate_optimum(const Instance &instance)
{
    instance.validate();
    const Graph g = Graph::for_kind(instance.kind, instance.n);
    std::optional<std::pair<Rational, IncidenceVector>> best;
    for (auto &x : enumerate_feasible(g, instance.c)) {
        Rational v = 0;
        for (ArcIndex a : x.support())
            v += instance.weights[static_cast<std::size_t>(a)];
        const bool better = !best || (instance.objective == Objective::Minimize ? v < best->first
                                                                                : v > best->first);
        if (better)
            best.emplace(v, std::move(x));
    }
    return best;
}

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

struct BranchNode {
    RationalVector lower, upper;
    int depth = 0;
};

/// Incidence vector of an integral LP point if it is a feasible path or
/// cycle of allowed cardinality.
std::optional<IncidenceVector> as_feasible(const Graph &g, const CardinalitySequence &c,
                                           const RationalVector &x)
{
    std::vector<std::uint8_t> entries(x.size());
    for (std::size_t a = 0; a < x.size(); ++a)
        entries[a] = x[a] == 1 ? 1 : 0;
    const bool path = g.kind() == PolytopeKind::Path;
    // Follow successors from the start node.
    std::vector<Node> walk;
    Node start = path ? 0 : -1;
    if (!path)
        for (ArcIndex a = 0; a < g.num_arcs(); ++a)
            if (entries[at(a)]) {
                start = g.arc(a).tail;
                break;
            }
    if (start < 0)
        return std::nullopt;
    std::set<Node> seen;
    Node v = start;
    int used = 0;
    for (;;) {
        walk.push_back(v);
        seen.insert(v);
        std::optional<Node> next;
        for (ArcIndex a : g.out_arcs(v))
            if (entries[at(a)]) {
                if (next)
                    return std::nullopt;
                next = g.arc(a).head;
            }
        if (!next)
            break;
        ++used;
        if (!path && *next == start)
            break;
        if (seen.contains(*next))
            return std::nullopt;
        v = *next;
    }
    const int total = static_cast<int>(std::count(entries.begin(), entries.end(), 1));
    if (used != total || !c.contains(total))
        return std::nullopt;
    if (path && walk.back() != g.n())
        return std::nullopt;
    return IncidenceVector(path ? IncidenceVector::Shape::Path : IncidenceVector::Shape::Cycle,
                           std::move(entries), std::move(walk));
}

class CutPool {
public:
    bool add(const LinearInequality &ineq)
    {
        if (!keys_.insert(ineq.key()).second)
            return false;
        rows_.push_back(ineq);
        return true;
    }
    const std::vector<LinearInequality> &rows() const { return rows_; }

private:
    std::set<std::string> keys_;
    std::vector<LinearInequality> rows_;
};

/// Runs the configured separators; exact ones first, the budgeted ones
/// only when the exact ones come back empty.
std::map<std::string, int> separate_round(const Graph &g, const CardinalitySequence &c,
                                          const SolverConfig &cfg, const RationalVector &point,
                                          CutPool &pool)
{
    std::map<std::string, int> added;
    const FractionalPoint x(point);
    auto take = [&](const SeparationResult &r) {
        for (const auto &cut : r.cuts())
            if (pool.add(cut.ineq))
                ++added[to_string(cut.ineq.tag)];
    };
    const bool cycle = g.kind() == PolytopeKind::Cycle;
    if (cfg.one_sided_min_cut)
        take(separate_one_sided_min_cut(g, x, c));
    if (cycle && cfg.multiple_cycle_exclusion)
        take(separate_multiple_cycle_exclusion(g, x));
    if (cfg.cf_node)
        take(separate_cf_greedy(g, x, c));
    if (cfg.mcf)
        take(separate_mcf(g, x, c));
    if (!added.empty())
        return added;
    if (cfg.parity_exclusion) {
        if (c.all_even())
            take(separate_parity_exclusion(g, x, c, Parity::Odd, cfg.budget));
        else if (c.all_odd() && c.first() >= 3)
            take(separate_parity_exclusion(g, x, c, Parity::Even, cfg.budget));
    }
    if (cfg.cardinality_subgraph)
        take(separate_cardinality_subgraph(g, x, c, cfg.budget));
    return added;
}

int most_fractional(const RationalVector &x)
{
    int best = -1;
    Rational best_gap;
    const Rational half(1, 2);
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (is_integral(x[a]))
            continue;
        const Rational gap = abs(x[a] - half);
        if (best < 0 || gap < best_gap) {
            best = static_cast<int>(a);
            best_gap = gap;
        }
    }
    return best;
}

/// Finishes `log` (possibly holding earlier LP iterations) by enumeration.
SolveLog solve_by_enumeration(const Instance &instance, SolveLog log = {})
{
    log.optimum.reset();
    log.status = SolveStatus::Infeasible;
    log.value = 0;
    log.certificate = Certificate::EnumerationFallback;
    if (auto best = enumerate_optimum(instance)) {
        log.status = SolveStatus::Optimal;
        log.value = best->first;
        log.optimum = std::move(best->second);
    }
    log.cross_checked = true;
    return log;
}

} // namespace

SolveLog solve(const Instance &instance, const SolverConfig &config)
{
    instance.validate();
    if (!is_directed_kind(instance.kind))
        return solve_by_enumeration(instance);

    const Graph g = Graph::for_kind(instance.kind, instance.n);
    const bool maximize = instance.objective == Objective::Maximize;
    RationalVector cost = instance.weights;
    if (maximize)
        for (auto &q : cost)
            q = -q;

    CutPool pool;
    for (auto &row : initial_constraints(g, instance.c))
        pool.add(row);

    SolveLog log;
    std::optional<Rational> incumbent;
    std::vector<BranchNode> stack;
    const int arcs = g.num_arcs();
    stack.push_back({RationalVector(at(arcs), Rational(0)), RationalVector(at(arcs), Rational(1)), 0});
    bool root_integral = false;

    while (!stack.empty()) {
        if (log.branch_nodes >= config.max_nodes) {
            if (instance.n <= config.budget)
                return solve_by_enumeration(instance, std::move(log));
            throw InternalError("branch-and-bound node limit reached");
        }
        BranchNode node = std::move(stack.back());
        stack.pop_back();
        const int id = log.branch_nodes++;

        for (;;) {
            const LpResult lp = lp_solve(pool.rows(), cost, node.lower, node.upper);
            if (lp.status != LpStatus::Optimal)
                break;
            if (incumbent && lp.value >= *incumbent)
                break;
            SolveIteration it;
            it.node = id;
            it.depth = node.depth;
            it.lp_value = maximize ? -lp.value : lp.value;
            it.integral = FractionalPoint(lp.point).integral();
            it.cuts_added = separate_round(g, instance.c, config, lp.point, pool);
            const bool cut = !it.cuts_added.empty();
            log.iterations.push_back(it);
            if (cut)
                continue;

            if (it.integral) {
                auto x = as_feasible(g, instance.c, lp.point);
                if (!x) {
                    // Only reachable when exact separators are switched off.
                    if (instance.n <= config.budget)
                        return solve_by_enumeration(instance, std::move(log));
                    throw InternalError("integral LP point satisfies every cut but is infeasible");
                }
                incumbent = lp.value;
                log.optimum = std::move(*x);
                if (id == 0)
                    root_integral = true;
                break;
            }
            const int a = most_fractional(lp.point);
            BranchNode down = node, up = node;
            down.upper[at(a)] = 0;
            up.lower[at(a)] = 1;
            down.depth = up.depth = node.depth + 1;
            stack.push_back(std::move(down));
            stack.push_back(std::move(up));
            break;
        }
    }

    log.certificate = root_integral && log.branch_nodes == 1 ? Certificate::CuttingPlaneIntegral
                                                             : Certificate::Branch;
    if (incumbent) {
        log.status = SolveStatus::Optimal;
        log.value = maximize ? -*incumbent : *incumbent;
    }
    if (config.cross_check && instance.n <= config.budget) {
        const auto best = enumerate_optimum(instance);
        const bool agree = best ? (incumbent && best->first == log.value) : !incumbent;
        if (!agree)
            throw InternalError("solver disagrees with enumeration");
        log.cross_checked = true;
    }
    return log;
}

} // namespace cardpoly
