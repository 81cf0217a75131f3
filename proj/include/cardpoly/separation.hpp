/**
 * @file separation.hpp
 * @brief Separation oracles for fractional points.
 *
 * One-sided min-cut, node and arc cardinality forcing, modified
 * cardinality forcing and multiple cycle exclusion are separated exactly.
 * Parity exclusion and cardinality-subgraph separation are exhaustive up
 * to a node budget and fall back to local search above it; the result
 * says which of the two happened.
 */

#ifndef CARDPOLY_SEPARATION_HPP
#define CARDPOLY_SEPARATION_HPP

#include "cardpoly/generators.hpp"
#include "cardpoly/inequality.hpp"
#include "cardpoly/model.hpp"

#include <span>
#include <vector>

namespace cardpoly {

/// Arc-indexed point with nonnegative rational entries.
class FractionalPoint {
public:
    explicit FractionalPoint(RationalVector entries);
    static FractionalPoint from(const IncidenceVector &x);

    std::span<const Rational> entries() const { return entries_; }
    const Rational &operator[](ArcIndex a) const { return entries_.at(static_cast<std::size_t>(a)); }
    int dimension() const { return static_cast<int>(entries_.size()); }
    bool integral() const;

private:
    RationalVector entries_;
};

struct ViolatedCut {
    LinearInequality ineq;
    Rational violation;
};

/// Cuts found by one oracle call. add() re-evaluates every cut at the
/// queried point and refuses one that is not violated.
class SeparationResult {
public:
    explicit SeparationResult(const FractionalPoint &x, bool exhausted = true)
        : point_(x), exhausted_(exhausted) {}

    void add(LinearInequality ineq);
    void merge(const SeparationResult &other);
    void set_exhausted(bool value) { exhausted_ = value; }

    const std::vector<ViolatedCut> &cuts() const { return cuts_; }
    bool empty() const { return cuts_.empty(); }
    /// True when the oracle searched its whole class.
    bool exhausted() const { return exhausted_; }
    /// Largest violation among the cuts (0 when empty).
    Rational max_violation() const;

private:
    FractionalPoint point_;
    bool exhausted_;
    std::vector<ViolatedCut> cuts_;
};

struct FlowResult {
    Rational value;
    /// Source side of a minimum cut.
    std::vector<Node> source_side;
};

/// Exact maximum flow by shortest augmenting paths. Undirected edges carry
/// their capacity in both directions.
FlowResult max_flow(const Graph &g, std::span<const Rational> capacity, Node s, Node t);

/// Minimum cut x((S:N\S)) over S containing every node of `sources` and
/// not containing `sink`; arcs are read in both directions on undirected
/// graphs.
FlowResult min_cut_between(const Graph &g, std::span<const Rational> capacity,
                           const std::vector<Node> &sources, Node sink);

/// Most violated one-sided min-cut inequality for every node v outside S,
/// if any. Path kinds keep 0 and n in S and use a max-flow per v. On cycle
/// kinds the inequality is valid only for |N\S| <= c_1 - 1, so the sets
/// N\S containing v are enumerated up to that size.
SeparationResult separate_one_sided_min_cut(const Graph &g, const FractionalPoint &x,
                                            const CardinalitySequence &c);

/// Most violated multiple-cycle-exclusion inequality for every ordered
/// pair (v, w) on cycle kinds. Exact.
SeparationResult separate_multiple_cycle_exclusion(const Graph &g, const FractionalPoint &x);

/// Per-node values y*_i: x(out(i)) on digraphs, y(delta(i)) on undirected
/// graphs.
RationalVector node_values(const Graph &g, const FractionalPoint &x);

/// For every forbidden node count, the node cardinality-forcing
/// inequality over the prefix of nodes sorted by y* (descending, ties by
/// index); 0 and n are forced into W on path kinds. Exact.
SeparationResult separate_cf_greedy(const Graph &g, const FractionalPoint &x,
                                    const CardinalitySequence &c);

/// Same for the arc-counting variant: F is a prefix of the arcs sorted by
/// x* for every forbidden |F|. Exact.
SeparationResult separate_cf_arc_greedy(const Graph &g, const FractionalPoint &x,
                                        const CardinalitySequence &c);

/// Modified cardinality forcing: for every MCF bracket p and every
/// internal r, the greedy choice of P on N\{r}. Exact for the class.
/// Empty when c has no MCF bracket or the graph is too small.
SeparationResult separate_mcf(const Graph &g, const FractionalPoint &x,
                              const CardinalitySequence &c);

/// Parity exclusion. Exhaustive over all partitions (and all special
/// nodes r for the odd cycle form) when n <= budget; single-node flip
/// local search otherwise.
SeparationResult separate_parity_exclusion(const Graph &g, const FractionalPoint &x,
                                           const CardinalitySequence &c, Parity parity,
                                           int budget);

/// Cardinality-subgraph inequalities. Exhaustive over W of every
/// forbidden size when n <= budget; greedy node swaps otherwise.
SeparationResult separate_cardinality_subgraph(const Graph &g, const FractionalPoint &x,
                                               const CardinalitySequence &c, int budget);

} // namespace cardpoly

#endif
