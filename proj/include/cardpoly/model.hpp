/**
 * @file model.hpp
 * @brief Graphs, cardinality sequences and enumeration of feasible
 *        paths and cycles.
 *
 * Four polytope kinds share one graph type:
 *   - Path:            digraph on nodes 0..n, arcs (0,i), (i,n) and every
 *                      ordered pair of internal nodes; (0,n) is absent.
 *   - Cycle:           complete digraph on nodes 1..n.
 *   - UndirectedPath:  complete graph on nodes 0..n.
 *   - UndirectedCycle: complete graph on nodes 1..n.
 *
 * Arcs (edges) are ordered lexicographically by (tail, head) at
 * construction and that order never changes; every vector in the library
 * is indexed by it.
 */

#ifndef CARDPOLY_MODEL_HPP
#define CARDPOLY_MODEL_HPP

#include "cardpoly/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cardpoly {

using Node = int;
using ArcIndex = int;

struct Arc {
    Node tail;
    Node head;
    friend bool operator==(const Arc &, const Arc &) = default;
    friend auto operator<=>(const Arc &, const Arc &) = default;
};

enum class PolytopeKind { Path, Cycle, UndirectedPath, UndirectedCycle };

std::string to_string(PolytopeKind kind);
PolytopeKind parse_polytope_kind(const std::string &text);

inline bool is_path_kind(PolytopeKind k)
{
    return k == PolytopeKind::Path || k == PolytopeKind::UndirectedPath;
}
inline bool is_directed_kind(PolytopeKind k)
{
    return k == PolytopeKind::Path || k == PolytopeKind::Cycle;
}

/// Strictly increasing list c_1 < ... < c_m of allowed cardinalities.
class CardinalitySequence {
public:
    /// Throws InvalidParameter unless values is nonempty, strictly
    /// increasing and positive.
    explicit CardinalitySequence(std::vector<int> values);

    /// Additional check for cycle polytopes (c_1 >= 2).
    void require_cycle_valid() const;

    int size() const { return static_cast<int>(values_.size()); }
    /// 1-based access, matching c_1..c_m.
    int operator[](int p) const { return values_.at(static_cast<std::size_t>(p - 1)); }
    int first() const { return values_.front(); }
    int last() const { return values_.back(); }
    const std::vector<int> &values() const { return values_; }

    bool contains(int k) const;

    /// Returns p with c_p < k < c_{p+1}, or nothing if k is not strictly
    /// inside a gap between consecutive allowed values.
    std::optional<int> forbidden_bracket(int k) const;

    bool all_even() const;
    bool all_odd() const;

    std::string to_string() const;

    friend bool operator==(const CardinalitySequence &,
                           const CardinalitySequence &) = default;

private:
    std::vector<int> values_;
};

/// Loop-free graph with a frozen lexicographic arc order.
class Graph {
public:
    /// Path digraph on nodes 0..n (n >= 3).
    static Graph path_digraph(int n);
    /// Complete digraph on nodes 1..n (n >= 2).
    static Graph complete_digraph(int n);
    /// Complete graph on nodes 0..n, the ground graph of undirected
    /// (0,n)-paths (n >= 3).
    static Graph path_graph(int n);
    /// Complete graph on nodes 1..n (n >= 3).
    static Graph complete_graph(int n);

    static Graph for_kind(PolytopeKind kind, int n);

    PolytopeKind kind() const { return kind_; }
    int n() const { return n_; }
    bool directed() const { return is_directed_kind(kind_); }

    int num_arcs() const { return static_cast<int>(arcs_.size()); }
    std::span<const Arc> arcs() const { return arcs_; }
    const Arc &arc(ArcIndex a) const { return arcs_.at(static_cast<std::size_t>(a)); }

    /// Node ids: 0..n for path kinds, 1..n for cycle kinds.
    const std::vector<Node> &nodes() const { return nodes_; }
    Node first_node() const { return nodes_.front(); }
    Node last_node() const { return nodes_.back(); }
    bool has_node(Node v) const;
    /// Nodes other than 0 and n for path kinds; all nodes for cycle kinds.
    std::vector<Node> internal_nodes() const;
    bool is_internal(Node v) const;

    /// Index of arc (tail, head); order-insensitive for undirected graphs.
    std::optional<ArcIndex> find(Node tail, Node head) const;
    ArcIndex index(Node tail, Node head) const;

    const std::vector<ArcIndex> &out_arcs(Node v) const;
    const std::vector<ArcIndex> &in_arcs(Node v) const;
    /// All arcs incident with v (delta(v) for undirected graphs).
    const std::vector<ArcIndex> &incident(Node v) const;

    /// Right-hand side of flow conservation, out(v) - in(v), for directed
    /// graphs: 1 at the source, -1 at the sink, 0 elsewhere.
    int flow_balance(Node v) const;

private:
    Graph(PolytopeKind kind, int n, std::vector<Arc> arcs);

    std::size_t slot(Node v) const { return static_cast<std::size_t>(v); }

    PolytopeKind kind_;
    int n_;
    std::vector<Arc> arcs_;
    std::vector<Node> nodes_;
    std::vector<int> lookup_;
    std::vector<std::vector<ArcIndex>> out_;
    std::vector<std::vector<ArcIndex>> in_;
    std::vector<std::vector<ArcIndex>> incident_;
};

/// 0/1 incidence vector of a simple path or cycle.
class IncidenceVector {
public:
    enum class Shape { Path, Cycle };

    IncidenceVector(Shape shape, std::vector<std::uint8_t> entries,
                    std::vector<Node> walk);

    Shape shape() const { return shape_; }
    int cardinality() const { return cardinality_; }
    int dimension() const { return static_cast<int>(entries_.size()); }
    std::span<const std::uint8_t> entries() const { return entries_; }
    bool contains(ArcIndex a) const { return entries_[static_cast<std::size_t>(a)] != 0; }
    /// Node sequence; for cycles the first node is not repeated at the end.
    const std::vector<Node> &walk() const { return walk_; }
    /// Indices of the arcs with entry one.
    std::vector<ArcIndex> support() const;

    RationalVector to_rational() const;

    friend bool operator==(const IncidenceVector &a, const IncidenceVector &b)
    {
        return a.entries_ == b.entries_;
    }

private:
    Shape shape_;
    std::vector<std::uint8_t> entries_;
    std::vector<Node> walk_;
    int cardinality_;
};

/// Simple directed (0,n)-paths of D~n whose arc count is allowed by c,
/// in DFS order over the lexicographic arc order.
std::vector<IncidenceVector> enumerate_paths(const Graph &g,
                                             const CardinalitySequence &c);

/// Simple directed cycles of Dn with allowed length, each reported once
/// starting at its smallest node. Requires c_1 >= 2.
std::vector<IncidenceVector> enumerate_cycles(const Graph &g,
                                              const CardinalitySequence &c);

/// Undirected (0,n)-paths of K_{n+1}; one vector per path.
std::vector<IncidenceVector> enumerate_undirected_paths(
    const Graph &g, const CardinalitySequence &c);

/// Undirected cycles of Kn (length >= 3), each reported once.
std::vector<IncidenceVector> enumerate_undirected_cycles(
    const Graph &g, const CardinalitySequence &c);

/// Dispatches on the graph kind.
std::vector<IncidenceVector> enumerate_feasible(const Graph &g,
                                                const CardinalitySequence &c);

/// Throws InvalidParameter when c does not fit the kind and node count.
void validate_sequence_for(PolytopeKind kind, int n,
                           const CardinalitySequence &c);

} // namespace cardpoly

#endif
