#include "cardpoly/model.hpp"

#include "cardpoly/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cardpoly {

std::string to_string(PolytopeKind kind)
{
    switch (kind) {
    case PolytopeKind::Path: return "path";
    case PolytopeKind::Cycle: return "cycle";
    case PolytopeKind::UndirectedPath: return "undirected_path";
    case PolytopeKind::UndirectedCycle: return "undirected_cycle";
    }
    return "?";
}

PolytopeKind parse_polytope_kind(const std::string &text)
{
    if (text == "path") return PolytopeKind::Path;
    if (text == "cycle") return PolytopeKind::Cycle;
    if (text == "undirected_path") return PolytopeKind::UndirectedPath;
    if (text == "undirected_cycle") return PolytopeKind::UndirectedCycle;
    throw InvalidParameter("unknown polytope kind '" + text + "'");
}

// ---------------------------------------------------------------------------

CardinalitySequence::CardinalitySequence(std::vector<int> values)
    : values_(std::move(values))
{
    require(!values_.empty(), "cardinality sequence must be nonempty");
    require(values_.front() >= 1, "cardinalities must be positive");
    for (std::size_t i = 1; i < values_.size(); ++i)
        require(values_[i - 1] < values_[i],
                "cardinality sequence must be strictly increasing");
}

void CardinalitySequence::require_cycle_valid() const
{
    require(first() >= 2, "cycle polytopes need c_1 >= 2");
}

bool CardinalitySequence::contains(int k) const
{
    return std::binary_search(values_.begin(), values_.end(), k);
}

std::optional<int> CardinalitySequence::forbidden_bracket(int k) const
{
    for (int p = 1; p < size(); ++p)
        if ((*this)[p] < k && k < (*this)[p + 1])
            return p;
    return std::nullopt;
}

bool CardinalitySequence::all_even() const
{
    return std::all_of(values_.begin(), values_.end(),
                       [](int v) { return v % 2 == 0; });
}

bool CardinalitySequence::all_odd() const
{
    return std::all_of(values_.begin(), values_.end(),
                       [](int v) { return v % 2 != 0; });
}

std::string CardinalitySequence::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values_.size(); ++i)
        os << (i ? "," : "") << values_[i];
    os << ')';
    return os.str();
}

void validate_sequence_for(PolytopeKind kind, int n,
                           const CardinalitySequence &c)
{
    require(c.last() <= n, "c_m = " + std::to_string(c.last()) +
                               " exceeds n = " + std::to_string(n));
    if (kind == PolytopeKind::Cycle || kind == PolytopeKind::UndirectedCycle)
        c.require_cycle_valid();
}

// ---------------------------------------------------------------------------

Graph::Graph(PolytopeKind kind, int n, std::vector<Arc> arcs)
    : kind_(kind), n_(n), arcs_(std::move(arcs))
{
    std::sort(arcs_.begin(), arcs_.end());
    const Node lo = is_path_kind(kind) ? 0 : 1;
    nodes_.resize(static_cast<std::size_t>(n - lo + 1));
    std::iota(nodes_.begin(), nodes_.end(), lo);

    const std::size_t width = static_cast<std::size_t>(n + 1);
    lookup_.assign(width * width, -1);
    out_.assign(width, {});
    in_.assign(width, {});
    incident_.assign(width, {});
    for (ArcIndex a = 0; a < num_arcs(); ++a) {
        const Arc &e = arcs_[static_cast<std::size_t>(a)];
        lookup_[slot(e.tail) * width + slot(e.head)] = a;
        if (!directed())
            lookup_[slot(e.head) * width + slot(e.tail)] = a;
        out_[slot(e.tail)].push_back(a);
        in_[slot(e.head)].push_back(a);
        incident_[slot(e.tail)].push_back(a);
        incident_[slot(e.head)].push_back(a);
    }
    for (auto &list : incident_)
        std::sort(list.begin(), list.end());
}

Graph Graph::path_digraph(int n)
{
    require(n >= 3, "path digraph needs n >= 3");
    std::vector<Arc> arcs;
    for (Node i = 1; i < n; ++i) {
        arcs.push_back({0, i});
        arcs.push_back({i, n});
        for (Node j = 1; j < n; ++j)
            if (i != j)
                arcs.push_back({i, j});
    }
    return Graph(PolytopeKind::Path, n, std::move(arcs));
}

Graph Graph::complete_digraph(int n)
{
    require(n >= 2, "complete digraph needs n >= 2");
    std::vector<Arc> arcs;
    for (Node i = 1; i <= n; ++i)
        for (Node j = 1; j <= n; ++j)
            if (i != j)
                arcs.push_back({i, j});
    return Graph(PolytopeKind::Cycle, n, std::move(arcs));
}

Graph Graph::path_graph(int n)
{
    require(n >= 3, "path graph needs n >= 3");
    std::vector<Arc> edges;
    for (Node i = 0; i <= n; ++i)
        for (Node j = i + 1; j <= n; ++j)
            edges.push_back({i, j});
    return Graph(PolytopeKind::UndirectedPath, n, std::move(edges));
}

Graph Graph::complete_graph(int n)
{
    require(n >= 3, "complete graph needs n >= 3");
    std::vector<Arc> edges;
    for (Node i = 1; i <= n; ++i)
        for (Node j = i + 1; j <= n; ++j)
            edges.push_back({i, j});
    return Graph(PolytopeKind::UndirectedCycle, n, std::move(edges));
}

Graph Graph::for_kind(PolytopeKind kind, int n)
{
    switch (kind) {
    case PolytopeKind::Path: return path_digraph(n);
    case PolytopeKind::Cycle: return complete_digraph(n);
    case PolytopeKind::UndirectedPath: return path_graph(n);
    case PolytopeKind::UndirectedCycle: return complete_graph(n);
    }
    throw InternalError("unreachable polytope kind");
}

bool Graph::has_node(Node v) const
{
    return v >= nodes_.front() && v <= nodes_.back();
}

bool Graph::is_internal(Node v) const
{
    if (!has_node(v))
        return false;
    return !is_path_kind(kind_) || (v != 0 && v != n_);
}

std::vector<Node> Graph::internal_nodes() const
{
    std::vector<Node> out;
    for (Node v : nodes_)
        if (is_internal(v))
            out.push_back(v);
    return out;
}

std::optional<ArcIndex> Graph::find(Node tail, Node head) const
{
    if (!has_node(tail) || !has_node(head))
        return std::nullopt;
    const int a = lookup_[slot(tail) * static_cast<std::size_t>(n_ + 1) + slot(head)];
    if (a < 0)
        return std::nullopt;
    return a;
}

ArcIndex Graph::index(Node tail, Node head) const
{
    auto a = find(tail, head);
    require(a.has_value(), "no arc (" + std::to_string(tail) + "," +
                               std::to_string(head) + ")");
    return *a;
}

const std::vector<ArcIndex> &Graph::out_arcs(Node v) const
{
    require(has_node(v), "node " + std::to_string(v) + " not in graph");
    return out_[slot(v)];
}

const std::vector<ArcIndex> &Graph::in_arcs(Node v) const
{
    require(has_node(v), "node " + std::to_string(v) + " not in graph");
    return in_[slot(v)];
}

const std::vector<ArcIndex> &Graph::incident(Node v) const
{
    require(has_node(v), "node " + std::to_string(v) + " not in graph");
    return incident_[slot(v)];
}

int Graph::flow_balance(Node v) const
{
    if (kind_ != PolytopeKind::Path)
        return 0;
    if (v == 0)
        return 1;
    if (v == n_)
        return -1;
    return 0;
}

// ---------------------------------------------------------------------------

IncidenceVector::IncidenceVector(Shape shape, std::vector<std::uint8_t> entries,
                                 std::vector<Node> walk)
    : shape_(shape), entries_(std::move(entries)), walk_(std::move(walk))
{
    cardinality_ = static_cast<int>(
        std::count(entries_.begin(), entries_.end(), std::uint8_t{1}));
}

std::vector<ArcIndex> IncidenceVector::support() const
{
    std::vector<ArcIndex> out;
    for (std::size_t a = 0; a < entries_.size(); ++a)
        if (entries_[a])
            out.push_back(static_cast<ArcIndex>(a));
    return out;
}

RationalVector IncidenceVector::to_rational() const
{
    RationalVector v(entries_.size());
    for (std::size_t a = 0; a < entries_.size(); ++a)
        v[a] = entries_[a];
    return v;
}

// ---------------------------------------------------------------------------

namespace {

/// Shared DFS state for all four enumerators.
class WalkSearch {
public:
    WalkSearch(const Graph &g, const CardinalitySequence &c)
        : g_(g), c_(c),
          visited_(static_cast<std::size_t>(g.n() + 1), false),
          entries_(static_cast<std::size_t>(g.num_arcs()), 0)
    {}

    std::vector<IncidenceVector> paths()
    {
        const Node s = 0;
        walk_ = {s};
        visited_[0] = true;
        extend_path(s);
        return std::move(result_);
    }

    std::vector<IncidenceVector> cycles()
    {
        for (Node s : g_.nodes()) {
            walk_ = {s};
            visited_[static_cast<std::size_t>(s)] = true;
            extend_cycle(s, s);
            visited_[static_cast<std::size_t>(s)] = false;
        }
        return std::move(result_);
    }

private:
    int length() const { return static_cast<int>(walk_.size()) - 1; }

    Node other_end(ArcIndex a, Node from) const
    {
        const Arc &e = g_.arc(a);
        return e.tail == from ? e.head : e.tail;
    }

    const std::vector<ArcIndex> &moves(Node u) const
    {
        return g_.directed() ? g_.out_arcs(u) : g_.incident(u);
    }

    void emit(IncidenceVector::Shape shape, const std::vector<Node> &walk)
    {
        result_.emplace_back(shape, entries_, walk);
    }

    void extend_path(Node u)
    {
        const Node t = g_.n();
        for (ArcIndex a : moves(u)) {
            const Node v = other_end(a, u);
            if (visited_[static_cast<std::size_t>(v)])
                continue;
            const int len = length() + 1;
            entries_[static_cast<std::size_t>(a)] = 1;
            if (v == t) {
                if (c_.contains(len)) {
                    walk_.push_back(v);
                    emit(IncidenceVector::Shape::Path, walk_);
                    walk_.pop_back();
                }
            } else if (len + 1 <= c_.last()) {
                visited_[static_cast<std::size_t>(v)] = true;
                walk_.push_back(v);
                extend_path(v);
                walk_.pop_back();
                visited_[static_cast<std::size_t>(v)] = false;
            }
            entries_[static_cast<std::size_t>(a)] = 0;
        }
    }

    void extend_cycle(Node s, Node u)
    {
        for (ArcIndex a : moves(u)) {
            const Node v = other_end(a, u);
            const int len = length() + 1;
            if (v == s) {
                if (len < 2 || !c_.contains(len))
                    continue;
                // undirected: one orientation only, and no 2-cycles
                if (!g_.directed() && (len < 3 || walk_[1] > walk_.back()))
                    continue;
                entries_[static_cast<std::size_t>(a)] = 1;
                emit(IncidenceVector::Shape::Cycle, walk_);
                entries_[static_cast<std::size_t>(a)] = 0;
                continue;
            }
            if (v < s || visited_[static_cast<std::size_t>(v)] || len + 1 > c_.last())
                continue;
            entries_[static_cast<std::size_t>(a)] = 1;
            visited_[static_cast<std::size_t>(v)] = true;
            walk_.push_back(v);
            extend_cycle(s, v);
            walk_.pop_back();
            visited_[static_cast<std::size_t>(v)] = false;
            entries_[static_cast<std::size_t>(a)] = 0;
        }
    }

    const Graph &g_;
    const CardinalitySequence &c_;
    std::vector<bool> visited_;
    std::vector<std::uint8_t> entries_;
    std::vector<Node> walk_;
    std::vector<IncidenceVector> result_;
};

} // namespace

std::vector<IncidenceVector> enumerate_paths(const Graph &g,
                                             const CardinalitySequence &c)
{
    require(g.kind() == PolytopeKind::Path, "enumerate_paths needs a path digraph");
    validate_sequence_for(g.kind(), g.n(), c);
    return WalkSearch(g, c).paths();
}

std::vector<IncidenceVector> enumerate_cycles(const Graph &g,
                                              const CardinalitySequence &c)
{
    require(g.kind() == PolytopeKind::Cycle, "enumerate_cycles needs a complete digraph");
    validate_sequence_for(g.kind(), g.n(), c);
    return WalkSearch(g, c).cycles();
}

std::vector<IncidenceVector> enumerate_undirected_paths(
    const Graph &g, const CardinalitySequence &c)
{
    require(g.kind() == PolytopeKind::UndirectedPath,
            "enumerate_undirected_paths needs a path graph");
    validate_sequence_for(g.kind(), g.n(), c);
    return WalkSearch(g, c).paths();
}

std::vector<IncidenceVector> enumerate_undirected_cycles(
    const Graph &g, const CardinalitySequence &c)
{
    require(g.kind() == PolytopeKind::UndirectedCycle,
            "enumerate_undirected_cycles needs a complete graph");
    validate_sequence_for(g.kind(), g.n(), c);
    return WalkSearch(g, c).cycles();
}

std::vector<IncidenceVector> enumerate_feasible(const Graph &g,
                                                const CardinalitySequence &c)
{
    switch (g.kind()) {
    case PolytopeKind::Path: return enumerate_paths(g, c);
    case PolytopeKind::Cycle: return enumerate_cycles(g, c);
    case PolytopeKind::UndirectedPath: return enumerate_undirected_paths(g, c);
    case PolytopeKind::UndirectedCycle: return enumerate_undirected_cycles(g, c);
    }
    throw InternalError("unreachable polytope kind");
}

} // namespace cardpoly
