#include "cardpoly/verify.hpp"

#include "cardpoly/error.hpp"
#include "cardpoly/generators.hpp"
#include "cardpoly/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cardpoly {

Polytope Polytope::build(PolytopeKind kind, int n, const CardinalitySequence &c)
{
    Polytope p{Graph::for_kind(kind, n), c, {}, -1};
    p.vertices = enumerate_feasible(p.graph, c);
    p.dimension = polytope_dimension(p.vertices);
    return p;
}

int polytope_dimension(const std::vector<IncidenceVector> &vertices)
{
    if (vertices.empty())
        return -1;
    AffineHull hull(vertices.front().dimension());
    for (const auto &x : vertices)
        hull.add(x.entries());
    return hull.affine_rank();
}

int polytope_dimension(const Graph &g, const CardinalitySequence &c)
{
    return polytope_dimension(enumerate_feasible(g, c));
}

ValidityResult is_valid(const LinearInequality &ineq,
                        const std::vector<IncidenceVector> &vertices)
{
    for (const auto &x : vertices)
        if (!ineq.satisfied_by(x))
            return {false, x};
    return {true, std::nullopt};
}

int tight_rank(const LinearInequality &ineq,
               const std::vector<IncidenceVector> &vertices)
{
    if (vertices.empty())
        return -1;
    AffineHull hull(vertices.front().dimension());
    for (const auto &x : vertices)
        if (ineq.tight_at(x))
            hull.add(x.entries());
    return hull.affine_rank();
}

bool is_facet(const LinearInequality &ineq,
              const std::vector<IncidenceVector> &vertices, int dim)
{
    bool slack_somewhere = false;
    std::vector<const IncidenceVector *> tight;
    for (const auto &x : vertices) {
        const Rational v = ineq.lhs(x);
        require(ineq.satisfied_by(v), "inequality is not valid on the vertex set");
        if (v == ineq.rhs)
            tight.push_back(&x);
        else
            slack_somewhere = true;
    }
    // A face containing every vertex is the whole polytope.
    if (!slack_somewhere || tight.empty())
        return false;
    AffineHull hull(tight.front()->dimension());
    for (const auto *x : tight) {
        hull.add(x->entries());
        if (hull.affine_rank() == dim - 1)
            return true;
    }
    return false;
}

// ---------------------------------------------------------------------------

const std::vector<TheoremInfo> &theorem_catalog()
{
    using K = PolytopeKind;
    using T = ClassTag;
    static const std::vector<TheoremInfo> catalog{
        {"path/cardinality_bound_lo", K::Path, T::CardinalityBoundLo, "x(A) >= c_1"},
        {"path/cardinality_bound_hi", K::Path, T::CardinalityBoundHi, "x(A) <= c_m"},
        {"path/cf_node", K::Path, T::CfNode, "node cardinality forcing"},
        {"path/card_subgraph", K::Path, T::CardSubgraph, "cardinality subgraph"},
        {"path/nonneg", K::Path, T::Nonneg, "nonnegativity"},
        {"path/degree", K::Path, T::Degree, "degree of an internal node"},
        {"path/one_sided_min_cut", K::Path, T::OneSidedMinCut, "one-sided min-cut"},
        {"path/min_cut", K::Path, T::MinCut, "min-cut"},
        {"path/odd_excl", K::Path, T::OddExcl, "odd path exclusion"},
        {"path/even_excl", K::Path, T::EvenExcl, "even path exclusion"},
        {"path/modified_cf", K::Path, T::ModifiedCf, "modified cardinality forcing"},

        {"cycle/nonneg", K::Cycle, T::Nonneg, "nonnegativity"},
        {"cycle/degree", K::Cycle, T::Degree, "degree"},
        {"cycle/multi_cycle_excl", K::Cycle, T::MultiCycleExcl, "multiple cycle exclusion"},
        {"cycle/min_cut", K::Cycle, T::MinCut, "min-cut"},
        {"cycle/one_sided_min_cut", K::Cycle, T::OneSidedMinCut, "one-sided min-cut"},
        {"cycle/cardinality_bound_lo", K::Cycle, T::CardinalityBoundLo, "x(A) >= c_1"},
        {"cycle/cardinality_bound_hi", K::Cycle, T::CardinalityBoundHi, "x(A) <= c_m"},
        {"cycle/cf_node", K::Cycle, T::CfNode, "node cardinality forcing"},
        {"cycle/card_subgraph", K::Cycle, T::CardSubgraph, "cardinality subgraph"},
        {"cycle/odd_excl", K::Cycle, T::OddExcl, "odd cycle exclusion"},
        {"cycle/even_excl", K::Cycle, T::EvenExcl, "even cycle exclusion"},
        {"cycle/modified_cf", K::Cycle, T::ModifiedCf, "modified cardinality forcing"},

        {"undirected_cycle/nonneg", K::UndirectedCycle, T::Nonneg, "nonnegativity"},
        {"undirected_cycle/degree", K::UndirectedCycle, T::Degree, "degree"},
        {"undirected_cycle/multi_cycle_excl", K::UndirectedCycle, T::MultiCycleExcl,
         "two-sided min-cut"},
        {"undirected_cycle/min_cut", K::UndirectedCycle, T::MinCut, "min-cut"},
        {"undirected_cycle/one_sided_min_cut", K::UndirectedCycle, T::OneSidedMinCut,
         "one-sided min-cut"},
        {"undirected_cycle/cardinality_bound_lo", K::UndirectedCycle, T::CardinalityBoundLo,
         "y(E) >= c_1"},
        {"undirected_cycle/cardinality_bound_hi", K::UndirectedCycle, T::CardinalityBoundHi,
         "y(E) <= c_m"},
        {"undirected_cycle/cf_node", K::UndirectedCycle, T::CfNode, "cardinality forcing"},
        {"undirected_cycle/card_subgraph", K::UndirectedCycle, T::CardSubgraph,
         "cardinality subgraph"},
        {"undirected_cycle/even_excl", K::UndirectedCycle, T::EvenExcl, "even cycle exclusion"},

        {"undirected_path/nonneg", K::UndirectedPath, T::Nonneg, "nonnegativity"},
        {"undirected_path/degree", K::UndirectedPath, T::Degree, "degree"},
        {"undirected_path/min_cut", K::UndirectedPath, T::MinCut, "min-cut"},
        {"undirected_path/one_sided_min_cut", K::UndirectedPath, T::OneSidedMinCut,
         "one-sided min-cut"},
        {"undirected_path/cardinality_bound_lo", K::UndirectedPath, T::CardinalityBoundLo,
         "y(E) >= c_1"},
        {"undirected_path/cardinality_bound_hi", K::UndirectedPath, T::CardinalityBoundHi,
         "y(E) <= c_m"},
        {"undirected_path/cf_node", K::UndirectedPath, T::CfNode, "cardinality forcing"},
        {"undirected_path/card_subgraph", K::UndirectedPath, T::CardSubgraph,
         "cardinality subgraph"},
        {"undirected_path/odd_excl", K::UndirectedPath, T::OddExcl, "odd path exclusion"},
        {"undirected_path/even_excl", K::UndirectedPath, T::EvenExcl, "even path exclusion"},
    };
    return catalog;
}

const TheoremInfo &find_theorem(const std::string &id)
{
    for (const auto &t : theorem_catalog())
        if (t.id == id)
            return t;
    throw InvalidParameter("unknown theorem id '" + id + "'");
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Node> pick(const std::vector<Node> &ground, unsigned mask)
{
    std::vector<Node> out;
    for (std::size_t i = 0; i < ground.size(); ++i)
        if (mask & (1u << i))
            out.push_back(ground[i]);
    return out;
}

std::vector<Node> minus(const std::vector<Node> &a, const std::vector<Node> &b)
{
    std::vector<Node> out;
    for (Node v : a)
        if (std::find(b.begin(), b.end(), v) == b.end())
            out.push_back(v);
    return out;
}

std::vector<Node> sorted(std::vector<Node> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

/// Node sets the class allows: supersets of {0,n} for path kinds.
std::vector<std::vector<Node>> rooted_sets(const Graph &g, bool path_ends)
{
    std::vector<std::vector<Node>> out;
    const auto free = path_ends ? g.internal_nodes() : g.nodes();
    for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
        auto s = pick(free, mask);
        if (path_ends) {
            s.push_back(0);
            s.push_back(g.n());
        }
        out.push_back(sorted(std::move(s)));
    }
    return out;
}

} // namespace

std::vector<InequalityParams> instantiations(const Graph &g, ClassTag tag,
                                             const CardinalitySequence &c)
{
    const bool path = is_path_kind(g.kind());
    const int total = static_cast<int>(g.nodes().size());
    std::vector<InequalityParams> out;
    auto add = [&](InequalityParams q) {
        q.canonicalize();
        out.push_back(std::move(q));
    };

    switch (tag) {
    case ClassTag::CardinalityBoundLo:
    case ClassTag::CardinalityBoundHi:
        add({});
        break;
    case ClassTag::Nonneg:
        for (const Arc &e : g.arcs()) {
            InequalityParams q;
            q.v = e.tail;
            q.w = e.head;
            add(q);
        }
        break;
    case ClassTag::Flow:
        for (Node v : g.nodes()) {
            InequalityParams q;
            q.v = v;
            add(q);
        }
        break;
    case ClassTag::Degree:
        for (Node v : g.internal_nodes()) {
            InequalityParams q;
            q.v = v;
            add(q);
        }
        break;
    case ClassTag::CfNode:
    case ClassTag::CardSubgraph:
        for (auto &W : rooted_sets(g, path)) {
            const int k = static_cast<int>(W.size()) - (path ? 1 : 0);
            if (auto p = c.forbidden_bracket(k)) {
                InequalityParams q;
                q.W = W;
                q.p = *p;
                add(q);
            }
        }
        break;
    case ClassTag::OneSidedMinCut:
        for (auto &S : rooted_sets(g, path)) {
            if (S.empty() || static_cast<int>(S.size()) == total)
                continue;
            // The undirected statement assumes |S| >= c_1 + 1.
            if (g.kind() == PolytopeKind::UndirectedPath &&
                static_cast<int>(S.size()) <= c.first())
                continue;
            for (Node v : minus(g.nodes(), S)) {
                InequalityParams q;
                q.S = S;
                q.v = v;
                add(q);
            }
        }
        break;
    case ClassTag::MinCut:
        for (auto &S : rooted_sets(g, path))
            if (!S.empty() && static_cast<int>(S.size()) < total) {
                InequalityParams q;
                q.S = S;
                add(q);
            }
        break;
    case ClassTag::MultiCycleExcl:
        require(!path, "multiple cycle exclusion lives on cycle polytopes");
        for (auto &S : rooted_sets(g, false)) {
            const int s = static_cast<int>(S.size());
            if (s < 2 || s > g.n() - 2)
                continue;
            for (Node v : S)
                for (Node w : minus(g.nodes(), S)) {
                    InequalityParams q;
                    q.S = S;
                    q.v = v;
                    q.w = w;
                    add(q);
                }
        }
        break;
    case ClassTag::OddExcl:
    case ClassTag::EvenExcl: {
        const bool odd = tag == ClassTag::OddExcl;
        const bool odd_cycle = odd && !path;
        std::vector<Node> free;
        for (Node v : g.nodes())
            if (!(path && (v == 0 || v == g.n())) && !(odd_cycle && v == g.n()))
                free.push_back(v);
        for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
            auto S = pick(free, mask);
            auto T = minus(free, S);
            if (path) {
                S.push_back(0);
                (odd ? T : S).push_back(g.n());
            }
            InequalityParams q;
            q.S = sorted(S);
            q.T = sorted(T);
            if (odd_cycle)
                q.r = g.n();
            add(q);
        }
        break;
    }
    case ClassTag::ModifiedCf:
        for (int p = 2; p <= c.size() - 2; ++p) {
            if (!has_mcf_bracket(c, p))
                continue;
            const int want = c[p] + (path ? 2 : 1);
            for (auto &P : rooted_sets(g, path)) {
                if (static_cast<int>(P.size()) != want)
                    continue;
                for (Node r : minus(g.internal_nodes(), P)) {
                    InequalityParams q;
                    q.P = P;
                    q.Q = minus(minus(g.nodes(), P), {r});
                    q.r = r;
                    q.p = p;
                    add(q);
                }
            }
        }
        break;
    case ClassTag::CfArc:
    case ClassTag::Custom:
        throw InvalidParameter("no sweep is defined for " + to_string(tag));
    }
    return out;
}

std::string orbit_key(const Graph &g, ClassTag tag, const InequalityParams &q)
{
    auto role = [&](Node v) {
        auto in = [v](const std::vector<Node> &s) {
            return std::find(s.begin(), s.end(), v) != s.end();
        };
        int r = 0;
        r |= in(q.W) << 0;
        r |= in(q.S) << 1;
        r |= in(q.T) << 2;
        r |= in(q.P) << 3;
        r |= in(q.Q) << 4;
        r |= (q.v == v) << 5;
        r |= (q.w == v) << 6;
        r |= (q.r == v) << 7;
        r |= (q.j == v) << 8;
        return r;
    };
    std::ostringstream os;
    os << to_string(tag) << '|' << (q.p ? *q.p : 0) << '|';
    std::vector<int> free;
    for (Node v : g.nodes()) {
        if (is_path_kind(g.kind()) && (v == 0 || v == g.n()))
            os << role(v) << ',';
        else
            free.push_back(role(v));
    }
    std::sort(free.begin(), free.end());
    os << '|';
    for (int r : free)
        os << r << ',';
    return os.str();
}

std::string describe(const InequalityParams &q)
{
    std::ostringstream os;
    auto set = [&](const char *name, const std::vector<Node> &s) {
        if (s.empty())
            return;
        os << (os.tellp() > 0 ? " " : "") << name << "={";
        for (std::size_t i = 0; i < s.size(); ++i)
            os << (i ? "," : "") << s[i];
        os << '}';
    };
    auto node = [&](const char *name, const std::optional<Node> &v) {
        if (v)
            os << (os.tellp() > 0 ? " " : "") << name << '=' << *v;
    };
    set("W", q.W);
    set("S", q.S);
    set("T", q.T);
    set("P", q.P);
    set("Q", q.Q);
    if (!q.F.empty()) {
        os << (os.tellp() > 0 ? " " : "") << "F={";
        for (std::size_t i = 0; i < q.F.size(); ++i)
            os << (i ? "," : "") << '(' << q.F[i].tail << ',' << q.F[i].head << ')';
        os << '}';
    }
    node("v", q.v);
    node("w", q.w);
    node("r", q.r);
    node("j", q.j);
    if (q.p)
        os << (os.tellp() > 0 ? " " : "") << "p=" << *q.p;
    return os.str();
}

// ---------------------------------------------------------------------------

bool SweepEntry::disagrees() const
{
    if (predicted.verdict == Verdict::Unknown)
        return false;
    if (predicted.valid && !valid)
        return true;
    return (predicted.verdict == Verdict::True) != facet;
}

int SweepReport::agreements() const
{
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const SweepEntry &e) {
        return e.predicted.verdict != Verdict::Unknown && !e.disagrees();
    }));
}

int SweepReport::disagreements() const
{
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                          [](const SweepEntry &e) { return e.disagrees(); }));
}

int SweepReport::unknown_count() const
{
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const SweepEntry &e) {
        return e.predicted.verdict == Verdict::Unknown;
    }));
}

int SweepReport::unknown_against_statement() const
{
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const SweepEntry &e) {
        return e.predicted.verdict == Verdict::Unknown && e.predicted.stated &&
               *e.predicted.stated != e.facet;
    }));
}

int SweepReport::facets() const
{
    return static_cast<int>(
        std::count_if(entries.begin(), entries.end(), [](const SweepEntry &e) { return e.facet; }));
}

std::string SweepReport::to_text() const
{
    std::ostringstream os;
    os << "sweep " << theorem_id << " n=" << n << " c=" << c.to_string()
       << " dim=" << dimension << '\n';
    os << "  instances=" << entries.size() << " facets=" << facets()
       << " agreements=" << agreements() << " disagreements=" << disagreements()
       << " unknown=" << unknown_count() << '\n';
    for (const auto &e : entries) {
        const bool unknown = e.predicted.verdict == Verdict::Unknown;
        if (!unknown && !e.disagrees())
            continue;
        os << "  " << (unknown ? "resolved " : "MISMATCH ") << describe(e.params)
           << " predicted=" << to_string(e.predicted.verdict);
        if (e.predicted.stated)
            os << " stated=" << (*e.predicted.stated ? "true" : "false");
        os << " valid=" << (e.valid ? "true" : "false")
           << " facet=" << (e.facet ? "true" : "false") << '\n';
    }
    return os.str();
}

SweepReport sweep_theorem(const TheoremInfo &theorem, const Polytope &poly)
{
    const Graph &g = poly.graph;
    require(g.kind() == theorem.kind, "polytope kind does not match the statement");
    SweepReport report;
    report.theorem_id = theorem.id;
    report.kind = g.kind();
    report.n = g.n();
    report.c = poly.c;
    report.dimension = poly.dimension;

    std::map<std::string, std::pair<bool, bool>> orbit;
    for (auto &params : instantiations(g, theorem.tag, poly.c)) {
        SweepEntry e;
        e.predicted = facet_predicate(theorem.tag, params, g.n(), poly.c, g.kind());
        const std::string key = orbit_key(g, theorem.tag, params);
        if (auto it = orbit.find(key); it != orbit.end()) {
            e.valid = it->second.first;
            e.facet = it->second.second;
            e.from_orbit = true;
        } else {
            const auto ineq = regenerate(g, theorem.tag, params, poly.c);
            e.valid = is_valid(ineq, poly.vertices).valid;
            e.facet = e.valid && is_facet(ineq, poly.vertices, poly.dimension);
            orbit.emplace(key, std::make_pair(e.valid, e.facet));
        }
        e.params = std::move(params);
        report.entries.push_back(std::move(e));
    }
    return report;
}

SweepReport sweep_theorem(const std::string &theorem_id, int n, const CardinalitySequence &c)
{
    const auto &t = find_theorem(theorem_id);
    return sweep_theorem(t, Polytope::build(t.kind, n, c));
}

} // namespace cardpoly
