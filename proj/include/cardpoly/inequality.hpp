#ifndef CARDPOLY_INEQUALITY_HPP
#define CARDPOLY_INEQUALITY_HPP

#include "cardpoly/model.hpp"
#include "cardpoly/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cardpoly {

enum class Sense { LessEq, GreaterEq, Equal };

std::string to_string(Sense s);
Sense parse_sense(const std::string &text);

enum class ClassTag {
    Flow,
    Degree,
    Nonneg,
    CardinalityBoundLo,
    CardinalityBoundHi,
    CfNode,
    CfArc,
    CardSubgraph,
    OneSidedMinCut,
    MinCut,
    MultiCycleExcl,
    OddExcl,
    EvenExcl,
    ModifiedCf,
    Custom,
};

std::string to_string(ClassTag tag);
ClassTag parse_class_tag(const std::string &text);

/// Parameters of an inequality class. Node sets are kept sorted so two
/// instances of the same class compare equal iff they are the same cut.
struct InequalityParams {
    std::vector<Node> W, S, T, P, Q;
    std::vector<Arc> F;
    std::optional<Node> v, w, r, j;
    std::optional<int> p;

    void canonicalize();
    friend bool operator==(const InequalityParams &, const InequalityParams &) = default;
    friend auto operator<=>(const InequalityParams &, const InequalityParams &) = default;
};

/// a x (sense) rhs over the arc (edge) order of a graph of the given kind.
struct LinearInequality {
    PolytopeKind kind = PolytopeKind::Path;
    int n = 0;
    RationalVector coeffs;
    Sense sense = Sense::LessEq;
    Rational rhs;
    ClassTag tag = ClassTag::Custom;
    InequalityParams params;

    Rational lhs(const IncidenceVector &x) const;
    Rational lhs(std::span<const Rational> x) const;

    bool satisfied_by(const Rational &value) const;
    bool satisfied_by(const IncidenceVector &x) const { return satisfied_by(lhs(x)); }
    bool satisfied_by(std::span<const Rational> x) const { return satisfied_by(lhs(x)); }

    /// Amount by which x violates the inequality; <= 0 when satisfied.
    Rational violation(std::span<const Rational> x) const;

    bool tight_at(const IncidenceVector &x) const { return lhs(x) == rhs; }

    /// Same inequality in <= form (>= negated; equations unchanged).
    LinearInequality as_less_eq() const;

    /// Identity used to deduplicate cut pools.
    std::string key() const;

    friend bool operator==(const LinearInequality &, const LinearInequality &) = default;
};

/// Human-readable rendering, e.g. "x(0,1) + 2 x(1,2) <= 3".
std::string describe(const Graph &g, const LinearInequality &ineq);

} // namespace cardpoly

#endif
