#include "cardpoly/inequality.hpp"

#include "cardpoly/error.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

namespace cardpoly {

std::string to_string(Sense s)
{
    switch (s) {
    case Sense::LessEq: return "<=";
    case Sense::GreaterEq: return ">=";
    case Sense::Equal: return "=";
    }
    return "?";
}

Sense parse_sense(const std::string &text)
{
    if (text == "<=") return Sense::LessEq;
    if (text == ">=") return Sense::GreaterEq;
    if (text == "=" || text == "==") return Sense::Equal;
    throw InvalidParameter("unknown sense '" + text + "'");
}

namespace {

constexpr std::array<std::pair<ClassTag, const char *>, 15> kTagNames{{
    {ClassTag::Flow, "flow"},
    {ClassTag::Degree, "degree"},
    {ClassTag::Nonneg, "nonneg"},
    {ClassTag::CardinalityBoundLo, "cardinality_bound_lo"},
    {ClassTag::CardinalityBoundHi, "cardinality_bound_hi"},
    {ClassTag::CfNode, "cf_node"},
    {ClassTag::CfArc, "cf_arc"},
    {ClassTag::CardSubgraph, "card_subgraph"},
    {ClassTag::OneSidedMinCut, "one_sided_min_cut"},
    {ClassTag::MinCut, "min_cut"},
    {ClassTag::MultiCycleExcl, "multi_cycle_excl"},
    {ClassTag::OddExcl, "odd_excl"},
    {ClassTag::EvenExcl, "even_excl"},
    {ClassTag::ModifiedCf, "modified_cf"},
    {ClassTag::Custom, "custom"},
}};

} // namespace

std::string to_string(ClassTag tag)
{
    for (const auto &[t, name] : kTagNames)
        if (t == tag)
            return name;
    return "?";
}

ClassTag parse_class_tag(const std::string &text)
{
    for (const auto &[t, name] : kTagNames)
        if (text == name)
            return t;
    throw InvalidParameter("unknown class tag '" + text + "'");
}

void InequalityParams::canonicalize()
{
    for (auto *set : {&W, &S, &T, &P, &Q}) {
        std::sort(set->begin(), set->end());
        set->erase(std::unique(set->begin(), set->end()), set->end());
    }
    std::sort(F.begin(), F.end());
    F.erase(std::unique(F.begin(), F.end()), F.end());
}

Rational LinearInequality::lhs(const IncidenceVector &x) const
{
    require(x.dimension() == static_cast<int>(coeffs.size()),
            "incidence vector does not match inequality dimension");
    Rational sum = 0;
    const auto e = x.entries();
    for (std::size_t a = 0; a < e.size(); ++a)
        if (e[a])
            sum += coeffs[a];
    return sum;
}

Rational LinearInequality::lhs(std::span<const Rational> x) const
{
    require(x.size() == coeffs.size(), "point does not match inequality dimension");
    Rational sum = 0;
    for (std::size_t a = 0; a < x.size(); ++a)
        if (sgn(coeffs[a]) != 0 && sgn(x[a]) != 0)
            sum += coeffs[a] * x[a];
    return sum;
}

bool LinearInequality::satisfied_by(const Rational &value) const
{
    switch (sense) {
    case Sense::LessEq: return value <= rhs;
    case Sense::GreaterEq: return value >= rhs;
    case Sense::Equal: return value == rhs;
    }
    return false;
}

Rational LinearInequality::violation(std::span<const Rational> x) const
{
    const Rational value = lhs(x);
    switch (sense) {
    case Sense::LessEq: return value - rhs;
    case Sense::GreaterEq: return rhs - value;
    case Sense::Equal: return abs(value - rhs);
    }
    return 0;
}

LinearInequality LinearInequality::as_less_eq() const
{
    if (sense != Sense::GreaterEq)
        return *this;
    LinearInequality out = *this;
    for (auto &q : out.coeffs)
        q = -q;
    out.rhs = -rhs;
    out.sense = Sense::LessEq;
    return out;
}

std::string LinearInequality::key() const
{
    std::ostringstream os;
    os << to_string(tag) << '|' << to_string(sense) << '|' << rhs << '|';
    for (const auto &q : coeffs)
        os << q << ',';
    return os.str();
}

std::string describe(const Graph &g, const LinearInequality &ineq)
{
    std::ostringstream os;
    bool first = true;
    const char *var = g.directed() ? "x" : "y";
    for (ArcIndex a = 0; a < g.num_arcs(); ++a) {
        const Rational &q = ineq.coeffs[static_cast<std::size_t>(a)];
        if (q == 0)
            continue;
        const Arc &e = g.arc(a);
        const bool neg = q < 0;
        const Rational mag = abs(q);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        if (mag != 1)
            os << mag << ' ';
        os << var << '(' << e.tail << ',' << e.head << ')';
        first = false;
    }
    if (first)
        os << '0';
    os << ' ' << to_string(ineq.sense) << ' ' << ineq.rhs;
    return os.str();
}

} // namespace cardpoly
