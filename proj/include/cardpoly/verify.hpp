/**
 * @file verify.hpp
 * @brief Brute-force ground truth: dimensions, validity, facet
 *        certification and sweeps of published facet conditions.
 *
 * Everything here works on the explicit vertex list, so it is meant for
 * n up to about 8.
 */

#ifndef CARDPOLY_VERIFY_HPP
#define CARDPOLY_VERIFY_HPP

#include "cardpoly/facet.hpp"
#include "cardpoly/inequality.hpp"
#include "cardpoly/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cardpoly {

/// Vertex list and dimension of one polytope.
struct Polytope {
    Graph graph;
    CardinalitySequence c;
    std::vector<IncidenceVector> vertices;
    int dimension = -1;

    static Polytope build(PolytopeKind kind, int n, const CardinalitySequence &c);
};

/// Affine rank of the enumerated vertices; -1 when there are none.
int polytope_dimension(const Graph &g, const CardinalitySequence &c);
int polytope_dimension(const std::vector<IncidenceVector> &vertices);

struct ValidityResult {
    bool valid = true;
    std::optional<IncidenceVector> counterexample;
};

ValidityResult is_valid(const LinearInequality &ineq,
                        const std::vector<IncidenceVector> &vertices);

/// Affine rank of the vertices tight at ineq (-1 if none is tight).
int tight_rank(const LinearInequality &ineq,
               const std::vector<IncidenceVector> &vertices);

/// True iff the tight vertices span a face of dimension dim-1. Throws
/// InvalidParameter when ineq is not valid on the vertices.
bool is_facet(const LinearInequality &ineq,
              const std::vector<IncidenceVector> &vertices, int dim);

/// A sweepable statement: one inequality class on one polytope kind.
/// Ids have the form "<kind>/<class>", e.g. "path/cf_node".
struct TheoremInfo {
    std::string id;
    PolytopeKind kind;
    ClassTag tag;
    std::string summary;
};

const std::vector<TheoremInfo> &theorem_catalog();
const TheoremInfo &find_theorem(const std::string &id);

/// Every parameter set of the class on (kind, n, c) that is structurally
/// valid and meets the hypotheses the class is stated under.
std::vector<InequalityParams> instantiations(const Graph &g, ClassTag tag,
                                             const CardinalitySequence &c);

struct SweepEntry {
    InequalityParams params;
    FacetPrediction predicted;
    bool valid = false;
    bool facet = false;
    /// Result copied from an earlier instance in the same symmetry orbit.
    bool from_orbit = false;

    bool disagrees() const;
};

struct SweepReport {
    std::string theorem_id;
    PolytopeKind kind = PolytopeKind::Path;
    int n = 0;
    CardinalitySequence c{std::vector<int>{1}};
    int dimension = -1;
    std::vector<SweepEntry> entries;

    int agreements() const;
    int disagreements() const;
    int unknown_count() const;
    /// Unknown predictions whose computed outcome differs from the
    /// condition as stated.
    int unknown_against_statement() const;
    int facets() const;

    std::string to_text() const;
};

/// Compares facet_predicate with is_facet on every instantiation.
SweepReport sweep_theorem(const std::string &theorem_id, int n,
                          const CardinalitySequence &c);
SweepReport sweep_theorem(const TheoremInfo &theorem, const Polytope &polytope);

/// Orbit key of a parameter set under the node permutations that fix the
/// polytope: internal nodes for path kinds, all nodes for cycle kinds.
std::string orbit_key(const Graph &g, ClassTag tag, const InequalityParams &params);

/// Short rendering of a parameter set, e.g. "S={0,1,6} v=4".
std::string describe(const InequalityParams &params);

} // namespace cardpoly

#endif
