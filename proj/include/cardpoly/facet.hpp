/**
 * @file facet.hpp
 * @brief Published facet conditions for every inequality class, encoded
 *        per polytope kind.
 *
 * Some parameter regimes are proved only in an external technical report
 * (cardinality sequences (2,n), (3,n) and (2,3,n) in several statements).
 * For those the prediction is Verdict::Unknown and the verifier settles
 * them by computation; `stated` still carries the condition as written.
 */

#ifndef CARDPOLY_FACET_HPP
#define CARDPOLY_FACET_HPP

#include "cardpoly/inequality.hpp"
#include "cardpoly/model.hpp"

#include <optional>
#include <string>

namespace cardpoly {

enum class Verdict { True, False, Unknown };

std::string to_string(Verdict v);

struct FacetPrediction {
    Verdict verdict = Verdict::Unknown;
    /// The condition as stated, when the statement gives one.
    std::optional<bool> stated;
    /// Whether the inequality is claimed valid for the polytope.
    bool valid = true;
};

/// True iff c is one of (2,n), (3,n), (2,3,n).
bool is_delegated_sequence(const CardinalitySequence &c, int n);

/// Facet prediction for a generated inequality. Throws InvalidParameter
/// for classes without a published condition on this kind and for (n, c)
/// outside the hypotheses of the statement.
FacetPrediction facet_predicate(ClassTag tag, const InequalityParams &params,
                                int n, const CardinalitySequence &c,
                                PolytopeKind kind);

} // namespace cardpoly

#endif
