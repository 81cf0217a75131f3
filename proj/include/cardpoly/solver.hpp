/**
 * @file solver.hpp
 * @brief Exact rational simplex and a branch-and-cut loop for minimum
 *        (or maximum) weight paths and cycles with cardinality
 *        restrictions.
 */

#ifndef CARDPOLY_SOLVER_HPP
#define CARDPOLY_SOLVER_HPP

#include "cardpoly/inequality.hpp"
#include "cardpoly/model.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cardpoly {

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus s);

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    RationalVector point;
    int pivots = 0;
};

/// Minimizes objective . x subject to the constraints and
/// lower <= x <= upper (default 0 <= x <= 1). Two-phase bounded simplex
/// on a dense rational tableau with Bland's rule.
LpResult lp_solve(const std::vector<LinearInequality> &constraints,
                  const RationalVector &objective,
                  std::optional<RationalVector> lower = std::nullopt,
                  std::optional<RationalVector> upper = std::nullopt);

enum class Objective { Minimize, Maximize };

struct Instance {
    PolytopeKind kind = PolytopeKind::Path;
    int n = 0;
    CardinalitySequence c{std::vector<int>{2, 3}};
    /// One weight per arc (edge) in the graph's arc order.
    RationalVector weights;
    Objective objective = Objective::Minimize;

    /// Throws InvalidParameter when weights, n and c do not fit the kind.
    void validate() const;
};

struct SolverConfig {
    bool one_sided_min_cut = true;
    bool cf_node = true;
    bool mcf = true;
    bool multiple_cycle_exclusion = true;
    bool parity_exclusion = true;
    bool cardinality_subgraph = true;
    /// Node budget for the exhaustive separators and the enumeration
    /// cross-check.
    int budget = 8;
    /// Compare the result with enumeration when n <= budget.
    bool cross_check = true;
    int max_nodes = 100000;
};

enum class Certificate { CuttingPlaneIntegral, Branch, EnumerationFallback };

std::string to_string(Certificate c);

struct SolveIteration {
    /// Branch-and-bound node this LP belongs to (0 = root).
    int node = 0;
    int depth = 0;
    /// LP value in the instance's own sense (maximization reports the
    /// maximum).
    Rational lp_value;
    std::map<std::string, int> cuts_added;
    bool integral = false;
};

enum class SolveStatus { Optimal, Infeasible };

struct SolveLog {
    std::vector<SolveIteration> iterations;
    SolveStatus status = SolveStatus::Infeasible;
    Certificate certificate = Certificate::CuttingPlaneIntegral;
    std::optional<IncidenceVector> optimum;
    Rational value;
    int branch_nodes = 0;
    /// Set when the result was compared against enumeration.
    bool cross_checked = false;
};

/// Branch and cut. Directed path and cycle instances run the cutting-plane
/// loop; undirected instances are solved by enumeration.
SolveLog solve(const Instance &instance, const SolverConfig &config = {});

/// Optimum by enumerating every feasible object; nullopt when none exists.
std::optional<std::pair<Rational, IncidenceVector>> enumerate_optimum(const Instance &instance);

/// Linear relaxation used at the root: flow conservation, degree
/// constraints and cardinality bounds.
std::vector<LinearInequality> initial_constraints(const Graph &g, const CardinalitySequence &c);

} // namespace cardpoly

#endif
