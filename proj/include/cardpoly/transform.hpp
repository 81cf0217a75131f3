/**
 * @file transform.hpp
 * @brief Lifting path inequalities to the cycle polytope, and
 *        deorientation of symmetric directed inequalities.
 */

#ifndef CARDPOLY_TRANSFORM_HPP
#define CARDPOLY_TRANSFORM_HPP

#include "cardpoly/inequality.hpp"
#include "cardpoly/model.hpp"

namespace cardpoly {

/// Maximum of a(C) over the cycles of the path digraph (they live on the
/// internal nodes) whose length is an allowed cardinality. Throws
/// InvalidParameter if no such cycle exists.
Rational max_cycle_value(const Graph &path, const LinearInequality &ineq,
                         const CardinalitySequence &c);

/// Lifts a x <= a_0 on the path digraph of order n to the cycle digraph
/// D_n. Node 0 is identified with node n: a_{ni} := a_{0i}, every arc
/// leaving n gains gamma - a_0, and the right-hand side becomes gamma.
/// A >= inequality is first negated; equations are rejected.
LinearInequality lift_path_to_cycle(const LinearInequality &ineq,
                                    const CardinalitySequence &c);

/// Undirected counterpart of a symmetric (cycle) or pseudo-symmetric
/// (path) directed inequality: y_ij takes the common coefficient of
/// x_ij and x_ji, y_{0i} that of x_{0i} and y_{in} that of x_{in}. The
/// edge {0,n} gets coefficient zero. Throws InvalidParameter on an
/// asymmetric input.
LinearInequality deorient(const LinearInequality &ineq);

/// Undirected object of a directed path or cycle, with the same walk.
IncidenceVector deorient(const Graph &directed, const IncidenceVector &x);

} // namespace cardpoly

#endif
