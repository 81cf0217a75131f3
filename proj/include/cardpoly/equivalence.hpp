/**
 * @file equivalence.hpp
 * @brief Equivalent forms of an inequality under the flow conservation
 *        equations.
 *
 * Adding t_i times the equation x(out(i)) - x(in(i)) = b_i for every node
 * changes the coefficient of arc (i,j) by t_i - t_j and the right-hand
 * side by sum t_i b_i. The face on the polytope does not change.
 */

#ifndef CARDPOLY_EQUIVALENCE_HPP
#define CARDPOLY_EQUIVALENCE_HPP

#include "cardpoly/inequality.hpp"
#include "cardpoly/model.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cardpoly {

/// Node potentials t, indexed by node id; t[root] = 0.
struct NodePotentials {
    Node root = 0;
    RationalVector t;

    const Rational &operator[](Node v) const { return t.at(static_cast<std::size_t>(v)); }
};

/// a'_{ij} = a_{ij} + t_i - t_j, rhs' = rhs + sum_i t_i b_i. Directed
/// graphs only.
LinearInequality apply_potentials(const Graph &g, const LinearInequality &ineq,
                                  const NodePotentials &t);

/// Equivalent inequality whose coefficients on the arcs of a spanning tree
/// equal the given targets. The tree is read as undirected and must
/// connect every node; targets must be given for exactly the tree arcs.
LinearInequality normalize(const Graph &g, const LinearInequality &ineq,
                           const std::vector<ArcIndex> &tree,
                           const std::map<ArcIndex, Rational> &targets);

/// Potentials used by normalize().
NodePotentials tree_potentials(const Graph &g, const LinearInequality &ineq,
                               const std::vector<ArcIndex> &tree,
                               const std::map<ArcIndex, Rational> &targets);

enum class SymmetryMode {
    /// c_ij = c_ji for every pair (cycle digraph).
    Symmetric,
    /// c_ij = c_ji for internal pairs 1 <= i < j <= n-1 (path digraph).
    PseudoSymmetric,
};

/// True iff the coefficients already satisfy the mode's pair conditions.
bool is_symmetric(const Graph &g, const LinearInequality &ineq, SymmetryMode mode);

/// Equivalent inequality with symmetric coefficients on the required
/// pairs, or nothing when the system t_j - t_i = a_ij - a_ji has no
/// solution. An inequality that is already symmetric is returned as is;
/// otherwise the result is twice the input plus the potentials, which
/// puts a_ij + a_ji on both arcs of every required pair.
std::optional<LinearInequality> symmetrize(const Graph &g, const LinearInequality &ineq,
                                           SymmetryMode mode);

/// Symmetric for the cycle digraph, pseudo-symmetric for the path digraph.
SymmetryMode natural_mode(const Graph &g);

} // namespace cardpoly

#endif
