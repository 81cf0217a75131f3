/**
 * @file generators.hpp
 * @brief Generators for every inequality class of the path and cycle
 *        models, in all four polytope variants where the class exists.
 *
 * The variant is taken from the graph kind. Each generator validates its
 * structural preconditions and throws InvalidParameter when they fail.
 * Generated inequalities carry their class tag and canonical parameters,
 * so regenerate() rebuilds them bit-exactly.
 *
 * Notation: y_i = x(delta_out(i)) counts whether a directed path or cycle
 * visits node i (for the path variant node n has no out-arcs, node 0 has
 * out-degree one on every path). (S:T) is the set of arcs from S to T,
 * A(S) the arcs inside S.
 */

#ifndef CARDPOLY_GENERATORS_HPP
#define CARDPOLY_GENERATORS_HPP

#include "cardpoly/inequality.hpp"
#include "cardpoly/model.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cardpoly {

enum class Parity { Odd, Even };

/// x(out(i)) - x(in(i)) = b_i; directed graphs only.
LinearInequality flow_conservation(const Graph &g, Node i);

/// x(out(i)) <= 1, or y(delta(i)) <= 2 on undirected graphs. Path
/// variants require an internal node.
LinearInequality degree_constraint(const Graph &g, Node i);

/// x_a >= 0.
LinearInequality nonnegativity(const Graph &g, ArcIndex a);

/// {x(A) >= c_1, x(A) <= c_m}.
std::pair<LinearInequality, LinearInequality>
cardinality_bounds(const Graph &g, const CardinalitySequence &c);

/// Node-counting cardinality-forcing inequality for bracket p.
///   cycle:  c_p < |W| < c_{p+1}
///   path:   0,n in W and c_p < |W|-1 < c_{p+1}
/// Undirected variants double the right-hand side.
LinearInequality cf_node(const Graph &g, std::vector<Node> W,
                         const CardinalitySequence &c, int p);

/// Arc-counting cardinality-forcing inequality over an arc set F with
/// c_p < |F| < c_{p+1}.
LinearInequality cf_arc(const Graph &g, std::vector<Arc> F,
                        const CardinalitySequence &c, int p);

/// 2x(A(W)) - k [x((W:N\W)) + x((N\W:W))] <= 2 c_p with k = |W|-c_p-1
/// (cycle) or k = |W|-c_p-2 (path, W containing 0 and n).
LinearInequality cardinality_subgraph(const Graph &g, std::vector<Node> W,
                                      const CardinalitySequence &c, int p);

/// path:  x((S:N\S)) - x(in(v)) >= 0 with 0,n in S, v outside S.
/// cycle: x((S:N\S)) - x(out(v)) >= 0 with v outside S.
/// undirected: y(delta(S)) - y(delta(v)) >= 0.
LinearInequality one_sided_min_cut(const Graph &g, std::vector<Node> S, Node v);

/// x((S:N\S)) >= 1 (directed), y(delta(S)) >= 2 (undirected).
LinearInequality min_cut(const Graph &g, std::vector<Node> S);

/// x(out(v)) + x(out(w)) - x((S:N\S)) <= 1 on cycle digraphs; the
/// undirected (two-sided min-cut) form is y(delta(v)) + y(delta(w)) -
/// y(delta(S)) <= 2. Requires 2 <= |S| <= n-2, v in S, w outside S.
LinearInequality multiple_cycle_exclusion(const Graph &g, std::vector<Node> S,
                                          Node v, Node w);

/// Parity exclusion over a partition of the nodes.
///   path, odd:   0 in S, n in T, all c_p even:  x(A(S)) + x(A(T)) >= 1
///   path, even:  0,n in S, all c_p odd:         x(A(S)) + x(A(T)) >= 1
///   cycle, odd:  N = S + T + {r}, all c_p even:
///                x(A(S)) + x(A(T)) + x((T:{r})) - x(({r}:T)) >= 0
///   cycle, even: N = S + T, all c_p odd:        x(A(S)) + x(A(T)) >= 1
/// Undirected variants use y(E(S)) + y(E(T)) >= 1. The special node r
/// defaults to n.
LinearInequality parity_exclusion(const Graph &g, std::vector<Node> S,
                                  std::vector<Node> T, Parity parity,
                                  const CardinalitySequence &c,
                                  std::optional<Node> r = std::nullopt);

/// True iff the sequence admits a modified cardinality-forcing bracket at
/// p: 2 <= p <= m-2 and c_{p+2} = c_{p+1}+2 = c_p+4.
bool has_mcf_bracket(const CardinalitySequence &c, int p);

/// sum_{v in P} x(out(v)) - sum_{v in Q} x(out(v)) + x((Q:{r})) - x((P:{r}))
/// <= c_p. Cycle: N = P + Q + {r}, |P| = c_p+1. Path: 0,n in P,
/// |P| = c_p+2, r internal. Requires n >= 6 and an MCF bracket at p.
LinearInequality modified_cf(const Graph &g, std::vector<Node> P,
                             std::vector<Node> Q, Node r,
                             const CardinalitySequence &c, int p);

/// Rebuilds an inequality from its class tag and parameters.
LinearInequality regenerate(const Graph &g, ClassTag tag,
                            const InequalityParams &params,
                            const CardinalitySequence &c);

} // namespace cardpoly

#endif
