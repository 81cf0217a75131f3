/**
 * @file io.hpp
 * @brief JSON documents for instances, inequalities, points, sweep
 *        reports and solve logs.
 *
 * Instance:    {"kind", "n", "c": [..], "weights": [[tail, head, num, den], ..],
 *               "objective": "minimize" | "maximize"}
 * Inequality:  {"kind", "n", "class_tag", "params": {..}, "sense", "rhs",
 *               "coeffs": ["p/q", ..], "c": [..]?}
 * Point:       {"kind", "n", "x": [[tail, head, num, den], ..]}
 *
 * Rationals inside inequalities are strings ("3", "-1/2") or integers.
 * Malformed documents raise InvalidParameter.
 */

#ifndef CARDPOLY_IO_HPP
#define CARDPOLY_IO_HPP

#include "cardpoly/inequality.hpp"
#include "cardpoly/separation.hpp"
#include "cardpoly/solver.hpp"
#include "cardpoly/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>

namespace cardpoly {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path &path);

/// The polytope part of an instance document.
struct PolytopeSpec {
    PolytopeKind kind = PolytopeKind::Path;
    int n = 0;
    CardinalitySequence c{std::vector<int>{2, 3}};
};

PolytopeSpec parse_polytope(const Json &doc);

/// Weights must cover every arc (edge) exactly once.
Instance parse_instance(const Json &doc);
Json emit_instance(const Instance &instance);

struct InequalityDocument {
    LinearInequality ineq;
    /// Cardinality sequence the class parameters refer to, if given.
    std::optional<CardinalitySequence> c;

    friend bool operator==(const InequalityDocument &, const InequalityDocument &) = default;
};

/// Coefficients come from "coeffs" when present; otherwise the class is
/// regenerated from "class_tag", "params" and "c". When both are present
/// for a generated class they must agree.
InequalityDocument parse_inequality(const Json &doc);
Json emit_inequality(const InequalityDocument &doc);

Json emit_params(const InequalityParams &params);
InequalityParams parse_params(const Json &doc);

/// Arcs not listed are zero.
FractionalPoint parse_point(const Json &doc, const Graph &g);
Json emit_point(const Graph &g, const RationalVector &x);

Json emit_incidence(const Graph &g, const IncidenceVector &x);
Json emit_sweep(const SweepReport &report);
Json emit_separation(const Graph &g, const std::string &oracle, const SeparationResult &result);
Json emit_solve_log(const Instance &instance, const SolveLog &log);

} // namespace cardpoly

#endif
