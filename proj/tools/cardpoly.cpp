// Command-line front end: dimensions, enumeration, facet checks, sweeps,
// separation, solving, lifting and deorientation.
//
// Exit status: 0 success, 1 invalid input, 2 verification mismatch.

#include "cardpoly/equivalence.hpp"
#include "cardpoly/error.hpp"
#include "cardpoly/facet.hpp"
#include "cardpoly/io.hpp"
#include "cardpoly/separation.hpp"
#include "cardpoly/solver.hpp"
#include "cardpoly/transform.hpp"
#include "cardpoly/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace cardpoly;

namespace {

constexpr int kMismatch = 2;
constexpr int kInvalid = 1;

int enumeration_budget()
{
    const char *env = std::getenv("CARDPOLY_ENUM_BUDGET");
    if (!env || !*env)
        return 8;
    try {
        std::size_t used = 0;
        const int v = std::stoi(env, &used);
        require(used == std::string(env).size() && v > 0, "");
        return v;
    } catch (const std::exception &) {
        throw InvalidParameter("CARDPOLY_ENUM_BUDGET must be a positive integer");
    }
}

void within_budget(int n)
{
    const int budget = enumeration_budget();
    require(n <= budget, "n = " + std::to_string(n) + " exceeds the enumeration budget " +
                             std::to_string(budget) + " (set CARDPOLY_ENUM_BUDGET to raise it)");
}

Polytope load_polytope(const std::string &file)
{
    const PolytopeSpec poly = parse_polytope(read_json_file(file));
    within_budget(poly.n);
    return Polytope::build(poly.kind, poly.n, poly.c);
}

void print(const Json &doc) { std::cout << doc.dump(2) << '\n'; }

std::string walk_text(const IncidenceVector &x)
{
    std::string out;
    for (Node v : x.walk())
        out += (out.empty() ? "" : "-") + std::to_string(v);
    if (x.shape() == IncidenceVector::Shape::Cycle)
        out += "-" + std::to_string(x.walk().front());
    return out;
}

int cmd_dim(const std::string &file, bool json)
{
    const Polytope p = load_polytope(file);
    if (json) {
        Json out;
        out["kind"] = to_string(p.graph.kind());
        out["n"] = p.graph.n();
        out["c"] = p.c.values();
        out["vertices"] = p.vertices.size();
        out["dimension"] = p.dimension;
        print(out);
    } else {
        std::cout << p.dimension << '\n';
    }
    return 0;
}

int cmd_enumerate(const std::string &file, bool json)
{
    const Polytope p = load_polytope(file);
    if (json) {
        Json list = Json::array();
        for (const auto &x : p.vertices)
            list.push_back(emit_incidence(p.graph, x));
        print(list);
    } else {
        for (const auto &x : p.vertices)
            std::cout << x.cardinality() << ' ' << walk_text(x) << '\n';
        std::cout << p.vertices.size() << " objects\n";
    }
    return 0;
}

int cmd_facet_check(const std::string &instance_file, const std::string &ineq_file, bool json)
{
    const Polytope p = load_polytope(instance_file);
    const auto doc = parse_inequality(read_json_file(ineq_file));
    const auto &ineq = doc.ineq;
    require(ineq.kind == p.graph.kind() && ineq.n == p.graph.n(),
            "inequality and instance describe different graphs");
    const auto validity = is_valid(ineq, p.vertices);
    Json out;
    out["dimension"] = p.dimension;
    out["valid"] = validity.valid;
    if (validity.valid) {
        out["tight_rank"] = tight_rank(ineq, p.vertices);
        out["facet"] = is_facet(ineq, p.vertices, p.dimension);
    } else {
        out["counterexample"] = emit_incidence(p.graph, *validity.counterexample);
    }
    if (ineq.tag != ClassTag::Custom) {
        try {
            const auto pred = facet_predicate(ineq.tag, ineq.params, p.graph.n(), p.c, p.graph.kind());
            out["predicted"] = to_string(pred.verdict);
            if (pred.stated)
                out["stated"] = *pred.stated;
        } catch (const InvalidParameter &e) {
            out["predicted"] = std::string("none: ") + e.what();
        }
    }
    if (json) {
        print(out);
    } else {
        std::cout << describe(p.graph, ineq) << '\n';
        for (const auto &[key, value] : out.items())
            std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                      << '\n';
    }
    return 0;
}

int cmd_sweep(const std::string &theorem_id, const std::string &file, const std::string &json_out)
{
    const TheoremInfo &theorem = find_theorem(theorem_id);
    const Polytope p = load_polytope(file);
    require(p.graph.kind() == theorem.kind,
            theorem_id + " is a statement about " + to_string(theorem.kind) + " polytopes");
    const SweepReport report = sweep_theorem(theorem, p);
    std::cout << report.to_text();
    if (!json_out.empty()) {
        std::ofstream os(json_out);
        require(os.good(), "cannot write " + json_out);
        os << emit_sweep(report).dump(2) << '\n';
    }
    return report.disagreements() == 0 ? 0 : kMismatch;
}

int cmd_separate(const std::string &instance_file, const std::string &point_file, bool json)
{
    const PolytopeSpec poly = parse_polytope(read_json_file(instance_file));
    const Graph g = Graph::for_kind(poly.kind, poly.n);
    const FractionalPoint x = parse_point(read_json_file(point_file), g);
    const int budget = enumeration_budget();

    std::vector<std::pair<std::string, SeparationResult>> runs;
    runs.emplace_back("one_sided_min_cut", separate_one_sided_min_cut(g, x, poly.c));
    if (!is_path_kind(g.kind()))
        runs.emplace_back("multi_cycle_excl", separate_multiple_cycle_exclusion(g, x));
    runs.emplace_back("cf_node", separate_cf_greedy(g, x, poly.c));
    runs.emplace_back("cf_arc", separate_cf_arc_greedy(g, x, poly.c));
    runs.emplace_back("modified_cf", separate_mcf(g, x, poly.c));
    if (poly.c.all_even() && g.directed())
        runs.emplace_back("odd_excl",
                          separate_parity_exclusion(g, x, poly.c, Parity::Odd, budget));
    if (poly.c.all_odd() && poly.c.first() >= 3)
        runs.emplace_back("even_excl",
                          separate_parity_exclusion(g, x, poly.c, Parity::Even, budget));
    runs.emplace_back("card_subgraph", separate_cardinality_subgraph(g, x, poly.c, budget));

    if (json) {
        Json out = Json::array();
        for (const auto &[name, r] : runs)
            out.push_back(emit_separation(g, name, r));
        print(out);
        return 0;
    }
    for (const auto &[name, r] : runs) {
        std::cout << name << ": " << r.cuts().size() << " violated"
                  << (r.exhausted() ? "" : " (heuristic)");
        if (!r.empty())
            std::cout << ", max violation " << to_string(r.max_violation());
        std::cout << '\n';
        for (const auto &cut : r.cuts())
            std::cout << "  [" << to_string(cut.violation) << "] " << describe(g, cut.ineq) << '\n';
    }
    return 0;
}

int cmd_solve(const std::string &file, bool json)
{
    const Instance in = parse_instance(read_json_file(file));
    within_budget(in.n);
    SolverConfig cfg;
    cfg.budget = enumeration_budget();
    const SolveLog log = solve(in, cfg);
    if (json) {
        print(emit_solve_log(in, log));
        return 0;
    }
    for (const auto &it : log.iterations) {
        std::cout << "node " << it.node << " depth " << it.depth << " lp " << to_string(it.lp_value)
                  << (it.integral ? " integral" : " fractional");
        for (const auto &[tag, count] : it.cuts_added)
            std::cout << ' ' << tag << '+' << count;
        std::cout << '\n';
    }
    if (log.status == SolveStatus::Infeasible) {
        std::cout << "infeasible\n";
        return 0;
    }
    std::cout << "optimum " << to_string(log.value) << " via " << to_string(log.certificate)
              << (log.cross_checked ? " (checked by enumeration)" : "") << '\n';
    if (log.optimum)
        std::cout << walk_text(*log.optimum) << '\n';
    return 0;
}

int cmd_lift(const std::string &file)
{
    const auto doc = parse_inequality(read_json_file(file));
    require(doc.ineq.kind == PolytopeKind::Path, "lift takes an inequality on the path digraph");
    require(doc.c.has_value(), "lift needs the cardinality sequence \"c\"");
    print(emit_inequality({lift_path_to_cycle(doc.ineq, *doc.c), doc.c}));
    return 0;
}

int cmd_deorient(const std::string &file)
{
    const auto doc = parse_inequality(read_json_file(file));
    require(is_directed_kind(doc.ineq.kind), "deorient takes a directed inequality");
    const Graph g = Graph::for_kind(doc.ineq.kind, doc.ineq.n);
    const auto sym = symmetrize(g, doc.ineq, natural_mode(g));
    require(sym.has_value(), "the inequality has no (pseudo-)symmetric equivalent");
    print(emit_inequality({deorient(*sym), doc.c}));
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Cardinality constrained path and cycle polytopes"};
    app.require_subcommand(1);
    bool json = false;
    std::string a, b, json_out;

    auto *dim = app.add_subcommand("dim", "Dimension of the polytope of an instance");
    dim->add_option("instance", a)->required();
    dim->add_flag("--json", json);

    auto *enumerate = app.add_subcommand("enumerate", "List the feasible paths or cycles");
    enumerate->add_option("instance", a)->required();
    enumerate->add_flag("--json", json);

    auto *facet = app.add_subcommand("facet-check", "Validity and facet test for an inequality");
    facet->add_option("instance", a)->required();
    facet->add_option("inequality", b)->required();
    facet->add_flag("--json", json);

    auto *sweep = app.add_subcommand("sweep", "Compare a stated facet condition with computation");
    sweep->add_option("theorem", a, "e.g. path/cf_node")->required();
    sweep->add_option("instance", b)->required();
    sweep->add_option("--json", json_out, "Write a JSON summary to this file");

    auto *separate = app.add_subcommand("separate", "Run the separation oracles on a point");
    separate->add_option("instance", a)->required();
    separate->add_option("point", b)->required();
    separate->add_flag("--json", json);

    auto *solve_cmd = app.add_subcommand("solve", "Branch and cut for an instance");
    solve_cmd->add_option("instance", a)->required();
    solve_cmd->add_flag("--json", json);

    auto *lift = app.add_subcommand("lift", "Lift a path inequality to the cycle polytope");
    lift->add_option("inequality", a)->required();

    auto *deorient_cmd = app.add_subcommand("deorient", "Undirected counterpart of an inequality");
    deorient_cmd->add_option("inequality", a)->required();

    auto *theorems = app.add_subcommand("theorems", "List the sweepable statements");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : kInvalid;
    }

    try {
        if (*dim)
            return cmd_dim(a, json);
        if (*enumerate)
            return cmd_enumerate(a, json);
        if (*facet)
            return cmd_facet_check(a, b, json);
        if (*sweep)
            return cmd_sweep(a, b, json_out);
        if (*separate)
            return cmd_separate(a, b, json);
        if (*solve_cmd)
            return cmd_solve(a, json);
        if (*lift)
            return cmd_lift(a);
        if (*deorient_cmd)
            return cmd_deorient(a);
        if (*theorems) {
            for (const auto &t : theorem_catalog())
                std::cout << t.id << "  " << t.summary << '\n';
            return 0;
        }
    } catch (const InvalidParameter &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const InternalError &e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kMismatch;
    }
    return kInvalid;
}
