#include "cardpoly/io.hpp"

#include "cardpoly/error.hpp"
#include "cardpoly/generators.hpp"

#include <fstream>
#include <set>

namespace cardpoly {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

const Json &field(const Json &doc, const char *name)
{
    require(doc.is_object(), "expected a JSON object");
    auto it = doc.find(name);
    require(it != doc.end(), std::string("missing field \"") + name + "\"");
    return *it;
}

int as_int(const Json &v, const char *what)
{
    require(v.is_number_integer(), std::string(what) + " must be an integer");
    return v.get<int>();
}

Rational as_rational(const Json &v)
{
    if (v.is_number_integer())
        return Rational(v.get<long>());
    require(v.is_string(), "rational values must be integers or strings");
    return parse_rational(v.get<std::string>());
}

std::vector<Node> as_nodes(const Json &v, const char *what)
{
    require(v.is_array(), std::string(what) + " must be an array");
    std::vector<Node> out;
    for (const auto &x : v)
        out.push_back(as_int(x, what));
    return out;
}

Json nodes_json(const std::vector<Node> &nodes)
{
    Json out = Json::array();
    for (Node v : nodes)
        out.push_back(v);
    return out;
}

Json sequence_json(const CardinalitySequence &c)
{
    Json out = Json::array();
    for (int k : c.values())
        out.push_back(k);
    return out;
}

CardinalitySequence parse_sequence(const Json &v)
{
    require(v.is_array(), "\"c\" must be an array");
    std::vector<int> values;
    for (const auto &x : v)
        values.push_back(as_int(x, "c"));
    return CardinalitySequence(std::move(values));
}

/// Arc-indexed vector from [tail, head, num, den] entries.
RationalVector arc_values(const Json &list, const Graph &g, bool every_arc, const char *what)
{
    require(list.is_array(), std::string(what) + " must be an array");
    RationalVector out(at(g.num_arcs()));
    std::vector<bool> seen(at(g.num_arcs()), false);
    for (const auto &e : list) {
        require(e.is_array() && e.size() == 4,
                std::string(what) + " entries are [tail, head, numerator, denominator]");
        const auto a = g.find(as_int(e[0], "tail"), as_int(e[1], "head"));
        require(a.has_value(), std::string(what) + " names an arc that is not in the graph");
        require(!seen[at(*a)], std::string(what) + " lists an arc twice");
        seen[at(*a)] = true;
        const Integer num(as_int(e[2], "numerator")), den(as_int(e[3], "denominator"));
        out[at(*a)] = make_rational(num, den);
    }
    if (every_arc)
        for (ArcIndex a = 0; a < g.num_arcs(); ++a)
            require(seen[at(a)], std::string(what) + " is missing an arc");
    return out;
}

Json arc_entries(const Graph &g, const RationalVector &x, bool skip_zero)
{
    Json out = Json::array();
    for (ArcIndex a = 0; a < g.num_arcs(); ++a) {
        const Rational &q = x[at(a)];
        if (skip_zero && sgn(q) == 0)
            continue;
        const Arc &e = g.arc(a);
        require(q.get_num().fits_slong_p() && q.get_den().fits_slong_p(),
                "value does not fit the [tail, head, num, den] format");
        out.push_back(Json::array({e.tail, e.head, q.get_num().get_si(), q.get_den().get_si()}));
    }
    return out;
}

bool reads_sequence(ClassTag tag)
{
    switch (tag) {
    case ClassTag::Flow:
    case ClassTag::Degree:
    case ClassTag::Nonneg:
    case ClassTag::OneSidedMinCut:
    case ClassTag::MinCut:
    case ClassTag::MultiCycleExcl:
    case ClassTag::Custom: return false;
    default: return true;
    }
}

PolytopeKind parse_kind(const Json &doc)
{
    const Json &k = field(doc, "kind");
    require(k.is_string(), "\"kind\" must be a string");
    return parse_polytope_kind(k.get<std::string>());
}

} // namespace

Json read_json_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    require(in.good(), "cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw InvalidParameter(path.string() + ": " + e.what());
    }
}

PolytopeSpec parse_polytope(const Json &doc)
{
    PolytopeSpec poly;
    poly.kind = parse_kind(doc);
    poly.n = as_int(field(doc, "n"), "n");
    poly.c = parse_sequence(field(doc, "c"));
    Graph::for_kind(poly.kind, poly.n);
    validate_sequence_for(poly.kind, poly.n, poly.c);
    return poly;
}

Instance parse_instance(const Json &doc)
{
    const PolytopeSpec poly = parse_polytope(doc);
    Instance in;
    in.kind = poly.kind;
    in.n = poly.n;
    in.c = poly.c;
    in.weights = arc_values(field(doc, "weights"), Graph::for_kind(poly.kind, poly.n), true,
                            "weights");
    if (auto it = doc.find("objective"); it != doc.end()) {
        require(it->is_string(), "\"objective\" must be a string");
        const auto s = it->get<std::string>();
        require(s == "minimize" || s == "maximize", "objective is minimize or maximize");
        in.objective = s == "minimize" ? Objective::Minimize : Objective::Maximize;
    }
    in.validate();
    return in;
}

Json emit_instance(const Instance &instance)
{
    const Graph g = Graph::for_kind(instance.kind, instance.n);
    Json out;
    out["kind"] = to_string(instance.kind);
    out["n"] = instance.n;
    out["c"] = sequence_json(instance.c);
    out["weights"] = arc_entries(g, instance.weights, false);
    out["objective"] = instance.objective == Objective::Minimize ? "minimize" : "maximize";
    return out;
}

Json emit_params(const InequalityParams &params)
{
    Json out = Json::object();
    auto set = [&](const char *name, const std::vector<Node> &nodes) {
        if (!nodes.empty())
            out[name] = nodes_json(nodes);
    };
    set("W", params.W);
    set("S", params.S);
    set("T", params.T);
    set("P", params.P);
    set("Q", params.Q);
    if (!params.F.empty()) {
        Json arcs = Json::array();
        for (const Arc &a : params.F)
            arcs.push_back(Json::array({a.tail, a.head}));
        out["F"] = arcs;
    }
    auto opt = [&](const char *name, const std::optional<int> &v) {
        if (v)
            out[name] = *v;
    };
    opt("v", params.v);
    opt("w", params.w);
    opt("r", params.r);
    opt("j", params.j);
    opt("p", params.p);
    return out;
}

InequalityParams parse_params(const Json &doc)
{
    require(doc.is_object(), "\"params\" must be an object");
    static const std::set<std::string> known{"W", "S", "T", "P", "Q", "F", "v", "w", "r", "j", "p"};
    for (const auto &item : doc.items())
        require(known.contains(item.key()), "unknown parameter \"" + item.key() + "\"");
    InequalityParams params;
    auto nodes = [&](const char *name, std::vector<Node> &into) {
        if (auto it = doc.find(name); it != doc.end())
            into = as_nodes(*it, name);
    };
    nodes("W", params.W);
    nodes("S", params.S);
    nodes("T", params.T);
    nodes("P", params.P);
    nodes("Q", params.Q);
    if (auto it = doc.find("F"); it != doc.end()) {
        require(it->is_array(), "\"F\" must be an array of [tail, head]");
        for (const auto &a : *it) {
            require(a.is_array() && a.size() == 2, "\"F\" entries are [tail, head]");
            params.F.push_back({as_int(a[0], "F"), as_int(a[1], "F")});
        }
    }
    auto opt = [&](const char *name, std::optional<int> &into) {
        if (auto it = doc.find(name); it != doc.end())
            into = as_int(*it, name);
    };
    opt("v", params.v);
    opt("w", params.w);
    opt("r", params.r);
    opt("j", params.j);
    opt("p", params.p);
    params.canonicalize();
    return params;
}

InequalityDocument parse_inequality(const Json &doc)
{
    InequalityDocument out;
    const PolytopeKind kind = parse_kind(doc);
    const int n = as_int(field(doc, "n"), "n");
    const Graph g = Graph::for_kind(kind, n);
    const Json &tag_field = field(doc, "class_tag");
    require(tag_field.is_string(), "\"class_tag\" must be a string");
    const ClassTag tag = parse_class_tag(tag_field.get<std::string>());
    if (auto it = doc.find("c"); it != doc.end())
        out.c = parse_sequence(*it);
    const InequalityParams params =
        doc.contains("params") ? parse_params(doc["params"]) : InequalityParams{};

    std::optional<LinearInequality> generated;
    if (tag != ClassTag::Custom && (out.c || !reads_sequence(tag))) {
        // Classes that ignore c are rebuilt against any admissible one.
        const CardinalitySequence c = out.c ? *out.c : CardinalitySequence({2, n});
        generated = regenerate(g, tag, params, c);
    }

    if (auto it = doc.find("coeffs"); it != doc.end()) {
        require(it->is_array() && static_cast<int>(it->size()) == g.num_arcs(),
                "\"coeffs\" needs one entry per arc");
        LinearInequality ineq;
        ineq.kind = kind;
        ineq.n = n;
        for (const auto &q : *it)
            ineq.coeffs.push_back(as_rational(q));
        ineq.sense = parse_sense(field(doc, "sense").get<std::string>());
        ineq.rhs = as_rational(field(doc, "rhs"));
        ineq.tag = tag;
        ineq.params = params;
        if (generated)
            require(generated->coeffs == ineq.coeffs && generated->rhs == ineq.rhs &&
                        generated->sense == ineq.sense,
                    "coefficients do not match the class parameters");
        out.ineq = std::move(ineq);
    } else {
        require(generated.has_value(),
                "an inequality without \"coeffs\" needs a generated class and \"c\"");
        out.ineq = std::move(*generated);
    }
    return out;
}

Json emit_inequality(const InequalityDocument &doc)
{
    const LinearInequality &ineq = doc.ineq;
    Json out;
    out["kind"] = to_string(ineq.kind);
    out["n"] = ineq.n;
    if (doc.c)
        out["c"] = sequence_json(*doc.c);
    out["class_tag"] = to_string(ineq.tag);
    out["params"] = emit_params(ineq.params);
    out["sense"] = to_string(ineq.sense);
    out["rhs"] = to_string(ineq.rhs);
    Json coeffs = Json::array();
    for (const auto &q : ineq.coeffs)
        coeffs.push_back(to_string(q));
    out["coeffs"] = coeffs;
    return out;
}

FractionalPoint parse_point(const Json &doc, const Graph &g)
{
    require(parse_kind(doc) == g.kind() && as_int(field(doc, "n"), "n") == g.n(),
            "point does not belong to the instance graph");
    return FractionalPoint(arc_values(field(doc, "x"), g, false, "x"));
}

Json emit_point(const Graph &g, const RationalVector &x)
{
    Json out;
    out["kind"] = to_string(g.kind());
    out["n"] = g.n();
    out["x"] = arc_entries(g, x, true);
    return out;
}

Json emit_incidence(const Graph &g, const IncidenceVector &x)
{
    Json out;
    out["cardinality"] = x.cardinality();
    out["walk"] = nodes_json(x.walk());
    Json arcs = Json::array();
    for (ArcIndex a : x.support())
        arcs.push_back(Json::array({g.arc(a).tail, g.arc(a).head}));
    out["arcs"] = arcs;
    return out;
}

Json emit_sweep(const SweepReport &report)
{
    Json out;
    out["theorem"] = report.theorem_id;
    out["kind"] = to_string(report.kind);
    out["n"] = report.n;
    out["c"] = sequence_json(report.c);
    out["dimension"] = report.dimension;
    out["instances"] = report.entries.size();
    out["facets"] = report.facets();
    out["agreements"] = report.agreements();
    out["disagreements"] = report.disagreements();
    out["unknown"] = report.unknown_count();
    out["unknown_against_statement"] = report.unknown_against_statement();
    Json notable = Json::array();
    for (const auto &e : report.entries) {
        const bool unknown = e.predicted.verdict == Verdict::Unknown;
        if (!unknown && !e.disagrees())
            continue;
        Json item;
        item["params"] = emit_params(e.params);
        item["predicted"] = to_string(e.predicted.verdict);
        if (e.predicted.stated)
            item["stated"] = *e.predicted.stated;
        item["valid"] = e.valid;
        item["facet"] = e.facet;
        item["status"] = unknown ? "resolved" : "mismatch";
        notable.push_back(item);
    }
    out["entries"] = notable;
    return out;
}

Json emit_separation(const Graph &g, const std::string &oracle, const SeparationResult &result)
{
    Json out;
    out["oracle"] = oracle;
    out["exhausted"] = result.exhausted();
    out["max_violation"] = to_string(result.max_violation());
    Json cuts = Json::array();
    for (const auto &cut : result.cuts()) {
        Json item = emit_inequality({cut.ineq, std::nullopt});
        item["violation"] = to_string(cut.violation);
        item["text"] = describe(g, cut.ineq);
        cuts.push_back(item);
    }
    out["cuts"] = cuts;
    return out;
}

Json emit_solve_log(const Instance &instance, const SolveLog &log)
{
    const Graph g = Graph::for_kind(instance.kind, instance.n);
    Json out;
    out["status"] = log.status == SolveStatus::Optimal ? "optimal" : "infeasible";
    out["certificate"] = to_string(log.certificate);
    if (log.status == SolveStatus::Optimal) {
        out["value"] = to_string(log.value);
        if (log.optimum)
            out["optimum"] = emit_incidence(g, *log.optimum);
    }
    out["branch_nodes"] = log.branch_nodes;
    out["cross_checked"] = log.cross_checked;
    Json its = Json::array();
    for (const auto &it : log.iterations) {
        Json item;
        item["node"] = it.node;
        item["depth"] = it.depth;
        item["lp_value"] = to_string(it.lp_value);
        item["integral"] = it.integral;
        Json cuts = Json::object();
        for (const auto &[tag, count] : it.cuts_added)
            cuts[tag] = count;
        item["cuts_added"] = cuts;
        its.push_back(item);
    }
    out["iterations"] = its;
    return out;
}

} // namespace cardpoly
