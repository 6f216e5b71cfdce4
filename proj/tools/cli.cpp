#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "matchorient/catalog.hpp"
#include "matchorient/json_io.hpp"
#include "matchorient/matching.hpp"
#include "matchorient/orientation_solver.hpp"
#include "matchorient/splitting.hpp"
#include "matchorient/structure.hpp"
#include "matchorient/wagner.hpp"

namespace matchorient::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Options {
    std::string graph_arg;
    std::string factor_arg;
    std::string target = "even";
    std::string edge_arg;
    std::string edges_arg;
    std::string choice = "r1";
    bool special = false;
    bool pretty = false;
    int max_size = 16;
};

std::vector<std::pair<std::string, std::string>> parse_label_pairs(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::istringstream is(item);
        std::string a, b, extra;
        if (!(is >> a >> b) || (is >> extra))
            throw parse_error("expected 'label label' pairs separated by commas: " + text);
        out.emplace_back(a, b);
    }
    if (out.empty()) throw parse_error("no pairs in: " + text);
    return out;
}

Graph load_graph(const std::string& arg) {
    if (arg.rfind("catalog:", 0) == 0) {
        const CatalogEntry* e = catalog_find(arg.substr(8));
        if (e == nullptr) throw parse_error("unknown catalog entry: " + arg.substr(8));
        return e->graph;
    }
    std::string text;
    if (arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(arg);
        if (!in) throw parse_error("cannot open " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return Graph::parse(text);
}

OneFactor resolve_factor(const Graph& g, const Options& opt) {
    if (!opt.factor_arg.empty()) return factor_from_labels(g, parse_label_pairs(opt.factor_arg));
    auto f = first_perfect_matching(g);
    if (!f) throw no_factor_error("graph has no 1-factor; pass --factor explicitly");
    return *f;
}

void emit(const json& j, const Options& opt, std::ostream& out) {
    out << (opt.pretty ? j.dump(2) : j.dump()) << '\n';
}

int cmd_matchings(const Graph& g, const Options& opt, std::ostream& out) {
    MatchingSet ms = enumerate_perfect_matchings(g);
    json j;
    j["count"] = ms.matchings.size();
    auto arr = json::array();
    for (const OneFactor& f : ms.matchings) arr.push_back(factor_json(g, f));
    j["matchings"] = arr;
    emit(j, opt, out);
    return ms.matchings.empty() ? kNegative : kOk;
}

int cmd_extendible(const Graph& g, const Options& opt, std::ostream& out) {
    ExtendibilityReport rep = is_one_extendible(g);
    json j;
    j["one_extendible"] = rep.one_extendible;
    if (rep.offending_edge) {
        const Edge& e = g.edge(*rep.offending_edge);
        j["offending_edge"] = {g.label(e.u), g.label(e.v)};
    }
    emit(j, opt, out);
    return rep.one_extendible ? kOk : kNegative;
}

int cmd_altcycles(const Graph& g, const Options& opt, std::ostream& out) {
    OneFactor f = resolve_factor(g, opt);
    auto cycles = enumerate_alternating_cycles(g, f);
    json j;
    j["factor"] = factor_json(g, f);
    j["count"] = cycles.size();
    auto arr = json::array();
    for (const AltCycle& c : cycles) arr.push_back(cycle_json(g, c.verts));
    j["cycles"] = arr;
    emit(j, opt, out);
    return kOk;
}

int cmd_orient(const Graph& g, const Options& opt, std::ostream& out) {
    OneFactor f = resolve_factor(g, opt);
    if (opt.target != "even" && opt.target != "odd")
        throw parse_error("--target must be even or odd");
    ParitySystem sys = build_parity_system(g, f);
    OrientationVerdict v =
        solve_orientation(sys, opt.target == "even" ? Target::even : Target::odd);
    json j = verdict_json(g, sys, v);
    j["factor"] = factor_json(g, f);
    j["target"] = opt.target;
    emit(j, opt, out);
    return v.exists ? kOk : kNegative;
}

int cmd_zerosum(const Graph& g, const Options& opt, std::ostream& out) {
    OneFactor f = resolve_factor(g, opt);
    ParitySystem sys = build_parity_system(g, f);
    auto basis = zero_sum_basis(sys);
    json j;
    j["factor"] = factor_json(g, f);
    auto arr = json::array();
    for (const ZeroSumCertificate& c : basis) arr.push_back(zero_sum_json(g, sys, c));
    j["basis"] = arr;
    emit(j, opt, out);
    return kOk;
}

int cmd_pfaffian(const Graph& g, const Options& opt, std::ostream& out) {
    bool p = is_pfaffian(g);
    emit(json{{"pfaffian", p}}, opt, out);
    return p ? kOk : kNegative;
}

int cmd_bad(const Graph& g, const Options& opt, std::ostream& out) {
    OneFactor f = resolve_factor(g, opt);
    BadnessReport rep = is_bad(g, f);
    json j;
    j["factor"] = factor_json(g, f);
    j["bad"] = rep.bad;
    if (rep.witness) {
        ParitySystem sys = build_parity_system(g, f);
        j["witness"] = zero_sum_json(g, sys, *rep.witness);
    }
    emit(j, opt, out);
    return rep.bad ? kOk : kNegative;
}

int cmd_wagner(const Graph& g, const Options& opt, std::ostream& out) {
    auto cert = wagner_membership(g);
    json j;
    j["member"] = cert.has_value();
    if (cert) j["certificate"] = wagner_certificate_json(g, *cert);
    emit(j, opt, out);
    return cert ? kOk : kNegative;
}

int cmd_earify(const Graph& g, const Options& opt, std::ostream& out) {
    OneFactor f = resolve_factor(g, opt);
    EarDecomposition dec = f_reducible_ear_decomposition(g, f);
    json j = ear_decomposition_json(g, dec);
    j["factor"] = factor_json(g, f);
    emit(j, opt, out);
    return kOk;
}

int cmd_cuts(const Graph& g, const Options& opt, std::ostream& out) {
    json j;
    auto tight = json::array();
    for (const TightCutReport& rep : enumerate_tight_cuts(g, opt.max_size)) {
        if (!rep.tight) continue;
        json c = cut_json(g, rep.cut);
        c["trivial"] = rep.trivial;
        tight.push_back(std::move(c));
    }
    j["tight"] = tight;
    StructureCuts sc = barrier_and_2separation_cuts(g);
    auto barrier = json::array(), twosep = json::array();
    for (const TaggedCut& tc : sc.cuts)
        (tc.kind == CutKind::barrier ? barrier : twosep).push_back(cut_json(g, tc.cut));
    j["barrier"] = barrier;
    j["two_separation"] = twosep;
    auto uncls = json::array();
    for (auto [u, v] : sc.unclassified_two_separations) uncls.push_back({g.label(u), g.label(v)});
    j["unclassified_two_separations"] = uncls;
    emit(j, opt, out);
    return kOk;
}

int cmd_bricks(const Graph& g, const Options& opt, std::ostream& out) {
    auto pieces = tight_cut_decomposition(g);
    json j;
    auto arr = json::array();
    for (const Graph& p : pieces) {
        json pj;
        pj["graph"] = graph_json(p);
        pj["kind"] = bipartition(p).has_value() ? "brace" : "brick";
        arr.push_back(std::move(pj));
    }
    j["pieces"] = arr;
    emit(j, opt, out);
    return kOk;
}

int cmd_split(const Graph& g, const Options& opt, std::ostream& out) {
    if (opt.edge_arg.empty()) throw parse_error("split needs --edge \"a b\"");
    auto pairs = parse_label_pairs(opt.edge_arg);
    if (pairs.size() != 1) throw parse_error("--edge takes exactly one pair");
    auto u = g.vertex_by_label(pairs[0].first), v = g.vertex_by_label(pairs[0].second);
    if (!u || !v) throw parse_error("unknown vertex in --edge");
    auto e0 = g.find_edge(*u, *v);
    if (!e0) throw parse_error("--edge is not an edge of the graph");

    json j;
    if (opt.special) {
        auto cert = wagner_membership(g);
        if (!cert) {
            emit(json{{"split", nullptr}, {"reason", "graph is not a generalized Wagner graph"}},
                 opt, out);
            return kNegative;
        }
        auto res = special_e0_split(g, *cert, *e0);
        if (!res) {
            emit(json{{"split", nullptr}, {"reason", "edge does not qualify"}}, opt, out);
            return kNegative;
        }
        j["graph"] = graph_json(res->split.graph);
        j["simple"] = res->split.is_simple;
        j["choice"] = res->choice == SplitChoice::r1 ? "r1" : "r2";
        j["added"] = {res->split.added_pairs[0], res->split.added_pairs[1]};
        j["residual_factor"] = factor_json(res->split.graph, res->residual_factor);
        emit(j, opt, out);
        return kOk;
    }
    if (opt.choice != "r1" && opt.choice != "r2") throw parse_error("--choice must be r1 or r2");
    SplitResult res = e0_split(g, SplitSpec{*e0, opt.choice == "r1" ? SplitChoice::r1
                                                                    : SplitChoice::r2});
    j["graph"] = graph_json(res.graph);
    j["simple"] = res.is_simple;
    j["added"] = {res.added_pairs[0], res.added_pairs[1]};
    emit(j, opt, out);
    return res.is_simple ? kOk : kNegative;
}

int cmd_glue(const Graph& g, const Options& opt, std::ostream& out) {
    if (opt.edges_arg.empty()) throw parse_error("glue needs --edges \"a1 b1,a2 b2\"");
    auto pairs = parse_label_pairs(opt.edges_arg);
    if (pairs.size() != 2) throw parse_error("--edges takes exactly two pairs");
    auto resolve = [&](const std::pair<std::string, std::string>& p) {
        auto a = g.vertex_by_label(p.first), b = g.vertex_by_label(p.second);
        if (!a || !b) throw parse_error("unknown vertex in --edges");
        return std::make_pair(*a, *b);
    };
    Graph glued = glue(g, resolve(pairs[0]), resolve(pairs[1]));
    emit(json{{"graph", graph_json(glued)}}, opt, out);
    return kOk;
}

int cmd_catalog(const std::string& name, const Options& opt, std::ostream& out) {
    if (name.empty()) {
        auto arr = json::array();
        for (const CatalogEntry& e : catalog()) arr.push_back(catalog_entry_json(e));
        emit(json{{"entries", arr}}, opt, out);
        return kOk;
    }
    const CatalogEntry* e = catalog_find(name);
    if (e == nullptr) throw parse_error("unknown catalog entry: " + name);
    emit(catalog_entry_json(*e), opt, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"even/odd factor-orientation toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_graph_arg = [&](CLI::App* sub, bool required = true) {
        auto* o = sub->add_option("graph", opt.graph_arg,
                                  "graph: file path, '-' for stdin, or catalog:<name>");
        if (required) o->required();
    };
    auto add_factor = [&](CLI::App* sub) {
        sub->add_option("--factor", opt.factor_arg,
                        "1-factor as comma-separated label pairs, e.g. \"1 2,3 4\"");
    };

    CLI::App* matchings = app.add_subcommand("matchings", "enumerate perfect matchings");
    add_graph_arg(matchings);
    CLI::App* extendible = app.add_subcommand("extendible", "1-extendability check");
    add_graph_arg(extendible);
    CLI::App* altcycles = app.add_subcommand("altcycles", "factor-alternating cycles");
    add_graph_arg(altcycles);
    add_factor(altcycles);
    CLI::App* orient = app.add_subcommand("orient", "decide even/odd factor orientation");
    add_graph_arg(orient);
    add_factor(orient);
    orient->add_option("--target", opt.target, "even or odd (default even)");
    CLI::App* zerosum = app.add_subcommand("zerosum", "zero-sum cycle set basis");
    add_graph_arg(zerosum);
    add_factor(zerosum);
    CLI::App* pfaffian = app.add_subcommand("pfaffian", "Pfaffian test");
    add_graph_arg(pfaffian);
    CLI::App* bad = app.add_subcommand("bad", "badness test");
    add_graph_arg(bad);
    add_factor(bad);
    CLI::App* wagner = app.add_subcommand("wagner", "generalized Wagner membership");
    add_graph_arg(wagner);
    CLI::App* earify = app.add_subcommand("earify", "factor-reducible ear decomposition");
    add_graph_arg(earify);
    add_factor(earify);
    CLI::App* cuts = app.add_subcommand("cuts", "tight, barrier and 2-separation cuts");
    add_graph_arg(cuts);
    cuts->add_option("--max-size", opt.max_size, "vertex limit for exhaustive cut enumeration");
    CLI::App* bricks = app.add_subcommand("bricks", "tight cut decomposition");
    add_graph_arg(bricks);
    CLI::App* split = app.add_subcommand("split", "edge splitting");
    add_graph_arg(split);
    split->add_option("--edge", opt.edge_arg, "splitting edge as \"a b\"")->required();
    split->add_option("--choice", opt.choice, "r1 or r2 (default r1)");
    split->add_flag("--special", opt.special, "use the certified special splitting");
    CLI::App* glue_cmd = app.add_subcommand("glue", "glue two independent edges");
    add_graph_arg(glue_cmd);
    glue_cmd->add_option("--edges", opt.edges_arg, "two ordered pairs, e.g. \"1 5,2 6\"")
        ->required();
    std::string catalog_name;
    CLI::App* catalog_cmd = app.add_subcommand("catalog", "built-in instances");
    catalog_cmd->add_option("name", catalog_name, "entry name (omit to list all)");

    app.add_flag("--pretty", opt.pretty, "indent JSON output");
    for (auto* sub : app.get_subcommands({})) sub->add_flag("--pretty", opt.pretty, "indent JSON output");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kOk;
        }
        err << e.what() << "\n" << app.help();
        return kInputError;
    }

    try {
        if (catalog_cmd->parsed()) return cmd_catalog(catalog_name, opt, out);
        Graph g = load_graph(opt.graph_arg);
        if (matchings->parsed()) return cmd_matchings(g, opt, out);
        if (extendible->parsed()) return cmd_extendible(g, opt, out);
        if (altcycles->parsed()) return cmd_altcycles(g, opt, out);
        if (orient->parsed()) return cmd_orient(g, opt, out);
        if (zerosum->parsed()) return cmd_zerosum(g, opt, out);
        if (pfaffian->parsed()) return cmd_pfaffian(g, opt, out);
        if (bad->parsed()) return cmd_bad(g, opt, out);
        if (wagner->parsed()) return cmd_wagner(g, opt, out);
        if (earify->parsed()) return cmd_earify(g, opt, out);
        if (cuts->parsed()) return cmd_cuts(g, opt, out);
        if (bricks->parsed()) return cmd_bricks(g, opt, out);
        if (split->parsed()) return cmd_split(g, opt, out);
        if (glue_cmd->parsed()) return cmd_glue(g, opt, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    err << app.help();
    return kInputError;
}

}  // namespace matchorient::cli
