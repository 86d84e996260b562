#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wiener/enumerate.hpp"
#include "wiener/families.hpp"
#include "wiener/formulas.hpp"
#include "wiener/graph.hpp"
#include "wiener/json_io.hpp"
#include "wiener/matching.hpp"
#include "wiener/transforms.hpp"

namespace {

using namespace wiener;

struct GlobalOpts {
    std::string format = "g6";
    unsigned seed = 0;
    int jobs = 1;
};

Graph parse_graph_line(const std::string& line, const GlobalOpts& opts) {
    if (opts.format == "json") return graph_from_json(nlohmann::json::parse(line));
    return from_graph6(line);
}

void print_graph(const Graph& g, const GlobalOpts& opts) {
    if (opts.format == "json")
        std::cout << graph_to_json(g).dump() << "\n";
    else
        std::cout << to_graph6(g) << "\n";
}

template <typename Fn>
void for_each_stdin_graph(const GlobalOpts& opts, Fn&& fn) {
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        fn(parse_graph_line(line, opts));
    }
}

int cmd_construct(const std::string& family, const std::vector<int>& params,
                  const GlobalOpts& opts) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw std::invalid_argument("construct: family '" + family + "' takes " +
                                        std::to_string(count) + " params, got " +
                                        std::to_string(params.size()));
    };
    Graph g = Graph::from_edges(1, {});
    if (family == "g3") {
        need(6);
        g = build_g3({params[0], params[1], params[2], params[3], params[4], params[5]});
    } else if (family == "g4") {
        need(8);
        g = build_g4({params[0], params[1], params[2], params[3], params[4], params[5],
                      params[6], params[7]});
    } else if (family == "anm") {
        need(2);
        g = build_anm({params[0], params[1]});
    } else if (family == "duzhou-tree") {
        need(2);
        g = build_duzhou_min_tree({params[0], params[1], DuZhouKind::TreeMin});
    } else if (family == "duzhou-uni") {
        need(2);
        g = build_duzhou_min_unicyclic({params[0], params[1], DuZhouKind::UnicyclicMin});
    } else {
        throw std::invalid_argument("construct: unknown family '" + family + "'");
    }
    print_graph(g, opts);
    return 0;
}

int cmd_bound(const std::string& which, int n, int m) {
    long long value;
    if (which == "max-uni")
        value = bound_max_unicyclic(n, m);
    else if (which == "dank-min")
        value = bound_dankelmann_min(n, m);
    else if (which == "dank-max")
        value = bound_dankelmann_max(n, m);
    else if (which == "dz-tree")
        value = bound_duzhou_tree_min(n, m);
    else if (which == "dz-uni")
        value = bound_duzhou_unicyclic_min(n, m);
    else
        throw std::invalid_argument("bound: unknown --which '" + which + "'");
    std::cout << value << "\n";
    return 0;
}

int cmd_transform(const std::string& op, int d, int branch, int v, int i1, int i2,
                  const GlobalOpts& opts) {
    for_each_stdin_graph(opts, [&](const Graph& g) {
        TransformReport report;
        if (op == "spr")
            report = spr(g, d, branch, v);
        else if (op == "g1")
            report = cycle_swap(g, CycleSwapVariant::G1);
        else if (op == "g2")
            report = cycle_swap(g, CycleSwapVariant::G2);
        else if (op == "path-regraft")
            report = path_regraft(g, i1, i2);
        else
            throw std::invalid_argument("transform: unknown --op '" + op + "'");
        std::cout << report_to_json(report).dump() << "\n";
    });
    return 0;
}

int cmd_enumerate(int n, bool wantTrees, const GlobalOpts& opts) {
    auto graphs = wantTrees ? trees(n, 10, opts.jobs) : unicyclic_graphs(n);
    for (const Graph& g : graphs) print_graph(g, opts);
    return 0;
}

int cmd_table(int n, const GlobalOpts& opts) {
    std::cout << "n,m,w_max,extremal_count,extremal_g6\n";
    for (const auto& rec : extremal_table(n, opts.jobs)) {
        std::string forms;
        for (const auto& f : rec.extremal) {
            if (!forms.empty()) forms += ";";
            forms += f.bytes;
        }
        std::cout << rec.n << "," << rec.m << "," << rec.w_max << "," << rec.extremal.size()
                  << "," << forms << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, int nMax, int treeNMax, const GlobalOpts& opts) {
    VerifyReport report;
    if (suite == "main")
        report = verify_main_theorem(nMax, opts.jobs);
    else if (suite == "mono")
        report = verify_monotonicity(nMax, opts.jobs);
    else if (suite == "minima")
        report = verify_minima(treeNMax, nMax, opts.jobs);
    else if (suite == "dankelmann")
        report = verify_dankelmann(nMax, opts.jobs);
    else
        throw std::invalid_argument("verify: unknown --suite '" + suite + "'");
    std::cout << report_to_json(report).dump(2) << "\n";
    return report.passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Wiener-index toolkit for unicyclic graphs under matching constraints"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--format", opts.format, "Graph I/O format")
        ->check(CLI::IsMember({"g6", "json"}));
    app.add_option("--seed", opts.seed, "Random seed")->capture_default_str();
    app.add_option("--jobs", opts.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

    std::string family, which = "max-uni", op, suite = "main";
    std::vector<int> params;
    int n = 0, m = 0, nMax = 11, treeNMax = 9;
    int d = 0, branch = 0, v = 0, i1 = 0, i2 = 0;
    bool wantTrees = false;

    auto* construct = app.add_subcommand("construct", "Build a named graph family member")->fallthrough();
    construct->add_option("--family", family)->required()
        ->check(CLI::IsMember({"g3", "g4", "anm", "duzhou-tree", "duzhou-uni"}));
    construct->add_option("--params", params, "Family parameters")->required()->delimiter(',');

    auto* wienerCmd = app.add_subcommand("wiener", "Wiener index of each stdin graph")->fallthrough();
    auto* matchCmd = app.add_subcommand("match", "Matching number of each stdin graph")->fallthrough();

    auto* bound = app.add_subcommand("bound", "Closed-form bound value")->fallthrough();
    bound->add_option("--which", which)
        ->check(CLI::IsMember({"max-uni", "dank-min", "dank-max", "dz-tree", "dz-uni"}));
    bound->add_option("--n", n)->required();
    bound->add_option("--m", m)->required();

    auto* transform = app.add_subcommand("transform", "Apply a rewrite to each stdin graph")->fallthrough();
    transform->add_option("--op", op)->required()
        ->check(CLI::IsMember({"spr", "g1", "g2", "path-regraft"}));
    transform->add_option("--d", d, "spr: subtree attachment vertex");
    transform->add_option("--branch", branch, "spr: neighbor of d toward the subtree");
    transform->add_option("--v", v, "spr: regraft target");
    transform->add_option("--i1", i1, "path-regraft: receiving cycle index");
    transform->add_option("--i2", i2, "path-regraft: moved cycle index");

    auto* enumerate = app.add_subcommand("enumerate", "Stream all graphs of an order")->fallthrough();
    enumerate->add_option("--n", n)->required();
    enumerate->add_flag("--trees", wantTrees, "Enumerate trees instead of unicyclic graphs");

    auto* table = app.add_subcommand("table", "Extremal table as CSV")->fallthrough();
    table->add_option("--n", n)->required();
    table->add_flag("--csv", "CSV output (the only supported mode)");

    auto* verify = app.add_subcommand("verify", "Run a verification suite")->fallthrough();
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"main", "mono", "minima", "dankelmann"}));
    verify->add_option("--n-max", nMax, "Largest order checked")->capture_default_str();
    verify->add_option("--tree-n-max", treeNMax, "Largest tree order (minima suite)")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return cmd_construct(family, params, opts);
        if (wienerCmd->parsed()) {
            for_each_stdin_graph(opts, [](const Graph& g) {
                std::cout << wiener_index(g) << "\n";
            });
            return 0;
        }
        if (matchCmd->parsed()) {
            bool json = opts.format == "json";
            for_each_stdin_graph(opts, [&](const Graph& g) {
                auto cert = matching_number(g);
                if (json) {
                    nlohmann::json edges = nlohmann::json::array();
                    for (auto [a, b] : cert.edges) edges.push_back({a, b});
                    std::cout << nlohmann::json{{"size", cert.size}, {"edges", edges}}.dump()
                              << "\n";
                } else {
                    std::cout << cert.size << "\n";
                }
            });
            return 0;
        }
        if (bound->parsed()) return cmd_bound(which, n, m);
        if (transform->parsed()) return cmd_transform(op, d, branch, v, i1, i2, opts);
        if (enumerate->parsed()) return cmd_enumerate(n, wantTrees, opts);
        if (table->parsed()) return cmd_table(n, opts);
        if (verify->parsed()) return cmd_verify(suite, nMax, treeNMax, opts);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
