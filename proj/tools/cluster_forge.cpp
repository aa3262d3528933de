// cluster_forge: exact Mayer cluster weights for the 1-D hard-core gas and
// multi-method verifiers for the combinatorial identities behind them.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mayer/graph.hpp"
#include "mayer/heights.hpp"
#include "mayer/identities.hpp"
#include "mayer/involution.hpp"
#include "mayer/io.hpp"
#include "mayer/polytope.hpp"
#include "mayer/report_json.hpp"
#include "mayer/trees.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

// Desk-scale guard, overridable (upwards only) via CLUSTER_FORGE_MAX_N.
int effective_cap(int default_cap) {
    if (const char* env = std::getenv("CLUSTER_FORGE_MAX_N")) {
        const int v = std::atoi(env);
        if (v > default_cap) return v;
    }
    return default_cap;
}

void require_within_cap(int n, int default_cap, const std::string& what) {
    if (n > effective_cap(default_cap))
        throw mayer::capacity_error(what + " is capped at n=" + std::to_string(default_cap) +
                                    "; set CLUSTER_FORGE_MAX_N to override at your own risk");
}

mayer::LabeledGraph load_graph(const std::string& path) {
    if (path == "-") return mayer::read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return mayer::read_graph(in);
}

mayer::RootedTree load_tree(const std::string& path) {
    if (path == "-") return mayer::read_tree(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open tree file: " + path);
    return mayer::read_tree(in);
}

mayer::HeightVector parse_heights(const std::string& text) {
    std::vector<int> h;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int value;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad height entry: " + item);
        }
        if (used != item.size())
            throw std::invalid_argument("bad height entry: " + item);
        h.push_back(value);
    }
    if (h.empty()) throw std::invalid_argument("--h needs at least one integer");
    return mayer::HeightVector(std::move(h));
}

ordered_json edge_array(const mayer::LabeledGraph& g, int label_shift) {
    ordered_json edges = ordered_json::array();
    for (mayer::Edge e : g.edges())
        edges.push_back({e.i + label_shift, e.j + label_shift});
    return edges;
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void flatten(const ordered_json& value, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& cells) {
    if (value.is_object()) {
        for (const auto& [key, child] : value.items())
            flatten(child, prefix.empty() ? key : prefix + "." + key, cells);
    } else if (value.is_string()) {
        cells.emplace_back(prefix, value.get<std::string>());
    } else {
        cells.emplace_back(prefix, value.dump());
    }
}

int emit_report(const ordered_json& report, const OutputOptions& output) {
    std::ostringstream body;
    if (output.format == "json") {
        body << report.dump(2) << "\n";
    } else {
        std::vector<std::pair<std::string, std::string>> cells;
        flatten(report, "", cells);
        if (output.format == "csv") {
            std::string header, row;
            for (const auto& [key, value] : cells) {
                if (!header.empty()) {
                    header += ',';
                    row += ',';
                }
                header += key;
                if (value.find_first_of(",\"") == std::string::npos)
                    row += value;
                else
                    row += '"' + value + '"';
            }
            body << header << "\n" << row << "\n";
        } else {
            for (const auto& [key, value] : cells) body << key << ": " << value << "\n";
        }
    }
    if (output.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(output.out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + output.out_path);
        out << body.str();
    }
    if (report.contains("match") && report["match"].is_boolean() &&
        !report["match"].get<bool>())
        return kExitMismatch;
    return 0;
}

ordered_json with_workers(const mayer::IdentityReport& report, int workers) {
    mayer::IdentityReport annotated = report;
    annotated.params.emplace_back("workers", std::to_string(workers));
    return mayer::report_to_json(annotated);
}

int run_discrete(int n, const std::string& method_name, int workers,
                 const OutputOptions& output) {
    const auto method = mayer::parse_discrete_method(method_name);
    if (n < 2) throw std::invalid_argument("discrete identity needs --n >= 2");
    require_within_cap(n, method == mayer::DiscreteMethod::direct ? 8 : 12,
                       "discrete --method " + method_name);
    return emit_report(with_workers(mayer::discrete_identity(n, method, workers), workers),
                       output);
}

int run_continuum(int n, const std::string& method_name, int workers,
                  const OutputOptions& output) {
    const auto method = mayer::parse_continuum_method(method_name);
    if (n < 1) throw std::invalid_argument("continuum identity needs --n >= 1");
    int cap = 7;
    if (method == mayer::ContinuumMethod::direct) cap = workers > 1 ? 5 : 4;
    if (method == mayer::ContinuumMethod::per_height) cap = 5;
    require_within_cap(n, cap, "continuum --method " + method_name);
    return emit_report(with_workers(mayer::continuum_identity(n, method, workers), workers),
                       output);
}

int run_lambert(int m, const OutputOptions& output) {
    if (m < 1) throw std::invalid_argument("lambert needs --n >= 1");
    require_within_cap(m, 100, "lambert");
    return emit_report(mayer::report_to_json(mayer::lambert_report(m)), output);
}

int run_potts(const std::string& graph_file, int n, long long q, long long u,
              const OutputOptions& output) {
    mayer::LabeledGraph host = graph_file.empty() ? mayer::LabeledGraph::complete(n)
                                                  : load_graph(graph_file);
    require_within_cap(host.n_vertices(), 5, "potts coloring side");
    auto report = mayer::potts_both_sides(host, mayer::BigInt(q), mayer::BigInt(u));
    if (!graph_file.empty()) report.params.emplace_back("file", graph_file);
    return emit_report(mayer::report_to_json(report), output);
}

int run_weight(const std::string& graph_file, bool with_mc, std::uint64_t samples,
               std::uint64_t seed, int workers, const OutputOptions& output) {
    const auto start = std::chrono::steady_clock::now();
    const mayer::LabeledGraph g = load_graph(graph_file);
    require_within_cap(g.n_vertices(), 9, "weight (exact volume)");
    if (!mayer::is_connected(g))
        throw std::invalid_argument("weight needs a connected graph (volume is unbounded)");
    const auto weight = mayer::mayer_weight(g, workers);
    const auto pairs = mayer::count_subpolytopes(g, workers);

    ordered_json report{
        {"command", "weight"},
        {"params",
         {{"file", graph_file},
          {"n_vertices", g.n_vertices()},
          {"workers", std::to_string(workers)}}},
        {"computed", mayer::rational_str(weight.value)},
        {"expected", nullptr},
        {"match", true},
        {"work", {{"graphs", 1}, {"pairs", pairs}}},
    };
    report["sign"] = weight.sign;
    report["volume"] = mayer::rational_str(weight.volume);
    report["subpolytopes"] = pairs;
    if (with_mc) {
        if (samples == 0) throw std::invalid_argument("--samples must be >= 1");
        const auto mc = mayer::mc_volume(g, samples, seed, workers);
        report["params"]["samples"] = std::to_string(samples);
        report["params"]["seed"] = std::to_string(seed);
        report["estimate"] = mc.estimate;
        report["std_error"] = mc.std_error;
        report["hits"] = mc.hits;
    }
    report["millis"] = ms_since(start);
    return emit_report(report, output);
}

int run_psi(const std::string& graph_file, const std::string& h_text,
            const OutputOptions& output) {
    const auto start = std::chrono::steady_clock::now();
    const mayer::LabeledGraph g = load_graph(graph_file);
    if (!mayer::is_connected(g)) throw std::invalid_argument("psi needs a connected graph");

    ordered_json report{{"command", "psi"}};
    mayer::LabeledGraph image(0);
    std::optional<mayer::Edge> toggled;
    int label_shift = 0;
    if (h_text.empty()) {
        // Discrete convention: the 0-based input lives on {1..n}; only the
        // reported labels shift, the edge order is unchanged.
        label_shift = 1;
        toggled = mayer::least_active_edge(g);
        image = toggled ? mayer::toggle_edge(g, *toggled) : g;
        report["params"] = {{"file", graph_file}, {"label_base", 1}};
    } else {
        const mayer::HeightVector h = parse_heights(h_text);
        if (h.n_vertices() != g.n_vertices())
            throw std::invalid_argument("--h length must be n_vertices - 1");
        toggled = mayer::least_active_edge_h(g, h);
        image = mayer::psi_h(g, h);
        report["params"] = {{"file", graph_file}, {"h", h_text}, {"label_base", 0}};
    }
    report["computed"] = nullptr;
    report["expected"] = nullptr;
    report["match"] = true;
    report["work"] = {{"graphs", 1}, {"pairs", 0}};
    report["fixed"] = !toggled.has_value();
    report["active_edge"] =
        toggled ? ordered_json({toggled->i + label_shift, toggled->j + label_shift})
                : ordered_json(nullptr);
    report["graph"] = edge_array(image, label_shift);
    report["millis"] = ms_since(start);
    return emit_report(report, output);
}

int run_trees(int n, const std::string& kind, const std::string& h_text, bool list,
              const OutputOptions& output) {
    const auto start = std::chrono::steady_clock::now();
    ordered_json report{{"command", "trees"}};
    ordered_json listing = ordered_json::array();
    mayer::BigInt count = 0;
    ordered_json expected = nullptr;
    if (list && kind != "h_increasing")
        require_within_cap(n, 7, "trees --list"); // keep listings printable
    if (kind == "increasing") {
        if (n < 1) throw std::invalid_argument("--n >= 1 required for increasing trees");
        require_within_cap(n, 12, "trees --kind increasing");
        count = mayer::count_increasing_trees(n);
        expected = mayer::factorial(n - 1).str();
        if (list)
            for (const auto& t : mayer::enumerate_increasing_trees(n))
                listing.push_back(edge_array(t, 1));
        report["params"] = {{"n", n}, {"kind", kind}};
    } else if (kind == "cayley") {
        if (n < 1) throw std::invalid_argument("--n >= 1 required for Cayley trees");
        require_within_cap(n, 9, "trees --kind cayley");
        count = mayer::count_rooted_cayley_trees(n);
        mayer::BigInt formula = 1;
        for (int k = 0; k + 1 < n; ++k) formula *= n;
        expected = formula.str();
        if (list)
            for (const auto& t : mayer::enumerate_rooted_cayley_trees(n)) {
                ordered_json item{{"root", t.root()},
                                  {"edges", edge_array(t.as_graph(), 0)}};
                listing.push_back(std::move(item));
            }
        report["params"] = {{"n", n}, {"kind", kind}};
    } else if (kind == "h_increasing") {
        if (h_text.empty())
            throw std::invalid_argument("--h required for h-increasing trees");
        const mayer::HeightVector h = parse_heights(h_text);
        require_within_cap(h.n(), 8, "trees --kind h_increasing");
        const auto trees = mayer::enumerate_h_increasing_trees(h);
        count = trees.size();
        if (list)
            for (const auto& t : trees) listing.push_back(edge_array(t, 0));
        report["params"] = {{"h", h_text}, {"kind", kind}};
    } else {
        throw std::invalid_argument("unknown --kind: " + kind);
    }
    report["computed"] = count.str();
    report["expected"] = expected;
    report["match"] = expected.is_null() || expected.get<std::string>() == count.str();
    report["work"] = {{"graphs", count.str()}, {"pairs", 0}};
    if (list) report["trees"] = std::move(listing);
    report["millis"] = ms_since(start);
    return emit_report(report, output);
}

int run_encode_tree(const std::string& tree_file, const OutputOptions& output) {
    const auto start = std::chrono::steady_clock::now();
    const mayer::RootedTree tree = load_tree(tree_file);
    const mayer::HeightVector h = mayer::tree_to_height(tree);
    const bool ok = mayer::is_h_increasing_tree(tree, h);
    std::string joined;
    for (int k = 1; k <= h.n(); ++k) {
        if (k > 1) joined += ',';
        joined += std::to_string(h.at(k));
    }
    ordered_json report{
        {"command", "encode-tree"},
        {"params", {{"file", tree_file}}},
        {"computed", joined},
        {"expected", nullptr},
        {"match", ok},
        {"work", {{"graphs", 1}, {"pairs", 0}}},
        {"heights", h.entries()},
        {"ok", ok},
    };
    report["millis"] = ms_since(start);
    return emit_report(report, output);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mayer cluster weights of the 1-D hard-core gas, "
                 "with exact multi-method identity verification"};
    app.require_subcommand(1);

    OutputOptions output;
    app.add_option("--format", output.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--out", output.out_path, "Write the report to FILE instead of stdout");

    int n = 0;
    std::string method = "direct";
    int workers = 1;
    std::string h_text;
    std::string file;
    long long q = 0, u = 0;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    bool mc = false;
    bool list = false;
    std::string kind;

    auto* discrete = app.add_subcommand("discrete", "Verify the (n-1)! identity");
    discrete->add_option("--n", n, "Number of vertices")->required();
    discrete->add_option("--method", method, "direct | fixed_points")->capture_default_str();
    discrete->add_option("--workers", workers, "Worker threads")->capture_default_str();

    auto* continuum = app.add_subcommand("continuum", "Verify the (-1)^n (n+1)^n identity");
    continuum->add_option("--n", n, "Gas graphs live on {0..n}")->required();
    continuum->add_option("--method", method, "direct | per_height | trees")
        ->capture_default_str();
    continuum->add_option("--workers", workers, "Worker threads")->capture_default_str();

    auto* weight = app.add_subcommand("weight", "Exact Mayer weight of one graph");
    weight->add_option("file", file, "Edge-list file ('-' for stdin)")->required();
    weight->add_flag("--mc", mc, "Add a Monte-Carlo volume cross-check");
    weight->add_option("--samples", samples, "Monte-Carlo samples")->capture_default_str();
    weight->add_option("--seed", seed, "Monte-Carlo seed")->capture_default_str();
    weight->add_option("--workers", workers, "Worker threads")->capture_default_str();

    auto* potts = app.add_subcommand("potts", "Potts vs subgraph expansion on a graph");
    potts->add_option("file", file, "Edge-list file ('-' for stdin); omit to use K_n");
    potts->add_option("--n", n, "Use the complete graph K_n");
    potts->add_option("--q", q, "Number of colors (q >= 0)")->required();
    potts->add_option("--u", u, "Edge weight u")->required();

    auto* psi = app.add_subcommand("psi", "Apply the killing involution once");
    psi->set_help_flag("--help", "Print help"); // frees -h for the heights option
    psi->add_option("file", file, "Edge-list file ('-' for stdin)")->required();
    psi->add_option("--h", h_text,
                    "Heights h_1,...,h_n; switches to the continuum involution");

    auto* trees = app.add_subcommand("trees", "Count or list tree families");
    trees->set_help_flag("--help", "Print help");
    trees->add_option("--kind", kind, "increasing | cayley | h_increasing")->required();
    trees->add_option("--n", n, "Number of vertices");
    trees->add_option("--h", h_text, "Heights for h_increasing");
    trees->add_flag("--list", list, "Include the trees in the report");

    auto* encode = app.add_subcommand("encode-tree", "Height vector of a rooted tree");
    encode->add_option("file", file, "Tree file ('-' for stdin)")->required();

    auto* lambert = app.add_subcommand("lambert", "Lambert series coefficient check");
    lambert->add_option("--n", n, "Coefficient index m")->required();

    // --format/--out live on the parent but may appear after the subcommand.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (discrete->parsed()) return run_discrete(n, method, workers, output);
        if (continuum->parsed()) return run_continuum(n, method, workers, output);
        if (weight->parsed()) return run_weight(file, mc, samples, seed, workers, output);
        if (potts->parsed()) {
            if (file.empty() && n == 0)
                throw std::invalid_argument("potts needs a graph file or --n");
            if (!file.empty() && n != 0)
                throw std::invalid_argument("potts takes either a graph file or --n, not both");
            return run_potts(file, n, q, u, output);
        }
        if (psi->parsed()) return run_psi(file, h_text, output);
        if (trees->parsed()) return run_trees(n, kind, h_text, list, output);
        if (encode->parsed()) return run_encode_tree(file, output);
        if (lambert->parsed()) return run_lambert(n, output);
    } catch (const mayer::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
