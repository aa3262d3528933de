// End-to-end checks of the CLI surface: exit codes, report schema, formats,
// and byte-level determinism.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string g_cli;
int g_failures = 0;

#define REQUIRE(cond, msg)                                                          \
    do {                                                                            \
        if (!(cond)) {                                                              \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << (msg)   \
                      << "\n";                                                      \
            ++g_failures;                                                           \
        }                                                                           \
    } while (0)

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run(const std::string& args) {
    const std::string command = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string output;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
        output.append(buffer, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

json parse(const CliResult& r) { return json::parse(r.output); }

std::string strip_millis(std::string text) {
    return std::regex_replace(text, std::regex("\"millis\": [0-9.e+-]+"),
                              "\"millis\": X");
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    out << body;
}

void check_schema(const json& report) {
    for (const char* key :
         {"command", "params", "computed", "expected", "match", "work", "millis"})
        REQUIRE(report.contains(key), std::string("missing report key: ") + key);
    REQUIRE(report["work"].contains("graphs") && report["work"].contains("pairs"),
            "work counters incomplete");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-cluster_forge>\n";
        return 2;
    }
    g_cli = argv[1];
    const std::string k3_path = "/tmp/cluster_forge_test_k3.txt";
    const std::string star_path = "/tmp/cluster_forge_test_star.txt";
    const std::string tree_path = "/tmp/cluster_forge_test_tree.txt";
    write_file(k3_path, "v 3\ne 0 1\ne 0 2\ne 1 2\n");
    write_file(star_path, "v 3\ne 0 1\ne 0 2\n");
    write_file(tree_path, "root 2\np 0 2\np 1 0\n");

    // discrete: values, schema, exit codes
    {
        const auto r = run("discrete --n 4 --method direct");
        REQUIRE(r.exit_code == 0, "discrete --n 4 should exit 0");
        const json j = parse(r);
        check_schema(j);
        REQUIRE(j["computed"] == "6" && j["expected"] == "6" && j["match"] == true,
                "discrete --n 4 must compute 6");
        REQUIRE(j["params"]["workers"] == "1", "workers default must be recorded");

        REQUIRE(run("discrete --n 1 --method direct").exit_code == 2,
                "discrete --n 1 is a usage error");
        REQUIRE(run("discrete --n 9 --method direct").exit_code == 2,
                "discrete --n 9 direct exceeds the capacity guard");
        const auto fp = parse(run("discrete --n 6 --method fixed_points"));
        REQUIRE(fp["computed"] == "120", "fixed_points n=6 must compute 120");
    }

    // continuum: three methods, guards
    {
        for (const std::string method : {"direct", "per_height", "trees"}) {
            const auto r = run("continuum --n 2 --method " + method);
            REQUIRE(r.exit_code == 0, "continuum n=2 " + method + " should exit 0");
            REQUIRE(parse(r)["computed"] == "9", "continuum n=2 must compute 9");
        }
        REQUIRE(parse(run("continuum --n 3 --method trees"))["computed"] == "-64",
                "continuum n=3 trees must compute -64");
        REQUIRE(run("continuum --n 7 --method direct").exit_code == 2,
                "continuum n=7 direct is guarded");
        REQUIRE(run("continuum --n 0 --method direct").exit_code == 2,
                "continuum n=0 is a usage error");
    }

    // weight: exact values plus Monte-Carlo fields
    {
        const json j = parse(run("weight " + k3_path));
        check_schema(j);
        REQUIRE(j["computed"] == "-3/1", "K3 weight must be -3/1");
        REQUIRE(j["volume"] == "3/1", "K3 volume must be 3/1");
        REQUIRE(j["subpolytopes"] == 6, "K3 must contain 6 unit cells");

        const json mc =
            parse(run("weight " + k3_path + " --mc --samples 100000 --seed 7"));
        REQUIRE(mc.contains("estimate") && mc.contains("std_error"),
                "--mc must add estimate and std_error");
        REQUIRE(mc["params"]["seed"] == "7", "seed must be recorded");

        REQUIRE(run("weight /nonexistent.txt").exit_code == 2,
                "missing file is a usage error");
        write_file("/tmp/cluster_forge_test_disc.txt", "v 3\ne 0 1\n");
        REQUIRE(run("weight /tmp/cluster_forge_test_disc.txt").exit_code == 2,
                "disconnected graph is rejected");
    }

    // potts
    {
        const json j = parse(run("potts --n 2 --q 2 --u 0"));
        REQUIRE(j["computed"] == "2" && j["expected"] == "2" && j["match"] == true,
                "potts K2 q=2 u=0 must give 2 on both sides");
        const json one = parse(run("potts --n 3 --q 1 --u 1"));
        REQUIRE(one["computed"] == "1", "potts q=1 u=1 must give 1");
        REQUIRE(run("potts --q 2 --u 0").exit_code == 2, "potts without a graph");
        REQUIRE(run("potts --n 6 --q 2 --u 0").exit_code == 2,
                "potts n=6 exceeds the coloring guard");
        REQUIRE(run("potts " + star_path + " --n 3 --q 2 --u 0").exit_code == 2,
                "potts rejects a file and --n together");

        // Fortuin-Kasteleyn on a non-complete host: the star 1-0-2 has
        // q(q-1)^2 proper colorings.
        const json star = parse(run("potts " + star_path + " --q 2 --u 0"));
        REQUIRE(star["computed"] == "2" && star["match"] == true,
                "star potts at q=2 u=0 counts proper colorings");
    }

    // psi: discrete (shifted labels) and continuum (--h)
    {
        const json j = parse(run("psi " + k3_path));
        check_schema(j);
        REQUIRE(j["fixed"] == false, "K3 is not a psi fixed point");
        REQUIRE(j["graph"] == json::parse("[[1,3],[2,3]]"),
                "psi(K3) must drop the least active edge (1,2)");
        REQUIRE(j["active_edge"] == json::parse("[1,2]"), "least active edge is (1,2)");

        const json fixed = parse(run("psi " + star_path));
        REQUIRE(fixed["fixed"] == true, "the increasing star is fixed");
        REQUIRE(fixed["graph"] == json::parse("[[1,2],[1,3]]"),
                "fixed star keeps its edges");

        const json cont = parse(run("psi " + k3_path + " --h 0,-1"));
        REQUIRE(cont["params"]["label_base"] == 0, "continuum psi keeps 0-based labels");
        REQUIRE(cont["active_edge"] == json::parse("[0,2]"),
                "h-least active edge of K3 at h=(0,-1) is (0,2)");

        REQUIRE(run("psi " + k3_path + " --h 0,0,0").exit_code == 2,
                "wrong --h length is a usage error");
    }

    // trees
    {
        const json inc = parse(run("trees --n 3 --kind increasing"));
        check_schema(inc);
        REQUIRE(inc["computed"] == "2", "2 increasing trees on 3 vertices");
        REQUIRE(parse(run("trees --n 3 --kind cayley"))["computed"] == "9",
                "9 rooted Cayley trees on 3 vertices");
        const json h = parse(run("trees --kind h_increasing --h 0,-1 --list"));
        REQUIRE(h["computed"] == "2", "2 h-increasing trees for h=(0,-1)");
        bool found = false;
        for (const auto& t : h["trees"])
            if (t == json::parse("[[0,1],[0,2]]")) found = true;
        REQUIRE(found, "listing must include the tree {(2,0),(0,1)}");
        REQUIRE(run("trees --kind h_increasing").exit_code == 2,
                "h_increasing without --h is a usage error");
        REQUIRE(run("trees --kind bogus --n 3").exit_code == 2, "unknown kind");
    }

    // encode-tree
    {
        const json j = parse(run("encode-tree " + tree_path));
        check_schema(j);
        REQUIRE(j["computed"] == "0,-1", "chain rooted at 2 encodes to (0,-1)");
        REQUIRE(j["ok"] == true, "encode-tree output must be h-increasing");

        write_file("/tmp/cluster_forge_test_inc.txt", "root 0\np 1 0\np 2 0\n");
        const json zeros = parse(run("encode-tree /tmp/cluster_forge_test_inc.txt"));
        REQUIRE(zeros["computed"] == "0,0", "increasing tree rooted at 0 encodes to zeros");
    }

    // lambert
    {
        const json j = parse(run("lambert --n 3"));
        REQUIRE(j["computed"] == "3/2" && j["match"] == true, "[z^3]L = 3/2");
    }

    // formats and --out
    {
        const auto csv = run("discrete --n 3 --format csv");
        REQUIRE(csv.exit_code == 0 && csv.output.find("command,") == 0,
                "csv output starts with a header");
        REQUIRE(csv.output.find("discrete,") != std::string::npos, "csv has a data row");
        const auto text = run("discrete --n 3 --format text");
        REQUIRE(text.output.find("computed: 2") != std::string::npos,
                "text format prints computed");
        REQUIRE(run("discrete --n 3 --format yaml").exit_code == 2,
                "unknown format is a usage error");

        const std::string out_path = "/tmp/cluster_forge_test_out.json";
        std::remove(out_path.c_str());
        const auto redirected = run("discrete --n 3 --out " + out_path);
        REQUIRE(redirected.exit_code == 0 && redirected.output.empty(),
                "--out silences stdout");
        std::ifstream in(out_path);
        REQUIRE(in.good(), "--out must create the file");
        json from_file;
        in >> from_file;
        REQUIRE(from_file["computed"] == "2", "--out file holds the report");
    }

    // determinism: identical invocations agree byte for byte except millis
    {
        const auto a = run("continuum --n 2 --method per_height --workers 2");
        const auto b = run("continuum --n 2 --method per_height --workers 2");
        REQUIRE(strip_millis(a.output) == strip_millis(b.output),
                "JSON must be identical modulo millis");
        const auto m1 = run("weight " + k3_path + " --mc --samples 50000 --seed 11");
        const auto m2 = run("weight " + k3_path + " --mc --samples 50000 --seed 11");
        REQUIRE(strip_millis(m1.output) == strip_millis(m2.output),
                "Monte-Carlo reports must be reproducible");
    }

    // stdin via '-'
    {
        const std::string piped = "printf 'v 2\\ne 0 1\\n' | " + g_cli + " weight -";
        FILE* pipe = popen(piped.c_str(), "r");
        std::string output;
        char buffer[4096];
        while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
            output.append(buffer, got);
        pclose(pipe);
        REQUIRE(json::parse(output)["computed"] == "-2/1",
                "single edge from stdin weighs -2/1");
    }

    if (g_failures == 0) {
        std::cout << "cli_tests: all checks passed" << std::endl;
        return 0;
    }
    std::cout << "cli_tests: " << g_failures << " check(s) failed" << std::endl;
    return 1;
}
