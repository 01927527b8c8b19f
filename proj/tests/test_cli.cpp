#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cek/cli.hpp"
#include "util.hpp"

using namespace cek;
using namespace testutil;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("cek_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = cek::cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

}  // namespace

TEST_CASE("solve subcommand round trips graphs and reports results") {
    TempDir tmp;
    std::string graph_path = tmp.file("p3.txt");
    write_graph_file(graph_path, path(3));
    CHECK(read_graph_file(graph_path) == path(3));

    std::string out;
    int code = run_cli({"solve", "--variant", "starforest", "--p", "1", "--k", "0",
                        "--input", graph_path},
                       &out);
    CHECK(code == 0);
    CHECK(out.find("yes cost=0") != std::string::npos);

    code = run_cli({"solve", "--variant", "starforest", "--p", "1", "--k", "0", "--input",
                    tmp.file("c4.txt")},
                   &out);
    CHECK(code == 2);  // missing file

    write_graph_file(tmp.file("c4.txt"), cycle(4));
    code = run_cli({"solve", "--variant", "starforest", "--p", "1", "--k", "2", "--input",
                    tmp.file("c4.txt")},
                   &out);
    CHECK(code == 1);
    CHECK(out == "no\n");
}

TEST_CASE("json output schema and determinism") {
    TempDir tmp;
    std::string graph_path = tmp.file("p4.txt");
    write_graph_file(graph_path, path(4));

    auto solve_json = [&](const std::string& variant, int p, int k) {
        std::string out;
        run_cli({"solve", "--variant", variant, "--p", std::to_string(p), "--k",
                 std::to_string(k), "--input", graph_path, "--json"},
                &out);
        return nlohmann::ordered_json::parse(out);
    };

    auto j = solve_json("bicluster", 1, 1);
    CHECK(j["status"] == "yes");
    CHECK(j["cost"] == 1);
    CHECK(j["additions"] == nlohmann::json::array({{0, 3}}));
    CHECK(j["deletions"] == nlohmann::json::array());
    CHECK(j["clusters"].size() == 1);
    CHECK(j.contains("elapsed_ms"));

    auto none = solve_json("starforest", 3, 0);
    CHECK(none["status"] == "no");
    CHECK(none["cost"].is_null());
    CHECK(none["additions"].empty());

    // byte-identical output modulo the timing field
    auto a = solve_json("bicluster", 2, 3);
    auto b = solve_json("bicluster", 2, 3);
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("middle edge of a path is the canonical two-cluster split") {
    TempDir tmp;
    std::string graph_path = tmp.file("p5.txt");
    write_graph_file(graph_path, path(5));
    std::string out;
    int code = run_cli({"solve", "--variant", "bicluster", "--p", "2", "--k", "1",
                        "--input", graph_path, "--json"},
                       &out);
    CHECK(code == 0);
    auto j = nlohmann::ordered_json::parse(out);
    CHECK(j["deletions"] == nlohmann::json::array({{1, 2}}));
    CHECK(j["additions"] == nlohmann::json::array());
}

TEST_CASE("verify accepts solver output and rejects junk") {
    TempDir tmp;
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = random_graph(n, 0.4, rng);
        std::string graph_path = tmp.file("g" + std::to_string(trial) + ".txt");
        write_graph_file(graph_path, g);
        int p = 1 + static_cast<int>(rng() % 2);
        std::string variant = (trial % 2 == 0) ? "starforest" : "bicluster";
        std::string solve_out;
        int code = run_cli({"solve", "--variant", variant, "--p", std::to_string(p), "--k",
                            "9", "--input", graph_path, "--json"},
                           &solve_out);
        if (code != 0) continue;
        std::string edits_path = tmp.file("edits" + std::to_string(trial) + ".json");
        write_file(edits_path, solve_out);
        std::string verify_out;
        int vcode = run_cli({"verify", "--input", graph_path, "--edits", edits_path,
                             "--variant", variant, "--p", std::to_string(p)},
                            &verify_out);
        CAPTURE(variant, p, solve_out);
        CHECK(vcode == 0);
        CHECK(verify_out.find("valid") == 0);
    }

    // an edit set that does not produce the class
    std::string graph_path = tmp.file("k3.txt");
    write_graph_file(graph_path, complete(3));
    std::string edits_path = tmp.file("noop.json");
    write_file(edits_path, R"({"additions":[],"deletions":[]})");
    std::string out;
    int code = run_cli({"verify", "--input", graph_path, "--edits", edits_path, "--variant",
                        "starforest", "--p", "1"},
                       &out);
    CHECK(code == 1);
    CHECK(out.find("invalid") == 0);

    // deleting a non-edge
    write_file(edits_path, R"({"additions":[],"deletions":[[0,9]]})");
    code = run_cli({"verify", "--input", graph_path, "--edits", edits_path, "--variant",
                    "starforest", "--p", "1"},
                   &out);
    CHECK(code != 0);
}

TEST_CASE("kernel subcommand emits the reduced graph plus sidecar") {
    TempDir tmp;
    std::string graph_path = tmp.file("star.txt");
    write_graph_file(graph_path, star(6));
    std::string out_path = tmp.file("reduced.txt");
    std::string out;
    int code = run_cli({"kernel", "--p", "1", "--t", "2", "--k", "1", "--input", graph_path,
                        "--output", out_path},
                       &out);
    CHECK(code == 0);
    CHECK(read_graph_file(out_path) == star(3));
    std::ifstream meta(out_path + ".json");
    REQUIRE(meta.good());
    auto j = nlohmann::json::parse(meta);
    CHECK(j["verdict"] == "reduced");
    CHECK(j["removed"].size() == 3);

    // stdout mode appends the sidecar as a comment line
    code = run_cli({"kernel", "--p", "1", "--t", "2", "--k", "1", "--input", graph_path},
                   &out);
    CHECK(code == 0);
    CHECK(out.find("# sidecar {") != std::string::npos);
    std::istringstream back(out);
    CHECK(read_graph(back) == star(3));

    // rejected instances exit 1 but still emit
    write_graph_file(graph_path, edgeless(5));
    code = run_cli({"kernel", "--p", "1", "--t", "2", "--k", "1", "--input", graph_path},
                   &out);
    CHECK(code == 1);
    CHECK(out.find("too-many-components") != std::string::npos);
}

TEST_CASE("reduce subcommand generates instances with metadata") {
    TempDir tmp;
    SECTION("from a CNF formula") {
        std::string cnf_path = tmp.file("f.cnf");
        write_file(cnf_path, "p cnf 3 1\n1 -2 3 0\n");
        std::string out_path = tmp.file("sat_graph.txt");
        int code = run_cli({"reduce", "--from", "3sat", "--input", cnf_path, "--output",
                            out_path});
        CHECK(code == 0);
        Graph g = read_graph_file(out_path);
        CHECK(g.num_vertices() == 19);
        CHECK(g.num_edges() == 21);
        std::ifstream meta(out_path + ".json");
        REQUIRE(meta.good());
        auto j = nlohmann::json::parse(meta);
        CHECK(j["k"] == 8);
        CHECK(j["gadget_map"]["clause_vertices"].size() == 1);
    }
    SECTION("from a colored regular graph") {
        std::string in_path = tmp.file("mris.json");
        write_file(in_path,
                   R"({"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]],"classes":[[0,1],[2,3]]})");
        std::string out_path = tmp.file("mris_graph.txt");
        int code = run_cli({"reduce", "--from", "mris", "--input", in_path, "--output",
                            out_path});
        CHECK(code == 0);
        std::ifstream meta(out_path + ".json");
        REQUIRE(meta.good());
        auto j = nlohmann::json::parse(meta);
        CHECK(j["p"] == 2);
        CHECK(j["k"] == 2);
    }
}

TEST_CASE("oracle flag and its size guard") {
    TempDir tmp;
    std::string graph_path = tmp.file("big.txt");
    write_graph_file(graph_path, edgeless(11));
    std::string out, err;
    int code = run_cli({"solve", "--variant", "starforest", "--p", "1", "--k", "0",
                        "--input", graph_path, "--oracle"},
                       &out, &err);
    CHECK(code == 3);

    write_graph_file(graph_path, complete(3));
    code = run_cli({"solve", "--variant", "bicluster", "--p", "1", "--k", "1", "--input",
                    graph_path, "--oracle"},
                   &out);
    CHECK(code == 0);
    CHECK(out.find("yes cost=1") != std::string::npos);
}

TEST_CASE("bench suites produce the documented CSV") {
    std::string out;
    int code = run_cli({"bench", "--suite", "reduction", "--seed", "5"}, &out);
    CHECK(code == 0);
    CHECK(out.rfind("instance-id,n,m,p,k,variant,cost,elapsed_ms", 0) == 0);
    CHECK(out.find("3sat-1") != std::string::npos);
    CHECK(out.find("mris-0") != std::string::npos);
    code = run_cli({"bench", "--suite", "nope"}, &out);
    CHECK(code == 2);
}

TEST_CASE("usage errors exit with code two") {
    std::string out, err;
    CHECK(run_cli({"solve", "--variant", "starforest"}, &out, &err) == 2);
    CHECK(run_cli({"frobnicate"}, &out, &err) == 2);
    CHECK(run_cli({"solve", "--variant", "bicluster", "--p", "1", "--k", "1", "--t", "3",
                   "--input", "x.txt"},
                  &out, &err) == 2);
    CHECK(run_cli({"--help"}, &out, &err) == 0);
}

#ifdef CEK_CLI_BINARY
TEST_CASE("the installed binary behaves like the library entry point") {
    TempDir tmp;
    std::string graph_path = tmp.file("p4.txt");
    write_graph_file(graph_path, path(4));
    std::string out_path = tmp.file("out.json");
    std::string cmd = std::string(CEK_CLI_BINARY) + " solve --variant bicluster --p 1 --k 1 --input " +
                      graph_path + " --json > " + out_path;
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    CHECK(WEXITSTATUS(rc) == 0);
    std::ifstream in(out_path);
    auto j = nlohmann::json::parse(in);
    CHECK(j["status"] == "yes");
    CHECK(j["additions"] == nlohmann::json::array({{0, 3}}));
}
#endif
