#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cek/instances.hpp"
#include "cek/solve.hpp"

namespace cek::cli {

using json = nlohmann::ordered_json;

inline json edges_to_json(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back(json::array({e.u, e.v}));
    return arr;
}

inline json clusters_to_json(const ClusterSolution& sol) {
    json arr = json::array();
    for (const Cluster& c : sol.clusters) {
        json cl = json::array();
        for (const Side& s : c.sides) cl.push_back(json(s));
        arr.push_back(cl);
    }
    return arr;
}

// Machine-readable result document. Pairs are sorted ascending and the whole
// document is stable across runs except for elapsed_ms.
inline json emit_result(const SolveResult& r, double elapsed_ms) {
    json j;
    j["status"] = r.yes ? "yes" : "no";
    if (r.yes)
        j["cost"] = r.cost;
    else
        j["cost"] = nullptr;
    j["additions"] = edges_to_json(r.edits.additions);
    j["deletions"] = edges_to_json(r.edits.deletions);
    j["clusters"] = clusters_to_json(r.clusters);
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

inline EditSet edits_from_json(const json& j) {
    EditSet f;
    for (const auto& a : j.at("additions"))
        f.additions.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    for (const auto& d : j.at("deletions"))
        f.deletions.emplace_back(d.at(0).get<int>(), d.at(1).get<int>());
    f.normalize();
    return f;
}

inline int oracle_limit_from_env() {
    if (const char* s = std::getenv("CEK_ORACLE_LIMIT")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 10;
}

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

inline ColoredRegularGraph read_mris_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j = json::parse(in);
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    ColoredRegularGraph out;
    out.graph = Graph::from_edges(n, edges);
    for (const auto& cls : j.at("classes"))
        out.classes.push_back(cls.get<std::vector<int>>());
    out.d = n > 0 ? out.graph.degree(0) : 0;
    out.validate();
    return out;
}

inline json gadget_map_to_json(const GadgetMap& map) {
    json vars = json::array();
    for (const auto& vg : map.vars) {
        json v;
        v["top"] = vg.top;
        v["bot"] = vg.bot;
        v["A"] = vg.a;
        v["B"] = vg.b;
        v["C"] = vg.c;
        v["D"] = vg.d;
        vars.push_back(v);
    }
    json j;
    j["variables"] = vars;
    j["clause_vertices"] = map.clause_vertex;
    return j;
}

struct BenchRow {
    std::string id;
    long long n, m, p, k;
    std::string variant;
    long long cost;  // -1 for a no answer
    double elapsed_ms;
};

inline void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "instance-id,n,m,p,k,variant,cost,elapsed_ms\n";
    for (const auto& r : rows)
        out << r.id << ',' << r.n << ',' << r.m << ',' << r.p << ',' << r.k << ','
            << r.variant << ',' << r.cost << ',' << r.elapsed_ms << '\n';
}

}  // namespace detail

// Exit codes: 0 yes/success, 1 no, 2 usage or IO error, 3 oracle refusal.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"editing graphs into starforests, biclusters, and t-partite cluster graphs"};
    app.require_subcommand(1);

    std::string variant_str, input, output, meta, edits_path, from, suite, csv_path;
    int p = 1, t = 2;
    long long k = 0;
    bool use_oracle = false, emit_json = false, at_most_p = false;
    std::uint64_t seed = 1;

    auto* solve_cmd = app.add_subcommand("solve", "solve an editing instance");
    solve_cmd->add_option("--variant", variant_str, "starforest | bicluster | tpartite")
        ->required();
    solve_cmd->add_option("--p", p, "exact number of clusters")->required();
    solve_cmd->add_option("--t", t, "side bound for tpartite (default 2)");
    solve_cmd->add_option("--k", k, "edit budget")->required();
    solve_cmd->add_option("--input", input, "graph file")->required();
    solve_cmd->add_flag("--oracle", use_oracle, "use the brute-force oracle");
    solve_cmd->add_flag("--json", emit_json, "machine-readable output");
    solve_cmd->add_flag("--at-most-p", at_most_p, "allow fewer than p clusters");

    auto* kernel_cmd = app.add_subcommand("kernel", "twin-rule kernelization only");
    kernel_cmd->add_option("--p", p)->required();
    kernel_cmd->add_option("--t", t)->required();
    kernel_cmd->add_option("--k", k)->required();
    kernel_cmd->add_option("--input", input)->required();
    kernel_cmd->add_option("--output", output, "reduced graph file (default stdout)");
    kernel_cmd->add_option("--meta", meta, "sidecar JSON file");

    auto* reduce_cmd = app.add_subcommand("reduce", "instance generators from reductions");
    reduce_cmd->add_option("--from", from, "3sat | mris")->required();
    reduce_cmd->add_option("--input", input, "DIMACS CNF or MRIS JSON")->required();
    reduce_cmd->add_option("--output", output, "graph file")->required();
    reduce_cmd->add_option("--meta", meta, "metadata JSON file (default <output>.json)");

    auto* verify_cmd = app.add_subcommand("verify", "check an edit set against a graph");
    verify_cmd->add_option("--input", input)->required();
    verify_cmd->add_option("--edits", edits_path, "JSON file with additions/deletions")
        ->required();
    verify_cmd->add_option("--variant", variant_str)->required();
    verify_cmd->add_option("--p", p)->required();
    verify_cmd->add_option("--t", t);

    auto* bench_cmd = app.add_subcommand("bench", "timing suites with CSV output");
    bench_cmd->add_option("--suite", suite, "planted | reduction")->required();
    bench_cmd->add_option("--seed", seed);
    bench_cmd->add_option("--csv", csv_path, "CSV file (default stdout)");

    std::vector<const char*> argv;
    argv.push_back("cek");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed()) {
            auto variant = parse_variant(variant_str);
            if (!variant) throw std::invalid_argument("unknown variant: " + variant_str);
            ProblemSpec spec{*variant, *variant == Variant::tpartite ? t : 2, p, k};
            spec.validate();
            if (*variant != Variant::tpartite && solve_cmd->count("--t") > 0 && t != 2)
                throw std::invalid_argument("t is fixed to 2 for this variant");
            Graph g = read_graph_file(input);
            auto start = std::chrono::steady_clock::now();
            SolveResult res;
            if (use_oracle) {
                if (at_most_p) {
                    res = SolveResult::no_instance();
                    for (int pp = 1; pp <= p; ++pp) {
                        ProblemSpec sub = spec;
                        sub.p = pp;
                        SolveResult r = oracle_partition(g, sub, oracle_limit_from_env());
                        if (r.yes && (!res.yes || r.cost < res.cost)) res = std::move(r);
                    }
                } else {
                    res = oracle_partition(g, spec, oracle_limit_from_env());
                }
            } else {
                res = at_most_p ? solve_at_most_p(g, spec) : cek::solve(g, spec);
            }
            double elapsed = detail::ms_since(start);
            if (emit_json) {
                out << emit_result(res, elapsed).dump() << '\n';
            } else if (res.yes) {
                out << "yes cost=" << res.cost << " additions=" << res.edits.additions.size()
                    << " deletions=" << res.edits.deletions.size()
                    << " clusters=" << res.clusters.clusters.size() << '\n';
            } else {
                out << "no\n";
            }
            return res.yes ? 0 : 1;
        }

        if (kernel_cmd->parsed()) {
            ProblemSpec spec{Variant::tpartite, t, p, k};
            spec.validate();
            Graph g = read_graph_file(input);
            KernelResult kern = kernelize(g, spec);
            json sidecar;
            sidecar["removed"] = kern.removed;
            sidecar["verdict"] = kernel_verdict_name(kern.verdict);
            if (!output.empty()) {
                write_graph_file(output, kern.reduced);
                std::string meta_path = meta.empty() ? output + ".json" : meta;
                std::ofstream ms(meta_path);
                if (!ms) throw std::runtime_error("cannot write file: " + meta_path);
                ms << sidecar.dump() << '\n';
            } else {
                write_graph(out, kern.reduced);
                if (!meta.empty()) {
                    std::ofstream ms(meta);
                    if (!ms) throw std::runtime_error("cannot write file: " + meta);
                    ms << sidecar.dump() << '\n';
                } else {
                    out << "# sidecar " << sidecar.dump() << '\n';
                }
            }
            return kern.verdict == KernelVerdict::reduced ? 0 : 1;
        }

        if (reduce_cmd->parsed()) {
            json metadata;
            Graph g(0);
            if (from == "3sat") {
                std::ifstream in(input);
                if (!in) throw std::runtime_error("cannot open file: " + input);
                CnfFormula f = read_dimacs(in);
                SatReduction red = reduce_3sat(f);
                g = std::move(red.graph);
                metadata["k"] = red.budget;
                metadata["gadget_map"] = detail::gadget_map_to_json(red.map);
            } else if (from == "mris") {
                ColoredRegularGraph inst = detail::read_mris_json(input);
                MrisReduction red = reduce_mris(inst);
                g = std::move(red.graph);
                metadata["k"] = red.k;
                metadata["p"] = red.p;
            } else {
                throw std::invalid_argument("unknown reduction source: " + from);
            }
            write_graph_file(output, g);
            std::string meta_path = meta.empty() ? output + ".json" : meta;
            std::ofstream ms(meta_path);
            if (!ms) throw std::runtime_error("cannot write file: " + meta_path);
            ms << metadata.dump() << '\n';
            return 0;
        }

        if (verify_cmd->parsed()) {
            auto variant = parse_variant(variant_str);
            if (!variant) throw std::invalid_argument("unknown variant: " + variant_str);
            Graph g = read_graph_file(input);
            std::ifstream in(edits_path);
            if (!in) throw std::runtime_error("cannot open file: " + edits_path);
            EditSet f = edits_from_json(json::parse(in));
            std::string bad = f.validate_against(g);
            if (!bad.empty()) {
                out << "invalid: " << bad << '\n';
                return 1;
            }
            auto rec = recognize(apply_edits(g, f), *variant,
                                 *variant == Variant::tpartite ? t : 2);
            if (!rec) {
                out << "invalid: edited graph is not in the target class\n";
                return 1;
            }
            if (static_cast<int>(rec->clusters.size()) != p) {
                out << "invalid: edited graph has " << rec->clusters.size()
                    << " clusters, expected " << p << '\n';
                return 1;
            }
            out << "valid cost=" << f.size() << " clusters=" << rec->clusters.size() << '\n';
            return 0;
        }

        if (bench_cmd->parsed()) {
            std::vector<detail::BenchRow> rows;
            if (suite == "planted") {
                struct Case {
                    Variant variant;
                    int t, p, leaf;
                    int noise;
                };
                const Case cases[] = {
                    {Variant::starforest, 2, 2, 50, 4},
                    {Variant::starforest, 2, 2, 500, 6},
                    {Variant::starforest, 2, 2, 5000, 8},
                    {Variant::bicluster, 2, 1, 4, 3},
                    {Variant::bicluster, 2, 2, 3, 3},
                    {Variant::tpartite, 3, 1, 3, 2},
                };
                int idx = 0;
                for (const Case& c : cases) {
                    std::vector<std::vector<int>> sides;
                    for (int i = 0; i < c.p; ++i) {
                        if (c.variant == Variant::starforest)
                            sides.push_back({1, c.leaf});
                        else
                            sides.push_back(std::vector<int>(static_cast<size_t>(c.t), c.leaf));
                    }
                    PlantedInstance inst = gen_planted(sides, c.noise, seed + static_cast<std::uint64_t>(idx));
                    ProblemSpec spec{c.variant, c.t, c.p, c.noise};
                    auto start = std::chrono::steady_clock::now();
                    SolveResult res = cek::solve(inst.graph, spec);
                    double elapsed = detail::ms_since(start);
                    rows.push_back({"planted-" + std::to_string(idx), inst.graph.num_vertices(),
                                    inst.graph.num_edges(), c.p, c.noise,
                                    variant_name(c.variant), res.yes ? res.cost : -1, elapsed});
                    ++idx;
                }
            } else if (suite == "reduction") {
                for (int clauses = 1; clauses <= 3; ++clauses) {
                    std::vector<bool> alpha;
                    CnfFormula f = gen_planted_3sat(clauses, seed + static_cast<std::uint64_t>(clauses), &alpha);
                    auto start = std::chrono::steady_clock::now();
                    SatReduction red = reduce_3sat(f);
                    EditSet w = satisfying_edit(f, alpha, red.map);
                    Graph edited = apply_edits(red.graph, w);
                    if (!recognize(edited, Variant::starforest))
                        throw std::logic_error("witness edit failed recognition");
                    double elapsed = detail::ms_since(start);
                    rows.push_back({"3sat-" + std::to_string(clauses), red.graph.num_vertices(),
                                    red.graph.num_edges(), -1, red.budget, "starforest",
                                    static_cast<long long>(w.size()), elapsed});
                }
                for (int i = 0; i < 3; ++i) {
                    ColoredRegularGraph inst = gen_colored_regular(seed + 100 + static_cast<std::uint64_t>(i));
                    MrisReduction red = reduce_mris(inst);
                    auto start = std::chrono::steady_clock::now();
                    SolveResult res = solve_p_starforest(red.graph, red.p, red.k);
                    double elapsed = detail::ms_since(start);
                    rows.push_back({"mris-" + std::to_string(i), red.graph.num_vertices(),
                                    red.graph.num_edges(), red.p, red.k, "starforest",
                                    res.yes ? res.cost : -1, elapsed});
                }
            } else {
                throw std::invalid_argument("unknown suite: " + suite);
            }
            if (csv_path.empty()) {
                detail::write_csv(out, rows);
            } else {
                std::ofstream cs(csv_path);
                if (!cs) throw std::runtime_error("cannot write file: " + csv_path);
                detail::write_csv(cs, rows);
            }
            return 0;
        }
    } catch (const OracleLimitError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace cek::cli
