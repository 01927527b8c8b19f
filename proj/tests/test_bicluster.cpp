#include <catch2/catch_amalgamated.hpp>

#include "cek/bicluster.hpp"
#include "cek/oracle.hpp"
#include "cek/solve.hpp"
#include "util.hpp"

using namespace cek;
using namespace testutil;

namespace {

// every assignment of right-side vertices to clusters, by full enumeration
long long brute_force_annotated(const AnnotatedInstance& inst) {
    const Graph& g = inst.graph;
    std::vector<int> side_of(static_cast<size_t>(g.num_vertices()), -1);
    for (size_t i = 0; i < inst.partition_a.size(); ++i)
        for (int v : inst.partition_a[i]) side_of[static_cast<size_t>(v)] = static_cast<int>(i);
    std::vector<int> b;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (side_of[static_cast<size_t>(v)] == -1) b.push_back(v);
    const int p = static_cast<int>(inst.partition_a.size());
    long long best = -1;
    std::vector<int> choice(b.size(), 0);
    while (true) {
        long long total = 0;
        for (size_t i = 0; i < b.size(); ++i)
            total += abe_cost(b[i], inst.partition_a[static_cast<size_t>(choice[i])], g);
        if (best == -1 || total < best) best = total;
        size_t j = 0;
        while (j < choice.size() && ++choice[j] == p) choice[j++] = 0;
        if (j == choice.size()) break;
    }
    return b.empty() ? 0 : best;
}

AnnotatedInstance random_annotated(std::mt19937_64& rng, int max_a, int max_b, int max_p) {
    int a = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_a));
    int b = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_b));
    int p = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(max_p, a)));
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (rng() % 2) es.emplace_back(i, a + j);
    AnnotatedInstance inst;
    inst.graph = Graph::from_edges(a + b, es);
    inst.partition_a.assign(static_cast<size_t>(p), {});
    for (int i = 0; i < a; ++i)
        inst.partition_a[static_cast<size_t>(i < p ? i : static_cast<int>(rng() % static_cast<std::uint64_t>(p)))]
            .push_back(i);
    inst.k = 1000000;
    return inst;
}

}  // namespace

TEST_CASE("placement cost formula") {
    SECTION("perfect singleton fit") {
        Graph g = Graph::from_edges(2, {{0, 1}});
        CHECK(abe_cost(1, {0}, g) == 0);
    }
    SECTION("one useful edge, one stray") {
        // A_i = {0,1,2}, N(v) = {0, 4} with 4 outside every left side
        Graph g = Graph::from_edges(6, {{0, 5}, {4, 5}});
        CHECK(abe_cost(5, {0, 1, 2}, g) == 3);
    }
    SECTION("full fit costs nothing") {
        Graph g = Graph::from_edges(3, {{0, 2}, {1, 2}});
        CHECK(abe_cost(2, {0, 1}, g) == 0);
    }
}

TEST_CASE("annotated greedy on the pinned instances") {
    SECTION("two true bicliques cost nothing") {
        // K_{2,2} on {0,1 | 3,4} plus K_{1,1} on {2 | 5}
        Graph g = Graph::from_edges(6, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 5}});
        AnnotatedInstance inst{g, {{0, 1}, {2}}, 10};
        SolveResult r = solve_annotated(inst);
        CHECK(r.yes);
        CHECK(r.cost == 0);
        CHECK(r.edits.empty());
    }
    SECTION("a tie goes to the first cluster") {
        // A = {0,1} split into {0} and {1}; b = 2 sees both
        Graph g = Graph::from_edges(3, {{0, 2}, {1, 2}});
        AnnotatedInstance inst{g, {{0}, {1}}, 10};
        SolveResult r = solve_annotated(inst);
        CHECK(r.cost == 1);
        REQUIRE(r.yes);
        CHECK(r.edits.deletions == std::vector<Edge>{Edge(1, 2)});
        AnnotatedInstance tight{g, {{0}, {1}}, 0};
        CHECK_FALSE(solve_annotated(tight).yes);
    }
    SECTION("input validation") {
        Graph bad = Graph::from_edges(3, {{0, 1}, {1, 2}});
        AnnotatedInstance inst{bad, {{0, 1}}, 5};  // A not independent
        CHECK_THROWS_AS(solve_annotated(inst), std::invalid_argument);
    }
}

TEST_CASE("annotated greedy equals brute force") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        AnnotatedInstance inst = random_annotated(rng, 6, 8, 3);
        CHECK(solve_annotated(inst).cost == brute_force_annotated(inst));
    }
}

TEST_CASE("annotated greedy is stable under left-side relabeling") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        AnnotatedInstance inst = random_annotated(rng, 5, 7, 3);
        SolveResult base = solve_annotated(inst);
        AnnotatedInstance perm = inst;
        std::reverse(perm.partition_a.begin(), perm.partition_a.end());
        SolveResult r = solve_annotated(perm);
        CHECK(r.cost == base.cost);
        auto contents = [](const SolveResult& s) {
            std::vector<std::vector<int>> all;
            for (const Cluster& c : s.clusters.clusters) {
                std::vector<int> flat;
                for (const Side& side : c.sides) flat.insert(flat.end(), side.begin(), side.end());
                std::sort(flat.begin(), flat.end());
                all.push_back(flat);
            }
            std::sort(all.begin(), all.end());
            return all;
        };
        CHECK(contents(base) == contents(r));
    }
}

TEST_CASE("bicluster solver on the pinned instances") {
    SECTION("C4 is already one biclique") {
        SolveResult r = solve_p_bicluster(cycle(4), 1, 0);
        REQUIRE(r.yes);
        CHECK(r.cost == 0);
        CHECK(r.edits.empty());
    }
    SECTION("P4 closes into a four-cycle") {
        SolveResult r = solve_p_bicluster(path(4), 1, 1);
        REQUIRE(r.yes);
        CHECK(r.cost == 1);
        CHECK(r.edits.deletions.empty());
        CHECK(r.edits.additions == std::vector<Edge>{Edge(0, 3)});
    }
    SECTION("P5 splits at the middle edge") {
        SolveResult r = solve_p_bicluster(path(5), 2, 1);
        REQUIRE(r.yes);
        CHECK(r.cost == 1);
        CHECK(r.edits.additions.empty());
        CHECK(r.edits.deletions == std::vector<Edge>{Edge(1, 2)});
    }
}

TEST_CASE("t-partite solver on the pinned instances") {
    SECTION("K3 is a 3-partite clique") {
        SolveResult r = solve_t_partite(complete(3), 3, 1, 0);
        REQUIRE(r.yes);
        CHECK(r.cost == 0);
    }
    SECTION("K4 minus an edge becomes K_{2,2}") {
        Graph g = Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        SolveResult r = solve_t_partite(g, 2, 1, 1);
        REQUIRE(r.yes);
        CHECK(r.cost == 1);
        CHECK(r.edits.additions.empty());
        CHECK(r.edits.deletions == std::vector<Edge>{Edge(2, 3)});
    }
    SECTION("two triangles are two 3-partite cliques") {
        Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
        SolveResult r = solve_t_partite(g, 3, 2, 0);
        REQUIRE(r.yes);
        CHECK(r.cost == 0);
    }
}

TEST_CASE("t=2 editing agrees with the bicluster solver") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = random_graph(n, 0.4, rng);
        for (int p = 1; p <= 2; ++p) {
            auto a = solver_optimum(g, Variant::bicluster, 2, p);
            auto b = solver_optimum(g, Variant::tpartite, 2, p);
            CAPTURE(n, p);
            CHECK(a == b);
        }
    }
}

TEST_CASE("bicluster and t-partite solvers equal the oracle on random graphs") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = random_graph(n, 0.2 + 0.3 * static_cast<double>(rng() % 3), rng);
        for (int p = 1; p <= 3; ++p) {
            {
                ProblemSpec spec{Variant::bicluster, 2, p, 1000000};
                SolveResult oracle = oracle_partition(g, spec);
                auto solver = solver_optimum(g, Variant::bicluster, 2, p);
                CAPTURE(n, p, g.num_edges());
                CHECK((oracle.cost >= 0 ? oracle.cost : -1) == (solver ? *solver : -1));
            }
            {
                ProblemSpec spec{Variant::tpartite, 3, p, 1000000};
                SolveResult oracle = oracle_partition(g, spec);
                auto solver = solver_optimum(g, Variant::tpartite, 3, p);
                CAPTURE(n, p, g.num_edges());
                CHECK((oracle.cost >= 0 ? oracle.cost : -1) == (solver ? *solver : -1));
            }
        }
    }
}

TEST_CASE("every yes answer is certified with at most t sides per cluster") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, 0.4, rng);
        int p = 1 + static_cast<int>(rng() % 2);
        long long k = static_cast<long long>(rng() % 5);
        int t = 2 + static_cast<int>(rng() % 2);
        SolveResult r = solve_t_partite(g, t, p, k);
        if (!r.yes) continue;
        CHECK(r.edits.size() <= k);
        auto rec = recognize(apply_edits(g, r.edits), Variant::tpartite, t);
        REQUIRE(rec);
        CHECK(static_cast<int>(rec->clusters.size()) == p);
        for (const Cluster& c : rec->clusters)
            CHECK(static_cast<int>(c.sides.size()) <= t);
    }
}

TEST_CASE("optimal solutions keep a lightly edited vertex in every big cluster") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = random_graph(n, 0.5, rng);
        int p = 1 + static_cast<int>(rng() % 2);
        ProblemSpec spec{Variant::bicluster, 2, p, 1000000};
        SolveResult oracle = oracle_partition(g, spec);
        if (oracle.cost < 0) continue;
        long long k = oracle.cost;
        long long big = detail::isqrt_floor(4 * k) + 1;
        for (const Cluster& c : oracle.clusters.clusters) {
            long long size = 0;
            for (const Side& s : c.sides) size += static_cast<long long>(s.size());
            if (size < big) continue;
            bool has_cheap = false;
            for (const Side& s : c.sides)
                for (int v : s) {
                    long long touched = 0;
                    for (const Edge& e : oracle.edits.additions)
                        if (e.u == v || e.v == v) ++touched;
                    for (const Edge& e : oracle.edits.deletions)
                        if (e.u == v || e.v == v) ++touched;
                    if (touched * touched <= k) has_cheap = true;
                }
            CHECK(has_cheap);
        }
    }
}
