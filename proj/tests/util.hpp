#pragma once

#include <cstdint>
#include <random>

#include "cek/graph.hpp"
#include "cek/solution.hpp"

namespace testutil {

using cek::Edge;
using cek::Graph;

inline Graph path(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

inline Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

inline Graph complete(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

// K_{1,l}: vertex 0 is the center.
inline Graph star(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, es);
}

// K_{a,b}: vertices 0..a-1 on one side.
inline Graph biclique(int a, int b) {
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph::from_edges(a + b, es);
}

inline Graph edgeless(int n) { return Graph(n); }

// All labeled graphs on n vertices, indexed by the bitmask over pairs in
// lexicographic order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> es;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

inline std::uint64_t num_masks(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

inline Graph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
    std::vector<Edge> es;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < edge_prob) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

inline Graph random_graph_m(int n, long long m, std::mt19937_64& rng) {
    std::vector<std::uint64_t> keys;
    keys.reserve(static_cast<size_t>(m) + static_cast<size_t>(m) / 4);
    while (true) {
        while (static_cast<long long>(keys.size()) < m + m / 4) {
            std::uint64_t u = rng() % static_cast<std::uint64_t>(n);
            std::uint64_t v = rng() % static_cast<std::uint64_t>(n);
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            keys.push_back(u * static_cast<std::uint64_t>(n) + v);
        }
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        if (static_cast<long long>(keys.size()) >= m) break;
    }
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::uint64_t key = keys[static_cast<size_t>(i)];
        es.emplace_back(static_cast<int>(key / static_cast<std::uint64_t>(n)),
                        static_cast<int>(key % static_cast<std::uint64_t>(n)));
    }
    return Graph::from_edges(n, es);
}

// Random valid edit set for involution-style properties.
inline cek::EditSet random_edits(const Graph& g, double flip_prob, std::mt19937_64& rng) {
    cek::EditSet f;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v = u + 1; v < g.num_vertices(); ++v)
            if (coin(rng) < flip_prob)
                (g.has_edge(u, v) ? f.deletions : f.additions).emplace_back(u, v);
    f.normalize();
    return f;
}

// Host graph with an attached class of `class_size` mutual false twins, all
// adjacent to a random nonempty subset of the host.
inline Graph planted_twins(int host_n, int class_size, std::mt19937_64& rng) {
    Graph host = random_graph(host_n, 0.5, rng);
    std::vector<Edge> es = host.edges();
    std::vector<int> anchors;
    while (anchors.empty())
        for (int v = 0; v < host_n; ++v)
            if (rng() & 1) anchors.push_back(v);
    for (int i = 0; i < class_size; ++i)
        for (int a : anchors) es.emplace_back(host_n + i, a);
    return Graph::from_edges(host_n + class_size, es);
}

// Brute-force multicolored independent set: one vertex per class, pairwise
// non-adjacent.
inline bool has_multicolored_independent_set(const Graph& g,
                                             const std::vector<std::vector<int>>& classes) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t idx) -> bool {
        if (idx == classes.size()) return true;
        for (int v : classes[idx]) {
            bool ok = true;
            for (int u : pick)
                if (g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(v);
            if (self(self, idx + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

// Minimum number of deletions turning g into the class, by enumerating all
// cluster partitions plus side splits and keeping only addition-free ones.
// Small n only; independent of the branching code it is checked against.
inline long long deletion_only_optimum(const Graph& g, cek::Variant variant, int t = 2) {
    const int n = g.num_vertices();
    std::vector<int> assign(static_cast<size_t>(n), -1);
    long long best = -1;

    auto eval_partition = [&](int num_clusters) {
        std::vector<std::vector<int>> clusters(static_cast<size_t>(num_clusters));
        for (int v = 0; v < n; ++v) clusters[static_cast<size_t>(assign[static_cast<size_t>(v)])].push_back(v);
        // side splits per cluster, deletion-only: every cross-side pair must
        // already be an edge, intra-side edges get deleted
        long long total = 0;
        for (auto& cl : clusters) {
            long long local_best = -1;
            int sz = static_cast<int>(cl.size());
            if (variant == cek::Variant::starforest) {
                if (sz == 1) {
                    local_best = 0;
                } else {
                    long long inside = 0;
                    for (int a = 0; a < sz; ++a)
                        for (int b = a + 1; b < sz; ++b)
                            if (g.has_edge(cl[static_cast<size_t>(a)], cl[static_cast<size_t>(b)])) ++inside;
                    for (int ci = 0; ci < sz; ++ci) {
                        bool sees_all = true;
                        for (int q = 0; q < sz; ++q)
                            if (q != ci && !g.has_edge(cl[static_cast<size_t>(ci)], cl[static_cast<size_t>(q)])) {
                                sees_all = false;
                                break;
                            }
                        if (!sees_all) continue;
                        long long deletions = inside - (sz - 1);
                        if (local_best == -1 || deletions < local_best) local_best = deletions;
                    }
                }
            } else {
                int tt = variant == cek::Variant::tpartite ? t : 2;
                std::vector<int> side(static_cast<size_t>(sz), 0);
                auto rec2 = [&](auto&& self2, int i, int used) -> void {
                    if (i == sz) {
                        long long deletions = 0;
                        for (int a = 0; a < sz; ++a)
                            for (int b = a + 1; b < sz; ++b) {
                                bool want = side[static_cast<size_t>(a)] != side[static_cast<size_t>(b)];
                                bool have = g.has_edge(cl[static_cast<size_t>(a)], cl[static_cast<size_t>(b)]);
                                if (want && !have) return;  // would need an addition
                                if (!want && have) ++deletions;
                            }
                        if (local_best == -1 || deletions < local_best) local_best = deletions;
                        return;
                    }
                    for (int s = 0; s <= used && s < tt; ++s) {
                        side[static_cast<size_t>(i)] = s;
                        self2(self2, i + 1, std::max(used, s + 1));
                    }
                };
                rec2(rec2, 0, 0);
            }
            if (local_best == -1) return;  // cluster unreachable by deletions
            total += local_best;
        }
        // inter-cluster edges are all deleted
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u))
                if (u < v && assign[static_cast<size_t>(u)] != assign[static_cast<size_t>(v)]) ++total;
        if (best == -1 || total < best) best = total;
    };

    auto rec = [&](auto&& self, int v, int used) -> void {
        if (v == n) {
            eval_partition(used);
            return;
        }
        for (int c = 0; c <= used; ++c) {
            assign[static_cast<size_t>(v)] = c;
            self(self, v + 1, std::max(used, c + 1));
        }
        assign[static_cast<size_t>(v)] = -1;
    };
    if (n == 0) return 0;
    rec(rec, 0, 0);
    return best;
}

}  // namespace testutil
