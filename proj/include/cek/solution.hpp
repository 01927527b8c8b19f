#pragma once

#include <optional>
#include <string>

#include "cek/graph.hpp"

namespace cek {

enum class Variant { starforest, bicluster, tpartite };

inline std::string variant_name(Variant v) {
    switch (v) {
        case Variant::starforest: return "starforest";
        case Variant::bicluster: return "bicluster";
        case Variant::tpartite: return "tpartite";
    }
    return "?";
}

inline std::optional<Variant> parse_variant(const std::string& s) {
    if (s == "starforest") return Variant::starforest;
    if (s == "bicluster") return Variant::bicluster;
    if (s == "tpartite") return Variant::tpartite;
    return std::nullopt;
}

struct ProblemSpec {
    Variant variant = Variant::starforest;
    int t = 2;                  // side bound; forced to 2 unless tpartite
    std::optional<int> p;       // target component count; absent = unbounded
    long long k = 0;            // edit budget

    void validate() const {
        if (k < 0) throw std::invalid_argument("budget k must be non-negative");
        if (p && *p < 1) throw std::invalid_argument("p must be at least 1");
        if (t < 2) throw std::invalid_argument("t must be at least 2");
        if (variant != Variant::tpartite && t != 2)
            throw std::invalid_argument("t is fixed to 2 for this variant");
    }
};

using Side = std::vector<int>;

struct Cluster {
    std::vector<Side> sides;

    int size() const {
        int s = 0;
        for (const Side& side : sides) s += static_cast<int>(side.size());
        return s;
    }
};

// Partition of V into clusters, each split into independent sides. For the
// starforest reading, side 0 of every cluster is the center (size one).
struct ClusterSolution {
    std::vector<Cluster> clusters;
};

struct SolveResult {
    bool yes = false;
    long long cost = -1;
    EditSet edits;
    ClusterSolution clusters;

    static SolveResult no_instance() { return SolveResult{}; }
};

enum class ObstructionKind { k3, p4, c4, co_p3, clique };

inline std::string obstruction_kind_name(ObstructionKind k) {
    switch (k) {
        case ObstructionKind::k3: return "K3";
        case ObstructionKind::p4: return "P4";
        case ObstructionKind::c4: return "C4";
        case ObstructionKind::co_p3: return "coP3";
        case ObstructionKind::clique: return "clique";
    }
    return "?";
}

// Induced witness that a graph is outside the target class. For co_p3 the
// vertices are (u, v, w) with uv the unique edge and w in the same component;
// for p4/c4 they are in path/cycle order.
struct Obstruction {
    ObstructionKind kind;
    std::vector<int> vertices;
};

namespace detail {

// Groups the vertices of one component by identical neighborhoods. Since the
// component is closed under adjacency these are the candidate sides.
inline std::vector<std::vector<int>> neighborhood_classes(const Graph& g,
                                                          const std::vector<int>& comp) {
    std::vector<int> order = comp;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto &na = g.neighbors(a), &nb = g.neighbors(b);
        if (na != nb) return na < nb;
        return a < b;
    });
    std::vector<std::vector<int>> classes;
    for (int v : order) {
        if (!classes.empty() && g.neighbors(classes.back().front()) == g.neighbors(v))
            classes.back().push_back(v);
        else
            classes.push_back({v});
    }
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return classes;
}

}  // namespace detail

// Canonical decomposition: clusters are connected components (ordered by
// smallest vertex), sides are the classes of equal neighborhoods within the
// component. Returns nothing if the graph is not in the class. Isolated
// vertices are legal singleton clusters in all three classes.
inline std::optional<ClusterSolution> recognize(const Graph& g, Variant variant, int t = 2) {
    if (variant != Variant::tpartite) t = 2;
    if (t < 2) throw std::invalid_argument("t must be at least 2");
    ClusterSolution sol;
    for (const auto& comp : connected_components(g)) {
        auto classes = detail::neighborhood_classes(g, comp);
        if (static_cast<int>(classes.size()) > t) return std::nullopt;
        // Every vertex must see the whole component except its own class.
        for (const auto& cls : classes) {
            int v = cls.front();
            if (g.degree(v) != static_cast<int>(comp.size() - cls.size())) return std::nullopt;
        }
        if (variant == Variant::starforest && comp.size() >= 2) {
            // One side must be a single center.
            size_t center = classes.size();
            for (size_t i = 0; i < classes.size(); ++i)
                if (classes[i].size() == 1) { center = std::min(center, i); }
            if (center == classes.size()) return std::nullopt;
            if (center != 0) std::swap(classes[0], classes[center]);
        }
        Cluster c;
        c.sides = std::move(classes);
        sol.clusters.push_back(std::move(c));
    }
    return sol;
}

// Some induced obstruction certifying non-membership; absent exactly when
// recognize succeeds. Starforest uses {K3, P4, C4}, bicluster {K3, P4}, and
// the t-partite case a same-component coP3 or a clique on t+1 vertices.
inline std::optional<Obstruction> find_obstruction(const Graph& g, Variant variant, int t = 2) {
    if (variant != Variant::tpartite) t = 2;
    const int n = g.num_vertices();

    auto find_k3 = [&]() -> std::optional<Obstruction> {
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u)) {
                if (v < u) continue;
                for (int w : g.neighbors(u)) {
                    if (w <= v) continue;
                    if (g.has_edge(v, w))
                        return Obstruction{ObstructionKind::k3, {u, v, w}};
                }
            }
        return std::nullopt;
    };

    auto find_p4 = [&]() -> std::optional<Obstruction> {
        // Induced a-b-c-d: scan the middle edge in both orientations.
        for (int b = 0; b < n; ++b)
            for (int c : g.neighbors(b)) {
                for (int a : g.neighbors(b)) {
                    if (a == c || g.has_edge(a, c)) continue;
                    for (int d : g.neighbors(c)) {
                        if (d == a || d == b) continue;
                        if (!g.has_edge(d, b) && !g.has_edge(d, a))
                            return Obstruction{ObstructionKind::p4, {a, b, c, d}};
                    }
                }
            }
        return std::nullopt;
    };

    auto find_c4 = [&]() -> std::optional<Obstruction> {
        for (int a = 0; a < n; ++a)
            for (int c = a + 1; c < n; ++c) {
                if (g.has_edge(a, c)) continue;
                for (int b : g.neighbors(a)) {
                    if (!g.has_edge(b, c)) continue;
                    for (int d : g.neighbors(a)) {
                        if (d <= b || d == c) continue;
                        if (g.has_edge(d, c) && !g.has_edge(b, d))
                            return Obstruction{ObstructionKind::c4, {a, b, c, d}};
                    }
                }
            }
        return std::nullopt;
    };

    switch (variant) {
        case Variant::starforest: {
            if (auto o = find_k3()) return o;
            if (auto o = find_p4()) return o;
            if (auto o = find_c4()) return o;
            return std::nullopt;
        }
        case Variant::bicluster: {
            if (auto o = find_k3()) return o;
            if (auto o = find_p4()) return o;
            return std::nullopt;
        }
        case Variant::tpartite: {
            for (const auto& comp : connected_components(g)) {
                // coP3 inside the component: an edge plus a vertex missing both.
                for (int u : comp)
                    for (int v : g.neighbors(u)) {
                        if (v < u) continue;
                        for (int w : comp) {
                            if (w == u || w == v) continue;
                            if (!g.has_edge(w, u) && !g.has_edge(w, v))
                                return Obstruction{ObstructionKind::co_p3, {u, v, w}};
                        }
                    }
                // Component is complete multipartite; too many parts shows up
                // as a clique picking one vertex per class.
                auto classes = detail::neighborhood_classes(g, comp);
                if (static_cast<int>(classes.size()) > t) {
                    std::vector<int> clique;
                    for (int i = 0; i <= t; ++i) clique.push_back(classes[static_cast<size_t>(i)].front());
                    return Obstruction{ObstructionKind::clique, clique};
                }
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

// Pairwise edit materialization of a fixed clustering: inter-cluster and
// intra-side edges are deleted, missing cross-side pairs added.
inline EditSet edits_realizing(const Graph& g, const ClusterSolution& sol) {
    const int n = g.num_vertices();
    std::vector<int> cluster_of(static_cast<size_t>(n), -1);
    std::vector<int> side_of(static_cast<size_t>(n), -1);
    for (size_t c = 0; c < sol.clusters.size(); ++c)
        for (size_t s = 0; s < sol.clusters[c].sides.size(); ++s)
            for (int v : sol.clusters[c].sides[s]) {
                if (cluster_of[static_cast<size_t>(v)] != -1)
                    throw std::invalid_argument("cluster solution repeats a vertex");
                cluster_of[static_cast<size_t>(v)] = static_cast<int>(c);
                side_of[static_cast<size_t>(v)] = static_cast<int>(s);
            }
    for (int v = 0; v < n; ++v)
        if (cluster_of[static_cast<size_t>(v)] == -1)
            throw std::invalid_argument("cluster solution misses a vertex");
    EditSet f;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool want = cluster_of[static_cast<size_t>(u)] == cluster_of[static_cast<size_t>(v)] &&
                        side_of[static_cast<size_t>(u)] != side_of[static_cast<size_t>(v)];
            bool have = g.has_edge(u, v);
            if (want && !have) f.additions.emplace_back(u, v);
            if (!want && have) f.deletions.emplace_back(u, v);
        }
    f.normalize();
    return f;
}

}  // namespace cek
