#pragma once

#include <limits>
#include <optional>

#include "cek/kernel.hpp"
#include "cek/solution.hpp"

namespace cek {

enum class DegreeCheck { pass, prune };

// A yes-instance has at most p + 2k vertices of degree two or more: the p
// centers plus the leaves touched by edits.
inline DegreeCheck degree_bound_check(const Graph& g, int p, long long k) {
    long long cnt = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) >= 2) ++cnt;
    return cnt > p + 2 * k ? DegreeCheck::prune : DegreeCheck::pass;
}

struct CentersResult {
    bool feasible = false;
    long long cost = 0;
    EditSet edits;
    ClusterSolution stars;  // center side first in every star
};

// Minimum edit set turning g into a starforest whose center set is exactly
// `centers`, plus exactly `singletons` one-vertex stars taken from outside
// vertices (component count |centers| + singletons). Edges inside the center
// set and edges with both endpoints outside it are always deleted; each
// outside vertex then either keeps one edge into the centers or is isolated,
// and stray vertices attach for one addition. The choice of which outside
// vertices end up alone is by cheapest conversion first, ties on vertex id.
inline CentersResult solve_with_centers(const Graph& g, const std::vector<int>& centers,
                                        int singletons) {
    const int n = g.num_vertices();
    if (singletons < 0) throw std::invalid_argument("singleton count must be non-negative");
    std::vector<bool> in_s(static_cast<size_t>(n), false);
    for (int c : centers) {
        if (c < 0 || c >= n) throw std::invalid_argument("center out of range");
        if (in_s[static_cast<size_t>(c)]) throw std::invalid_argument("duplicate center");
        in_s[static_cast<size_t>(c)] = true;
    }

    CentersResult res;
    long long outside_count = n - static_cast<long long>(centers.size());
    if (singletons > outside_count) return res;  // infeasible

    EditSet f;
    // Forced deletions: both endpoints in S, or both outside S.
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (u >= v) continue;
            if (in_s[static_cast<size_t>(u)] == in_s[static_cast<size_t>(v)])
                f.deletions.emplace_back(u, v);
        }

    std::vector<int> zeros, attachers;          // outside vertices by d_S
    std::vector<int> keep_target(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (in_s[static_cast<size_t>(v)]) continue;
        int ds = 0, smallest = -1;
        for (int w : g.neighbors(v))
            if (in_s[static_cast<size_t>(w)]) {
                ++ds;
                if (smallest == -1) smallest = w;  // neighbors are sorted
            }
        if (ds == 0)
            zeros.push_back(v);
        else {
            attachers.push_back(v);
            keep_target[static_cast<size_t>(v)] = smallest;
        }
    }

    std::vector<bool> alone(static_cast<size_t>(n), false);
    int z = static_cast<int>(zeros.size());
    if (singletons >= z) {
        for (int v : zeros) alone[static_cast<size_t>(v)] = true;
        int convert = singletons - z;
        if (convert > static_cast<int>(attachers.size())) return res;
        for (int i = 0; i < convert; ++i) alone[static_cast<size_t>(attachers[static_cast<size_t>(i)])] = true;
    } else {
        for (int i = 0; i < singletons; ++i) alone[static_cast<size_t>(zeros[static_cast<size_t>(i)])] = true;
        if (centers.empty()) return res;  // leftover strays have nowhere to go
    }

    std::vector<std::vector<int>> leaves_of(static_cast<size_t>(n));
    for (int v : attachers) {
        if (alone[static_cast<size_t>(v)]) {
            for (int w : g.neighbors(v))
                if (in_s[static_cast<size_t>(w)]) f.deletions.emplace_back(v, w);
        } else {
            int keep = keep_target[static_cast<size_t>(v)];
            for (int w : g.neighbors(v))
                if (in_s[static_cast<size_t>(w)] && w != keep) f.deletions.emplace_back(v, w);
            leaves_of[static_cast<size_t>(keep)].push_back(v);
        }
    }
    for (int v : zeros) {
        if (alone[static_cast<size_t>(v)]) continue;
        int target = centers.front();
        f.additions.emplace_back(v, target);
        leaves_of[static_cast<size_t>(target)].push_back(v);
    }

    f.normalize();
    res.feasible = true;
    res.cost = f.size();
    res.edits = std::move(f);
    for (int c : centers) {
        Cluster star;
        star.sides.push_back({c});
        auto& lv = leaves_of[static_cast<size_t>(c)];
        std::sort(lv.begin(), lv.end());
        if (!lv.empty()) star.sides.push_back(lv);
        res.stars.clusters.push_back(std::move(star));
    }
    for (int v = 0; v < n; ++v)
        if (alone[static_cast<size_t>(v)]) res.stars.clusters.push_back(Cluster{{{v}}});
    return res;
}

// Closed-form optimum for the small-component part: s isolated edges plus
// t_iso isolated vertices edited into exactly p1 stars. Keeping a edges costs
// (s-a) dissolutions plus one addition per pooled vertex that is neither a
// kept edge nor one of the p1-a fresh star seeds.
struct G1Plan {
    long long cost = 0;
    int kept_edges = 0;  // the kept isolated edges, smallest first
    int new_stars = 0;   // stars seeded from pooled vertices
};

inline std::optional<G1Plan> solve_g1(int s, int t_iso, int p1, long long k1) {
    if (s < 0 || t_iso < 0 || s + t_iso < 1)
        throw std::invalid_argument("solve_g1 expects a nonempty small part");
    if (p1 < 1) throw std::invalid_argument("solve_g1 expects p1 >= 1");
    long long verts = 2LL * s + t_iso;
    if (p1 > verts) return std::nullopt;
    int a = std::min({s, p1, static_cast<int>(verts) - p1});
    long long cost = 3LL * s + t_iso - p1 - 2LL * a;
    if (cost > k1) return std::nullopt;
    return G1Plan{cost, a, p1 - a};
}

namespace detail {

inline void append_remapped(EditSet& into, const EditSet& from, const std::vector<int>& map) {
    for (const Edge& e : from.additions)
        into.additions.emplace_back(map[static_cast<size_t>(e.u)], map[static_cast<size_t>(e.v)]);
    for (const Edge& e : from.deletions)
        into.deletions.emplace_back(map[static_cast<size_t>(e.u)], map[static_cast<size_t>(e.v)]);
}

// Enumerates next size-r combination of indices into a pool; standard
// lexicographic order.
inline bool next_combination(std::vector<int>& idx, int pool) {
    int r = static_cast<int>(idx.size());
    for (int i = r - 1; i >= 0; --i) {
        if (idx[static_cast<size_t>(i)] < pool - (r - i)) {
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < r; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Exact solver for editing to exactly p stars within budget k. Pipeline:
// twin kernel and structural prechecks, degree-bound pruning, then the split
// into G1 (components of size <= 2, solved in closed form) and G2 (the rest,
// solved by enumerating center sets among degree->=2 vertices, extended with
// an explicit singleton-star count so degenerate stars are not missed).
inline SolveResult solve_p_starforest(const Graph& g, int p, long long k) {
    if (p < 1) throw std::invalid_argument("p must be at least 1");
    if (k < 0) throw std::invalid_argument("budget k must be non-negative");
    constexpr long long inf = std::numeric_limits<long long>::max() / 4;
    const int n = g.num_vertices();
    if (p > n) return SolveResult::no_instance();

    ProblemSpec spec{Variant::starforest, 2, p, k};
    KernelResult kern = kernelize(g, spec);
    if (kern.verdict != KernelVerdict::reduced) return SolveResult::no_instance();
    const Graph& reduced = kern.reduced;
    if (degree_bound_check(reduced, p, k) == DegreeCheck::prune) return SolveResult::no_instance();

    // Split into small components (isolated vertices and edges) and the rest.
    std::vector<Edge> small_edges;
    std::vector<int> small_isolates, big_verts;
    for (const auto& comp : connected_components(reduced)) {
        if (comp.size() == 1)
            small_isolates.push_back(comp[0]);
        else if (comp.size() == 2)
            small_edges.emplace_back(comp[0], comp[1]);
        else
            big_verts.insert(big_verts.end(), comp.begin(), comp.end());
    }
    std::sort(big_verts.begin(), big_verts.end());
    std::sort(small_edges.begin(), small_edges.end());
    std::sort(small_isolates.begin(), small_isolates.end());

    const int s = static_cast<int>(small_edges.size());
    const int t_iso = static_cast<int>(small_isolates.size());
    const long long n1 = 2LL * s + t_iso;
    Graph g2 = induced_subgraph(reduced, big_verts);
    const int n2 = g2.num_vertices();
    const long long m2 = g2.num_edges();

    // Best G2 solution for each positive star count.
    struct G2Best {
        long long cost = inf;
        CentersResult res;
    };
    std::vector<G2Best> best2(static_cast<size_t>(p) + 1);
    if (n2 > 0) {
        std::vector<int> d2;
        for (int v = 0; v < n2; ++v)
            if (g2.degree(v) >= 2) d2.push_back(v);
        for (int p2 = 1; p2 <= p; ++p2) {
            auto& slot = best2[static_cast<size_t>(p2)];
            for (int sz = std::min<int>(p2, static_cast<int>(d2.size())); sz >= 0; --sz) {
                int r = p2 - sz;
                std::vector<int> idx(static_cast<size_t>(sz));
                for (int i = 0; i < sz; ++i) idx[static_cast<size_t>(i)] = i;
                bool more = true;
                while (more) {
                    std::vector<int> centers;
                    centers.reserve(static_cast<size_t>(sz));
                    for (int i : idx) centers.push_back(d2[static_cast<size_t>(i)]);
                    CentersResult cr = solve_with_centers(g2, centers, r);
                    if (cr.feasible && cr.cost < slot.cost) {
                        slot.cost = cr.cost;
                        slot.res = std::move(cr);
                    }
                    more = sz > 0 && detail::next_combination(idx, static_cast<int>(d2.size()));
                    if (sz == 0) break;
                }
            }
        }
    }

    // G1 closed-form optima.
    std::vector<std::optional<G1Plan>> plan1(static_cast<size_t>(p) + 1);
    if (n1 > 0)
        for (int p1 = 1; p1 <= p; ++p1) plan1[static_cast<size_t>(p1)] = solve_g1(s, t_iso, p1, k);

    long long best = inf;
    int best_p1 = -1;
    for (int p1 = 0; p1 <= p; ++p1) {
        int p2 = p - p1;
        long long c1, c2;
        if (p1 == 0)
            c1 = n1 > 0 ? 3LL * s + t_iso : 0;  // dissolve G1, attach into a G2 star
        else
            c1 = plan1[static_cast<size_t>(p1)] ? plan1[static_cast<size_t>(p1)]->cost : inf;
        if (p2 == 0)
            c2 = n2 > 0 ? m2 + n2 : 0;  // empty G2, attach into a G1 star
        else
            c2 = n2 > 0 ? best2[static_cast<size_t>(p2)].cost : inf;
        if (c1 >= inf || c2 >= inf) continue;
        // Cross attachments need a host star on the other side.
        if (p1 == 0 && n1 > 0 && p2 == 0) continue;
        if (c1 + c2 < best) {
            best = c1 + c2;
            best_p1 = p1;
        }
    }
    if (best > k) return SolveResult::no_instance();

    // Assemble the witness in reduced-graph ids.
    const int p1 = best_p1, p2 = p - best_p1;
    EditSet f;
    std::vector<int> g2_centers, g1_centers;
    if (p2 >= 1) {
        const CentersResult& cr = best2[static_cast<size_t>(p2)].res;
        detail::append_remapped(f, cr.edits, big_verts);
        for (const Cluster& star : cr.stars.clusters)
            g2_centers.push_back(big_verts[static_cast<size_t>(star.sides.front().front())]);
        std::sort(g2_centers.begin(), g2_centers.end());
    }
    if (p1 >= 1) {
        const G1Plan& plan = *plan1[static_cast<size_t>(p1)];
        std::vector<int> pool = small_isolates;
        for (int i = plan.kept_edges; i < s; ++i) {
            f.deletions.push_back(small_edges[static_cast<size_t>(i)]);
            pool.push_back(small_edges[static_cast<size_t>(i)].u);
            pool.push_back(small_edges[static_cast<size_t>(i)].v);
        }
        std::sort(pool.begin(), pool.end());
        for (int i = 0; i < plan.kept_edges; ++i)
            g1_centers.push_back(small_edges[static_cast<size_t>(i)].u);
        for (int i = 0; i < plan.new_stars; ++i) g1_centers.push_back(pool[static_cast<size_t>(i)]);
        std::sort(g1_centers.begin(), g1_centers.end());
        int target = g1_centers.empty() ? -1 : g1_centers.front();
        for (size_t i = static_cast<size_t>(plan.new_stars); i < pool.size(); ++i)
            f.additions.emplace_back(pool[i], target);
    } else if (n1 > 0) {
        for (const Edge& e : small_edges) f.deletions.push_back(e);
        int target = g2_centers.front();
        for (const Edge& e : small_edges) {
            f.additions.emplace_back(e.u, target);
            f.additions.emplace_back(e.v, target);
        }
        for (int v : small_isolates) f.additions.emplace_back(v, target);
    }
    if (p2 == 0 && n2 > 0) {
        int target = g1_centers.front();
        for (const Edge& e : g2.edges())
            f.deletions.emplace_back(big_verts[static_cast<size_t>(e.u)], big_verts[static_cast<size_t>(e.v)]);
        for (int v : big_verts) f.additions.emplace_back(v, target);
    }
    f.normalize();

    // Lift to original ids; removed twins re-enter for free next to a kept
    // class member, which the final recognition pass recovers.
    EditSet lifted;
    detail::append_remapped(lifted, f, kern.kept);
    lifted.normalize();
    if (lifted.size() != best)
        throw std::logic_error("starforest assembly does not match the computed optimum");
    auto rec = recognize(apply_edits(g, lifted), Variant::starforest);
    if (!rec || static_cast<int>(rec->clusters.size()) != p)
        throw std::logic_error("starforest assembly failed certification");
    return SolveResult{true, best, std::move(lifted), std::move(*rec)};
}

}  // namespace cek
