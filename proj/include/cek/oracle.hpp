#pragma once

#include <cstdint>
#include <limits>
#include <unordered_set>

#include "cek/solution.hpp"

namespace cek {

struct OracleLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The unique minimal edit set realizing a fixed clustering.
inline EditSet forced_edits(const Graph& g, const ClusterSolution& sol) {
    return edits_realizing(g, sol);
}

namespace detail {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Exhaustive optimum by enumerating all cluster partitions (restricted-growth
// order) with memoized best side-splits per cluster mask. Intended for
// certification at small n only.
class PartitionOracle {
public:
    PartitionOracle(const Graph& g, const ProblemSpec& spec, int max_n)
        : g_(g), spec_(spec), n_(g.num_vertices()) {
        spec_.validate();
        if (n_ > max_n)
            throw OracleLimitError("oracle_partition refused: graph larger than the size limit");
        if (n_ > 20)
            throw OracleLimitError("oracle_partition refused: hard cap is 20 vertices");
        adj_.assign(static_cast<size_t>(n_), 0);
        for (int v = 0; v < n_; ++v)
            for (int w : g.neighbors(v)) adj_[static_cast<size_t>(v)] |= 1u << w;
        size_t masks = size_t{1} << n_;
        edges_in_.assign(masks, 0);
        for (std::uint32_t mask = 1; mask < masks; ++mask) {
            int low = std::countr_zero(mask);
            std::uint32_t rest = mask & (mask - 1);
            edges_in_[mask] = edges_in_[rest] +
                              std::popcount(adj_[static_cast<size_t>(low)] & rest);
        }
        if (spec_.variant == Variant::starforest)
            build_star_costs();
        else
            build_split_costs();
    }

    SolveResult run() {
        best_cost_ = kInf;
        assignment_.assign(static_cast<size_t>(n_), -1);
        if (n_ == 0) {
            // The empty graph is the union of zero clusters.
            if (!spec_.p) return SolveResult{spec_.k >= 0, 0, {}, {}};
            return SolveResult::no_instance();
        }
        recurse(0, 0, 0);
        if (best_cost_ >= kInf) return SolveResult::no_instance();
        SolveResult res;
        res.cost = best_cost_;
        res.yes = best_cost_ <= spec_.k;
        res.clusters = materialize_clusters();
        res.edits = forced_edits(g_, res.clusters);
        if (static_cast<long long>(res.edits.size()) != best_cost_)
            throw std::logic_error("oracle cost mismatch against materialized edits");
        return res;
    }

private:
    void build_star_costs() {
        size_t masks = size_t{1} << n_;
        cluster_cost_.assign(masks, kInf);
        star_center_.assign(masks, -1);
        for (std::uint32_t mask = 1; mask < masks; ++mask) {
            int sz = std::popcount(mask);
            if (sz == 1) {
                cluster_cost_[mask] = 0;
                star_center_[mask] = std::countr_zero(mask);
                continue;
            }
            // Star centered c: keep c's inside edges, delete the rest, add
            // the missing spokes.
            for (std::uint32_t m = mask; m; m &= m - 1) {
                int c = std::countr_zero(m);
                long long deg_in = std::popcount(adj_[static_cast<size_t>(c)] & mask);
                long long cost = (sz - 1) + edges_in_[mask] - 2 * deg_in;
                if (cost < cluster_cost_[mask]) {
                    cluster_cost_[mask] = cost;
                    star_center_[mask] = c;
                }
            }
        }
    }

    void build_split_costs() {
        const int t = spec_.variant == Variant::bicluster ? 2 : spec_.t;
        size_t masks = size_t{1} << n_;
        // phi(P) = 4*E(P) - |P|^2; splitting cost of a cluster C into parts
        // P_1..P_j is (|C|^2 + sum phi(P_i))/2 - E(C).
        std::vector<long long> phi(masks, 0);
        for (std::uint32_t mask = 1; mask < masks; ++mask) {
            int sz = std::popcount(mask);
            phi[mask] = 4 * edges_in_[mask] - static_cast<long long>(sz) * sz;
        }
        exact_.assign(static_cast<size_t>(t + 1), std::vector<long long>(masks, kInf));
        choice_.assign(static_cast<size_t>(t + 1), std::vector<std::uint32_t>(masks, 0));
        exact_[1] = phi;
        for (int j = 2; j <= t; ++j) {
            for (std::uint32_t mask = 1; mask < masks; ++mask) {
                if (std::popcount(mask) < j) continue;
                std::uint32_t low = mask & static_cast<std::uint32_t>(-static_cast<std::int32_t>(mask));
                std::uint32_t rest = mask ^ low;
                // First part = low | sub, sub over submasks of rest.
                for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
                    std::uint32_t part = low | sub;
                    std::uint32_t remain = mask ^ part;
                    if (remain && exact_[static_cast<size_t>(j - 1)][remain] < kInf) {
                        long long val = phi[part] + exact_[static_cast<size_t>(j - 1)][remain];
                        if (val < exact_[static_cast<size_t>(j)][mask]) {
                            exact_[static_cast<size_t>(j)][mask] = val;
                            choice_[static_cast<size_t>(j)][mask] = part;
                        }
                    }
                    if (sub == 0) break;
                }
            }
        }
        cluster_cost_.assign(masks, kInf);
        best_parts_.assign(masks, 0);
        for (std::uint32_t mask = 1; mask < masks; ++mask) {
            int sz = std::popcount(mask);
            if (sz == 1) {
                cluster_cost_[mask] = 0;
                best_parts_[mask] = 1;
                continue;
            }
            // A cluster of size >= 2 needs >= 2 sides to be connected.
            for (int j = 2; j <= t && j <= sz; ++j) {
                if (exact_[static_cast<size_t>(j)][mask] >= kInf) continue;
                long long cost =
                    (static_cast<long long>(sz) * sz + exact_[static_cast<size_t>(j)][mask]) / 2 -
                    edges_in_[mask];
                if (cost < cluster_cost_[mask]) {
                    cluster_cost_[mask] = cost;
                    best_parts_[mask] = j;
                }
            }
        }
    }

    void recurse(int v, int num_clusters, long long inter_so_far) {
        if (inter_so_far >= best_cost_) return;
        if (v == n_) {
            if (spec_.p && num_clusters != *spec_.p) return;
            long long total = inter_so_far;
            for (int c = 0; c < num_clusters; ++c) {
                total += cluster_cost_[cluster_mask_[static_cast<size_t>(c)]];
                if (total >= best_cost_) return;
            }
            best_cost_ = total;
            best_assignment_ = assignment_;
            best_num_clusters_ = num_clusters;
            return;
        }
        if (spec_.p) {
            int capacity = *spec_.p - num_clusters;
            if (n_ - v < capacity) return;  // cannot open enough clusters
        }
        std::uint32_t bit = 1u << v;
        int limit = spec_.p ? std::min(num_clusters + 1, *spec_.p) : num_clusters + 1;
        for (int c = 0; c < limit; ++c) {
            bool fresh = c == num_clusters;
            if (fresh) cluster_mask_.push_back(0);
            std::uint32_t& mask = cluster_mask_[static_cast<size_t>(c)];
            long long delta =
                std::popcount(adj_[static_cast<size_t>(v)] & ~mask &
                              (bit - 1));  // edges from v to earlier vertices elsewhere
            mask |= bit;
            assignment_[static_cast<size_t>(v)] = c;
            recurse(v + 1, num_clusters + (fresh ? 1 : 0), inter_so_far + delta);
            mask &= ~bit;
            if (fresh) cluster_mask_.pop_back();
        }
        assignment_[static_cast<size_t>(v)] = -1;
    }

    ClusterSolution materialize_clusters() const {
        std::vector<std::uint32_t> masks(static_cast<size_t>(best_num_clusters_), 0);
        for (int v = 0; v < n_; ++v)
            masks[static_cast<size_t>(best_assignment_[static_cast<size_t>(v)])] |= 1u << v;
        ClusterSolution sol;
        for (std::uint32_t mask : masks) {
            Cluster cluster;
            if (spec_.variant == Variant::starforest) {
                if (std::popcount(mask) == 1) {
                    cluster.sides.push_back(to_list(mask));
                } else {
                    int c = star_center_[mask];
                    cluster.sides.push_back({c});
                    cluster.sides.push_back(to_list(mask ^ (1u << c)));
                }
            } else {
                std::uint32_t rest = mask;
                int j = best_parts_[mask];
                while (j > 1) {
                    std::uint32_t part = choice_[static_cast<size_t>(j)][rest];
                    cluster.sides.push_back(to_list(part));
                    rest ^= part;
                    --j;
                }
                cluster.sides.push_back(to_list(rest));
                std::sort(cluster.sides.begin(), cluster.sides.end(),
                          [](const Side& a, const Side& b) { return a.front() < b.front(); });
            }
            sol.clusters.push_back(std::move(cluster));
        }
        return sol;
    }

    static Side to_list(std::uint32_t mask) {
        Side out;
        for (std::uint32_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    const Graph& g_;
    ProblemSpec spec_;
    int n_;
    std::vector<std::uint32_t> adj_;
    std::vector<long long> edges_in_;
    std::vector<long long> cluster_cost_;
    std::vector<int> star_center_;
    std::vector<int> best_parts_;
    std::vector<std::vector<long long>> exact_;
    std::vector<std::vector<std::uint32_t>> choice_;

    long long best_cost_ = kInf;
    std::vector<int> assignment_, best_assignment_;
    std::vector<std::uint32_t> cluster_mask_;
    int best_num_clusters_ = 0;
};

struct EdgeListHash {
    size_t operator()(const std::vector<Edge>& es) const {
        std::uint64_t h = 1469598103934665603ull;
        for (const Edge& e : es) {
            h ^= static_cast<std::uint64_t>(e.u) * 1000003u + static_cast<std::uint64_t>(e.v);
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace detail

// Enumerates every partition of V into the allowed number of clusters (exactly
// p when given, any number otherwise) and all side-splits into at most t
// sides, minimizing the forced edit count. Refuses instances above max_n.
inline SolveResult oracle_partition(const Graph& g, const ProblemSpec& spec, int max_n = 10) {
    detail::PartitionOracle oracle(g, spec, max_n);
    return oracle.run();
}

// Deletion-only decision by branching on induced obstructions: one branch per
// obstruction edge. Complete for starforest ({K3,P4,C4}) and bicluster
// ({K3,P4}), whose forbidden patterns are closed under edge deletion outside
// the pattern. Branch states are memoized on the sorted deleted-edge set.
inline bool oracle_branch_deletion(const Graph& g, Variant variant, long long k,
                                   long long depth_limit = 10) {
    if (variant == Variant::tpartite)
        throw std::invalid_argument(
            "oracle_branch_deletion supports starforest and bicluster only");
    if (k < 0) throw std::invalid_argument("budget k must be non-negative");
    if (k > depth_limit)
        throw OracleLimitError("oracle_branch_deletion refused: budget above depth limit");

    Graph work = g;
    std::vector<Edge> deleted;
    std::unordered_set<std::vector<Edge>, detail::EdgeListHash> visited;

    auto obstruction_edges = [](const Obstruction& o) {
        std::vector<Edge> es;
        const auto& v = o.vertices;
        switch (o.kind) {
            case ObstructionKind::k3:
                es = {Edge(v[0], v[1]), Edge(v[0], v[2]), Edge(v[1], v[2])};
                break;
            case ObstructionKind::p4:
                es = {Edge(v[0], v[1]), Edge(v[1], v[2]), Edge(v[2], v[3])};
                break;
            case ObstructionKind::c4:
                es = {Edge(v[0], v[1]), Edge(v[1], v[2]), Edge(v[2], v[3]), Edge(v[0], v[3])};
                break;
            default:
                throw std::logic_error("unexpected obstruction kind in deletion branching");
        }
        return es;
    };

    auto rec = [&](auto&& self, long long budget) -> bool {
        auto obs = find_obstruction(work, variant);
        if (!obs) return true;
        if (budget == 0) return false;
        if (!visited.insert(deleted).second) return false;
        for (const Edge& e : obstruction_edges(*obs)) {
            work.remove_edge(e.u, e.v);
            auto it = std::lower_bound(deleted.begin(), deleted.end(), e);
            it = deleted.insert(it, e);
            bool ok = self(self, budget - 1);
            deleted.erase(std::lower_bound(deleted.begin(), deleted.end(), e));
            work.add_edge(e.u, e.v);
            if (ok) return true;
        }
        return false;
    };
    return rec(rec, k);
}

}  // namespace cek
