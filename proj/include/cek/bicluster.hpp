#pragma once

#include <cmath>
#include <limits>
#include <optional>

#include "cek/kernel.hpp"
#include "cek/solution.hpp"

namespace cek {

// Bipartite graph with a declared independent side A, partitioned into the
// intended left sides of the clusters.
struct AnnotatedInstance {
    Graph graph;
    std::vector<std::vector<int>> partition_a;
    long long k = 0;
};

// Cost of placing v into the cluster with left side a_side:
// |A_i| - 2*deg_{A_i}(v) + deg(v), i.e. the missing edges into A_i plus the
// edges leaving it. a_side must be sorted and must not contain v.
inline long long abe_cost(int v, const std::vector<int>& a_side, const Graph& g) {
    const auto& nb = g.neighbors(v);
    size_t i = 0, j = 0;
    long long hits = 0;
    while (i < nb.size() && j < a_side.size()) {
        if (nb[i] < a_side[j])
            ++i;
        else if (nb[i] > a_side[j])
            ++j;
        else {
            ++hits;
            ++i;
            ++j;
        }
    }
    return static_cast<long long>(a_side.size()) - 2 * hits + g.degree(v);
}

namespace detail {

constexpr long long kSolveInf = std::numeric_limits<long long>::max() / 4;

inline long long isqrt_floor(long long x) {
    if (x < 0) throw std::invalid_argument("isqrt of negative value");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline std::vector<int> sorted_sym_diff(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

// Per-vertex placement costs plus the greedy argmin (smallest index on ties).
struct AbeAssignment {
    long long total = 0;
    std::vector<int> choice;
    std::vector<std::vector<long long>> cost;
};

// Optimal assignment under the constraint that every cluster in `mandatory`
// receives at least one vertex (a left side of two or more vertices is not a
// connected biclique on its own). Subset DP over the mandatory clusters; the
// plain greedy exchange argument ignores the component count and can strand
// a left side.
inline std::optional<std::pair<long long, std::vector<int>>> covered_assignment(
    const AbeAssignment& assign, const std::vector<char>& mandatory) {
    std::vector<int> mand_ids;
    for (size_t i = 0; i < mandatory.size(); ++i)
        if (mandatory[i]) mand_ids.push_back(static_cast<int>(i));
    const size_t nb = assign.choice.size();
    const int m = static_cast<int>(mand_ids.size());
    if (m == 0) return std::make_pair(assign.total, assign.choice);
    if (static_cast<size_t>(m) > nb) return std::nullopt;
    if (m > 14) throw std::invalid_argument("too many wide clusters for covered assignment");

    const size_t full = size_t{1} << m;
    std::vector<std::vector<long long>> table(nb + 1, std::vector<long long>(full, kSolveInf));
    std::vector<std::vector<std::pair<std::uint32_t, int>>> prev(
        nb + 1, std::vector<std::pair<std::uint32_t, int>>(full, {0, -1}));
    table[0][0] = 0;
    for (size_t bi = 0; bi < nb; ++bi) {
        for (size_t st = 0; st < full; ++st) {
            if (table[bi][st] >= kSolveInf) continue;
            auto relax = [&](int c) {
                size_t st2 = st;
                for (int mi = 0; mi < m; ++mi)
                    if (mand_ids[static_cast<size_t>(mi)] == c) st2 |= size_t{1} << mi;
                long long val = table[bi][st] + assign.cost[bi][static_cast<size_t>(c)];
                if (val < table[bi + 1][st2]) {
                    table[bi + 1][st2] = val;
                    prev[bi + 1][st2] = {static_cast<std::uint32_t>(st), c};
                }
            };
            relax(assign.choice[bi]);
            for (int c : mand_ids) relax(c);
        }
    }
    if (table[nb][full - 1] >= kSolveInf) return std::nullopt;
    std::vector<int> choice(nb, -1);
    size_t st = full - 1;
    for (size_t bi = nb; bi-- > 0;) {
        auto [pst, c] = prev[bi + 1][st];
        choice[bi] = c;
        st = pst;
    }
    return std::make_pair(table[nb][full - 1], choice);
}

}  // namespace detail

// Greedy linear-time solver for the annotated problem: each right-side vertex
// goes to a cluster of minimum placement cost independently (smallest index
// on ties).
inline SolveResult solve_annotated(const AnnotatedInstance& inst) {
    const Graph& g = inst.graph;
    const int n = g.num_vertices();
    if (inst.k < 0) throw std::invalid_argument("budget k must be non-negative");
    std::vector<int> side_of(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < inst.partition_a.size(); ++i) {
        if (inst.partition_a[i].empty())
            throw std::invalid_argument("annotated partition has an empty class");
        for (int v : inst.partition_a[i]) {
            if (v < 0 || v >= n || side_of[static_cast<size_t>(v)] != -1)
                throw std::invalid_argument("annotated partition is not a partition of A");
            side_of[static_cast<size_t>(v)] = static_cast<int>(i);
        }
    }
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (u >= v) continue;
            bool ua = side_of[static_cast<size_t>(u)] != -1;
            bool va = side_of[static_cast<size_t>(v)] != -1;
            if (ua == va)
                throw std::invalid_argument(
                    "annotated instance must be bipartite with A independent");
        }

    const size_t p = inst.partition_a.size();
    std::vector<size_t> a_size(p);
    size_t cheapest = 0;
    for (size_t i = 0; i < p; ++i) {
        a_size[i] = inst.partition_a[i].size();
        if (a_size[i] < a_size[cheapest]) cheapest = i;
    }

    SolveResult res;
    res.cost = 0;
    std::vector<std::vector<int>> rights(p);
    std::vector<long long> hits(p, 0);
    for (int v = 0; v < n; ++v) {
        if (side_of[static_cast<size_t>(v)] != -1) continue;
        const auto& nb = g.neighbors(v);
        std::vector<int> touched;
        for (int w : nb) {
            int i = side_of[static_cast<size_t>(w)];
            if (hits[static_cast<size_t>(i)] == 0) touched.push_back(i);
            ++hits[static_cast<size_t>(i)];
        }
        // argmin over touched clusters and the globally smallest left side
        long long best = static_cast<long long>(a_size[cheapest]);
        int best_i = static_cast<int>(cheapest);
        for (int i : touched) {
            long long val = static_cast<long long>(a_size[static_cast<size_t>(i)]) -
                            2 * hits[static_cast<size_t>(i)];
            if (val < best || (val == best && i < best_i)) {
                best = val;
                best_i = i;
            }
        }
        res.cost += best + static_cast<long long>(nb.size());
        rights[static_cast<size_t>(best_i)].push_back(v);
        for (int w : inst.partition_a[static_cast<size_t>(best_i)])
            if (!g.has_edge(v, w)) res.edits.additions.emplace_back(v, w);
        for (int w : nb)
            if (side_of[static_cast<size_t>(w)] != best_i) res.edits.deletions.emplace_back(v, w);
        for (int i : touched) hits[static_cast<size_t>(i)] = 0;
    }
    res.yes = res.cost <= inst.k;
    res.edits.normalize();
    for (size_t i = 0; i < p; ++i) {
        Cluster c;
        c.sides.push_back(inst.partition_a[i]);
        std::sort(c.sides.back().begin(), c.sides.back().end());
        if (!rights[i].empty()) c.sides.push_back(std::move(rights[i]));
        res.clusters.clusters.push_back(std::move(c));
    }
    return res;
}

namespace detail {

// Guess enumeration for exactly-p biclique editing on the kernel graph.
// Small bicliques are represented by their smaller side (at most isqrt(k)
// vertices), large ones by a cheap vertex whose edited neighborhood (at most
// isqrt(k) touched pairs) reveals the opposite side. Every completed guess is
// finished with the annotated assignment and verified.
class BiclusterSearch {
public:
    BiclusterSearch(const Graph& reduced, int p, long long k)
        : g_(reduced), n_(reduced.num_vertices()), p_(p), k_(k) {
        q_cap_ = isqrt_floor(k);
        big_min_ = isqrt_floor(4 * k) + 1;
        used_.assign(static_cast<size_t>(n_), 0);
    }

    bool run() {
        for (int ps = p_; ps >= 0; --ps) {
            ps_ = ps;
            pl_ = p_ - ps;
            if (static_cast<long long>(pl_) * big_min_ + ps_ > n_) continue;
            enumerate_smalls(0);
        }
        return best_cost_ < kSolveInf;
    }

    long long best_cost() const { return best_cost_; }
    const EditSet& best_edits() const { return best_edits_; }

private:
    void enumerate_smalls(int start) {
        if (static_cast<int>(smalls_.size()) == ps_) {
            enumerate_seeds(-1);
            return;
        }
        int slots_left = ps_ - static_cast<int>(smalls_.size());
        for (int first = start; first + slots_left <= n_; ++first) {
            if (used_[static_cast<size_t>(first)]) continue;
            used_[static_cast<size_t>(first)] = 1;
            smalls_.push_back({first});
            grow_small(first + 1);
            smalls_.pop_back();
            used_[static_cast<size_t>(first)] = 0;
        }
    }

    void grow_small(int from) {
        enumerate_smalls(smalls_.back().front() + 1);
        if (static_cast<long long>(smalls_.back().size()) >= q_cap_) return;
        for (int v = from; v < n_; ++v) {
            if (used_[static_cast<size_t>(v)]) continue;
            used_[static_cast<size_t>(v)] = 1;
            smalls_.back().push_back(v);
            grow_small(v + 1);
            smalls_.back().pop_back();
            used_[static_cast<size_t>(v)] = 0;
        }
    }

    void enumerate_seeds(int prev) {
        if (static_cast<int>(seeds_.size()) == pl_) {
            evaluate();
            return;
        }
        for (int v = prev + 1; v < n_; ++v) {
            if (used_[static_cast<size_t>(v)]) continue;
            used_[static_cast<size_t>(v)] = 1;
            seeds_.push_back(v);
            edit_set_.clear();
            enumerate_edit_sets(v, 0);
            seeds_.pop_back();
            used_[static_cast<size_t>(v)] = 0;
        }
    }

    void enumerate_edit_sets(int v, int from) {
        try_seed_left(v);
        if (static_cast<long long>(edit_set_.size()) >= q_cap_) return;
        for (int w = from; w < n_; ++w) {
            if (w == v) continue;
            edit_set_.push_back(w);
            enumerate_edit_sets(v, w + 1);
            edit_set_.pop_back();
        }
    }

    void try_seed_left(int v) {
        std::vector<int> left = sorted_sym_diff(g_.neighbors(v), edit_set_);
        // An empty opposite side means the seed is a singleton cluster.
        if (left.empty()) left = {v};
        for (int w : left)
            if (w != v && used_[static_cast<size_t>(w)]) return;
        for (int w : left)
            if (w != v) used_[static_cast<size_t>(w)] = 1;
        seed_lefts_.push_back(left);
        enumerate_seeds(seeds_.back());
        seed_lefts_.pop_back();
        for (int w : left)
            if (w != v) used_[static_cast<size_t>(w)] = 0;
    }

    void evaluate() {
        std::vector<std::vector<int>> lefts = smalls_;
        lefts.insert(lefts.end(), seed_lefts_.begin(), seed_lefts_.end());
        for (auto& a : lefts) std::sort(a.begin(), a.end());
        std::sort(lefts.begin(), lefts.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      return a.front() < b.front();
                  });
        std::vector<int> side_of(static_cast<size_t>(n_), -1);
        for (size_t i = 0; i < lefts.size(); ++i)
            for (int v : lefts[i]) side_of[static_cast<size_t>(v)] = static_cast<int>(i);

        // Everything inside the union of lefts and inside B gets deleted.
        long long charge = 0;
        std::vector<int> b_vertices;
        for (int v = 0; v < n_; ++v)
            if (side_of[static_cast<size_t>(v)] == -1) b_vertices.push_back(v);
        for (int u = 0; u < n_; ++u)
            for (int w : g_.neighbors(u)) {
                if (u >= w) continue;
                bool ua = side_of[static_cast<size_t>(u)] != -1;
                bool wa = side_of[static_cast<size_t>(w)] != -1;
                if (ua == wa) ++charge;
            }
        if (charge > k_) return;

        AbeAssignment assign;
        assign.choice.resize(b_vertices.size());
        assign.cost.resize(b_vertices.size());
        for (size_t bi = 0; bi < b_vertices.size(); ++bi) {
            int v = b_vertices[bi];
            std::vector<long long> hits(lefts.size(), 0);
            long long res_deg = 0;
            for (int w : g_.neighbors(v)) {
                int i = side_of[static_cast<size_t>(w)];
                if (i != -1) {
                    ++hits[static_cast<size_t>(i)];
                    ++res_deg;
                }
            }
            auto& row = assign.cost[bi];
            row.resize(lefts.size());
            long long best = kSolveInf;
            int best_i = -1;
            for (size_t i = 0; i < lefts.size(); ++i) {
                row[i] = static_cast<long long>(lefts[i].size()) - 2 * hits[i] + res_deg;
                if (row[i] < best) {
                    best = row[i];
                    best_i = static_cast<int>(i);
                }
            }
            assign.choice[bi] = best_i;
            assign.total += best;
        }

        std::vector<char> mandatory(lefts.size(), 0);
        for (size_t i = 0; i < lefts.size(); ++i) mandatory[i] = lefts[i].size() >= 2 ? 1 : 0;
        auto covered = covered_assignment(assign, mandatory);
        if (!covered) return;
        long long total = charge + covered->first;
        if (total > k_ || total >= best_cost_) return;

        std::vector<std::vector<int>> rights(lefts.size());
        for (size_t bi = 0; bi < b_vertices.size(); ++bi)
            rights[static_cast<size_t>(covered->second[bi])].push_back(b_vertices[bi]);
        ClusterSolution sol;
        for (size_t i = 0; i < lefts.size(); ++i) {
            if (rights[i].empty() && lefts[i].size() >= 2)
                throw std::logic_error("covered assignment stranded a wide left side");
            Cluster c;
            c.sides.push_back(lefts[i]);
            if (!rights[i].empty()) c.sides.push_back(std::move(rights[i]));
            sol.clusters.push_back(std::move(c));
        }
        EditSet edits = edits_realizing(g_, sol);
        if (edits.size() != total)
            throw std::logic_error("bicluster branch bookkeeping mismatch");
        best_cost_ = total;
        best_edits_ = std::move(edits);
    }

    const Graph& g_;
    int n_, p_;
    long long k_;
    long long q_cap_ = 0, big_min_ = 0;
    int ps_ = 0, pl_ = 0;
    std::vector<std::vector<int>> smalls_, seed_lefts_;
    std::vector<int> seeds_, edit_set_;
    std::vector<char> used_;
    long long best_cost_ = kSolveInf;
    EditSet best_edits_;
};

// Maps a reduced-graph solution back to the original ids and certifies it.
// Removed twins re-enter next to an untouched kept class member for free,
// which the final recognition pass recovers on its own.
inline SolveResult lift_and_certify(const Graph& original, const KernelResult& kern,
                                    const EditSet& reduced_edits, long long cost,
                                    Variant variant, int t, int p) {
    EditSet lifted;
    for (const Edge& e : reduced_edits.additions)
        lifted.additions.emplace_back(kern.kept[static_cast<size_t>(e.u)],
                                      kern.kept[static_cast<size_t>(e.v)]);
    for (const Edge& e : reduced_edits.deletions)
        lifted.deletions.emplace_back(kern.kept[static_cast<size_t>(e.u)],
                                      kern.kept[static_cast<size_t>(e.v)]);
    lifted.normalize();
    if (lifted.size() != cost)
        throw std::logic_error("solver assembly does not match the computed optimum");
    auto rec = recognize(apply_edits(original, lifted), variant, t);
    if (!rec || static_cast<int>(rec->clusters.size()) != p)
        throw std::logic_error("solver assembly failed certification");
    return SolveResult{true, cost, std::move(lifted), std::move(*rec)};
}

// Vertex-by-vertex guess enumeration for the t-partite case. Each vertex
// becomes a member of an explicit small side, a cheap seed of a large side,
// or is deferred to the completion pool. Clusters with one seeded side take
// completion vertices greedily; clusters with two or more seeded sides are
// reconstructed exactly from the seeds' edited neighborhoods.
class TPartiteSearch {
public:
    TPartiteSearch(const Graph& reduced, int t, int p, long long k)
        : g_(reduced), n_(reduced.num_vertices()), t_(t), p_(p), k_(k) {
        s_cap_ = isqrt_floor(4 * k);  // small sides have at most 2*sqrt(k) vertices
        q_cap_ = isqrt_floor(k);      // cheap seeds carry at most sqrt(k) edits
        cluster_of_.assign(static_cast<size_t>(n_), kUnset);
        side_of_.assign(static_cast<size_t>(n_), -1);
        clusters_.reserve(static_cast<size_t>(p_));  // keeps references stable
    }

    bool run() {
        descend(0);
        return best_cost_ < kSolveInf;
    }

    long long best_cost() const { return best_cost_; }
    const EditSet& best_edits() const { return best_edits_; }

private:
    static constexpr int kUnset = -1;
    static constexpr int kPool = -2;

    struct SideState {
        bool seeded = false;
        std::vector<int> members;
    };
    struct ClusterState {
        std::vector<SideState> sides;
        int assigned = 0;
        int seed_count = 0;
    };

    long long assign_delta(int v, int c, int s) const {
        long long same_side = 0, other_side = 0, elsewhere = 0;
        for (int w : g_.neighbors(v)) {
            int cw = cluster_of_[static_cast<size_t>(w)];
            if (cw < 0) continue;
            if (cw != c)
                ++elsewhere;
            else if (side_of_[static_cast<size_t>(w)] == s)
                ++same_side;
            else
                ++other_side;
        }
        const ClusterState& cs = clusters_[static_cast<size_t>(c)];
        long long side_size =
            s < static_cast<int>(cs.sides.size())
                ? static_cast<long long>(cs.sides[static_cast<size_t>(s)].members.size())
                : 0;
        long long additions = (cs.assigned - side_size) - other_side;
        return same_side + elsewhere + additions;
    }

    void place(int v, int c, int s, long long delta) {
        cluster_of_[static_cast<size_t>(v)] = c;
        side_of_[static_cast<size_t>(v)] = s;
        clusters_[static_cast<size_t>(c)].sides[static_cast<size_t>(s)].members.push_back(v);
        ++clusters_[static_cast<size_t>(c)].assigned;
        prefix_ += delta;
    }

    void unplace(int v, int c, int s, long long delta) {
        prefix_ -= delta;
        --clusters_[static_cast<size_t>(c)].assigned;
        clusters_[static_cast<size_t>(c)].sides[static_cast<size_t>(s)].members.pop_back();
        cluster_of_[static_cast<size_t>(v)] = kUnset;
        side_of_[static_cast<size_t>(v)] = -1;
    }

    void descend(int v) {
        if (prefix_ > k_ || prefix_ >= best_cost_) return;
        if (v == n_) {
            finalize();
            return;
        }
        int open = static_cast<int>(clusters_.size());
        if (open + (n_ - v) < p_) return;  // not enough vertices left to open clusters
        // every seeded side eventually holds more than s_cap vertices
        if (total_seed_sides_ * s_cap_ >
            static_cast<long long>(pool_.size()) + (n_ - v))
            return;

        // existing small sides
        for (int c = 0; c < open; ++c) {
            auto& cs = clusters_[static_cast<size_t>(c)];
            for (int s = 0; s < static_cast<int>(cs.sides.size()); ++s) {
                auto& side = cs.sides[static_cast<size_t>(s)];
                if (side.seeded) continue;
                if (static_cast<long long>(side.members.size()) >= s_cap_) continue;
                long long d = assign_delta(v, c, s);
                place(v, c, s, d);
                descend(v + 1);
                unplace(v, c, s, d);
            }
        }
        // new small side in an existing cluster
        if (s_cap_ >= 1) {
            for (int c = 0; c < open; ++c) {
                auto& cs = clusters_[static_cast<size_t>(c)];
                if (static_cast<int>(cs.sides.size()) >= t_) continue;
                int s = static_cast<int>(cs.sides.size());
                cs.sides.push_back({false, {}});
                long long d = assign_delta(v, c, s);
                place(v, c, s, d);
                descend(v + 1);
                unplace(v, c, s, d);
                cs.sides.pop_back();
            }
            // new cluster with a small side
            if (open < p_) {
                clusters_.push_back({});
                clusters_.back().sides.push_back({false, {}});
                long long d = assign_delta(v, open, 0);
                place(v, open, 0, d);
                descend(v + 1);
                unplace(v, open, 0, d);
                clusters_.pop_back();
            }
        }
        // seed of a fresh large side in an existing cluster
        for (int c = 0; c < open; ++c) {
            auto& cs = clusters_[static_cast<size_t>(c)];
            if (static_cast<int>(cs.sides.size()) >= t_) continue;
            int s = static_cast<int>(cs.sides.size());
            cs.sides.push_back({true, {}});
            ++cs.seed_count;
            ++total_seed_sides_;
            long long d = assign_delta(v, c, s);
            place(v, c, s, d);
            descend(v + 1);
            unplace(v, c, s, d);
            --total_seed_sides_;
            --cs.seed_count;
            cs.sides.pop_back();
        }
        // seed of a fresh cluster
        if (open < p_) {
            clusters_.push_back({});
            clusters_.back().sides.push_back({true, {}});
            clusters_.back().seed_count = 1;
            ++total_seed_sides_;
            long long d = assign_delta(v, open, 0);
            place(v, open, 0, d);
            descend(v + 1);
            unplace(v, open, 0, d);
            --total_seed_sides_;
            clusters_.pop_back();
        }
        // defer to the completion pool
        cluster_of_[static_cast<size_t>(v)] = kPool;
        pool_.push_back(v);
        descend(v + 1);
        pool_.pop_back();
        cluster_of_[static_cast<size_t>(v)] = kUnset;
    }

    struct EnumSeed {
        int cluster;
        int side;
        int seed;
    };

    void finalize() {
        if (static_cast<int>(clusters_.size()) != p_) return;
        // classify clusters, derive the forced edit sets of lonely seeds
        enum_seeds_.clear();
        lonely_targets_.clear();
        for (int c = 0; c < p_; ++c) {
            const auto& cs = clusters_[static_cast<size_t>(c)];
            std::vector<int> small_union;
            int seed_sides = 0;
            for (const auto& side : cs.sides) {
                if (side.seeded)
                    ++seed_sides;
                else
                    small_union.insert(small_union.end(), side.members.begin(),
                                       side.members.end());
            }
            std::sort(small_union.begin(), small_union.end());
            if (seed_sides == 0) {
                // fully explicit cluster; a single side is only a singleton
                if (cs.sides.size() == 1 && cs.assigned >= 2) return;
            } else if (seed_sides == 1) {
                int s = -1, seed = -1;
                for (size_t i = 0; i < cs.sides.size(); ++i)
                    if (cs.sides[i].seeded) {
                        s = static_cast<int>(i);
                        seed = cs.sides[i].members.front();
                    }
                // the seed's solution neighborhood is exactly the small union
                auto edits = sorted_sym_diff(g_.neighbors(seed), small_union);
                if (static_cast<long long>(edits.size()) > q_cap_) return;
                if (!small_union.empty()) lonely_targets_.push_back({c, s, seed});
                // no smalls: frozen singleton candidate, takes no joiners
            } else {
                for (size_t i = 0; i < cs.sides.size(); ++i)
                    if (cs.sides[i].seeded)
                        enum_seeds_.push_back({c, static_cast<int>(i), cs.sides[i].members.front()});
            }
        }
        if (enum_seeds_.empty()) {
            evaluate({});
            return;
        }
        // enumerate the edited neighborhoods of seeds in multi-seed clusters
        std::vector<std::vector<int>> chosen(enum_seeds_.size());
        enum_edit_choices(0, chosen);
    }

    void enum_edit_choices(size_t idx, std::vector<std::vector<int>>& chosen) {
        if (idx == enum_seeds_.size()) {
            evaluate(chosen);
            return;
        }
        std::vector<int> current;
        enum_subsets(idx, 0, current, chosen);
    }

    void enum_subsets(size_t idx, int from, std::vector<int>& current,
                      std::vector<std::vector<int>>& chosen) {
        chosen[idx] = current;
        enum_edit_choices(idx + 1, chosen);
        if (static_cast<long long>(current.size()) >= q_cap_) return;
        for (int w = from; w < n_; ++w) {
            if (w == enum_seeds_[idx].seed) continue;
            current.push_back(w);
            enum_subsets(idx, w + 1, current, chosen);
            current.pop_back();
        }
    }

    // Evaluate one completed guess: recover multi-seed clusters from the
    // chosen edited neighborhoods, pre-charge pool-internal edges, complete
    // the pool into lonely seeded sides, then materialize and verify.
    void evaluate(const std::vector<std::vector<int>>& seed_edits) {
        std::vector<int> lab = cluster_of_;
        std::vector<int> sid = side_of_;
        std::vector<int> assigned_in(static_cast<size_t>(p_), 0);
        std::vector<std::vector<std::vector<int>>> members(static_cast<size_t>(p_));
        for (int c = 0; c < p_; ++c) {
            const auto& cs = clusters_[static_cast<size_t>(c)];
            assigned_in[static_cast<size_t>(c)] = cs.assigned;
            members[static_cast<size_t>(c)].resize(cs.sides.size());
            for (size_t s = 0; s < cs.sides.size(); ++s)
                members[static_cast<size_t>(c)][s] = cs.sides[s].members;
        }
        long long total = prefix_;

        auto delta_local = [&](int v, int c, int s) {
            long long same_side = 0, other_side = 0, elsewhere = 0;
            for (int w : g_.neighbors(v)) {
                int cw = lab[static_cast<size_t>(w)];
                if (cw < 0) continue;
                if (cw != c)
                    ++elsewhere;
                else if (sid[static_cast<size_t>(w)] == s)
                    ++same_side;
                else
                    ++other_side;
            }
            long long side_size =
                static_cast<long long>(members[static_cast<size_t>(c)][static_cast<size_t>(s)].size());
            long long additions = (assigned_in[static_cast<size_t>(c)] - side_size) - other_side;
            return same_side + elsewhere + additions;
        };
        auto place_local = [&](int v, int c, int s) {
            lab[static_cast<size_t>(v)] = c;
            sid[static_cast<size_t>(v)] = s;
            members[static_cast<size_t>(c)][static_cast<size_t>(s)].push_back(v);
            ++assigned_in[static_cast<size_t>(c)];
        };

        if (!enum_seeds_.empty()) {
            // solution neighborhoods of the guessing seeds
            std::vector<std::vector<int>> nh(enum_seeds_.size());
            for (size_t i = 0; i < enum_seeds_.size(); ++i)
                nh[i] = sorted_sym_diff(g_.neighbors(enum_seeds_[i].seed), seed_edits[i]);
            // recover each seeded side as the intersection of the other
            // seeds' neighborhoods within the same cluster, minus the smalls
            for (size_t i = 0; i < enum_seeds_.size(); ++i) {
                int c = enum_seeds_[i].cluster;
                std::vector<int> inter;
                bool first = true;
                for (size_t j = 0; j < enum_seeds_.size(); ++j) {
                    if (j == i || enum_seeds_[j].cluster != c) continue;
                    if (first) {
                        inter = nh[j];
                        first = false;
                    } else {
                        std::vector<int> tmp;
                        std::set_intersection(inter.begin(), inter.end(), nh[j].begin(),
                                              nh[j].end(), std::back_inserter(tmp));
                        inter.swap(tmp);
                    }
                }
                // strip everything already assigned to this cluster's sides
                std::vector<int> recovered;
                for (int w : inter)
                    if (!(lab[static_cast<size_t>(w)] == c &&
                          sid[static_cast<size_t>(w)] != enum_seeds_[i].side))
                        recovered.push_back(w);
                // must contain the seed, be large, and claim only pool vertices
                if (static_cast<long long>(recovered.size()) <= s_cap_) return;
                bool seed_in = false;
                for (int w : recovered) {
                    if (w == enum_seeds_[i].seed) {
                        seed_in = true;
                        continue;
                    }
                    if (lab[static_cast<size_t>(w)] != kPool) return;
                }
                if (!seed_in) return;
                for (int w : recovered) {
                    if (w == enum_seeds_[i].seed) continue;
                    total += delta_local(w, c, enum_seeds_[i].side);
                    if (total > k_) return;
                    place_local(w, c, enum_seeds_[i].side);
                }
            }
            // full consistency: each seed must see exactly its cluster minus
            // its own side
            for (size_t i = 0; i < enum_seeds_.size(); ++i) {
                int c = enum_seeds_[i].cluster;
                long long expect = assigned_in[static_cast<size_t>(c)] -
                                   static_cast<long long>(
                                       members[static_cast<size_t>(c)]
                                              [static_cast<size_t>(enum_seeds_[i].side)]
                                                  .size());
                if (static_cast<long long>(nh[i].size()) != expect) return;
                for (int w : nh[i])
                    if (lab[static_cast<size_t>(w)] != c ||
                        sid[static_cast<size_t>(w)] == enum_seeds_[i].side)
                        return;
            }
        }

        // residual pool: all pairwise edges inside it are deleted
        std::vector<int> rest;
        for (int v : pool_)
            if (lab[static_cast<size_t>(v)] == kPool) rest.push_back(v);
        for (int v : rest)
            for (int w : g_.neighbors(v))
                if (w > v && lab[static_cast<size_t>(w)] == kPool) ++total;
        if (total > k_ || total >= best_cost_) return;

        if (!rest.empty() && lonely_targets_.empty()) return;
        std::vector<std::pair<int, int>> placement(rest.size());
        for (size_t ri = 0; ri < rest.size(); ++ri) {
            int v = rest[ri];
            long long best = kSolveInf;
            std::pair<int, int> where{-1, -1};
            for (const EnumSeed& tgt : lonely_targets_) {
                long long d = delta_local(v, tgt.cluster, tgt.side);
                if (d < best) {
                    best = d;
                    where = {tgt.cluster, tgt.side};
                }
            }
            total += best;
            if (total > k_ || total >= best_cost_) return;
            placement[ri] = where;
        }
        for (size_t ri = 0; ri < rest.size(); ++ri)
            place_local(rest[ri], placement[ri].first, placement[ri].second);

        ClusterSolution sol;
        for (int c = 0; c < p_; ++c) {
            Cluster cl;
            for (auto& side : members[static_cast<size_t>(c)]) {
                if (side.empty()) return;
                std::sort(side.begin(), side.end());
                cl.sides.push_back(side);
            }
            sol.clusters.push_back(std::move(cl));
        }
        EditSet edits = edits_realizing(g_, sol);
        if (edits.size() != total)
            throw std::logic_error("t-partite branch bookkeeping mismatch");
        auto rec = recognize(apply_edits(g_, edits), Variant::tpartite, t_);
        if (!rec || static_cast<int>(rec->clusters.size()) != p_) return;
        best_cost_ = total;
        best_edits_ = std::move(edits);
    }

    const Graph& g_;
    int n_, t_, p_;
    long long k_;
    long long s_cap_ = 0, q_cap_ = 0;
    std::vector<int> cluster_of_, side_of_, pool_;
    std::vector<ClusterState> clusters_;
    long long prefix_ = 0;
    long long total_seed_sides_ = 0;
    std::vector<EnumSeed> enum_seeds_, lonely_targets_;
    long long best_cost_ = kSolveInf;
    EditSet best_edits_;
};

}  // namespace detail

// Exact solver for editing to exactly p bicliques within budget k.
inline SolveResult solve_p_bicluster(const Graph& g, int p, long long k) {
    if (p < 1) throw std::invalid_argument("p must be at least 1");
    if (k < 0) throw std::invalid_argument("budget k must be non-negative");
    const int n = g.num_vertices();
    if (p > n) return SolveResult::no_instance();

    ProblemSpec spec{Variant::bicluster, 2, p, k};
    KernelResult kern = kernelize(g, spec);
    if (kern.verdict != KernelVerdict::reduced) return SolveResult::no_instance();

    if (k == 0) {
        auto rec = recognize(g, Variant::bicluster);
        if (rec && static_cast<int>(rec->clusters.size()) == p)
            return SolveResult{true, 0, {}, std::move(*rec)};
        return SolveResult::no_instance();
    }

    detail::BiclusterSearch search(kern.reduced, p, k);
    if (!search.run()) return SolveResult::no_instance();
    return detail::lift_and_certify(g, kern, search.best_edits(), search.best_cost(),
                                    Variant::bicluster, 2, p);
}

// Exact solver for editing to exactly p complete t-partite graphs.
inline SolveResult solve_t_partite(const Graph& g, int t, int p, long long k) {
    if (t < 2) throw std::invalid_argument("t must be at least 2");
    if (p < 1) throw std::invalid_argument("p must be at least 1");
    if (k < 0) throw std::invalid_argument("budget k must be non-negative");
    const int n = g.num_vertices();
    if (p > n) return SolveResult::no_instance();

    ProblemSpec spec{Variant::tpartite, t, p, k};
    KernelResult kern = kernelize(g, spec);
    if (kern.verdict != KernelVerdict::reduced) return SolveResult::no_instance();

    if (k == 0) {
        auto rec = recognize(g, Variant::tpartite, t);
        if (rec && static_cast<int>(rec->clusters.size()) == p)
            return SolveResult{true, 0, {}, std::move(*rec)};
        return SolveResult::no_instance();
    }

    detail::TPartiteSearch search(kern.reduced, t, p, k);
    if (!search.run()) return SolveResult::no_instance();
    return detail::lift_and_certify(g, kern, search.best_edits(), search.best_cost(),
                                    Variant::tpartite, t, p);
}

}  // namespace cek
