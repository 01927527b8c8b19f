#pragma once

#include <cstdint>
#include <unordered_map>

#include "cek/solution.hpp"

namespace cek {

// Partition of the non-isolated vertices into classes of identical open
// neighborhoods (false twins). Detection hashes the sorted adjacency list and
// confirms equality inside each bucket, so collisions cannot merge classes.
inline std::vector<std::vector<int>> twin_classes(const Graph& g) {
    const int n = g.num_vertices();
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    buckets.reserve(static_cast<size_t>(n) * 2);
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        if (nb.empty()) continue;
        std::uint64_t h = 1469598103934665603ull;
        for (int w : nb) {
            h ^= static_cast<std::uint64_t>(w) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        buckets[h].push_back(v);
    }
    std::vector<std::vector<int>> classes;
    for (auto& [h, verts] : buckets) {
        (void)h;
        std::sort(verts.begin(), verts.end(), [&](int a, int b) {
            const auto &na = g.neighbors(a), &nb = g.neighbors(b);
            if (na != nb) return na < nb;
            return a < b;
        });
        size_t i = 0;
        while (i < verts.size()) {
            size_t j = i;
            while (j < verts.size() &&
                   g.neighbors(verts[j]) == g.neighbors(verts[i]))
                ++j;
            classes.emplace_back(verts.begin() + static_cast<long>(i),
                                 verts.begin() + static_cast<long>(j));
            i = j;
        }
    }
    std::sort(classes.begin(), classes.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return classes;
}

enum class KernelVerdict { reduced, rejected_too_many_components, rejected_too_large };

inline std::string kernel_verdict_name(KernelVerdict v) {
    switch (v) {
        case KernelVerdict::reduced: return "reduced";
        case KernelVerdict::rejected_too_many_components: return "rejected-too-many-components";
        case KernelVerdict::rejected_too_large: return "rejected-too-large";
    }
    return "?";
}

struct KernelResult {
    Graph reduced;
    std::vector<int> removed;  // original ids, sorted
    std::vector<int> kept;     // kept[i] = original id of reduced vertex i
    KernelVerdict verdict = KernelVerdict::reduced;
};

// Twin-class truncation: every non-isolate twin class of size at least 2k+2
// keeps only its 2k+1 smallest members. One pass is exhaustive, since class
// membership is untouched by removing whole-class tails.
inline KernelResult apply_rule_twins(const Graph& g, long long k) {
    if (k < 0) throw std::invalid_argument("budget k must be non-negative");
    const int n = g.num_vertices();
    const long long keep_cap = 2 * k + 1;
    std::vector<bool> drop(static_cast<size_t>(n), false);
    for (const auto& cls : twin_classes(g)) {
        if (static_cast<long long>(cls.size()) < keep_cap + 1) continue;
        for (size_t i = static_cast<size_t>(keep_cap); i < cls.size(); ++i)
            drop[static_cast<size_t>(cls[i])] = true;
    }
    KernelResult res{Graph(0), {}, {}, KernelVerdict::reduced};
    res.kept.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        (drop[static_cast<size_t>(v)] ? res.removed : res.kept).push_back(v);
    res.reduced = induced_subgraph(g, res.kept);
    return res;
}

enum class Precheck { pass, too_many_components, too_large };

inline std::string precheck_name(Precheck p) {
    switch (p) {
        case Precheck::pass: return "pass";
        case Precheck::too_many_components: return "too-many-components";
        case Precheck::too_large: return "too-large";
    }
    return "?";
}

// Structural no-instance tests. A yes-instance has at most p+k components
// (every merge costs an addition), and once the twin rule is exhausted it has
// at most p*t*(2k+1) + 2k vertices. Expects spec.p to be present and the
// graph to be twin-reduced for the size test.
inline Precheck precheck(const Graph& reduced, const ProblemSpec& spec) {
    spec.validate();
    if (!spec.p) throw std::invalid_argument("precheck requires a component bound p");
    long long p = *spec.p;
    long long comps = static_cast<long long>(connected_components(reduced).size());
    if (comps > p + spec.k) return Precheck::too_many_components;
    long long bound = p * spec.t * (2 * spec.k + 1) + 2 * spec.k;
    if (reduced.num_vertices() > bound) return Precheck::too_large;
    return Precheck::pass;
}

// Rule application plus the prechecks, folded into one verdict.
inline KernelResult kernelize(const Graph& g, const ProblemSpec& spec) {
    spec.validate();
    KernelResult res = apply_rule_twins(g, spec.k);
    switch (precheck(res.reduced, spec)) {
        case Precheck::pass: break;
        case Precheck::too_many_components:
            res.verdict = KernelVerdict::rejected_too_many_components;
            break;
        case Precheck::too_large:
            res.verdict = KernelVerdict::rejected_too_large;
            break;
    }
    return res;
}

}  // namespace cek
