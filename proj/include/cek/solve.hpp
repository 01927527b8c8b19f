#pragma once

#include "cek/bicluster.hpp"
#include "cek/oracle.hpp"
#include "cek/starforest.hpp"

namespace cek {

// Routes a fully-specified problem to the matching exact solver.
inline SolveResult solve(const Graph& g, const ProblemSpec& spec) {
    spec.validate();
    if (!spec.p) throw std::invalid_argument("the solvers need a component bound p");
    switch (spec.variant) {
        case Variant::starforest: return solve_p_starforest(g, *spec.p, spec.k);
        case Variant::bicluster: return solve_p_bicluster(g, *spec.p, spec.k);
        case Variant::tpartite: return solve_t_partite(g, spec.t, *spec.p, spec.k);
    }
    throw std::logic_error("unknown variant");
}

// Relaxation to "at most p" clusters: best exact-p' answer over p' <= p.
inline SolveResult solve_at_most_p(const Graph& g, const ProblemSpec& spec) {
    spec.validate();
    if (!spec.p) throw std::invalid_argument("the solvers need a component bound p");
    SolveResult best = SolveResult::no_instance();
    for (int pp = 1; pp <= *spec.p; ++pp) {
        ProblemSpec sub = spec;
        sub.p = pp;
        SolveResult r = solve(g, sub);
        if (r.yes && (!best.yes || r.cost < best.cost)) best = std::move(r);
    }
    return best;
}

// Minimal budget with a yes answer, scanning k upward; nullopt when even the
// full pair budget cannot reach the class (p larger than n).
inline std::optional<long long> solver_optimum(const Graph& g, Variant variant, int t, int p,
                                               long long k_cap = -1) {
    long long n = g.num_vertices();
    long long max_k = k_cap >= 0 ? k_cap : n * (n - 1) / 2;
    for (long long k = 0; k <= max_k; ++k) {
        ProblemSpec spec{variant, variant == Variant::tpartite ? t : 2, p, k};
        if (solve(g, spec).yes) return k;
    }
    return std::nullopt;
}

}  // namespace cek
