#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "cek/solution.hpp"

namespace cek {

// 3-CNF formula over 1-based variables; literals are signed variable ids.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;

    void validate() const {
        for (const auto& cl : clauses) {
            for (int lit : cl) {
                if (lit == 0 || std::abs(lit) > num_vars)
                    throw std::invalid_argument("literal out of range");
            }
            if (std::abs(cl[0]) == std::abs(cl[1]) || std::abs(cl[0]) == std::abs(cl[2]) ||
                std::abs(cl[1]) == std::abs(cl[2]))
                throw std::invalid_argument("clause repeats a variable");
        }
    }

    int occurrences(int var) const {
        int c = 0;
        for (const auto& cl : clauses)
            for (int lit : cl)
                if (std::abs(lit) == var) ++c;
        return c;
    }

    bool satisfied_by(const std::vector<bool>& assignment) const {
        for (const auto& cl : clauses) {
            bool sat = false;
            for (int lit : cl) {
                bool val = assignment[static_cast<size_t>(std::abs(lit) - 1)];
                if ((lit > 0) == val) sat = true;
            }
            if (!sat) return false;
        }
        return true;
    }
};

// DIMACS CNF: 'c' comments, "p cnf <vars> <clauses>", clauses are signed ints
// terminated by 0.
inline CnfFormula read_dimacs(std::istream& in) {
    CnfFormula f;
    std::string line;
    bool header = false;
    long long expect_clauses = -1;
    std::vector<int> lits;
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == 'c') continue;
        std::istringstream ls(line);
        if (line[pos] == 'p') {
            std::string p, cnf;
            ls >> p >> cnf >> f.num_vars >> expect_clauses;
            if (cnf != "cnf" || f.num_vars < 0 || expect_clauses < 0)
                throw std::invalid_argument("bad DIMACS header");
            header = true;
            continue;
        }
        if (!header) throw std::invalid_argument("DIMACS clause before header");
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (lits.size() != 3)
                    throw std::invalid_argument("only 3-literal clauses are supported");
                f.clauses.push_back({lits[0], lits[1], lits[2]});
                lits.clear();
            } else {
                lits.push_back(lit);
            }
        }
    }
    if (!lits.empty()) throw std::invalid_argument("unterminated clause");
    if (expect_clauses >= 0 && static_cast<long long>(f.clauses.size()) != expect_clauses)
        throw std::invalid_argument("clause count does not match header");
    f.validate();
    return f;
}

inline void write_dimacs(std::ostream& out, const CnfFormula& f) {
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& cl : f.clauses) out << cl[0] << ' ' << cl[1] << ' ' << cl[2] << " 0\n";
}

// Vertex labels of the hardness construction: per variable x a cycle of
// length 6*p_x labeled top/bot/a/b/c/d per occurrence, plus one vertex per
// clause.
struct GadgetMap {
    struct VariableGadget {
        std::vector<int> top, bot, a, b, c, d;  // indexed by occurrence
    };
    std::vector<VariableGadget> vars;  // indexed by variable-1
    std::vector<int> clause_vertex;    // indexed by clause
};

struct SatReduction {
    Graph graph;
    long long budget = 0;  // 8 * |clauses|
    GadgetMap map;
};

// Builds the editing instance of a 3-CNF formula: one 6*p_x cycle per
// variable, one degree-3 vertex per clause wired to the top (positive) or bot
// (negative) label of its occurrence. Every variable must occur somewhere.
inline SatReduction reduce_3sat(const CnfFormula& f) {
    f.validate();
    for (int x = 1; x <= f.num_vars; ++x)
        if (f.occurrences(x) == 0)
            throw std::invalid_argument("variable " + std::to_string(x) +
                                        " never occurs; its gadget would be empty");

    SatReduction red;
    red.map.vars.resize(static_cast<size_t>(f.num_vars));
    std::vector<Edge> edges;
    int next = 0;
    for (int x = 1; x <= f.num_vars; ++x) {
        int px = f.occurrences(x);
        auto& gadget = red.map.vars[static_cast<size_t>(x - 1)];
        int base = next;
        for (int i = 0; i < px; ++i) {
            gadget.top.push_back(next++);
            gadget.bot.push_back(next++);
            gadget.a.push_back(next++);
            gadget.b.push_back(next++);
            gadget.c.push_back(next++);
            gadget.d.push_back(next++);
        }
        int len = 6 * px;
        for (int i = 0; i < len; ++i) edges.emplace_back(base + i, base + (i + 1) % len);
    }
    std::vector<int> seen(static_cast<size_t>(f.num_vars), 0);
    for (size_t ci = 0; ci < f.clauses.size(); ++ci) {
        int vc = next++;
        red.map.clause_vertex.push_back(vc);
        for (int lit : f.clauses[ci]) {
            int x = std::abs(lit);
            int occ = seen[static_cast<size_t>(x - 1)]++;
            const auto& gadget = red.map.vars[static_cast<size_t>(x - 1)];
            int anchor = lit > 0 ? gadget.top[static_cast<size_t>(occ)]
                                 : gadget.bot[static_cast<size_t>(occ)];
            edges.emplace_back(vc, anchor);
        }
    }
    red.graph = Graph::from_edges(next, edges);
    red.budget = 8 * static_cast<long long>(f.clauses.size());
    return red;
}

// The witness deletion set of a satisfying assignment: two deletions per
// occurrence inside each variable cycle (pattern chosen by the variable's
// truth value) and, per clause, the two clause edges not incident to the
// first satisfying literal.
inline EditSet satisfying_edit(const CnfFormula& f, const std::vector<bool>& assignment,
                               const GadgetMap& map) {
    if (static_cast<int>(assignment.size()) != f.num_vars)
        throw std::invalid_argument("assignment size mismatch");
    if (!f.satisfied_by(assignment))
        throw std::invalid_argument("assignment does not satisfy the formula");

    EditSet edits;
    for (int x = 1; x <= f.num_vars; ++x) {
        const auto& gadget = map.vars[static_cast<size_t>(x - 1)];
        int px = static_cast<int>(gadget.top.size());
        for (int i = 0; i < px; ++i) {
            if (assignment[static_cast<size_t>(x - 1)]) {
                edits.deletions.emplace_back(gadget.c[static_cast<size_t>(i)],
                                             gadget.d[static_cast<size_t>(i)]);
                edits.deletions.emplace_back(gadget.bot[static_cast<size_t>(i)],
                                             gadget.a[static_cast<size_t>(i)]);
            } else {
                edits.deletions.emplace_back(gadget.a[static_cast<size_t>(i)],
                                             gadget.b[static_cast<size_t>(i)]);
                edits.deletions.emplace_back(gadget.d[static_cast<size_t>(i)],
                                             gadget.top[static_cast<size_t>((i + 1) % px)]);
            }
        }
    }
    std::vector<int> seen(static_cast<size_t>(f.num_vars), 0);
    for (size_t ci = 0; ci < f.clauses.size(); ++ci) {
        int satisfying = -1;
        std::vector<int> anchors;
        for (int lit : f.clauses[ci]) {
            int x = std::abs(lit);
            int occ = seen[static_cast<size_t>(x - 1)]++;
            const auto& gadget = map.vars[static_cast<size_t>(x - 1)];
            anchors.push_back(lit > 0 ? gadget.top[static_cast<size_t>(occ)]
                                      : gadget.bot[static_cast<size_t>(occ)]);
            bool val = assignment[static_cast<size_t>(x - 1)];
            if (satisfying == -1 && (lit > 0) == val)
                satisfying = static_cast<int>(anchors.size()) - 1;
        }
        int vc = map.clause_vertex[ci];
        for (int a = 0; a < 3; ++a)
            if (a != satisfying)
                edits.deletions.emplace_back(vc, anchors[static_cast<size_t>(a)]);
    }
    edits.normalize();
    return edits;
}

// A d-regular graph whose color classes induce complete graphs.
struct ColoredRegularGraph {
    Graph graph;
    std::vector<std::vector<int>> classes;
    int d = 0;

    void validate() const {
        const int n = graph.num_vertices();
        if (d < 1) throw std::invalid_argument("regularity degree must be at least 1");
        std::vector<int> cls(static_cast<size_t>(n), -1);
        for (size_t i = 0; i < classes.size(); ++i) {
            if (classes[i].empty()) throw std::invalid_argument("empty color class");
            for (int v : classes[i]) {
                if (v < 0 || v >= n || cls[static_cast<size_t>(v)] != -1)
                    throw std::invalid_argument("classes do not partition the vertices");
                cls[static_cast<size_t>(v)] = static_cast<int>(i);
            }
        }
        for (int v = 0; v < n; ++v) {
            if (cls[static_cast<size_t>(v)] == -1)
                throw std::invalid_argument("classes do not cover the vertices");
            if (graph.degree(v) != d) throw std::invalid_argument("graph is not d-regular");
        }
        for (const auto& c : classes)
            for (size_t i = 0; i < c.size(); ++i)
                for (size_t j = i + 1; j < c.size(); ++j)
                    if (!graph.has_edge(c[i], c[j]))
                        throw std::invalid_argument("a color class is not a clique");
    }
};

struct MrisReduction {
    Graph graph;
    int p = 0;
    long long k = 0;
};

// Multicolored regular independent set maps directly onto starforest editing
// with p = number of classes and k = (n-p)(d-1).
inline MrisReduction reduce_mris(const ColoredRegularGraph& inst) {
    inst.validate();
    MrisReduction out;
    out.graph = inst.graph;
    out.p = static_cast<int>(inst.classes.size());
    out.k = (static_cast<long long>(inst.graph.num_vertices()) - out.p) *
            (static_cast<long long>(inst.d) - 1);
    return out;
}

struct PlantedInstance {
    Graph graph;
    EditSet ground_truth;  // repairs the emitted graph back to the planted one
};

// Planted cluster graph (given side sizes per cluster) perturbed by a number
// of random pair flips; deterministic under the seed. The ground truth undoes
// the noise, so the optimal cost is at most its size.
inline PlantedInstance gen_planted(const std::vector<std::vector<int>>& cluster_sides,
                                   int noise_edits, std::uint64_t seed) {
    int n = 0;
    for (const auto& sides : cluster_sides)
        for (int s : sides) {
            if (s < 1) throw std::invalid_argument("side sizes must be positive");
            n += s;
        }
    if (noise_edits < 0) throw std::invalid_argument("noise must be non-negative");
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (noise_edits > pairs) throw std::invalid_argument("more noise than vertex pairs");

    std::vector<Edge> edges;
    int base = 0;
    for (const auto& sides : cluster_sides) {
        std::vector<std::pair<int, int>> ranges;
        int off = base;
        for (int s : sides) {
            ranges.push_back({off, off + s});
            off += s;
        }
        for (size_t i = 0; i < ranges.size(); ++i)
            for (size_t j = i + 1; j < ranges.size(); ++j)
                for (int u = ranges[i].first; u < ranges[i].second; ++u)
                    for (int v = ranges[j].first; v < ranges[j].second; ++v)
                        edges.emplace_back(u, v);
        base = off;
    }
    Graph g = Graph::from_edges(n, edges);

    std::mt19937_64 rng(seed);
    std::vector<Edge> flipped;
    EditSet noise;
    while (static_cast<int>(flipped.size()) < noise_edits) {
        int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (u == v) continue;
        Edge e(u, v);
        if (std::find(flipped.begin(), flipped.end(), e) != flipped.end()) continue;
        flipped.push_back(e);
        if (g.has_edge(e)) {
            g.remove_edge(e.u, e.v);
            noise.additions.push_back(e);  // repairing re-adds it
        } else {
            g.add_edge(e.u, e.v);
            noise.deletions.push_back(e);
        }
    }
    noise.normalize();
    return PlantedInstance{std::move(g), std::move(noise)};
}

inline PlantedInstance gen_planted(int p, int t, int side_size, int noise_edits,
                                   std::uint64_t seed) {
    if (p < 1 || t < 1) throw std::invalid_argument("p and t must be positive");
    std::vector<std::vector<int>> sides(static_cast<size_t>(p),
                                        std::vector<int>(static_cast<size_t>(t), side_size));
    return gen_planted(sides, noise_edits, seed);
}

// Random planted-satisfiable 3-CNF: every clause gets at least one literal
// agreeing with the hidden assignment, variables are renumbered densely so
// each one occurs.
inline CnfFormula gen_planted_3sat(int num_clauses, std::uint64_t seed,
                                   std::vector<bool>* assignment_out = nullptr) {
    if (num_clauses < 1) throw std::invalid_argument("need at least one clause");
    std::mt19937_64 rng(seed);
    int pool = std::max(3, num_clauses + 2);
    std::vector<bool> alpha(static_cast<size_t>(pool));
    for (int i = 0; i < pool; ++i) alpha[static_cast<size_t>(i)] = rng() & 1;

    CnfFormula f;
    f.num_vars = pool;
    for (int c = 0; c < num_clauses; ++c) {
        std::vector<int> vars;
        while (static_cast<int>(vars.size()) < 3) {
            int x = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(pool));
            if (std::find(vars.begin(), vars.end(), x) == vars.end()) vars.push_back(x);
        }
        std::array<int, 3> cl;
        bool sat = false;
        for (int i = 0; i < 3; ++i) {
            bool positive = rng() & 1;
            cl[static_cast<size_t>(i)] = positive ? vars[static_cast<size_t>(i)]
                                                  : -vars[static_cast<size_t>(i)];
            if (positive == alpha[static_cast<size_t>(vars[static_cast<size_t>(i)] - 1)])
                sat = true;
        }
        if (!sat) {
            int i = static_cast<int>(rng() % 3);
            cl[static_cast<size_t>(i)] = -cl[static_cast<size_t>(i)];
        }
        f.clauses.push_back(cl);
    }
    // drop unused variables, renumbering densely
    std::vector<int> remap(static_cast<size_t>(pool) + 1, 0);
    int used = 0;
    for (const auto& cl : f.clauses)
        for (int lit : cl)
            if (remap[static_cast<size_t>(std::abs(lit))] == 0)
                remap[static_cast<size_t>(std::abs(lit))] = ++used;
    std::vector<bool> alpha_used(static_cast<size_t>(used));
    for (int x = 1; x <= pool; ++x)
        if (remap[static_cast<size_t>(x)] != 0)
            alpha_used[static_cast<size_t>(remap[static_cast<size_t>(x)] - 1)] =
                alpha[static_cast<size_t>(x - 1)];
    for (auto& cl : f.clauses)
        for (int& lit : cl)
            lit = lit > 0 ? remap[static_cast<size_t>(lit)] : -remap[static_cast<size_t>(-lit)];
    f.num_vars = used;
    f.validate();
    if (!f.satisfied_by(alpha_used)) throw std::logic_error("planted assignment lost");
    if (assignment_out) *assignment_out = alpha_used;
    return f;
}

// Random d-regular graph with clique color classes, for the independent-set
// reduction tests. Classes of a common size c are built as cliques and the
// remaining d-(c-1) cross slots are filled by perfect matchings between
// classes, retried until simple.
inline ColoredRegularGraph gen_colored_regular(std::uint64_t seed, int max_n = 12) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int p = 2 + static_cast<int>(rng() % 3);           // classes
        int c = 1 + static_cast<int>(rng() % 3);           // class size
        if (p * c > max_n) continue;
        int extra = 1 + static_cast<int>(rng() % 2);       // matching rounds
        int n = p * c;
        ColoredRegularGraph out;
        out.d = c - 1 + 2 * extra;  // every round adds two cross edges per vertex
        if (out.d < 1 || out.d >= n) continue;

        std::vector<Edge> edges;
        out.classes.assign(static_cast<size_t>(p), {});
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < c; ++j) out.classes[static_cast<size_t>(i)].push_back(i * c + j);
        for (const auto& cls : out.classes)
            for (size_t i = 0; i < cls.size(); ++i)
                for (size_t j = i + 1; j < cls.size(); ++j) edges.emplace_back(cls[i], cls[j]);

        // cross edges: `extra` rounds of a random permutation split into a
        // cyclic matching between consecutive classes
        bool ok = true;
        std::vector<Edge> cross;
        for (int round = 0; round < extra && ok; ++round) {
            std::vector<int> shift(static_cast<size_t>(p));
            for (int i = 0; i < p; ++i)
                shift[static_cast<size_t>(i)] = static_cast<int>(rng() % static_cast<std::uint64_t>(c));
            for (int i = 0; i < p && ok; ++i) {
                int ni = (i + 1) % p;
                if (ni == i) { ok = false; break; }
                for (int j = 0; j < c; ++j) {
                    int u = i * c + j;
                    int v = ni * c + (j + shift[static_cast<size_t>(i)]) % c;
                    Edge e(u, v);
                    if (std::find(cross.begin(), cross.end(), e) != cross.end() ||
                        std::find(edges.begin(), edges.end(), e) != edges.end()) {
                        ok = false;
                        break;
                    }
                    cross.push_back(e);
                }
            }
        }
        if (!ok) continue;
        edges.insert(edges.end(), cross.begin(), cross.end());
        out.graph = Graph::from_edges(n, edges);
        try {
            out.validate();
        } catch (const std::invalid_argument&) {
            continue;
        }
        return out;
    }
    throw std::runtime_error("could not sample a colored regular graph");
}

}  // namespace cek
