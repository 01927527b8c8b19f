#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cek {

// Unordered vertex pair, stored normalized with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("edge endpoints must differ");
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph over dense 0-based vertex ids.
// Adjacency lists are kept sorted so membership tests are binary searches
// and neighborhood comparisons are plain lexicographic vector compares.
class Graph {
public:
    explicit Graph(int n = 0) : n_(n), m_(0), adj_(static_cast<size_t>(n)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (const Edge& e : edges) {
            g.check_vertex(e.u);
            g.check_vertex(e.v);
            g.adj_[static_cast<size_t>(e.u)].push_back(e.v);
            g.adj_[static_cast<size_t>(e.v)].push_back(e.u);
        }
        for (int v = 0; v < n; ++v) {
            auto& nb = g.adj_[static_cast<size_t>(v)];
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw std::invalid_argument("duplicate edge");
        }
        g.m_ = static_cast<long long>(edges.size());
        return g;
    }

    int num_vertices() const { return n_; }
    long long num_edges() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        const auto& nb = adj_[static_cast<size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop");
        insert_arc(u, v);
        insert_arc(v, u);
        ++m_;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        erase_arc(u, v);
        erase_arc(v, u);
        --m_;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    }

    void insert_arc(int u, int v) {
        auto& nb = adj_[static_cast<size_t>(u)];
        auto it = std::lower_bound(nb.begin(), nb.end(), v);
        if (it != nb.end() && *it == v) throw std::invalid_argument("edge already present");
        nb.insert(it, v);
    }

    void erase_arc(int u, int v) {
        auto& nb = adj_[static_cast<size_t>(u)];
        auto it = std::lower_bound(nb.begin(), nb.end(), v);
        if (it == nb.end() || *it != v) throw std::invalid_argument("edge not present");
        nb.erase(it);
    }

    int n_;
    long long m_;
    std::vector<std::vector<int>> adj_;
};

// Disjoint addition/deletion sets. Both lists are kept sorted and unique.
struct EditSet {
    std::vector<Edge> additions;
    std::vector<Edge> deletions;

    long long size() const {
        return static_cast<long long>(additions.size() + deletions.size());
    }

    bool empty() const { return additions.empty() && deletions.empty(); }

    void normalize() {
        auto canon = [](std::vector<Edge>& es) {
            std::sort(es.begin(), es.end());
            es.erase(std::unique(es.begin(), es.end()), es.end());
        };
        canon(additions);
        canon(deletions);
        std::vector<Edge> common;
        std::set_intersection(additions.begin(), additions.end(), deletions.begin(),
                              deletions.end(), std::back_inserter(common));
        if (!common.empty())
            throw std::invalid_argument("edit set adds and deletes the same pair");
    }

    // Checks the edit set against a concrete graph: deletions must be edges,
    // additions must be non-edges. Returns an explanation on failure.
    std::string validate_against(const Graph& g) const {
        for (const Edge& e : deletions)
            if (!g.has_edge(e))
                return "deletion of non-edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")";
        for (const Edge& e : additions)
            if (g.has_edge(e))
                return "addition of existing edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")";
        return {};
    }

    bool touches(int v) const {
        for (const Edge& e : additions)
            if (e.u == v || e.v == v) return true;
        for (const Edge& e : deletions)
            if (e.u == v || e.v == v) return true;
        return false;
    }

    friend bool operator==(const EditSet&, const EditSet&) = default;
};

// G with the symmetric difference of its edge set and F applied. F must be
// valid for G; the input graph is left untouched.
inline Graph apply_edits(const Graph& g, const EditSet& f) {
    EditSet copy = f;
    copy.normalize();
    std::string err = copy.validate_against(g);
    if (!err.empty()) throw std::invalid_argument("invalid edit set: " + err);
    Graph out = g;
    for (const Edge& e : copy.deletions) out.remove_edge(e.u, e.v);
    for (const Edge& e : copy.additions) out.add_edge(e.u, e.v);
    return out;
}

// Components as sorted vertex lists, ordered by smallest contained vertex.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[static_cast<size_t>(s)] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[static_cast<size_t>(id)].push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[static_cast<size_t>(id)].begin(), out[static_cast<size_t>(id)].end());
    }
    return out;
}

// Subgraph induced by `keep` (sorted, distinct). Vertex i of the result is
// keep[i] in the host graph.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> local(static_cast<size_t>(g.num_vertices()), -1);
    for (size_t i = 0; i < keep.size(); ++i) local[static_cast<size_t>(keep[i])] = static_cast<int>(i);
    std::vector<Edge> es;
    for (int v : keep)
        for (int w : g.neighbors(v))
            if (v < w && local[static_cast<size_t>(w)] != -1)
                es.emplace_back(local[static_cast<size_t>(v)], local[static_cast<size_t>(w)]);
    return Graph::from_edges(static_cast<int>(keep.size()), es);
}

// ---------------------------------------------------------------------------
// Text format: optional '#' comment lines, then "n m", then m lines "u v"
// with 0 <= u < v < n. Duplicates and out-of-range pairs are load errors.

inline Graph read_graph(std::istream& in) {
    std::string line;
    std::vector<long long> tokens;
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        long long x;
        while (ls >> x) tokens.push_back(x);
        std::string rest;
        ls.clear();
        if (ls >> rest) throw std::invalid_argument("graph file: non-numeric token");
    }
    if (tokens.size() < 2) throw std::invalid_argument("graph file: missing header");
    long long n = tokens[0], m = tokens[1];
    if (n < 0 || m < 0) throw std::invalid_argument("graph file: negative header");
    if (static_cast<long long>(tokens.size()) != 2 + 2 * m)
        throw std::invalid_argument("graph file: edge count does not match header");
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = tokens[2 + 2 * i], v = tokens[3 + 2 * i];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph file: vertex id out of range");
        if (u >= v) throw std::invalid_argument("graph file: edges must satisfy u < v");
        es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edges(static_cast<int>(n), es);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

inline void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    write_graph(out, g);
}

}  // namespace cek
