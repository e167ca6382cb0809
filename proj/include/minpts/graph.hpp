#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace minpts {

// Immutable simple undirected graph over dense vertex ids 0..n-1, stored in
// CSR form with sorted neighbor lists.
class Graph {
public:
    // Builds from an edge list. Duplicate edges (either orientation) are
    // deduplicated silently; self-loops are rejected.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges) {
        if (n < 1) throw argument_error("graph needs at least one vertex");
        for (auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw argument_error("edge endpoint out of range");
            if (u == v) throw argument_error("self-loop");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

        Graph g;
        g.n_ = n;
        g.m_ = static_cast<long long>(edges.size());
        std::vector<int> deg(n, 0);
        for (auto [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        g.offsets_.assign(n + 1, 0);
        for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
        g.adj_.resize(static_cast<std::size_t>(2) * edges.size());
        std::vector<int> pos(g.offsets_.begin(), g.offsets_.end() - 1);
        for (auto [u, v] : edges) {
            g.adj_[pos[u]++] = v;
            g.adj_[pos[v]++] = u;
        }
        for (int v = 0; v < n; ++v)
            std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
        g.max_deg_ = 0;
        g.min_deg_ = n == 0 ? 0 : deg[0];
        for (int v = 0; v < n; ++v) {
            g.max_deg_ = std::max(g.max_deg_, deg[v]);
            g.min_deg_ = std::min(g.min_deg_, deg[v]);
        }
        return g;
    }

    int n() const { return n_; }
    long long m() const { return m_; }
    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
    int max_degree() const { return max_deg_; }
    int min_degree() const { return min_deg_; }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    bool has_edge(int u, int v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Edges in ascending (u, v) order with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

private:
    int n_ = 0;
    long long m_ = 0;
    int max_deg_ = 0;
    int min_deg_ = 0;
    std::vector<int> offsets_{0};
    std::vector<int> adj_;
};

// Maps dense vertex ids back to the ids they were built from (file ids for
// load_edge_list, previous dense ids for extraction operations).
struct VertexMapping {
    std::vector<long long> original;  // dense id -> original id

    long long to_original(int dense) const { return original[dense]; }

    // dense id carrying `orig`, or -1
    int to_dense(long long orig) const {
        for (std::size_t i = 0; i < original.size(); ++i)
            if (original[i] == orig) return static_cast<int>(i);
        return -1;
    }
};

struct LoadedGraph {
    Graph graph;
    VertexMapping mapping;
};

namespace detail {

inline bool parse_nonneg(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    long long val = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
        if (val > (std::numeric_limits<long long>::max() - (c - '0')) / 10) return false;
        val = val * 10 + (c - '0');
    }
    out = val;
    return true;
}

}  // namespace detail

// Parses "u v" lines with '#' comments. Ids are arbitrary non-negative
// integers, remapped to 0..n-1 in first-appearance order. Duplicate edges
// (including reversed duplicates from directed dumps) collapse silently.
inline LoadedGraph load_edge_list(std::istream& in) {
    std::unordered_map<long long, int> dense;
    std::vector<long long> original;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int line_no = 0;
    auto intern = [&](long long id) {
        auto [it, inserted] = dense.try_emplace(id, static_cast<int>(original.size()));
        if (inserted) original.push_back(id);
        return it->second;
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::string a, b, rest;
        {
            std::istringstream ls(line);
            if (!(ls >> a >> b)) throw format_error("expected \"u v\"", line_no);
            if (ls >> rest) throw format_error("trailing token \"" + rest + "\"", line_no);
        }
        long long u, v;
        if (!detail::parse_nonneg(a, u)) throw format_error("non-integer token \"" + a + "\"", line_no);
        if (!detail::parse_nonneg(b, v)) throw format_error("non-integer token \"" + b + "\"", line_no);
        if (u == v) throw format_error("self-loop " + std::to_string(u) + " " + std::to_string(v), line_no);
        edges.emplace_back(intern(u), intern(v));
    }
    if (edges.empty()) throw format_error("empty edge set");
    return {Graph::from_edges(static_cast<int>(original.size()), std::move(edges)),
            VertexMapping{std::move(original)}};
}

inline LoadedGraph load_edge_list(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in);
}

// One edge per line, "u v" with u < v, ascending.
inline void write_edge_list(std::ostream& out, const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
}

// Induced subgraph on the largest connected component, reindexed densely in
// ascending old-id order. Ties go to the component containing the smallest
// vertex id (the first one found).
inline LoadedGraph giant_component(const Graph& g) {
    const int n = g.n();
    std::vector<int> comp(n, -1);
    int best_comp = -1;
    int best_size = 0;
    int ncomp = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int size = 0;
        comp[s] = ncomp;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++size;
            for (int u : g.neighbors(v)) {
                if (comp[u] == -1) {
                    comp[u] = ncomp;
                    stack.push_back(u);
                }
            }
        }
        if (size > best_size) {
            best_size = size;
            best_comp = ncomp;
        }
        ++ncomp;
    }
    std::vector<long long> original;
    std::vector<int> to_new(n, -1);
    for (int v = 0; v < n; ++v) {
        if (comp[v] == best_comp) {
            to_new[v] = static_cast<int>(original.size());
            original.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        if (comp[u] != best_comp) continue;
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(to_new[u], to_new[v]);
    }
    return {Graph::from_edges(best_size, std::move(edges)), VertexMapping{std::move(original)}};
}

inline bool is_connected(const Graph& g) {
    return giant_component(g).graph.n() == g.n();
}

// Bipartite double cover H = (X, Y): x_i sits at id i, y_i at id n + i, and
// every edge v_i v_j of G contributes x_i y_j and x_j y_i. Degrees are
// preserved on both copies.
struct DoubleCover {
    Graph graph;
    int source_n = 0;

    int x_of(int v) const { return v; }
    int y_of(int v) const { return source_n + v; }
    int source_of(int id) const { return id < source_n ? id : id - source_n; }
};

inline DoubleCover double_cover(const Graph& g) {
    const int n = g.n();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(2) * g.m());
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (u < v) {
                edges.emplace_back(u, n + v);
                edges.emplace_back(v, n + u);
            }
        }
    }
    return {Graph::from_edges(2 * n, std::move(edges)), n};
}

// Layered near-regular family. Layer 1 is a (d+1)-regular circulant on m1
// vertices; each further layer has m_{i+1} = d/(d+1) * m_i vertices, every
// new vertex attaches by d+1 edges and every layer-i vertex receives exactly
// d of them (round-robin). All vertices above the deepest layer end with
// degree 2d+1.
struct TightFamily {
    Graph graph;
    std::vector<int> layer_sizes;

    int seed_size() const { return layer_sizes.front(); }
    std::vector<int> seed_vertices() const {
        std::vector<int> s(static_cast<std::size_t>(seed_size()));
        for (int i = 0; i < seed_size(); ++i) s[static_cast<std::size_t>(i)] = i;
        return s;
    }
};

inline TightFamily tight_family(int d, int m1, int layers) {
    if (d < 1) throw argument_error("tight_family: d must be >= 1");
    if (layers < 1) throw argument_error("tight_family: layers must be >= 1");
    const int k = d + 1;  // seed regularity
    if (k >= m1) throw argument_error("tight_family: no (d+1)-regular seed on m1 vertices");
    if (k % 2 == 1 && m1 % 2 == 1)
        throw argument_error("tight_family: (d+1)-regular circulant needs even m1 when d+1 is odd");

    std::vector<int> sizes{m1};
    for (int layer = 2; layer <= layers; ++layer) {
        long long prev = sizes.back();
        if ((prev * d) % (d + 1) != 0)
            throw argument_error("tight_family: layer " + std::to_string(layer) +
                                 " size d/(d+1)*" + std::to_string(prev) + " is not integral");
        sizes.push_back(static_cast<int>(prev * d / (d + 1)));
    }

    std::vector<std::pair<int, int>> edges;
    // circulant seed
    int half = k / 2;
    for (int off = 1; off <= half; ++off)
        for (int i = 0; i < m1; ++i) edges.emplace_back(i, (i + off) % m1);
    if (k % 2 == 1)
        for (int i = 0; i < m1 / 2; ++i) edges.emplace_back(i, i + m1 / 2);

    int prev_start = 0;
    for (std::size_t layer = 1; layer < sizes.size(); ++layer) {
        int prev_size = sizes[layer - 1];
        int cur_start = prev_start + prev_size;
        if (d + 1 > prev_size)
            throw argument_error("tight_family: layer " + std::to_string(layer + 1) +
                                 " cannot attach d+1 distinct edges into a layer of size " +
                                 std::to_string(prev_size));
        long long slots = static_cast<long long>(prev_size) * d;
        for (long long e = 0; e < slots; ++e) {
            int nv = cur_start + static_cast<int>(e / (d + 1));
            int pv = prev_start + static_cast<int>(e % prev_size);
            edges.emplace_back(pv, nv);
        }
        prev_start = cur_start;
    }

    int total = prev_start + sizes.back();
    Graph g = Graph::from_edges(total, std::move(edges));
    // each attachment slot must have landed on a distinct endpoint pair
    long long expect_m = 0;
    expect_m += static_cast<long long>(m1) * k / 2;
    for (std::size_t layer = 1; layer < sizes.size(); ++layer)
        expect_m += static_cast<long long>(sizes[layer - 1]) * d;
    if (g.m() != expect_m) throw internal_error("tight_family: attachment produced duplicate edges");
    return {std::move(g), std::move(sizes)};
}

}  // namespace minpts
