#include "chromazero/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chromazero {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0 || n > 30)
        throw std::invalid_argument("vertex count out of supported range");
    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge label out of range");
        if (u == v)
            throw std::invalid_argument("self-loop rejected");
        if (u > v) std::swap(u, v);
        dedup.insert({u, v});
    }
    Graph g;
    g.n_ = n;
    g.edges_.assign(dedup.begin(), dedup.end());
    g.adj_.assign(n, {});
    g.adj_mask_.assign(n, 0);
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.adj_mask_[u] |= VertexMask(1) << v;
        g.adj_mask_[v] |= VertexMask(1) << u;
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

Graph parse_graph6(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty graph6 token");
    int n = token[0] - 63;
    if (n < 0 || n > 62)
        throw std::invalid_argument("graph6: unsupported vertex count byte");
    const int bits_needed = n * (n - 1) / 2;
    const int bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<int>(token.size()) != 1 + bytes_needed)
        throw std::invalid_argument("graph6: truncated or overlong token");
    std::vector<std::pair<int, int>> pairs;
    int bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            const char c = token[1 + bit / 6];
            if (c < 63 || c > 126)
                throw std::invalid_argument("graph6: malformed character");
            if ((c - 63) >> (5 - bit % 6) & 1) pairs.emplace_back(row, col);
        }
    }
    // Trailing padding bits must come from valid characters too.
    for (int b = bit; b < bytes_needed * 6; ++b) {
        const char c = token[1 + b / 6];
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: malformed character");
    }
    return Graph::from_edge_list(n, pairs);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out(1, static_cast<char>(63 + n));
    const int bits_needed = n * (n - 1) / 2;
    const int bytes_needed = (bits_needed + 5) / 6;
    std::vector<int> bytes(bytes_needed, 0);
    int bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if (g.adjacent(row, col)) bytes[bit / 6] |= 1 << (5 - bit % 6);
    for (int b : bytes) out.push_back(static_cast<char>(63 + b));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("edge list: bad header");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
        pairs.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, pairs);
}

namespace {

Graph rebuild_without(const Graph& g, VertexMask dead, int skip_edge) {
    std::vector<int> relabel(g.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!((dead >> v) & 1u)) relabel[v] = next++;
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == skip_edge) continue;
        auto [u, v] = g.edges()[e];
        if (relabel[u] < 0 || relabel[v] < 0) continue;
        pairs.emplace_back(relabel[u], relabel[v]);
    }
    return Graph::from_edge_list(next, pairs);
}

}  // namespace

Graph delete_edge(const Graph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.edge_count())
        throw std::invalid_argument("delete_edge: no such edge");
    return rebuild_without(g, 0, edge_index);
}

Graph delete_edge(const Graph& g, int u, int v) {
    const int e = g.edge_index(u, v);
    if (e < 0) throw std::invalid_argument("delete_edge: no such edge");
    return delete_edge(g, e);
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("delete_vertex: no such vertex");
    return rebuild_without(g, VertexMask(1) << v, -1);
}

Graph delete_vertices(const Graph& g, VertexMask mask) {
    return rebuild_without(g, mask, -1);
}

Graph contract_edge(const Graph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.edge_count())
        throw std::invalid_argument("contract_edge: no such edge");
    auto [u, v] = g.edges()[edge_index];  // u < v; v merges into u
    std::vector<int> relabel(g.vertex_count(), -1);
    int next = 0;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (w != v) relabel[w] = next++;
    relabel[v] = relabel[u];
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : g.edges()) {
        const int ra = relabel[a], rb = relabel[b];
        if (ra == rb) continue;  // the contracted edge itself
        pairs.emplace_back(ra, rb);
    }
    return Graph::from_edge_list(g.vertex_count() - 1, pairs);
}

Graph contract_edge(const Graph& g, int u, int v) {
    const int e = g.edge_index(u, v);
    if (e < 0) throw std::invalid_argument("contract_edge: no such edge");
    return contract_edge(g, e);
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

int girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = kGirthInfinity;
    for (int src = 0; src < n; ++src) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> q;
        dist[src] = 0;
        q.push(src);
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (int y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                } else if (y != parent[x]) {
                    // Non-tree edge closes a cycle through src of length
                    // at most dist[x] + dist[y] + 1.
                    if (dist[x] + dist[y] + 1 < best) best = dist[x] + dist[y] + 1;
                }
            }
        }
    }
    return best;
}

bool is_claw_free(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        const int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (int k = j + 1; k < d; ++k) {
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]))
                        return false;
                }
            }
    }
    return true;
}

bool is_connected_masked(const Graph& g, VertexMask alive) {
    if (alive == 0) return true;
    const int start = __builtin_ctz(alive);
    VertexMask seen = VertexMask(1) << start;
    VertexMask frontier = seen;
    while (frontier) {
        VertexMask next = 0;
        while (frontier) {
            const int v = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            next |= g.neighbor_mask(v) & alive & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == alive;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return is_connected_masked(g, (VertexMask(1) << g.vertex_count()) - 1);
}

std::vector<VertexMask> components(const Graph& g) {
    std::vector<VertexMask> out;
    VertexMask remaining = g.vertex_count() == 0
                               ? 0
                               : (VertexMask(1) << g.vertex_count()) - 1;
    while (remaining) {
        const int start = __builtin_ctz(remaining);
        VertexMask seen = VertexMask(1) << start;
        VertexMask frontier = seen;
        while (frontier) {
            VertexMask next = 0;
            while (frontier) {
                const int v = __builtin_ctz(frontier);
                frontier &= frontier - 1;
                next |= g.neighbor_mask(v) & remaining & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        out.push_back(seen);
        remaining &= ~seen;
    }
    return out;
}

OrderedGraph::OrderedGraph(Graph g) : graph(std::move(g)) {
    vertex_rank.resize(graph.vertex_count());
    edge_rank.resize(graph.edge_count());
    for (int v = 0; v < graph.vertex_count(); ++v) vertex_rank[v] = v;
    for (int e = 0; e < graph.edge_count(); ++e) edge_rank[e] = e;
}

OrderedGraph::OrderedGraph(Graph g, std::vector<int> vrank, std::vector<int> erank)
    : graph(std::move(g)), vertex_rank(std::move(vrank)), edge_rank(std::move(erank)) {
    if (static_cast<int>(vertex_rank.size()) != graph.vertex_count() ||
        static_cast<int>(edge_rank.size()) != graph.edge_count())
        throw std::invalid_argument("OrderedGraph: rank size mismatch");
    auto is_permutation = [](const std::vector<int>& r) {
        std::vector<char> seen(r.size(), 0);
        for (int x : r) {
            if (x < 0 || x >= static_cast<int>(r.size()) || seen[x]) return false;
            seen[x] = 1;
        }
        return true;
    };
    if (!is_permutation(vertex_rank) || !is_permutation(edge_rank))
        throw std::invalid_argument("OrderedGraph: ranks must be permutations");
}

int OrderedGraph::min_vertex(VertexMask mask) const {
    int best = -1;
    VertexMask m = mask;
    while (m) {
        const int v = __builtin_ctz(m);
        m &= m - 1;
        if (best < 0 || vertex_rank[v] < vertex_rank[best]) best = v;
    }
    if (best < 0) throw std::invalid_argument("min_vertex of empty mask");
    return best;
}

}  // namespace chromazero
