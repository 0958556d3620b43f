#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace chromazero {

using VertexMask = std::uint32_t;
using EdgeMask = std::uint64_t;

inline constexpr int kGirthInfinity = std::numeric_limits<int>::max();

/// Simple undirected graph with dense labels 0..n-1.
/// No self-loops, no parallel edges; immutable after construction.
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges sorted lexicographically with u < v; the index of an edge in
    /// this vector is its canonical edge id.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    VertexMask neighbor_mask(int v) const { return adj_mask_[v]; }
    bool adjacent(int u, int v) const { return (adj_mask_[u] >> v) & 1u; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    /// Canonical id of edge {u,v}, or -1 if absent.
    int edge_index(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexMask> adj_mask_;
};

/// graph6 short form, n <= 62.
Graph parse_graph6(const std::string& token);
std::string encode_graph6(const Graph& g);

/// Plain edge-list format: first line "n m", then m lines "u v".
Graph parse_edge_list(const std::string& text);

Graph delete_edge(const Graph& g, int edge_index);
Graph delete_edge(const Graph& g, int u, int v);
Graph delete_vertex(const Graph& g, int v);
/// Removes every vertex in `mask`; survivors are relabeled densely,
/// preserving their relative order.
Graph delete_vertices(const Graph& g, VertexMask mask);
/// Merges the endpoints of the edge into min(u,v); the self-loop is dropped
/// and parallel edges collapse. Relabels densely.
Graph contract_edge(const Graph& g, int edge_index);
Graph contract_edge(const Graph& g, int u, int v);

int max_degree(const Graph& g);
/// Length of a shortest cycle; kGirthInfinity for forests.
int girth(const Graph& g);
bool is_claw_free(const Graph& g);

bool is_connected(const Graph& g);
/// Connectivity of the subgraph induced on `alive` (ignores dead vertices).
bool is_connected_masked(const Graph& g, VertexMask alive);
std::vector<VertexMask> components(const Graph& g);

/// Graph with vertex and edge orderings. rank arrays map label -> position
/// in the order (position 0 is the smallest).
struct OrderedGraph {
    Graph graph;
    std::vector<int> vertex_rank;
    std::vector<int> edge_rank;

    OrderedGraph() = default;
    /// Identity orders.
    explicit OrderedGraph(Graph g);
    OrderedGraph(Graph g, std::vector<int> vrank, std::vector<int> erank);

    bool vertex_less(int u, int v) const { return vertex_rank[u] < vertex_rank[v]; }
    bool edge_less(int e, int f) const { return edge_rank[e] < edge_rank[f]; }
    /// Smallest vertex of a non-empty vertex mask under the vertex order.
    int min_vertex(VertexMask mask) const;
};

inline int popcount_mask(VertexMask m) { return __builtin_popcount(m); }
inline int popcount_edges(EdgeMask m) { return __builtin_popcountll(m); }

}  // namespace chromazero
