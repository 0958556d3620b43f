#include "chromazero/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

namespace chromazero {

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return Graph::from_edge_list(n, pairs);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, pairs);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, pairs);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) pairs.emplace_back(i, a + j);
    return Graph::from_edge_list(a + b, pairs);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i) {
        pairs.emplace_back(i, (i + 1) % 5);          // outer cycle
        pairs.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        pairs.emplace_back(i, 5 + i);                // spokes
    }
    return Graph::from_edge_list(10, pairs);
}

Graph line_graph(const Graph& h) {
    const int m = h.edge_count();
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            auto [a, b] = h.edges()[e];
            auto [c, d] = h.edges()[f];
            if (a == c || a == d || b == c || b == d) pairs.emplace_back(e, f);
        }
    return Graph::from_edge_list(m, pairs);
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) pairs.emplace_back(i, j);
    return Graph::from_edge_list(n, pairs);
}

std::vector<Graph> exhaustive_graphs(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("exhaustive_graphs: n out of range");
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if ((mask >> s) & 1) pairs.push_back(slots[s]);
        out.push_back(Graph::from_edge_list(n, pairs));
    }
    return out;
}

namespace {

std::uint64_t adjacency_bits(const Graph& g, const std::vector<int>& perm) {
    // Upper-triangle bits in row-major order under the relabeling perm.
    const int n = g.vertex_count();
    std::uint64_t bits = 0;
    int pos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++pos)
            if (g.adjacent(perm[i], perm[j])) bits |= std::uint64_t(1) << pos;
    return bits;
}

std::uint64_t canonical_bits(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t(0);
    do {
        best = std::min(best, adjacency_bits(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph graph_from_bits(int n, std::uint64_t bits) {
    std::vector<std::pair<int, int>> pairs;
    int pos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++pos)
            if ((bits >> pos) & 1) pairs.emplace_back(i, j);
    return Graph::from_edge_list(n, pairs);
}

}  // namespace

std::vector<Graph> nonisomorphic_connected_graphs(int max_n) {
    if (max_n < 1 || max_n > 7)
        throw std::invalid_argument("nonisomorphic_connected_graphs: max_n out of range");
    std::vector<Graph> out;
    std::vector<std::uint64_t> layer{0};  // canonical forms on `size` vertices
    out.push_back(Graph::from_edge_list(1, {}));
    for (int size = 2; size <= max_n; ++size) {
        std::set<std::uint64_t> next;
        for (std::uint64_t bits : layer) {
            const Graph base = graph_from_bits(size - 1, bits);
            // Attach a new vertex to every nonempty neighbor subset; only
            // connected parents extended by nonempty attachments stay
            // connected, and every connected graph arises this way.
            for (VertexMask nb = 1; nb < (VertexMask(1) << (size - 1)); ++nb) {
                std::vector<std::pair<int, int>> pairs = base.edges();
                for (int w = 0; w < size - 1; ++w)
                    if ((nb >> w) & 1u) pairs.emplace_back(w, size - 1);
                const Graph candidate = Graph::from_edge_list(size, pairs);
                if (!is_connected(candidate)) continue;
                next.insert(canonical_bits(candidate));
            }
        }
        layer.assign(next.begin(), next.end());
        for (std::uint64_t bits : layer) out.push_back(graph_from_bits(size, bits));
    }
    return out;
}

OrderedGraph random_orders(const Graph& g, std::mt19937& rng) {
    std::vector<int> vrank(g.vertex_count());
    std::vector<int> erank(g.edge_count());
    std::iota(vrank.begin(), vrank.end(), 0);
    std::iota(erank.begin(), erank.end(), 0);
    std::shuffle(vrank.begin(), vrank.end(), rng);
    std::shuffle(erank.begin(), erank.end(), rng);
    return OrderedGraph(g, vrank, erank);
}

}  // namespace chromazero
