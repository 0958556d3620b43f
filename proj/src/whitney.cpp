#include "chromazero/whitney.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chromazero {

namespace {

bool is_tree_shape(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_cycle_shape(const Graph& g) {
    if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

bool is_complete_shape(const Graph& g) {
    const int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

IntPolynomial chromatic_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (g.edge_count() == 0) return IntPolynomial::monomial(n);
    if (is_complete_shape(g)) return falling_factorial(n);
    if (is_tree_shape(g)) {
        const IntPolynomial xm1({BigInt(-1), BigInt(1)});
        return IntPolynomial::monomial(1) * xm1.pow(n - 1);
    }
    if (is_cycle_shape(g)) {
        const IntPolynomial xm1({BigInt(-1), BigInt(1)});
        IntPolynomial p = xm1.pow(n);
        p += IntPolynomial::constant(n % 2 ? BigInt(-1) : BigInt(1)) * xm1;
        return p;
    }
    // Recurse on an edge at a vertex of maximum degree.
    int best = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(best)) best = v;
    const int e = g.edge_index(best, g.neighbors(best).front());
    return chromatic_polynomial(delete_edge(g, e)) -
           chromatic_polynomial(contract_edge(g, e));
}

}  // namespace

IntPolynomial chromatic_polynomial(const Graph& g) {
    IntPolynomial result = IntPolynomial::constant(1);
    for (VertexMask comp : components(g)) {
        const VertexMask all = (VertexMask(1) << g.vertex_count()) - 1;
        result = result * chromatic_connected(delete_vertices(g, all & ~comp));
    }
    return result;
}

namespace detail {

VertexMask edge_span(const Graph& g, EdgeMask edges) {
    VertexMask span = 0;
    EdgeMask m = edges;
    while (m) {
        const int e = __builtin_ctzll(m);
        m &= m - 1;
        span |= VertexMask(1) << g.edges()[e].first;
        span |= VertexMask(1) << g.edges()[e].second;
    }
    return span;
}

namespace {

/// Walks the unique path between s and t inside the forest `forest`,
/// returning the maximum edge rank along it, or -1 if s and t are not
/// connected in the forest.
int path_max_rank(const OrderedGraph& og, EdgeMask forest, int s, int t) {
    if (s == t) return INT32_MAX;  // degenerate, caller guards
    const Graph& g = og.graph;
    // DFS over forest edges from s.
    std::vector<int> stack{s};
    std::vector<int> best(g.vertex_count(), -2);  // -2 unvisited
    best[s] = -1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        EdgeMask m = forest;
        while (m) {
            const int e = __builtin_ctzll(m);
            m &= m - 1;
            auto [a, b] = g.edges()[e];
            int y = -1;
            if (a == x) y = b;
            else if (b == x) y = a;
            if (y < 0 || best[y] != -2) continue;
            best[y] = std::max(best[x], og.edge_rank[e]);
            if (y == t) return best[y];
            stack.push_back(y);
        }
    }
    return -1;
}

bool forest_is_acyclic(const Graph& g, EdgeMask forest) {
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    EdgeMask m = forest;
    while (m) {
        const int e = __builtin_ctzll(m);
        m &= m - 1;
        const int a = find(g.edges()[e].first), b = find(g.edges()[e].second);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

/// Enumerates every BCF forest of the alive-induced subgraph by growing
/// subsets in edge-index order; BCF sets are downward closed, so pruning on
/// the incremental broken-circuit test is exact.
template <typename Callback>
void enumerate_bcf(const OrderedGraph& og, VertexMask alive, Callback&& cb) {
    const Graph& g = og.graph;
    const int m = g.edge_count();
    std::vector<int> alive_edges;
    for (int e = 0; e < m; ++e) {
        auto [a, b] = g.edges()[e];
        if (((alive >> a) & 1u) && ((alive >> b) & 1u)) alive_edges.push_back(e);
    }
    const int k = static_cast<int>(alive_edges.size());

    // Recursive growth; connectivity tracked by a DSU snapshot per level.
    struct Frame {
        EdgeMask forest;
        int next;
        Dsu dsu;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0, Dsu(g.vertex_count())});
    cb(EdgeMask(0));
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        for (int idx = fr.next; idx < k; ++idx) {
            const int e = alive_edges[idx];
            auto [a, b] = g.edges()[e];
            Dsu dsu = fr.dsu;
            if (!dsu.unite(a, b)) continue;  // would close a cycle
            const EdgeMask grown = fr.forest | (EdgeMask(1) << e);
            // Incremental BCF test: only non-member edges newly connected by
            // e can produce a new broken-circuit violation.
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                const int f = alive_edges[j];
                if ((grown >> f) & 1) continue;
                auto [x, y] = g.edges()[f];
                if (dsu.find(x) != dsu.find(y)) continue;
                if (fr.dsu.find(x) == fr.dsu.find(y)) continue;  // old cycle, checked
                const int pmax = path_max_rank(og, grown, x, y);
                if (og.edge_rank[f] > pmax) ok = false;
            }
            if (!ok) continue;
            cb(grown);
            stack.push_back({grown, idx + 1, std::move(dsu)});
        }
    }
}

}  // namespace

bool is_bcf_masked(const OrderedGraph& og, VertexMask alive, EdgeMask forest) {
    const Graph& g = og.graph;
    if (!forest_is_acyclic(g, forest))
        throw std::invalid_argument("is_bcf: edge set contains a cycle");
    for (int f = 0; f < g.edge_count(); ++f) {
        if ((forest >> f) & 1) continue;
        auto [x, y] = g.edges()[f];
        if (!((alive >> x) & 1u) || !((alive >> y) & 1u)) continue;
        const int pmax = path_max_rank(og, forest, x, y);
        if (pmax >= 0 && og.edge_rank[f] > pmax) return false;
    }
    return true;
}

std::vector<EdgeMask> bcf_forests_masked(const OrderedGraph& og, VertexMask alive) {
    std::vector<EdgeMask> out;
    enumerate_bcf(og, alive, [&](EdgeMask f) { out.push_back(f); });
    return out;
}

IntPolynomial forest_polynomial_masked(const OrderedGraph& og, VertexMask alive) {
    std::vector<BigInt> counts(og.graph.edge_count() + 1, BigInt(0));
    enumerate_bcf(og, alive, [&](EdgeMask f) { counts[popcount_edges(f)] += 1; });
    return IntPolynomial(std::move(counts));
}

std::vector<EdgeMask> bcf_rooted_trees_masked(const OrderedGraph& og,
                                              VertexMask alive, int v) {
    std::vector<EdgeMask> out;
    const VertexMask vbit = VertexMask(1) << v;
    enumerate_bcf(og, alive, [&](EdgeMask f) {
        if (f == 0) return;
        const VertexMask span = edge_span(og.graph, f);
        if (!(span & vbit)) return;
        // A forest with k edges spanning k+1 vertices is a single tree.
        if (popcount_mask(span) != popcount_edges(f) + 1) return;
        out.push_back(f);
    });
    return out;
}

}  // namespace detail

bool is_bcf(const OrderedGraph& og, EdgeMask forest) {
    const VertexMask all =
        og.graph.vertex_count() == 0 ? 0 : (VertexMask(1) << og.graph.vertex_count()) - 1;
    return detail::is_bcf_masked(og, all, forest);
}

IntPolynomial forest_polynomial(const OrderedGraph& og) {
    const VertexMask all =
        og.graph.vertex_count() == 0 ? 0 : (VertexMask(1) << og.graph.vertex_count()) - 1;
    return detail::forest_polynomial_masked(og, all);
}

BcfRootedFamily bcf_rooted_trees(const OrderedGraph& og, int v) {
    if (v < 0 || v >= og.graph.vertex_count())
        throw std::invalid_argument("bcf_rooted_trees: no such vertex");
    const VertexMask all = (VertexMask(1) << og.graph.vertex_count()) - 1;
    return {detail::bcf_rooted_trees_masked(og, all, v), true};
}

bool expand_contraction_check(const Graph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.edge_count())
        throw std::invalid_argument("expand_contraction_check: no such edge");
    const auto [u, v] = g.edges()[edge_index];
    const int m = g.edge_count();

    // Edge order: e smallest, v's other edges largest, the rest in between.
    std::vector<int> erank(m, -1);
    int next = 0;
    erank[edge_index] = next++;
    for (int e = 0; e < m; ++e) {
        if (e == edge_index) continue;
        auto [a, b] = g.edges()[e];
        if (a != v && b != v) erank[e] = next++;
    }
    for (int e = 0; e < m; ++e)
        if (erank[e] < 0) erank[e] = next++;

    std::vector<int> vrank(g.vertex_count());
    std::iota(vrank.begin(), vrank.end(), 0);
    const OrderedGraph og(g, vrank, erank);

    // Left-hand side: F of the contraction (order-free by Whitney).
    const IntPolynomial lhs = forest_polynomial(OrderedGraph(contract_edge(g, edge_index)));

    // Right-hand side over rooted BCF trees of G-e at u avoiding N(v).
    // Vertex labels are unchanged by edge deletion, so masks carry over.
    const Graph gminus = delete_edge(g, edge_index);
    std::vector<int> erank2(gminus.edge_count());
    {
        std::vector<std::pair<int, int>> order;  // (rank in G, edge id in G-e)
        for (int e = 0; e < gminus.edge_count(); ++e) {
            auto [a, b] = gminus.edges()[e];
            order.emplace_back(erank[g.edge_index(a, b)], e);
        }
        std::sort(order.begin(), order.end());
        for (std::size_t r = 0; r < order.size(); ++r) erank2[order[r].second] = static_cast<int>(r);
    }
    std::vector<int> vrank2(gminus.vertex_count());
    std::iota(vrank2.begin(), vrank2.end(), 0);
    const OrderedGraph og_minus(gminus, vrank2, erank2);

    const VertexMask all = (VertexMask(1) << g.vertex_count()) - 1;
    const VertexMask nv = gminus.neighbor_mask(v);

    IntPolynomial rhs;
    // Trivial tree: V(T) = {u}.
    rhs += detail::forest_polynomial_masked(og, all & ~(VertexMask(1) << u));
    for (EdgeMask t : detail::bcf_rooted_trees_masked(og_minus, all, u)) {
        const VertexMask span = detail::edge_span(gminus, t);
        if (span & nv) continue;
        rhs += IntPolynomial::monomial(popcount_edges(t)) *
               detail::forest_polynomial_masked(og, all & ~span);
    }
    return lhs == rhs;
}

}  // namespace chromazero
