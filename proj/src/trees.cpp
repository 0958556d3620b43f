#include "chromazero/trees.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace chromazero {

namespace {

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

/// Spanning trees of the subgraph induced on `s`, by include/exclude
/// backtracking over its edge list. The exclude branch is pruned when the
/// remaining edges can no longer connect s.
template <typename Callback>
void spanning_trees(const Graph& g, VertexMask s, Callback&& emit) {
    std::vector<int> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges()[e];
        if (((s >> a) & 1u) && ((s >> b) & 1u)) edges.push_back(e);
    }
    const int k = static_cast<int>(edges.size());
    const int need = popcount_mask(s) - 1;
    EdgeMask chosen = 0;

    auto connectable = [&](const Dsu& dsu_in, int from) {
        Dsu dsu = dsu_in;
        for (int j = from; j < k; ++j)
            dsu.unite(g.edges()[edges[j]].first, g.edges()[edges[j]].second);
        int root = -1;
        VertexMask m = s;
        while (m) {
            const int v = __builtin_ctz(m);
            m &= m - 1;
            if (root < 0) root = dsu.find(v);
            else if (dsu.find(v) != root) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int idx, int count, Dsu dsu) -> void {
        if (count == need) {
            emit(chosen);
            return;
        }
        if (idx == k || count + (k - idx) < need) return;
        const int e = edges[idx];
        auto [a, b] = g.edges()[e];
        Dsu with = dsu;
        if (with.unite(a, b)) {
            chosen |= EdgeMask(1) << e;
            self(self, idx + 1, count + 1, std::move(with));
            chosen &= ~(EdgeMask(1) << e);
        }
        if (connectable(dsu, idx + 1)) self(self, idx + 1, count, std::move(dsu));
    };
    if (need == 0) {
        emit(EdgeMask(0));
        return;
    }
    rec(rec, 0, 0, Dsu(g.vertex_count()));
}

/// Visits every subtree of g containing v (including the trivial one),
/// reporting its edge set and the BFS depth array within the tree.
template <typename Callback>
void for_each_subtree(const Graph& g, int v, Callback&& emit) {
    const int n = g.vertex_count();
    std::vector<int> depth(n, -1);

    auto visit = [&](VertexMask s, EdgeMask tree) {
        std::fill(depth.begin(), depth.end(), -1);
        depth[v] = 0;
        std::vector<int> frontier{v};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int x : frontier) {
                EdgeMask m = tree;
                while (m) {
                    const int e = __builtin_ctzll(m);
                    m &= m - 1;
                    auto [a, b] = g.edges()[e];
                    const int y = a == x ? b : (b == x ? a : -1);
                    if (y >= 0 && depth[y] < 0) {
                        depth[y] = depth[x] + 1;
                        next.push_back(y);
                    }
                }
            }
            frontier = std::move(next);
        }
        emit(s, tree, depth);
    };

    // Enumerate connected vertex sets containing v, then spanning trees.
    auto grow = [&](auto&& self, VertexMask s, VertexMask banned) -> void {
        spanning_trees(g, s, [&](EdgeMask t) { visit(s, t); });
        VertexMask ext = 0;
        VertexMask m = s;
        while (m) {
            const int x = __builtin_ctz(m);
            m &= m - 1;
            ext |= g.neighbor_mask(x);
        }
        ext &= ~s & ~banned;
        VertexMask used = 0;
        while (ext) {
            const int u = __builtin_ctz(ext);
            ext &= ext - 1;
            self(self, s | (VertexMask(1) << u), banned | used);
            used |= VertexMask(1) << u;
        }
    };
    grow(grow, VertexMask(1) << v, 0);
}

double genfun_point(int delta, double b) {
    const double f = 1.0 + b / (delta - 1);
    return b * std::pow(f, -(delta - 1)) / (delta - 1);
}

constexpr double kSlack = 1e-12;

}  // namespace

IntPolynomial rooted_tree_genfun(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("rooted_tree_genfun: no such vertex");
    std::vector<BigInt> counts(g.vertex_count(), BigInt(0));
    for_each_subtree(g, v, [&](VertexMask, EdgeMask t, const std::vector<int>&) {
        counts[popcount_edges(t)] += 1;
    });
    return IntPolynomial(std::move(counts));
}

IntPolynomial stable_tree_genfun(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("stable_tree_genfun: no such vertex");
    std::vector<BigInt> counts(g.vertex_count(), BigInt(0));
    for_each_subtree(g, v, [&](VertexMask s, EdgeMask t, const std::vector<int>& depth) {
        // Each distance level must be independent in g.
        VertexMask m = s;
        while (m) {
            const int x = __builtin_ctz(m);
            m &= m - 1;
            VertexMask rest = m;
            while (rest) {
                const int y = __builtin_ctz(rest);
                rest &= rest - 1;
                if (depth[x] == depth[y] && g.adjacent(x, y)) return;
            }
        }
        counts[popcount_edges(t)] += 1;
    });
    return IntPolynomial(std::move(counts));
}

IntPolynomial deep_tree_genfun(const Graph& g, int v, int k) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("deep_tree_genfun: no such vertex");
    if (k < 0) throw std::invalid_argument("deep_tree_genfun: negative depth");
    std::vector<BigInt> counts(g.vertex_count(), BigInt(0));
    for_each_subtree(g, v, [&](VertexMask s, EdgeMask t, const std::vector<int>& depth) {
        VertexMask m = s;
        while (m) {
            const int x = __builtin_ctz(m);
            m &= m - 1;
            if (depth[x] >= k) {
                counts[popcount_edges(t)] += 1;
                return;
            }
        }
    });
    return IntPolynomial(std::move(counts));
}

bool lemma31_bound_check(const Graph& g, int v, int delta, double b) {
    if (delta < 2 || g.degree(v) > delta - 1 || max_degree(g) > delta)
        throw std::invalid_argument("lemma31_bound_check: precondition violated");
    if (b < 0) throw std::invalid_argument("lemma31_bound_check: b must be nonnegative");
    const double f = 1.0 + b / (delta - 1);
    const double value = rooted_tree_genfun(g, v).eval_double(genfun_point(delta, b));
    return value <= std::pow(f, g.degree(v)) + kSlack;
}

bool lemma31_stable_check(const Graph& g, int v, int delta, double b) {
    if (!is_claw_free(g) || g.degree(v) > delta || max_degree(g) > delta)
        throw std::invalid_argument("lemma31_stable_check: precondition violated");
    if (b < 0) throw std::invalid_argument("lemma31_stable_check: b must be nonnegative");
    const double q = 1.0 + b + b * b / 4.0;
    const double value = stable_tree_genfun(g, v).eval_double(b / (q * delta));
    return value <= q + kSlack;
}

bool lemma32_check(const Graph& g, int v, int k, int delta, double b) {
    if (delta < 2 || g.degree(v) > delta - 1 || max_degree(g) > delta)
        throw std::invalid_argument("lemma32_check: precondition violated");
    if (b < 0) throw std::invalid_argument("lemma32_check: b must be nonnegative");
    const double f = 1.0 + b / (delta - 1);
    const double value = deep_tree_genfun(g, v, k).eval_double(genfun_point(delta, b));
    return value <= std::exp(b) * std::pow(b / f, k) + kSlack;
}

double deep_tree_sup_bound(int delta, int girth, int i, double b) {
    const double f = 1.0 + b / (delta - 1);
    const double from_plain = std::pow(f, i) - 1.0;
    const double from_deep = std::exp(b) * std::pow(b / f, girth - 2);
    return std::min(from_plain, from_deep);
}

}  // namespace chromazero
