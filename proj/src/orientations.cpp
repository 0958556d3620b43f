#include "chromazero/orientations.hpp"

#include "chromazero/whitney.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chromazero {

namespace detail {

namespace {

std::vector<int> edges_within(const Graph& g, VertexMask s) {
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges()[e];
        if (((s >> a) & 1u) && ((s >> b) & 1u)) out.push_back(e);
    }
    return out;
}

bool reaches(const std::vector<VertexMask>& out_mask, int from, int to) {
    VertexMask seen = VertexMask(1) << from;
    VertexMask frontier = seen;
    while (frontier) {
        VertexMask next = 0;
        while (frontier) {
            const int v = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            next |= out_mask[v] & ~seen;
        }
        if ((next >> to) & 1u) return true;
        seen |= next;
        frontier = next;
    }
    return false;
}

/// Backtracking over edge directions with incremental cycle detection.
/// Edges incident to the root are forced outward.
template <typename Callback>
void backtrack_ao(const Graph& g, VertexMask s, int root, Callback&& emit) {
    const std::vector<int> edges = edges_within(g, s);
    const int k = static_cast<int>(edges.size());
    std::vector<VertexMask> out_mask(g.vertex_count(), 0);
    std::vector<int> indegree(g.vertex_count(), 0);
    EdgeMask flipped = 0;

    auto assign = [&](int e, bool flip) -> bool {
        auto [a, b] = g.edges()[e];
        if (flip) std::swap(a, b);
        if (reaches(out_mask, b, a)) return false;  // directed cycle
        out_mask[a] |= VertexMask(1) << b;
        ++indegree[b];
        return true;
    };
    auto unassign = [&](int e, bool flip) {
        auto [a, b] = g.edges()[e];
        if (flip) std::swap(a, b);
        out_mask[a] &= ~(VertexMask(1) << b);
        --indegree[b];
    };

    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == k) {
            VertexMask rest = s & ~(VertexMask(1) << root);
            while (rest) {
                const int v = __builtin_ctz(rest);
                rest &= rest - 1;
                if (indegree[v] == 0) return;  // second source
            }
            emit(flipped);
            return;
        }
        const int e = edges[idx];
        auto [a, b] = g.edges()[e];
        for (int flip = 0; flip < 2; ++flip) {
            const int head = flip ? a : b;  // edge points toward head
            if (head == root) continue;     // root edges must go outward
            if (assign(e, flip)) {
                if (flip) flipped |= EdgeMask(1) << e;
                self(self, idx + 1);
                if (flip) flipped &= ~(EdgeMask(1) << e);
                unassign(e, flip);
            }
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<EdgeMask> enumerate_ao_masked(const Graph& g, VertexMask s, int root) {
    std::vector<EdgeMask> out;
    backtrack_ao(g, s, root, [&](EdgeMask f) { out.push_back(f); });
    return out;
}

BigInt count_ao(const Graph& g, VertexMask s, int root) {
    if (!is_connected_masked(g, s)) return 0;
    BigInt count = 0;
    backtrack_ao(g, s, root, [&](EdgeMask) { count += 1; });
    return count;
}

std::vector<VertexMask> forest_nontrivial_spans(const Graph& g, EdgeMask forest) {
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
        parent[find(g.edges()[e].first)] = find(g.edges()[e].second);
    }
    std::vector<VertexMask> span_of_root(g.vertex_count(), 0);
    m = forest;
    VertexMask touched = 0;
    while (m) {
        const int e = __builtin_ctzll(m);
        m &= m - 1;
        auto [a, b] = g.edges()[e];
        span_of_root[find(a)] |= (VertexMask(1) << a) | (VertexMask(1) << b);
        touched |= (VertexMask(1) << a) | (VertexMask(1) << b);
    }
    std::vector<VertexMask> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (span_of_root[v]) out.push_back(span_of_root[v]);
    return out;
}

std::map<VertexMask, std::vector<EdgeMask>> star_trees_by_span(const OrderedGraph& og) {
    const Graph& g = og.graph;
    const int n = g.vertex_count();
    std::map<VertexMask, std::vector<EdgeMask>> out;
    for (VertexMask s = 1; s < (VertexMask(1) << n); ++s) {
        if (popcount_mask(s) < 2) continue;
        if (!is_connected_masked(g, s)) continue;
        const int root = og.min_vertex(s);
        EdgeMask edge_set = 0;
        for (int e : edges_within(g, s)) edge_set |= EdgeMask(1) << e;
        std::vector<EdgeMask> trees;
        for (EdgeMask flipped : enumerate_ao_masked(g, s, root)) {
            const StableTree t = phi(g, Orientation{edge_set, flipped}, root, og.edge_rank);
            trees.push_back(t.edges);
        }
        out.emplace(s, std::move(trees));
    }
    return out;
}

}  // namespace detail

std::vector<Orientation> acyclic_orientations_unique_source(const Graph& h, int v) {
    if (v < 0 || v >= h.vertex_count())
        throw std::invalid_argument("acyclic_orientations_unique_source: no such vertex");
    if (!is_connected(h))
        throw std::invalid_argument("acyclic_orientations_unique_source: disconnected input");
    const VertexMask all =
        h.vertex_count() == 0 ? 0 : (VertexMask(1) << h.vertex_count()) - 1;
    EdgeMask edge_set = 0;
    for (int e = 0; e < h.edge_count(); ++e) edge_set |= EdgeMask(1) << e;
    std::vector<Orientation> out;
    for (EdgeMask flipped : detail::enumerate_ao_masked(h, all, v))
        out.push_back({edge_set, flipped});
    return out;
}

StableTree phi(const Graph& h, const Orientation& omega, int root,
               const std::vector<int>& edge_rank) {
    VertexMask span = VertexMask(1) << root;
    EdgeMask m = omega.edges;
    while (m) {
        const int e = __builtin_ctzll(m);
        m &= m - 1;
        span |= (VertexMask(1) << h.edges()[e].first) |
                (VertexMask(1) << h.edges()[e].second);
    }

    StableTree tree{root, 0};
    VertexMask current = VertexMask(1) << root;
    VertexMask remaining = span & ~current;
    while (remaining) {
        // Sources of the digraph restricted to the remaining vertices.
        VertexMask next = remaining;
        EdgeMask em = omega.edges;
        while (em) {
            const int e = __builtin_ctzll(em);
            em &= em - 1;
            auto [tail, head] = omega.direction(h, e);
            if (((remaining >> tail) & 1u) && ((remaining >> head) & 1u))
                next &= ~(VertexMask(1) << head);
        }
        if (next == 0)
            throw std::invalid_argument("phi: orientation contains a directed cycle");
        VertexMask it = next;
        while (it) {
            const int w = __builtin_ctz(it);
            it &= it - 1;
            int best_edge = -1;
            EdgeMask em2 = omega.edges;
            while (em2) {
                const int e = __builtin_ctzll(em2);
                em2 &= em2 - 1;
                auto [tail, head] = omega.direction(h, e);
                if (head == w && ((current >> tail) & 1u) &&
                    (best_edge < 0 || edge_rank[e] < edge_rank[best_edge]))
                    best_edge = e;
            }
            if (best_edge < 0)
                throw std::invalid_argument("phi: root is not the unique source");
            tree.edges |= EdgeMask(1) << best_edge;
        }
        current = next;
        remaining &= ~next;
    }
    return tree;
}

Orientation reconstruct_orientation(const StableTree& t, const Graph& h) {
    const int n = h.vertex_count();
    std::vector<int> level(n, -1);
    level[t.root] = 0;
    // BFS over tree edges.
    std::vector<int> frontier{t.root};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
            EdgeMask m = t.edges;
            while (m) {
                const int e = __builtin_ctzll(m);
                m &= m - 1;
                auto [a, b] = h.edges()[e];
                const int y = a == x ? b : (b == x ? a : -1);
                if (y >= 0 && level[y] < 0) {
                    level[y] = level[x] + 1;
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    for (int v = 0; v < n; ++v)
        if (level[v] < 0)
            throw std::invalid_argument("reconstruct_orientation: tree does not span the graph");

    Orientation omega;
    for (int e = 0; e < h.edge_count(); ++e) {
        auto [a, b] = h.edges()[e];
        if (level[a] == level[b])
            throw std::invalid_argument("reconstruct_orientation: tree is not stable");
        omega.edges |= EdgeMask(1) << e;
        if (level[a] > level[b]) omega.flipped |= EdgeMask(1) << e;
    }
    return omega;
}

IntPolynomial orientation_polynomial(const OrderedGraph& og) {
    const Graph& g = og.graph;
    const int n = g.vertex_count();
    if (n == 0) return IntPolynomial::constant(1);

    std::map<VertexMask, BigInt> ao_memo;
    auto block_ao = [&](VertexMask s) -> const BigInt& {
        auto it = ao_memo.find(s);
        if (it == ao_memo.end())
            it = ao_memo.emplace(s, detail::count_ao(g, s, og.min_vertex(s))).first;
        return it->second;
    };

    std::vector<BigInt> counts(n, BigInt(0));
    std::vector<VertexMask> blocks;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            BigInt product = 1;
            int power = 0;
            for (VertexMask s : blocks) {
                product *= block_ao(s);
                if (product == 0) return;
                power += popcount_mask(s) - 1;
            }
            counts[power] += product;
            return;
        }
        // index-based: recursive calls grow the vector and may reallocate
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            blocks[i] |= VertexMask(1) << v;
            self(self, v + 1);
            blocks[i] &= ~(VertexMask(1) << v);
        }
        blocks.push_back(VertexMask(1) << v);
        self(self, v + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
    return IntPolynomial(std::move(counts));
}

StarForestFamily star_forests(const OrderedGraph& og) {
    const Graph& g = og.graph;
    const int n = g.vertex_count();
    const auto trees = detail::star_trees_by_span(og);

    StarForestFamily family;
    StarForest partial;
    auto rec = [&](auto&& self, VertexMask remaining) -> void {
        if (remaining == 0) {
            family.forests.push_back(partial);
            return;
        }
        const int v = __builtin_ctz(remaining);
        const VertexMask rest = remaining & ~(VertexMask(1) << v);
        self(self, rest);  // v is an isolated vertex of the forest
        // v in a non-trivial component with span s.
        for (VertexMask s = remaining; s; s = (s - 1) & remaining) {
            if (!((s >> v) & 1u) || popcount_mask(s) < 2) continue;
            const auto it = trees.find(s);
            if (it == trees.end()) continue;
            partial.nontrivial_spans.push_back(s);
            for (EdgeMask t : it->second) {
                partial.edges |= t;
                self(self, remaining & ~s);
                partial.edges &= ~t;
            }
            partial.nontrivial_spans.pop_back();
        }
    };
    rec(rec, n == 0 ? 0 : (VertexMask(1) << n) - 1);
    return family;
}

StarForestFamily star_forests_anchored(const OrderedGraph& og, VertexMask anchors) {
    StarForestFamily out;
    for (const StarForest& f : star_forests(og).forests) {
        bool ok = true;
        for (VertexMask s : f.nontrivial_spans)
            if (!(s & anchors)) {
                ok = false;
                break;
            }
        if (ok) out.forests.push_back(f);
    }
    return out;
}

bool ao_deletion_contraction_check(const Graph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.edge_count())
        throw std::invalid_argument("ao_deletion_contraction_check: no such edge");
    auto [u, v] = g.edges()[edge_index];
    if (u != 0)
        throw std::invalid_argument(
            "ao_deletion_contraction_check: edge must touch the minimum vertex");
    const IntPolynomial lhs = orientation_polynomial(OrderedGraph(g));
    // Contraction keeps label 0 for the merged vertex, so the natural order
    // on G/e has it as the minimum.
    const IntPolynomial contracted =
        orientation_polynomial(OrderedGraph(contract_edge(g, edge_index)));
    const IntPolynomial deleted =
        orientation_polynomial(OrderedGraph(delete_edge(g, edge_index)));
    return lhs == IntPolynomial::monomial(1) * contracted + deleted;
}

bool structure_bad_check(const Graph& g, int v, int u1, int u2) {
    if (u1 == u2 || !g.adjacent(v, u1) || !g.adjacent(v, u2))
        throw std::invalid_argument("structure_bad_check: anchors must be neighbors of v");
    if (g.adjacent(u1, u2))
        throw std::invalid_argument("structure_bad_check: anchors must be independent");
    const int n = g.vertex_count();

    // Order on G: v smallest, then N(v), then the rest; edges lexicographic.
    std::vector<int> vrank(n, -1);
    int next = 0;
    vrank[v] = next++;
    for (int w : g.neighbors(v)) vrank[w] = next++;
    for (int w = 0; w < n; ++w)
        if (vrank[w] < 0) vrank[w] = next++;
    std::vector<int> erank(g.edge_count());
    {
        std::vector<std::pair<std::pair<int, int>, int>> keys;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edges()[e];
            int ra = vrank[a], rb = vrank[b];
            if (ra > rb) std::swap(ra, rb);
            keys.push_back({{ra, rb}, e});
        }
        std::sort(keys.begin(), keys.end());
        for (std::size_t r = 0; r < keys.size(); ++r) erank[keys[r].second] = static_cast<int>(r);
    }
    if (vrank[u1] > vrank[u2]) std::swap(u1, u2);
    const OrderedGraph og_full(g, vrank, erank);
    const auto star_trees_full = detail::star_trees_by_span(og_full);

    // G - v with u1 < u2 the smallest vertices and the edge order inherited.
    const Graph g2 = delete_vertex(g, v);
    auto map_down = [&](int w) { return w > v ? w - 1 : w; };
    auto map_up = [&](int w) { return w >= v ? w + 1 : w; };
    const int m1 = map_down(u1), m2 = map_down(u2);
    std::vector<int> vrank2(g2.vertex_count());
    {
        std::vector<std::pair<int, int>> keys;  // (priority, vertex)
        for (int w = 0; w < g2.vertex_count(); ++w) {
            int pri = vrank[map_up(w)] + 2;
            if (w == m1) pri = 0;
            else if (w == m2) pri = 1;
            keys.emplace_back(pri, w);
        }
        std::sort(keys.begin(), keys.end());
        for (std::size_t r = 0; r < keys.size(); ++r) vrank2[keys[r].second] = static_cast<int>(r);
    }
    std::vector<int> erank2(g2.edge_count());
    {
        std::vector<std::pair<int, int>> keys;
        for (int e = 0; e < g2.edge_count(); ++e) {
            auto [a, b] = g2.edges()[e];
            keys.emplace_back(erank[g.edge_index(map_up(a), map_up(b))], e);
        }
        std::sort(keys.begin(), keys.end());
        for (std::size_t r = 0; r < keys.size(); ++r) erank2[keys[r].second] = static_cast<int>(r);
    }
    const OrderedGraph og2(g2, vrank2, erank2);

    const VertexMask anchors = (VertexMask(1) << m1) | (VertexMask(1) << m2);
    const EdgeMask vu_edges = (EdgeMask(1) << g.edge_index(v, u1)) |
                              (EdgeMask(1) << g.edge_index(v, u2));

    for (const StarForest& f : star_forests_anchored(og2, anchors).forests) {
        // Lift F to edge ids of G and attach the two v-edges.
        EdgeMask lifted = vu_edges;
        EdgeMask m = f.edges;
        while (m) {
            const int e = __builtin_ctzll(m);
            m &= m - 1;
            auto [a, b] = g2.edges()[e];
            lifted |= EdgeMask(1) << g.edge_index(map_up(a), map_up(b));
        }
        const VertexMask span = detail::edge_span(g, lifted);
        bool member = false;
        const auto it = star_trees_full.find(span);
        if (it != star_trees_full.end())
            member = std::find(it->second.begin(), it->second.end(), lifted) !=
                     it->second.end();
        if (member) continue;
        if (f.edges == 0) return false;  // bad forest must be nonempty
        // Some non-trivial component must contain the larger anchor, and a
        // single non-trivial component never meets the anchors in the
        // smaller one alone. (A single component containing both anchors
        // does occur, e.g. when the lifted tree closes a cycle through v.)
        bool has_u2 = false;
        for (VertexMask s : f.nontrivial_spans)
            if ((s >> m2) & 1u) has_u2 = true;
        if (!has_u2) return false;
        if (f.nontrivial_spans.size() == 1) {
            const VertexMask s = f.nontrivial_spans.front();
            if (((s >> m1) & 1u) && !((s >> m2) & 1u)) return false;
        }
    }
    return true;
}

}  // namespace chromazero
