#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "chromazero/corpus.hpp"
#include "chromazero/whitney.hpp"

using namespace chromazero;

namespace {

IntPolynomial make(std::vector<long long> c) {
    std::vector<BigInt> v(c.begin(), c.end());
    return IntPolynomial(std::move(v));
}

bool acyclic(const Graph& g, EdgeMask f) {
    std::vector<int> parent(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < g.edge_count(); ++e)
        if ((f >> e) & 1) {
            auto [u, v] = g.edges()[e];
            const int ru = find(u), rv = find(v);
            if (ru == rv) return false;
            parent[ru] = rv;
        }
    return true;
}

// Full-subset-filter oracle for the forest polynomial.
IntPolynomial forest_poly_oracle(const OrderedGraph& og) {
    const Graph& g = og.graph;
    std::vector<BigInt> counts(g.edge_count() + 1, BigInt(0));
    for (EdgeMask f = 0; f < (EdgeMask(1) << g.edge_count()); ++f)
        if (acyclic(g, f) && is_bcf(og, f)) counts[popcount_edges(f)] += 1;
    return IntPolynomial(std::move(counts));
}

// Brute-force proper-coloring count.
BigInt coloring_count(const Graph& g, int q) {
    const int n = g.vertex_count();
    BigInt total = 0;
    std::vector<int> color(n, 0);
    for (;;) {
        bool proper = true;
        for (const auto& [u, v] : g.edges())
            if (color[u] == color[v]) proper = false;
        if (proper) ++total;
        int i = 0;
        while (i < n && ++color[i] == q) color[i++] = 0;
        if (i == n) break;
    }
    return total;
}

bool spans_vertex(const Graph& g, EdgeMask t, int v) {
    if (t == 0) return false;
    VertexMask span = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        if ((t >> e) & 1) {
            span |= VertexMask(1) << g.edges()[e].first;
            span |= VertexMask(1) << g.edges()[e].second;
        }
    if (!((span >> v) & 1u)) return false;
    // a forest with k edges spanning k+1 vertices is a single tree
    return acyclic(g, t) && popcount_mask(span) == popcount_edges(t) + 1;
}

}  // namespace

TEST_CASE("chromatic polynomial closed forms") {
    CHECK(chromatic_polynomial(complete_graph(3)) == make({0, 2, -3, 1}));
    CHECK(chromatic_polynomial(path_graph(3)) ==
          IntPolynomial::monomial(1) * make({-1, 1}) * make({-1, 1}));
    const IntPolynomial c4 = chromatic_polynomial(cycle_graph(4));
    for (int q = 1; q <= 5; ++q) CHECK(c4.eval_exact(q) == coloring_count(cycle_graph(4), q));
    CHECK(chromatic_polynomial(Graph::from_edge_list(3, {})) == IntPolynomial::monomial(3));
    CHECK(chromatic_polynomial(complete_graph(5)) == falling_factorial(5));
    CHECK(chromatic_polynomial(petersen_graph()).eval_exact(3) == 120);
}

TEST_CASE("chromatic equals coloring counts on random graphs") {
    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
        const Graph g = random_graph(rng, 2 + t % 5, 0.5);
        const IntPolynomial chi = chromatic_polynomial(g);
        for (int q = 1; q <= 4; ++q) CHECK(chi.eval_exact(q) == coloring_count(g, q));
    }
}

TEST_CASE("is_bcf on the ordered triangle") {
    const OrderedGraph og{complete_graph(3)};  // e0={0,1} < e1={0,2} < e2={1,2}
    CHECK_FALSE(is_bcf(og, 0b011));  // e2 closes the cycle and is largest
    CHECK(is_bcf(og, 0b101));        // e1 closes it, but e2 in the set is larger
    CHECK(is_bcf(og, 0b110));
    CHECK(is_bcf(og, 0));
    CHECK_THROWS(is_bcf(og, 0b111));
}

TEST_CASE("forest polynomial against the subset-filter oracle") {
    CHECK(forest_polynomial(OrderedGraph{complete_graph(3)}) == make({1, 3, 2}));
    CHECK(forest_polynomial(OrderedGraph{complete_graph(2)}) == make({1, 1}));
    CHECK(forest_polynomial(OrderedGraph{Graph::from_edge_list(4, {})}) == make({1}));

    std::mt19937 rng(9);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_graph(rng, 2 + t % 5, 0.6);
        const OrderedGraph og = random_orders(g, rng);
        CHECK(forest_polynomial(og) == forest_poly_oracle(og));
    }
}

TEST_CASE("bcf rooted trees") {
    const OrderedGraph tri{complete_graph(3)};
    const BcfRootedFamily fam = bcf_rooted_trees(tri, 0);
    CHECK(fam.empty_tree_allowed);
    // oracle: BCF subsets forming one tree through vertex 0
    std::set<EdgeMask> expect;
    for (EdgeMask f = 1; f < 8; ++f)
        if (acyclic(tri.graph, f) && is_bcf(tri, f) && spans_vertex(tri.graph, f, 0))
            expect.insert(f);
    CHECK(std::set<EdgeMask>(fam.trees.begin(), fam.trees.end()) == expect);

    const OrderedGraph star{complete_bipartite(1, 3)};
    CHECK(bcf_rooted_trees(star, 0).trees.size() == 7);

    const OrderedGraph single{Graph::from_edge_list(1, {})};
    CHECK(bcf_rooted_trees(single, 0).trees.empty());
}

TEST_CASE("contraction expansion") {
    for (int e = 0; e < 3; ++e) CHECK(expand_contraction_check(complete_graph(3), e));
    CHECK(expand_contraction_check(complete_graph(2), 0));
    for (int e = 0; e < 4; ++e) CHECK(expand_contraction_check(cycle_graph(4), e));

    std::mt19937 rng(21);
    for (int t = 0; t < 25; ++t) {
        const Graph g = random_graph(rng, 3 + t % 4, 0.5);
        for (int e = 0; e < g.edge_count(); ++e) CHECK(expand_contraction_check(g, e));
    }
}

TEST_CASE("whitney identity and deletion-contraction") {
    std::mt19937 rng(33);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_graph(rng, 1 + t % 6, 0.5);
        const IntPolynomial chi = chromatic_polynomial(g);
        const OrderedGraph og = random_orders(g, rng);
        CHECK(whitney_transform(forest_polynomial(og), g.vertex_count()) == chi);
        for (int e = 0; e < g.edge_count(); ++e)
            CHECK(chi == chromatic_polynomial(delete_edge(g, e)) -
                             chromatic_polynomial(contract_edge(g, e)));
    }
}
