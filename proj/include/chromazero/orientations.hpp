#pragma once

#include "chromazero/graph.hpp"
#include "chromazero/poly.hpp"

#include <map>
#include <vector>

namespace chromazero {

/// Orientation of (a subset of) the edges of a graph. Bit e of `flipped`
/// set means edge e runs from its larger stored endpoint to the smaller;
/// clear means smaller to larger. Only bits in `edges` are meaningful.
struct Orientation {
    EdgeMask edges = 0;
    EdgeMask flipped = 0;

    std::pair<int, int> direction(const Graph& g, int e) const {
        auto [a, b] = g.edges()[e];
        return ((flipped >> e) & 1) ? std::make_pair(b, a) : std::make_pair(a, b);
    }
};

/// All acyclic orientations of the connected graph h with v as the unique
/// source. Rejects disconnected input.
std::vector<Orientation> acyclic_orientations_unique_source(const Graph& h, int v);

/// Stable spanning tree produced level by level from an acyclic orientation
/// with unique source: V_{k+1} is the set of sources after removing
/// V_0..V_k, each attached by its smallest incoming edge from V_k.
struct StableTree {
    int root = -1;
    EdgeMask edges = 0;
};
StableTree phi(const Graph& h, const Orientation& omega, int root,
               const std::vector<int>& edge_rank);

/// Inverse of phi on its image: orients every edge of h from the lower
/// distance level of t to the higher. Throws if t is not stable.
Orientation reconstruct_orientation(const StableTree& t, const Graph& h);

/// A_G(x) = sum over partitions of V of prod_S ao(G[S], min(S)) x^{|S|-1}.
IntPolynomial orientation_polynomial(const OrderedGraph& og);

struct StarForest {
    EdgeMask edges = 0;
    std::vector<VertexMask> nontrivial_spans;
};
struct StarForestFamily {
    std::vector<StarForest> forests;  // includes the empty forest
};

StarForestFamily star_forests(const OrderedGraph& og);
/// Members whose every non-trivial component contains a vertex of `anchors`.
StarForestFamily star_forests_anchored(const OrderedGraph& og, VertexMask anchors);

/// A_G(x) = x * A_{G/e}(x) + A_{G-e}(x) for an edge e incident to vertex 0
/// (the vertex-order minimum under the identity order); the contracted
/// vertex keeps label 0 and stays minimal.
bool ao_deletion_contraction_check(const Graph& g, int edge_index);

/// Checks the classification of star forests F over G-v anchored at an
/// independent pair U = {u1,u2} in N(v) for which vU + F fails to be a
/// rooted star tree of G at v: such F must be nonempty, some non-trivial
/// component contains the larger anchor, and a single non-trivial component
/// never meets the anchors in the smaller one alone.
bool structure_bad_check(const Graph& g, int v, int u1, int u2);

namespace detail {

/// ao(G[S], root) for connected S; 0 when G[S] is disconnected.
BigInt count_ao(const Graph& g, VertexMask s, int root);

/// phi-images of AO(G[S], min(S)) for every connected S with |S| >= 2,
/// keyed by span. Rooting and the smallest-incoming-edge choice follow the
/// orders of og.
std::map<VertexMask, std::vector<EdgeMask>> star_trees_by_span(const OrderedGraph& og);

std::vector<EdgeMask> enumerate_ao_masked(const Graph& g, VertexMask s, int root);

std::vector<VertexMask> forest_nontrivial_spans(const Graph& g, EdgeMask forest);

}  // namespace detail

}  // namespace chromazero
