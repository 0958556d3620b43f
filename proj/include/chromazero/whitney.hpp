#pragma once

#include "chromazero/graph.hpp"
#include "chromazero/poly.hpp"

#include <vector>

namespace chromazero {

/// Chromatic polynomial via deletion-contraction with component splitting
/// and closed-form base cases (edgeless, tree, cycle, complete).
IntPolynomial chromatic_polynomial(const Graph& g);

/// Broken-circuit-free test: for every edge e such that F + e contains a
/// cycle, e must not be the largest edge of that cycle under the edge order.
/// Throws if `forest` contains a cycle.
bool is_bcf(const OrderedGraph& og, EdgeMask forest);

/// F_G(x): coefficient k counts the BCF sets with k edges.
IntPolynomial forest_polynomial(const OrderedGraph& og);

/// BCF subsets forming a single tree containing v. The empty forest is not
/// a member; `empty_tree_allowed` records that the trivial tree (vertex v,
/// no edges) is BCF and may be used as a summand by expansions.
struct BcfRootedFamily {
    std::vector<EdgeMask> trees;
    bool empty_tree_allowed = true;
};
BcfRootedFamily bcf_rooted_trees(const OrderedGraph& og, int v);

/// Verifies the contraction expansion of F_{G/e} for e = {u,v}: an edge
/// order is built with e smallest and v's other edges largest, and
/// F_{G/e}(x) is compared against the sum over rooted BCF trees T at u in
/// G-e avoiding N(v) of x^|T| * F_{G minus V(T)}(x), the trivial tree
/// (V(T) = {u}) included.
bool expand_contraction_check(const Graph& g, int edge_index);

namespace detail {

/// Masked variants operate on the subgraph induced by `alive`; edge ranks
/// come from the full ordered graph.
IntPolynomial forest_polynomial_masked(const OrderedGraph& og, VertexMask alive);
std::vector<EdgeMask> bcf_forests_masked(const OrderedGraph& og, VertexMask alive);
bool is_bcf_masked(const OrderedGraph& og, VertexMask alive, EdgeMask forest);
std::vector<EdgeMask> bcf_rooted_trees_masked(const OrderedGraph& og,
                                              VertexMask alive, int v);
VertexMask edge_span(const Graph& g, EdgeMask edges);

}  // namespace detail

}  // namespace chromazero
