#pragma once

#include "chromazero/graph.hpp"

#include <random>
#include <vector>

namespace chromazero {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

/// Vertices of the line graph are the edges of h; two are adjacent when the
/// edges share an endpoint. Line graphs are claw-free.
Graph line_graph(const Graph& h);

/// Erdos-Renyi G(n, p) with the given generator.
Graph random_graph(std::mt19937& rng, int n, double p);

/// All 2^(n choose 2) labeled graphs on exactly n vertices.
std::vector<Graph> exhaustive_graphs(int n);

/// One representative per isomorphism class of connected graphs with
/// 1..max_n vertices, generated by vertex augmentation with brute-force
/// canonical forms (min adjacency bits over all permutations). max_n <= 7.
std::vector<Graph> nonisomorphic_connected_graphs(int max_n);

/// Uniformly random vertex and edge orders.
OrderedGraph random_orders(const Graph& g, std::mt19937& rng);

}  // namespace chromazero
