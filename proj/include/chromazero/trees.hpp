#pragma once

#include "chromazero/graph.hpp"
#include "chromazero/poly.hpp"

namespace chromazero {

/// T_{G,v}: coefficient k counts the subtrees of g containing v with k
/// edges; the empty tree (just v) contributes 1.
IntPolynomial rooted_tree_genfun(const Graph& g, int v);

/// S_{G,v}: restricted to trees whose distance levels from v are
/// independent sets in g.
IntPolynomial stable_tree_genfun(const Graph& g, int v);

/// T_{G,v;k}: subtrees through v containing a vertex at tree-distance >= k
/// from v.
IntPolynomial deep_tree_genfun(const Graph& g, int v, int k);

/// T_{G,v}(b f(b)^{-(delta-1)} / (delta-1)) <= f(b)^deg(v), f(b) = 1 + b/(delta-1).
/// Requires delta >= 2 and deg(v) <= delta - 1.
bool lemma31_bound_check(const Graph& g, int v, int delta, double b);

/// Claw-free variant: S_{G,v}(b / (q(b) delta)) <= q(b), q(b) = 1 + b + b^2/4.
/// Requires g claw-free and deg(v) <= delta.
bool lemma31_stable_check(const Graph& g, int v, int delta, double b);

/// Deep-tree variant: T_{G,v;k} at the same point <= e^b (b/f(b))^k.
bool lemma32_check(const Graph& g, int v, int k, int delta, double b);

/// Upper bound on the supremum t_{delta,girth,i}(b) of the deep-tree
/// generating function over graphs of max degree delta and girth >= girth,
/// root degree <= i: the minimum of the two proved bounds
/// f(b)^i - 1 and e^b (b/f(b))^(girth-2).
double deep_tree_sup_bound(int delta, int girth, int i, double b);

}  // namespace chromazero
