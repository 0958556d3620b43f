#include "chromazero/verify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "chromazero/corpus.hpp"
#include "chromazero/orientations.hpp"
#include "chromazero/poly.hpp"
#include "chromazero/trees.hpp"
#include "chromazero/whitney.hpp"

namespace chromazero {

namespace {

VertexMask full_mask(const Graph& g) {
    return g.vertex_count() == 0 ? 0 : (VertexMask(1) << g.vertex_count()) - 1;
}

struct Suite {
    SuiteResult result;
    explicit Suite(std::string name) { result.name = std::move(name); }
    void record(bool ok, const Graph& g, const std::string& detail) {
        ++result.checked;
        if (!ok && result.pass) {
            result.pass = false;
            result.witness = encode_graph6(g) + " " + detail;
        }
    }
};

std::vector<Graph> build_corpus(const VerifyOptions& opts, std::mt19937& rng) {
    std::vector<Graph> corpus;
    for (int n = 0; n <= std::min(opts.max_n, 5); ++n)
        for (Graph& g : exhaustive_graphs(n)) corpus.push_back(std::move(g));
    if (opts.max_n >= 6) {
        std::uniform_int_distribution<int> pick_n(6, opts.max_n);
        std::uniform_real_distribution<double> pick_p(0.2, 0.6);
        for (int i = 0; i < opts.random_graphs; ++i) {
            const int n = pick_n(rng);
            corpus.push_back(random_graph(rng, n, pick_p(rng)));
        }
    }
    return corpus;
}

IntPolynomial star_family_genfun(const StarForestFamily& fam, int max_edges) {
    std::vector<BigInt> counts(max_edges + 1, BigInt(0));
    for (const StarForest& f : fam.forests) counts[popcount_edges(f.edges)] += 1;
    return IntPolynomial(std::move(counts));
}

const IntPolynomial& forest_poly_cached(const OrderedGraph& og, VertexMask alive,
                                        std::map<VertexMask, IntPolynomial>& cache) {
    auto it = cache.find(alive);
    if (it == cache.end())
        it = cache.emplace(alive, detail::forest_polynomial_masked(og, alive)).first;
    return it->second;
}

double star_family_eval(const StarForestFamily& fam, VertexMask anchors, double y) {
    double total = 0;
    for (const StarForest& f : fam.forests) {
        bool anchored = true;
        for (VertexMask s : f.nontrivial_spans)
            if (!(s & anchors)) {
                anchored = false;
                break;
            }
        if (anchored) total += std::pow(y, popcount_edges(f.edges));
    }
    return total;
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& opts) {
    std::mt19937 rng(opts.seed);
    const std::vector<Graph> corpus = build_corpus(opts, rng);

    Suite whitney("whitney");
    Suite order_invariance("forest-order-invariance");
    Suite delcon("deletion-contraction");
    Suite signs("coefficient-signs");
    Suite ao_forest("orientation-equals-forest");
    Suite star_forest_eq("star-forest-equals-forest");
    Suite expand_con("contraction-expansion");
    Suite phi_inj("phi-injectivity");
    Suite ao_linear("ao-equals-linear-coefficient");
    Suite expand_u("expand-anchored");
    Suite fund_rec("fundamental-recurrence");
    Suite forest_tree("forest-to-tree-bound");
    Suite structure_bad("structure-bad");
    Suite ao_delcon("ao-deletion-contraction");
    Suite tree_bounds("tree-generating-bounds");
    Suite log_bound("log-lower-bound");

    for (const Graph& g : corpus) {
        const int n = g.vertex_count();
        const IntPolynomial chi = chromatic_polynomial(g);
        const IntPolynomial forest_identity = forest_polynomial(OrderedGraph(g));

        // Whitney's identity under several edge orders, and order
        // independence of the forest polynomial itself.
        for (int s = 0; s < opts.order_samples; ++s) {
            const OrderedGraph og = random_orders(g, rng);
            const IntPolynomial f = forest_polynomial(og);
            order_invariance.record(f == forest_identity, g, "forest polynomial varies with order");
            whitney.record(whitney_transform(f, n) == chi, g, "whitney transform mismatch");
        }

        {
            bool alternate = true;
            for (int k = 0; k <= chi.degree(); ++k) {
                const BigInt c = chi.coefficient(k);
                if (c == 0) continue;
                const bool negative = c < 0;
                if (negative != ((n - k) % 2 == 1)) alternate = false;
            }
            const bool zero_const = n == 0 || chi.coefficient(0) == 0;
            signs.record(alternate && zero_const, g, "sign pattern broken");
        }

        for (int e = 0; e < g.edge_count(); ++e) {
            delcon.record(chi == chromatic_polynomial(delete_edge(g, e)) -
                                     chromatic_polynomial(contract_edge(g, e)),
                          g, "edge " + std::to_string(e));
            expand_con.record(expand_contraction_check(g, e), g,
                              "contraction expansion, edge " + std::to_string(e));
        }

        for (int s = 0; s < opts.order_samples; ++s) {
            const OrderedGraph og = random_orders(g, rng);
            ao_forest.record(orientation_polynomial(og) == forest_identity, g,
                             "orientation polynomial mismatch");
        }

        // One ordered view per graph shares the star-forest family across
        // the anchored-expansion suites.
        {
            const OrderedGraph og = random_orders(g, rng);
            const StarForestFamily family = star_forests(og);
            star_forest_eq.record(
                star_family_genfun(family, g.edge_count()) == forest_identity, g,
                "star-forest generating function mismatch");

            std::map<VertexMask, IntPolynomial> cache;
            const OrderedGraph og_id{g};
            std::vector<VertexMask> anchor_sets{0};
            for (int u = 0; u < n; ++u) anchor_sets.push_back(VertexMask(1) << u);
            for (int u = 0; u < n; ++u)
                for (int w = u + 1; w < n; ++w)
                    anchor_sets.push_back((VertexMask(1) << u) | (VertexMask(1) << w));

            for (VertexMask anchors : anchor_sets) {
                IntPolynomial rhs;
                for (const StarForest& f : family.forests) {
                    bool anchored = true;
                    VertexMask covered = anchors;
                    for (VertexMask span : f.nontrivial_spans) {
                        if (!(span & anchors)) {
                            anchored = false;
                            break;
                        }
                        covered |= span;
                    }
                    if (!anchored) continue;
                    rhs += IntPolynomial::monomial(popcount_edges(f.edges)) *
                           forest_poly_cached(og_id, full_mask(g) & ~covered, cache);
                }
                const bool ok = rhs == forest_identity;
                if (popcount_mask(anchors) == 1)
                    fund_rec.record(ok, g, "anchored at a single vertex");
                else
                    expand_u.record(ok, g, "anchor mask " + std::to_string(anchors));
            }

            // Forest-to-tree inequality at small positive points.
            for (VertexMask anchors : anchor_sets) {
                if (anchors == 0) continue;
                for (double y : {0.01, 0.05, 0.1}) {
                    double product = 1;
                    VertexMask m = anchors;
                    while (m) {
                        const int v = __builtin_ctz(m);
                        m &= m - 1;
                        product *= stable_tree_genfun(g, v).eval_double(y);
                    }
                    forest_tree.record(
                        star_family_eval(family, anchors, y) <= product + 1e-12, g,
                        "forest-to-tree bound at y=" + std::to_string(y));
                }
            }
        }

        if (n >= 1 && is_connected(g)) {
            for (int root = 0; root < n; ++root) {
                const auto orientations = acyclic_orientations_unique_source(g, root);
                std::vector<int> erank(g.edge_count());
                for (int e = 0; e < g.edge_count(); ++e) erank[e] = e;
                std::set<EdgeMask> images;
                bool ok = true;
                for (const Orientation& omega : orientations) {
                    const StableTree t = phi(g, omega, root, erank);
                    if (!images.insert(t.edges).second) ok = false;
                    const Orientation back = reconstruct_orientation(t, g);
                    if (back.flipped != omega.flipped || back.edges != omega.edges)
                        ok = false;
                }
                phi_inj.record(ok, g, "root " + std::to_string(root));
                const BigInt linear = abs(chi.coefficient(1));
                ao_linear.record(BigInt(orientations.size()) == linear, g,
                                 "root " + std::to_string(root));
            }
        }

        for (int e = 0; e < g.edge_count(); ++e)
            if (g.edges()[e].first == 0)
                ao_delcon.record(ao_deletion_contraction_check(g, e), g,
                                 "edge " + std::to_string(e));

        // Structure lemma for anchored pairs; subsampled on the larger
        // random graphs to keep the suite fast.
        if (n <= 7) {
            std::vector<std::tuple<int, int, int>> cases;
            for (int v = 0; v < n; ++v) {
                const auto& nb = g.neighbors(v);
                for (std::size_t i = 0; i < nb.size(); ++i)
                    for (std::size_t j = i + 1; j < nb.size(); ++j)
                        if (!g.adjacent(nb[i], nb[j])) cases.emplace_back(v, nb[i], nb[j]);
            }
            if (n > 5 && cases.size() > 4) {
                std::shuffle(cases.begin(), cases.end(), rng);
                cases.resize(4);
            }
            for (auto [v, u1, u2] : cases)
                structure_bad.record(structure_bad_check(g, v, u1, u2), g,
                                     "v=" + std::to_string(v));
        }
    }

    // Randomized tree generating-function bounds.
    {
        std::uniform_int_distribution<int> pick_n(2, 9);
        std::uniform_real_distribution<double> pick_p(0.2, 0.6);
        std::uniform_real_distribution<double> pick_b(1e-3, 1.5);
        for (int trial = 0; trial < opts.lemma_trials; ++trial) {
            const double b = pick_b(rng);
            if (trial % 3 == 2) {
                // Claw-free trial via a random line graph.
                const Graph h = random_graph(rng, pick_n(rng) / 2 + 2, 0.6);
                if (h.edge_count() == 0) {
                    tree_bounds.record(true, h, "");
                    continue;
                }
                const Graph lg = line_graph(h);
                const int v = std::uniform_int_distribution<int>(0, lg.vertex_count() - 1)(rng);
                const int delta = std::max(max_degree(lg), 1);
                tree_bounds.record(lemma31_stable_check(lg, v, delta, b), lg,
                                   "stable bound, root " + std::to_string(v));
            } else {
                const Graph g = random_graph(rng, pick_n(rng), pick_p(rng));
                const int v = std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng);
                int delta = std::max(2, max_degree(g));
                if (g.degree(v) > delta - 1) delta = g.degree(v) + 1;
                if (trial % 3 == 0) {
                    tree_bounds.record(lemma31_bound_check(g, v, delta, b), g,
                                       "plain bound, root " + std::to_string(v));
                } else {
                    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
                    tree_bounds.record(lemma32_check(g, v, k, delta, b), g,
                                       "deep bound, root " + std::to_string(v));
                }
            }
        }
    }

    {
        std::uniform_real_distribution<double> pick_x(-0.5, 0.0);
        const Graph empty;
        for (int i = 0; i < 10000; ++i) {
            double x = pick_x(rng);
            if (x == 0.0) x = -0.25;
            log_bound.record(1.0 + x > std::exp(x - x * x), empty,
                             "x=" + std::to_string(x));
        }
    }

    return {whitney.result,     order_invariance.result, delcon.result,
            signs.result,       ao_forest.result,        star_forest_eq.result,
            expand_con.result,  phi_inj.result,          ao_linear.result,
            expand_u.result,    fund_rec.result,         forest_tree.result,
            structure_bad.result, ao_delcon.result,      tree_bounds.result,
            log_bound.result};
}

std::string verification_to_json(const std::vector<SuiteResult>& results) {
    nlohmann::json out = nlohmann::json::array();
    for (const SuiteResult& r : results) {
        nlohmann::json j;
        j["suite"] = r.name;
        j["pass"] = r.pass;
        j["checked"] = r.checked;
        if (!r.pass) j["witness"] = r.witness;
        out.push_back(j);
    }
    return out.dump(2);
}

bool all_passed(const std::vector<SuiteResult>& results) {
    for (const SuiteResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace chromazero
