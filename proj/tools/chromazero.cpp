#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "chromazero/certify.hpp"
#include "chromazero/corpus.hpp"
#include "chromazero/orientations.hpp"
#include "chromazero/roots.hpp"
#include "chromazero/trees.hpp"
#include "chromazero/verify.hpp"
#include "chromazero/whitney.hpp"

namespace {

using namespace chromazero;

int worker_count(std::size_t items) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("CHROMAZERO_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return static_cast<int>(std::min<std::size_t>(n, std::max<std::size_t>(items, 1)));
}

/// Applies fn to 0..count-1 on a worker pool; results land in input order.
template <typename Fn>
auto parallel_map(std::size_t count, Fn&& fn) {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(count);
    const int workers = worker_count(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
        });
    for (std::thread& t : pool) t.join();
    return out;
}

nlohmann::json coeff_array(const IntPolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BigInt& c : p.coefficients()) arr.push_back(c.str());
    return arr;
}

std::string coeff_text(const IntPolynomial& p) {
    std::ostringstream out;
    const auto& c = p.coefficients();
    if (c.empty()) return "0";
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) out << ' ';
        out << c[k].str();
    }
    return out.str();
}

Graph read_input_graph(const std::string& input, bool as_edge_list) {
    if (!as_edge_list) return parse_graph6(input);
    std::string text;
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(input);
        if (!in) throw std::invalid_argument("cannot open " + input);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return parse_edge_list(text);
}

int cmd_chromatic(const std::string& input, bool as_edge_list, const std::string& format) {
    Graph g;
    try {
        g = read_input_graph(input, as_edge_list);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    const IntPolynomial chi = chromatic_polynomial(g);
    const OrderedGraph og(g);  // declared order: identity on sorted edge ids
    const IntPolynomial forest = forest_polynomial(og);
    const IntPolynomial orient = orientation_polynomial(og);
    if (format == "json") {
        nlohmann::json j;
        j["graph6"] = encode_graph6(g);
        j["chi"] = coeff_array(chi);
        j["forest"] = coeff_array(forest);
        j["orientation"] = coeff_array(orient);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "chi: " << coeff_text(chi) << "\n";
        std::cout << "forest: " << coeff_text(forest) << "\n";
        std::cout << "orientation: " << coeff_text(orient) << "\n";
    }
    return 0;
}

int cmd_verify(int max_n, unsigned seed, int trials) {
    VerifyOptions opts;
    opts.max_n = max_n;
    opts.seed = seed;
    opts.lemma_trials = trials;
    const auto results = run_verification(opts);
    std::cout << verification_to_json(results) << "\n";
    return all_passed(results) ? 0 : 4;
}

int cmd_certify(const std::string& mode_str, std::optional<int> delta, int girth,
                std::optional<double> a, std::optional<double> b) {
    const auto mode = mode_from_name(mode_str);
    if (!mode) {
        std::cerr << "unknown mode: " << mode_str << "\n";
        return 2;
    }
    try {
        Certificate cert;
        if (a && b) {
            ConditionResult r;
            switch (*mode) {
                case CertMode::General: r = condition_general(delta.value(), *a, *b); break;
                case CertMode::GeneralGirth:
                    r = condition_general_girth(delta.value(), girth, *a, *b);
                    break;
                case CertMode::GirthLimit: r = condition_girth_limit(delta.value(), *a, *b); break;
                case CertMode::GirthLimitUniform: r = condition_girth_limit_uniform(*a, *b); break;
                case CertMode::Uniform: r = condition_uniform(*a, *b); break;
                case CertMode::ClawFree: r = condition_clawfree(*a, *b); break;
            }
            if (!r.holds) {
                std::cerr << "condition does not hold at (a,b)=(" << *a << "," << *b << ")\n";
                return 3;
            }
            cert = {*mode, delta, *a, *b, r.radius, r.k_constant};
        } else {
            cert = optimize(*mode, delta, girth);
        }
        std::cout << certificate_to_json(cert) << "\n";
        return 0;
    } catch (const std::runtime_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_tables() {
    std::cout << "# general\n" << table_to_csv(emit_table_general());
    std::cout << "# girth-limit\n" << table_to_csv(emit_table_girth_limit());
    return 0;
}

std::vector<Graph> roots_corpus(const std::string& kind, int max_n, unsigned seed, int count) {
    std::vector<Graph> out;
    if (kind == "exhaustive") {
        return nonisomorphic_connected_graphs(std::min(max_n, 7));
    } else if (kind == "random") {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> pick_n(4, std::max(4, max_n));
        std::uniform_real_distribution<double> pick_p(0.2, 0.6);
        for (int i = 0; i < count; ++i) out.push_back(random_graph(rng, pick_n(rng), pick_p(rng)));
    } else if (kind == "complete") {
        for (int n = 2; n <= max_n; ++n) out.push_back(complete_graph(n));
    } else if (kind == "cycle") {
        for (int n = 3; n <= max_n; ++n) out.push_back(cycle_graph(n));
    } else if (kind == "path") {
        for (int n = 1; n <= max_n; ++n) out.push_back(path_graph(n));
    } else if (kind == "bipartite") {
        for (int a = 1; a <= max_n / 2; ++a)
            for (int b = a; a + b <= max_n; ++b) out.push_back(complete_bipartite(a, b));
    } else if (kind == "petersen") {
        out.push_back(petersen_graph());
    } else {
        throw std::invalid_argument("unknown corpus: " + kind);
    }
    return out;
}

int cmd_roots(const std::string& kind, int max_n, unsigned seed, int count, double k_constant,
              bool clawfree_only) {
    std::vector<Graph> corpus;
    try {
        corpus = roots_corpus(kind, max_n, seed, count);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (clawfree_only) {
        std::erase_if(corpus, [](const Graph& g) { return !is_claw_free(g); });
    }
    for (const Graph& g : corpus)
        if (g.vertex_count() > 14) {
            std::cerr << "error: corpus graph exceeds the n <= 14 root-finding budget\n";
            return 2;
        }

    struct Report {
        std::string line;
        double ratio = 0;
    };
    const auto reports = parallel_map(corpus.size(), [&](std::size_t i) {
        const Graph& g = corpus[i];
        const int delta = max_degree(g);
        const IntPolynomial chi = chromatic_polynomial(g);
        const RootResult rr = complex_roots(chi);
        nlohmann::json j;
        j["graph"] = encode_graph6(g);
        j["delta"] = delta;
        nlohmann::json roots = nlohmann::json::array();
        double max_mod = 0;
        bool verdict = true;
        for (const ComplexInterval& r : rr.roots) {
            roots.push_back({{"re", r.re}, {"im", r.im}, {"radius", r.radius}});
            max_mod = std::max(max_mod, r.modulus());
            if (r.modulus() > k_constant * delta + r.radius) verdict = false;
        }
        j["roots"] = roots;
        j["max_modulus"] = max_mod;
        j["k"] = k_constant;
        j["verdict"] = verdict;
        if (!rr.converged) j["converged"] = false;
        Report rep;
        rep.line = j.dump();
        rep.ratio = delta > 0 ? max_mod / delta : 0.0;
        return rep;
    });

    double max_ratio = 0;
    for (const Report& r : reports) {
        std::cout << r.line << "\n";
        max_ratio = std::max(max_ratio, r.ratio);
    }
    nlohmann::json summary;
    summary["summary"] = {{"graphs", corpus.size()}, {"max_modulus_over_delta", max_ratio}};
    std::cout << summary.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chromatic polynomials, forest expansions, and zero-free disk certificates"};
    app.require_subcommand(1);

    // chromatic
    std::string input;
    bool as_edge_list = false;
    std::string format = "text";
    auto* chromatic = app.add_subcommand("chromatic", "Print chi_G, F_G, A_G coefficients");
    chromatic->add_option("input", input, "graph6 token, or edge-list file with --edge-list")
        ->required();
    chromatic->add_flag("--edge-list", as_edge_list, "treat input as an edge-list file ('-' = stdin)");
    chromatic->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // verify
    int max_n = 5;
    unsigned seed = 12345;
    int trials = 500;
    auto* verify = app.add_subcommand("verify", "Run the identity suites");
    verify->add_option("--max-n", max_n)->check(CLI::Range(0, 9));
    verify->add_option("--seed", seed);
    verify->add_option("--trials", trials)->check(CLI::NonNegativeNumber);

    // certify
    std::string mode_str;
    std::optional<int> delta;
    int girth = 3;
    std::optional<double> opt_a, opt_b;
    auto* certify = app.add_subcommand("certify", "Emit a zero-free disk certificate");
    certify->add_option("--mode", mode_str)->required();
    certify->add_option("--delta", delta);
    certify->add_option("--girth", girth)->check(CLI::Range(3, 1000000));
    certify->add_option("-a", opt_a, "evaluate at a fixed point instead of optimizing");
    certify->add_option("-b", opt_b);

    // tables
    auto* tables = app.add_subcommand("tables", "Optimized K tables as CSV");

    // roots
    std::string corpus_kind = "exhaustive";
    int roots_max_n = 7;
    unsigned roots_seed = 12345;
    int roots_count = 50;
    double k_constant = 4.25;
    bool clawfree_only = false;
    auto* roots = app.add_subcommand("roots", "Chromatic root scan with disk verdicts");
    roots->add_option("--corpus", corpus_kind)
        ->check(CLI::IsMember(
            {"exhaustive", "random", "complete", "cycle", "path", "bipartite", "petersen"}));
    roots->add_option("--max-n", roots_max_n)->check(CLI::Range(1, 14));
    roots->add_option("--seed", roots_seed);
    roots->add_option("--count", roots_count)->check(CLI::PositiveNumber);
    roots->add_option("--k-constant", k_constant);
    roots->add_flag("--claw-free", clawfree_only, "keep only claw-free corpus graphs");

    CLI11_PARSE(app, argc, argv);

    if (chromatic->parsed()) return cmd_chromatic(input, as_edge_list, format);
    if (verify->parsed()) return cmd_verify(max_n, seed, trials);
    if (certify->parsed()) return cmd_certify(mode_str, delta, girth, opt_a, opt_b);
    if (tables->parsed()) return cmd_tables();
    if (roots->parsed())
        return cmd_roots(corpus_kind, roots_max_n, roots_seed, roots_count, k_constant,
                         clawfree_only);
    return 0;
}
