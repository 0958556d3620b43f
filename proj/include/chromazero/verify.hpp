#pragma once

#include "chromazero/graph.hpp"

#include <string>
#include <vector>

namespace chromazero {

struct SuiteResult {
    std::string name;
    bool pass = true;
    long long checked = 0;
    std::string witness;  // graph6 token plus detail for the first failure
};

struct VerifyOptions {
    int max_n = 5;           // exhaustive corpus covers all labeled graphs up to min(max_n, 5)
    unsigned seed = 12345;
    int random_graphs = 200; // random corpus size, n in 6..max_n (empty if max_n < 6)
    int order_samples = 3;   // random orderings per graph
    int lemma_trials = 500;  // randomized tree-bound trials
};

/// Runs every identity suite; results are deterministic for fixed options.
std::vector<SuiteResult> run_verification(const VerifyOptions& opts);

std::string verification_to_json(const std::vector<SuiteResult>& results);
bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace chromazero
