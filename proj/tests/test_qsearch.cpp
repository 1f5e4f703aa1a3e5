#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "obdd/diagram.hpp"
#include "obdd/oracle.hpp"
#include "obdd/qsearch.hpp"
#include "obdd/truth_table.hpp"

using namespace obdd;

TEST_CASE("query bound formula") {
    // ceil(sqrt(2^20 * 20)) = ceil(4579.75...) = 4580
    CHECK(quantum_query_bound(1u << 20, std::exp2(-20)) == 4580);
    CHECK(quantum_query_bound(1, 0.5) == 1);
    CHECK(quantum_query_bound(4, 0.25) == 3);  // ceil(sqrt(4*2)) = 3
    CHECK(quantum_query_bound(0, 0.5) == 1);   // clamped to >= 1
    CHECK_THROWS_AS(quantum_query_bound(8, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(quantum_query_bound(8, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(quantum_query_bound(8, -0.1), std::invalid_argument);
}

TEST_CASE("query bound is monotone in domain size and precision") {
    std::uint64_t prev = 0;
    for (std::uint64_t n = 1; n <= 4096; n *= 2) {
        std::uint64_t b = quantum_query_bound(n, 0.01);
        CHECK(b >= prev);
        prev = b;
    }
    prev = 0;
    for (double eps = 0.5; eps > 1e-9; eps /= 4) {
        std::uint64_t b = quantum_query_bound(1000, eps);
        CHECK(b >= prev);
        prev = b;
    }
}

TEST_CASE("find_min scans exactly and reports both accountings") {
    std::vector<std::uint64_t> keys{5, 3, 9, 3, 7};
    auto key = [&](std::uint64_t i) { return keys[i]; };

    for (SearchMode mode : {SearchMode::classical, SearchMode::simulated_quantum}) {
        MinResult r = find_min(keys.size(), key, mode, 0.125);
        CHECK(r.argmin == 1);  // first of the tied 3s
        CHECK(r.min_key == 3);
        CHECK(r.stats.domain_size == 5);
        CHECK(r.stats.classical_evals == 5);
        CHECK(r.stats.quantum_query_bound == quantum_query_bound(5, 0.125));
        CHECK(r.stats.epsilon == 0.125);
        CHECK(r.stats.mode == mode);
    }
}

TEST_CASE("single-element domain") {
    MinResult r = find_min(1, [](std::uint64_t) { return std::uint64_t{42}; },
                           SearchMode::classical, 0.5);
    CHECK(r.argmin == 0);
    CHECK(r.min_key == 42);
    CHECK(r.stats.quantum_query_bound == 1);
}

TEST_CASE("empty domain and bad epsilon are errors") {
    auto key = [](std::uint64_t i) { return i; };
    CHECK_THROWS_AS(find_min(0, key, SearchMode::classical, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(find_min(3, key, SearchMode::classical, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(find_min(3, key, SearchMode::classical, 1.5), std::invalid_argument);
}

TEST_CASE("searching the order space finds the brute-force winner") {
    // Domain: the 24 orders of a 4-variable function, ranked
    // lexicographically; key = diagram size. The search's smallest-index
    // tie-break matches the reference scan's "first minimizer" rule.
    TruthTable f = random_table(4, 9);
    std::vector<std::vector<int>> orders;
    std::vector<int> pi{1, 2, 3, 4};
    do orders.push_back(pi);
    while (std::next_permutation(pi.begin(), pi.end()));
    REQUIRE(orders.size() == 24);

    auto key = [&](std::uint64_t i) -> std::uint64_t {
        return build_diagram(f, VariableOrder::from_pi(orders[i]), DiagramKind::obdd)
            .nonterminals();
    };
    BruteForceResult expect = brute_force_min(f, DiagramKind::obdd);
    for (SearchMode mode : {SearchMode::classical, SearchMode::simulated_quantum}) {
        MinResult r = find_min(24, key, mode, 0.0625);
        CHECK(r.min_key == expect.best.nonterminals);
        CHECK(orders[r.argmin] == expect.best.order.pi());
    }
}

TEST_CASE("agrees with a sort-based reference on permuted domains") {
    // Deterministic LCG keys; both modes must find the same argmin as a
    // straight scan.
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        std::uint64_t n = 1 + (trial * 37) % 100;
        std::uint64_t state = trial * 0x9E3779B97F4A7C15ull + 1;
        std::vector<std::uint64_t> keys(n);
        for (auto& v : keys) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            v = state >> 40;
        }
        auto expect = std::min_element(keys.begin(), keys.end()) - keys.begin();
        for (SearchMode mode : {SearchMode::classical, SearchMode::simulated_quantum}) {
            MinResult r = find_min(n, [&](std::uint64_t i) { return keys[i]; }, mode, 0.01);
            CHECK(r.argmin == static_cast<std::uint64_t>(expect));
            CHECK(r.min_key == keys[static_cast<std::size_t>(expect)]);
        }
    }
}
