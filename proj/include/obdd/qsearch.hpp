#pragma once

#include <cstdint>
#include <functional>

// Minimum finding over an indexed domain [0, N). Both modes run the same
// exact scan (the simulated mode models an idealized minimum-finding search
// that succeeds with probability >= 1 - epsilon, so its simulation is the
// true minimum); they differ only in the reported accounting. The quantum
// query bound is the nominal, constant-free ceil(sqrt(N * log2(1/epsilon))).

namespace obdd {

enum class SearchMode { classical, simulated_quantum };

inline const char* mode_name(SearchMode m) {
    return m == SearchMode::classical ? "classical" : "simulated_quantum";
}

struct QueryStats {
    std::uint64_t domain_size = 0;
    std::uint64_t classical_evals = 0;       // key evaluations actually performed
    std::uint64_t quantum_query_bound = 0;   // ceil(sqrt(N * log2(1/epsilon))), >= 1
    double epsilon = 0.0;
    SearchMode mode = SearchMode::classical;
};

struct MinResult {
    std::uint64_t argmin = 0;
    std::uint64_t min_key = 0;
    QueryStats stats;
};

std::uint64_t quantum_query_bound(std::uint64_t n, double epsilon);

// Ties resolve to the smallest index. N = 0 or epsilon outside (0, 1) is an
// error.
MinResult find_min(std::uint64_t n, const std::function<std::uint64_t(std::uint64_t)>& key,
                   SearchMode mode, double epsilon);

}  // namespace obdd
