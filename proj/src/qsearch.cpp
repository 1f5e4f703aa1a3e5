#include "obdd/qsearch.hpp"

#include <cmath>
#include <stdexcept>

namespace obdd {

std::uint64_t quantum_query_bound(std::uint64_t n, double epsilon) {
    if (epsilon <= 0.0 || epsilon >= 1.0)
        throw std::invalid_argument("quantum_query_bound: epsilon must be in (0, 1)");
    const double raw = std::ceil(std::sqrt(static_cast<double>(n) * std::log2(1.0 / epsilon)));
    return raw < 1.0 ? 1 : static_cast<std::uint64_t>(raw);
}

MinResult find_min(std::uint64_t n, const std::function<std::uint64_t(std::uint64_t)>& key,
                   SearchMode mode, double epsilon) {
    if (n == 0) throw std::invalid_argument("find_min: empty domain");
    MinResult r;
    r.stats.domain_size = n;
    r.stats.epsilon = epsilon;
    r.stats.mode = mode;
    r.stats.quantum_query_bound = quantum_query_bound(n, epsilon);
    r.argmin = 0;
    r.min_key = key(0);
    r.stats.classical_evals = 1;
    for (std::uint64_t i = 1; i < n; ++i) {
        const std::uint64_t k = key(i);
        ++r.stats.classical_evals;
        if (k < r.min_key) {
            r.min_key = k;
            r.argmin = i;
        }
    }
    return r;
}

}  // namespace obdd
