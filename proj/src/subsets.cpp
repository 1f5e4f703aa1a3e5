#include "obdd/subsets.hpp"

#include <cassert>
#include <stdexcept>

namespace obdd {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) stays below 2^63 for the n <= 32 uses in this library,
        // and well below overflow for any n <= 62 after the division chain.
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::vector<int> mask_elements(std::uint32_t mask) {
    std::vector<int> out;
    out.reserve(std::popcount(mask));
    while (mask) {
        int b = std::countr_zero(mask);
        out.push_back(b + 1);
        mask &= mask - 1;
    }
    return out;
}

std::uint32_t mask_of(const std::vector<int>& vars) {
    std::uint32_t m = 0;
    for (int v : vars) {
        if (v < 1 || v > 32) throw std::invalid_argument("variable index out of range");
        m |= 1u << (v - 1);
    }
    return m;
}

std::uint32_t spread_mask(std::uint32_t compressed, const std::vector<int>& elements) {
    std::uint32_t out = 0;
    while (compressed) {
        int p = std::countr_zero(compressed);
        assert(p < static_cast<int>(elements.size()));
        out |= 1u << (elements[static_cast<std::size_t>(p)] - 1);
        compressed &= compressed - 1;
    }
    return out;
}

std::vector<std::uint32_t> ksubsets(int n, int k) {
    if (k < 0 || k > n) return {};
    if (k == 0) return {0u};
    std::vector<std::uint32_t> out;
    out.reserve(binomial(n, k));
    std::uint32_t v = (1u << k) - 1;
    const std::uint32_t limit = (n == 32) ? 0xffffffffu : (1u << n) - 1;
    while (true) {
        out.push_back(v);
        if ((v | (v - 1)) >= limit && out.size() == binomial(n, k)) break;
        std::uint32_t t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
        if (v > limit) break;
    }
    return out;
}

std::uint64_t combination_rank(std::uint32_t mask, int n, int k) {
    assert(std::popcount(mask) == k);
    std::uint64_t r = 0;
    int taken = 0;
    int prev = 0;
    while (mask) {
        int c = std::countr_zero(mask);
        for (int v = prev; v < c; ++v)
            r += binomial(n - 1 - v, k - 1 - taken);
        prev = c + 1;
        ++taken;
        mask &= mask - 1;
    }
    return r;
}

std::uint32_t combination_unrank(std::uint64_t rank, int n, int k) {
    if (rank >= binomial(n, k)) throw std::out_of_range("combination rank out of range");
    std::uint32_t mask = 0;
    int v = 0;
    for (int i = 0; i < k; ++i) {
        while (true) {
            std::uint64_t block = binomial(n - 1 - v, k - 1 - i);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        mask |= 1u << v;
        ++v;
    }
    return mask;
}

SweepWork sweep_work(int n) {
    if (n < 0 || n > 32) throw std::invalid_argument("sweep_work: n must be in [0, 32]");
    SweepWork w;
    w.terms.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        w.terms[static_cast<std::size_t>(k)] =
            (std::uint64_t{1} << (n - k)) * binomial(n, k);
        w.total += w.terms[static_cast<std::size_t>(k)];
    }
    return w;
}

}  // namespace obdd
