#pragma once

#include <bit>
#include <cstdint>
#include <vector>

// Bitmask subset utilities shared by the fold engine and the divide-and-conquer
// driver.  Variables are 1-based in the public API; bit i-1 of a mask stands
// for variable i.

namespace obdd {

// Exact binomial coefficient. Safe in 64 bits for n <= 62 over the ranges used
// here (the library never goes past n = 32).
std::uint64_t binomial(int n, int k);

// Elements of `mask` in ascending order, as 1-based variable indices.
std::vector<int> mask_elements(std::uint32_t mask);

std::uint32_t mask_of(const std::vector<int>& vars);

// Maps a mask over positions [0, elements.size()) to a mask over the actual
// variables: bit p becomes bit elements[p]-1.
std::uint32_t spread_mask(std::uint32_t compressed, const std::vector<int>& elements);

// All k-element subsets of [0, n) as masks, in ascending numeric order
// (Gosper's hack). k = 0 yields the single empty mask.
std::vector<std::uint32_t> ksubsets(int n, int k);

// Lexicographic rank/unrank of k-combinations of [0, n), where a combination
// is compared as its ascending position sequence. rank(unrank(r)) == r for
// every r in [0, binomial(n, k)).
std::uint64_t combination_rank(std::uint32_t mask, int n, int k);
std::uint32_t combination_unrank(std::uint64_t rank, int n, int k);

// Per-rank fold work of the full subset sweep: terms[k] = 2^(n-k) * C(n, k).
// Their sum is exactly 3^n. Exact integers for n <= 32.
struct SweepWork {
    std::vector<std::uint64_t> terms;
    std::uint64_t total = 0;
};
SweepWork sweep_work(int n);

}  // namespace obdd
