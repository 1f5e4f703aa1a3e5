#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

// Dense truth-table representation of a Boolean function f(x1..xn).
// Row index encoding: index b has bit i-1 equal to the value of x_i, i.e.
// x1 is the least significant bit. This index doubles as a "point" (a full
// assignment) throughout the library.

namespace obdd {

inline constexpr int kMaxVariables = 24;

class TruthTable {
public:
    explicit TruthTable(int n);

    int var_count() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << n_; }

    bool bit(std::uint64_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1u;
    }
    void set_bit(std::uint64_t index, bool value) {
        if (value)
            words_[index >> 6] |= std::uint64_t{1} << (index & 63);
        else
            words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63));
    }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    bool operator==(const TruthTable& o) const = default;

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

// Partial assignment: a set of (variable, bit) pairs with distinct 1-based
// variable indices.
class Assignment {
public:
    Assignment() = default;
    Assignment(std::initializer_list<std::pair<int, int>> pairs);

    // Throws std::invalid_argument on duplicate variable or bad bit value.
    void set(int var, int bit);

    bool assigns(int var) const { return (vars_ >> (var - 1)) & 1u; }
    int value(int var) const { return (values_ >> (var - 1)) & 1u; }
    std::uint32_t var_mask() const { return vars_; }
    std::uint32_t value_mask() const { return values_; }
    int count() const;

private:
    std::uint32_t vars_ = 0;
    std::uint32_t values_ = 0;
};

// f(point): point is the row index / full assignment mask.
inline int evaluate(const TruthTable& f, std::uint32_t point) {
    return f.bit(point) ? 1 : 0;
}

// Cofactor of f under a partial assignment. Remaining variables are
// re-indexed 1..m preserving their relative order. Assigned variables must
// lie in [1, n].
TruthTable restrict_table(const TruthTable& f, const Assignment& a);

// Text interchange format:
//   line 1: "n=<int>"
//   line 2: 2^n characters from {0,1}; character at position b equals f's
//           bit at row index b. Trailing newline optional.
std::string to_text(const TruthTable& f);
TruthTable from_text(const std::string& text);

void save_table(const TruthTable& f, const std::string& path);
TruthTable load_table(const std::string& path);

// Deterministic pseudo-random table: bit b is bit (b mod 64) of the
// (b / 64)-th draw of std::mt19937_64 seeded with `seed`.
TruthTable random_table(int n, std::uint64_t seed);

}  // namespace obdd
