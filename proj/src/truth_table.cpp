#include "obdd/truth_table.hpp"

#include <bit>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace obdd {

TruthTable::TruthTable(int n) : n_(n) {
    if (n < 1 || n > kMaxVariables)
        throw std::invalid_argument("TruthTable: n must be in [1, " +
                                    std::to_string(kMaxVariables) + "]");
    words_.assign(size() <= 64 ? 1 : (size() >> 6), 0);
}

Assignment::Assignment(std::initializer_list<std::pair<int, int>> pairs) {
    for (auto& [v, b] : pairs) set(v, b);
}

void Assignment::set(int var, int bit) {
    if (var < 1 || var > 32) throw std::invalid_argument("Assignment: variable out of range");
    if (bit != 0 && bit != 1) throw std::invalid_argument("Assignment: bit must be 0 or 1");
    std::uint32_t m = 1u << (var - 1);
    if (vars_ & m) throw std::invalid_argument("Assignment: duplicate variable x" + std::to_string(var));
    vars_ |= m;
    if (bit) values_ |= m;
}

int Assignment::count() const { return std::popcount(vars_); }

TruthTable restrict_table(const TruthTable& f, const Assignment& a) {
    const int n = f.var_count();
    if (a.var_mask() >> n)
        throw std::invalid_argument("restrict_table: assigned variable beyond x" + std::to_string(n));
    const int m = n - a.count();
    if (m == 0)
        throw std::invalid_argument("restrict_table: all variables assigned; use evaluate");
    if (a.count() == 0) return f;

    // free_pos[j] = original bit position of the j-th remaining variable.
    std::vector<int> free_pos;
    free_pos.reserve(m);
    for (int i = 0; i < n; ++i)
        if (!((a.var_mask() >> i) & 1u)) free_pos.push_back(i);

    TruthTable out(m);
    const std::uint64_t fixed = a.value_mask();
    for (std::uint64_t b = 0; b < out.size(); ++b) {
        std::uint64_t idx = fixed;
        for (int j = 0; j < m; ++j)
            if ((b >> j) & 1u) idx |= std::uint64_t{1} << free_pos[static_cast<std::size_t>(j)];
        out.set_bit(b, f.bit(idx));
    }
    return out;
}

std::string to_text(const TruthTable& f) {
    std::string s = "n=" + std::to_string(f.var_count()) + "\n";
    s.reserve(s.size() + f.size() + 1);
    for (std::uint64_t b = 0; b < f.size(); ++b) s.push_back(f.bit(b) ? '1' : '0');
    s.push_back('\n');
    return s;
}

TruthTable from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line1, line2;
    if (!std::getline(in, line1) || line1.rfind("n=", 0) != 0)
        throw std::invalid_argument("truth table text: first line must be n=<int>");
    int n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoi(line1.substr(2), &pos);
        if (pos != line1.size() - 2) throw std::invalid_argument("");
    } catch (...) {
        throw std::invalid_argument("truth table text: malformed n line: " + line1);
    }
    if (n < 1 || n > kMaxVariables)
        throw std::invalid_argument("truth table text: n out of range");
    if (!std::getline(in, line2))
        throw std::invalid_argument("truth table text: missing bits line");
    const std::uint64_t want = std::uint64_t{1} << n;
    if (line2.size() != want)
        throw std::invalid_argument("truth table text: expected " + std::to_string(want) +
                                    " bits, got " + std::to_string(line2.size()));
    TruthTable f(n);
    for (std::uint64_t b = 0; b < want; ++b) {
        char c = line2[b];
        if (c != '0' && c != '1')
            throw std::invalid_argument("truth table text: invalid character at position " +
                                        std::to_string(b));
        f.set_bit(b, c == '1');
    }
    std::string rest;
    if (std::getline(in, rest) && !rest.empty())
        throw std::invalid_argument("truth table text: trailing content");
    return f;
}

void save_table(const TruthTable& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << to_text(f);
    if (!out) throw std::runtime_error("write failed: " + path);
}

TruthTable load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

TruthTable random_table(int n, std::uint64_t seed) {
    TruthTable f(n);
    std::mt19937_64 rng(seed);
    for (auto& w : f.words()) w = rng();
    if (n < 6) f.words()[0] &= (std::uint64_t{1} << f.size()) - 1;
    return f;
}

}  // namespace obdd
