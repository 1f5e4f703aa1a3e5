#include "obdd/expr.hpp"

#include <cctype>

namespace obdd {
namespace {

// Evaluates directly over packed 64-bit words; each grammar rule combines
// whole tables bitwise, so parsing is a single pass regardless of n.
class Parser {
public:
    Parser(const std::string& text, int n) : text_(text), n_(n) {}

    TruthTable run() {
        TruthTable t = or_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return t;
    }

private:
    const std::string& text_;
    int n_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void mask_tail(TruthTable& t) {
        if (n_ < 6) t.words()[0] &= (std::uint64_t{1} << t.size()) - 1;
    }

    TruthTable constant(bool one) {
        TruthTable t(n_);
        if (one) {
            for (auto& w : t.words()) w = ~std::uint64_t{0};
            mask_tail(t);
        }
        return t;
    }

    TruthTable variable(int i) {
        TruthTable t(n_);
        const int b = i - 1;
        if (b < 6) {
            // Pattern repeats within each 64-bit word.
            std::uint64_t w = 0;
            for (int j = 0; j < 64; ++j)
                if ((j >> b) & 1) w |= std::uint64_t{1} << j;
            for (auto& word : t.words()) word = w;
            mask_tail(t);
        } else {
            for (std::size_t wi = 0; wi < t.words().size(); ++wi)
                if ((wi >> (b - 6)) & 1) t.words()[wi] = ~std::uint64_t{0};
        }
        return t;
    }

    TruthTable or_expr() {
        TruthTable lhs = xor_expr();
        while (eat('|')) {
            TruthTable rhs = xor_expr();
            for (std::size_t i = 0; i < lhs.words().size(); ++i) lhs.words()[i] |= rhs.words()[i];
        }
        return lhs;
    }

    TruthTable xor_expr() {
        TruthTable lhs = and_expr();
        while (eat('^')) {
            TruthTable rhs = and_expr();
            for (std::size_t i = 0; i < lhs.words().size(); ++i) lhs.words()[i] ^= rhs.words()[i];
        }
        return lhs;
    }

    TruthTable and_expr() {
        TruthTable lhs = unary();
        while (eat('&')) {
            TruthTable rhs = unary();
            for (std::size_t i = 0; i < lhs.words().size(); ++i) lhs.words()[i] &= rhs.words()[i];
        }
        return lhs;
    }

    TruthTable unary() {
        if (eat('~')) {
            TruthTable t = unary();
            for (auto& w : t.words()) w = ~w;
            mask_tail(t);
            return t;
        }
        return atom();
    }

    TruthTable atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = text_[pos_];
        if (c == '(') {
            std::size_t open = pos_++;
            TruthTable t = or_expr();
            if (!eat(')')) throw ParseError("unmatched '('", open);
            return t;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            return constant(c == '1');
        }
        if (c == 'x') {
            std::size_t start = pos_++;
            std::size_t d0 = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == d0) throw ParseError("expected variable index after 'x'", start);
            long idx = std::stol(text_.substr(d0, pos_ - d0));
            if (idx < 1 || idx > n_)
                throw ParseError("variable x" + std::to_string(idx) + " outside [1, " +
                                     std::to_string(n_) + "]",
                                 start);
            return variable(static_cast<int>(idx));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
};

}  // namespace

TruthTable parse_expression(const std::string& text, int n) {
    if (n < 1 || n > kMaxVariables) throw std::invalid_argument("parse_expression: n out of range");
    return Parser(text, n).run();
}

}  // namespace obdd
