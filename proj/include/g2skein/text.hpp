#pragma once

// Small lexer shared by the text grammars of every polynomial type.
//
// A term is a product of factors separated by '*':
//   number       12, -3/4
//   (scalar)     any scalar text in parentheses, optionally (num)/(den)
//   name[^e]     a variable raised to a signed integer power
//   f[i,j]       the marked-annulus basis element f_{i,j}
// Terms are joined by '+' and '-'.

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace g2skein::text {

struct Factor {
    enum class Kind { Number, Scalar, Variable, FIndex };
    Kind kind = Kind::Number;
    mpq_class number;       // Number
    std::string body;       // Scalar: text between the parentheses; Variable: name
    std::string divisor;    // Scalar written as (body)/(divisor); empty otherwise
    long exponent = 1;      // Variable
    long i = 0, j = 0;      // FIndex
};

struct Term {
    bool negative = false;
    std::vector<Factor> factors;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    void skip_space();
    bool at_end();
    char peek();
    bool consume(char c);
    void expect(char c);
    long parse_long();
    mpz_class parse_natural();
    std::string parse_name();
    [[noreturn]] void fail(const std::string& msg) const;

    std::string_view rest() const { return src_.substr(pos_); }
    std::size_t position() const { return pos_; }
    void seek(std::size_t p) { pos_ = p; }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

/// Splits `src` into signed terms. Variable names are accepted only if they
/// appear in `variables`; "f" is accepted as an index factor when `allow_f`.
std::vector<Term> parse_terms(std::string_view src, const std::vector<std::string>& variables,
                              bool allow_f = false);

/// Text between matching parentheses starting at `open`; returns index after ')'.
std::size_t matching_paren(std::string_view src, std::size_t open);

/// Joins printed terms with " + " / " - " where `negated[k]` means term k
/// carries a leading minus that should become the joining operator.
std::string join_terms(const std::vector<std::string>& bodies, const std::vector<bool>& negated);

std::string rational_to_string(const mpq_class& r);

} // namespace g2skein::text
