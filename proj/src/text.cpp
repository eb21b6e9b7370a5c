#include "g2skein/text.hpp"

#include <algorithm>
#include <cctype>

#include "g2skein/errors.hpp"

namespace g2skein::text {

void Lexer::skip_space()
{
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
}

bool Lexer::at_end()
{
    skip_space();
    return pos_ >= src_.size();
}

char Lexer::peek()
{
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
}

bool Lexer::consume(char c)
{
    if (peek() == c) {
        ++pos_;
        return true;
    }
    return false;
}

void Lexer::expect(char c)
{
    if (!consume(c))
        fail(std::string("expected '") + c + "'");
}

void Lexer::fail(const std::string& msg) const
{
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(src_) + "\"");
}

mpz_class Lexer::parse_natural()
{
    skip_space();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
    if (start == pos_)
        fail("expected digits");
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
}

long Lexer::parse_long()
{
    bool neg = false;
    if (consume('-'))
        neg = true;
    else
        consume('+');
    // Accept q^{-1} and q^(-1) as well as q^-1.
    if (consume('{')) {
        long v = parse_long();
        expect('}');
        return neg ? -v : v;
    }
    if (consume('(')) {
        long v = parse_long();
        expect(')');
        return neg ? -v : v;
    }
    mpz_class v = parse_natural();
    if (!v.fits_slong_p())
        fail("exponent out of range");
    return neg ? -v.get_si() : v.get_si();
}

std::string Lexer::parse_name()
{
    skip_space();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalpha(static_cast<unsigned char>(src_[pos_])) ||
            (pos_ > start && std::isdigit(static_cast<unsigned char>(src_[pos_])))))
        ++pos_;
    if (start == pos_)
        fail("expected a name");
    return std::string(src_.substr(start, pos_ - start));
}

std::size_t matching_paren(std::string_view src, std::size_t open)
{
    int depth = 0;
    for (std::size_t k = open; k < src.size(); ++k) {
        if (src[k] == '(')
            ++depth;
        else if (src[k] == ')' && --depth == 0)
            return k + 1;
    }
    throw ParseError("unbalanced parentheses in \"" + std::string(src) + "\"");
}

namespace {

Factor parse_factor(Lexer& lex, std::string_view src, const std::vector<std::string>& variables,
                    bool allow_f)
{
    Factor f;
    char c = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        mpz_class num = lex.parse_natural();
        mpz_class den = 1;
        if (lex.consume('/'))
            den = lex.parse_natural();
        if (den == 0)
            lex.fail("zero denominator");
        f.kind = Factor::Kind::Number;
        f.number = mpq_class(num, den);
        f.number.canonicalize();
        return f;
    }
    if (c == '(') {
        std::size_t open = lex.position();
        std::size_t close = matching_paren(src, open);
        f.kind = Factor::Kind::Scalar;
        f.body = std::string(src.substr(open + 1, close - open - 2));
        lex.seek(close);
        if (lex.consume('/')) {
            if (lex.peek() != '(')
                lex.fail("expected '(' after '/'");
            std::size_t dopen = lex.position();
            std::size_t dclose = matching_paren(src, dopen);
            f.divisor = std::string(src.substr(dopen + 1, dclose - dopen - 2));
            lex.seek(dclose);
        }
        return f;
    }
    std::string name = lex.parse_name();
    if (allow_f && name == "f") {
        f.kind = Factor::Kind::FIndex;
        lex.expect('[');
        f.i = lex.parse_long();
        lex.expect(',');
        f.j = lex.parse_long();
        lex.expect(']');
        return f;
    }
    if (std::find(variables.begin(), variables.end(), name) == variables.end())
        lex.fail("unknown symbol '" + name + "'");
    f.kind = Factor::Kind::Variable;
    f.body = name;
    f.exponent = lex.consume('^') ? lex.parse_long() : 1;
    return f;
}

} // namespace

std::vector<Term> parse_terms(std::string_view src, const std::vector<std::string>& variables, bool allow_f)
{
    Lexer lex(src);
    std::vector<Term> terms;
    if (lex.at_end())
        throw ParseError("empty expression");
    bool first = true;
    while (!lex.at_end()) {
        Term t;
        if (lex.consume('-'))
            t.negative = true;
        else if (!lex.consume('+') && !first)
            lex.fail("expected '+' or '-'");
        first = false;
        // Allow "- -3*x" style double signs produced by hand-written input.
        while (true) {
            if (lex.consume('-'))
                t.negative = !t.negative;
            else if (!lex.consume('+'))
                break;
        }
        t.factors.push_back(parse_factor(lex, src, variables, allow_f));
        while (lex.consume('*'))
            t.factors.push_back(parse_factor(lex, src, variables, allow_f));
        terms.push_back(std::move(t));
    }
    return terms;
}

std::string join_terms(const std::vector<std::string>& bodies, const std::vector<bool>& negated)
{
    if (bodies.empty())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < bodies.size(); ++k) {
        if (k == 0)
            out += negated[k] ? "-" : "";
        else
            out += negated[k] ? " - " : " + ";
        out += bodies[k];
    }
    return out;
}

std::string rational_to_string(const mpq_class& r)
{
    return r.get_str();
}

} // namespace g2skein::text
