#include "g2skein/weblambda.hpp"

#include "g2skein/errors.hpp"

namespace g2skein {

namespace {

std::string lambda_word(Bidegree e)
{
    std::string w;
    auto factor = [&w](const char* name, long k) {
        if (k == 0)
            return;
        if (!w.empty())
            w += "*";
        w += name;
        if (k != 1)
            w += "^" + std::to_string(k);
    };
    factor("l1", e.first);
    factor("l2", e.second);
    return w;
}

Integer binomial(long n, long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace

// ------------------------------------------------------------------ LLPoly

LLPoly operator*(const LLPoly& a, const LLPoly& b)
{
    LLPoly r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            r.add_term(ka + kb, ca * cb);
    return r;
}

LLPoly LLPoly::pow(long e) const
{
    if (e < 0)
        throw IndexOutOfRange("LLPoly::pow: negative exponent");
    LLPoly result(Scalar(1)), base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

Bidegree LLPoly::d2() const
{
    if (is_zero())
        throw ZeroPolynomial("d2");
    return terms_.rbegin()->first;
}

long LLPoly::d1() const
{
    Bidegree top = d2();
    return top.first + top.second;
}

LLPoly LLPoly::swapped() const
{
    LLPoly r;
    for (const auto& [k, c] : terms_)
        r.add_term({k.second, k.first}, c);
    return r;
}

LLPoly LLPoly::substitute_power(long i) const
{
    LLPoly r;
    for (const auto& [k, c] : terms_)
        r.add_term({k.first * i, k.second * i}, c);
    return r;
}

std::string LLPoly::to_string() const
{
    std::vector<std::string> bodies;
    std::vector<bool> negated;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [body, neg] = text::format_term(it->second, lambda_word(it->first));
        bodies.push_back(std::move(body));
        negated.push_back(neg);
    }
    return text::join_terms(bodies, negated);
}

LLPoly LLPoly::parse(std::string_view src)
{
    LLPoly total;
    for (const auto& term : text::parse_terms(src, {"l1", "l2"})) {
        Scalar c(term.negative ? -1 : 1);
        Bidegree e;
        for (const auto& f : term.factors) {
            if (f.kind == text::Factor::Kind::Variable)
                (f.body == "l1" ? e.first : e.second) += f.exponent;
            else
                c *= text::scalar_factor(f);
        }
        total.add_term(e, c);
    }
    return total;
}

// -------------------------------------------------------------- EPrimePoly

EPrimePoly EPrimePoly::basis(long i, long j, const Scalar& c)
{
    if (i < 0)
        throw IndexOutOfRange("E' basis needs a nonnegative power of l1 + l2");
    return term({i, j}, c);
}

LLPoly EPrimePoly::expand() const
{
    LLPoly r;
    for (const auto& [k, c] : terms_) {
        // (l1 + l2)^i (l1 l2)^j = sum_t C(i,t) l1^{j+t} l2^{j+i-t}
        for (long t = 0; t <= k.first; ++t)
            r.add_term({k.second + t, k.second + k.first - t}, c * Scalar(binomial(k.first, t)));
    }
    return r;
}

std::string EPrimePoly::to_string() const
{
    std::vector<std::string> bodies;
    std::vector<bool> negated;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string word;
        if (it->first.first != 0)
            word = "(l1 + l2)" + (it->first.first == 1 ? std::string() : "^" + std::to_string(it->first.first));
        if (it->first.second != 0) {
            if (!word.empty())
                word += "*";
            word += "(l1*l2)" + (it->first.second == 1 ? std::string() : "^" + std::to_string(it->first.second));
        }
        auto [body, neg] = text::format_term(it->second, word);
        bodies.push_back(std::move(body));
        negated.push_back(neg);
    }
    return text::join_terms(bodies, negated);
}

EPrimePoly to_eprime(const LLPoly& p)
{
    if (!p.is_symmetric())
        throw NotSymmetric();
    EPrimePoly result;
    LLPoly rest = p;
    // The top monomial l1^m l2^n has m >= n by symmetry; subtracting
    // c (l1 + l2)^{m-n} (l1 l2)^n strictly lowers d2.
    while (!rest.is_zero()) {
        Bidegree top = rest.d2();
        Scalar c = rest.coefficient(top);
        EPrimePoly step = EPrimePoly::basis(top.first - top.second, top.second, c);
        result += step;
        rest -= step.expand();
    }
    return result;
}

// ---------------------------------------------------- distinguished elements

std::vector<LLPoly> bold_x_terms(long i)
{
    return {
        LLPoly::monomial(i, 0),   LLPoly::monomial(0, i),   LLPoly::monomial(i, i),  LLPoly::monomial(0, 0),
        LLPoly::monomial(-i, -i), LLPoly::monomial(0, -i), LLPoly::monomial(-i, 0),
    };
}

std::vector<LLPoly> bold_y_terms(long i)
{
    return {
        LLPoly::monomial(2 * i, i),   LLPoly::monomial(i, 2 * i),    LLPoly::monomial(i, i),
        LLPoly::monomial(i, 0),       LLPoly::monomial(0, i),        LLPoly::monomial(i, -i),
        LLPoly::monomial(0, 0),       LLPoly::monomial(0, 0),        LLPoly::monomial(-i, i),
        LLPoly::monomial(0, -i),      LLPoly::monomial(-i, 0),       LLPoly::monomial(-i, -i),
        LLPoly::monomial(-i, -2 * i), LLPoly::monomial(-2 * i, -i),
    };
}

namespace {

LLPoly sum(const std::vector<LLPoly>& terms)
{
    LLPoly r;
    for (const auto& t : terms)
        r += t;
    return r;
}

} // namespace

LLPoly bold_x(long i)
{
    if (i < 0)
        throw IndexOutOfRange("bold_x: i must be >= 0");
    return sum(bold_x_terms(i));
}

LLPoly bold_y(long i)
{
    if (i < 0)
        throw IndexOutOfRange("bold_y: i must be >= 0");
    return sum(bold_y_terms(i));
}

LLPoly tilde_x(long i)
{
    if (i < 0)
        throw IndexOutOfRange("tilde_x: i must be >= 0");
    auto q = [](long e) { return Scalar(QRat::q_power(e)); };
    return LLPoly::monomial(i, 0, q(2 * i)) + LLPoly::monomial(0, i, q(2 * i)) +
           LLPoly::monomial(-i, 0, q(-2 * i)) + LLPoly::monomial(0, -i, q(-2 * i)) +
           LLPoly::monomial(i, i, q(4 * i)) + LLPoly::monomial(-i, -i, q(-4 * i)) + LLPoly(Scalar(1));
}

LLPoly tilde_y(long j)
{
    if (j < 0)
        throw IndexOutOfRange("tilde_y: j must be >= 0");
    auto q = [](long e) { return Scalar(QRat::q_power(e)); };
    return LLPoly::monomial(2 * j, j, q(6 * j)) + LLPoly::monomial(j, 2 * j, q(6 * j)) +
           LLPoly::monomial(j, j, q(4 * j)) + LLPoly::monomial(j, 0, q(2 * j)) + LLPoly::monomial(0, j, q(2 * j)) +
           LLPoly::monomial(j, -j) + LLPoly::monomial(-j, j) + LLPoly(Scalar(2)) +
           LLPoly::monomial(0, -j, q(-2 * j)) + LLPoly::monomial(-j, 0, q(-2 * j)) +
           LLPoly::monomial(-j, -j, q(-4 * j)) + LLPoly::monomial(-j, -2 * j, q(-6 * j)) +
           LLPoly::monomial(-2 * j, -j, q(-6 * j));
}

LLPoly elementary_symmetric(const std::vector<LLPoly>& terms, long i)
{
    if (i < 0 || i > static_cast<long>(terms.size()))
        throw IndexOutOfRange("elementary_symmetric: index " + std::to_string(i) + " outside 0.." +
                              std::to_string(terms.size()));
    // e[k] after processing t_1..t_s is the k-th elementary sum of those terms.
    std::vector<LLPoly> e(static_cast<std::size_t>(i + 1));
    e[0] = LLPoly(Scalar(1));
    for (const auto& t : terms)
        for (long k = i; k >= 1; --k)
            e[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k - 1)] * t;
    return e[static_cast<std::size_t>(i)];
}

LLPoly power_sum(const std::vector<LLPoly>& terms, long i)
{
    if (i < 0)
        throw IndexOutOfRange("power_sum: index must be >= 0");
    LLPoly r;
    for (const auto& t : terms)
        r += t.pow(i);
    return r;
}

} // namespace g2skein
