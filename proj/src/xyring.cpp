#include "g2skein/xyring.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <mutex>

#include "g2skein/errors.hpp"

namespace g2skein {

// ------------------------------------------------------------------ XYPoly

XYPoly XYPoly::monomial(long i, long j, const Scalar& c)
{
    if (i < 0 || j < 0)
        throw IndexOutOfRange("XYPoly exponents must be >= 0");
    return term({i, j}, c);
}

XYPoly operator*(const XYPoly& a, const XYPoly& b)
{
    XYPoly r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            r.add_term(ka + kb, ca * cb);
    return r;
}

XYPoly XYPoly::pow(long e) const
{
    if (e < 0)
        throw IndexOutOfRange("XYPoly::pow: negative exponent");
    XYPoly result(Scalar(1)), base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

std::vector<std::pair<Bidegree, Scalar>> XYPoly::ordered_terms() const
{
    std::vector<std::pair<Bidegree, Scalar>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        long da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db)
            return da > db;
        return a.first.first > b.first.first;
    });
    return out;
}

std::string XYPoly::to_string() const
{
    std::vector<std::string> bodies;
    std::vector<bool> negated;
    for (const auto& [k, c] : ordered_terms()) {
        std::string word;
        auto factor = [&word](const char* name, long e) {
            if (e == 0)
                return;
            if (!word.empty())
                word += "*";
            word += name;
            if (e != 1)
                word += "^" + std::to_string(e);
        };
        factor("x", k.first);
        factor("y", k.second);
        auto [body, neg] = text::format_term(c, word);
        bodies.push_back(std::move(body));
        negated.push_back(neg);
    }
    return text::join_terms(bodies, negated);
}

XYPoly XYPoly::parse(std::string_view src)
{
    XYPoly total;
    for (const auto& term : text::parse_terms(src, {"x", "y"})) {
        Scalar c(term.negative ? -1 : 1);
        Bidegree e;
        for (const auto& f : term.factors) {
            if (f.kind == text::Factor::Kind::Variable)
                (f.body == "x" ? e.first : e.second) += f.exponent;
            else
                c *= text::scalar_factor(f);
        }
        if (e.first < 0 || e.second < 0)
            throw ParseError("negative exponent in polynomial: " + std::string(src));
        total.add_term(e, c);
    }
    return total;
}

Bidegree D2_monomial(Bidegree e)
{
    return {e.first + 2 * e.second, e.first + e.second};
}

Bidegree D2(const XYPoly& p)
{
    if (p.is_zero())
        throw ZeroPolynomial("D2");
    Bidegree best = D2_monomial(p.terms().begin()->first);
    for (const auto& [k, c] : p.terms())
        best = std::max(best, D2_monomial(k));
    return best;
}

// ------------------------------------------------------- coefficient tables

const XYPoly& e_coeff(long i)
{
    static const std::array<XYPoly, 4> lower = {
        XYPoly::parse("1"),
        XYPoly::parse("x"),
        XYPoly::parse("x + y"),
        XYPoly::parse("x^2 - y"),
    };
    if (i < 0 || i > 7)
        throw IndexOutOfRange("e_coeff: index " + std::to_string(i) + " outside 0..7");
    return lower[static_cast<std::size_t>(std::min(i, 7 - i))];
}

const XYPoly& f_coeff(long i)
{
    static const std::array<XYPoly, 8> lower = {
        XYPoly::parse("1"),
        XYPoly::parse("y"),
        XYPoly::parse("x^3 - x^2 - 2*x*y - x"),
        XYPoly::parse("x^4 - x^3 - 3*x^2*y - x^2 + 2*y^2 + x + y"),
        XYPoly::parse("x^3*y - x^3 - x^2*y - 2*x*y^2 + x^2 + x*y - y^2 + x + y"),
        XYPoly::parse("x^5 - 2*x^4 - 5*x^3*y + 3*x^2*y + 6*x*y^2 + y^3 + 2*x^2 + 5*x*y + 2*y^2 - x"),
        XYPoly::parse("x^4 - 3*x^3*y + x^2*y^2 - x^2*y + 4*x*y^2 - 2*x^2 + 3*x*y + 2*y^2 + y"),
        XYPoly::parse("-2*x^5 + 4*x^4 + 6*x^3*y + 2*x^2*y^2 + 2*x^3 - 4*x^2*y - 8*x*y^2 - 2*y^3 - 6*x^2 - "
                      "6*x*y - 6*y^2 + 2"),
    };
    if (i < 0 || i > 14)
        throw IndexOutOfRange("f_coeff: index " + std::to_string(i) + " outside 0..14");
    return lower[static_cast<std::size_t>(std::min(i, 14 - i))];
}

namespace {

// Newton-type recursion shared by P (degree 7) and Q (degree 14).
class PowerSumTable {
public:
    using Coeff = const XYPoly& (*)(long);

    PowerSumTable(long rank, Coeff coeff) : rank_(rank), coeff_(coeff) { values_.emplace_back(Scalar(rank)); }

    const XYPoly& get(long k)
    {
        if (k < 0)
            throw IndexOutOfRange("power-sum index must be >= 0");
        std::lock_guard lock(mutex_);
        while (static_cast<long>(values_.size()) <= k)
            values_.push_back(next(static_cast<long>(values_.size())));
        return values_[static_cast<std::size_t>(k)];
    }

private:
    XYPoly next(long k) const
    {
        XYPoly r;
        const long top = k < rank_ ? k - 1 : rank_;
        for (long i = 1; i <= top; ++i) {
            XYPoly t = coeff_(i) * values_[static_cast<std::size_t>(k - i)];
            r += (i % 2 == 1) ? t : -t;
        }
        if (k < rank_) {
            XYPoly t = coeff_(k) * Scalar(k);
            r += (k % 2 == 1) ? t : -t;
        }
        return r;
    }

    long rank_;
    Coeff coeff_;
    std::mutex mutex_;
    // deque keeps references to published values stable while growing.
    std::deque<XYPoly> values_;
};

} // namespace

const XYPoly& P(long k)
{
    static PowerSumTable table(7, &e_coeff);
    return table.get(k);
}

const XYPoly& Q(long k)
{
    static PowerSumTable table(14, &f_coeff);
    return table.get(k);
}

LLPoly psi(const XYPoly& p)
{
    static const LLPoly x1 = bold_x(1);
    static const LLPoly y1 = bold_y(1);
    return evaluate(p, x1, y1);
}

XYPoly compose_pq(const XYPoly& s, long i)
{
    return evaluate(s, P(i), Q(i));
}

// ---------------------------------------------------------------- PQ basis

std::string PQCoords::to_string() const
{
    std::vector<std::string> bodies;
    std::vector<bool> negated;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string word;
        if (it->first.first != 0)
            word = "P" + std::to_string(it->first.first);
        if (it->first.second != 0)
            word += (word.empty() ? "" : "*") + std::string("Q") + std::to_string(it->first.second);
        auto [body, neg] = text::format_term(it->second, word);
        bodies.push_back(std::move(body));
        negated.push_back(neg);
    }
    return text::join_terms(bodies, negated);
}

XYPoly pq_product(long k, long l)
{
    XYPoly pk = k == 0 ? XYPoly(Scalar(1)) : P(k);
    XYPoly ql = l == 0 ? XYPoly(Scalar(1)) : Q(l);
    return pk * ql;
}

PQCoords to_pq_basis(const XYPoly& p)
{
    PQCoords coords;
    XYPoly rest = p;
    // D2(P_k Q_l) = D2(x^k y^l), and both are monic, so the D2-top monomial
    // x^k y^l of the remainder names the next basis element.
    while (!rest.is_zero()) {
        Bidegree top = D2(rest);
        long l = top.first - top.second;
        long k = top.second - l;
        Scalar c = rest.coefficient({k, l});
        coords.add_term({k, l}, c);
        rest -= pq_product(k, l) * c;
    }
    return coords;
}

XYPoly from_pq_basis(const PQCoords& coords)
{
    XYPoly r;
    for (const auto& [kl, c] : coords.terms())
        r += pq_product(kl.first, kl.second) * c;
    return r;
}

} // namespace g2skein
