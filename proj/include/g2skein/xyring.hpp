#pragma once

// The polynomial ring R[x,y] modelling the annulus algebra, with the G2
// power-sum families P_k, Q_k and their coefficient tables.

#include <string>
#include <string_view>

#include "g2skein/weblambda.hpp"

namespace g2skein {

/// Polynomial in commuting x, y; the key (i, j) is x^i y^j with i, j >= 0.
class XYPoly : public LinearCombination<XYPoly, Bidegree> {
public:
    XYPoly() = default;
    XYPoly(const Scalar& c) { add_term({0, 0}, c); }

    static XYPoly monomial(long i, long j, const Scalar& c = Scalar(1));
    static XYPoly x() { return monomial(1, 0); }
    static XYPoly y() { return monomial(0, 1); }

    friend XYPoly operator*(const XYPoly& a, const XYPoly& b);
    XYPoly& operator*=(const XYPoly& o) { return *this = *this * o; }
    using LinearCombination::operator*=;
    XYPoly pow(long e) const;

    /// Terms in printing order: total degree descending, then x-degree descending.
    std::vector<std::pair<Bidegree, Scalar>> ordered_terms() const;

    std::string to_string() const;
    static XYPoly parse(std::string_view src);
};

/// Bidegree of x^i y^j is (i + 2j, i + j); D2 of a sum is the lex maximum.
Bidegree D2_monomial(Bidegree xy_exponent);
/// Throws ZeroPolynomial.
Bidegree D2(const XYPoly& p);

/// Coefficients e_0..e_7 and f_0..f_14 of the P and Q recursions.
/// Throw IndexOutOfRange outside those ranges.
const XYPoly& e_coeff(long i);
const XYPoly& f_coeff(long i);

/// P_0 = 7, Q_0 = 14; P_k, Q_k for k >= 1 are monic in the D2 sense.
/// Values are memoised once and shared across threads.
const XYPoly& P(long k);
const XYPoly& Q(long k);

/// Horner evaluation of `p` at (x, y) in any commutative ring T with a unit
/// `one`, `T * Scalar`, `T + T` and the given multiplication.
template <class T, class Mul>
T evaluate(const XYPoly& p, const T& x, const T& y, const T& one, Mul&& mul)
{
    if (p.is_zero())
        return one * Scalar(0);
    long max_j = 0;
    for (const auto& [k, c] : p.terms())
        max_j = std::max(max_j, k.second);
    // coefficients grouped by y-degree, each a polynomial in x.
    std::vector<std::map<long, Scalar>> rows(static_cast<std::size_t>(max_j + 1));
    for (const auto& [k, c] : p.terms())
        rows[static_cast<std::size_t>(k.second)].emplace(k.first, c);

    auto horner_x = [&](const std::map<long, Scalar>& row) {
        if (row.empty())
            return one * Scalar(0);
        long i = row.rbegin()->first;
        T acc = one * row.rbegin()->second;
        for (auto it = std::next(row.rbegin()); it != row.rend(); ++it) {
            for (; i > it->first; --i)
                acc = mul(acc, x);
            acc += one * it->second;
        }
        for (; i > 0; --i)
            acc = mul(acc, x);
        return acc;
    };

    T acc = horner_x(rows.back());
    for (long j = max_j - 1; j >= 0; --j) {
        acc = mul(acc, y);
        if (!rows[static_cast<std::size_t>(j)].empty())
            acc += horner_x(rows[static_cast<std::size_t>(j)]);
    }
    return acc;
}

inline XYPoly evaluate(const XYPoly& p, const XYPoly& x, const XYPoly& y)
{
    return evaluate(p, x, y, XYPoly(Scalar(1)), [](const XYPoly& a, const XYPoly& b) { return a * b; });
}

inline LLPoly evaluate(const XYPoly& p, const LLPoly& x, const LLPoly& y)
{
    return evaluate(p, x, y, LLPoly(Scalar(1)), [](const LLPoly& a, const LLPoly& b) { return a * b; });
}

/// The embedding R[x,y] -> E, x -> x^(1), y -> y^(1).
LLPoly psi(const XYPoly& p);

/// S(P_i, Q_i).
XYPoly compose_pq(const XYPoly& s, long i);

/// Coordinates in the basis P_k Q_l with the renormalisation P_0 = Q_0 = 1;
/// the key is (k, l).
class PQCoords : public LinearCombination<PQCoords, Bidegree> {
public:
    std::string to_string() const;
};

/// P_k Q_l with P_0 = Q_0 = 1.
XYPoly pq_product(long k, long l);
PQCoords to_pq_basis(const XYPoly& p);
XYPoly from_pq_basis(const PQCoords& coords);

} // namespace g2skein
