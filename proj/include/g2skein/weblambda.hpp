#pragma once

// The Laurent ring E = R[l1^+-1, l2^+-1], its symmetric subring
// E' = R[l1 + l2, (l1 l2)^+-1], and the power-sum elements built from the
// weights of the 7- and 14-dimensional G2 representations.

#include <string>
#include <string_view>
#include <vector>

#include "g2skein/linear.hpp"

namespace g2skein {

/// Laurent polynomial in l1, l2; the key (i, j) is the monomial l1^i l2^j.
class LLPoly : public LinearCombination<LLPoly, Bidegree> {
public:
    LLPoly() = default;
    LLPoly(const Scalar& c) { add_term({0, 0}, c); }

    static LLPoly monomial(long i, long j, const Scalar& c = Scalar(1)) { return term({i, j}, c); }

    friend LLPoly operator*(const LLPoly& a, const LLPoly& b);
    LLPoly& operator*=(const LLPoly& o) { return *this = *this * o; }
    using LinearCombination::operator*=;
    LLPoly pow(long e) const;

    /// Lexicographically largest exponent pair. Throws ZeroPolynomial.
    Bidegree d2() const;
    /// Total degree of the d2-top monomial. Throws ZeroPolynomial.
    long d1() const;

    /// l1 <-> l2.
    LLPoly swapped() const;
    bool is_symmetric() const { return swapped() == *this; }
    /// The endomorphism l_k -> l_k^i.
    LLPoly substitute_power(long i) const;

    std::string to_string() const;
    static LLPoly parse(std::string_view src);
};

/// Element of E' in the basis (l1 + l2)^i (l1 l2)^j, i >= 0; key is (i, j).
class EPrimePoly : public LinearCombination<EPrimePoly, Bidegree> {
public:
    EPrimePoly() = default;
    EPrimePoly(const Scalar& c) { add_term({0, 0}, c); }

    /// (l1 + l2)^i (l1 l2)^j.
    static EPrimePoly basis(long i, long j, const Scalar& c = Scalar(1));

    LLPoly expand() const;
    std::string to_string() const;
};

/// Expansion of a symmetric Laurent polynomial in the E' basis.
/// Throws NotSymmetric.
EPrimePoly to_eprime(const LLPoly& p);

/// The seven summands of x^(i), in the listed order.
std::vector<LLPoly> bold_x_terms(long i);
/// The fourteen summands of y^(i), in the listed order (two of them are 1).
std::vector<LLPoly> bold_y_terms(long i);
LLPoly bold_x(long i);
LLPoly bold_y(long i);

/// q-weighted variants: each summand of x^(i) / y^(j) scaled by q^(2 d1).
LLPoly tilde_x(long i);
LLPoly tilde_y(long j);

/// i-th elementary symmetric sum of `terms`. Throws IndexOutOfRange unless 0 <= i <= size.
LLPoly elementary_symmetric(const std::vector<LLPoly>& terms, long i);
/// Sum of the i-th powers of `terms`. Throws IndexOutOfRange if i < 0.
LLPoly power_sum(const std::vector<LLPoly>& terms, long i);

} // namespace g2skein
