#include "doctest.h"

#include "g2skein/weblambda.hpp"
#include "generators.hpp"

using namespace g2skein;

namespace {

LLPoly at_q_equal_one(const LLPoly& p)
{
    Field one = Field::cyclotomic(1);
    return p.map_coefficients([&](const Scalar& c) { return one.lift(c); });
}

// Subset enumeration; independent of the incremental recurrence.
LLPoly elementary_by_subsets(const std::vector<LLPoly>& terms, long i)
{
    LLPoly r;
    const unsigned n = static_cast<unsigned>(terms.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != i)
            continue;
        LLPoly prod(Scalar(1));
        for (unsigned k = 0; k < n; ++k)
            if (mask & (1u << k))
                prod *= terms[k];
        r += prod;
    }
    return r;
}

LLPoly random_ll(testing::Gen& gen, int max_terms = 5)
{
    LLPoly p;
    int n = static_cast<int>(gen.range(1, max_terms));
    for (int k = 0; k < n; ++k)
        p.add_term({gen.range(-3, 3), gen.range(-3, 3)}, Scalar(gen.range(-4, 4)));
    return p;
}

} // namespace

TEST_CASE("degrees")
{
    CHECK(LLPoly::monomial(1, 1).d1() == 2);
    CHECK((LLPoly::monomial(1, 0) + LLPoly::monomial(0, 1)).d1() == 1);
    CHECK(LLPoly::monomial(-1, -1).d1() == -2);
    CHECK(bold_x(1).d2() == Bidegree{1, 1});
    CHECK(bold_y(1).d2() == Bidegree{2, 1});
    CHECK((LLPoly::monomial(3, 1) + LLPoly::monomial(3, 2)).d2() == Bidegree{3, 2});
    CHECK_THROWS_AS(LLPoly().d2(), ZeroPolynomial);
    CHECK_THROWS_AS(LLPoly().d1(), ZeroPolynomial);
}

TEST_CASE("d2 is additive under multiplication")
{
    testing::Gen gen(5);
    for (int trial = 0; trial < 100; ++trial) {
        LLPoly a = random_ll(gen), b = random_ll(gen);
        if (a.is_zero() || b.is_zero())
            continue;
        CHECK((a * b).d2() == a.d2() + b.d2());
    }
}

TEST_CASE("power-sum elements")
{
    LLPoly x = bold_x(1);
    CHECK(x.size() == 7);
    for (const auto& [k, c] : x.terms())
        CHECK(c == Scalar(1));
    CHECK(bold_x(0) == LLPoly(Scalar(7)));
    CHECK(bold_y(0) == LLPoly(Scalar(14)));

    LLPoly y = bold_y(1);
    CHECK(y.size() == 13);
    CHECK(y.coefficient({0, 0}) == Scalar(2));
    int unit = 0;
    for (const auto& [k, c] : y.terms())
        unit += c == Scalar(1);
    CHECK(unit == 12);
    CHECK(bold_x_terms(3).size() == 7);
    CHECK(bold_y_terms(3).size() == 14);
}

TEST_CASE("substitution l -> l^i agrees with the listed sums")
{
    for (long i = 0; i <= 6; ++i) {
        CHECK(bold_x(1).substitute_power(i) == bold_x(i));
        CHECK(bold_y(1).substitute_power(i) == bold_y(i));
    }
}

TEST_CASE("tilde variants")
{
    CHECK(tilde_x(0) == LLPoly(Scalar(7)));
    CHECK(tilde_y(0) == LLPoly(Scalar(14)));
    for (long i = 0; i <= 5; ++i) {
        CHECK(at_q_equal_one(tilde_x(i)) == bold_x(i));
        CHECK(at_q_equal_one(tilde_y(i)) == bold_y(i));
    }
    for (long i = 1; i <= 4; ++i)
        CHECK(tilde_x(i).coefficient({i, i}) == Scalar(QRat::q_power(4 * i)));

    // Each summand carries the weight q^(2 d1).
    auto weighted = [](const std::vector<LLPoly>& terms) {
        LLPoly r;
        for (const auto& t : terms)
            r += t * Scalar(QRat::q_power(2 * t.d1()));
        return r;
    };
    for (long i = 0; i <= 4; ++i) {
        CHECK(tilde_x(i) == weighted(bold_x_terms(i)));
        CHECK(tilde_y(i) == weighted(bold_y_terms(i)));
    }
}

TEST_CASE("E' expansion")
{
    LLPoly inv_sum = LLPoly::monomial(-1, 0) + LLPoly::monomial(0, -1);
    CHECK(to_eprime(inv_sum) == EPrimePoly::basis(1, -1));
    CHECK(to_eprime(LLPoly::monomial(1, 1)) == EPrimePoly::basis(0, 1));
    CHECK_THROWS_AS(to_eprime(LLPoly::monomial(1, 0)), NotSymmetric);

    for (long i = 0; i <= 4; ++i) {
        CHECK(to_eprime(bold_x(i)).expand() == bold_x(i));
        CHECK(to_eprime(bold_y(i)).expand() == bold_y(i));
        CHECK(to_eprime(tilde_y(i)).expand() == tilde_y(i));
    }

    // Basis monomials are monic of bidegree (i+j, j).
    for (long i = 0; i <= 5; ++i)
        for (long j = -3; j <= 3; ++j) {
            LLPoly e = EPrimePoly::basis(i, j).expand();
            CHECK(e.d2() == Bidegree{i + j, j});
            CHECK(e.coefficient(e.d2()) == Scalar(1));
        }
}

TEST_CASE("to_eprime and expand are inverse")
{
    testing::Gen gen(17);
    for (int trial = 0; trial < 60; ++trial) {
        LLPoly p = random_ll(gen);
        LLPoly sym = p + p.swapped();
        CHECK(to_eprime(sym).expand() == sym);

        EPrimePoly e;
        for (int k = 0; k < 4; ++k)
            e.add_term({gen.range(0, 4), gen.range(-3, 3)}, Scalar(gen.range(-3, 3)));
        CHECK(to_eprime(e.expand()) == e);
    }
}

TEST_CASE("elementary symmetric and power sums")
{
    auto xt = bold_x_terms(1);
    auto yt = bold_y_terms(1);
    CHECK(elementary_symmetric(xt, 0) == LLPoly(Scalar(1)));
    CHECK(elementary_symmetric(xt, 7) == LLPoly(Scalar(1)));
    CHECK_THROWS_AS(elementary_symmetric(xt, 8), IndexOutOfRange);
    CHECK_THROWS_AS(elementary_symmetric(xt, -1), IndexOutOfRange);
    CHECK_THROWS_AS(power_sum(xt, -1), IndexOutOfRange);

    for (long i = 0; i <= 7; ++i)
        CHECK(elementary_symmetric(xt, i) == elementary_by_subsets(xt, i));
    for (long i : {0, 1, 2, 5, 13, 14})
        CHECK(elementary_symmetric(yt, i) == elementary_by_subsets(yt, i));

    for (long k = 0; k <= 8; ++k) {
        CHECK(power_sum(xt, k) == bold_x(k));
        CHECK(power_sum(yt, k) == bold_y(k));
    }
    CHECK(bold_y(1) == elementary_symmetric(xt, 2) - bold_x(1));
}

TEST_CASE("text round trip")
{
    CHECK(bold_x(1).to_string() == "l1*l2 + l1 + l2 + 1 + l2^-1 + l1^-1 + l1^-1*l2^-1");
    testing::Gen gen(23);
    for (int trial = 0; trial < 30; ++trial) {
        LLPoly p = random_ll(gen) * Scalar(QRat(gen.laurent(2), quantum_int(2)));
        CHECK(LLPoly::parse(p.to_string()) == p);
        CHECK(LLPoly::parse(p.to_string()).to_string() == p.to_string());
    }
    CHECK(LLPoly::parse("3*l1^2*l2^-1 - l2") == LLPoly::monomial(2, -1, Scalar(3)) - LLPoly::monomial(0, 1));
}
