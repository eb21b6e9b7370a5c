#include "doctest.h"

#include <set>

#include "g2skein/annulus11.hpp"
#include "g2skein/errors.hpp"
#include "generators.hpp"

using namespace g2skein;

namespace {

Scalar qs(long e)
{
    return Scalar(QRat::q_power(e));
}

Scalar qint(long k)
{
    return Scalar(quantum_int(k));
}

A11Elem random_elem(testing::Gen& gen, long bound, bool q_coeffs)
{
    A11Elem u;
    long n = gen.range(1, 4);
    for (long t = 0; t < n; ++t) {
        Scalar c(gen.range(-3, 3));
        if (q_coeffs && gen.coin())
            c *= qs(gen.range(-2, 2));
        if (gen.coin())
            u.add_term(BasisKey::ac(gen.range(-bound, bound), gen.range(0, bound)), c);
        else
            u.add_term(BasisKey::f(gen.range(0, bound), gen.range(0, bound)), c);
    }
    return u;
}

} // namespace

TEST_CASE("basis ordering and printing")
{
    A11Elem u = A11Elem::f(1, 0) + A11Elem::ac(2, 1) + A11Elem::ac(-1, 0, Scalar(3)) + A11Elem(Scalar(-2));
    CHECK(u.to_string() == "3*a^-1 - 2 + a^2*c + f[1,0]");
    CHECK(A11Elem().to_string() == "0");
    CHECK(A11Elem::parse(u.to_string()) == u);
    CHECK_THROWS_AS(A11Elem::parse("a*f[0,0]"), ParseError);
    CHECK_THROWS_AS(A11Elem::parse("c^-1"), ParseError);
    CHECK_THROWS_AS(BasisKey::f(-1, 0), IndexOutOfRange);
}

TEST_CASE("presentation relations")
{
    A11Algebra alg(Field::generic());
    A11Elem f = A11Elem::f();
    // f^2 = f_{2,0} - [2]^2 f_{0,1} + [8]/[4] f_{1,0} - [7] f
    A11Elem f2 = A11Elem::f(2, 0) - A11Elem::f(0, 1, qint(2) * qint(2)) +
                 A11Elem::f(1, 0, qs(4) + qs(-4)) - A11Elem::f(0, 0, qint(7));
    CHECK(alg.mul(f, f) == f2);
    CHECK(alg.mul(A11Elem::ac(1, 0), A11Elem::ac(-1, 0)) == A11Elem(Scalar(1)));
    CHECK(alg.mul(A11Elem::ac(0, 1), f) == A11Elem::f(1, 0) - A11Elem::f(0, 0, qs(2) - Scalar(1) + qs(-2)));
    for (long k = -3; k <= 3; ++k)
        CHECK(alg.mul(A11Elem::ac(k, 0), A11Elem::f(2, 3)) == A11Elem::f(2, 3));
}

TEST_CASE("commutative and associative on random elements")
{
    A11Algebra alg(Field::generic());
    testing::Gen gen(101);
    for (int n = 0; n < 40; ++n) {
        A11Elem u = random_elem(gen, 6, true), v = random_elem(gen, 6, true), w = random_elem(gen, 6, false);
        CHECK(alg.mul(u, v) == alg.mul(v, u));
        CHECK(alg.mul(alg.mul(u, v), w) == alg.mul(u, alg.mul(v, w)));
        CHECK(alg.mul(A11Elem(Scalar(1)), u) == u);
    }
}

TEST_CASE("star elements")
{
    A11Algebra alg(Field::generic());
    Scalar inv2 = qint(2).inv();
    CHECK(alg.x_up_star() == A11Elem::ac(1, 0, inv2 * qs(3)) + A11Elem::ac(-1, 0, inv2 * qs(-3)) +
                                 A11Elem::ac(0, 1, inv2 * qs(1)) + A11Elem::ac(-1, 1, inv2 * qs(-1)));
    CHECK(alg.x_down_star() == alg.x_up_star().bar());
    CHECK(alg.y_bar() - alg.y_up_star() == A11Elem::f(0, 0, inv2 * inv2));
    CHECK(alg.y_under() - alg.y_down_star() == A11Elem::f(0, 0, inv2 * inv2));
    // y^star carries -f/[2]^2, so y-bar has no f term.
    CHECK(alg.y_bar().coefficient(BasisKey::f(0, 0)).is_zero());

    A11Algebra one(Field::cyclotomic(1));
    CHECK(one.x_up_star() == one.x_down_star());
    CHECK(one.y_up_star() == one.y_down_star());
}

TEST_CASE("F maps agree with the explicit star elements")
{
    A11Algebra alg(Field::generic());
    CHECK(alg.F_up(EPrimePoly(Scalar(1))) == A11Elem(Scalar(1)));
    CHECK(alg.F_up(EPrimePoly::basis(0, 1)) == A11Elem::ac(1, 0, qs(2)));
    CHECK(alg.F_down(EPrimePoly::basis(0, 1)) == A11Elem::ac(1, 0, qs(-2)));
    CHECK(alg.F_up(to_eprime(bold_x(1))) == alg.x_up_star());
    CHECK(alg.F_down(to_eprime(bold_x(1))) == alg.x_down_star());
    CHECK(alg.F_up(to_eprime(bold_y(1))) == alg.y_bar());
    CHECK(alg.F_down(to_eprime(bold_y(1))) == alg.y_under());
}

TEST_CASE("f-transparency and generation of f_{i,j}")
{
    A11Algebra alg(Field::generic());
    A11Elem f = A11Elem::f();
    CHECK(alg.mul(alg.x_up_star(), f) == alg.mul(alg.x_down_star(), f));
    CHECK(alg.mul(alg.y_up_star(), f) == alg.mul(alg.y_down_star(), f));
    CHECK(alg.mul(alg.y_bar(), f) == alg.mul(alg.y_under(), f));
    for (long i = 0; i <= 4; ++i)
        for (long j = 0; j <= 4; ++j) {
            CAPTURE(i);
            CAPTURE(j);
            A11Elem prod = alg.mul(alg.mul(alg.pow(alg.x_up_star(), i), alg.pow(alg.y_up_star(), j)), f);
            CHECK(prod == A11Elem::f(i, j));
        }
}

TEST_CASE("degree shift and tilde identities")
{
    A11Algebra alg(Field::generic());
    // (l1 + l2)^i (l1 l2)^j is homogeneous of degree i + 2j.
    for (long i = 0; i <= 4; ++i)
        for (long j = -3; j <= 3; ++j) {
            long k = i + 2 * j;
            EPrimePoly p = EPrimePoly::basis(i, j);
            CHECK(alg.F_up(p) == alg.F_down(p) * qs(2 * k));
        }
    for (long i = 1; i <= 3; ++i) {
        CAPTURE(i);
        CHECK(alg.F_up(to_eprime(bold_x(i))) == alg.F_down(to_eprime(tilde_x(i))));
        CHECK(alg.F_up(to_eprime(bold_y(i))) == alg.F_down(to_eprime(tilde_y(i))));
    }
}

TEST_CASE("leading AC bidegree")
{
    A11Algebra alg(Field::generic());
    CHECK(ac_lead_bidegree(A11Elem::ac(3, 1)) == Bidegree{1, 3});
    CHECK(ac_lead_bidegree(A11Elem(Scalar(1))) == Bidegree{0, 0});
    CHECK(ac_lead_bidegree(A11Elem::ac(5, 0) + A11Elem::f(9, 9)) == Bidegree{0, 5});
    CHECK_THROWS_AS(ac_lead_bidegree(A11Elem::f(0, 0)), NoACTerm);
    CHECK_THROWS_AS(ac_lead_bidegree(A11Elem()), NoACTerm);
    // (q^2 a)^i (q/[2] (c - a - 1))^j has top monomial a^i c^j.
    CHECK(ac_lead_bidegree(alg.F_up(EPrimePoly::basis(1, 0))) == Bidegree{1, 0});
    std::set<Bidegree> seen;
    for (long i = -3; i <= 3; ++i)
        for (long j = 0; j <= 4; ++j) {
            Bidegree lead = ac_lead_bidegree(alg.F_up(EPrimePoly::basis(j, i)));
            CHECK(lead == Bidegree{j, i});
            CHECK(seen.insert(lead).second);
        }
}

TEST_CASE("denominators at small orders")
{
    CHECK_THROWS_AS(A11Algebra(Field::cyclotomic(4)), DenominatorVanishes);
    CHECK_THROWS_AS(A11Algebra(Field::cyclotomic(8)), DenominatorVanishes);
    CHECK_THROWS_AS(A11Algebra(Field::cyclotomic(3)), DenominatorVanishes);
    CHECK_THROWS_AS(A11Algebra(Field::cyclotomic(24)), DenominatorVanishes);
    CHECK_NOTHROW(A11Algebra(Field::cyclotomic(10)));
    CHECK_NOTHROW(A11Algebra(Field::cyclotomic(16)));
}

TEST_CASE("transparency defect")
{
    A11Algebra generic(Field::generic());
    CHECK(generic.transparency_defect(XYPoly(Scalar(3))).is_zero());
    CHECK(generic.star_sub(XYPoly::x(), StarMode::Up) == generic.x_up_star());
    CHECK(generic.star_sub(XYPoly(Scalar(1)), StarMode::Down) == A11Elem(Scalar(1)));

    // Both defect formulas agree.
    XYPoly xy = XYPoly::x() * XYPoly::y();
    A11Elem lhs = generic.star_sub(xy, StarMode::Up) - generic.star_sub(xy, StarMode::Down);
    CHECK(lhs == generic.transparency_defect(xy));
    CHECK_FALSE(lhs.is_zero());

    A11Algebra m10(Field::cyclotomic(10));
    CHECK(m10.transparency_defect(P(5)).is_zero());
    CHECK(m10.transparency_defect(Q(5)).is_zero());
    CHECK_FALSE(m10.transparency_defect(XYPoly::x()).is_zero());
    CHECK_FALSE(m10.transparency_defect(P(2)).is_zero());

    A11Algebra m1(Field::cyclotomic(1));
    CHECK(m1.transparency_defect(xy + XYPoly::x().pow(3)).is_zero());
}
