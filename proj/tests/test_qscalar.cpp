#include "doctest.h"

#include "g2skein/qscalar.hpp"
#include "generators.hpp"

using namespace g2skein;

namespace {

// Closed form (q^k - q^-k)/(q - q^-1) at a rational point q != +-1.
Rational quantum_fraction(long k, const Rational& q)
{
    Rational qk = 1, qinv = Rational(1) / q;
    Rational qmk = 1;
    for (long j = 0; j < k; ++j) {
        qk *= q;
        qmk *= qinv;
    }
    return (qk - qmk) / (q - qinv);
}

QRat qint(long k)
{
    return QRat(quantum_int(k));
}

} // namespace

TEST_CASE("quantum integers")
{
    CHECK(quantum_int(0).is_zero());
    CHECK(quantum_int(1) == LaurentQ(1));
    CHECK(quantum_int(2) == LaurentQ::q_power(1) + LaurentQ::q_power(-1));
    CHECK(quantum_int(2).to_string() == "q + q^-1");
    CHECK_THROWS_AS(quantum_int(-1), IndexOutOfRange);

    for (long k = 0; k <= 15; ++k) {
        CHECK(quantum_int(k).evaluate(1) == k);
        for (Rational q : {Rational(2), Rational(-3, 5), Rational(7, 2)})
            CHECK(quantum_int(k).evaluate(q) == quantum_fraction(k, q));
    }
}

TEST_CASE("quantum integers divide their multiples")
{
    for (long j = 1; j <= 6; ++j)
        for (long k = 1; k <= 6; ++k) {
            QRat quotient = qint(j * k) / qint(j);
            CHECK(quotient.den() == LaurentQ(1));
        }
    // Inverting [12] inverts [2], [3], [4], [6].
    for (long d : {2, 3, 4, 6})
        CHECK((qint(12) / qint(d)).den() == LaurentQ(1));
}

TEST_CASE("field operations")
{
    CHECK(qint(2) * qint(2).inv() == QRat(1));
    CHECK_THROWS_AS(QRat().inv(), DivisionByZero);
    CHECK_THROWS_AS(QRat(LaurentQ(1), LaurentQ()), DivisionByZero);

    // [8]/[4]: compare with the closed fraction at rational points, then pin
    // the exact quotient q^4 + q^-4.
    QRat r84 = qint(8) / qint(4);
    for (Rational q : {Rational(2), Rational(3, 7), Rational(-5, 2)})
        CHECK(r84.num().evaluate(q) / r84.den().evaluate(q) == quantum_fraction(8, q) / quantum_fraction(4, q));
    CHECK(r84 == QRat(LaurentQ::q_power(4) + LaurentQ::q_power(-4)));

    // [6]/([2][3]) reduces to q^2 - 1 + q^-2.
    QRat r6 = qint(6) / (qint(2) * qint(3));
    for (Rational q : {Rational(2), Rational(5, 3)})
        CHECK(r6.num().evaluate(q) / r6.den().evaluate(q) ==
              quantum_fraction(6, q) / (quantum_fraction(2, q) * quantum_fraction(3, q)));
    CHECK(r6.to_string() == "q^2 - 1 + q^-2");

    QRat inv2 = qint(2).inv();
    CHECK(inv2.to_string() == "(q)/(q^2 + 1)");
}

TEST_CASE("canonical form makes equality structural")
{
    testing::Gen gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        QRat a = gen.qrat(), b = gen.qrat(), c = gen.qrat();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == QRat());
        if (!b.is_zero())
            CHECK((a / b) * b == a);
        // Scaling numerator and denominator by the same unit-free factor is invisible.
        LaurentQ k = gen.laurent(2, 2, 3);
        if (!k.is_zero())
            CHECK(QRat(a.num() * k, a.den() * k) == a);
    }
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(10) == std::vector<Integer>{1, -1, 1, -1, 1});
    for (long m = 1; m <= 30; ++m)
        CHECK(static_cast<long>(cyclotomic_polynomial(m).size()) - 1 == euler_phi(m));
}

TEST_CASE("zeta_m has exact order m")
{
    for (long m : {1, 2, 3, 4, 5, 10, 14, 16, 18}) {
        CHECK(CycScalar::zeta_power(m, m) == CycScalar::from_rational(m, 1));
        for (long k = 1; k < m; ++k)
            CHECK_FALSE(CycScalar::zeta_power(m, k) == CycScalar::from_rational(m, 1));
    }
}

TEST_CASE("specialize")
{
    QRat two = QRat(quantum_int(2));
    CHECK(Scalar(specialize(two, 2)) == Scalar(-2));
    CHECK_THROWS_AS(specialize(two.inv(), 4), DenominatorVanishes);

    // [12] at zeta_10 equals [2] at zeta_10 since zeta_10^10 = 1.
    CycScalar s12 = specialize(qint(12), 10);
    CHECK_FALSE(s12.is_zero());
    CHECK(s12 == specialize(qint(2), 10));

    // [k] vanishes at zeta_m exactly when m | 2k and m > 2.
    for (long m = 3; m <= 24; ++m)
        for (long k = 1; k <= 12; ++k)
            CHECK(specialize(qint(k), m).is_zero() == ((2 * k) % m == 0));
}

TEST_CASE("specialize is a ring homomorphism")
{
    testing::Gen gen(11);
    for (long m : {5, 10, 14, 16}) {
        for (int trial = 0; trial < 40; ++trial) {
            QRat a = gen.qrat(), b = gen.qrat();
            try {
                CycScalar sa = specialize(a, m), sb = specialize(b, m);
                CHECK(specialize(a * b, m) == sa * sb);
                CHECK(specialize(a + b, m) == sa + sb);
            } catch (const DenominatorVanishes&) {
            }
        }
    }
}

TEST_CASE("cyclotomic inverse")
{
    testing::Gen gen(3);
    for (long m : {3, 7, 10, 16}) {
        for (int trial = 0; trial < 20; ++trial) {
            CycScalar x = specialize(gen.laurent(), m);
            if (x.is_zero())
                continue;
            CHECK(x * x.inv() == CycScalar::from_rational(m, 1));
        }
    }
}

TEST_CASE("scalar promotion and field mismatch")
{
    Scalar half(Rational(1, 2));
    Scalar q(QRat::q());
    Scalar z(CycScalar::zeta_power(10, 1));
    CHECK((q - q).is_rational());
    CHECK((half + q - q) == half);
    CHECK((z * half).cyclotomic_order() == 10);
    CHECK_THROWS_AS(q + z, FieldMismatch);
    CHECK_THROWS_AS(z + Scalar(CycScalar::zeta_power(14, 1)), FieldMismatch);
    CHECK_THROWS_AS(half / Scalar(0), DivisionByZero);
    CHECK(q.bar() == Scalar(QRat::q_power(-1)));
    CHECK(z.bar() == Scalar(CycScalar::zeta_power(10, 9)));
    CHECK(Field::cyclotomic(10).lift(q) == z);
}

TEST_CASE("scalar text round trip")
{
    for (std::string s : {"0", "7", "-3/4", "q + q^-1", "-2*q^3 + 5 - q^-7", "(q)/(q^2 + 1)",
                          "(2*q^2 - 1)/(3*q^4 + q^2 + 3)", "z^3 - 1/2*z + 1 mod Phi_10", "-z mod Phi_14"}) {
        CHECK(Scalar::parse(s).to_string() == s);
    }
    CHECK(Scalar::parse("q^{-1} + q^(2)") == Scalar(LaurentQ::q_power(-1) + LaurentQ::q_power(2)));
    CHECK(Scalar::parse("z^10 mod Phi_10") == Scalar(1));
    CHECK_THROWS_AS(Scalar::parse("q +"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("x"), ParseError);
}

TEST_CASE("unreduced fractions are canonicalised on entry")
{
    CHECK(Scalar(Rational(-4, 4)) == Scalar(-1));
    CHECK(Scalar(Rational(2, -6)).to_string() == "-1/3");
    CHECK(Scalar(QRat(Rational(6, 4))) == Scalar(Rational(3, 2)));
    CHECK(CycScalar::from_rational(10, Rational(4, 8)) == CycScalar::from_rational(10, Rational(1, 2)));
}
