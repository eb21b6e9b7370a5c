#pragma once

// Exact coefficient arithmetic: Laurent polynomials in q over the integers,
// the rational function field Q(q), cyclotomic fields Q(zeta_m), and a
// Scalar type that carries an element of any of them.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "g2skein/errors.hpp"

namespace g2skein {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of Z[q, q^-1]. Stored densely from the lowest nonzero exponent;
/// the first and last stored coefficients are nonzero, zero is empty.
class LaurentQ {
public:
    LaurentQ() = default;
    LaurentQ(long c) : LaurentQ(Integer(c)) {}
    LaurentQ(const Integer& c);

    static LaurentQ monomial(const Integer& c, long e);
    static LaurentQ q_power(long e) { return monomial(1, e); }
    /// Builds from ascending coefficients starting at exponent `low`.
    static LaurentQ from_dense(long low, std::vector<Integer> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }
    long low_degree() const;
    long high_degree() const;
    Integer coefficient(long e) const;
    const std::vector<Integer>& dense() const { return coeffs_; }
    long offset() const { return low_; }
    Integer leading_coefficient() const;

    LaurentQ operator-() const;
    LaurentQ& operator+=(const LaurentQ& o);
    LaurentQ& operator-=(const LaurentQ& o);
    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
    friend bool operator==(const LaurentQ& a, const LaurentQ& b) = default;

    LaurentQ shifted(long e) const;
    /// The involution q -> q^-1.
    LaurentQ bar() const;
    Rational evaluate(const Rational& q) const;

    std::string to_string() const;
    static LaurentQ parse(std::string_view src);

private:
    void trim();

    long low_ = 0;
    std::vector<Integer> coeffs_;
};

/// Balanced quantum integer [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}.
LaurentQ quantum_int(long k);

/// Element of Q(q) as num/den with num, den in Z[q^+-1] coprime (content
/// included), den with lowest exponent 0 and positive leading coefficient.
class QRat {
public:
    QRat() : den_(1) {}
    QRat(long c) : num_(c), den_(1) {}
    QRat(const Integer& c) : num_(c), den_(1) {}
    QRat(const Rational& r);
    QRat(const LaurentQ& p) : num_(p), den_(1) {}
    QRat(const LaurentQ& num, const LaurentQ& den);

    static QRat q() { return QRat(LaurentQ::q_power(1)); }
    static QRat q_power(long e) { return QRat(LaurentQ::q_power(e)); }

    const LaurentQ& num() const { return num_; }
    const LaurentQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rational to_rational() const;

    QRat operator-() const;
    QRat inv() const;
    QRat& operator+=(const QRat& o);
    QRat& operator-=(const QRat& o);
    QRat& operator*=(const QRat& o);
    QRat& operator/=(const QRat& o);
    friend QRat operator+(QRat a, const QRat& b) { return a += b; }
    friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
    friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
    friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
    friend bool operator==(const QRat& a, const QRat& b) = default;

    QRat pow(long e) const;
    QRat bar() const;

    std::string to_string() const;
    static QRat parse(std::string_view src);

private:
    struct Raw {};
    QRat(Raw, LaurentQ num, LaurentQ den) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    LaurentQ num_;
    LaurentQ den_;
};

/// Integer coefficients of the m-th cyclotomic polynomial, ascending.
std::vector<Integer> cyclotomic_polynomial(long m);
long euler_phi(long m);

/// Shared arithmetic data for Q(zeta_m) = Q[t]/Phi_m(t).
class CyclotomicRing {
public:
    explicit CyclotomicRing(long m);
    long order() const { return m_; }
    long degree() const { return static_cast<long>(phi_.size()) - 1; }
    const std::vector<Integer>& modulus() const { return phi_; }
    /// Residue of t^k for 0 <= k < 2*degree().
    const std::vector<Rational>& power_residue(long k) const { return powers_[k]; }

private:
    long m_;
    std::vector<Integer> phi_;
    std::vector<std::vector<Rational>> powers_;
};

/// Process-wide, write-once table of cyclotomic rings.
std::shared_ptr<const CyclotomicRing> cyclotomic_ring(long m);

/// Element of Q(zeta_m): a residue of degree < phi(m) modulo Phi_m.
class CycScalar {
public:
    CycScalar(std::shared_ptr<const CyclotomicRing> ring, std::vector<Rational> residue);
    static CycScalar from_rational(long m, const Rational& r);
    /// zeta_m^k.
    static CycScalar zeta_power(long m, long k);

    long order() const { return ring_->order(); }
    const std::vector<Rational>& residue() const { return residue_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational to_rational() const { return residue_.empty() ? Rational(0) : residue_[0]; }

    CycScalar operator-() const;
    CycScalar inv() const;
    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    CycScalar& operator/=(const CycScalar& o) { return *this *= o.inv(); }
    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
    friend bool operator==(const CycScalar& a, const CycScalar& b);

    std::string to_string() const;
    static CycScalar parse(std::string_view src);

private:
    void check_ring(const CycScalar& o) const;

    std::shared_ptr<const CyclotomicRing> ring_;
    std::vector<Rational> residue_;
};

CycScalar specialize(const LaurentQ& p, long m);
/// Evaluates at the primitive m-th root t mod Phi_m. Throws DenominatorVanishes.
CycScalar specialize(const QRat& s, long m);

/// An element of Q, Q(q) or Q(zeta_m). Values in Q are always stored in the
/// Rational alternative, so structural equality is mathematical equality.
/// Q(q) and Q(zeta_m) values never mix.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(long c) : value_(Rational(c)) {}
    Scalar(const Integer& c) : value_(Rational(c)) {}
    /// Accepts unreduced fractions such as mpq_class(2, 4).
    Scalar(const Rational& r) : value_(r) { std::get<Rational>(value_).canonicalize(); }
    Scalar(const LaurentQ& p) : Scalar(QRat(p)) {}
    Scalar(const QRat& r);
    Scalar(const CycScalar& c);

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return std::holds_alternative<Rational>(value_); }
    const Rational* rational() const { return std::get_if<Rational>(&value_); }
    const QRat* qrat() const { return std::get_if<QRat>(&value_); }
    const CycScalar* cyc() const { return std::get_if<CycScalar>(&value_); }
    /// 0 for Q or Q(q), m for Q(zeta_m).
    long cyclotomic_order() const;

    Scalar operator-() const;
    Scalar inv() const;
    Scalar pow(long e) const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Q(q) -> Q(q), q -> q^-1. Rationals are fixed; cyclotomic values are conjugated.
    Scalar bar() const;

    std::string to_string() const;
    /// True if the printed form is a bare rational and needs no parentheses.
    bool prints_as_atom() const { return is_rational(); }
    static Scalar parse(std::string_view src);

private:
    using Value = std::variant<Rational, QRat, CycScalar>;
    void demote();
    template <class Op>
    Scalar& combine(const Scalar& o, Op op);

    Value value_;
};

/// Coefficient field selector: the generic field Q(q), or Q(zeta_m) with q
/// specialised to zeta_m.
class Field {
public:
    static Field generic() { return Field(0); }
    static Field cyclotomic(long m);

    bool is_generic() const { return m_ == 0; }
    long order() const { return m_; }
    /// Maps an element of Q(q) into this field. Throws DenominatorVanishes.
    Scalar lift(const QRat& s) const;
    Scalar lift(const Scalar& s) const;
    Scalar q_power(long e) const;
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(long m) : m_(m) {}
    long m_;
};

} // namespace g2skein
