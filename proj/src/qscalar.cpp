#include "g2skein/qscalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "g2skein/text.hpp"

namespace g2skein {

namespace {

// Dense integer polynomials in one variable, ascending coefficients.
using ZPoly = std::vector<Integer>;

void trim(ZPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

Integer content(const ZPoly& p)
{
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

void divide_exact(ZPoly& p, const Integer& c)
{
    if (c == 1)
        return;
    for (auto& x : p)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

ZPoly primitive_part(ZPoly p)
{
    trim(p);
    if (p.empty())
        return p;
    Integer c = content(p);
    if (p.back() < 0)
        c = -c;
    divide_exact(p, c);
    return p;
}

// Pseudo-remainder of a by b, made primitive at each reduction step.
ZPoly primitive_remainder(ZPoly a, const ZPoly& b)
{
    const Integer& lb = b.back();
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        Integer la = a.back();
        std::size_t shift = a.size() - 1 - db;
        Integer g = gcd(la, lb);
        Integer ma = lb / g, mb = la / g;
        for (auto& x : a)
            x *= ma;
        for (std::size_t k = 0; k <= db; ++k)
            a[k + shift] -= mb * b[k];
        trim(a);
        a = primitive_part(std::move(a));
    }
    return a;
}

ZPoly poly_gcd(const ZPoly& a, const ZPoly& b)
{
    Integer g = gcd(content(a), content(b));
    ZPoly x = primitive_part(a), y = primitive_part(b);
    if (x.size() < y.size())
        std::swap(x, y);
    while (!y.empty()) {
        ZPoly r = primitive_remainder(std::move(x), y);
        x = std::move(y);
        y = std::move(r);
    }
    for (auto& c : x)
        c *= g;
    return x;
}

// a / b where b divides a exactly.
ZPoly poly_divexact(ZPoly a, const ZPoly& b)
{
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size())
        return {};
    ZPoly quot(a.size() - db);
    for (std::size_t k = a.size(); k-- > db;) {
        Integer c = a[k];
        if (c == 0)
            continue;
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b.back().get_mpz_t());
        std::size_t shift = k - db;
        quot[shift] = c;
        for (std::size_t j = 0; j <= db; ++j)
            a[j + shift] -= c * b[j];
    }
    return quot;
}

// Dense rational polynomials for extended Euclid in Q[t].
using QPoly = std::vector<Rational>;

void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b)
{
    trim(a);
    if (a.size() < b.size())
        return {{}, a};
    QPoly quot(a.size() - b.size() + 1);
    for (std::size_t k = a.size(); k-- >= b.size();) {
        if (a[k] == 0)
            continue;
        Rational c = a[k] / b.back();
        std::size_t shift = k - (b.size() - 1);
        quot[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[j + shift] -= c * b[j];
    }
    trim(a);
    return {quot, a};
}

QPoly mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QPoly sub(QPoly a, const QPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t k = 0; k < b.size(); ++k)
        a[k] -= b[k];
    trim(a);
    return a;
}

long mod_floor(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Shared printer for sums of c*var^e terms, highest exponent first.
template <class Coeff>
std::string print_univariate(const std::vector<std::pair<long, Coeff>>& terms, const std::string& var)
{
    std::vector<std::string> bodies;
    std::vector<bool> negated;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Coeff mag = c < 0 ? Coeff(-c) : c;
        std::string body;
        if (e == 0) {
            body = mag.get_str();
        } else {
            if (mag != 1)
                body = mag.get_str() + "*";
            body += var;
            if (e != 1)
                body += "^" + std::to_string(e);
        }
        bodies.push_back(std::move(body));
        negated.push_back(c < 0);
    }
    return text::join_terms(bodies, negated);
}

} // namespace

// ---------------------------------------------------------------- LaurentQ

LaurentQ::LaurentQ(const Integer& c)
{
    if (c != 0)
        coeffs_.push_back(c);
}

LaurentQ LaurentQ::monomial(const Integer& c, long e)
{
    LaurentQ r(c);
    if (!r.is_zero())
        r.low_ = e;
    return r;
}

LaurentQ LaurentQ::from_dense(long low, std::vector<Integer> coeffs)
{
    LaurentQ r;
    r.low_ = low;
    r.coeffs_ = std::move(coeffs);
    r.trim();
    return r;
}

void LaurentQ::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0)
        ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<long>(lead);
    }
    if (coeffs_.empty())
        low_ = 0;
}

long LaurentQ::low_degree() const
{
    if (is_zero())
        throw ZeroPolynomial("low_degree");
    return low_;
}

long LaurentQ::high_degree() const
{
    if (is_zero())
        throw ZeroPolynomial("high_degree");
    return low_ + static_cast<long>(coeffs_.size()) - 1;
}

Integer LaurentQ::coefficient(long e) const
{
    long k = e - low_;
    if (k < 0 || k >= static_cast<long>(coeffs_.size()))
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Integer LaurentQ::leading_coefficient() const
{
    if (is_zero())
        throw ZeroPolynomial("leading_coefficient");
    return coeffs_.back();
}

LaurentQ LaurentQ::operator-() const
{
    LaurentQ r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    long lo = std::min(low_, o.low_);
    long hi = std::max(high_degree(), o.high_degree());
    std::vector<Integer> sum(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        sum[static_cast<std::size_t>(low_ - lo) + k] = coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        sum[static_cast<std::size_t>(o.low_ - lo) + k] += o.coeffs_[k];
    low_ = lo;
    coeffs_ = std::move(sum);
    trim();
    return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o)
{
    return *this += -o;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(prod[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return LaurentQ::from_dense(a.low_ + b.low_, std::move(prod));
}

LaurentQ LaurentQ::shifted(long e) const
{
    LaurentQ r = *this;
    if (!r.is_zero())
        r.low_ += e;
    return r;
}

LaurentQ LaurentQ::bar() const
{
    if (is_zero())
        return {};
    std::vector<Integer> rev(coeffs_.rbegin(), coeffs_.rend());
    return from_dense(-high_degree(), std::move(rev));
}

Rational LaurentQ::evaluate(const Rational& q) const
{
    if (is_zero())
        return 0;
    if (q == 0 && low_ < 0)
        throw DivisionByZero();
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * q + Rational(*it);
    Rational scale = 1;
    Rational base = low_ < 0 ? Rational(1) / q : q;
    for (long k = 0; k < std::abs(low_); ++k)
        scale *= base;
    return acc * scale;
}

std::string LaurentQ::to_string() const
{
    std::vector<std::pair<long, Integer>> terms;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0)
            terms.emplace_back(low_ + static_cast<long>(k), coeffs_[k]);
    return print_univariate(terms, "q");
}

LaurentQ LaurentQ::parse(std::string_view src)
{
    LaurentQ total;
    for (const auto& term : text::parse_terms(src, {"q"})) {
        LaurentQ t(1);
        for (const auto& f : term.factors) {
            switch (f.kind) {
            case text::Factor::Kind::Number:
                if (f.number.get_den() != 1)
                    throw ParseError("non-integer coefficient in Laurent polynomial: " + std::string(src));
                t = t * LaurentQ(f.number.get_num());
                break;
            case text::Factor::Kind::Variable:
                t = t.shifted(f.exponent);
                break;
            case text::Factor::Kind::Scalar:
                if (!f.divisor.empty())
                    throw ParseError("quotient inside Laurent polynomial: " + std::string(src));
                t = t * LaurentQ::parse(f.body);
                break;
            case text::Factor::Kind::FIndex:
                throw ParseError("unexpected f[i,j]");
            }
        }
        total += term.negative ? -t : t;
    }
    return total;
}

LaurentQ quantum_int(long k)
{
    if (k < 0)
        throw IndexOutOfRange("quantum_int: k must be >= 0");
    if (k == 0)
        return {};
    // q^{1-k} + q^{3-k} + ... + q^{k-1}: every other exponent.
    std::vector<Integer> coeffs(static_cast<std::size_t>(2 * k - 1));
    for (long j = 0; j < k; ++j)
        coeffs[static_cast<std::size_t>(2 * j)] = 1;
    return LaurentQ::from_dense(1 - k, std::move(coeffs));
}

// -------------------------------------------------------------------- QRat

QRat::QRat(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    num_ = LaurentQ(c.get_num());
    den_ = LaurentQ(c.get_den());
}

QRat::QRat(const LaurentQ& num, const LaurentQ& den) : num_(num), den_(den)
{
    normalize();
}

void QRat::normalize()
{
    if (den_.is_zero())
        throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = LaurentQ(1);
        return;
    }
    long shift = num_.offset() - den_.offset();
    ZPoly n = num_.dense();
    ZPoly d = den_.dense();
    if (d.size() == 1 || n.size() == 1) {
        Integer g = gcd(content(n), content(d));
        divide_exact(n, g);
        divide_exact(d, g);
    } else {
        ZPoly g = poly_gcd(n, d);
        if (g.size() > 1) {
            n = poly_divexact(std::move(n), g);
            d = poly_divexact(std::move(d), g);
        } else if (g[0] != 1) {
            divide_exact(n, g[0]);
            divide_exact(d, g[0]);
        }
    }
    if (d.back() < 0) {
        for (auto& c : n)
            c = -c;
        for (auto& c : d)
            c = -c;
    }
    num_ = LaurentQ::from_dense(shift, std::move(n));
    den_ = LaurentQ::from_dense(0, std::move(d));
}

Rational QRat::to_rational() const
{
    if (!is_rational())
        throw Error("QRat::to_rational: value depends on q");
    Rational r(num_.coefficient(0), den_.coefficient(0));
    r.canonicalize();
    return r;
}

QRat QRat::operator-() const
{
    return QRat(Raw{}, -num_, den_);
}

QRat QRat::inv() const
{
    if (is_zero())
        throw DivisionByZero();
    return QRat(den_, num_);
}

QRat& QRat::operator+=(const QRat& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

QRat& QRat::operator-=(const QRat& o)
{
    return *this += -o;
}

QRat& QRat::operator*=(const QRat& o)
{
    if (is_zero() || o.is_zero())
        return *this = QRat();
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

QRat& QRat::operator/=(const QRat& o)
{
    return *this *= o.inv();
}

QRat QRat::pow(long e) const
{
    if (e < 0)
        return inv().pow(-e);
    QRat result(1), base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

QRat QRat::bar() const
{
    return QRat(num_.bar(), den_.bar());
}

std::string QRat::to_string() const
{
    if (den_ == LaurentQ(1))
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRat QRat::parse(std::string_view src)
{
    QRat total;
    for (const auto& term : text::parse_terms(src, {"q"})) {
        QRat t(1);
        for (const auto& f : term.factors) {
            switch (f.kind) {
            case text::Factor::Kind::Number:
                t *= QRat(f.number);
                break;
            case text::Factor::Kind::Variable:
                t *= QRat::q_power(f.exponent);
                break;
            case text::Factor::Kind::Scalar:
                t *= QRat::parse(f.body);
                if (!f.divisor.empty())
                    t /= QRat::parse(f.divisor);
                break;
            case text::Factor::Kind::FIndex:
                throw ParseError("unexpected f[i,j]");
            }
        }
        total += term.negative ? -t : t;
    }
    return total;
}

// ------------------------------------------------------------- cyclotomic

long euler_phi(long m)
{
    if (m < 1)
        throw InvalidOrder("cyclotomic order must be >= 1");
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

std::vector<Integer> cyclotomic_polynomial(long m)
{
    if (m < 1)
        throw InvalidOrder("cyclotomic order must be >= 1");
    // Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d.
    ZPoly p(static_cast<std::size_t>(m + 1));
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (long d = 1; d < m; ++d)
        if (m % d == 0)
            p = poly_divexact(std::move(p), cyclotomic_polynomial(d));
    return p;
}

CyclotomicRing::CyclotomicRing(long m) : m_(m), phi_(cyclotomic_polynomial(m))
{
    const long n = degree();
    const long count = std::max(m, 2 * n);
    powers_.reserve(static_cast<std::size_t>(count));
    for (long k = 0; k < count; ++k) {
        std::vector<Rational> r(static_cast<std::size_t>(n));
        if (k < n) {
            r[static_cast<std::size_t>(k)] = 1;
        } else {
            // t * t^{k-1}, then fold t^n = -(phi_0 + ... + phi_{n-1} t^{n-1}).
            const auto& prev = powers_.back();
            Rational top = prev[static_cast<std::size_t>(n - 1)];
            for (long j = n - 1; j > 0; --j)
                r[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j - 1)];
            r[0] = 0;
            for (long j = 0; j < n; ++j)
                r[static_cast<std::size_t>(j)] -= top * Rational(phi_[static_cast<std::size_t>(j)]);
        }
        powers_.push_back(std::move(r));
    }
}

std::shared_ptr<const CyclotomicRing> cyclotomic_ring(long m)
{
    static std::mutex mutex;
    static std::map<long, std::shared_ptr<const CyclotomicRing>> rings;
    if (m < 1)
        throw InvalidOrder("cyclotomic order must be >= 1, got " + std::to_string(m));
    std::lock_guard lock(mutex);
    auto& slot = rings[m];
    if (!slot)
        slot = std::make_shared<const CyclotomicRing>(m);
    return slot;
}

CycScalar::CycScalar(std::shared_ptr<const CyclotomicRing> ring, std::vector<Rational> residue)
    : ring_(std::move(ring)), residue_(std::move(residue))
{
    residue_.resize(static_cast<std::size_t>(ring_->degree()));
    for (auto& c : residue_)
        c.canonicalize();
}

CycScalar CycScalar::from_rational(long m, const Rational& r)
{
    auto ring = cyclotomic_ring(m);
    std::vector<Rational> res(static_cast<std::size_t>(ring->degree()));
    res[0] = r;
    return CycScalar(std::move(ring), std::move(res));
}

CycScalar CycScalar::zeta_power(long m, long k)
{
    auto ring = cyclotomic_ring(m);
    auto res = ring->power_residue(mod_floor(k, m));
    return CycScalar(std::move(ring), std::move(res));
}

bool CycScalar::is_zero() const
{
    return std::all_of(residue_.begin(), residue_.end(), [](const Rational& r) { return r == 0; });
}

bool CycScalar::is_rational() const
{
    return std::all_of(residue_.begin() + 1, residue_.end(), [](const Rational& r) { return r == 0; });
}

void CycScalar::check_ring(const CycScalar& o) const
{
    if (order() != o.order())
        throw FieldMismatch("Q(zeta_" + std::to_string(order()) + ") vs Q(zeta_" + std::to_string(o.order()) + ")");
}

CycScalar CycScalar::operator-() const
{
    CycScalar r = *this;
    for (auto& c : r.residue_)
        c = -c;
    return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o)
{
    check_ring(o);
    for (std::size_t k = 0; k < residue_.size(); ++k)
        residue_[k] += o.residue_[k];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o)
{
    check_ring(o);
    for (std::size_t k = 0; k < residue_.size(); ++k)
        residue_[k] -= o.residue_[k];
    return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o)
{
    check_ring(o);
    const std::size_t n = residue_.size();
    std::vector<Rational> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (residue_[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            if (o.residue_[j] != 0)
                prod[i + j] += residue_[i] * o.residue_[j];
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t k = n; k < prod.size(); ++k) {
        if (prod[k] == 0)
            continue;
        const auto& fold = ring_->power_residue(static_cast<long>(k));
        for (std::size_t j = 0; j < n; ++j)
            if (fold[j] != 0)
                out[j] += prod[k] * fold[j];
    }
    residue_ = std::move(out);
    return *this;
}

CycScalar CycScalar::inv() const
{
    if (is_zero())
        throw DivisionByZero();
    QPoly modulus(ring_->modulus().begin(), ring_->modulus().end());
    QPoly a = residue_;
    trim(a);
    // Extended Euclid: s1 * a = r1 (mod Phi).
    QPoly r0 = modulus, r1 = a, s0, s1{1};
    while (!r1.empty()) {
        auto [quot, rem] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        QPoly next = sub(s0, mul(quot, s1));
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    // Phi_m is irreducible, so r0 is a nonzero constant.
    Rational c = r0[0];
    QPoly inv = divmod(s0, modulus).second;
    for (auto& x : inv)
        x /= c;
    return CycScalar(ring_, std::move(inv));
}

bool operator==(const CycScalar& a, const CycScalar& b)
{
    return a.order() == b.order() && a.residue_ == b.residue_;
}

std::string CycScalar::to_string() const
{
    std::vector<std::pair<long, Rational>> terms;
    for (std::size_t k = 0; k < residue_.size(); ++k)
        if (residue_[k] != 0)
            terms.emplace_back(static_cast<long>(k), residue_[k]);
    return print_univariate(terms, "z") + " mod Phi_" + std::to_string(order());
}

CycScalar CycScalar::parse(std::string_view src)
{
    auto pos = src.find("mod");
    if (pos == std::string_view::npos)
        throw ParseError("cyclotomic scalar needs 'mod Phi_m': " + std::string(src));
    text::Lexer tail(src.substr(pos + 3));
    std::string name = tail.parse_name();
    if (name != "Phi")
        tail.fail("expected Phi_m");
    tail.expect('_');
    long m = tail.parse_long();
    if (!tail.at_end())
        tail.fail("trailing characters");
    if (m < 1)
        throw InvalidOrder("cyclotomic order must be >= 1");
    CycScalar total = from_rational(m, 0);
    for (const auto& term : text::parse_terms(src.substr(0, pos), {"z"})) {
        CycScalar t = from_rational(m, 1);
        for (const auto& f : term.factors) {
            if (f.kind == text::Factor::Kind::Number)
                t *= from_rational(m, f.number);
            else if (f.kind == text::Factor::Kind::Variable)
                t *= zeta_power(m, f.exponent);
            else
                throw ParseError("unexpected factor in cyclotomic scalar: " + std::string(src));
        }
        total += term.negative ? -t : t;
    }
    return total;
}

CycScalar specialize(const LaurentQ& p, long m)
{
    auto ring = cyclotomic_ring(m);
    std::vector<Rational> res(static_cast<std::size_t>(ring->degree()));
    const auto& coeffs = p.dense();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0)
            continue;
        const auto& pw = ring->power_residue(mod_floor(p.offset() + static_cast<long>(k), m));
        for (std::size_t j = 0; j < res.size(); ++j)
            if (pw[j] != 0)
                res[j] += Rational(coeffs[k]) * pw[j];
    }
    return CycScalar(std::move(ring), std::move(res));
}

CycScalar specialize(const QRat& s, long m)
{
    CycScalar den = specialize(s.den(), m);
    if (den.is_zero())
        throw DenominatorVanishes("denominator " + s.den().to_string() + " vanishes at zeta_" + std::to_string(m));
    return specialize(s.num(), m) / den;
}

// ------------------------------------------------------------------ Scalar

Scalar::Scalar(const QRat& r) : value_(r)
{
    demote();
}

Scalar::Scalar(const CycScalar& c) : value_(c)
{
    demote();
}

void Scalar::demote()
{
    if (auto* r = std::get_if<QRat>(&value_); r && r->is_rational())
        value_ = r->to_rational();
    else if (auto* c = std::get_if<CycScalar>(&value_); c && c->is_rational())
        value_ = c->to_rational();
}

bool Scalar::is_zero() const
{
    const Rational* r = rational();
    return r && *r == 0;
}

bool Scalar::is_one() const
{
    const Rational* r = rational();
    return r && *r == 1;
}

long Scalar::cyclotomic_order() const
{
    const CycScalar* c = cyc();
    return c ? c->order() : 0;
}

template <class Op>
Scalar& Scalar::combine(const Scalar& o, Op op)
{
    if (auto* a = std::get_if<Rational>(&value_)) {
        if (auto* b = o.rational()) {
            value_ = Rational(op(*a, *b));
            return *this;
        }
        if (auto* b = o.qrat())
            value_ = op(QRat(*a), *b);
        else
            value_ = op(CycScalar::from_rational(o.cyc()->order(), *a), *o.cyc());
    } else if (auto* a = std::get_if<QRat>(&value_)) {
        if (auto* b = o.rational())
            value_ = op(*a, QRat(*b));
        else if (auto* b = o.qrat())
            value_ = op(*a, *b);
        else
            throw FieldMismatch("cannot combine Q(q) and Q(zeta_" + std::to_string(o.cyclotomic_order()) + ") scalars");
    } else {
        auto& z = std::get<CycScalar>(value_);
        if (auto* b = o.rational())
            value_ = op(z, CycScalar::from_rational(z.order(), *b));
        else if (auto* b = o.cyc())
            value_ = op(z, *b);
        else
            throw FieldMismatch("cannot combine Q(zeta_" + std::to_string(z.order()) + ") and Q(q) scalars");
    }
    demote();
    return *this;
}

Scalar Scalar::operator-() const
{
    if (auto* r = rational())
        return Scalar(Rational(-*r));
    if (auto* r = qrat())
        return Scalar(-*r);
    return Scalar(-*cyc());
}

Scalar Scalar::inv() const
{
    if (is_zero())
        throw DivisionByZero();
    if (auto* r = rational())
        return Scalar(Rational(1) / *r);
    if (auto* r = qrat())
        return Scalar(r->inv());
    return Scalar(cyc()->inv());
}

Scalar Scalar::pow(long e) const
{
    if (e < 0)
        return inv().pow(-e);
    Scalar result(1), base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    return combine(o, [](const auto& a, const auto& b) { return a + b; });
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    if (o.is_zero())
        return *this;
    return combine(o, [](const auto& a, const auto& b) { return a - b; });
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (is_zero() || o.is_one())
        return *this;
    if (o.is_zero())
        return *this = Scalar();
    if (is_one())
        return *this = o;
    return combine(o, [](const auto& a, const auto& b) { return a * b; });
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero())
        throw DivisionByZero();
    return *this *= o.inv();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    return a.value_ == b.value_;
}

Scalar Scalar::bar() const
{
    if (auto* r = qrat())
        return Scalar(r->bar());
    if (auto* c = cyc()) {
        const long m = c->order();
        CycScalar acc = CycScalar::from_rational(m, 0);
        for (std::size_t k = 0; k < c->residue().size(); ++k)
            if (c->residue()[k] != 0)
                acc += CycScalar::from_rational(m, c->residue()[k]) * CycScalar::zeta_power(m, -static_cast<long>(k));
        return Scalar(acc);
    }
    return *this;
}

std::string Scalar::to_string() const
{
    if (auto* r = rational())
        return r->get_str();
    if (auto* r = qrat())
        return r->to_string();
    return cyc()->to_string();
}

Scalar Scalar::parse(std::string_view src)
{
    if (src.find("Phi") != std::string_view::npos)
        return Scalar(CycScalar::parse(src));
    return Scalar(QRat::parse(src));
}

// ------------------------------------------------------------------- Field

Field Field::cyclotomic(long m)
{
    if (m < 1)
        throw InvalidOrder("cyclotomic order must be >= 1, got " + std::to_string(m));
    return Field(m);
}

Scalar Field::lift(const QRat& s) const
{
    if (is_generic())
        return Scalar(s);
    return Scalar(specialize(s, m_));
}

Scalar Field::lift(const Scalar& s) const
{
    if (auto* r = s.qrat())
        return lift(*r);
    if (auto* c = s.cyc(); c && c->order() != m_)
        throw FieldMismatch("scalar in Q(zeta_" + std::to_string(c->order()) + ") used in " + name());
    return s;
}

Scalar Field::q_power(long e) const
{
    return lift(QRat::q_power(e));
}

std::string Field::name() const
{
    return is_generic() ? "Q(q)" : "Q(zeta_" + std::to_string(m_) + ")";
}

} // namespace g2skein
