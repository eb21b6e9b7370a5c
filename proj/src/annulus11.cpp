#include "g2skein/annulus11.hpp"

#include "g2skein/errors.hpp"

namespace g2skein {

BasisKey BasisKey::ac(long i, long j)
{
    if (j < 0)
        throw IndexOutOfRange("a^i c^j needs j >= 0");
    return {Kind::AC, i, j};
}

BasisKey BasisKey::f(long i, long j)
{
    if (i < 0 || j < 0)
        throw IndexOutOfRange("f_{i,j} needs i, j >= 0");
    return {Kind::F, i, j};
}

// ----------------------------------------------------------------- A11Elem

A11Elem A11Elem::bar() const
{
    return map_coefficients([](const Scalar& c) { return c.bar(); });
}

bool A11Elem::has_ac_term() const
{
    return !is_zero() && terms_.begin()->first.kind == BasisKey::Kind::AC;
}

std::string A11Elem::to_string() const
{
    std::vector<std::string> bodies;
    std::vector<bool> negated;
    for (const auto& [k, c] : terms_) {
        std::string word;
        if (k.kind == BasisKey::Kind::F) {
            word = "f[" + std::to_string(k.i) + "," + std::to_string(k.j) + "]";
        } else {
            auto factor = [&word](const char* name, long e) {
                if (e == 0)
                    return;
                if (!word.empty())
                    word += "*";
                word += name;
                if (e != 1)
                    word += "^" + std::to_string(e);
            };
            factor("a", k.i);
            factor("c", k.j);
        }
        auto [body, neg] = text::format_term(c, word);
        bodies.push_back(std::move(body));
        negated.push_back(neg);
    }
    return text::join_terms(bodies, negated);
}

A11Elem A11Elem::parse(std::string_view src)
{
    A11Elem total;
    for (const auto& term : text::parse_terms(src, {"a", "c"}, true)) {
        Scalar c(term.negative ? -1 : 1);
        long ea = 0, ec = 0;
        const text::Factor* findex = nullptr;
        for (const auto& f : term.factors) {
            switch (f.kind) {
            case text::Factor::Kind::Variable:
                (f.body == "a" ? ea : ec) += f.exponent;
                break;
            case text::Factor::Kind::FIndex:
                if (findex)
                    throw ParseError("more than one f[i,j] in a term: " + std::string(src));
                findex = &f;
                break;
            default:
                c *= text::scalar_factor(f);
            }
        }
        if (findex) {
            if (ea != 0 || ec != 0)
                throw ParseError("f[i,j] terms take no a or c factors: " + std::string(src));
            if (findex->i < 0 || findex->j < 0)
                throw ParseError("negative f index: " + std::string(src));
            total.add_term(BasisKey::f(findex->i, findex->j), c);
        } else {
            if (ec < 0)
                throw ParseError("negative power of c: " + std::string(src));
            total.add_term(BasisKey::ac(ea, ec), c);
        }
    }
    return total;
}

Bidegree ac_lead_bidegree(const A11Elem& u)
{
    if (!u.has_ac_term())
        throw NoACTerm();
    // AC keys sort by (j, i), so the last AC key is the lead.
    BasisKey lead = u.terms().begin()->first;
    for (const auto& [k, c] : u.terms())
        if (k.kind == BasisKey::Kind::AC)
            lead = k;
    return {lead.j, lead.i};
}

// ------------------------------------------------------------- A11Algebra

namespace {

QRat qint(long k)
{
    return QRat(quantum_int(k));
}

// Built in Q(q); the algebra lifts them into its field.
A11Elem generic_x_up()
{
    const QRat q = QRat::q();
    const QRat inv2 = qint(2).inv();
    return A11Elem::ac(1, 0, inv2 * q.pow(3)) + A11Elem::ac(-1, 0, inv2 * q.pow(-3)) +
           A11Elem::ac(0, 1, inv2 * q) + A11Elem::ac(-1, 1, inv2 * q.pow(-1));
}

A11Elem generic_y_up()
{
    const QRat q = QRat::q();
    const QRat inv2 = qint(2).inv();
    A11Elem inner = A11Elem::ac(2, 0, -q.pow(3)) + A11Elem::ac(-2, 0, -q.pow(-3)) + A11Elem::ac(1, 1, q.pow(3)) +
                    A11Elem::ac(-2, 1, q.pow(-3)) + A11Elem::ac(-1, 2, inv2) + A11Elem::ac(1, 0, inv2) +
                    A11Elem::ac(-1, 0, inv2) + A11Elem::ac(0, 1, (q.pow(2) - QRat(1)) * inv2) +
                    A11Elem::ac(-1, 1, (q.pow(-2) - QRat(1)) * inv2) +
                    A11Elem::ac(0, 0, -(q.pow(2) + q.pow(-2)) * inv2) + A11Elem::f(0, 0, -inv2);
    return inner * Scalar(inv2);
}

} // namespace

A11Algebra::A11Algebra(Field field) : field_(field)
{
    // Standing invertibility assumptions; lift throws DenominatorVanishes.
    field_.lift(qint(2).inv());
    field_.lift(qint(12).inv());

    kappa_ = field_.lift(QRat(quantum_int(6), quantum_int(2) * quantum_int(3)));
    two_sq_ = field_.lift(qint(2) * qint(2));
    eight_four_ = field_.lift(QRat(quantum_int(8), quantum_int(4)));
    seven_ = field_.lift(qint(7));

    const A11Elem gx = generic_x_up();
    const A11Elem gy = generic_y_up();
    const A11Elem correction = A11Elem::f(0, 0, qint(2).pow(-2));
    x_up_ = lift(gx);
    x_down_ = lift(gx.bar());
    y_up_ = lift(gy);
    y_down_ = lift(gy.bar());
    y_bar_ = lift(gy + correction);
    y_under_ = lift(gy.bar() + correction);

    const A11Elem c_minus = A11Elem::ac(0, 1) - A11Elem::ac(1, 0) - A11Elem::ac(0, 0);
    up_map_.sum_image = c_minus * field_.lift(QRat::q() / qint(2));
    up_map_.prod_scale = field_.q_power(2);
    down_map_.sum_image = c_minus * field_.lift(QRat::q_power(-1) / qint(2));
    down_map_.prod_scale = field_.q_power(-2);
}

A11Elem A11Algebra::lift(const A11Elem& u) const
{
    return u.map_coefficients([this](const Scalar& c) { return field_.lift(c); });
}

const std::vector<Scalar>& A11Algebra::c_power_on_f(long j) const
{
    std::lock_guard lock(cache_mutex_);
    if (c_power_.empty())
        c_power_.push_back({Scalar(1)});
    // c f_{k,l} = f_{k+1,l} - kappa f_{k,l}, iterated.
    while (static_cast<long>(c_power_.size()) <= j) {
        const auto& prev = c_power_.back();
        std::vector<Scalar> next(prev.size() + 1);
        for (std::size_t t = 0; t < prev.size(); ++t) {
            next[t + 1] += prev[t];
            next[t] -= kappa_ * prev[t];
        }
        c_power_.push_back(std::move(next));
    }
    return c_power_[static_cast<std::size_t>(j)];
}

void A11Algebra::accumulate_product(A11Elem& out, const BasisKey& u, const BasisKey& v, const Scalar& c) const
{
    using Kind = BasisKey::Kind;
    if (u.kind == Kind::AC && v.kind == Kind::AC) {
        out.add_term(BasisKey::ac(u.i + v.i, u.j + v.j), c);
        return;
    }
    if (u.kind == Kind::F && v.kind == Kind::F) {
        const long i = u.i + v.i, j = u.j + v.j;
        out.add_term(BasisKey::f(i + 2, j), c);
        out.add_term(BasisKey::f(i, j + 1), -(c * two_sq_));
        out.add_term(BasisKey::f(i + 1, j), c * eight_four_);
        out.add_term(BasisKey::f(i, j), -(c * seven_));
        return;
    }
    // a^{+-1} f = f, so only the power of c acts.
    const BasisKey& acp = u.kind == Kind::AC ? u : v;
    const BasisKey& fk = u.kind == Kind::AC ? v : u;
    const auto& coeffs = c_power_on_f(acp.j);
    for (std::size_t t = 0; t < coeffs.size(); ++t)
        out.add_term(BasisKey::f(fk.i + static_cast<long>(t), fk.j), c * coeffs[t]);
}

A11Elem A11Algebra::mul(const A11Elem& u, const A11Elem& v) const
{
    A11Elem out;
    for (const auto& [ku, cu] : u.terms())
        for (const auto& [kv, cv] : v.terms())
            accumulate_product(out, ku, kv, cu * cv);
    return out;
}

A11Elem A11Algebra::pow(const A11Elem& u, long e) const
{
    if (e < 0)
        throw IndexOutOfRange("A11Algebra::pow: negative exponent");
    A11Elem result(Scalar(1)), base = u;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        e >>= 1;
        if (e)
            base = mul(base, base);
    }
    return result;
}

A11Elem A11Algebra::apply(const StarMap& map, const EPrimePoly& p) const
{
    A11Elem out;
    for (const auto& [k, c] : p.terms()) {
        const A11Elem* power;
        {
            std::lock_guard lock(power_mutex_);
            if (map.sum_powers.empty())
                map.sum_powers.emplace_back(Scalar(1));
            while (static_cast<long>(map.sum_powers.size()) <= k.first)
                map.sum_powers.push_back(mul(map.sum_powers.back(), map.sum_image));
            power = &map.sum_powers[static_cast<std::size_t>(k.first)];
        }
        // (l1 + l2)^i (l1 l2)^j -> sum_image^i * prod_scale^j * a^j
        const Scalar scale = field_.lift(c) * map.prod_scale.pow(k.second);
        for (const auto& [key, s] : power->terms())
            out.add_term(BasisKey::ac(key.i + k.second, key.j), s * scale);
    }
    return out;
}

A11Elem A11Algebra::F_up(const EPrimePoly& p) const
{
    return apply(up_map_, p);
}

A11Elem A11Algebra::F_down(const EPrimePoly& p) const
{
    return apply(down_map_, p);
}

A11Elem A11Algebra::star_sub(const XYPoly& s, StarMode mode) const
{
    const A11Elem* x = nullptr;
    const A11Elem* y = nullptr;
    switch (mode) {
    case StarMode::Up: x = &x_up_, y = &y_up_; break;
    case StarMode::Down: x = &x_down_, y = &y_down_; break;
    case StarMode::UpBar: x = &x_up_, y = &y_bar_; break;
    case StarMode::DownUnder: x = &x_down_, y = &y_under_; break;
    }
    const XYPoly lifted = s.map_coefficients([this](const Scalar& c) { return field_.lift(c); });
    return evaluate(lifted, *x, *y, A11Elem(Scalar(1)),
                    [this](const A11Elem& a, const A11Elem& b) { return mul(a, b); });
}

A11Elem A11Algebra::transparency_defect(const XYPoly& s) const
{
    return star_sub(s, StarMode::UpBar) - star_sub(s, StarMode::DownUnder);
}

} // namespace g2skein
