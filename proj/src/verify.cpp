#include "g2skein/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "g2skein/errors.hpp"
#include "g2skein/linalg.hpp"

namespace g2skein {

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
    }
    return "error";
}

nlohmann::ordered_json VerifyReport::to_json() const
{
    nlohmann::ordered_json j;
    j["check"] = check;
    j["params"] = params;
    j["status"] = to_string(status);
    j["witness"] = witness ? nlohmann::ordered_json(*witness) : nlohmann::ordered_json(nullptr);
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string VerifyReport::summary() const
{
    std::string tag = status == Status::Pass ? "PASS " : status == Status::Fail ? "FAIL " : "ERROR";
    std::string line = tag + "  " + check + "  " + params.dump() + "  (" + std::to_string(elapsed_ms) + " ms)";
    if (witness)
        line += "\n       " + *witness;
    return line;
}

namespace {

using Witness = std::optional<std::string>;

// Times `body`; a returned witness means fail, a library error means error.
VerifyReport run_check(std::string name, nlohmann::ordered_json params, const std::function<Witness()>& body)
{
    VerifyReport r;
    r.check = std::move(name);
    r.params = std::move(params);
    const auto start = std::chrono::steady_clock::now();
    try {
        r.witness = body();
        r.status = r.witness ? Status::Fail : Status::Pass;
    } catch (const Error& e) {
        r.status = Status::Error;
        r.witness = e.what();
    }
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// Horner evaluation into the Laurent ring.
LLPoly at(const XYPoly& p, long i)
{
    return evaluate(p, bold_x(i), bold_y(i));
}

std::string mismatch(const std::string& what, const std::string& got, const std::string& want)
{
    return what + ": got " + got + ", expected " + want;
}

XYPoly pq_monomial(long n, long i, long j)
{
    return P(n).pow(i) * Q(n).pow(j);
}

Field field_for(long m)
{
    return m == 0 ? Field::generic() : Field::cyclotomic(m);
}

std::string field_label(long m)
{
    return field_for(m).name();
}

} // namespace

// -------------------------------------------------------------- R[x,y] side

VerifyReport check_elementary_sums()
{
    std::vector<XYPoly> e, f;
    for (long i = 0; i <= 7; ++i)
        e.push_back(e_coeff(i));
    for (long i = 0; i <= 14; ++i)
        f.push_back(f_coeff(i));
    return check_elementary_sums(e, f);
}

VerifyReport check_elementary_sums(const std::vector<XYPoly>& e, const std::vector<XYPoly>& f)
{
    return run_check("elementary_sums", {{"e_range", "0..7"}, {"f_range", "0..14"}}, [&]() -> Witness {
        if (e.size() != 8 || f.size() != 15)
            throw IndexOutOfRange("elementary_sums needs 8 e- and 15 f-coefficients");
        const auto xs = bold_x_terms(1);
        const auto ys = bold_y_terms(1);
        for (long i = 0; i <= 7; ++i) {
            LLPoly want = elementary_symmetric(xs, i);
            LLPoly got = psi(e[static_cast<std::size_t>(i)]);
            if (got != want)
                return "e_" + std::to_string(i) + ": psi(e_i) - e_i(x terms) = " + (got - want).to_string();
        }
        for (long i = 0; i <= 14; ++i) {
            LLPoly want = elementary_symmetric(ys, i);
            LLPoly got = psi(f[static_cast<std::size_t>(i)]);
            if (got != want)
                return "f_" + std::to_string(i) + ": psi(f_i) - e_i(y terms) = " + (got - want).to_string();
        }
        return std::nullopt;
    });
}

VerifyReport check_power_sums(long kmax, long imax, long kmax_phi)
{
    if (kmax < 1 || imax < 1 || kmax_phi < 0)
        throw IndexOutOfRange("power_sums needs kmax >= 1, imax >= 1");
    return run_check("power_sums", {{"kmax", kmax}, {"imax", imax}, {"kmax_phi", kmax_phi}}, [&]() -> Witness {
        auto check = [](long i, long k) -> Witness {
            const std::string tag = "(k=" + std::to_string(k) + ", i=" + std::to_string(i) + ")";
            if (at(P(k), i) != bold_x(i * k))
                return "P_k(x^(i), y^(i)) != x^(ik) " + tag;
            if (at(Q(k), i) != bold_y(i * k))
                return "Q_k(x^(i), y^(i)) != y^(ik) " + tag;
            return std::nullopt;
        };
        for (long k = 1; k <= kmax; ++k)
            if (auto w = check(1, k))
                return w;
        for (long i = 2; i <= imax; ++i)
            for (long k = 1; k <= kmax_phi; ++k)
                if (auto w = check(i, k))
                    return w;
        return std::nullopt;
    });
}

VerifyReport check_composition(long imax, long kmax)
{
    if (imax < 1 || kmax < 1)
        throw IndexOutOfRange("composition needs imax, kmax >= 1");
    return run_check("composition", {{"imax", imax}, {"kmax", kmax}}, [&]() -> Witness {
        for (long i = 1; i <= imax; ++i)
            for (long k = 1; k <= kmax; ++k) {
                const std::string tag = "(i=" + std::to_string(i) + ", k=" + std::to_string(k) + ")";
                if (compose_pq(P(k), i) != P(i * k))
                    return "P_k(P_i, Q_i) != P_ik " + tag;
                if (compose_pq(Q(k), i) != Q(i * k))
                    return "Q_k(P_i, Q_i) != Q_ik " + tag;
            }
        return std::nullopt;
    });
}

VerifyReport check_leading_terms(long range_bound)
{
    if (range_bound < 0)
        throw IndexOutOfRange("leading_terms needs range_bound >= 0");
    return run_check("leading_terms", {{"range_bound", range_bound}}, [&]() -> Witness {
        const long r = range_bound;
        std::vector<LLPoly> xs, ys;
        for (long i = 0; i <= r; ++i) {
            xs.push_back(bold_x(i));
            ys.push_back(bold_y(i));
        }
        struct Product {
            long i, j;
            LLPoly value;
            Bidegree d2;
        };
        std::vector<Product> products;
        for (long i = 0; i <= r; ++i)
            for (long j = 0; j <= r; ++j) {
                LLPoly v = xs[static_cast<std::size_t>(i)] * ys[static_cast<std::size_t>(j)];
                Bidegree d = v.d2();
                products.push_back({i, j, std::move(v), d});
            }
        for (const auto& low : products)
            for (const auto& high : products) {
                if (!(low.d2 < high.d2))
                    continue;
                const long s = high.i, t = high.j;
                for (Bidegree mono : {Bidegree{s + 2 * t, s + t}, Bidegree{s + 2 * t, t}})
                    if (!low.value.coefficient(mono).is_zero())
                        return "x^(" + std::to_string(low.i) + ")y^(" + std::to_string(low.j) + ") contains l1^" +
                               std::to_string(mono.first) + "*l2^" + std::to_string(mono.second) + " (s=" +
                               std::to_string(s) + ", t=" + std::to_string(t) + ")";
            }
        return std::nullopt;
    });
}

// ------------------------------------------------------------ annulus side

namespace {

A11Elem random_a11(std::mt19937_64& rng, long bound)
{
    auto range = [&rng](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    A11Elem u;
    const long n = range(1, 3);
    for (long t = 0; t < n; ++t) {
        Scalar c(range(-3, 3));
        if (rng() & 1)
            c *= Scalar(QRat::q_power(range(-2, 2)));
        if (rng() & 1)
            u.add_term(BasisKey::ac(range(-bound, bound), range(0, bound)), c);
        else
            u.add_term(BasisKey::f(range(0, bound), range(0, bound)), c);
    }
    return u;
}

} // namespace

VerifyReport check_a11_presentation(long samples, long index_bound, std::uint64_t seed)
{
    if (samples < 0 || index_bound < 0)
        throw IndexOutOfRange("a11_presentation needs samples, index_bound >= 0");
    nlohmann::ordered_json params{{"samples", samples}, {"index_bound", index_bound}, {"seed", seed}};
    return run_check("a11_presentation", params, [&]() -> Witness {
        A11Algebra alg(Field::generic());
        std::mt19937_64 rng(seed);
        const A11Elem one(Scalar(1));
        for (long s = 0; s < samples; ++s) {
            A11Elem u = random_a11(rng, index_bound);
            A11Elem v = random_a11(rng, index_bound);
            A11Elem w = random_a11(rng, index_bound);
            const std::string tag = " (sample " + std::to_string(s) + ": u = " + u.to_string() +
                                    ", v = " + v.to_string() + ", w = " + w.to_string() + ")";
            if (alg.mul(one, u) != u)
                return "unit law fails" + tag;
            if (alg.mul(u, v) != alg.mul(v, u))
                return "uv != vu" + tag;
            if (alg.mul(alg.mul(u, v), w) != alg.mul(u, alg.mul(v, w)))
                return "(uv)w != u(vw)" + tag;
        }
        for (long k = -index_bound; k <= index_bound; ++k)
            for (long i = 0; i <= index_bound; ++i)
                for (long j = 0; j <= index_bound; ++j)
                    if (alg.mul(A11Elem::ac(k, 0), A11Elem::f(i, j)) != A11Elem::f(i, j))
                        return "a^" + std::to_string(k) + " f[" + std::to_string(i) + "," + std::to_string(j) +
                               "] != f[" + std::to_string(i) + "," + std::to_string(j) + "]";
        return std::nullopt;
    });
}

VerifyReport check_star_consistency(std::uint64_t seed)
{
    return run_check("star_consistency", {{"f_ij_bound", 4}, {"defect_samples", 10}, {"seed", seed}},
                     [&]() -> Witness {
        A11Algebra alg(Field::generic());
        const A11Elem f = A11Elem::f();
        if (alg.F_up(to_eprime(bold_x(1))) != alg.x_up_star())
            return mismatch("F^star(x^(1))", alg.F_up(to_eprime(bold_x(1))).to_string(), alg.x_up_star().to_string());
        if (alg.F_up(to_eprime(bold_y(1))) != alg.y_bar())
            return mismatch("F^star(y^(1))", alg.F_up(to_eprime(bold_y(1))).to_string(), alg.y_bar().to_string());
        if (alg.F_down(to_eprime(bold_x(1))) != alg.x_down_star())
            return "F_star(x^(1)) != x_star";
        if (alg.F_down(to_eprime(bold_y(1))) != alg.y_under())
            return "F_star(y^(1)) != y-under";

        if (alg.mul(alg.x_up_star(), f) != alg.mul(alg.x_down_star(), f))
            return "x^star f != x_star f";
        if (alg.mul(alg.y_up_star(), f) != alg.mul(alg.y_down_star(), f))
            return "y^star f != y_star f";
        if (alg.mul(alg.y_bar(), f) != alg.mul(alg.y_under(), f))
            return "y-bar f != y-under f";

        A11Elem xpow(Scalar(1));
        for (long i = 0; i <= 4; ++i) {
            A11Elem term = alg.mul(xpow, f);
            for (long j = 0; j <= 4; ++j) {
                if (term != A11Elem::f(i, j))
                    return mismatch("(x^star)^" + std::to_string(i) + "(y^star)^" + std::to_string(j) + " f",
                                    term.to_string(), A11Elem::f(i, j).to_string());
                term = alg.mul(term, alg.y_up_star());
            }
            xpow = alg.mul(xpow, alg.x_up_star());
        }

        // Both defect formulas on random S with D2 <= (8, 8), i.e. i + 2j <= 8.
        std::vector<Bidegree> monomials;
        for (long j = 0; j <= 4; ++j)
            for (long i = 0; i + 2 * j <= 8; ++i)
                monomials.push_back({i, j});
        std::mt19937_64 rng(seed);
        for (int s = 0; s < 10; ++s) {
            XYPoly p;
            for (int t = 0; t < 3; ++t)
                p.add_term(monomials[rng() % monomials.size()], Scalar(static_cast<long>(rng() % 7) - 3));
            A11Elem plain = alg.star_sub(p, StarMode::Up) - alg.star_sub(p, StarMode::Down);
            A11Elem barred = alg.transparency_defect(p);
            if (plain != barred)
                return "defect formulas disagree for S = " + p.to_string();
        }
        return std::nullopt;
    });
}

VerifyReport check_degree_shift(long kmax, long imax)
{
    if (kmax < 0 || imax < 0)
        throw IndexOutOfRange("degree_shift needs kmax, imax >= 0");
    return run_check("degree_shift", {{"kmax", kmax}, {"imax", imax}}, [&]() -> Witness {
        A11Algebra alg(Field::generic());
        for (long k = -kmax; k <= kmax; ++k) {
            // every E' basis element (l1 + l2)^i (l1 l2)^j of degree k with i <= 6
            EPrimePoly p;
            for (long i = 0; i <= 6; ++i)
                if ((k - i) % 2 == 0)
                    p += EPrimePoly::basis(i, (k - i) / 2, Scalar(i + 1));
            if (alg.F_up(p) != alg.F_down(p) * Scalar(QRat::q_power(2 * k)))
                return "F^star(p) != q^" + std::to_string(2 * k) + " F_star(p) for p = " + p.to_string();
        }
        for (long i = 1; i <= imax; ++i) {
            if (alg.F_up(to_eprime(bold_x(i))) != alg.F_down(to_eprime(tilde_x(i))))
                return "F^star(x^(" + std::to_string(i) + ")) != F_star(x~^(" + std::to_string(i) + "))";
            if (alg.F_up(to_eprime(bold_y(i))) != alg.F_down(to_eprime(tilde_y(i))))
                return "F^star(y^(" + std::to_string(i) + ")) != F_star(y~^(" + std::to_string(i) + "))";
        }
        return std::nullopt;
    });
}

VerifyReport check_transparent(long n, long m)
{
    if (n < 1 || m < 1 || (2 * n) % m != 0)
        throw InvalidOrder("transparency needs n >= 1 and m dividing 2n (n=" + std::to_string(n) +
                           ", m=" + std::to_string(m) + ")");
    return run_check("transparency", {{"n", n}, {"m", m}}, [&]() -> Witness {
        A11Algebra alg(Field::cyclotomic(m));
        A11Elem dp = alg.transparency_defect(P(n));
        if (!dp.is_zero())
            return "defect of P_" + std::to_string(n) + " over " + field_label(m) + " has " +
                   std::to_string(dp.size()) + " terms, leading " + A11Elem::term(dp.terms().begin()->first,
                                                                                   dp.terms().begin()->second)
                                                                        .to_string();
        A11Elem dq = alg.transparency_defect(Q(n));
        if (!dq.is_zero())
            return "defect of Q_" + std::to_string(n) + " over " + field_label(m) + " has " +
                   std::to_string(dq.size()) + " terms";
        return std::nullopt;
    });
}

VerifyReport check_not_transparent(const XYPoly& s, long m)
{
    if (m < 1)
        throw InvalidOrder("not_transparent needs m >= 1");
    return run_check("not_transparent", {{"S", s.to_string()}, {"m", m}}, [&]() -> Witness {
        A11Algebra alg(Field::cyclotomic(m));
        if (alg.transparency_defect(s).is_zero())
            return "transparency defect of " + s.to_string() + " vanishes over " + field_label(m);
        return std::nullopt;
    });
}

VerifyReport check_denominators(const std::vector<long>& orders)
{
    nlohmann::ordered_json params{{"orders", orders}};
    return run_check("denominators", params, [&]() -> Witness {
        for (long m : orders) {
            try {
                A11Algebra alg(Field::cyclotomic(m));
                return "no DenominatorVanishes at m = " + std::to_string(m);
            } catch (const DenominatorVanishes&) {
            }
        }
        return std::nullopt;
    });
}

// ------------------------------------------------------------------ search

namespace {

Matrix to_rows(const std::vector<PQCoords>& vs, const std::vector<Bidegree>& columns)
{
    Matrix rows;
    for (const auto& v : vs) {
        Vector row;
        for (const auto& col : columns)
            row.push_back(v.coefficient(col));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Value of a Q(q) scalar at a rational point; empty if a denominator vanishes.
std::optional<Scalar> at_point(const Scalar& s, const Rational& q)
{
    const QRat* r = s.qrat();
    if (!r)
        return s;
    const Rational den = r->den().evaluate(q);
    if (den == 0)
        return std::nullopt;
    return Scalar(Rational(r->num().evaluate(q) / den));
}

// Rank of the matrix specialized at q, a lower bound for its rank over Q(q).
std::optional<std::size_t> specialized_rank(const std::map<BasisKey, Vector>& rows, std::size_t ncols, const Rational& q)
{
    RowReducer red(ncols);
    for (const auto& [key, row] : rows) {
        Vector v;
        for (const auto& s : row) {
            auto x = at_point(s, q);
            if (!x)
                return std::nullopt;
            v.push_back(std::move(*x));
        }
        red.add_row(std::move(v));
    }
    return red.rank();
}

} // namespace

TransparentSubspace search_transparent(long m, Bidegree bound)
{
    if (m < 0)
        throw InvalidOrder("search needs m >= 0 (0 = generic)");
    TransparentSubspace out;
    out.m = m;
    out.bound = bound;
    A11Algebra alg(field_for(m));

    for (long l = 0; 2 * l <= bound.first; ++l)
        for (long k = 0; k + 2 * l <= bound.first; ++k)
            if (D2_monomial({k, l}) <= bound)
                out.columns.push_back({k, l});
    std::sort(out.columns.begin(), out.columns.end(),
              [](Bidegree a, Bidegree b) { return D2_monomial(a) < D2_monomial(b); });

    long kmax = 0, lmax = 0;
    for (const auto& c : out.columns) {
        kmax = std::max(kmax, c.first);
        lmax = std::max(lmax, c.second);
    }
    // P_k and Q_l are substituted once per mode; the products are multiplied.
    std::vector<A11Elem> p_up, p_down, q_up, q_down;
    for (long k = 0; k <= kmax; ++k) {
        XYPoly pk = pq_product(k, 0);
        p_up.push_back(alg.star_sub(pk, StarMode::UpBar));
        p_down.push_back(alg.star_sub(pk, StarMode::DownUnder));
    }
    for (long l = 0; l <= lmax; ++l) {
        XYPoly ql = pq_product(0, l);
        q_up.push_back(alg.star_sub(ql, StarMode::UpBar));
        q_down.push_back(alg.star_sub(ql, StarMode::DownUnder));
    }

    const std::size_t ncols = out.columns.size();
    std::map<BasisKey, Vector> rows;
    std::size_t nonzero_columns = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
        const auto [k, l] = out.columns[c];
        const auto ku = static_cast<std::size_t>(k), lu = static_cast<std::size_t>(l);
        A11Elem defect = alg.mul(p_up[ku], q_up[lu]) - alg.mul(p_down[ku], q_down[lu]);
        if (!defect.is_zero())
            ++nonzero_columns;
        for (const auto& [key, s] : defect.terms()) {
            auto [it, inserted] = rows.try_emplace(key, Vector(ncols));
            it->second[c] = s;
        }
    }

    // Over Q(q) a full-rank specialization settles the rank without rational
    // function arithmetic: the nullspace is then spanned by the zero columns.
    bool settled = false;
    if (m == 0) {
        for (const Rational& q : {Rational(2), Rational(3), Rational(5, 3)}) {
            auto rank = specialized_rank(rows, ncols, q);
            if (!rank)
                continue;
            settled = *rank == nonzero_columns;
            break;
        }
    }
    Matrix null;
    if (settled) {
        for (std::size_t c = 0; c < ncols; ++c) {
            const auto key_has_column = [&](const auto& kv) { return !kv.second[c].is_zero(); };
            if (std::none_of(rows.begin(), rows.end(), key_has_column)) {
                Vector v(ncols);
                v[c] = Scalar(1);
                null.push_back(std::move(v));
            }
        }
    } else {
        // A column that is not identically zero cannot be free once the rank
        // reaches the number of such columns, so elimination may stop there.
        RowReducer red(ncols);
        for (auto& [key, row] : rows) {
            if (red.rank() == nonzero_columns)
                break;
            red.add_row(std::move(row));
        }
        null = red.nullspace();
    }
    for (const auto& v : null) {
        PQCoords coords;
        for (std::size_t c = 0; c < ncols; ++c)
            coords.add_term(out.columns[c], v[c]);
        out.basis.push_back(std::move(coords));
    }

    if (m == 0) {
        out.expected.push_back(PQCoords::term({0, 0}));
    } else {
        const long n = m / std::gcd(m, 2L);
        out.n = n;
        for (long j = 0; 2 * n * j <= bound.first; ++j)
            for (long i = 0; n * (i + 2 * j) <= bound.first; ++i)
                if (D2_monomial({n * i, n * j}) <= bound)
                    out.expected.push_back(to_pq_basis(pq_monomial(n, i, j)));
    }
    out.matches_expected = same_span(to_rows(out.basis, out.columns), to_rows(out.expected, out.columns), ncols);
    return out;
}

VerifyReport check_uniqueness(long m, Bidegree bound)
{
    nlohmann::ordered_json params{{"m", m}, {"bound", {bound.first, bound.second}}};
    VerifyReport r = run_check("uniqueness", params, [&]() -> Witness {
        TransparentSubspace t = search_transparent(m, bound);
        std::vector<std::string> found;
        for (const auto& b : t.basis)
            found.push_back(b.to_string());
        params["nullspace_dim"] = t.basis.size();
        params["nullspace"] = found;
        if (t.n && *t.n % 3 == 0) {
            params["asserted"] = false;
            return std::nullopt;
        }
        if (t.matches_expected)
            return std::nullopt;
        std::string w = "nullspace over " + field_label(m) + " differs from the expected truncation; found {";
        for (std::size_t k = 0; k < found.size(); ++k)
            w += (k ? ", " : "") + found[k];
        return w + "}";
    });
    if (r.status != Status::Error)
        r.params = params;
    return r;
}

// ------------------------------------------------------------------- suite

const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names = {
        "a11_presentation", "composition",   "degree_shift", "denominators",    "elementary_sums", "leading_terms",
        "not_transparent",  "power_sums",    "star_consistency", "transparency", "uniqueness",
    };
    return names;
}

std::vector<VerifyReport> run_named(const std::string& name)
{
    if (name == "a11_presentation")
        return {check_a11_presentation()};
    if (name == "composition")
        return {check_composition()};
    if (name == "degree_shift")
        return {check_degree_shift()};
    if (name == "denominators")
        return {check_denominators()};
    if (name == "elementary_sums")
        return {check_elementary_sums()};
    if (name == "leading_terms")
        return {check_leading_terms()};
    if (name == "not_transparent") {
        std::vector<VerifyReport> out;
        for (long k = 1; k <= 4; ++k)
            out.push_back(check_not_transparent(P(k), 10));
        return out;
    }
    if (name == "power_sums")
        return {check_power_sums()};
    if (name == "star_consistency")
        return {check_star_consistency()};
    if (name == "transparency") {
        std::vector<VerifyReport> out;
        for (auto [n, m] : std::vector<std::pair<long, long>>{{1, 1}, {1, 2}, {5, 10}, {7, 14}, {8, 16}})
            out.push_back(check_transparent(n, m));
        return out;
    }
    if (name == "uniqueness")
        return {check_uniqueness(10, {10, 10}), check_uniqueness(14, {7, 7}),  check_uniqueness(1, {10, 10}),
                check_uniqueness(16, {10, 10}), check_uniqueness(18, {10, 10}), check_uniqueness(0, {10, 10})};
    return {};
}

std::vector<VerifyReport> run_suite()
{
    std::vector<VerifyReport> out;
    for (const auto& name : check_names())
        for (auto& r : run_named(name))
            out.push_back(std::move(r));
    return out;
}

} // namespace g2skein
