#pragma once

// The annulus algebra with one marked point on each boundary component,
// presented on the basis {a^i c^j} u {f_{i,j}}, with the star elements, the
// maps F^star / F_star from E', and the transparency defect.

#include <compare>
#include <deque>
#include <mutex>
#include <string>
#include <string_view>
#include <tuple>

#include "g2skein/weblambda.hpp"
#include "g2skein/xyring.hpp"

namespace g2skein {

/// a^i c^j (kind AC, j >= 0) or f_{i,j} (kind F, i, j >= 0).
/// Ordered AC before F; AC keys by (j, i), F keys by (i, j).
struct BasisKey {
    enum class Kind { AC, F };
    Kind kind = Kind::AC;
    long i = 0;
    long j = 0;

    static BasisKey ac(long i, long j);
    static BasisKey f(long i, long j);

    friend bool operator==(const BasisKey&, const BasisKey&) = default;
    friend std::strong_ordering operator<=>(const BasisKey& a, const BasisKey& b)
    {
        if (a.kind != b.kind)
            return a.kind == Kind::AC ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.kind == Kind::AC)
            return std::tie(a.j, a.i) <=> std::tie(b.j, b.i);
        return std::tie(a.i, a.j) <=> std::tie(b.i, b.j);
    }
};

class A11Elem : public LinearCombination<A11Elem, BasisKey> {
public:
    A11Elem() = default;
    A11Elem(const Scalar& c) { add_term(BasisKey::ac(0, 0), c); }

    static A11Elem ac(long i, long j, const Scalar& c = Scalar(1)) { return term(BasisKey::ac(i, j), c); }
    static A11Elem f(long i = 0, long j = 0, const Scalar& c = Scalar(1)) { return term(BasisKey::f(i, j), c); }

    /// Coefficientwise q -> q^-1.
    A11Elem bar() const;
    bool has_ac_term() const;

    std::string to_string() const;
    /// Terms may mix a, c with scalars, or be a single f[i,j] times scalars.
    static A11Elem parse(std::string_view src);
};

/// Lexicographic max of (j, k) over the terms a^k c^j. Throws NoACTerm.
Bidegree ac_lead_bidegree(const A11Elem& u);

enum class StarMode { Up, Down, UpBar, DownUnder };

/// Multiplication and distinguished elements over a fixed coefficient field.
/// Construction throws DenominatorVanishes if [2] or [12] vanishes there.
class A11Algebra {
public:
    explicit A11Algebra(Field field);

    const Field& field() const { return field_; }
    A11Elem mul(const A11Elem& u, const A11Elem& v) const;
    A11Elem pow(const A11Elem& u, long e) const;
    /// Coefficients mapped into the field.
    A11Elem lift(const A11Elem& u) const;

    const A11Elem& x_up_star() const { return x_up_; }
    const A11Elem& x_down_star() const { return x_down_; }
    const A11Elem& y_up_star() const { return y_up_; }
    const A11Elem& y_down_star() const { return y_down_; }
    const A11Elem& y_bar() const { return y_bar_; }
    const A11Elem& y_under() const { return y_under_; }

    A11Elem F_up(const EPrimePoly& p) const;
    A11Elem F_down(const EPrimePoly& p) const;

    A11Elem star_sub(const XYPoly& s, StarMode mode) const;
    /// S(x^star, y-bar) - S(x_star, y-under).
    A11Elem transparency_defect(const XYPoly& s) const;

private:
    struct StarMap {
        A11Elem sum_image;  // image of l1 + l2
        Scalar prod_scale;  // image of l1 l2 is prod_scale * a
        mutable std::deque<A11Elem> sum_powers;
    };

    void accumulate_product(A11Elem& out, const BasisKey& u, const BasisKey& v, const Scalar& c) const;
    const std::vector<Scalar>& c_power_on_f(long j) const;
    A11Elem apply(const StarMap& map, const EPrimePoly& p) const;

    Field field_;
    Scalar kappa_;       // [6]/([2][3])
    Scalar two_sq_;      // [2]^2
    Scalar eight_four_;  // [8]/[4]
    Scalar seven_;       // [7]
    A11Elem x_up_, x_down_, y_up_, y_down_, y_bar_, y_under_;
    StarMap up_map_, down_map_;

    mutable std::mutex cache_mutex_;
    mutable std::mutex power_mutex_;
    // c^j f_{k,l} = sum_t c_power_[j][t] f_{k+t,l}
    mutable std::deque<std::vector<Scalar>> c_power_;
};

} // namespace g2skein
