#pragma once

// Sparse finite linear combinations over Scalar, shared by every polynomial
// and algebra-element type. Zero coefficients are never stored.

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "g2skein/qscalar.hpp"
#include "g2skein/text.hpp"

namespace g2skein {

/// Integer pair ordered lexicographically; used for exponents and bidegrees.
struct Bidegree {
    long first = 0;
    long second = 0;

    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
    friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.first + b.first, a.second + b.second}; }
    std::string to_string() const { return "(" + std::to_string(first) + "," + std::to_string(second) + ")"; }
};

template <class Derived, class Key, class Compare = std::less<Key>>
class LinearCombination {
public:
    using key_type = Key;
    using map_type = std::map<Key, Scalar, Compare>;

    LinearCombination() = default;

    static Derived term(const Key& k, const Scalar& c = Scalar(1))
    {
        Derived d;
        d.add_term(k, c);
        return d;
    }

    const map_type& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coefficient(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const Key& k, const Scalar& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    template <class F>
    Derived map_coefficients(F&& f) const
    {
        Derived d;
        for (const auto& [k, c] : terms_)
            d.add_term(k, f(c));
        return d;
    }

    Derived operator-() const
    {
        return map_coefficients([](const Scalar& c) { return -c; });
    }

    Derived& operator+=(const Derived& o)
    {
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return self();
    }

    Derived& operator-=(const Derived& o)
    {
        for (const auto& [k, c] : o.terms_)
            add_term(k, -c);
        return self();
    }

    Derived& operator*=(const Scalar& s)
    {
        if (s.is_zero()) {
            terms_.clear();
        } else if (!s.is_one()) {
            for (auto& [k, c] : terms_)
                c *= s;
        }
        return self();
    }

    friend Derived operator+(Derived a, const Derived& b) { return a += b; }
    friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
    friend Derived operator*(Derived a, const Scalar& s) { return a *= s; }
    friend Derived operator*(const Scalar& s, Derived a) { return a *= s; }
    friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

protected:
    Derived& self() { return static_cast<Derived&>(*this); }

    map_type terms_;
};

namespace text {

/// Prints `c * word` as a term body plus its sign. Rational coefficients
/// print bare; other scalars are parenthesised. An empty word means the
/// constant basis element.
std::pair<std::string, bool> format_term(const Scalar& c, const std::string& word);

/// Scalar value of a Number or parenthesised Scalar factor.
Scalar scalar_factor(const Factor& f);

} // namespace text

} // namespace g2skein
