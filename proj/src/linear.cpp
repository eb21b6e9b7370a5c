#include "g2skein/linear.hpp"

namespace g2skein::text {

std::pair<std::string, bool> format_term(const Scalar& c, const std::string& word)
{
    if (const Rational* r = c.rational()) {
        bool negative = *r < 0;
        Rational mag = negative ? Rational(-*r) : *r;
        if (word.empty())
            return {mag.get_str(), negative};
        if (mag == 1)
            return {word, negative};
        return {mag.get_str() + "*" + word, negative};
    }
    std::string s = "(" + c.to_string() + ")";
    return {word.empty() ? s : s + "*" + word, false};
}

Scalar scalar_factor(const Factor& f)
{
    if (f.kind == Factor::Kind::Number)
        return Scalar(f.number);
    if (f.kind != Factor::Kind::Scalar)
        throw ParseError("expected a scalar factor");
    Scalar s = Scalar::parse(f.body);
    if (!f.divisor.empty())
        s /= Scalar::parse(f.divisor);
    return s;
}

} // namespace g2skein::text
