#include "cardpoly/rational.hpp"

#include "cardpoly/error.hpp"

namespace cardpoly {

namespace {

Integer parse_integer(const std::string &text)
{
    require(!text.empty(), "empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    require(start < text.size(), "malformed integer literal '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        require(text[i] >= '0' && text[i] <= '9',
                "malformed integer literal '" + text + "'");
    Integer z;
    z.set_str(text[0] == '+' ? text.substr(1) : text, 10);
    return z;
}

} // namespace

Rational make_rational(const Integer &num, const Integer &den)
{
    require(den != 0, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string &text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_integer(text));
    return make_rational(parse_integer(text.substr(0, slash)),
                         parse_integer(text.substr(slash + 1)));
}

std::string to_string(const Rational &q)
{
    return q.get_str();
}

} // namespace cardpoly
