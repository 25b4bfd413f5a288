#include "dendra/rational.hpp"

#include "dendra/errors.hpp"

#include <cctype>

namespace dendra {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw SchemaError("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+')
        n.erase(0, 1);
    mpz_class p(n, 10);
    mpz_class q(std::string(den), 10);
    if (q == 0)
        throw SchemaError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

} // namespace dendra
