#include "k3gm/rational.hpp"

#include <stdexcept>

namespace k3gm {

std::string to_string(const Rational &x)
{
    Rational c = x;
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(const std::string &s)
{
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
    if (r.get_den() == 0) {
        throw std::invalid_argument("zero denominator: '" + s + "'");
    }
    r.canonicalize();
    return r;
}

Integer factorial(unsigned long n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

} // namespace k3gm
