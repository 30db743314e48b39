#include "k3gm/logseries.hpp"

#include <stdexcept>

namespace k3gm {

LogSeries &LogSeries::operator+=(const LogSeries &o)
{
    c0 += o.c0;
    c1 += o.c1;
    c2 += o.c2;
    return *this;
}

LogSeries &LogSeries::operator-=(const LogSeries &o)
{
    c0 -= o.c0;
    c1 -= o.c1;
    c2 -= o.c2;
    return *this;
}

LogSeries operator*(const BiSeries &f, const LogSeries &x)
{
    return LogSeries(f * x.c0, f * x.c1, f * x.c2);
}

LogSeries operator*(const Rational &s, const LogSeries &x)
{
    return LogSeries(x.c0 * s, x.c1 * s, x.c2 * s);
}

LogSeries theta(const LogSeries &x, int var)
{
    if (var != 1 && var != 2) {
        throw std::invalid_argument("theta: variable must be 1 or 2");
    }
    LogSeries r(theta(x.c0, var), theta(x.c1, var), theta(x.c2, var));
    r.c0 += var == 1 ? x.c1 : x.c2;
    return r;
}

} // namespace k3gm
