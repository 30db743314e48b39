#include "k3gm/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3gm {

namespace {

void prune(std::map<Exponent, Rational> &t)
{
    for (auto it = t.begin(); it != t.end();) {
        it = it->second == 0 ? t.erase(it) : std::next(it);
    }
}

} // namespace

BiPolynomial::BiPolynomial(const Rational &c)
{
    if (c != 0) {
        t_.emplace(Exponent{0, 0}, c);
    }
}

BiPolynomial::BiPolynomial(std::map<Exponent, Rational> terms) : t_(std::move(terms))
{
    for (const auto &[e, v] : t_) {
        if (e.first < 0 || e.second < 0) {
            throw std::invalid_argument("BiPolynomial: negative exponent");
        }
    }
    prune(t_);
}

BiPolynomial BiPolynomial::monomial(int n, int m, const Rational &c)
{
    return BiPolynomial(std::map<Exponent, Rational>{{{n, m}, c}});
}

Rational BiPolynomial::coeff(int n, int m) const
{
    auto it = t_.find({n, m});
    return it == t_.end() ? Rational(0) : it->second;
}

bool BiPolynomial::is_constant() const
{
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exponent{0, 0});
}

std::pair<Exponent, Rational> BiPolynomial::leading() const
{
    if (t_.empty()) {
        throw std::domain_error("BiPolynomial: zero polynomial has no leading term");
    }
    return *t_.rbegin();
}

int BiPolynomial::degree(int var) const
{
    int d = -1;
    for (const auto &[e, v] : t_) {
        d = std::max(d, var == 1 ? e.first : e.second);
    }
    return d;
}

BiPolynomial BiPolynomial::operator-() const
{
    BiPolynomial r = *this;
    for (auto &[e, v] : r.t_) {
        v = -v;
    }
    return r;
}

BiPolynomial &BiPolynomial::operator+=(const BiPolynomial &o)
{
    for (const auto &[e, v] : o.t_) {
        t_[e] += v;
    }
    prune(t_);
    return *this;
}

BiPolynomial &BiPolynomial::operator-=(const BiPolynomial &o)
{
    for (const auto &[e, v] : o.t_) {
        t_[e] -= v;
    }
    prune(t_);
    return *this;
}

BiPolynomial &BiPolynomial::operator*=(const Rational &s)
{
    if (s == 0) {
        t_.clear();
        return *this;
    }
    for (auto &[e, v] : t_) {
        v *= s;
    }
    return *this;
}

BiPolynomial operator*(const BiPolynomial &a, const BiPolynomial &b)
{
    std::map<Exponent, Rational> t;
    for (const auto &[ea, va] : a.t_) {
        for (const auto &[eb, vb] : b.t_) {
            t[{ea.first + eb.first, ea.second + eb.second}] += va * vb;
        }
    }
    return BiPolynomial(std::move(t));
}

BiSeries BiPolynomial::to_series(int K1, int K2) const
{
    return BiSeries::from_terms(t_, K1, K2);
}

BiPolynomial pow(const BiPolynomial &a, unsigned n)
{
    BiPolynomial r(1);
    for (unsigned i = 0; i < n; ++i) {
        r = r * a;
    }
    return r;
}

BiPolynomial theta(const BiPolynomial &a, int var)
{
    if (var != 1 && var != 2) {
        throw std::invalid_argument("theta: variable must be 1 or 2");
    }
    std::map<Exponent, Rational> t;
    for (const auto &[e, v] : a.terms()) {
        t[e] = v * (var == 1 ? e.first : e.second);
    }
    return BiPolynomial(std::move(t));
}

std::optional<BiPolynomial> divide_exact(const BiPolynomial &a, const BiPolynomial &b)
{
    if (b.is_zero()) {
        throw std::domain_error("divide_exact: division by zero polynomial");
    }
    const auto [lb, cb] = b.leading();
    BiPolynomial r = a;
    std::map<Exponent, Rational> q;
    while (!r.is_zero()) {
        const auto [lr, cr] = r.leading();
        if (lr.first < lb.first || lr.second < lb.second) {
            return std::nullopt;
        }
        BiPolynomial t = BiPolynomial::monomial(lr.first - lb.first, lr.second - lb.second, cr / cb);
        q[{lr.first - lb.first, lr.second - lb.second}] += cr / cb;
        r -= t * b;
    }
    return BiPolynomial(std::move(q));
}

BiPolynomial at_z2_zero(const BiPolynomial &a)
{
    std::map<Exponent, Rational> t;
    for (const auto &[e, v] : a.terms()) {
        if (e.second == 0) {
            t[e] = v;
        }
    }
    return BiPolynomial(std::move(t));
}

BiRationalFunction BiRationalFunction::ratio(const BiPolynomial &num, const BiPolynomial &den)
{
    BiRationalFunction r(num);
    r.add_factor(den, 1);
    r.cancel();
    return r;
}

void BiRationalFunction::add_factor(BiPolynomial f, int e)
{
    if (e == 0) {
        return;
    }
    if (f.is_zero()) {
        throw std::domain_error("BiRationalFunction: zero denominator");
    }
    if (f.is_constant()) {
        Rational c = f.constant_term();
        Rational s = 1;
        for (int i = 0; i < e; ++i) {
            s *= c;
        }
        num_ *= 1 / s;
        return;
    }
    // scale to constant term 1 when possible, otherwise to monic leading term
    Rational s = f.constant_term() != 0 ? Rational(1 / f.constant_term()) : Rational(1 / f.leading().second);
    f *= s;
    Rational se = 1;
    for (int i = 0; i < e; ++i) {
        se *= s;
    }
    num_ *= se;
    for (auto &[g, k] : den_) {
        if (g == f) {
            k += e;
            return;
        }
    }
    for (std::size_t i = 0; i < den_.size(); ++i) {
        BiPolynomial g = den_[i].first;
        if (g.degree(1) + g.degree(2) < f.degree(1) + f.degree(2)) {
            if (auto q = divide_exact(f, g)) {
                den_[i].second += e;
                add_factor(*q, e);
                return;
            }
        }
    }
    den_.emplace_back(std::move(f), e);
    std::sort(den_.begin(), den_.end());
}

void BiRationalFunction::cancel()
{
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto &[f, e] : den_) {
        while (e > 0) {
            auto q = divide_exact(num_, f);
            if (!q) {
                break;
            }
            num_ = std::move(*q);
            --e;
        }
    }
    den_.erase(std::remove_if(den_.begin(), den_.end(), [](const Factor &x) { return x.second == 0; }), den_.end());
}

BiPolynomial BiRationalFunction::denominator() const
{
    BiPolynomial d(1);
    for (const auto &[f, e] : den_) {
        d = d * pow(f, static_cast<unsigned>(e));
    }
    return d;
}

BiRationalFunction BiRationalFunction::operator-() const
{
    BiRationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

BiRationalFunction &BiRationalFunction::operator+=(const BiRationalFunction &o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        *this = o;
        return *this;
    }
    // common denominator from the factor multiplicities
    std::vector<Factor> lcm = den_;
    for (const auto &[g, k] : o.den_) {
        auto it = std::find_if(lcm.begin(), lcm.end(), [&](const Factor &x) { return x.first == g; });
        if (it == lcm.end()) {
            lcm.emplace_back(g, k);
        } else {
            it->second = std::max(it->second, k);
        }
    }
    auto lift_num = [&](const BiRationalFunction &x) {
        BiPolynomial n = x.num_;
        for (const auto &[g, k] : lcm) {
            auto it = std::find_if(x.den_.begin(), x.den_.end(), [&](const Factor &y) { return y.first == g; });
            int have = it == x.den_.end() ? 0 : it->second;
            n = n * pow(g, static_cast<unsigned>(k - have));
        }
        return n;
    };
    num_ = lift_num(*this) + lift_num(o);
    den_ = std::move(lcm);
    std::sort(den_.begin(), den_.end());
    cancel();
    return *this;
}

BiRationalFunction &BiRationalFunction::operator-=(const BiRationalFunction &o)
{
    return *this += -o;
}

BiRationalFunction &BiRationalFunction::operator*=(const BiRationalFunction &o)
{
    num_ = num_ * o.num_;
    if (num_.is_zero()) {
        den_.clear();
        return *this;
    }
    for (const auto &[g, k] : o.den_) {
        add_factor(g, k);
    }
    cancel();
    return *this;
}

BiRationalFunction &BiRationalFunction::operator/=(const BiRationalFunction &o)
{
    if (o.is_zero()) {
        throw std::domain_error("BiRationalFunction: division by zero");
    }
    num_ = num_ * o.denominator();
    add_factor(o.num_, 1);
    cancel();
    return *this;
}

BiSeries BiRationalFunction::to_series(int K1, int K2) const
{
    BiSeries s = num_.to_series(K1, K2);
    for (const auto &[f, e] : den_) {
        if (f.constant_term() == 0) {
            throw std::domain_error("BiRationalFunction: denominator vanishes at the origin");
        }
        s = s * pow(inv(f.to_series(K1, K2)), e);
    }
    return s;
}

BiRationalFunction theta(const BiRationalFunction &a, int var)
{
    // theta(n / prod f^e) = (theta(n) F - n sum e theta(f) F/f) / (prod f^e * F),  F = prod f
    BiRationalFunction r;
    if (a.is_zero()) {
        return r;
    }
    BiPolynomial F(1);
    for (const auto &[f, e] : a.den_) {
        F = F * f;
    }
    BiPolynomial n = theta(a.num_, var) * F;
    for (const auto &[f, e] : a.den_) {
        BiPolynomial rest(1);
        for (const auto &[g, k] : a.den_) {
            if (!(g == f)) {
                rest = rest * g;
            }
        }
        n -= a.num_ * theta(f, var) * rest * Rational(e);
    }
    r.num_ = std::move(n);
    r.den_ = a.den_;
    for (auto &[f, e] : r.den_) {
        ++e;
    }
    r.cancel();
    return r;
}

bool rf_equal(const BiRationalFunction &a, const BiRationalFunction &b)
{
    return (a.numerator() * b.denominator() - b.numerator() * a.denominator()).is_zero();
}

std::string to_string(const BiPolynomial &a)
{
    if (a.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &[e, v] : a.terms()) {
        Rational c = v;
        if (out.empty()) {
            if (c < 0) {
                out = "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) {
                c = -c;
            }
        }
        std::string mono;
        for (int var = 1; var <= 2; ++var) {
            int k = var == 1 ? e.first : e.second;
            if (k == 0) {
                continue;
            }
            mono += (mono.empty() ? "" : "*") + std::string(var == 1 ? "z1" : "z2");
            if (k > 1) {
                mono += "^" + std::to_string(k);
            }
        }
        if (mono.empty()) {
            out += to_string(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += to_string(c) + "*" + mono;
        }
    }
    return out;
}

std::string to_string(const BiRationalFunction &a)
{
    std::string num = to_string(a.numerator());
    if (a.is_polynomial()) {
        return num;
    }
    std::string den;
    for (const auto &[f, e] : a.denominator_factors()) {
        den += (den.empty() ? "" : "*") + ("(" + to_string(f) + ")");
        if (e > 1) {
            den += "^" + std::to_string(e);
        }
    }
    return "(" + num + ")/" + den;
}

} // namespace k3gm
