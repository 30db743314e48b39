#include "properties.hpp"

#include "k3gm/bipoly.hpp"
#include "k3gm/biseries.hpp"
#include "k3gm/qseries.hpp"
#include "k3gm/serialize.hpp"

#include <functional>
#include <random>
#include <string>

namespace k3gm::props {

namespace {

class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int span = 6)
    {
        Rational r(uniform(-span, span), uniform(1, 4));
        r.canonicalize();
        return r;
    }

    Rational nonzero()
    {
        Rational r;
        while (r == 0) {
            r = rational();
        }
        return r;
    }

    BiSeries series(int K1, int K2)
    {
        BiSeries s(K1, K2);
        for (int n = 0; n <= K1; ++n) {
            for (int m = 0; m <= K2; ++m) {
                if (uniform(0, 3) != 0) {
                    s.set(n, m, rational());
                }
            }
        }
        return s;
    }

    BiSeries series_with_constant(int K, const Rational &c)
    {
        BiSeries s = series(K, K);
        s.set(0, 0, c);
        return s;
    }

    QSeries qseries(int qmax)
    {
        std::vector<Rational> c;
        for (int e = 0; e <= qmax; ++e) {
            c.push_back(uniform(0, 2) == 0 ? Rational(0) : rational());
        }
        return QSeries(0, c);
    }

    BiPolynomial poly(int deg)
    {
        std::map<Exponent, Rational> t;
        for (int n = 0; n <= deg; ++n) {
            for (int m = 0; n + m <= deg; ++m) {
                if (uniform(0, 2) == 0) {
                    t[{n, m}] = rational();
                }
            }
        }
        return BiPolynomial(t);
    }

    int order() { return uniform(2, 5); }

private:
    std::mt19937 rng_;
};

std::string describe(const std::optional<Mismatch> &m)
{
    return std::to_string(m->monomial.first) + "," + std::to_string(m->monomial.second) + ": " +
           to_string(m->lhs) + " != " + to_string(m->rhs);
}

// Runs `law` on each instance; the law returns an empty string on success, a description otherwise.
Check law(const std::string &name, int instances, Gen &g, const std::function<std::string(Gen &)> &f)
{
    for (int i = 0; i < instances; ++i) {
        std::string msg = f(g);
        if (!msg.empty()) {
            Check c = exact_check(name, false, discrepancy("instance " + std::to_string(i), msg, "equal"));
            return c;
        }
    }
    Check c = exact_check(name, true);
    c.note = std::to_string(instances) + " random instances";
    return c;
}

std::string same(const BiSeries &a, const BiSeries &b)
{
    auto m = first_mismatch(a, b);
    return m ? describe(m) : std::string();
}

std::string same(const QSeries &a, const QSeries &b, int upto)
{
    auto m = first_mismatch(a, b, upto);
    return m ? describe(m) : std::string();
}

} // namespace

std::vector<Check> series_core_laws(int instances, std::uint32_t seed)
{
    Gen g(seed);
    std::vector<Check> out;

    out.push_back(law("bivariate ring: commutativity", instances, g, [](Gen &g) {
        int K = g.order();
        BiSeries a = g.series(K, K), b = g.series(K, K);
        return same(a * b, b * a);
    }));
    out.push_back(law("bivariate ring: associativity", instances, g, [](Gen &g) {
        int K = g.order();
        BiSeries a = g.series(K, K), b = g.series(K, K), c = g.series(K, K);
        std::string s = same((a * b) * c, a * (b * c));
        return s.empty() ? same((a + b) + c, a + (b + c)) : s;
    }));
    out.push_back(law("bivariate ring: distributivity", instances, g, [](Gen &g) {
        int K = g.order();
        BiSeries a = g.series(K, K), b = g.series(K, K), c = g.series(K, K);
        return same(a * (b + c), a * b + a * c);
    }));
    out.push_back(law("bivariate ring: identities and negation", instances, g, [](Gen &g) {
        int K = g.order();
        BiSeries a = g.series(K, K);
        std::string s = same(a * BiSeries::constant(1), a);
        if (s.empty()) {
            s = same(a + BiSeries::constant(0), a);
        }
        return s.empty() ? same(a - a, BiSeries(K, K)) : s;
    }));
    out.push_back(law("bivariate ring: mixed truncation orders", instances, g, [](Gen &g) {
        int K1 = g.order(), K2 = g.order();
        BiSeries a = g.series(K1, K2), b = g.series(K2, K1);
        BiSeries p = a * b;
        if (p.order1() != std::min(K1, K2) || p.order2() != std::min(K1, K2)) {
            return std::string("product order not the minimum of the operands");
        }
        return same(p, a.truncate(std::min(K1, K2)) * b.truncate(std::min(K1, K2)));
    }));
    out.push_back(law("bivariate inverse: a inv(a) = 1", instances, g, [](Gen &g) {
        BiSeries a = g.series_with_constant(g.order(), g.nonzero());
        return same(a * inv(a), BiSeries::constant(1));
    }));
    out.push_back(law("bivariate inverse: inv(inv(a)) = a", instances, g, [](Gen &g) {
        BiSeries a = g.series_with_constant(g.order(), g.nonzero());
        return same(inv(inv(a)), a);
    }));
    out.push_back(law("bivariate round trip: exp(log(a)) = a", instances, g, [](Gen &g) {
        BiSeries a = g.series_with_constant(g.order(), 1);
        return same(exp(log(a)), a);
    }));
    out.push_back(law("bivariate round trip: log(exp(b)) = b", instances, g, [](Gen &g) {
        BiSeries b = g.series_with_constant(g.order(), 0);
        return same(log(exp(b)), b);
    }));
    out.push_back(law("bivariate round trip: nth_root(a, n)^n = a", instances, g, [](Gen &g) {
        BiSeries a = g.series_with_constant(g.order(), 1);
        long n = g.uniform(2, 6);
        return same(pow(nth_root(a, n), n), a);
    }));
    out.push_back(law("bivariate: log(ab) = log a + log b", instances, g, [](Gen &g) {
        int K = g.order();
        BiSeries a = g.series_with_constant(K, 1), b = g.series_with_constant(K, 1);
        return same(log(a * b), log(a) + log(b));
    }));
    out.push_back(law("Leibniz rule: theta_i(ab) = theta_i(a) b + a theta_i(b)", instances, g, [](Gen &g) {
        int K = g.order();
        BiSeries a = g.series(K, K), b = g.series(K, K);
        int v = g.uniform(1, 2);
        return same(theta(a * b, v), theta(a, v) * b + a * theta(b, v));
    }));
    out.push_back(law("Leibniz rule: theta_1 theta_2 = theta_2 theta_1", instances, g, [](Gen &g) {
        BiSeries a = g.series(g.order(), g.order());
        return same(theta(theta(a, 1), 2), theta(theta(a, 2), 1));
    }));
    out.push_back(law("substitution is multiplicative", instances, g, [](Gen &g) {
        int K = g.order();
        BiSeries f = g.series(K, K), h = g.series(K, K);
        BiSeries i1 = BiSeries::monomial(1, 0, 1) * g.series_with_constant(K, g.nonzero());
        BiSeries i2 = BiSeries::monomial(0, 1, 1) * g.series_with_constant(K, g.nonzero());
        return same(substitute(f * h, i1, i2), substitute(f, i1, i2) * substitute(h, i1, i2));
    }));
    out.push_back(law("substitution is additive and fixes constants", instances, g, [](Gen &g) {
        int K = g.order();
        BiSeries f = g.series(K, K), h = g.series(K, K);
        BiSeries i1 = BiSeries::monomial(1, 0, 1) * g.series_with_constant(K, g.nonzero());
        BiSeries i2 = BiSeries::monomial(0, 1, 1) * g.series_with_constant(K, g.nonzero());
        Rational c = g.rational();
        std::string s = same(substitute(BiSeries::constant(c, K, K), i1, i2), BiSeries::constant(c));
        return s.empty() ? same(substitute(f + h, i1, i2), substitute(f, i1, i2) + substitute(h, i1, i2)) : s;
    }));
    out.push_back(law("substitution by the identity map", instances, g, [](Gen &g) {
        int K = g.order();
        BiSeries f = g.series(K, K);
        return same(substitute(f, BiSeries::monomial(1, 0, 1, K, K), BiSeries::monomial(0, 1, 1, K, K)), f);
    }));
    out.push_back(law("univariate ring and inverse laws", instances, g, [](Gen &g) {
        int n = g.uniform(3, 12);
        QSeries a = g.qseries(n), b = g.qseries(n), c = g.qseries(n);
        std::string s = same(a * (b + c), a * b + a * c, n);
        if (s.empty()) {
            s = same(a * b, b * a, n);
        }
        if (s.empty()) {
            std::vector<Rational> v = a.coeffs();
            v.resize(n + 1);
            v[0] = g.nonzero();
            QSeries u(0, v);
            s = same(u * inv(u), QSeries::constant(1, n), n);
        }
        return s;
    }));
    out.push_back(law("univariate Leibniz rule and dilation", instances, g, [](Gen &g) {
        int n = g.uniform(3, 12);
        QSeries a = g.qseries(n), b = g.qseries(n);
        int k = g.uniform(1, 3);
        std::string s = same(theta(a * b), theta(a) * b + a * theta(b), n);
        return s.empty() ? same(dilate(a * b, k), dilate(a, k) * dilate(b, k), n) : s;
    }));
    out.push_back(law("univariate nth_root round trip", instances, g, [](Gen &g) {
        int n = g.uniform(3, 12);
        std::vector<Rational> v = g.qseries(n).coeffs();
        v.resize(n + 1);
        v[0] = 1;
        QSeries a(0, v);
        long k = g.uniform(2, 6);
        return same(pow(nth_root(a, k), k), a, n);
    }));
    out.push_back(law("rational function arithmetic agrees with series", instances, g, [](Gen &g) {
        BiPolynomial p = g.poly(3), q = g.poly(2);
        BiPolynomial den = BiPolynomial(1) - BiPolynomial::monomial(g.uniform(0, 1), 1, g.nonzero()) +
                           BiPolynomial::monomial(1, 0, g.rational());
        auto f = BiRationalFunction::ratio(p, den);
        auto h = BiRationalFunction::ratio(q, den * den);
        int K = 4;
        std::string s = same((f * h).to_series(K), f.to_series(K) * h.to_series(K));
        if (s.empty()) {
            s = same((f + h).to_series(K), f.to_series(K) + h.to_series(K));
        }
        if (s.empty()) {
            s = same(theta(f, 1).to_series(K), theta(f.to_series(K), 1));
        }
        if (s.empty() && !h.is_zero() && !rf_equal(f * h / h, f)) {
            s = "f h / h != f";
        }
        return s;
    }));
    out.push_back(law("serialization round trip", instances, g, [](Gen &g) {
        BiSeries a = g.series(g.order(), g.order());
        Json j = to_json(a);
        BiSeries b(a.order1(), a.order2());
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string key = it.key();
            auto comma = key.find(',');
            b.set(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)),
                  parse_rational(it.value().get<std::string>()));
        }
        std::string s = same(a, b);
        if (s.empty() && to_json(b).dump() != j.dump()) {
            s = "serialization not deterministic";
        }
        return s;
    }));
    return out;
}

} // namespace k3gm::props
