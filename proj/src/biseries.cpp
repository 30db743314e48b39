#include "k3gm/biseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3gm {

namespace {

const Rational kZero(0);

// Storage bound along one variable: order+1, or the stored extent when untruncated.
int limit(int order, int extent)
{
    return order == kExact ? extent : std::min(extent, order + 1);
}


void require_bounded(const BiSeries &a, const char *op)
{
    if (!a.bounded()) {
        throw std::domain_error(std::string(op) + ": truncation order required (series is untruncated)");
    }
}

} // namespace

BiSeries::BiSeries(int K1, int K2) : o1_(K1), o2_(K2)
{
    if (K1 < 0 || K2 < 0) {
        throw std::invalid_argument("BiSeries: negative truncation order");
    }
}

BiSeries BiSeries::constant(const Rational &c, int K1, int K2)
{
    BiSeries s(K1, K2);
    s.set(0, 0, c);
    return s;
}

BiSeries BiSeries::monomial(int n, int m, const Rational &c, int K1, int K2)
{
    BiSeries s(K1, K2);
    if (n <= K1 && m <= K2) {
        s.set(n, m, c);
    }
    return s;
}

BiSeries BiSeries::from_terms(const std::map<Exponent, Rational> &terms, int K1, int K2)
{
    BiSeries s(K1, K2);
    for (const auto &[e, v] : terms) {
        if (e.first < 0 || e.second < 0) {
            throw std::invalid_argument("BiSeries: negative exponent");
        }
        if (e.first <= K1 && e.second <= K2) {
            s.set(e.first, e.second, v);
        }
    }
    return s;
}

void BiSeries::grow(int rows, int cols)
{
    if (rows <= r_ && cols <= c_) {
        return;
    }
    int nr = std::max(rows, r_);
    int nc = std::max(cols, c_);
    std::vector<Rational> nd(static_cast<std::size_t>(nr) * nc);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) {
            nd[i * nc + j] = std::move(d_[i * c_ + j]);
        }
    }
    d_ = std::move(nd);
    r_ = nr;
    c_ = nc;
}

const Rational &BiSeries::at(int n, int m) const
{
    if (n < 0 || m < 0 || n >= r_ || m >= c_) {
        return kZero;
    }
    return d_[n * c_ + m];
}

Rational BiSeries::coeff(int n, int m) const
{
    if (n > o1_ || m > o2_) {
        throw std::out_of_range("BiSeries: coefficient beyond truncation order requested");
    }
    return at(n, m);
}

void BiSeries::set(int n, int m, const Rational &v)
{
    if (n < 0 || m < 0 || n > o1_ || m > o2_) {
        throw std::out_of_range("BiSeries: exponent outside truncation box");
    }
    if (v == 0 && (n >= r_ || m >= c_)) {
        return;
    }
    grow(n + 1, m + 1);
    d_[n * c_ + m] = v;
}

void BiSeries::add_to(int n, int m, const Rational &v)
{
    if (v == 0) {
        return;
    }
    if (n < 0 || m < 0 || n > o1_ || m > o2_) {
        throw std::out_of_range("BiSeries: exponent outside truncation box");
    }
    grow(n + 1, m + 1);
    d_[n * c_ + m] += v;
}

std::map<Exponent, Rational> BiSeries::terms() const
{
    std::map<Exponent, Rational> t;
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) {
            const Rational &v = d_[i * c_ + j];
            if (v != 0) {
                t.emplace(Exponent{i, j}, v);
            }
        }
    }
    return t;
}

bool BiSeries::is_zero() const
{
    return std::all_of(d_.begin(), d_.end(), [](const Rational &v) { return v == 0; });
}

BiSeries BiSeries::truncate(int K1, int K2) const
{
    BiSeries r(std::min(K1, o1_), std::min(K2, o2_));
    int R = limit(r.o1_, r_);
    int C = limit(r.o2_, c_);
    r.grow(R, C);
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < C; ++j) {
            r.d_[i * C + j] = d_[i * c_ + j];
        }
    }
    return r;
}

BiSeries BiSeries::operator-() const
{
    BiSeries r = *this;
    for (auto &v : r.d_) {
        v = -v;
    }
    return r;
}

BiSeries &BiSeries::operator+=(const BiSeries &o)
{
    BiSeries r(std::min(o1_, o.o1_), std::min(o2_, o.o2_));
    int R = limit(r.o1_, std::max(r_, o.r_));
    int C = limit(r.o2_, std::max(c_, o.c_));
    r.grow(R, C);
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < C; ++j) {
            r.d_[i * C + j] = at(i, j) + o.at(i, j);
        }
    }
    *this = std::move(r);
    return *this;
}

BiSeries &BiSeries::operator-=(const BiSeries &o)
{
    return *this += -o;
}

BiSeries &BiSeries::operator*=(const Rational &s)
{
    for (auto &v : d_) {
        v *= s;
    }
    return *this;
}

BiSeries operator*(const BiSeries &a, const BiSeries &b)
{
    BiSeries r(std::min(a.o1_, b.o1_), std::min(a.o2_, b.o2_));
    if (a.r_ == 0 || b.r_ == 0 || a.c_ == 0 || b.c_ == 0) {
        return r;
    }
    int R = limit(r.o1_, a.r_ + b.r_ - 1);
    int C = limit(r.o2_, a.c_ + b.c_ - 1);
    r.grow(R, C);
    Rational t;
    for (int i = 0; i < a.r_ && i < R; ++i) {
        for (int j = 0; j < a.c_ && j < C; ++j) {
            const Rational &x = a.d_[i * a.c_ + j];
            if (x == 0) {
                continue;
            }
            for (int k = 0; k < b.r_ && i + k < R; ++k) {
                for (int l = 0; l < b.c_ && j + l < C; ++l) {
                    const Rational &y = b.d_[k * b.c_ + l];
                    if (y == 0) {
                        continue;
                    }
                    mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
                    r.d_[(i + k) * C + (j + l)] += t;
                }
            }
        }
    }
    return r;
}

BiSeries inv(const BiSeries &a)
{
    require_bounded(a, "BiSeries inverse");
    if (a.at(0, 0) == 0) {
        throw std::domain_error("BiSeries inverse: zero constant term");
    }
    const int R = a.order1() + 1;
    const int C = a.order2() + 1;
    BiSeries w(a.order1(), a.order2());
    const Rational c = 1 / a.at(0, 0);
    std::vector<Rational> v(static_cast<std::size_t>(R) * C);
    for (int n = 0; n < R; ++n) {
        for (int m = 0; m < C; ++m) {
            if (n == 0 && m == 0) {
                v[0] = c;
                continue;
            }
            Rational s = 0;
            for (int i = 0; i <= n && i < a.rows(); ++i) {
                for (int j = 0; j <= m && j < a.cols(); ++j) {
                    if ((i == 0 && j == 0) || a.at(i, j) == 0) {
                        continue;
                    }
                    s += a.at(i, j) * v[(n - i) * C + (m - j)];
                }
            }
            v[n * C + m] = -s * c;
        }
    }
    for (int n = 0; n < R; ++n) {
        for (int m = 0; m < C; ++m) {
            w.set(n, m, v[n * C + m]);
        }
    }
    return w;
}

BiSeries operator/(const BiSeries &a, const BiSeries &b)
{
    return a * inv(b);
}

BiSeries pow(const BiSeries &a, long n)
{
    if (n < 0) {
        return pow(inv(a), -n);
    }
    BiSeries result = BiSeries::constant(1, a.order1(), a.order2());
    BiSeries base = a;
    while (n > 0) {
        if (n & 1) {
            result = result * base;
        }
        n >>= 1;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

BiSeries exp(const BiSeries &a)
{
    require_bounded(a, "BiSeries exp");
    if (a.at(0, 0) != 0) {
        throw std::domain_error("BiSeries exp: constant term must be zero");
    }
    const int R = a.order1() + 1;
    const int C = a.order2() + 1;
    std::vector<Rational> b(static_cast<std::size_t>(R) * C);
    b[0] = 1;
    for (int n = 0; n < R; ++n) {
        for (int m = 0; m < C; ++m) {
            if (n == 0 && m == 0) {
                continue;
            }
            // n b_{n,m} = sum i a_{i,j} b_{n-i,m-j}  (theta_1 b = b theta_1 a), theta_2 when n = 0
            Rational s = 0;
            if (n > 0) {
                for (int i = 1; i <= n && i < a.rows(); ++i) {
                    for (int j = 0; j <= m && j < a.cols(); ++j) {
                        if (a.at(i, j) != 0) {
                            s += i * a.at(i, j) * b[(n - i) * C + (m - j)];
                        }
                    }
                }
                b[n * C + m] = s / n;
            } else {
                for (int j = 1; j <= m && j < a.cols(); ++j) {
                    if (a.at(0, j) != 0) {
                        s += j * a.at(0, j) * b[m - j];
                    }
                }
                b[m] = s / m;
            }
        }
    }
    BiSeries r(a.order1(), a.order2());
    for (int n = 0; n < R; ++n) {
        for (int m = 0; m < C; ++m) {
            r.set(n, m, b[n * C + m]);
        }
    }
    return r;
}

BiSeries log(const BiSeries &a)
{
    require_bounded(a, "BiSeries log");
    if (a.at(0, 0) != 1) {
        throw std::domain_error("BiSeries log: constant term must be 1");
    }
    BiSeries ainv = inv(a);
    BiSeries d1 = theta(a, 1) * ainv;
    BiSeries d2 = theta(a, 2) * ainv;
    BiSeries r(a.order1(), a.order2());
    for (int n = 0; n <= a.order1(); ++n) {
        for (int m = 0; m <= a.order2(); ++m) {
            if (n > 0) {
                r.set(n, m, d1.at(n, m) / n);
            } else if (m > 0) {
                r.set(n, m, d2.at(n, m) / m);
            }
        }
    }
    return r;
}

BiSeries nth_root(const BiSeries &a, long n)
{
    require_bounded(a, "BiSeries nth_root");
    if (n <= 0) {
        throw std::invalid_argument("nth_root: exponent must be positive");
    }
    if (a.at(0, 0) != 1) {
        throw std::domain_error("nth_root: constant term must be 1");
    }
    const Rational inv_n(1, n);
    BiSeries y = BiSeries::constant(1, a.order1(), a.order2());
    // each Newton step doubles the total degree through which y is exact
    const int total = a.order1() + a.order2();
    for (int exact_deg = 0; exact_deg <= total; exact_deg = 2 * exact_deg + 1) {
        y = y + (a * pow(y, 1 - n) - y) * inv_n;
    }
    return y;
}

BiSeries theta(const BiSeries &a, int var)
{
    if (var != 1 && var != 2) {
        throw std::invalid_argument("theta: variable must be 1 or 2");
    }
    BiSeries r = a;
    for (const auto &[e, v] : a.terms()) {
        r.set(e.first, e.second, v * (var == 1 ? e.first : e.second));
    }
    return r;
}

BiSeries substitute(const BiSeries &outer, const BiSeries &inner1, const BiSeries &inner2)
{
    if (inner1.at(0, 0) != 0 || inner2.at(0, 0) != 0) {
        throw std::domain_error("substitute: inner series must have zero constant term");
    }
    for (int m = 0; m < inner1.cols(); ++m) {
        if (inner1.at(0, m) != 0) {
            throw std::domain_error("substitute: first inner series must be divisible by its first variable");
        }
    }
    for (int n = 0; n < inner2.rows(); ++n) {
        if (inner2.at(n, 0) != 0) {
            throw std::domain_error("substitute: second inner series must be divisible by its second variable");
        }
    }
    const int K1 = std::min({outer.order1(), inner1.order1(), inner2.order1()});
    const int K2 = std::min({outer.order2(), inner1.order2(), inner2.order2()});
    const int N = limit(K1, outer.rows());
    const int M = limit(K2, outer.cols());
    BiSeries one = BiSeries::constant(1, K1, K2);
    BiSeries i1 = inner1.truncate(K1, K2);
    BiSeries i2 = inner2.truncate(K1, K2);
    std::vector<BiSeries> p2{one};
    for (int m = 1; m < M; ++m) {
        p2.push_back(p2.back() * i2);
    }
    BiSeries result(K1, K2);
    BiSeries p1 = one;
    for (int n = 0; n < N; ++n) {
        if (n > 0) {
            p1 = p1 * i1;
        }
        BiSeries inner_sum(K1, K2);
        bool any = false;
        for (int m = 0; m < M; ++m) {
            const Rational &c = outer.at(n, m);
            if (c != 0) {
                inner_sum += p2[m] * c;
                any = true;
            }
        }
        if (any) {
            result += p1 * inner_sum;
        }
    }
    return result;
}

BiSeries divide_monomial(const BiSeries &a, int i, int j)
{
    if (i < 0 || j < 0) {
        throw std::invalid_argument("divide_monomial: negative exponent");
    }
    for (const auto &[e, v] : a.terms()) {
        if (e.first < i || e.second < j) {
            throw std::domain_error("divide_monomial: series not divisible by the monomial");
        }
    }
    auto sub = [](int o, int k) { return o == kExact ? kExact : o - k; };
    int K1 = sub(a.order1(), i);
    int K2 = sub(a.order2(), j);
    if (K1 < 0 || K2 < 0) {
        throw std::domain_error("divide_monomial: no known coefficients remain");
    }
    BiSeries r(K1, K2);
    for (const auto &[e, v] : a.terms()) {
        r.set(e.first - i, e.second - j, v);
    }
    return r;
}

BiSeries lift(const QSeries &f, int a, int b, int K)
{
    if (a < 0 || b < 0 || (a == 0 && b == 0)) {
        throw std::invalid_argument("lift: monomial exponents must be non-negative and not both zero");
    }
    if (f.valuation() < 0) {
        throw std::domain_error("lift: series has a principal part");
    }
    int K1 = a > 0 ? std::min(K, (f.qmax() + 1) * a - 1) : K;
    int K2 = b > 0 ? std::min(K, (f.qmax() + 1) * b - 1) : K;
    BiSeries r(K1, K2);
    for (int k = 0; k <= f.qmax() && a * k <= K1 && b * k <= K2; ++k) {
        r.set(a * k, b * k, f.coeff(k));
    }
    return r;
}

QSeries restrict_z2_zero(const BiSeries &a)
{
    require_bounded(a, "restrict_z2_zero");
    std::vector<Rational> v(a.order1() + 1);
    for (int n = 0; n <= a.order1(); ++n) {
        v[n] = a.at(n, 0);
    }
    return QSeries(0, std::move(v));
}

std::optional<Mismatch> first_mismatch(const BiSeries &a, const BiSeries &b, int K1, int K2)
{
    int L1 = std::min({K1, a.order1(), b.order1()});
    int L2 = std::min({K2, a.order2(), b.order2()});
    int R = limit(L1, std::max(a.rows(), b.rows()));
    int C = limit(L2, std::max(a.cols(), b.cols()));
    for (int n = 0; n < R; ++n) {
        for (int m = 0; m < C; ++m) {
            if (a.at(n, m) != b.at(n, m)) {
                return Mismatch{{n, m}, a.at(n, m), b.at(n, m)};
            }
        }
    }
    return std::nullopt;
}

bool equal_to_order(const BiSeries &a, const BiSeries &b, int K1, int K2)
{
    return !first_mismatch(a, b, K1, K2).has_value();
}

} // namespace k3gm
