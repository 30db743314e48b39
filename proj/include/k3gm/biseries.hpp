#pragma once

#include "k3gm/qseries.hpp"
#include "k3gm/rational.hpp"

#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace k3gm {

// Truncation bound meaning "no truncation in this variable": the series is a polynomial there.
inline constexpr int kExact = std::numeric_limits<int>::max();

using Exponent = std::pair<int, int>;

struct Mismatch {
    Exponent monomial;
    Rational lhs;
    Rational rhs;
};

// Truncated power series in two variables; coefficients of z1^n z2^m are known for n <= order1, m <= order2.
class BiSeries {
public:
    BiSeries() = default;
    explicit BiSeries(int K) : BiSeries(K, K) {}
    BiSeries(int K1, int K2);

    static BiSeries constant(const Rational &c, int K1 = kExact, int K2 = kExact);
    static BiSeries monomial(int n, int m, const Rational &c, int K1 = kExact, int K2 = kExact);
    static BiSeries from_terms(const std::map<Exponent, Rational> &terms, int K1, int K2);

    int order1() const { return o1_; }
    int order2() const { return o2_; }
    int order() const { return std::min(o1_, o2_); }
    bool bounded() const { return o1_ != kExact && o2_ != kExact; }

    // Number of stored rows (z1 degrees) and columns (z2 degrees).
    int rows() const { return r_; }
    int cols() const { return c_; }

    Rational coeff(int n, int m) const;
    // Storage access without order checks; out-of-storage reads give 0.
    const Rational &at(int n, int m) const;
    void set(int n, int m, const Rational &v);
    void add_to(int n, int m, const Rational &v);

    std::map<Exponent, Rational> terms() const;
    bool is_zero() const;

    BiSeries truncate(int K1, int K2) const;
    BiSeries truncate(int K) const { return truncate(K, K); }

    BiSeries operator-() const;
    BiSeries &operator+=(const BiSeries &o);
    BiSeries &operator-=(const BiSeries &o);
    BiSeries &operator*=(const Rational &s);

    friend BiSeries operator+(BiSeries a, const BiSeries &b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries &b) { return a -= b; }
    friend BiSeries operator*(BiSeries a, const Rational &s) { return a *= s; }
    friend BiSeries operator*(const Rational &s, BiSeries a) { return a *= s; }
    friend BiSeries operator*(const BiSeries &a, const BiSeries &b);

private:
    void grow(int rows, int cols);

    int o1_ = kExact;
    int o2_ = kExact;
    int r_ = 0;
    int c_ = 0;
    std::vector<Rational> d_;
};

BiSeries inv(const BiSeries &a);
BiSeries operator/(const BiSeries &a, const BiSeries &b);
BiSeries pow(const BiSeries &a, long n);
BiSeries exp(const BiSeries &a);
BiSeries log(const BiSeries &a);
BiSeries nth_root(const BiSeries &a, long n);
// theta_var = z_var d/dz_var
BiSeries theta(const BiSeries &a, int var);
// outer(inner1, inner2); each inner_a must be divisible by its own variable.
BiSeries substitute(const BiSeries &outer, const BiSeries &inner1, const BiSeries &inner2);
// a / (z1^i z2^j); a must be divisible by the monomial.
BiSeries divide_monomial(const BiSeries &a, int i, int j);
// f(z1^a z2^b) truncated at (K,K); requires f without principal part.
BiSeries lift(const QSeries &f, int a, int b, int K);
// Value at z2 = 0 as a univariate series in z1.
QSeries restrict_z2_zero(const BiSeries &a);

// First coefficient (lexicographic) where a and b differ, comparing n <= K1, m <= K2
// (further capped by both operands' orders).
std::optional<Mismatch> first_mismatch(const BiSeries &a, const BiSeries &b, int K1 = kExact, int K2 = kExact);
bool equal_to_order(const BiSeries &a, const BiSeries &b, int K1 = kExact, int K2 = kExact);

} // namespace k3gm
