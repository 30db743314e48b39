#pragma once

#include "k3gm/biseries.hpp"
#include "k3gm/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace k3gm {

// Exact polynomial in z1, z2; only nonzero terms are stored.
class BiPolynomial {
public:
    BiPolynomial() = default;
    BiPolynomial(const Rational &c);
    BiPolynomial(int c) : BiPolynomial(Rational(c)) {}
    explicit BiPolynomial(std::map<Exponent, Rational> terms);

    static BiPolynomial z1() { return monomial(1, 0); }
    static BiPolynomial z2() { return monomial(0, 1); }
    static BiPolynomial monomial(int n, int m, const Rational &c = 1);

    const std::map<Exponent, Rational> &terms() const { return t_; }
    Rational coeff(int n, int m) const;
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Rational constant_term() const { return coeff(0, 0); }
    // Leading term in lexicographic order (z1 first).
    std::pair<Exponent, Rational> leading() const;
    int degree(int var) const;

    BiPolynomial operator-() const;
    BiPolynomial &operator+=(const BiPolynomial &o);
    BiPolynomial &operator-=(const BiPolynomial &o);
    BiPolynomial &operator*=(const Rational &s);

    friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial &b) { return a += b; }
    friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial &b) { return a -= b; }
    friend BiPolynomial operator*(BiPolynomial a, const Rational &s) { return a *= s; }
    friend BiPolynomial operator*(const Rational &s, BiPolynomial a) { return a *= s; }
    friend BiPolynomial operator*(const BiPolynomial &a, const BiPolynomial &b);
    friend bool operator==(const BiPolynomial &a, const BiPolynomial &b) { return a.t_ == b.t_; }
    friend bool operator!=(const BiPolynomial &a, const BiPolynomial &b) { return !(a == b); }
    friend bool operator<(const BiPolynomial &a, const BiPolynomial &b) { return a.t_ < b.t_; }

    BiSeries to_series(int K1, int K2) const;

private:
    std::map<Exponent, Rational> t_;
};

BiPolynomial pow(const BiPolynomial &a, unsigned n);
BiPolynomial theta(const BiPolynomial &a, int var);
// Quotient if b divides a exactly, nullopt otherwise.
std::optional<BiPolynomial> divide_exact(const BiPolynomial &a, const BiPolynomial &b);
// Substitutes z2 = 0.
BiPolynomial at_z2_zero(const BiPolynomial &a);
// Human-readable form such as "1 - 27*z1 + 3/2*z1^2*z2".
std::string to_string(const BiPolynomial &a);

// Ratio of polynomials. The denominator is held as a product of non-constant factors
// with multiplicities; numerators are only cancelled against a factor when exact
// division succeeds, so no gcd computation is ever needed.
class BiRationalFunction {
public:
    using Factor = std::pair<BiPolynomial, int>;

    BiRationalFunction() = default;
    BiRationalFunction(const Rational &c) : num_(c) {}
    BiRationalFunction(int c) : num_(c) {}
    BiRationalFunction(BiPolynomial p) : num_(std::move(p)) {}

    static BiRationalFunction ratio(const BiPolynomial &num, const BiPolynomial &den);

    const BiPolynomial &numerator() const { return num_; }
    const std::vector<Factor> &denominator_factors() const { return den_; }
    BiPolynomial denominator() const;
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    BiRationalFunction operator-() const;
    BiRationalFunction &operator+=(const BiRationalFunction &o);
    BiRationalFunction &operator-=(const BiRationalFunction &o);
    BiRationalFunction &operator*=(const BiRationalFunction &o);
    BiRationalFunction &operator/=(const BiRationalFunction &o);

    friend BiRationalFunction operator+(BiRationalFunction a, const BiRationalFunction &b) { return a += b; }
    friend BiRationalFunction operator-(BiRationalFunction a, const BiRationalFunction &b) { return a -= b; }
    friend BiRationalFunction operator*(BiRationalFunction a, const BiRationalFunction &b) { return a *= b; }
    friend BiRationalFunction operator/(BiRationalFunction a, const BiRationalFunction &b) { return a /= b; }

    // Requires every denominator factor to have a nonzero constant term.
    BiSeries to_series(int K1, int K2) const;
    BiSeries to_series(int K) const { return to_series(K, K); }

    friend BiRationalFunction theta(const BiRationalFunction &a, int var);

private:
    void add_factor(BiPolynomial f, int e);
    void cancel();

    BiPolynomial num_;
    std::vector<Factor> den_;
};

// p/q == r/s iff p*s - r*q vanishes identically.
bool rf_equal(const BiRationalFunction &a, const BiRationalFunction &b);
std::string to_string(const BiRationalFunction &a);

} // namespace k3gm
