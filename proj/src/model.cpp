#include "k3gm/model.hpp"

#include <cctype>
#include <stdexcept>

namespace k3gm {

namespace {

Rational rpow(const Rational &b, int e)
{
    Rational r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
    }
    return r;
}

Rational frac(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

void require(bool ok, const std::string &what)
{
    if (!ok) {
        throw std::logic_error("model constants inconsistent: " + what);
    }
}

} // namespace

int ModelParams::C(int a, int b) const
{
    if (a == 1 && b == 1) {
        return C_HH;
    }
    if ((a == 1 && b == 2) || (a == 2 && b == 1)) {
        return C_HL;
    }
    if (a == 2 && b == 2) {
        return C_LL;
    }
    throw std::out_of_range("intersection index must be 1 or 2");
}

BiPolynomial ModelParams::delta1() const
{
    return BiPolynomial(1) - BiPolynomial::monomial(1, 0, mu * nu * nu);
}

BiPolynomial ModelParams::delta2() const
{
    return BiPolynomial(1) - BiPolynomial::monomial(0, 1, 4);
}

BiPolynomial ModelParams::disc() const
{
    BiPolynomial d1 = delta1();
    BiPolynomial d1m = d1 - BiPolynomial(1);
    return d1 * d1 + (delta2() - BiPolynomial(1)) * d1m * d1m;
}

ModelParams model_params(Model m)
{
    ModelParams p;
    p.label = m;
    p.name = model_name(m);
    switch (m) {
    case Model::E6:
        p.d = 6, p.w1 = 2, p.w2 = 2, p.N = 3;
        break;
    case Model::E7:
        p.d = 8, p.w1 = 4, p.w2 = 2, p.N = 2;
        break;
    case Model::E8:
        p.d = 12, p.w1 = 6, p.w2 = 4, p.N = 1;
        break;
    }
    require(p.w1 % 2 == 0 && p.w2 % 2 == 0 && p.d % 2 == 0, "weights and degree must be even");
    require(p.d % p.w1 == 0 && p.d % p.w2 == 0, "weights must divide the degree");
    p.nu = frac(p.d, 2);
    p.mu = frac(2 * p.d, p.w1 * p.w2) * rpow(Rational(p.d / p.w1), p.w1 / 2 - 1) *
           rpow(Rational(p.d / p.w2), p.w2 / 2 - 1);
    p.r = p.N == 1 ? 6 : (p.N == 2 ? 4 : 3);
    p.d_N = p.N == 1 ? 432 : (p.N == 2 ? 64 : 27);
    require(p.mu * p.nu * p.nu == p.d_N, "mu nu^2 = d_N");
    require((4 * p.d) % (p.w1 * p.w2) == 0 && (2 * p.d) % (p.w1 * p.w2) == 0, "integral intersection numbers");
    p.C_HH = 4 * p.d / (p.w1 * p.w2);
    p.C_HL = 2 * p.d / (p.w1 * p.w2);
    p.C_LL = 0;
    require(p.C_HH == 2 * p.C_HL, "C_HH = 2 C_HL");
    p.c = p.C_HL;
    return p;
}

Model parse_model(const std::string &s)
{
    std::string t;
    for (char ch : s) {
        t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    if (t == "e6") {
        return Model::E6;
    }
    if (t == "e7") {
        return Model::E7;
    }
    if (t == "e8") {
        return Model::E8;
    }
    throw std::invalid_argument("unknown model '" + s + "' (expected e6, e7 or e8)");
}

std::string model_name(Model m)
{
    switch (m) {
    case Model::E6:
        return "E6";
    case Model::E7:
        return "E7";
    case Model::E8:
        return "E8";
    }
    return "?";
}

std::vector<Model> all_models()
{
    return {Model::E6, Model::E7, Model::E8};
}

} // namespace k3gm
