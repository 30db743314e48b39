#pragma once

#include "k3gm/bipoly.hpp"
#include "k3gm/rational.hpp"

#include <string>
#include <vector>

namespace k3gm {

enum class Model { E6, E7, E8 };

struct ModelParams {
    Model label = Model::E6;
    std::string name;
    int d = 0;
    int w1 = 0;
    int w2 = 0;
    Rational mu;
    Rational nu;
    int N = 0;
    int r = 0;
    int d_N = 0;
    int C_HH = 0;
    int C_HL = 0;
    int C_LL = 0;
    Rational c;

    // Intersection matrix of the two algebraic classes, index 1..2 stored at 0..1.
    int C(int a, int b) const;
    BiPolynomial delta1() const;
    BiPolynomial delta2() const;
    BiPolynomial disc() const;
};

ModelParams model_params(Model m);
// Accepts "e6", "E6", ...
Model parse_model(const std::string &s);
std::string model_name(Model m);
std::vector<Model> all_models();

} // namespace k3gm
