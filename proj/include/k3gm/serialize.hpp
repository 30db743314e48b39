#pragma once

#include "k3gm/connection.hpp"
#include "k3gm/lie.hpp"
#include "k3gm/moduli.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace k3gm {

using Json = nlohmann::ordered_json;

// {"n,m": "p/q"} over nonzero coefficients, in lexicographic exponent order.
Json to_json(const BiSeries &s);
Json to_json(const BiPolynomial &p);
Json to_json(const BiRationalFunction &f);
Json to_json(const RFMatrix &m);
Json to_json(const SeriesMatrix &m);
Json to_json(const ConstMatrix &m);
Json form_json(int level, const std::string &form, const QSeries &f);
Json to_json(const Check &c);
Json to_json(const VerificationReport &r);
Json to_json(const std::vector<VerificationReport> &rs);

std::string to_text(const VerificationReport &r);
std::string to_text(const std::vector<VerificationReport> &rs);

} // namespace k3gm
