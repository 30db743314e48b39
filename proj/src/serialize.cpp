#include "k3gm/serialize.hpp"

#include <sstream>

namespace k3gm {

namespace {

std::string key(const Exponent &e)
{
    return std::to_string(e.first) + "," + std::to_string(e.second);
}

Json terms_json(const std::map<Exponent, Rational> &terms)
{
    Json j = Json::object();
    for (const auto &[e, v] : terms) {
        if (v != 0) {
            j[key(e)] = to_string(v);
        }
    }
    return j;
}

template <class M>
Json matrix_json(const M &m)
{
    Json rows = Json::array();
    for (const auto &row : m) {
        Json r = Json::array();
        for (const auto &x : row) {
            r.push_back(to_json(x));
        }
        rows.push_back(r);
    }
    return rows;
}

} // namespace

Json to_json(const BiSeries &s)
{
    return terms_json(s.terms());
}

Json to_json(const BiPolynomial &p)
{
    return terms_json(p.terms());
}

Json to_json(const BiRationalFunction &f)
{
    return Json{{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}};
}

Json to_json(const RFMatrix &m)
{
    return matrix_json(m);
}

Json to_json(const SeriesMatrix &m)
{
    return matrix_json(m);
}

Json to_json(const ConstMatrix &m)
{
    Json rows = Json::array();
    for (const auto &row : m) {
        Json r = Json::array();
        for (const auto &x : row) {
            r.push_back(to_string(x));
        }
        rows.push_back(r);
    }
    return rows;
}

Json form_json(int level, const std::string &form, const QSeries &f)
{
    Json coeffs = Json::array();
    for (const auto &c : f.coeffs()) {
        coeffs.push_back(to_string(c));
    }
    return Json{{"level", level}, {"form", form}, {"qmax", f.qmax()}, {"coeffs", coeffs}, {"pole_order", f.pole_order()}};
}

Json to_json(const Check &c)
{
    Json j{{"name", c.name}, {"status", to_string(c.status)}, {"max_order_checked", c.max_order_checked}};
    if (c.convention) {
        j["convention"] = *c.convention;
    }
    if (c.first_discrepancy) {
        j["first_discrepancy"] = {{"monomial", c.first_discrepancy->monomial},
                                  {"lhs", c.first_discrepancy->lhs},
                                  {"rhs", c.first_discrepancy->rhs}};
    }
    if (c.note) {
        j["note"] = *c.note;
    }
    return j;
}

Json to_json(const VerificationReport &r)
{
    Json checks = Json::array();
    for (const auto &c : r.checks) {
        checks.push_back(to_json(c));
    }
    return Json{{"model", r.model}, {"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
}

Json to_json(const std::vector<VerificationReport> &rs)
{
    Json reports = Json::array();
    bool ok = true;
    for (const auto &r : rs) {
        reports.push_back(to_json(r));
        ok = ok && r.passed();
    }
    return Json{{"passed", ok}, {"reports", reports}};
}

std::string to_text(const VerificationReport &r)
{
    std::ostringstream os;
    os << r.model << " " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto &c : r.checks) {
        os << "  [" << to_string(c.status) << "] " << c.name;
        if (c.max_order_checked >= 0) {
            os << " (order " << c.max_order_checked << ")";
        }
        if (c.convention) {
            os << " {convention: " << *c.convention << "}";
        }
        os << "\n";
        if (c.first_discrepancy) {
            os << "      at " << c.first_discrepancy->monomial << ": " << c.first_discrepancy->lhs << " != "
               << c.first_discrepancy->rhs << "\n";
        }
        if (c.note) {
            os << "      note: " << *c.note << "\n";
        }
    }
    return os.str();
}

std::string to_text(const std::vector<VerificationReport> &rs)
{
    std::string s;
    for (const auto &r : rs) {
        s += to_text(r);
    }
    return s;
}

} // namespace k3gm
