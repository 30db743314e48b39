#include "k3gm/emit.hpp"

#include "k3gm/connection.hpp"
#include "k3gm/modular.hpp"
#include "k3gm/moduli.hpp"
#include "k3gm/pairing.hpp"
#include "k3gm/periods.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3gm {

namespace {

void require_order(int K)
{
    if (K < 0) {
        throw std::invalid_argument("order K must be non-negative");
    }
}

// The Frobenius solve needs K >= 2; lower orders are truncated from it.
PeriodSystem periods_at(const ModelParams &p, int K)
{
    PeriodSystem ps = frobenius_log_periods(p, std::max(K, 2));
    if (K < 2) {
        ps.X0 = ps.X0.truncate(K);
        ps.Shat1 = ps.Shat1.truncate(K);
        ps.Shat2 = ps.Shat2.truncate(K);
        ps.K = K;
    }
    return ps;
}

bool is_series(const Json &j)
{
    if (!j.is_object()) {
        return false;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key().find(',') == std::string::npos || !it.value().is_string()) {
            return false;
        }
    }
    return true;
}

std::string series_text(const Json &j, char var)
{
    if (j.empty()) {
        return "0";
    }
    std::string out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = it.key();
        const int n = std::stoi(key.substr(0, key.find(',')));
        const int m = std::stoi(key.substr(key.find(',') + 1));
        std::string c = it.value().get<std::string>();
        const bool neg = c[0] == '-';
        if (neg) {
            c.erase(0, 1);
        }
        std::string mono;
        for (auto [e, v] : {std::pair{n, '1'}, std::pair{m, '2'}}) {
            if (e == 0) {
                continue;
            }
            mono += (mono.empty() ? "" : "*") + std::string(1, var) + v + (e > 1 ? "^" + std::to_string(e) : "");
        }
        std::string term = mono.empty() ? c : (c == "1" ? mono : c + "*" + mono);
        out += out.empty() ? (neg ? "-" + term : term) : (neg ? " - " : " + ") + term;
    }
    return out;
}

std::string value_text(const Json &v, char var)
{
    if (is_series(v)) {
        return series_text(v, var);
    }
    if (v.is_object() && v.contains("num") && v.contains("den")) {
        return "(" + series_text(v["num"], var) + ")/(" + series_text(v["den"], var) + ")";
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

} // namespace

Json emit_periods(Model m, int K, const std::string &which)
{
    require_order(K);
    ModelParams p = model_params(m);
    PeriodSystem ps = periods_at(p, K);
    if (which == "X0") {
        return to_json(ps.X0);
    }
    if (which == "Shat1") {
        return to_json(ps.Shat1);
    }
    if (which == "Shat2") {
        return to_json(ps.Shat2);
    }
    if (which != "all") {
        throw std::invalid_argument("unknown period selector: " + which + " (X0, Shat1, Shat2, all)");
    }
    return Json{{"model", p.name},
                {"K", K},
                {"X0", to_json(ps.X0)},
                {"Shat1", to_json(ps.Shat1)},
                {"Shat2", to_json(ps.Shat2)}};
}

Json emit_mirror_map(Model m, int K)
{
    require_order(K);
    ModelParams p = model_params(m);
    // q_a/z_a loses one order in z_a
    MirrorMap mm = mirror_map(frobenius_log_periods(p, std::max(K + 1, 2)));
    Json q_of_z = Json::array(), q_over_z = Json::array(), z_of_q = Json::array();
    for (int a = 0; a < 2; ++a) {
        q_of_z.push_back(to_json(mm.q_of_z[a].truncate(K)));
        q_over_z.push_back(to_json(divide_monomial(mm.q_of_z[a], a == 0, a == 1).truncate(K)));
        z_of_q.push_back(to_json(mm.z_of_q[a].truncate(K)));
    }
    return Json{{"model", p.name}, {"K", K}, {"q_of_z", q_of_z}, {"q_over_z", q_over_z}, {"z_of_q", z_of_q}};
}

Json emit_form(int level, const std::string &form, int qmax)
{
    if (level < 1 || level > 3) {
        throw std::invalid_argument("level must be 1, 2 or 3");
    }
    if (qmax < 1) {
        throw std::invalid_argument("forms need qorder >= 1");
    }
    if (form == "C") {
        throw std::invalid_argument("C carries a fractional power of q; use Cr for C^r");
    }
    FormSet f = build_forms(level, qmax);
    if (form == "A") {
        return form_json(level, form, f.A);
    }
    if (form == "B") {
        return form_json(level, form, f.B);
    }
    if (form == "Cr") {
        return form_json(level, form, f.Cr);
    }
    if (form == "E") {
        return form_json(level, form, f.E);
    }
    if (form == "j") {
        return form_json(level, form, hauptmodul_j(f));
    }
    if (form == "alpha") {
        return form_json(level, form, alpha_series(f));
    }
    throw std::invalid_argument("unknown form: " + form + " (A, B, Cr, E, j, alpha)");
}

Json emit_connection(Model m, const std::string &source)
{
    ModelParams p = model_params(m);
    ConnectionPair c;
    if (source == "printed") {
        c = gm_matrices(p);
    } else if (source == "picard-fuchs") {
        c = derived_connection(p);
    } else {
        throw std::invalid_argument("unknown source: " + source + " (printed, picard-fuchs)");
    }
    return Json{{"model", p.name},         {"source", to_string(c.source)}, {"Delta1", to_json(c.Delta1)},
                {"Delta2", to_json(c.Delta2)}, {"Disc", to_json(c.Disc)},       {"G1", to_json(c.G1)},
                {"G2", to_json(c.G2)}};
}

Json emit_pairing(Model m, const std::string &source)
{
    ModelParams p = model_params(m);
    PairingData pd;
    if (source == "printed") {
        pd = yukawa(p);
    } else if (source == "derived") {
        pd = derived_pairing(p, derived_connection(p));
    } else {
        throw std::invalid_argument("unknown source: " + source + " (printed, derived)");
    }
    return Json{{"model", p.name},        {"source", to_string(pd.source)}, {"Y11", to_json(pd.Y11)},
                {"Y12", to_json(pd.Y12)}, {"Y22", to_json(pd.Y22)},         {"Y44", to_json(pd.Y44)},
                {"Q", to_json(pd.Q)}};
}

Json emit_frame(Model m, int K)
{
    if (K < 2) {
        throw std::invalid_argument("order K must be at least 2");
    }
    ModelParams p = model_params(m);
    PeriodSystem ps = frobenius_log_periods(p, K);
    MirrorMap mm = mirror_map(ps);
    FrameMatrix fm = build_frame(p, ps, mm, derived_pairing(p, derived_connection(p)));
    return Json{{"model", p.name}, {"K", K}, {"S", to_json(fm.S)}};
}

Json emit_expansion(const std::string &kind, const std::string &selector, Model m, int level, int K, int qmax)
{
    if (kind == "form") {
        return emit_form(level == 0 ? model_params(m).N : level, selector.empty() ? "A" : selector, qmax);
    }
    if (kind == "period") {
        return emit_periods(m, K, selector.empty() ? "all" : selector);
    }
    if (kind == "mirror-map") {
        return emit_mirror_map(m, K);
    }
    throw std::invalid_argument("unknown expansion kind: " + kind + " (form, period, mirror-map)");
}

std::string expansion_text(const Json &j)
{
    if (is_series(j)) {
        return series_text(j, 'z') + "\n";
    }
    if (j.contains("coeffs")) {
        std::string out = "level " + j["level"].dump() + " " + j["form"].get<std::string>() + ", q^" +
                          std::to_string(-j["pole_order"].get<int>()) + " .. q^" + j["qmax"].dump() + ":";
        for (const auto &c : j["coeffs"]) {
            out += " " + c.get<std::string>();
        }
        return out + "\n";
    }
    std::string out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string &key = it.key();
        const Json &v = it.value();
        const char var = key == "z_of_q" || key == "S" ? 'q' : 'z';
        if (v.is_array() && !v.empty() && v[0].is_array()) {
            for (size_t r = 0; r < v.size(); ++r) {
                for (size_t c = 0; c < v[r].size(); ++c) {
                    out += key + "[" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "] = " +
                           value_text(v[r][c], var) + "\n";
                }
            }
        } else if (v.is_array()) {
            for (size_t r = 0; r < v.size(); ++r) {
                out += key + "[" + std::to_string(r + 1) + "] = " + value_text(v[r], var) + "\n";
            }
        } else {
            out += key + " = " + value_text(v, var) + "\n";
        }
    }
    return out;
}

} // namespace k3gm
