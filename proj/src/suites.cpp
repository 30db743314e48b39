#include "k3gm/suites.hpp"

#include "k3gm/lie.hpp"
#include "k3gm/moduli.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace k3gm {

namespace {

// Lazily computed objects shared by the suites of one model.
class Context {
public:
    Context(Model m, int K, int qmax) : p_(model_params(m)), K_(K), qmax_(qmax) {}

    const ModelParams &params() const { return p_; }
    int K() const { return K_; }

    const PeriodSystem &periods()
    {
        if (!ps_) {
            ps_ = frobenius_log_periods(p_, K_);
        }
        return *ps_;
    }
    // q-side identities divide by q1^2, so they run two orders deeper than they report
    const PeriodSystem &deep_periods()
    {
        if (!deep_) {
            deep_ = frobenius_log_periods(p_, K_ + 2);
        }
        return *deep_;
    }
    const MirrorMap &mirror()
    {
        if (!mm_) {
            mm_ = mirror_map(deep_periods());
        }
        return *mm_;
    }
    const FormSet &forms()
    {
        if (!forms_) {
            forms_ = build_forms(p_.N, std::max(qmax_, K_ + 3));
        }
        return *forms_;
    }
    const ConnectionPair &printed()
    {
        if (!printed_) {
            printed_ = gm_matrices(p_);
        }
        return *printed_;
    }
    const ConnectionPair &derived()
    {
        if (!derived_) {
            derived_ = derived_connection(p_);
        }
        return *derived_;
    }
    const PairingData &printed_pairing()
    {
        if (!ypr_) {
            ypr_ = yukawa(p_);
        }
        return *ypr_;
    }
    const PairingData &derived_pair()
    {
        if (!yder_) {
            yder_ = derived_pairing(p_, derived());
        }
        return *yder_;
    }
    const FrameMatrix &frame()
    {
        if (!frame_) {
            frame_ = build_frame(p_, deep_periods(), mirror(), derived_pair());
        }
        return *frame_;
    }

private:
    ModelParams p_;
    int K_;
    int qmax_;
    std::optional<PeriodSystem> ps_;
    std::optional<PeriodSystem> deep_;
    std::optional<MirrorMap> mm_;
    std::optional<FormSet> forms_;
    std::optional<ConnectionPair> printed_;
    std::optional<ConnectionPair> derived_;
    std::optional<PairingData> ypr_;
    std::optional<PairingData> yder_;
    std::optional<FrameMatrix> frame_;
};

void append(VerificationReport &to, VerificationReport from)
{
    for (auto &c : from.checks) {
        to.add(std::move(c));
    }
}

VerificationReport run_in(Context &ctx, const std::string &suite)
{
    const ModelParams &p = ctx.params();
    const int K = ctx.K();
    VerificationReport rep;
    if (suite == "ramanujan") {
        rep = verify_ramanujan_ring(ctx.forms());
    } else if (suite == "jfunction") {
        rep = verify_jfunction(ctx.forms());
    } else if (suite == "picard-fuchs") {
        rep = verify_picard_fuchs(p, ctx.periods());
        append(rep, verify_period_system(p, ctx.derived(), ctx.periods()));
    } else if (suite == "flatness") {
        rep = verify_flatness(p, ctx.printed());
        append(rep, verify_flatness(p, ctx.derived()));
        for (auto &c : compare_connections(ctx.printed(), ctx.derived())) {
            rep.add(std::move(c));
        }
        append(rep, verify_period_system(p, ctx.printed(), ctx.periods()));
    } else if (suite == "yukawa") {
        rep = verify_yukawa(p, ctx.printed_pairing());
        append(rep, verify_yukawa(p, ctx.derived_pair()));
    } else if (suite == "pairing") {
        rep = verify_pairing(p, ctx.derived(), ctx.printed_pairing());
        append(rep, verify_pairing(p, ctx.derived(), ctx.derived_pair()));
        append(rep, verify_pairing(p, ctx.printed(), ctx.printed_pairing()));
        const RFMatrix &a = ctx.printed_pairing().Q;
        const RFMatrix &b = ctx.derived_pair().Q;
        for (int i = 0; i < 4; ++i) {
            for (int j = i; j < 4; ++j) {
                bool ok = rf_equal(a[i][j], b[i][j]);
                rep.add(exact_check("Q[" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        "] printed = derived",
                                    ok,
                                    ok ? std::nullopt
                                       : std::optional(discrepancy("exact", to_string(a[i][j]), to_string(b[i][j])))));
            }
        }
    } else if (suite == "factorization") {
        rep = verify_factorization(p, ctx.deep_periods(), ctx.mirror(), ctx.forms(), K);
    } else if (suite == "inverse-mirror") {
        rep = verify_inverse_mirror(p, ctx.mirror(), ctx.forms(), K);
    } else if (suite == "frame") {
        rep = verify_frame_identities(p, ctx.frame(), ctx.derived_pair(), ctx.forms(), K);
    } else if (suite == "modular-vector-field") {
        auto A = transformed_connection(ctx.frame(), ctx.derived(), ctx.mirror());
        rep = verify_modular_vector_field(p, ctx.frame(), ctx.mirror(), A, K);
        auto printed = modular_matrices(p);
        for (int a = 0; a < 2; ++a) {
            Check c;
            c.name = "A_R" + std::to_string(a + 1) + " = modular matrix of the Lie algebra layer";
            c.status = Status::Pass;
            c.max_order_checked = K;
            for (int i = 0; i < 4 && c.status == Status::Pass; ++i) {
                for (int j = 0; j < 4 && c.status == Status::Pass; ++j) {
                    BiSeries want = BiSeries::constant(printed[a][i][j], K, K);
                    if (auto mm = first_mismatch(A[a][i][j], want, K, K)) {
                        c.status = Status::Fail;
                        c.first_discrepancy = discrepancy(*mm);
                        c.first_discrepancy->monomial = "entry [" + std::to_string(i + 1) + "," +
                                                        std::to_string(j + 1) + "] q^(" +
                                                        c.first_discrepancy->monomial + ")";
                    }
                }
            }
            rep.add(c);
        }
    } else if (suite == "lie") {
        rep = verify_lie(p);
    } else if (suite == "group") {
        rep = verify_group_displays(p);
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    rep.model = p.name;
    rep.suite = suite;
    return rep;
}

} // namespace

void RunConfig::validate() const
{
    if (K < 2) {
        throw std::invalid_argument("order K must be at least 2");
    }
    if (qmax < 2 * K) {
        throw std::invalid_argument("qorder must be at least 2K (" + std::to_string(2 * K) + ")");
    }
    selected_models(model);
    if (suite != "all" && !is_suite(suite)) {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    if (format != "json" && format != "text") {
        throw std::invalid_argument("unknown format: " + format);
    }
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{
        "ramanujan",     "jfunction",      "picard-fuchs", "flatness",
        "yukawa",        "pairing",        "factorization", "inverse-mirror",
        "frame",         "modular-vector-field", "lie",     "group",
    };
    return names;
}

bool is_suite(const std::string &name)
{
    const auto &n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<Model> selected_models(const std::string &model)
{
    if (model == "all") {
        return all_models();
    }
    return {parse_model(model)};
}

VerificationReport run_suite(Model m, const std::string &suite, int K, int qmax)
{
    Context ctx(m, K, qmax);
    return run_in(ctx, suite);
}

std::vector<VerificationReport> run(const RunConfig &cfg)
{
    cfg.validate();
    std::vector<std::string> suites = cfg.suite == "all" ? suite_names() : std::vector<std::string>{cfg.suite};
    std::vector<Model> models = selected_models(cfg.model);

    std::vector<std::future<std::vector<VerificationReport>>> jobs;
    for (Model m : models) {
        jobs.push_back(std::async(std::launch::async, [m, &suites, &cfg] {
            Context ctx(m, cfg.K, cfg.qmax);
            std::vector<VerificationReport> out;
            for (const auto &s : suites) {
                out.push_back(run_in(ctx, s));
            }
            return out;
        }));
    }
    std::vector<VerificationReport> all;
    for (auto &j : jobs) {
        for (auto &r : j.get()) {
            all.push_back(std::move(r));
        }
    }
    std::stable_sort(all.begin(), all.end(), [](const VerificationReport &a, const VerificationReport &b) {
        return std::tie(a.model, a.suite) < std::tie(b.model, b.suite);
    });
    for (auto &r : all) {
        std::stable_sort(r.checks.begin(), r.checks.end(),
                         [](const Check &a, const Check &b) { return a.name < b.name; });
    }
    return all;
}

} // namespace k3gm
