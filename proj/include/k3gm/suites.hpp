#pragma once

#include "k3gm/model.hpp"
#include "k3gm/report.hpp"

#include <string>
#include <vector>

namespace k3gm {

struct RunConfig {
    std::string model = "all"; // e6 | e7 | e8 | all
    std::string suite = "all";
    int K = 10;
    int qmax = 30;
    std::string format = "json";
    std::string out; // empty: standard output

    // Throws std::invalid_argument on K < 2, qmax < 2K, unknown model, suite or format.
    void validate() const;
};

const std::vector<std::string> &suite_names();
bool is_suite(const std::string &name);
std::vector<Model> selected_models(const std::string &model);

VerificationReport run_suite(Model m, const std::string &suite, int K, int qmax);
// Every (model, suite) pair of the config, evaluated in parallel, ordered by (model, suite).
std::vector<VerificationReport> run(const RunConfig &cfg);

} // namespace k3gm
