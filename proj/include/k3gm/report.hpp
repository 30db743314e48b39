#pragma once

#include "k3gm/biseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3gm {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

struct Discrepancy {
    std::string monomial;
    std::string lhs;
    std::string rhs;
};

struct Check {
    std::string name;
    Status status = Status::Skipped;
    // Highest order compared; -1 for exact (untruncated) identities.
    int max_order_checked = -1;
    std::optional<std::string> convention;
    std::optional<Discrepancy> first_discrepancy;
    std::optional<std::string> note;
};

struct VerificationReport {
    std::string model;
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    void add(Check c) { checks.push_back(std::move(c)); }
    const Check *find(const std::string &name) const;
};

Discrepancy discrepancy(const Mismatch &m);
Discrepancy discrepancy(const std::string &where, const std::string &lhs, const std::string &rhs);

// Series comparison packaged as a check.
Check compare_series(const std::string &name, const BiSeries &lhs, const BiSeries &rhs, int K1 = kExact,
                     int K2 = kExact);
Check exact_check(const std::string &name, bool ok, std::optional<Discrepancy> d = std::nullopt);

} // namespace k3gm
